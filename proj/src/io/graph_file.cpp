#include "io/graph_file.hpp"

#include "error.hpp"

#include <json.hpp>

#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

namespace fukaya::io {

using nlohmann::json;

namespace {

// Input iterator over a buffer that publishes how far the parser has read.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, std::size_t* read) : p_(p), read_(read) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    if (read_) ++*read_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_ = nullptr;
  std::size_t* read_ = nullptr;
};

std::size_t line_at(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Builds the DOM and remembers the line of every value by JSON pointer.
class LocatingHandler {
 public:
  LocatingHandler(json& root, const std::string& text, const std::size_t& read)
      : dom_(root, true), text_(text), read_(read) {}

  bool null() { return value(dom_.null()); }
  bool boolean(bool v) { return value(dom_.boolean(v)); }
  bool number_integer(json::number_integer_t v) { return value(dom_.number_integer(v)); }
  bool number_unsigned(json::number_unsigned_t v) { return value(dom_.number_unsigned(v)); }
  bool number_float(json::number_float_t v, const std::string& s) { return value(dom_.number_float(v, s)); }
  bool string(std::string& v) { return value(dom_.string(v)); }
  bool binary(json::binary_t& v) { return value(dom_.binary(v)); }
  bool start_object(std::size_t n) {
    mark();
    stack_.push_back({false, 0, {}});
    return dom_.start_object(n);
  }
  bool key(std::string& k) {
    stack_.back().key = k;
    lines_[path()] = line_at(text_, read_);
    return dom_.key(k);
  }
  bool end_object() {
    stack_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    mark();
    stack_.push_back({true, 0, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    stack_.pop_back();
    advance();
    return dom_.end_array();
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) {
    std::string msg = ex.what();
    if (auto at = msg.find("parse error"); at != std::string::npos) msg = msg.substr(at);
    fail(ErrorCode::InvalidInput, "line " + std::to_string(line_at(text_, position)) + ": malformed JSON (" + msg + ")");
  }

  std::map<std::string, std::size_t> take_lines() { return std::move(lines_); }

 private:
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
  };

  std::string path() const {
    std::string p;
    for (const auto& f : stack_) p += "/" + (f.array ? std::to_string(f.index) : f.key);
    return p;
  }
  void mark() {
    if (!lines_.count(path())) lines_[path()] = line_at(text_, read_);
  }
  void advance() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }
  bool value(bool ok) {
    mark();
    advance();
    return ok;
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  const std::string& text_;
  const std::size_t& read_;
  std::vector<Frame> stack_;
  std::map<std::string, std::size_t> lines_;
};

class Located {
 public:
  explicit Located(const std::string& text) : text_(text) {
    std::size_t read = 0;
    LocatingHandler handler(root_, text_, read);
    CountingIterator first(text_.data(), &read), last(text_.data() + text_.size(), nullptr);
    json::sax_parse(first, last, &handler);
    lines_ = handler.take_lines();
  }

  const json& root() const { return root_; }

  // Line of the value at `path`, falling back to its closest recorded parent.
  std::size_t line(std::string path) const {
    for (;;) {
      if (auto it = lines_.find(path); it != lines_.end()) return it->second;
      if (path.empty()) return 1;
      path.erase(path.rfind('/'));
    }
  }

  [[noreturn]] void error(ErrorCode code, const std::string& path, const std::string& what) const {
    fail(code, "line " + std::to_string(line(path)) + ": " + what);
  }

 private:
  const std::string& text_;
  json root_;
  std::map<std::string, std::size_t> lines_;
};

std::string str_at(const Located& doc, const json& v, const std::string& path, const std::string& what) {
  if (!v.is_string()) doc.error(ErrorCode::InvalidInput, path, what + " must be a string");
  const auto s = v.get<std::string>();
  if (s.empty()) doc.error(ErrorCode::InvalidInput, path, what + " must not be empty");
  return s;
}

void only_keys(const Located& doc, const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) doc.error(ErrorCode::InvalidInput, path + "/" + k, "unknown field '" + k + "'");
}

}  // namespace

graph::GraphSpec parse_graph_spec(const std::string& text) {
  const Located doc(text);
  const json& root = doc.root();
  if (!root.is_object()) doc.error(ErrorCode::InvalidInput, "", "graph document must be a JSON object");
  only_keys(doc, root, "", {"name", "vertices", "edges", "framing"});
  for (const char* required : {"name", "vertices", "edges"})
    if (!root.contains(required)) doc.error(ErrorCode::InvalidInput, "", std::string("missing field '") + required + "'");

  graph::GraphSpec spec;
  spec.name = str_at(doc, root["name"], "/name", "name");

  const json& vertices = root["vertices"];
  if (!vertices.is_array()) doc.error(ErrorCode::InvalidInput, "/vertices", "'vertices' must be an array");
  std::set<std::string> vertex_ids, halfedges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "/vertices/" + std::to_string(i);
    const json& v = vertices[i];
    if (!v.is_object()) doc.error(ErrorCode::InvalidInput, path, "vertex must be an object");
    only_keys(doc, v, path, {"id", "halfedges"});
    if (!v.contains("id") || !v.contains("halfedges"))
      doc.error(ErrorCode::InvalidInput, path, "vertex needs 'id' and 'halfedges'");
    graph::GraphSpec::VertexSpec vs;
    vs.id = str_at(doc, v["id"], path + "/id", "vertex id");
    if (!vertex_ids.insert(vs.id).second)
      doc.error(ErrorCode::InvalidGraph, path + "/id", "duplicate vertex id '" + vs.id + "'");
    const json& hs = v["halfedges"];
    if (!hs.is_array()) doc.error(ErrorCode::InvalidInput, path + "/halfedges", "'halfedges' must be an array");
    if (hs.empty()) doc.error(ErrorCode::InvalidGraph, path + "/halfedges", "vertex '" + vs.id + "' has valency 0");
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const std::string hp = path + "/halfedges/" + std::to_string(k);
      const auto h = str_at(doc, hs[k], hp, "half-edge id");
      if (!halfedges.insert(h).second)
        doc.error(ErrorCode::InvalidGraph, hp, "half-edge '" + h + "' appears more than once in the vertex lists");
      vs.halfedges.push_back(h);
    }
    spec.vertices.push_back(std::move(vs));
  }

  const json& edges = root["edges"];
  if (!edges.is_array()) doc.error(ErrorCode::InvalidInput, "/edges", "'edges' must be an array");
  std::set<std::string> paired;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2) doc.error(ErrorCode::InvalidInput, path, "edge must be a pair of half-edge ids");
    std::string ends[2];
    for (std::size_t k = 0; k < 2; ++k) {
      const std::string hp = path + "/" + std::to_string(k);
      ends[k] = str_at(doc, e[k], hp, "half-edge id");
      if (!halfedges.count(ends[k]))
        doc.error(ErrorCode::InvalidGraph, hp, "edge refers to unknown half-edge '" + ends[k] + "'");
      if (!paired.insert(ends[k]).second)
        doc.error(ErrorCode::InvalidGraph, hp, "half-edge '" + ends[k] + "' is paired more than once");
    }
    spec.edges.emplace_back(ends[0], ends[1]);
  }

  if (root.contains("framing")) {
    const json& framing = root["framing"];
    if (!framing.is_object()) doc.error(ErrorCode::InvalidInput, "/framing", "'framing' must be an object");
    for (const auto& [h, off] : framing.items()) {
      const std::string path = "/framing/" + h;
      if (!halfedges.count(h)) doc.error(ErrorCode::InvalidGraph, path, "framing refers to unknown half-edge '" + h + "'");
      if (!off.is_number_integer()) doc.error(ErrorCode::InvalidInput, path, "framing offset must be an integer");
      const auto o = off.get<long long>();
      if (o % 2 != 0) doc.error(ErrorCode::InvalidGraph, path, "framing offset of '" + h + "' must be even");
      if (o != 0) spec.framing[h] = o;
    }
  }
  return graph::normalize_rotations(spec);
}

graph::FramedGraph parse_graph(const std::string& text) { return graph::FramedGraph::build(parse_graph_spec(text)); }

graph::FramedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, path + ": read error");
  try {
    return parse_graph(buf.str());
  } catch (const Error& e) {
    fail(e.code(), path + ":" + e.what());
  }
}

std::string serialize_graph(const graph::FramedGraph& g) {
  const graph::GraphSpec s = g.to_spec();
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["name"] = s.name;
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (const auto& v : s.vertices) vertices.push_back({{"id", v.id}, {"halfedges", v.halfedges}});
  doc["vertices"] = vertices;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : s.edges) edges.push_back({a, b});
  doc["edges"] = edges;
  nlohmann::ordered_json framing = nlohmann::ordered_json::object();
  for (const auto& [h, off] : s.framing)
    if (off != 0) framing[h] = off;
  if (!framing.empty()) doc["framing"] = framing;
  return doc.dump(2) + "\n";
}

}  // namespace fukaya::io
