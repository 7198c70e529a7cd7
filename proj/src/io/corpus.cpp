#include "io/corpus.hpp"

#include "error.hpp"
#include "graph/winding.hpp"
#include "io/commands.hpp"
#include "io/graph_file.hpp"
#include "state_sum/localization.hpp"
#include "state_sum/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <random>

namespace fukaya::io {

namespace fs = std::filesystem;
using statesum::Verdict;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

graph::GraphSpec random_offsets(graph::GraphSpec s, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> off(-3, 3);
  s.framing.clear();
  for (const auto& v : s.vertices)
    for (const auto& h : v.halfedges)
      if (const long long o = 2LL * off(rng); o != 0) s.framing[h] = o;
  return s;
}

std::vector<int> closed_walk(const graph::FramedGraph& g, std::mt19937_64& rng) {
  std::vector<int> internal;
  for (std::size_t h = 0; h < g.halfedge_count(); ++h)
    if (!g.is_leg(static_cast<int>(h))) internal.push_back(static_cast<int>(h));
  if (internal.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, internal.size() - 1);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<int> walk{internal[pick(rng)]};
    const int start = g.vertex_of(walk[0]);
    for (int step = 0; step < 10; ++step) {
      const int here = g.vertex_of(g.tau(walk.back()));
      if (here == start) return walk;
      std::vector<int> options;
      for (int h : g.halfedges_at(here))
        if (!g.is_leg(h)) options.push_back(h);
      std::uniform_int_distribution<std::size_t> o(0, options.size() - 1);
      walk.push_back(options[o(rng)]);
    }
  }
  return {};
}

void check_gauge(const graph::FramedGraph& g, std::mt19937_64& rng, Report& out) {
  const auto spec = g.to_spec();
  std::size_t walks = 0, agree = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto walk = closed_walk(g, rng);
    if (walk.empty()) continue;
    std::vector<std::string> ids;
    for (int h : walk) ids.push_back(g.halfedge_id(h));
    const long long w = graph::winding_number(g, walk);
    std::uniform_int_distribution<std::size_t> v(0, spec.vertices.size() - 1), r(0, 7);
    std::uniform_int_distribution<long long> turns(-3, 3);
    const auto gauged = graph::FramedGraph::build(graph::gauge_vertex(spec, v(rng), r(rng), turns(rng)));
    ++walks;
    if (graph::winding_number(gauged, ids) == w) ++agree;
  }
  out.add({g.name(), "winding gauge", std::to_string(agree) + "/" + std::to_string(walks) + " walks",
           "invariant", agree == walks ? Verdict::Pass : Verdict::Fail});
}

void check_round_trip(const graph::FramedGraph& g, Report& out) {
  const std::string once = serialize_graph(g);
  const std::string twice = serialize_graph(parse_graph(once));
  out.add({g.name(), "round trip", std::to_string(once.size()) + " bytes", once == twice ? "stable" : "changed",
           once == twice ? Verdict::Pass : Verdict::Fail});
}

// Turns an exception inside one check into a failing row.
template <typename F>
void guarded(const graph::FramedGraph& g, const std::string& check, Report& out, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    out.add({g.name(), check, "error", e.what(), Verdict::Fail});
  }
}

}  // namespace

Report graph_suite(const graph::FramedGraph& g) {
  Report out;
  const auto z = algebra::RingSpec::integers();
  std::mt19937_64 rng(fnv1a(g.name()));
  guarded(g, "main", out, [&] {
    out.append(verify_main_report(g, z));
    for (int k = 1; k <= 2; ++k) {
      const auto framed = graph::FramedGraph::build(random_offsets(g.to_spec(), rng));
      out.add(comparison_row(g.name(), "main framing#" + std::to_string(k),
                             statesum::verify_main(framed, statesum::CoefficientObject::unit(z))));
    }
    out.add(comparison_row(
        g.name(), "main periodic Q",
        statesum::verify_main(g, statesum::CoefficientObject::unit(algebra::RingSpec::rationals(), true))));
  });
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(static_cast<int>(e))) continue;
    const std::string check = "contract " + g.edge_id(static_cast<int>(e));
    try {
      out.append(verify_contract_report(g, g.edge_id(static_cast<int>(e)), z));
    } catch (const Error& err) {
      // Contracting the last edge of an unstable piece leaves nothing to compare.
      const bool degenerate = err.code() == ErrorCode::DegenerateResult;
      out.add({g.name(), check, "error", err.what(), degenerate ? Verdict::SkipUnstable : Verdict::Fail});
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    guarded(g, "localize", out, [&] { out.append(verify_localize_report(g, {g.vertex_id(static_cast<int>(v))}, z)); });
  guarded(g, "winding gauge", out, [&] { check_gauge(g, rng, out); });
  guarded(g, "round trip", out, [&] { check_round_trip(g, out); });
  return out;
}

Report corpus_verify(const std::string& dir, bool parallel) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) fail(ErrorCode::Io, dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  auto run_one = [](const fs::path& file) {
    try {
      return graph_suite(load_graph(file.string()));
    } catch (const Error& e) {
      Report r;
      r.add({file.filename().string(), "load", "error", e.what(), Verdict::Fail});
      return r;
    }
  };
  Report out;
  if (!parallel) {
    for (const auto& f : files) out.append(run_one(f));
    return out;
  }
  std::vector<std::future<Report>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, run_one, f));
  for (auto& j : jobs) out.append(j.get());
  return out;
}

}  // namespace fukaya::io
