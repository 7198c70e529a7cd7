#include "io/commands.hpp"

#include "error.hpp"
#include "graph/surface.hpp"
#include "mf/hom_complex.hpp"
#include "state_sum/localization.hpp"
#include "state_sum/verify.hpp"

#include <charconv>
#include <sstream>

namespace fukaya::io {

namespace {

long long parse_int(const std::string& s, const std::string& what) {
  long long v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) fail(ErrorCode::InvalidInput, "bad " + what + " '" + s + "'");
  return v;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string join_ints(const std::vector<int>& items) {
  std::vector<std::string> s;
  for (int x : items) s.push_back(std::to_string(x));
  return join(s, ",");
}

}  // namespace

algebra::RingSpec parse_coefficients(const std::string& text) {
  if (text == "z") return algebra::RingSpec::integers();
  if (text == "q") return algebra::RingSpec::rationals();
  if (text.size() > 1 && text[0] == 'f') {
    long long p = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data() + 1, end, p);
    if (ec == std::errc() && ptr == end && algebra::is_prime(p)) return algebra::RingSpec::prime_field(p);
  }
  fail(ErrorCode::InvalidRing, "coefficients must be z, q or f<p> for a prime p, got '" + text + "'");
}

mf::Grading parse_grading(const std::string& text) {
  if (text == "z") return mf::Grading::Z;
  if (text == "z2") return mf::Grading::Z2;
  fail(ErrorCode::InvalidInput, "grading must be z or z2, got '" + text + "'");
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) fail(ErrorCode::InvalidInput, "empty item in list '" + text + "'");
    out.push_back(item);
  }
  if (!text.empty() && text.back() == ',') fail(ErrorCode::InvalidInput, "empty item in list '" + text + "'");
  return out;
}

mf::ScalarMF parse_scalar(mf::Grading grading, int n, const std::string& text) {
  // Also accept the printed form "[i,j]" or "[i,j]_l".
  std::string plain = text;
  if (!plain.empty() && plain.front() == '[') {
    const auto close = plain.find(']');
    if (close == std::string::npos) fail(ErrorCode::InvalidInput, "unbalanced bracket in '" + text + "'");
    std::string suffix = plain.substr(close + 1);
    plain = plain.substr(1, close - 1);
    if (suffix == "_l" || suffix == "_r")
      plain += "," + suffix.substr(1);
    else if (!suffix.empty())
      fail(ErrorCode::InvalidInput, "unexpected suffix '" + suffix + "' in '" + text + "'");
  }
  const auto parts = split_ids(plain);
  if (parts.size() < 2 || parts.size() > 3) fail(ErrorCode::InvalidInput, "object must be i,j or i,j,l|r");
  mf::Variant v = mf::Variant::None;
  if (parts.size() == 3) {
    if (parts[2] == "l")
      v = mf::Variant::L;
    else if (parts[2] == "r")
      v = mf::Variant::R;
    else
      fail(ErrorCode::InvalidInput, "variant must be l or r, got '" + parts[2] + "'");
  }
  return mf::ScalarMF::make(grading, n, parse_int(parts[0], "index"), parse_int(parts[1], "index"), v);
}

std::string info_text(const graph::FramedGraph& g) {
  const auto surf = graph::surface_invariants(g);
  std::ostringstream os;
  os << "name: " << g.name() << "\n";
  os << "vertices: " << g.vertex_count() << "\n";
  os << "edges: " << g.edge_count() << "\n";
  os << "legs: " << g.legs().size() << "\n";
  os << "components: " << surf.components.size() << "\n";
  for (std::size_t c = 0; c < surf.components.size(); ++c) {
    const auto& s = surf.components[c];
    std::vector<std::string> vs;
    for (int v : s.vertices) vs.push_back(g.vertex_id(v));
    os << "component " << c + 1 << ": vertices " << join(vs, ",") << "\n";
    os << "  genus " << s.genus << ", boundary circles " << s.boundary_circles << ", euler characteristic "
       << s.euler << "\n";
    os << "  marked points: interior " << s.interior_marked << ", boundary [" << join_ints(s.boundary_marked)
       << "]\n";
    os << "  " << (s.stable ? "stable" : "unstable") << "\n";
  }
  return os.str();
}

std::string homology_text(const graph::FramedGraph& g, const algebra::RingSpec& ring, bool periodic) {
  const auto h = statesum::invariant_homology(g, statesum::CoefficientObject::unit(ring, periodic));
  std::ostringstream os;
  if (periodic) {
    os << "HP_even = " << h.describe(0) << "\n";
    os << "HP_odd = " << h.describe(1) << "\n";
  } else {
    os << "H0 = " << h.describe(0) << "\n";
    os << "H1 = " << h.describe(1) << "\n";
  }
  return os.str();
}

Report verify_main_report(const graph::FramedGraph& g, const algebra::RingSpec& ring) {
  Report r;
  r.add(comparison_row(g.name(), "main " + ring.name(),
                       statesum::verify_main(g, statesum::CoefficientObject::unit(ring))));
  return r;
}

Report verify_contract_report(const graph::FramedGraph& g, const std::string& edge, const algebra::RingSpec& ring) {
  const auto e = g.find_edge(edge);
  if (!e) fail(ErrorCode::InvalidInput, "unknown edge '" + edge + "'");
  Report r;
  r.add(comparison_row(g.name(), "contract " + g.edge_id(*e),
                       statesum::verify_contract(g, *e, statesum::CoefficientObject::unit(ring))));
  return r;
}

Report verify_localize_report(const graph::FramedGraph& g, const std::vector<std::string>& vertices,
                              const algebra::RingSpec& ring) {
  const algebra::Ring rg(ring);
  const auto loc = statesum::localization_check(g, vertices, rg);
  const std::string tag = "localize {" + join(vertices, ",") + "}";
  Report r;
  r.add({g.name(), tag + " maps", loc.chain_maps ? "chain maps" : "not chain maps",
         loc.composite_zero ? "composite 0" : "composite nonzero",
         loc.chain_maps && loc.composite_zero ? statesum::Verdict::Pass : statesum::Verdict::Fail});
  r.add({g.name(), tag + " cone", pair_text(loc.cone_homology), pair_text(loc.retract_homology),
         loc.equal ? statesum::Verdict::Pass : statesum::Verdict::Fail});
  r.add({g.name(), tag + " quasi-iso", "cone -> retract", loc.induced_quasi_iso ? "acyclic cone" : "not acyclic",
         loc.induced_quasi_iso ? statesum::Verdict::Pass : statesum::Verdict::Fail});
  return r;
}

std::string mf_hom_text(mf::Grading grading, int n, const mf::ScalarMF& source, const mf::ScalarMF& target,
                        std::int64_t field) {
  const auto h = mf::hom_complex(mf::to_mf(source, field), mf::to_mf(target, field));
  const auto c = mf::cohomology_mf(h);
  const algebra::Ring ring(h.ring);
  std::ostringstream os;
  os << "Hom(" << source.to_string() << ", " << target.to_string() << "), n = " << n << ", "
     << (grading == mf::Grading::Z2 ? "Z/2" : "Z") << "-graded over " << ring.spec().name() << "\n";
  if (grading == mf::Grading::Z2) {
    for (int j : {0, 1}) os << "Hom^" << j << " rank " << h.ranks.at(j) << "\n";
    for (int j : {0, 1}) os << "H^" << j << " = " << c.groups.describe(j) << "\n";
    return os.str();
  }
  for (const auto& [j, r] : h.ranks)
    if (r > 0 || !c.groups.at(j).is_zero())
      os << "degree " << j << ": Hom rank " << r << ", H = " << c.groups.describe(j) << "\n";
  if (c.finite())
    os << "cohomology vanishes outside the listed degrees\n";
  else
    os << "above degree " << h.high << " the cohomology repeats with dimensions " << c.tail_even << " (even), "
       << c.tail_odd << " (odd)\n";
  return os.str();
}

}  // namespace fukaya::io
