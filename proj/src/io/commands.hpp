#pragma once

#include "exact_algebra/ring.hpp"
#include "graph/framed_graph.hpp"
#include "io/report.hpp"
#include "mf/matrix_factorization.hpp"

#include <string>
#include <vector>

namespace fukaya::io {

/// "z", "q" or "f<p>" for a prime p.
algebra::RingSpec parse_coefficients(const std::string& text);
/// "z" or "z2".
mf::Grading parse_grading(const std::string& text);
/// "i,j" or "i,j,l" / "i,j,r".
mf::ScalarMF parse_scalar(mf::Grading grading, int n, const std::string& text);
/// Comma-separated ids; empty items are rejected.
std::vector<std::string> split_ids(const std::string& text);

std::string info_text(const graph::FramedGraph& g);

/// "H0 = ..." and "H1 = ..." lines, or "HP_even" / "HP_odd" when periodic.
std::string homology_text(const graph::FramedGraph& g, const algebra::RingSpec& ring, bool periodic);

Report verify_main_report(const graph::FramedGraph& g, const algebra::RingSpec& ring);
Report verify_contract_report(const graph::FramedGraph& g, const std::string& edge, const algebra::RingSpec& ring);
Report verify_localize_report(const graph::FramedGraph& g, const std::vector<std::string>& vertices,
                              const algebra::RingSpec& ring);

/// Hom complex ranks and cohomology between two scalar factorizations.
std::string mf_hom_text(mf::Grading grading, int n, const mf::ScalarMF& source, const mf::ScalarMF& target,
                        std::int64_t field);

}  // namespace fukaya::io
