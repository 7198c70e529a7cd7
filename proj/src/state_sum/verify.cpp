#include "state_sum/verify.hpp"

#include "graph/contraction.hpp"
#include "graph/surface.hpp"

namespace fukaya::statesum {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::SkipUnstable: return "skip-unstable";
  }
  return "fail";
}

Comparison verify_main(const graph::FramedGraph& g, const CoefficientObject& e) {
  Comparison c;
  c.side_a = invariant_homology(g, e);
  c.side_b = surface_homology(g, e);
  c.equal = c.side_a == c.side_b;
  c.stable = graph::surface_invariants(g).stable();
  c.verdict = c.equal ? Verdict::Pass : (c.stable ? Verdict::Fail : Verdict::SkipUnstable);
  return c;
}

Comparison verify_contract(const graph::FramedGraph& g, int e, const CoefficientObject& coeff) {
  Comparison c;
  c.side_a = invariant_homology(g, coeff);
  c.side_b = invariant_homology(graph::contract_edge(g, e), coeff);
  c.equal = c.side_a == c.side_b;
  c.stable = graph::surface_invariants(g).stable();
  c.verdict = c.equal ? Verdict::Pass : Verdict::Fail;
  return c;
}

}  // namespace fukaya::statesum
