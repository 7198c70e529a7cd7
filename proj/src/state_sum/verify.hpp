#pragma once

#include "state_sum/state_sum.hpp"

#include <string>

namespace fukaya::statesum {

enum class Verdict { Pass, Fail, SkipUnstable };

const char* verdict_name(Verdict v);

struct Comparison {
  algebra::HomologySummary side_a;
  algebra::HomologySummary side_b;
  bool equal = false;
  bool stable = true;
  Verdict verdict = Verdict::Fail;
};

/// State-sum homology against the CW oracle. Unstable graphs are still
/// compared; a mismatch on them is reported as skip-unstable.
Comparison verify_main(const graph::FramedGraph& g, const CoefficientObject& e);

/// Homology before and after contracting edge e.
Comparison verify_contract(const graph::FramedGraph& g, int e, const CoefficientObject& c);

}  // namespace fukaya::statesum
