#pragma once

#include <optional>

#include "kirby4/invariants.hpp"

namespace kirby4 {

enum class VerdictReason { FormsNotCongruent, KsDiffer, Match, MatchAfterReversal };

const char* reason_name(VerdictReason r);

struct Verdict {
  bool homeomorphic = false;
  bool oriented = true;  // only orientation-preserving homeomorphisms were tried
  bool smooth = false;
  ManifoldInvariants left, right;  // right is the reversed manifold after MatchAfterReversal
  std::optional<IntMatrix> congruence_witness;
  VerdictReason reason = VerdictReason::FormsNotCongruent;
};

struct DecisionOptions {
  // Both manifolds are asserted smooth: ks is not computed, and definite
  // forms are compared by rank, signature and parity alone.
  bool smooth = false;
  EnumerationLimits limits;
};

// Errors: NotUnimodular (either link), ResourceLimit.
Verdict homeomorphic_oriented(const FramedLink& a, const FramedLink& b, const DecisionOptions& options = {});

// Tries b, then the mirror of b.
Verdict homeomorphic_unoriented(const FramedLink& a, const FramedLink& b, const DecisionOptions& options = {});

}  // namespace kirby4
