#include "kirby4/classify.hpp"

namespace kirby4 {

const char* reason_name(VerdictReason r) {
  switch (r) {
    case VerdictReason::FormsNotCongruent: return "FormsNotCongruent";
    case VerdictReason::KsDiffer: return "KsDiffer";
    case VerdictReason::Match: return "Match";
    case VerdictReason::MatchAfterReversal: return "MatchAfterReversal";
  }
  return "?";
}

namespace {

ManifoldInvariants invariants(const FramedLink& link, bool smooth) {
  return smooth ? smooth_invariants(link) : kirby_siebenmann(link);
}

// Under the smoothness assumption a definite form is diagonal, so rank,
// signature and parity decide.
CongruenceResult compare(const ManifoldInvariants& a, const ManifoldInvariants& b, const DecisionOptions& opt) {
  if (opt.smooth && a.form_class.definiteness != Definiteness::Indefinite &&
      b.form_class.definiteness != Definiteness::Indefinite) {
    return {a.form_class == b.form_class, std::nullopt};
  }
  return compare_forms(a.form, b.form, opt.limits);
}

Verdict decide(ManifoldInvariants left, ManifoldInvariants right, const DecisionOptions& opt) {
  Verdict v;
  v.smooth = opt.smooth;
  v.left = std::move(left);
  v.right = std::move(right);
  if (!opt.smooth && v.left.ks != v.right.ks) {
    v.reason = VerdictReason::KsDiffer;
    return v;
  }
  CongruenceResult c = compare(v.left, v.right, opt);
  v.homeomorphic = c.congruent;
  v.congruence_witness = std::move(c.witness);
  v.reason = c.congruent ? VerdictReason::Match : VerdictReason::FormsNotCongruent;
  return v;
}

}  // namespace

Verdict homeomorphic_oriented(const FramedLink& a, const FramedLink& b, const DecisionOptions& options) {
  return decide(invariants(a, options.smooth), invariants(b, options.smooth), options);
}

Verdict homeomorphic_unoriented(const FramedLink& a, const FramedLink& b, const DecisionOptions& options) {
  ManifoldInvariants left = invariants(a, options.smooth);
  Verdict first = decide(left, invariants(b, options.smooth), options);
  first.oriented = false;
  if (first.homeomorphic) return first;
  Verdict second = decide(std::move(left), invariants(mirror(b), options.smooth), options);
  if (!second.homeomorphic) return first;
  second.oriented = false;
  second.reason = VerdictReason::MatchAfterReversal;
  return second;
}

}  // namespace kirby4
