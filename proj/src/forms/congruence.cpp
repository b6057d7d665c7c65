#include "kirby4/diagram.hpp"
#include "kirby4/error.hpp"
#include "kirby4/forms.hpp"

namespace kirby4 {

bool congruent_indefinite(const SymIntMatrix& v, const SymIntMatrix& w) {
  const FormClass a = classify(v), b = classify(w);
  if (a.definiteness != Definiteness::Indefinite || b.definiteness != Definiteness::Indefinite) {
    throw Error(ErrorCode::NotIndefinite, "congruent_indefinite needs two indefinite forms");
  }
  return a.rank == b.rank && a.signature == b.signature && a.parity == b.parity;
}

CongruenceResult compare_forms(const SymIntMatrix& v, const SymIntMatrix& w, const EnumerationLimits& limits) {
  for (const auto* f : {&v, &w})
    if (!is_unimodular(*f)) {
      throw Error(ErrorCode::NotUnimodular,
                  "form is not unimodular (determinant " + determinant(f->matrix()).get_str() + ")");
    }
  CongruenceResult out;
  if (v.size() != w.size()) return out;
  if (v.size() == 0) {
    out.congruent = true;
    out.witness = IntMatrix();
    return out;
  }
  const FormClass a = classify(v), b = classify(w);
  if (a.definiteness != b.definiteness) return out;
  switch (a.definiteness) {
    case Definiteness::Indefinite:
      out.congruent = congruent_indefinite(v, w);
      break;
    case Definiteness::Positive:
      out.witness = congruent_definite(v, w, limits);
      out.congruent = out.witness.has_value();
      break;
    case Definiteness::Negative:
      out.witness = congruent_definite(-v, -w, limits);
      out.congruent = out.witness.has_value();
      break;
  }
  return out;
}

bool congruent(const SymIntMatrix& v, const SymIntMatrix& w, const EnumerationLimits& limits) {
  return compare_forms(v, w, limits).congruent;
}

}  // namespace kirby4
