#pragma once

#include <string>
#include <string_view>

#include "kirby4/classify.hpp"
#include "kirby4/forms.hpp"
#include "kirby4/invariants.hpp"
#include "kirby4/knot.hpp"
#include "kirby4/matrix.hpp"

namespace kirby4 {

// Reads {"n": k, "entries": [[...], ...]}; "n" may be left out. Entries are
// JSON integers or decimal strings. Errors: MalformedInput, NotSymmetric.
SymIntMatrix parse_matrix(std::string_view text);

// Canonical JSON throughout: sorted keys, no whitespace, no floats. Integers
// beyond 62 bits are written as decimal strings.
std::string to_json(const SymIntMatrix& v);
std::string to_json(const FormClass& f);
std::string to_json(const ManifoldInvariants& m);
std::string to_json(const Verdict& v);
std::string characteristic_json(const IntVector& c);
std::string congruence_json(const CongruenceResult& r, const FormClass& left, const FormClass& right);
// Alexander coefficients from t^0 upwards, determinant, Arf, crossing count.
std::string knot_json(const KnotDiagram& k);

}  // namespace kirby4
