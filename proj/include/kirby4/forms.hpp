#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kirby4/matrix.hpp"

namespace kirby4 {

enum class Parity { Even, Odd };
enum class Definiteness { Positive, Negative, Indefinite };

const char* parity_name(Parity p);
const char* definiteness_name(Definiteness d);

struct FormClass {
  std::size_t rank = 0;
  long signature = 0;
  Parity parity = Parity::Even;
  Definiteness definiteness = Definiteness::Positive;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

struct Diagonalization {
  IntMatrix p;     // integral, det(p) != 0
  SymIntMatrix d;  // p^T v p, diagonal
};

// Integral congruence to a diagonal form by simultaneous row and column
// pivoting. At a zero pivot a later row/column with a nonzero entry in the
// pivot row is added (or, when that still leaves a zero pivot, subtracted).
// Errors: NotUnimodular.
Diagonalization diagonalize_over_q(const SymIntMatrix& v);

// Signature and definiteness from the diagonalization, parity from the
// diagonal of v. The empty form counts as even and positive definite.
// Errors: NotUnimodular.
FormClass classify(const SymIntMatrix& v);

// A characteristic vector with entries 0 and 1, found over Z/2.
// Errors: NotUnimodular.
IntVector characteristic_vector(const SymIntMatrix& v);

// Same rank, signature and parity. Errors: NotIndefinite, NotUnimodular.
bool congruent_indefinite(const SymIntMatrix& v, const SymIntMatrix& w);

// ||v^-1||_1 * r, with ||.||_1 the largest column sum of absolute values.
// Errors: NotPositiveDefinite, NotUnimodular, MalformedInput (r < 1).
Integer definite_enumeration_bound(const SymIntMatrix& v, const Integer& r);

// All nonzero x with x^T v x <= r: representatives with first nonzero entry
// positive in lexicographic order, each followed by its negation.
// Errors: NotPositiveDefinite, NotUnimodular, ResourceLimit.
std::vector<IntVector> short_vectors(const SymIntMatrix& v, const Integer& r,
                                     std::optional<std::uint64_t> max_count = std::nullopt);

struct EnumerationLimits {
  // Largest admissible number of candidate columns; exceeded -> ResourceLimit.
  std::optional<std::uint64_t> max_candidates;
};

// For positive definite v and w: the first A (columns taken in the order of
// short_vectors) with A^T v A == w, or nothing. Different ranks give nothing.
// Errors: NotPositiveDefinite, NotUnimodular, ResourceLimit.
std::optional<IntMatrix> congruent_definite(const SymIntMatrix& v, const SymIntMatrix& w,
                                            const EnumerationLimits& limits = {});

struct CongruenceResult {
  bool congruent = false;
  std::optional<IntMatrix> witness;  // A with A^T v A == w, definite case only
};

// Errors: NotUnimodular, ResourceLimit.
CongruenceResult compare_forms(const SymIntMatrix& v, const SymIntMatrix& w,
                               const EnumerationLimits& limits = {});
bool congruent(const SymIntMatrix& v, const SymIntMatrix& w, const EnumerationLimits& limits = {});

struct SmithForm {
  IntMatrix u;  // m x m, unimodular
  IntMatrix d;  // m x n, diagonal, d_i | d_(i+1), d_i >= 0
  IntMatrix w;  // n x n, unimodular
  std::size_t rank = 0;
};

// u * a * w == d.
SmithForm smith_normal_form(const IntMatrix& a);

// Some integral x with a x == b, if there is one. Errors: DimensionMismatch.
std::optional<IntVector> smith_solve(const IntMatrix& a, const IntVector& b);

}  // namespace kirby4
