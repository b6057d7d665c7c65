#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace kirby4 {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool fits_int64(const Integer& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 62;
}

// Throws Error(ResourceLimit) when v does not fit in 62 bits.
std::int64_t to_int64(const Integer& v);

inline int sign(const Integer& v) { return sgn(v); }

}  // namespace kirby4
