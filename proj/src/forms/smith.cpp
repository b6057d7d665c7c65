#include "kirby4/error.hpp"
#include "kirby4/forms.hpp"

namespace kirby4 {

namespace {

// Floor division keeping remainders in [0, |d|).
Integer div_floor(const Integer& a, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = s.d;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pr, pc)))) {
          found = true;
          pr = i;
          pc = j;
        }
    if (!found) break;
    d.swap_rows(t, pr);
    s.u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    s.w.swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = div_floor(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) {
          clean = false;
          d.swap_rows(t, i);
          s.u.swap_rows(t, i);
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = div_floor(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        s.w.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) {
          clean = false;
          d.swap_cols(t, j);
          s.w.swap_cols(t, j);
        }
      }
      if (!clean) continue;
      // Divisibility: fold in a row the pivot does not divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            s.u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) s.u(t, j) = -s.u(t, j);
    }
    s.rank = t + 1;
  }
  return s;
}

std::optional<IntVector> smith_solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has " + std::to_string(b.size()) +
                                                  " entries for " + std::to_string(a.rows()) + " rows");
  }
  const SmithForm s = smith_normal_form(a);
  const IntVector ub = s.u * b;
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.d(i, i).get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.w * y;
}

}  // namespace kirby4
