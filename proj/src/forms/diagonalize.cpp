#include "kirby4/diagram.hpp"
#include "kirby4/error.hpp"
#include "kirby4/forms.hpp"

namespace kirby4 {

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::Positive: return "positive";
    case Definiteness::Negative: return "negative";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

namespace {

void require_unimodular(const SymIntMatrix& v) {
  if (!is_unimodular(v)) {
    throw Error(ErrorCode::NotUnimodular,
                "form is not unimodular (determinant " + determinant(v.matrix()).get_str() + ")");
  }
}

// v <- q^T v q for q = I + s * E(k, i): column and row k added s times to i.
void add_to_pivot(IntMatrix& v, IntMatrix& p, std::size_t i, std::size_t k, int s) {
  v.add_col_multiple(i, k, s);
  v.add_row_multiple(i, k, s);
  p.add_col_multiple(i, k, s);
}

}  // namespace

Diagonalization diagonalize_over_q(const SymIntMatrix& form) {
  require_unimodular(form);
  const std::size_t m = form.size();
  IntMatrix v = form.matrix();
  IntMatrix p = IntMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (v(i, i) == 0) {
      std::size_t k = i + 1;
      while (k < m && v(i, k) == 0) ++k;
      if (k == m) throw Error(ErrorCode::InternalInvariantViolation, "singular block during diagonalization");
      // Adding gives v_kk + 2 v_ik; if that vanishes, subtracting cannot.
      add_to_pivot(v, p, i, k, v(k, k) + 2 * v(i, k) == 0 ? -1 : 1);
    }
    const Integer pivot = v(i, i);
    for (std::size_t k = i + 1; k < m; ++k) {
      const Integer f = v(i, k);
      if (f == 0) continue;
      // column k <- pivot * column k - f * column i, same on rows
      for (std::size_t r = 0; r < m; ++r) {
        v(r, k) = pivot * v(r, k) - f * v(r, i);
        p(r, k) = pivot * p(r, k) - f * p(r, i);
      }
      for (std::size_t c = 0; c < m; ++c) v(k, c) = pivot * v(k, c) - f * v(i, c);
    }
  }
  return {std::move(p), SymIntMatrix(std::move(v))};
}

FormClass classify(const SymIntMatrix& v) {
  const auto diag = diagonalize_over_q(v);
  FormClass fc;
  fc.rank = v.size();
  std::size_t pos = 0, neg = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    (diag.d(i, i) > 0 ? pos : neg) += 1;
    if (mpz_odd_p(v(i, i).get_mpz_t())) fc.parity = Parity::Odd;
  }
  fc.signature = static_cast<long>(pos) - static_cast<long>(neg);
  fc.definiteness = neg == 0 ? Definiteness::Positive : pos == 0 ? Definiteness::Negative : Definiteness::Indefinite;
  return fc;
}

IntVector characteristic_vector(const SymIntMatrix& form) {
  require_unimodular(form);
  const std::size_t m = form.size();
  std::vector<std::vector<char>> u(m, std::vector<char>(m)), p(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i) {
    p[i][i] = 1;
    for (std::size_t j = 0; j < m; ++j) u[i][j] = mpz_odd_p(form(i, j).get_mpz_t()) ? 1 : 0;
  }
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    std::swap(u[a], u[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
    for (auto& row : p) std::swap(row[a], row[b]);
  };
  auto add_basis = [&](std::size_t dst, std::size_t src) {  // e_dst += e_src
    for (std::size_t r = 0; r < m; ++r) u[r][dst] ^= u[r][src];
    for (std::size_t c = 0; c < m; ++c) u[dst][c] ^= u[src][c];
    for (std::size_t r = 0; r < m; ++r) p[r][dst] ^= p[r][src];
  };
  std::size_t ones = 0;
  for (;; ++ones) {
    std::size_t j = ones;
    while (j < m && !u[j][j]) ++j;
    if (j == m) break;
    swap_basis(ones, j);
    for (std::size_t k = ones + 1; k < m; ++k)
      if (u[ones][k]) add_basis(k, ones);
  }
  IntVector c(m, Integer(0));
  for (std::size_t r = 0; r < m; ++r) {
    int bit = 0;
    for (std::size_t k = 0; k < ones; ++k) bit ^= p[r][k];
    c[r] = bit;
  }
  return c;
}

}  // namespace kirby4
