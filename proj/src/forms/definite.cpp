#include <algorithm>
#include <map>

#include "kirby4/diagram.hpp"
#include "kirby4/error.hpp"
#include "kirby4/forms.hpp"

namespace kirby4 {

namespace {

void require_positive_definite(const SymIntMatrix& v) {
  if (classify(v).definiteness != Definiteness::Positive || v.size() == 0) {
    throw Error(ErrorCode::NotPositiveDefinite, "form is not positive definite");
  }
}

Integer floor_sqrt(const Rational& r) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  return s;
}

// Lexicographic comparison of integer vectors.
bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Checks every vector against the Euclidean bound derived from ||v^-1||_1.
void check_ball(const std::vector<IntVector>& xs, const Integer& bound) {
  const Integer b2 = bound * bound;
  for (const auto& x : xs) {
    Integer n2 = 0;
    for (const auto& e : x) n2 += e * e;
    if (n2 > b2) throw Error(ErrorCode::InternalInvariantViolation, "short vector outside the norm ball");
  }
}

// Fincke-Pohst enumeration of x != 0 with x^T v x <= r, using the exact
// rational square completion q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
std::vector<IntVector> enumerate(const SymIntMatrix& v, const Integer& r,
                                 std::optional<std::uint64_t> max_count) {
  const std::size_t m = v.size();
  std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) q[i][j] = v(i, j);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < m; ++k)
      for (std::size_t l = k; l < m; ++l) q[k][l] -= q[k][i] * q[i][l];
  }

  std::vector<IntVector> out;
  IntVector x(m, Integer(0));
  std::vector<Rational> budget(m + 1), centre(m);
  budget[m] = r;
  // Coordinates are fixed from the last one down.
  std::vector<Integer> hi(m);
  auto open = [&](std::size_t i) {
    Rational c = 0;
    for (std::size_t j = i + 1; j < m; ++j) c -= q[i][j] * x[j];
    centre[i] = c;
    const Integer s = floor_sqrt(budget[i + 1] / q[i][i]);
    Integer lo;
    mpz_fdiv_q(lo.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    x[i] = lo - s - 1;
    hi[i] = lo + s + 2;
  };
  auto fits = [&](std::size_t i) {
    const Rational d = x[i] - centre[i];
    budget[i] = budget[i + 1] - q[i][i] * d * d;
    return budget[i] >= 0;
  };
  if (m == 0) return out;
  std::size_t i = m - 1;
  open(i);
  for (;;) {
    if (x[i] > hi[i]) {
      if (i == m - 1) break;
      ++i;
      ++x[i];
      continue;
    }
    if (!fits(i)) {
      ++x[i];
      continue;
    }
    if (i > 0) {
      --i;
      open(i);
      continue;
    }
    bool zero = true;
    for (const auto& e : x) zero = zero && e == 0;
    if (!zero) {
      out.push_back(x);
      if (max_count && out.size() > *max_count) {
        throw Error(ErrorCode::ResourceLimit,
                    "more than " + std::to_string(*max_count) + " candidate vectors (KIRBY4_MAX_ENUM)");
      }
    }
    ++x[i];
  }

  std::vector<IntVector> reps;
  for (auto& y : out) {
    auto nz = std::find_if(y.begin(), y.end(), [](const Integer& e) { return e != 0; });
    if (*nz > 0) reps.push_back(std::move(y));
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  std::vector<IntVector> ordered;
  ordered.reserve(2 * reps.size());
  for (auto& y : reps) {
    IntVector neg(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) neg[k] = -y[k];
    ordered.push_back(std::move(y));
    ordered.push_back(std::move(neg));
  }
  return ordered;
}

std::map<Integer, std::size_t> norm_counts(const SymIntMatrix& v, const std::vector<IntVector>& xs) {
  std::map<Integer, std::size_t> counts;
  for (const auto& x : xs) ++counts[v.bilinear(x, x)];
  return counts;
}

}  // namespace

Integer definite_enumeration_bound(const SymIntMatrix& v, const Integer& r) {
  if (r < 1) throw Error(ErrorCode::MalformedInput, "norm bound must be at least 1");
  if (!is_unimodular(v)) throw Error(ErrorCode::NotUnimodular, "form is not unimodular");
  require_positive_definite(v);
  const IntMatrix inv = unimodular_inverse(v.matrix());
  Integer best = 0;
  for (std::size_t j = 0; j < inv.cols(); ++j) {
    Integer col = 0;
    for (std::size_t i = 0; i < inv.rows(); ++i) col += abs(inv(i, j));
    if (col > best) best = col;
  }
  return best * r;
}

std::vector<IntVector> short_vectors(const SymIntMatrix& v, const Integer& r, std::optional<std::uint64_t> max_count) {
  const Integer bound = definite_enumeration_bound(v, r);
  auto xs = enumerate(v, r, max_count);
  check_ball(xs, bound);
  return xs;
}

std::optional<IntMatrix> congruent_definite(const SymIntMatrix& v, const SymIntMatrix& w,
                                            const EnumerationLimits& limits) {
  for (const auto* f : {&v, &w})
    if (!is_unimodular(*f)) throw Error(ErrorCode::NotUnimodular, "form is not unimodular");
  require_positive_definite(v);
  require_positive_definite(w);
  const std::size_t m = v.size();
  if (w.size() != m) return std::nullopt;

  Integer r = 0;
  for (std::size_t i = 0; i < m; ++i) r = std::max(r, w(i, i));
  const auto cand = short_vectors(v, r, limits.max_candidates);

  // Cheap necessary conditions: parity and the number of vectors of each norm.
  if (classify(v).parity != classify(w).parity) return std::nullopt;
  if (norm_counts(v, cand) != norm_counts(w, short_vectors(w, r, limits.max_candidates))) return std::nullopt;

  // Small integers from here on.
  const std::size_t nc = cand.size();
  std::vector<std::vector<std::int64_t>> x(nc), vx(nc);
  std::vector<std::int64_t> norm(nc);
  for (std::size_t a = 0; a < nc; ++a) {
    const IntVector image = v.matrix() * cand[a];
    for (std::size_t k = 0; k < m; ++k) {
      x[a].push_back(to_int64(cand[a][k]));
      vx[a].push_back(to_int64(image[k]));
    }
    norm[a] = to_int64(v.bilinear(cand[a], cand[a]));
  }
  std::vector<std::vector<std::int64_t>> target(m, std::vector<std::int64_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) target[i][j] = to_int64(w(i, j));
  std::vector<std::vector<std::size_t>> by_column(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t a = 0; a < nc; ++a)
      if (norm[a] == target[j][j]) by_column[j].push_back(a);

  std::vector<std::size_t> chosen(m), next(m, 0);
  auto compatible = [&](std::size_t j, std::size_t a) {
    for (std::size_t i = 0; i < j; ++i) {
      std::int64_t dot = 0;
      for (std::size_t k = 0; k < m; ++k) dot += x[chosen[i]][k] * vx[a][k];
      if (dot != target[i][j]) return false;
    }
    return true;
  };
  std::size_t j = 0;
  for (;;) {
    bool placed = false;
    while (next[j] < by_column[j].size()) {
      const std::size_t a = by_column[j][next[j]++];
      if (compatible(j, a)) {
        chosen[j] = a;
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (j == 0) return std::nullopt;
      next[j] = 0;
      --j;
      continue;
    }
    if (j + 1 < m) {
      ++j;
      continue;
    }
    IntMatrix a(m, m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t k = 0; k < m; ++k) a(k, c) = cand[chosen[c]][k];
    const Integer det = determinant(a);
    if (v.congruent_by(a) != w || (det != 1 && det != -1)) {
      throw Error(ErrorCode::InternalInvariantViolation, "assembled isometry fails verification");
    }
    return a;
  }
}

}  // namespace kirby4
