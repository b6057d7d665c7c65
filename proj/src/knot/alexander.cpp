#include <map>
#include <numeric>

#include "kirby4/error.hpp"
#include "kirby4/knot.hpp"

namespace kirby4 {

KnotDiagram::KnotDiagram() : knot_(FramedLink::from_pd(PDCode{{}, 1}, {0}, "unknot")) {}

KnotDiagram::KnotDiagram(FramedLink knot, std::vector<BandRecord> derivation)
    : knot_(std::move(knot)), derivation_(std::move(derivation)) {
  if (knot_.component_count() != 1) {
    throw Error(ErrorCode::NotAKnot,
                "expected one component, found " + std::to_string(knot_.component_count()));
  }
}

KnotDiagram mirror(const KnotDiagram& k) { return KnotDiagram(mirror(k.link()), k.derivation()); }

namespace {

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

// Fraction-free elimination; every division is exact in Z[t, 1/t].
IntPolynomial bareiss_determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  IntPolynomial prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  if (n == 0) return 1;
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

IntPolynomial alexander_polynomial(const KnotDiagram& k) {
  const auto& crossings = k.pd().crossings;
  const std::size_t n = crossings.size();
  if (n == 0) return 1;

  // Wirtinger generators: arcs glued through the over-passes.
  std::map<long, std::size_t> index;
  for (const auto& c : crossings)
    for (long label : c) index.emplace(label, index.size());
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : crossings) parent[find(index[c[1]])] = find(index[c[3]]);
  std::map<std::size_t, std::size_t> generator;
  for (const auto& [label, i] : index) generator.emplace(find(i), generator.size());
  if (generator.size() != n) {
    throw Error(ErrorCode::InternalInvariantViolation, "knot diagram has " + std::to_string(generator.size()) +
                                                           " over-arcs for " + std::to_string(n) + " crossings");
  }
  auto gen = [&](long label) { return generator.at(find(index.at(label))); };

  const IntPolynomial t = IntPolynomial::t();
  PolyMatrix fox(n, std::vector<IntPolynomial>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t in = gen(crossings[c][0]), over = gen(crossings[c][1]), out = gen(crossings[c][2]);
    if (k.link().sign_at(c) > 0) {
      fox[c][over] += 1 - t;
      fox[c][in] += t;
      fox[c][out] -= 1;
    } else {
      fox[c][over] += t - 1;
      fox[c][in] += 1;
      fox[c][out] -= t;
    }
  }
  fox.pop_back();
  for (auto& row : fox) row.pop_back();
  return bareiss_determinant(std::move(fox)).normalized();
}

Integer alexander_at_minus_one(const KnotDiagram& k) {
  return abs(alexander_polynomial(k).evaluate(Integer(-1)));
}

int arf_invariant(const KnotDiagram& k) {
  const Integer d = alexander_at_minus_one(k);
  const unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 8);
  if (r == 1 || r == 7) return 0;
  if (r == 3 || r == 5) return 1;
  throw Error(ErrorCode::InternalInvariantViolation, "knot determinant " + d.get_str() + " is even");
}

}  // namespace kirby4
