#include <algorithm>

#include "kirby4/error.hpp"
#include "kirby4/invariants.hpp"

namespace kirby4 {

SymIntMatrix intersection_form(const FramedLink& link) {
  SymIntMatrix v = linking_matrix(link);
  if (!is_unimodular(v)) {
    std::string what = link.name().empty() ? std::string("link") : "link " + link.name();
    throw Error(ErrorCode::NotUnimodular, "linking matrix of " + what + " is not unimodular (determinant " +
                                              determinant(v.matrix()).get_str() + ")");
  }
  return v;
}

ManifoldInvariants smooth_invariants(const FramedLink& link) {
  ManifoldInvariants inv;
  inv.form = intersection_form(link);
  inv.form_class = classify(inv.form);
  inv.signature = inv.form_class.signature;
  inv.characteristic = characteristic_vector(inv.form);
  inv.characteristic_square = inv.form.bilinear(inv.characteristic, inv.characteristic);
  inv.smooth_assumed = true;
  return inv;
}

ManifoldInvariants kirby_siebenmann(const FramedLink& link, const BandOptions& bands) {
  ManifoldInvariants inv = smooth_invariants(link);
  inv.smooth_assumed = false;

  std::vector<int> c;
  for (const auto& e : inv.characteristic) c.push_back(e == 0 ? 0 : 1);
  std::vector<std::size_t> kept;
  const FramedLink sub = characteristic_sublink(link, c, &kept);
  BandOptions sub_bands;
  sub_bands.arc_rank = bands.arc_rank;
  if (!bands.order.empty()) {
    if (bands.order.size() != link.component_count()) {
      throw Error(ErrorCode::LengthMismatch, "band order must list every component of the link");
    }
    std::vector<std::size_t> rank(link.component_count(), link.component_count());
    for (std::size_t i = 0; i < bands.order.size(); ++i)
      if (bands.order[i] < rank.size()) rank[bands.order[i]] = i;
    for (std::size_t i = 0; i < kept.size(); ++i) sub_bands.order.push_back(i);
    std::sort(sub_bands.order.begin(), sub_bands.order.end(),
              [&](std::size_t a, std::size_t b) { return rank[kept[a]] < rank[kept[b]]; });
    std::vector<std::size_t> sorted = bands.order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw Error(ErrorCode::MalformedInput, "band order is not a permutation");
  }
  const KnotDiagram k = band_sum(sub, sub_bands);
  inv.knot_crossings = k.crossing_count();
  inv.knot_determinant = alexander_at_minus_one(k);
  inv.arf = arf_invariant(k);

  const Integer excess = inv.characteristic_square - inv.signature;
  if (!mpz_divisible_ui_p(excess.get_mpz_t(), 8)) {
    throw Error(ErrorCode::InternalInvariantViolation,
                "c^T V c - signature = " + excess.get_str() + " is not divisible by 8");
  }
  Integer eighth;
  mpz_divexact_ui(eighth.get_mpz_t(), excess.get_mpz_t(), 8);
  inv.ks = static_cast<int>(mpz_fdiv_ui(Integer(eighth + *inv.arf).get_mpz_t(), 2));
  return inv;
}

}  // namespace kirby4
