#pragma once

#include <cstddef>
#include <vector>

#include "kirby4/diagram.hpp"
#include "kirby4/polynomial.hpp"

namespace kirby4 {

// One band attached while joining the components of a sublink into a knot.
// Component indices refer to the sublink that was banded; arcs are its labels.
struct BandRecord {
  std::size_t from_component = 0;  // a component already in the running knot
  std::size_t to_component = 0;
  long from_arc = 0;
  long to_arc = 0;
  std::size_t crossings_added = 0;
  bool half_twist = false;
  // The two components lie in disjoint parts of the diagram; the band is a
  // plain reconnection with no crossings.
  bool separate_pieces = false;
};

// A single-component diagram. Framings play no role here.
class KnotDiagram {
 public:
  // The crossingless unknot.
  KnotDiagram();
  // Errors: NotAKnot unless the link has exactly one component.
  explicit KnotDiagram(FramedLink knot, std::vector<BandRecord> derivation = {});

  const FramedLink& link() const noexcept { return knot_; }
  const PDCode& pd() const noexcept { return knot_.pd(); }
  std::size_t crossing_count() const noexcept { return knot_.crossing_count(); }
  const std::vector<BandRecord>& derivation() const noexcept { return derivation_; }

 private:
  FramedLink knot_;
  std::vector<BandRecord> derivation_;
};

KnotDiagram mirror(const KnotDiagram& k);

// Keeps the components with c_i = 1, drops every crossing that touches a
// removed component and relabels arcs consecutively. Kept components keep
// their relative order, except that components left without crossings move
// to the end as crossingless unknots. If kept_order is given it receives the
// original index of each component of the result.
// Errors: LengthMismatch, MalformedInput (entries outside {0,1}).
FramedLink characteristic_sublink(const FramedLink& link, const std::vector<int>& c,
                                  std::vector<std::size_t>* kept_order = nullptr);

struct BandOptions {
  // Order in which components are banded on; empty means 0, 1, 2, ...
  std::vector<std::size_t> order;
  // Which arc of the running knot the next band starts from, counted among
  // its original arcs in increasing label order (taken modulo their number).
  std::size_t arc_rank = 0;
};

// Joins all components into one knot by oriented bands that pass under every
// strand they meet. The empty link gives the crossingless unknot and a knot
// is returned unchanged.
// Errors: LengthMismatch / MalformedInput for a bad order.
KnotDiagram band_sum(const FramedLink& sub, const BandOptions& options = {});

// Alexander polynomial from the Wirtinger presentation by Fox calculus,
// normalized to lowest exponent 0 and positive constant term.
IntPolynomial alexander_polynomial(const KnotDiagram& k);

// |Delta(-1)|, the knot determinant.
Integer alexander_at_minus_one(const KnotDiagram& k);

// 0 or 1. Errors: InternalInvariantViolation for an even determinant.
int arf_invariant(const KnotDiagram& k);

}  // namespace kirby4
