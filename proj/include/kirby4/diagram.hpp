#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kirby4/integer.hpp"
#include "kirby4/matrix.hpp"

namespace kirby4 {

// Planar diagram code. Each crossing lists four arc labels counterclockwise,
// starting from the incoming under-strand; so tuple[0] -> tuple[2] is the
// under-strand and tuple[1], tuple[3] are the two halves of the over-strand.
// Crossingless unknot components carry no labels and are only counted.
struct PDCode {
  std::vector<std::array<long, 4>> crossings;
  std::size_t unknots = 0;

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

struct LinkComponent {
  // Arc labels in orientation order, starting at the smallest label. Empty
  // for a crossingless unknot.
  std::vector<long> arcs;

  bool crossingless() const noexcept { return arcs.empty(); }
};

// An ordered, oriented link diagram with one integer framing per component.
//
// Components with crossings come first, ordered by their smallest arc label;
// crossingless unknots follow. Orientation is read from the crossings: an
// under-strand always runs tuple[0] -> tuple[2], and that fixes the direction
// of every component that passes under somewhere. A component that only ever
// passes over is oriented by increasing labels (ties on one- and two-arc
// components are broken by entering the first occurrence of its smallest arc).
class FramedLink {
 public:
  FramedLink() = default;

  // Validates the code and derives components and orientations.
  // Errors: InvalidPD, FramingCountMismatch.
  static FramedLink from_pd(PDCode pd, std::vector<Integer> framings, std::string name = {});

  const PDCode& pd() const noexcept { return pd_; }
  const std::vector<LinkComponent>& components() const noexcept { return components_; }
  const std::vector<Integer>& framings() const noexcept { return framings_; }
  const std::string& name() const noexcept { return name_; }

  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept { return pd_.crossings.size(); }

  // +1 or -1, for a crossing index known to be valid.
  int sign_at(std::size_t crossing) const { return signs_[crossing]; }
  // Position (1 or 3) at which the over-strand enters the crossing.
  int over_entry(std::size_t crossing) const { return signs_[crossing] > 0 ? 3 : 1; }
  std::size_t under_component(std::size_t crossing) const { return strand_component_[crossing][0]; }
  std::size_t over_component(std::size_t crossing) const { return strand_component_[crossing][1]; }
  std::size_t component_of_arc(long label) const;

 private:
  PDCode pd_;
  std::vector<LinkComponent> components_;
  std::vector<Integer> framings_;
  std::string name_;
  std::vector<int> signs_;
  std::vector<std::array<std::size_t, 2>> strand_component_;
  std::vector<std::pair<long, std::size_t>> arc_component_;  // sorted by label
};

// Reads the JSON framed-link format:
//   {"pd": [[a,b,c,d], ...], "unknots": k, "framings": [...], "name": "..."}
// Errors: MalformedInput, InvalidPD, FramingCountMismatch.
FramedLink parse_framed_link(std::string_view text);

// Canonical JSON (sorted keys, no whitespace).
std::string to_json(const FramedLink& link);

// Errors: IndexOutOfRange.
int crossing_sign(const FramedLink& link, std::size_t crossing_index);

// Framings on the diagonal, linking numbers off it. Errors: InvalidPD when a
// pair of components meets in an odd signed crossing count.
SymIntMatrix linking_matrix(const FramedLink& link);

bool is_unimodular(const SymIntMatrix& v);

// Swaps over and under at every crossing and negates every framing.
FramedLink mirror(const FramedLink& link);

}  // namespace kirby4
