#pragma once

// Internal slot-level view of an oriented planar diagram, used for surgery
// on diagrams (deleting components, attaching bands).
//
// Slot 4*c + p is position p of crossing c, positions counterclockwise with
// 0/2 the incoming/outgoing under-strand. Every slot is joined to exactly one
// partner slot by an edge of the diagram; an edge is named by the slot at its
// tail (the slot the strand leaves through).

#include <climits>
#include <cstddef>
#include <vector>

#include "kirby4/diagram.hpp"

namespace kirby4::detail {

constexpr int slot_opposite(int slot) { return (slot & ~3) | ((slot + 2) & 3); }
constexpr int slot_position(int slot) { return slot & 3; }
constexpr int slot_crossing(int slot) { return slot >> 2; }

inline constexpr long kBandTag = LONG_MAX;

struct PlanarDiagram {
  std::vector<int> partner;
  std::vector<char> outgoing;
  // Arc label the edge leaving this slot originally carried (kBandTag for
  // edges created by a band); only meaningful on outgoing slots.
  std::vector<long> tag;
  std::vector<int> component;
  // Component ids of crossingless circles, in order.
  std::vector<int> circles;

  std::size_t crossing_count() const noexcept { return partner.size() / 4; }
  int slot_count() const noexcept { return static_cast<int>(partner.size()); }

  // Appends a crossing with the given positions for the incoming over-strand
  // (1 or 3); returns its first slot.
  int add_crossing(int over_in_position, int component_id);

  void join(int a, int b) {
    partner[a] = b;
    partner[b] = a;
  }

  // Outgoing slots of a component along its orientation, starting at `start`.
  std::vector<int> traverse(int start) const;
  // Outgoing slots of a component, in no particular order.
  std::vector<int> edges_of(int component_id) const;
  // Face id of every slot, for the face lying to the right of the edge as it
  // is walked away from that slot.
  std::vector<int> faces(int* face_count = nullptr) const;
};

PlanarDiagram to_planar(const FramedLink& link);

// Lists the given components (by id) in order and relabels arcs
// consecutively. Components with crossings are written first, circles after.
// Returns the resulting link together with the component ids in the order
// they ended up in.
FramedLink to_framed_link(const PlanarDiagram& d, const std::vector<int>& order,
                          const std::vector<Integer>& framings, const std::string& name,
                          std::vector<int>* final_order = nullptr);

}  // namespace kirby4::detail
