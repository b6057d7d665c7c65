#include "../planar.hpp"

#include <algorithm>
#include <map>

#include "kirby4/error.hpp"

namespace kirby4::detail {

int PlanarDiagram::add_crossing(int over_in_position, int component_id) {
  const int base = slot_count();
  partner.resize(base + 4, -1);
  outgoing.resize(base + 4, 0);
  tag.resize(base + 4, kBandTag);
  component.resize(base + 4, component_id);
  outgoing[base + 2] = 1;
  outgoing[base + ((over_in_position + 2) & 3)] = 1;
  return base;
}

std::vector<int> PlanarDiagram::traverse(int start) const {
  std::vector<int> out;
  int cur = start;
  do {
    out.push_back(cur);
    cur = slot_opposite(partner[cur]);
  } while (cur != start);
  return out;
}

std::vector<int> PlanarDiagram::edges_of(int component_id) const {
  std::vector<int> out;
  for (int s = 0; s < slot_count(); ++s)
    if (outgoing[s] && component[s] == component_id) out.push_back(s);
  return out;
}

std::vector<int> PlanarDiagram::faces(int* face_count) const {
  std::vector<int> face(slot_count(), -1);
  int next = 0;
  for (int s = 0; s < slot_count(); ++s) {
    if (face[s] >= 0) continue;
    int cur = s;
    do {
      face[cur] = next;
      const int arrive = partner[cur];
      cur = (arrive & ~3) | ((arrive + 1) & 3);
    } while (cur != s);
    ++next;
  }
  if (face_count) *face_count = next;
  return face;
}

PlanarDiagram to_planar(const FramedLink& link) {
  PlanarDiagram d;
  const auto& crossings = link.pd().crossings;
  const int slots = static_cast<int>(4 * crossings.size());
  d.partner.assign(slots, -1);
  d.outgoing.assign(slots, 0);
  d.tag.assign(slots, kBandTag);
  d.component.assign(slots, -1);
  std::map<long, int> first_seen;
  for (int s = 0; s < slots; ++s) {
    const std::size_t c = static_cast<std::size_t>(slot_crossing(s));
    const long label = crossings[c][slot_position(s)];
    if (auto [it, inserted] = first_seen.emplace(label, s); !inserted) d.join(it->second, s);
    d.tag[s] = label;
    d.component[s] = static_cast<int>(link.component_of_arc(label));
    const int p = slot_position(s);
    d.outgoing[s] = p == 2 || (p % 2 == 1 && p != link.over_entry(c));
  }
  for (std::size_t i = 0; i < link.component_count(); ++i)
    if (link.components()[i].crossingless()) d.circles.push_back(static_cast<int>(i));
  return d;
}

FramedLink to_framed_link(const PlanarDiagram& d, const std::vector<int>& order,
                          const std::vector<Integer>& framings, const std::string& name,
                          std::vector<int>* final_order) {
  if (framings.size() != order.size()) {
    throw Error(ErrorCode::InternalInvariantViolation, "framing list does not match component order");
  }
  PDCode pd;
  pd.crossings.assign(d.crossing_count(), {0, 0, 0, 0});
  std::vector<int> written;
  std::vector<Integer> written_framings;
  std::vector<std::size_t> circle_positions;
  long label = 1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto edges = d.edges_of(order[k]);
    if (edges.empty()) {
      circle_positions.push_back(k);
      continue;
    }
    const int start = *std::min_element(edges.begin(), edges.end(), [&](int a, int b) {
      return d.tag[a] != d.tag[b] ? d.tag[a] < d.tag[b] : a < b;
    });
    for (int s : d.traverse(start)) {
      pd.crossings[slot_crossing(s)][slot_position(s)] = label;
      const int in = d.partner[s];
      pd.crossings[slot_crossing(in)][slot_position(in)] = label;
      ++label;
    }
    written.push_back(order[k]);
    written_framings.push_back(framings[k]);
  }
  for (const auto& c : pd.crossings)
    for (long l : c)
      if (l == 0) throw Error(ErrorCode::InternalInvariantViolation, "crossing not covered by any component");
  for (std::size_t k : circle_positions) {
    written.push_back(order[k]);
    written_framings.push_back(framings[k]);
  }
  pd.unknots = circle_positions.size();
  if (final_order) *final_order = written;
  return FramedLink::from_pd(std::move(pd), std::move(written_framings), name);
}

}  // namespace kirby4::detail
