#include <numeric>

#include "../planar.hpp"
#include "kirby4/error.hpp"
#include "kirby4/knot.hpp"

namespace kirby4 {

using detail::PlanarDiagram;
using detail::slot_crossing;
using detail::slot_opposite;

FramedLink characteristic_sublink(const FramedLink& link, const std::vector<int>& c,
                                  std::vector<std::size_t>* kept_order) {
  if (c.size() != link.component_count()) {
    throw Error(ErrorCode::LengthMismatch, "vector has " + std::to_string(c.size()) + " entries for " +
                                               std::to_string(link.component_count()) + " components");
  }
  for (int x : c)
    if (x != 0 && x != 1) throw Error(ErrorCode::MalformedInput, "sublink selector entries must be 0 or 1");

  const PlanarDiagram d = detail::to_planar(link);
  const std::size_t n = d.crossing_count();
  std::vector<int> new_index(n, -1);
  int kept = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const int under = d.component[4 * x], over = d.component[4 * x + 1];
    if (c[under] && c[over]) new_index[x] = kept++;
  }

  PlanarDiagram out;
  out.partner.assign(4 * kept, -1);
  out.outgoing.assign(4 * kept, 0);
  out.tag.assign(4 * kept, detail::kBandTag);
  out.component.assign(4 * kept, -1);
  auto moved = [&](int slot) { return 4 * new_index[slot_crossing(slot)] + (slot & 3); };
  for (int s = 0; s < d.slot_count(); ++s) {
    if (new_index[slot_crossing(s)] < 0) continue;
    out.outgoing[moved(s)] = d.outgoing[s];
    out.tag[moved(s)] = d.tag[s];
    out.component[moved(s)] = d.component[s];
    if (!d.outgoing[s]) continue;
    // Run along the strand through removed crossings.
    int cur = d.partner[s];
    while (new_index[slot_crossing(cur)] < 0) cur = d.partner[slot_opposite(cur)];
    out.join(moved(s), moved(cur));
  }

  std::vector<int> order;
  std::vector<Integer> framings;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) {
      order.push_back(static_cast<int>(i));
      framings.push_back(link.framings()[i]);
    }
  std::vector<int> final_order;
  FramedLink sub = detail::to_framed_link(out, order, framings, link.name(), &final_order);
  if (kept_order) kept_order->assign(final_order.begin(), final_order.end());
  return sub;
}

}  // namespace kirby4
