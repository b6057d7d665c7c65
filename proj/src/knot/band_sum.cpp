#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

#include "../planar.hpp"
#include "kirby4/error.hpp"
#include "kirby4/knot.hpp"

namespace kirby4 {

using detail::kBandTag;
using detail::PlanarDiagram;

namespace {

// The chosen edge of a component: rank-th original edge by (label, slot).
int pick_edge(const PlanarDiagram& d, int component, std::size_t rank) {
  std::vector<int> edges;
  for (int s : d.edges_of(component))
    if (d.tag[s] != kBandTag) edges.push_back(s);
  if (edges.empty()) throw Error(ErrorCode::InternalInvariantViolation, "component lost all of its arcs");
  std::sort(edges.begin(), edges.end(), [&](int a, int b) {
    return d.tag[a] != d.tag[b] ? d.tag[a] < d.tag[b] : a < b;
  });
  return edges[rank % edges.size()];
}

struct Step {
  int edge;       // crossed edge, by its tail slot
  int from_face;  // face the band comes from
};

struct Route {
  bool found = false;
  bool source_left = false;  // band leaves the first edge on its left side
  bool target_left = false;  // band reaches the second edge on its left side
  std::vector<Step> steps;
};

// Shortest path in the dual graph from a face beside edge ta to a face
// beside edge tb.
Route find_route(const PlanarDiagram& d, const std::vector<int>& face, int face_count, int ta, int tb) {
  std::vector<std::vector<std::pair<int, int>>> adj(face_count);
  for (int s = 0; s < d.slot_count(); ++s) {
    if (!d.outgoing[s]) continue;
    const int right = face[s], left = face[d.partner[s]];
    if (right == left) continue;
    adj[right].push_back({left, s});
    adj[left].push_back({right, s});
  }
  std::vector<int> dist(face_count, -1), via_edge(face_count, -1), via_face(face_count, -1);
  std::vector<char> left_start(face_count, 0);
  std::deque<int> queue;
  for (auto [f, left] : {std::pair{face[ta], false}, std::pair{face[d.partner[ta]], true}}) {
    if (dist[f] >= 0) continue;
    dist[f] = 0;
    left_start[f] = left;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (auto [g, e] : adj[f]) {
      if (dist[g] >= 0) continue;
      dist[g] = dist[f] + 1;
      via_edge[g] = e;
      via_face[g] = f;
      left_start[g] = left_start[f];
      queue.push_back(g);
    }
  }

  Route route;
  int best = -1;
  for (auto [f, left] : {std::pair{face[tb], false}, std::pair{face[d.partner[tb]], true}}) {
    if (dist[f] < 0) continue;
    const bool twist = static_cast<bool>(left_start[f]) != left;
    const bool best_twist = route.source_left != route.target_left;
    if (best < 0 || dist[f] < dist[best] || (dist[f] == dist[best] && best_twist && !twist)) {
      best = f;
      route.found = true;
      route.source_left = left_start[f];
      route.target_left = left;
    }
  }
  if (!route.found) return route;
  for (int f = best; via_edge[f] >= 0; f = via_face[f]) route.steps.push_back({via_edge[f], via_face[f]});
  std::reverse(route.steps.begin(), route.steps.end());
  return route;
}

// Bands component b onto component r at the given edges; afterwards every
// slot of b belongs to r.
BandRecord attach(PlanarDiagram& d, int r, int b, int ta, int tb) {
  int face_count = 0;
  const std::vector<int> face = d.faces(&face_count);
  const int ha = d.partner[ta], hb = d.partner[tb];
  const Route route = find_route(d, face, face_count, ta, tb);

  BandRecord rec;
  rec.from_arc = d.tag[ta];
  rec.to_arc = d.tag[tb];
  if (!route.found) {
    d.join(ta, hb);
    d.join(tb, ha);
    rec.separate_pieces = true;
  } else {
    // S1 runs along the band from ta to hb, S2 back from tb to ha.
    bool s1_left = route.source_left;
    int s1_end = ta;
    int twist = -1;
    if (route.source_left != route.target_left) {
      // S2 passes under S1 right where the band leaves the first edge.
      twist = d.add_crossing(route.source_left ? 1 : 3, r);
      d.join(s1_end, twist + (route.source_left ? 1 : 3));
      s1_end = twist + (route.source_left ? 3 : 1);
      s1_left = !s1_left;
      rec.half_twist = true;
    }
    std::vector<int> s2_passes;
    for (const Step& step : route.steps) {
      const int tk = step.edge, hk = d.partner[tk];
      const int over_component = d.component[tk];
      const bool south = step.from_face == face[hk];  // coming from the edge's left
      const bool s1_east = south ? s1_left : !s1_left;
      // Looking along the crossed edge: p is met first, q second.
      const bool p_is_s1 = !s1_east;
      auto over_in = [&](bool is_s1) { return (is_s1 != south) ? 3 : 1; };
      const int p_in = over_in(p_is_s1), q_in = over_in(!p_is_s1);
      const int p = d.add_crossing(p_in, r);
      const int q = d.add_crossing(q_in, r);
      for (int x : {p, q}) d.component[x + 1] = d.component[x + 3] = over_component;
      d.join(tk, p + p_in);
      d.join(p + ((p_in + 2) & 3), q + q_in);
      d.join(q + ((q_in + 2) & 3), hk);
      const int s1_cross = p_is_s1 ? p : q;
      d.join(s1_end, s1_cross);
      s1_end = s1_cross + 2;
      s2_passes.push_back(p_is_s1 ? q : p);
      rec.crossings_added += 2;
    }
    d.join(s1_end, hb);
    int s2_end = tb;
    for (auto it = s2_passes.rbegin(); it != s2_passes.rend(); ++it) {
      d.join(s2_end, *it);
      s2_end = *it + 2;
    }
    if (twist >= 0) {
      d.join(s2_end, twist);
      s2_end = twist + 2;
      rec.crossings_added += 1;
    }
    d.join(s2_end, ha);
  }
  for (int& c : d.component)
    if (c == b) c = r;
  return rec;
}

}  // namespace

KnotDiagram band_sum(const FramedLink& sub, const BandOptions& options) {
  const std::size_t m = sub.component_count();
  std::vector<std::size_t> order = options.order;
  if (order.empty()) {
    order.resize(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  if (order.size() != m) {
    throw Error(ErrorCode::LengthMismatch, "band order lists " + std::to_string(order.size()) +
                                               " components, the link has " + std::to_string(m));
  }
  {
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < m; ++i)
      if (sorted[i] != i) throw Error(ErrorCode::MalformedInput, "band order is not a permutation");
  }
  if (m == 0) return KnotDiagram();
  if (m == 1) return KnotDiagram(sub);

  PlanarDiagram d = detail::to_planar(sub);
  std::vector<BandRecord> records;
  int r = static_cast<int>(order[0]);
  for (std::size_t k = 1; k < m; ++k) {
    const int b = static_cast<int>(order[k]);
    // A crossingless circle is a split unknot; banding it on changes nothing.
    if (d.edges_of(b).empty()) continue;
    if (d.edges_of(r).empty()) {
      r = b;
      continue;
    }
    const int ta = pick_edge(d, r, options.arc_rank);
    const int tb = pick_edge(d, b, 0);
    BandRecord rec = attach(d, r, b, ta, tb);
    rec.from_component = sub.component_of_arc(rec.from_arc);
    rec.to_component = static_cast<std::size_t>(b);
    records.push_back(rec);
  }
  if (d.edges_of(r).empty()) return KnotDiagram(FramedLink::from_pd(PDCode{{}, 1}, {0}, sub.name()), records);
  FramedLink knot = detail::to_framed_link(d, {r}, {0}, sub.name());
  return KnotDiagram(std::move(knot), std::move(records));
}

}  // namespace kirby4
