#include <algorithm>
#include <map>
#include <utility>

#include "kirby4/diagram.hpp"
#include "kirby4/error.hpp"

namespace kirby4 {

namespace {

constexpr int opposite(int slot) { return (slot & ~3) | ((slot + 2) & 3); }
constexpr int position(int slot) { return slot & 3; }
constexpr int crossing_of(int slot) { return slot >> 2; }

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidPD, why); }

struct Traversal {
  std::vector<int> out_slots;  // in orientation order
};

}  // namespace

FramedLink FramedLink::from_pd(PDCode pd, std::vector<Integer> framings, std::string name) {
  const std::size_t n = pd.crossings.size();
  const int slots = static_cast<int>(4 * n);

  std::map<long, std::vector<int>> occurrences;
  for (std::size_t c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      const long label = pd.crossings[c][p];
      if (label <= 0) invalid("arc label " + std::to_string(label) + " is not positive");
      occurrences[label].push_back(static_cast<int>(4 * c) + p);
    }
  std::vector<int> partner(slots, -1);
  for (const auto& [label, occ] : occurrences) {
    if (occ.size() != 2) {
      invalid("arc label " + std::to_string(label) + " appears " + std::to_string(occ.size()) +
              " times, expected exactly twice");
    }
    partner[occ[0]] = occ[1];
    partner[occ[1]] = occ[0];
  }
  auto label_at = [&](int slot) { return pd.crossings[crossing_of(slot)][position(slot)]; };

  std::vector<char> visited(slots, 0);
  std::vector<int> over_entry(n, -1);
  std::vector<Traversal> traversals;

  auto walk = [&](int start) {
    Traversal t;
    int out = start;
    do {
      const int in = partner[out];
      if (visited[out] || visited[in]) invalid("inconsistent orientation traversal");
      visited[out] = visited[in] = 1;
      t.out_slots.push_back(out);
      switch (position(in)) {
        case 2: invalid("under-strand entered at its outgoing position");
        case 1:
        case 3: over_entry[crossing_of(in)] = position(in); break;
        default: break;
      }
      out = opposite(in);
    } while (out != start);
    traversals.push_back(std::move(t));
  };

  // Components that pass under somewhere: start on an outgoing under-arc.
  for (int s = 0; s < slots; ++s)
    if (position(s) == 2 && !visited[s]) walk(s);

  // The rest only pass over; orient them by label succession.
  for (int s = 0; s < slots; ++s) {
    if (visited[s]) continue;
    // Collect the unoriented cycle to find its smallest arc.
    long smallest = label_at(s);
    int first = s;
    for (int cur = s;;) {
      const int in = partner[cur];
      for (int slot : {cur, in})
        if (label_at(slot) < smallest || (label_at(slot) == smallest && slot < first)) {
          smallest = label_at(slot);
          first = slot;
        }
      cur = opposite(in);
      if (cur == s) break;
    }
    const int second = partner[first];
    const int lo = std::min(first, second), hi = std::max(first, second);
    // Entering at lo means leaving from hi, and vice versa.
    const long next_if_enter_lo = label_at(opposite(lo));
    const long next_if_enter_hi = label_at(opposite(hi));
    int start;
    if (next_if_enter_lo == smallest + 1 || next_if_enter_lo == smallest) {
      start = hi;
    } else if (next_if_enter_hi == smallest + 1) {
      start = lo;
    } else {
      invalid("arc labels of an over-only component are not consecutive");
    }
    walk(start);
  }

  // Label succession: rotate to the smallest label and require +1 steps.
  std::vector<LinkComponent> comps;
  comps.reserve(traversals.size() + pd.unknots);
  for (auto& t : traversals) {
    std::vector<long> labels;
    labels.reserve(t.out_slots.size());
    for (int s : t.out_slots) labels.push_back(label_at(s));
    auto it = std::min_element(labels.begin(), labels.end());
    std::rotate(labels.begin(), it, labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i)
      if (labels[i] != labels[0] + static_cast<long>(i)) {
        invalid("arc labels along a component must increase by one in the direction of travel");
      }
    comps.push_back(LinkComponent{std::move(labels)});
  }
  std::sort(comps.begin(), comps.end(),
            [](const LinkComponent& a, const LinkComponent& b) { return a.arcs.front() < b.arcs.front(); });
  for (std::size_t k = 0; k < pd.unknots; ++k) comps.push_back(LinkComponent{});

  if (framings.size() != comps.size()) {
    throw Error(ErrorCode::FramingCountMismatch,
                std::to_string(framings.size()) + " framings for " + std::to_string(comps.size()) +
                    " components");
  }

  FramedLink link;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (long label : comps[i].arcs) link.arc_component_.emplace_back(label, i);
  std::sort(link.arc_component_.begin(), link.arc_component_.end());

  link.signs_.resize(n);
  link.strand_component_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    link.signs_[c] = over_entry[c] == 3 ? 1 : -1;
    link.strand_component_[c] = {link.component_of_arc(pd.crossings[c][0]),
                                 link.component_of_arc(pd.crossings[c][1])};
  }
  link.pd_ = std::move(pd);
  link.components_ = std::move(comps);
  link.framings_ = std::move(framings);
  link.name_ = std::move(name);
  return link;
}

std::size_t FramedLink::component_of_arc(long label) const {
  auto it = std::lower_bound(arc_component_.begin(), arc_component_.end(),
                             std::pair<long, std::size_t>(label, 0));
  if (it == arc_component_.end() || it->first != label) {
    throw Error(ErrorCode::IndexOutOfRange, "no arc labelled " + std::to_string(label));
  }
  return it->second;
}

int crossing_sign(const FramedLink& link, std::size_t crossing_index) {
  if (crossing_index >= link.crossing_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "crossing index " + std::to_string(crossing_index) +
                                                " out of range for " +
                                                std::to_string(link.crossing_count()) + " crossings");
  }
  return link.sign_at(crossing_index);
}

SymIntMatrix linking_matrix(const FramedLink& link) {
  const std::size_t m = link.component_count();
  IntMatrix twice(m, m);
  for (std::size_t c = 0; c < link.crossing_count(); ++c) {
    const std::size_t i = link.under_component(c), j = link.over_component(c);
    if (i == j) continue;
    twice(i, j) += link.sign_at(c);
    twice(j, i) += link.sign_at(c);
  }
  IntMatrix v(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        v(i, i) = link.framings()[i];
        continue;
      }
      if (mpz_odd_p(twice(i, j).get_mpz_t())) {
        invalid("components " + std::to_string(i) + " and " + std::to_string(j) +
                " have an odd signed crossing sum");
      }
      v(i, j) = twice(i, j) / 2;
    }
  return SymIntMatrix(std::move(v));
}

bool is_unimodular(const SymIntMatrix& v) {
  const Integer d = determinant(v.matrix());
  return d == 1 || d == -1;
}

FramedLink mirror(const FramedLink& link) {
  PDCode pd = link.pd();
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    const auto t = pd.crossings[c];
    // The old over-strand becomes the under-strand; start at its entry.
    if (link.over_entry(c) == 3) {
      pd.crossings[c] = {t[3], t[0], t[1], t[2]};
    } else {
      pd.crossings[c] = {t[1], t[2], t[3], t[0]};
    }
  }
  std::vector<Integer> framings;
  framings.reserve(link.framings().size());
  for (const auto& f : link.framings()) framings.push_back(-f);
  return FramedLink::from_pd(std::move(pd), std::move(framings), link.name());
}

}  // namespace kirby4
