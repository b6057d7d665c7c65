#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include "kirby4/diagram.hpp"
#include "kirby4/error.hpp"
#include "support.hpp"

using namespace kirby4;
using testing::fixture;
using testing::sym;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInvariantViolation;
}

// Crossing signs recomputed from arc directions alone. Each label names an
// arc with two ends; once we know which end the arc starts from, the over
// strand through that end is known to leave there. Under-strands seed this
// (they run 0 -> 2) and over-strands pass it on. Crossings left undecided
// (over passes of components that never go under) come back as 0.
std::vector<int> oracle_signs(const PDCode& pd) {
  using End = std::pair<std::size_t, int>;
  std::map<long, std::vector<End>> ends;
  for (std::size_t c = 0; c < pd.crossings.size(); ++c)
    for (int p = 0; p < 4; ++p) ends[pd.crossings[c][p]].push_back({c, p});
  std::map<long, End> start;
  auto set_start = [&](long label, End e) { return start.emplace(label, e).second; };
  auto set_finish = [&](long label, End e) {
    const auto& v = ends[label];
    return set_start(label, v[0] == e ? v[1] : v[0]);
  };
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    set_start(pd.crossings[c][2], {c, 2});
    set_finish(pd.crossings[c][0], {c, 0});
  }
  std::vector<int> exit_pos(pd.crossings.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
      if (exit_pos[c]) continue;
      for (int p : {1, 3}) {
        auto it = start.find(pd.crossings[c][p]);
        if (it == start.end()) continue;
        exit_pos[c] = it->second == End{c, p} ? p : 4 - p;
        set_start(pd.crossings[c][exit_pos[c]], {c, exit_pos[c]});
        set_finish(pd.crossings[c][4 - exit_pos[c]], {c, 4 - exit_pos[c]});
        changed = true;
        break;
      }
    }
  }
  std::vector<int> signs;
  for (int e : exit_pos) signs.push_back(e == 1 ? 1 : e == 3 ? -1 : 0);
  return signs;
}

// lk(i, j) as the sum of signs of crossings where i passes under j only.
IntMatrix under_count_lk(const FramedLink& link) {
  const std::size_t m = link.component_count();
  IntMatrix lk(m, m);
  for (std::size_t c = 0; c < link.crossing_count(); ++c) {
    const auto i = link.under_component(c), j = link.over_component(c);
    if (i != j) lk(i, j) += link.sign_at(c);
  }
  return lk;
}

// Relabels every component by rotating its labels k steps along itself.
FramedLink rotate_labels(const FramedLink& link, long k) {
  std::map<long, long> to;
  for (const auto& comp : link.components()) {
    const long n = static_cast<long>(comp.arcs.size());
    for (long i = 0; i < n; ++i) to[comp.arcs[i]] = comp.arcs[((i + k) % n + n) % n];
  }
  PDCode pd = link.pd();
  for (auto& c : pd.crossings)
    for (auto& l : c) l = to[l];
  return FramedLink::from_pd(pd, link.framings());
}

const std::map<std::string, std::vector<std::vector<long>>> kExpected = {
    {"unknot+1", {{1}}},
    {"unknot-1", {{-1}}},
    {"unknot+2", {{2}}},
    {"kinked-unknot+1", {{1}}},
    {"trefoil+1", {{1}}},
    {"trefoil-rotated+1", {{1}}},
    {"figure-eight+1", {{1}}},
    {"figure-eight-rotated+1", {{1}}},
    {"hopf00", {{0, 1}, {1, 0}}},
    {"hopf00-rotated", {{0, 1}, {1, 0}}},
    {"hopf20", {{2, 1}, {1, 0}}},
    {"hopf10", {{1, 1}, {1, 0}}},
    {"hopf0-1-negative", {{0, -1}, {-1, -1}}},
    {"split-unknots+1-1", {{1, 0}, {0, -1}}},
    {"split-unknots+1+1-1", {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}},
    {"hopf00-plus-unknot+1", {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}},
    {"chain110", {{1, 1, 0}, {1, 1, 1}, {0, 1, 0}}},
    {"trefoil+1-trefoil+1", {{1, 0}, {0, 1}}},
    {"trefoil+1-unknot-1", {{1, 0}, {0, -1}}},
    {"borromean111", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
};

}  // namespace

TEST_CASE("two-crossing Hopf code from text") {
  const auto link = parse_framed_link(R"({"pd":[[1,3,2,4],[3,1,4,2]],"framings":[0,0]})");
  CHECK(link.component_count() == 2);
  CHECK(link.components()[0].arcs == std::vector<long>{1, 2});
  CHECK(link.components()[1].arcs == std::vector<long>{3, 4});
  CHECK(crossing_sign(link, 0) == 1);
  CHECK(crossing_sign(link, 1) == 1);
  CHECK(linking_matrix(link) == sym({{0, 1}, {1, 0}}));
  CHECK(crossing_sign(mirror(link), 0) == -1);
  CHECK(linking_matrix(mirror(link)) == sym({{0, -1}, {-1, 0}}));
  CHECK(code_of([&] { crossing_sign(link, 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("crossingless components") {
  const auto u = parse_framed_link(R"({"pd":[],"unknots":1,"framings":[1]})");
  CHECK(u.component_count() == 1);
  CHECK(u.components()[0].crossingless());
  CHECK(linking_matrix(u) == sym({{1}}));
  CHECK(linking_matrix(mirror(u)) == sym({{-1}}));
  CHECK(linking_matrix(fixture("split-unknots+1+1")) == sym({{1, 0}, {0, 1}}));
  const auto empty = parse_framed_link(R"({"pd":[],"framings":[]})");
  CHECK(empty.component_count() == 0);
  CHECK(linking_matrix(empty).size() == 0);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_framed_link(R"({"pd":[[1,3,2,4]],"framings":[0]})"); }) == ErrorCode::InvalidPD);
  CHECK(code_of([] { parse_framed_link(R"({"pd":[[1,1,2,2],[2,3,3,1]],"framings":[0]})"); }) ==
        ErrorCode::InvalidPD);
  CHECK(code_of([] { parse_framed_link(R"({"pd":[[0,1,1,0]],"framings":[0]})"); }) == ErrorCode::InvalidPD);
  CHECK(code_of([] { parse_framed_link(R"({"pd":[[1,3,2,4],[3,1,4,2]],"framings":[0]})"); }) ==
        ErrorCode::FramingCountMismatch);
  CHECK(code_of([] { parse_framed_link(R"({"pd":[[1,3,2,4],[3,1,4,2]],"framings":[0,0)"); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_framed_link(R"({"pd":[[1,3,2]],"framings":[0]})"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_framed_link(R"({"pd":[],"unknots":-1,"framings":[]})"); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_framed_link(R"({"pd":[],"unknots":1,"framings":[1.5]})"); }) ==
        ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_framed_link(R"([1,2])"); }) == ErrorCode::MalformedInput);
  // labels that go backwards along the strand
  CHECK(code_of([] { parse_framed_link(R"({"pd":[[1,4,6,3],[3,6,2,5],[5,2,4,1]],"framings":[0]})"); }) ==
        ErrorCode::InvalidPD);
}

TEST_CASE("a lone crossing between two loops has odd linking sum") {
  const auto link = parse_framed_link(R"({"pd":[[1,2,1,2]],"framings":[0,0]})");
  CHECK(link.component_count() == 2);
  CHECK(code_of([&] { linking_matrix(link); }) == ErrorCode::InvalidPD);
}

TEST_CASE("big framings survive parsing") {
  const auto link = parse_framed_link(R"({"pd":[],"unknots":1,"framings":[-9223372036854775807]})");
  CHECK(linking_matrix(link)(0, 0) == Integer("-9223372036854775807"));
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(sym({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_unimodular(sym({{2}})));
  CHECK(is_unimodular(e8_form()));
  CHECK(determinant(e8_form().matrix()) == 1);
  CHECK(is_unimodular(SymIntMatrix()));
}

TEST_CASE("fixture linking matrices match the geometric counts") {
  for (const auto& [name, rows] : kExpected) {
    CAPTURE(name);
    CHECK(linking_matrix(fixture(name)) == sym(rows));
  }
  CHECK(linking_matrix(fixture("e8-plumbing")) == e8_form().congruent_by(IntMatrix::identity(8)));
  const auto t = linking_matrix(fixture("torus24-13"));
  CHECK(t(0, 0) == 1);
  CHECK(t(1, 1) == 3);
  CHECK(abs(t(0, 1)) == 2);
}

TEST_CASE("e8 plumbing presents the E8 form") {
  // the plumbing was built with -1 clasps, matching the Cartan convention
  CHECK(linking_matrix(fixture("e8-plumbing")) == e8_form());
  CHECK(linking_matrix(fixture("e8-plumbing-rotated")) == e8_form());
}

TEST_CASE("every fixture: signs, symmetry, mirror, label rotation") {
  for (const auto& name : testing::all_fixtures()) {
    CAPTURE(name);
    const auto link = fixture(name);
    const auto v = linking_matrix(link);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) CHECK(v(i, j) == v(j, i));

    const auto oracle = oracle_signs(link.pd());
    for (std::size_t c = 0; c < link.crossing_count(); ++c)
      if (oracle[c] != 0) CHECK(oracle[c] == crossing_sign(link, c));

    // the count over one kind of crossing alone gives the same numbers
    const auto lk = under_count_lk(link);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (i != j) CHECK(lk(i, j) == v(i, j));

    CHECK(linking_matrix(mirror(link)) == -v);
    CHECK(linking_matrix(mirror(mirror(link))) == v);
    CHECK(mirror(mirror(link)).pd() == link.pd());
    for (long k : {1L, 2L, 5L}) {
      const auto rotated = rotate_labels(link, k);
      CHECK(linking_matrix(rotated) == v);
    }
  }
}

TEST_CASE("Reidemeister-related fixture pairs") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"trefoil+1", "trefoil-rotated+1"},
      {"figure-eight+1", "figure-eight-rotated+1"},
      {"unknot+1", "kinked-unknot+1"},
      {"hopf00", "hopf00-rotated"},
      {"e8-plumbing", "e8-plumbing-rotated"}};
  for (const auto& [a, b] : pairs) {
    CAPTURE(a);
    CHECK(fixture(a).crossing_count() != fixture(b).crossing_count());
    CHECK(linking_matrix(fixture(a)) == linking_matrix(fixture(b)));
  }
}

TEST_CASE("json round trip") {
  for (const auto& name : testing::all_fixtures()) {
    CAPTURE(name);
    const auto link = fixture(name);
    const std::string once = to_json(link);
    const auto again = parse_framed_link(once);
    CHECK(to_json(again) == once);
    CHECK(again.pd() == link.pd());
    CHECK(linking_matrix(again) == linking_matrix(link));
  }
}
