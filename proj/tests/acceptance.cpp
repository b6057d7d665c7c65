// One line per acceptance criterion: PASS/FAIL, what was checked, wall time.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kirby4/classify.hpp"
#include "kirby4/error.hpp"
#include "oracles.hpp"
#include "random_forms.hpp"
#include "support.hpp"

using namespace kirby4;
using testing::fixture;
using testing::sym;

namespace {

struct Failed {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failed{what};
}

// Counts per check, in first-seen order.
struct Counter {
  std::vector<std::pair<std::string, int>> items;
  void add(const std::string& k) {
    for (auto& [name, n] : items)
      if (name == k) {
        ++n;
        return;
      }
    items.push_back({k, 1});
  }
  std::string summary() const {
    std::string s;
    for (const auto& [name, n] : items) s += (s.empty() ? "" : ", ") + name + " " + std::to_string(n);
    return s;
  }
};

bool is_signed_permutation(const IntMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    int nonzero = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      if (abs(a(i, j)) != 1) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return true;
}

bool unimodular_witness(const SymIntMatrix& v, const SymIntMatrix& w, const IntMatrix& a) {
  const Integer d = determinant(a);
  return v.congruent_by(a) == w && (d == 1 || d == -1);
}

bool satisfies_characteristic(const SymIntMatrix& v, const IntVector& c) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    IntVector e(v.size(), Integer(0));
    e[i] = 1;
    if (mpz_odd_p(Integer(v.bilinear(c, e) - v(i, i)).get_mpz_t())) return false;
  }
  return true;
}

bool is_diagonal(const SymIntMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

std::string c1() {
  const Verdict v = homeomorphic_oriented(fixture("unknot+1"), fixture("trefoil+1"));
  expect(!v.homeomorphic, "verdict should be negative");
  expect(v.reason == VerdictReason::KsDiffer, std::string("reason ") + reason_name(v.reason));
  expect(v.left.form == sym({{1}}) && v.right.form == sym({{1}}), "both forms should be [[1]]");
  expect(v.left.ks == 0 && v.right.ks == 1, "ks should be 0 and 1");
  return "not homeomorphic, KsDiffer, forms [[1]] and [[1]], ks 0 and 1";
}

std::string c2() {
  const auto inv = kirby_siebenmann(fixture("e8-plumbing"));
  expect(inv.form == e8_form(), "linking matrix should be E8");
  expect(inv.signature == 8, "signature " + std::to_string(inv.signature));
  expect(inv.form_class.parity == Parity::Even, "parity should be even");
  expect(inv.characteristic == IntVector(8, Integer(0)), "c should be 0");
  expect(inv.ks == 1, "ks should be 1");
  expect(inv.ks == (inv.signature / 8) % 2, "ks should equal signature / 8 mod 2");
  return "signature 8, even, c = 0, ks 1 = 8/8 mod 2";
}

std::string c3() {
  const SymIntMatrix h = sym({{0, 1}, {1, 0}});
  const SymIntMatrix e8m = direct_sum(e8_form(), sym({{-1}}));
  const SymIntMatrix d9 = SymIntMatrix::diagonal({1, 1, 1, 1, 1, 1, 1, 1, -1});
  expect(congruent(direct_sum(sym({{1}}), h), SymIntMatrix::diagonal({1, 1, -1})), "[1]+H ~ diag(1,1,-1)");
  expect(!congruent(h, SymIntMatrix::diagonal({1, -1})), "H and diag(1,-1) differ in parity");
  expect(congruent(e8m, d9), "E8+[-1] ~ diag(1 x8, -1)");
  expect(congruent_indefinite(e8m, d9), "indefinite test directly");
  return "[1]+H ~ diag(1,1,-1); H !~ diag(1,-1); E8+[-1] ~ diag(1x8,-1)";
}

std::string c4() {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto id = SymIntMatrix::identity(n);
    const auto a = congruent_definite(id, id);
    expect(a.has_value(), "no witness for I_" + std::to_string(n));
    expect(is_signed_permutation(*a), "witness for I_" + std::to_string(n) + " is not a signed permutation");
    expect(unimodular_witness(id, id, *a), "bad witness for I_" + std::to_string(n));
  }
  const auto i8 = SymIntMatrix::identity(8);
  expect(!congruent_definite(e8_form(), i8).has_value(), "E8 vs I8 should have no witness");
  expect(!congruent_definite(i8, e8_form()).has_value(), "I8 vs E8 should have no witness");
  const auto a = congruent_definite(e8_form(), e8_form());
  expect(a.has_value(), "E8 vs E8 should have a witness");
  expect(unimodular_witness(e8_form(), e8_form(), *a), "E8 witness fails A^T E8 A == E8 or det +-1");
  return "signed permutations for I_1..I_8; E8 vs I8 none; E8 self-witness verified";
}

std::string c5() {
  const std::vector<std::tuple<std::string, int, int>> cases = {
      {"unknot+1", 0, 1},       {"kinked-unknot+1", 0, 1},        {"trefoil+1", 1, 3},
      {"trefoil-rotated+1", 1, 3}, {"figure-eight+1", 1, 5}, {"figure-eight-rotated+1", 1, 5}};
  for (const auto& [name, arf, det] : cases) {
    const KnotDiagram k(fixture(name));
    expect(arf_invariant(k) == arf, name + ": Arf");
    expect(alexander_at_minus_one(k) == det, name + ": determinant");
    expect(testing::colouring_determinant(k.pd()) == det, name + ": colouring oracle");
  }
  return "Arf 0/1/1, determinants 1/3/5, colouring-matrix recount agrees (6 diagrams)";
}

FramedLink random_link(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {"unknot+1", "trefoil+1",    "figure-eight+1", "hopf00",
                                                  "chain110", "borromean111", "torus24-13",     "hopf10"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1), count(1, 3);
  std::uniform_int_distribution<long> framing(-3, 3);
  for (;;) {
    FramedLink link = fixture(pieces[pick(rng)]);
    for (std::size_t k = count(rng); k > 1; --k) link = testing::split_union(link, fixture(pieces[pick(rng)]));
    std::vector<Integer> fr;
    for (std::size_t i = 0; i < link.component_count(); ++i) fr.push_back(framing(rng));
    link = FramedLink::from_pd(link.pd(), fr);
    if (is_unimodular(linking_matrix(link)) && link.component_count() > 1) return link;
  }
}

std::string c6() {
  Counter n;
  std::mt19937 rng(8128);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int round = 0; round < 250; ++round) {
    const std::size_t m = size(rng);
    const auto base = testing::random_block_form(m, rng);
    const auto v = base.congruent_by(testing::random_unimodular(m, rng));
    const auto dd = diagonalize_over_q(v);
    expect(v.congruent_by(dd.p) == dd.d && is_diagonal(dd.d), "P^T V P == D");
    n.add("P^T V P = D");
    const auto c = characteristic_vector(v);
    expect(satisfies_characteristic(v, c), "characteristic condition");
    n.add("characteristic");
    const auto q = testing::random_unimodular(m, rng);
    const auto moved = v.congruent_by(q);
    expect(congruent(moved, v), "congruent(Q^T V Q, V)");
    n.add("congruent(Q^T V Q, V)");
    expect(classify(moved) == classify(v), "classify invariance");
    n.add("classify invariance");
    const FormClass f = classify(v);
    expect(mpz_divisible_ui_p(Integer(v.bilinear(c, c) - f.signature).get_mpz_t(), 8), "8 | c.c - signature");
    n.add("8 | c.c - sigma");
  }
  // definite inputs for the congruence check exercise the enumeration
  const std::vector<SymIntMatrix> definite = {SymIntMatrix::identity(3), SymIntMatrix::identity(5), e8_form(),
                                              -SymIntMatrix::identity(4), -e8_form()};
  for (int round = 0; round < 40; ++round)
    for (const auto& b : definite) {
      const auto v = b.congruent_by(testing::random_unimodular(b.size(), rng, static_cast<int>(b.size())));
      const auto r = compare_forms(v, b);
      expect(r.congruent && r.witness && unimodular_witness(v, b, *r.witness), "definite congruent(Q^T V Q, V)");
      n.add("definite congruent(Q^T V Q, V)");
    }
  // links: the pipeline's own 8-divisibility assertion and band choices
  std::vector<FramedLink> links;
  for (const auto& name : testing::unimodular_fixtures()) {
    const auto l = fixture(name);
    if (l.component_count() > 1) links.push_back(l);
  }
  const std::size_t fixture_links = links.size();
  while (links.size() < fixture_links + 200) links.push_back(random_link(rng));
  for (const auto& link : links) {
    const auto inv = kirby_siebenmann(link);
    expect(mpz_divisible_ui_p(Integer(inv.characteristic_square - inv.signature).get_mpz_t(), 8),
           "8 | c.c - sigma on a link");
    n.add("link 8 | c.c - sigma");
    const std::size_t m = link.component_count();
    for (std::size_t choice = 0; choice < 4; ++choice) {
      BandOptions opt;
      for (std::size_t i = 0; i < m; ++i) opt.order.push_back((i + choice) % m);
      if (choice % 2) std::reverse(opt.order.begin(), opt.order.end());
      opt.arc_rank = choice;
      expect(kirby_siebenmann(link, opt).ks == inv.ks, "ks depends on the band choice: " + to_json(link));
    }
    n.add("ks over 4 band choices");
  }
  for (const auto& [name, count] : n.items) expect(count >= 200, name + " ran only " + std::to_string(count));
  return n.summary() + " (" + std::to_string(fixture_links) + " multi-component fixtures included)";
}

std::string c7() {
  std::vector<SymIntMatrix> forms;
  for (const auto& name : testing::unimodular_fixtures()) {
    const auto v = linking_matrix(fixture(name));
    if (v.size() <= 3) forms.push_back(v);
  }
  int pairs = 0, yes = 0;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (forms[i].size() != forms[j].size()) continue;
      const bool fast = congruent(forms[i], forms[j]);
      std::ostringstream os;
      os << forms[i] << " vs " << forms[j];
      expect(fast == testing::brute_force_congruent(forms[i], forms[j]), "disagreement on " + os.str());
      ++pairs;
      yes += fast;
    }
  return std::to_string(pairs) + " ordered same-rank pairs agree (" + std::to_string(yes) + " congruent)";
}

std::string c8() {
  const auto cp2 = fixture("unknot+1");
  const auto bar = fixture("unknot-1");
  expect(!homeomorphic_oriented(cp2, bar).homeomorphic, "oriented mode should say no");
  const Verdict v = homeomorphic_unoriented(cp2, bar);
  expect(v.homeomorphic && v.reason == VerdictReason::MatchAfterReversal, "unoriented mode should match after reversal");
  return "oriented: not homeomorphic; unoriented: MatchAfterReversal";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<std::string()> run;
    long limit_ms;
  };
  const std::vector<Criterion> criteria = {
      {1, "CP2 vs Chern manifold", c1, 1000},
      {2, "E8 manifold ks", c2, 1000},
      {3, "indefinite classification", c3, 1000},
      {4, "definite enumeration", c4, 60000},
      {5, "Arf oracle agreement", c5, 60000},
      {6, "property suite", c6, 300000},
      {7, "brute-force congruence oracle", c7, 300000},
      {8, "unoriented mode", c8, 60000},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failed& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const long ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    if (ok && ms >= c.limit_ms) {
      ok = false;
      detail += "; over the time limit";
    }
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << detail << " [" << ms << " ms, limit "
              << c.limit_ms << " ms]" << std::endl;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " failed" : std::string("acceptance: all 8 passed"))
            << std::endl;
  return failed ? 1 : 0;
}
