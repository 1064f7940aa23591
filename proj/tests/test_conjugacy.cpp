#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "garside/conjugacy.hpp"
#include "garside/family.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {

PermutationBraid simple(std::initializer_list<int> letters) { return *is_simple(words::from_letters(5, letters)); }

NormalForm nf(int n, const std::vector<int>& letters) { return normal_form(BraidWord(n, letters)); }

bool connected(const ConjugacySet& set) {
  std::vector<std::set<std::size_t>> adj(set.members.size());
  for (const auto& e : set.edges) {
    adj[e.from].insert(e.to);
    adj[e.to].insert(e.from);
  }
  std::vector<bool> seen(set.members.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::find(seen.begin(), seen.end(), false) == seen.end();
}

void check_set_invariants(const ConjugacySet& set) {
  REQUIRE_FALSE(set.members.empty());
  for (const auto& m : set.members) {
    CHECK(m.inf() == set.inf);
    CHECK(m.sup() == set.sup);
  }
  CHECK(std::is_sorted(set.members.begin(), set.members.end(), canonical_less));
  for (const auto& e : set.edges) {
    CHECK(conjugate(set.members[e.from], e.conjugator) == set.members[e.to]);
  }
  CHECK(connected(set));
}

}  // namespace

TEST_CASE("initial and final factors") {
  for (int k = 2; k <= 4; ++k) {
    CHECK(initial_factor(family::beta(k)) == simple({1, 3}));
    CHECK(final_factor(family::beta(k)) == simple({2, 1, 4, 3, 4}));
    CHECK(initial_factor(family::psi(k)) == simple({1, 2, 1, 4}));
  }
  const NormalForm x = mul(NormalForm::delta_power(3, 1), nf(3, {2}));
  CHECK(initial_factor(x) == PermutationBraid::generator(3, 1));
  CHECK_THROWS_AS(initial_factor(NormalForm::delta_power(5, 2)), std::domain_error);
  CHECK_THROWS_AS(final_factor(NormalForm::identity(5)), std::domain_error);
}

TEST_CASE("cycling and decycling") {
  const NormalForm b = family::beta(2);
  const NormalForm c = cycling(b);
  std::vector<PermutationBraid> rotated(b.factors().begin() + 1, b.factors().end());
  rotated.push_back(b.factors().front());
  CHECK(c.inf() == 0);
  CHECK(c.factors() == rotated);
  for (int m = -2; m <= 2; ++m) {
    const auto d = NormalForm::delta_power(5, m);
    CHECK(cycling(d) == d);
    CHECK(decycling(d) == d);
    CHECK(cyclic_sliding(d) == d);
    CHECK(is_rigid(d));
  }
  CHECK(cycling(family::psi(2)).canonical_length() == 7);
  CHECK(conjugate(b, initial_factor(b)) == c);
  CHECK(decycling(c) == b);
}

TEST_CASE("preferred prefix, sliding and rigidity") {
  for (int k = 2; k <= 3; ++k) {
    CHECK(preferred_prefix(family::beta(k)).is_identity());
    CHECK(cyclic_sliding(family::beta(k)) == family::beta(k));
    CHECK(is_rigid(family::beta(k)));
    CHECK_FALSE(is_rigid(family::psi(k)));
  }
  const NormalForm psi2 = family::psi(2);
  const auto iota = initial_factor(psi2);
  const auto dphi = complement(final_factor(psi2));
  PermutationBraid best = PermutationBraid::identity(5);
  for (const auto& u : all_simples(5)) {
    if (prefix_le(u, iota) && prefix_le(u, dphi) && u.length() > best.length()) best = u;
  }
  CHECK(preferred_prefix(psi2) == best);
  CHECK(preferred_prefix(psi2) == simple({1, 2, 1}));
  CHECK(meet(simple({1, 3}), simple({2, 1, 3, 2, 4})).is_identity());
}

TEST_CASE("send_to_sss and send_to_sc") {
  for (int k = 2; k <= 3; ++k) {
    CHECK(send_to_sss(family::psi(k)) == family::psi(k));
    CHECK(send_to_sc(family::beta(k)) == family::beta(k));
  }
  CHECK(send_to_sss(NormalForm::delta_power(5, 1)) == NormalForm::delta_power(5, 1));
  CHECK(send_to_sc(NormalForm::delta_power(5, 3)) == NormalForm::delta_power(5, 3));
  const NormalForm moved = conjugate(family::beta(2), PermutationBraid::generator(5, 1));
  CHECK(moved.canonical_length() == 8);
  CHECK(send_to_sss(moved).canonical_length() == 7);
  CHECK(orbit_closure(family::beta(2)).contains(send_to_sc(family::psi(2))));
}

TEST_CASE("send_to_sss minimizes length over sampled conjugates") {
  std::mt19937_64 rng(3);
  const auto simples = all_simples(4);
  std::uniform_int_distribution<std::size_t> pick(0, simples.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const NormalForm x = nf(4, oracle::random_word(rng, 4, 10));
    const NormalForm s = send_to_sss(x);
    for (int j = 0; j < 40; ++j) {
      NormalForm g = mul(NormalForm::from_simple(simples[pick(rng)]), inverse(NormalForm::from_simple(simples[pick(rng)])));
      const NormalForm y = conjugate(x, g);
      CHECK(y.inf() <= s.inf());
      CHECK(y.sup() >= s.sup());
    }
  }
}

TEST_CASE("enumeration of small sets") {
  for (int m = -1; m <= 2; ++m) {
    const auto set = enumerate(SetKind::SuperSummit, NormalForm::delta_power(5, m));
    CHECK(set.members.size() == 1);
  }
  const auto sss = enumerate(SetKind::SuperSummit, nf(3, {1}));
  CHECK(sss.members.size() == 2);
  check_set_invariants(sss);
}

TEST_CASE("SC and SSS of psi_2") {
  const auto sc = enumerate(SetKind::SlidingCircuits, family::psi(2));
  const auto orbit = orbit_closure(family::beta(2));
  CHECK(sc.members == orbit.members);
  CHECK(sc.members.size() == 14);
  check_set_invariants(sc);
  for (const auto& m : sc.members) CHECK(is_rigid(m));

  const auto sss = enumerate(SetKind::SuperSummit, family::psi(2));
  CHECK(sss.members.size() == 424);
  check_set_invariants(sss);
  for (const auto& m : sc.members) CHECK(sss.contains(m));
  for (const auto& m : sss.members) {
    CHECK(sss.contains(cycling(m)));
    CHECK(sss.contains(decycling(m)));
    CHECK(sss.contains(cyclic_sliding(m)));
  }
}

TEST_CASE("enumeration is independent of the starting conjugate and of jobs") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    const NormalForm x = nf(4, oracle::random_word(rng, 4, 8));
    const NormalForm g = nf(4, oracle::random_word(rng, 4, 6));
    const NormalForm y = conjugate(x, g);
    for (auto kind : {SetKind::SuperSummit, SetKind::SlidingCircuits}) {
      const auto a = enumerate(kind, x);
      const auto b = enumerate(kind, y);
      EnumerateOptions parallel;
      parallel.jobs = 4;
      const auto c = enumerate(kind, y, parallel);
      CHECK(a.members == b.members);
      CHECK(b.members == c.members);
      CHECK(b.edges.size() == c.edges.size());
      check_set_invariants(a);
    }
  }
}

TEST_CASE("enumeration cap") {
  EnumerateOptions tight;
  tight.member_cap = 10;
  try {
    (void)enumerate(SetKind::SuperSummit, family::psi(2), tight);
    FAIL("expected a resource limit");
  } catch (const ResourceLimitError& e) {
    CHECK(e.partial_count() > 10);
  }
}

TEST_CASE("transport") {
  const NormalForm b = family::beta(2);
  CHECK(transport(b, PermutationBraid::identity(5)).is_identity());
  CHECK(transport(b, initial_factor(b)) == initial_factor(cycling(b)));
  CHECK_THROWS_AS(transport(conjugate(b, PermutationBraid::generator(5, 1)), PermutationBraid::identity(5)),
                  std::domain_error);
  CHECK_THROWS_AS(transport(b, PermutationBraid::generator(5, 1)), std::domain_error);

  // Monotonicity among conjugators that stay in the SSS.
  const auto sss = enumerate(SetKind::SuperSummit, b);
  std::vector<PermutationBraid> admissible;
  for (const auto& s : all_simples(5)) {
    if (sss.contains(conjugate(b, s))) admissible.push_back(s);
  }
  REQUIRE(admissible.size() > 2);
  for (const auto& s : admissible) {
    for (const auto& t : admissible) {
      if (prefix_le(s, t)) CHECK(prefix_le(transport(b, s), transport(b, t)));
    }
  }
}

TEST_CASE("orbit closures") {
  const auto o2 = orbit_closure(family::beta(2));
  CHECK(o2.members.size() <= 14);
  CHECK(o2.members.size() == 14);
  CHECK(orbit_closure(NormalForm::delta_power(5, 2)).members.size() == 1);
  const auto o3 = orbit_closure(family::beta(3));
  for (const auto& m : o3.members) {
    CHECK(o3.contains(cycling(m)));
    CHECK(o3.contains(tau(m)));
  }
  CHECK(o3.members.size() <= 22);
  CHECK_THROWS_AS(orbit_closure(family::psi(2)), std::domain_error);
}

TEST_CASE("single-orbit certificate for beta_2") {
  const auto cert = verify_single_orbit_certificate(family::beta(2));
  CHECK(cert.pass);
  CHECK(cert.failures.empty());
  CHECK(cert.initial == simple({1, 3}));
  CHECK(cert.complement_of_final == simple({2, 1, 3, 2, 4}));
  std::map<std::vector<int>, std::pair<int, bool>> expected{
      {{1}, {8, false}},          {{3}, {7, false}},          {{2}, {8, false}},
      {{2, 1}, {8, false}},       {{2, 3}, {8, false}},       {{2, 1, 3}, {8, false}},
      {{2, 3, 4}, {8, false}},    {{2, 1, 3, 2}, {7, false}}, {{2, 1, 3, 4}, {8, false}}};
  REQUIRE(cert.prefixes.size() == expected.size());
  for (const auto& p : cert.prefixes) {
    bool found = false;
    for (const auto& [word, outcome] : expected) {
      if (*is_simple(BraidWord(5, word)) == p.prefix) {
        found = true;
        CHECK(p.canonical_length == outcome.first);
        CHECK(p.rigid == outcome.second);
        CHECK(p.excluded);
      }
    }
    CHECK(found);
  }
  CHECK(cert.initial_conjugate_in_orbit);
  CHECK(cert.complement_conjugate_in_orbit);
}
