#include <doctest.h>

#include <set>

#include "garside/family.hpp"
#include "oracles.hpp"

using namespace garside;
using namespace garside::family;

namespace {

PermutationBraid simple(std::initializer_list<int> letters) { return *is_simple(words::from_letters(5, letters)); }

}  // namespace

TEST_CASE("atoms") {
  CHECK(atom({1, 1}) == simple({1}));
  CHECK(atom({1, 2}) == simple({1, 2}));
  CHECK(atom({2, 1}) == simple({2, 1}));
  CHECK(atom({2, 2}) == simple({2}));
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      CHECK(starting_set(atom({i, j})) == std::vector<int>{i});
      CHECK(finishing_set(atom({i, j})) == std::vector<int>{j});
    }
  }
}

TEST_CASE("psi, beta and tau for k = 2..5") {
  for (int k = 2; k <= 5; ++k) {
    CAPTURE(k);
    const NormalForm p = psi(k);
    const NormalForm b = beta(k);
    CHECK(p.inf() == 0);
    CHECK(p.sup() == 4 * k - 1);
    CHECK(p.factors() == psi_expected_factors(k));
    CHECK(b.inf() == 0);
    CHECK(b.sup() == 4 * k - 1);
    CHECK(b.factors() == beta_expected_factors(k));
    CHECK(is_rigid(b));
    CHECK(mul(mul(inverse(tau_conjugator(k)), p), tau_conjugator(k)) == b);
    CHECK(oracle::same_braid(5, to_word(p).letters(), psi_word(k).letters()));
  }
  CHECK_THROWS_AS(psi(1), std::domain_error);
  CHECK_THROWS_AS(beta(1), std::domain_error);
  CHECK_THROWS_AS(verify_paper(1), std::domain_error);
}

TEST_CASE("witness skeleton and left weighting chain") {
  for (int k = 2; k <= 4; ++k) {
    for (const auto& bits : all_bit_sequences(k)) {
      const NormalForm v = psi_variant(k, bits);
      CHECK(v.inf() == 0);
      CHECK(v.canonical_length() == 4 * k - 1);
      CHECK(v.factors() == psi_variant_expected_factors(k, bits));
      CHECK(conjugate(psi(k), witness_conjugator(k, bits)) == v);
      const auto& f = v.factors();
      for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(left_weighted(f[i], f[i + 1]));
    }
  }
  CHECK_THROWS(psi_variant(2, std::vector<int>{1}));
  CHECK_THROWS(psi_variant(2, std::vector<int>{1, 3}));
}

TEST_CASE("witnesses are pairwise distinct") {
  for (int k = 2; k <= 6; ++k) {
    const auto witnesses = sss_witnesses(k);
    CHECK(witnesses.size() == (std::size_t{1} << (2 * k - 2)));
    std::set<std::string> keys;
    for (const auto& w : witnesses) keys.insert(to_string(w));
    CHECK(keys.size() == witnesses.size());
  }
}

TEST_CASE("witnesses lie in the enumerated SSS for k = 2") {
  const auto sss = enumerate(SetKind::SuperSummit, psi(2));
  for (const auto& w : sss_witnesses(2)) CHECK(sss.contains(w));
}

TEST_CASE("family report") {
  const auto report = verify_paper(2);
  CHECK(report.pass());
  CHECK(report.checks.size() == 12);
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  VerifyOptions parallel;
  parallel.jobs = 4;
  const auto again = verify_paper(2, parallel);
  REQUIRE(again.checks.size() == report.checks.size());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    CHECK(again.checks[i].name == report.checks[i].name);
    CHECK(again.checks[i].detail == report.checks[i].detail);
  }
}
