#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each suite returns how many cases ran and which ones failed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/curves.hpp"
#include "garside/normal_form.hpp"
#include "oracles.hpp"

namespace suites {

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline std::string show(const oracle::Word& w) {
  std::string s;
  for (int l : w) s += (s.empty() ? "" : " ") + std::to_string(l);
  return "[" + s + "]";
}

// Words related by free insertions, far commutations and braid relations
// have the same normal form.
inline Outcome normal_form_rewriting(int cases, std::uint64_t seed) {
  using namespace garside;
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int c = 0; c < cases; ++c, ++out.cases) {
    const int n = 3 + c % 3;
    const auto u = oracle::random_word(rng, n, 5 + c % 16);
    auto v = u;
    const int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) v = oracle::random_rewrite(rng, n, v);
    const NormalForm a = normal_form(BraidWord(n, u));
    const NormalForm b = normal_form(BraidWord(n, v));
    try {
      validate(a);
      validate(b);
    } catch (const std::exception& e) {
      out.fail(std::string("invalid normal form: ") + e.what());
      continue;
    }
    if (!(a == b)) out.fail("n=" + std::to_string(n) + " " + show(u) + " vs " + show(v));
  }
  return out;
}

// Transport of simple conjugators along cycling on random super summit
// elements: the square commutes and iota(x) goes to iota(cycling(x)).
inline Outcome transport_square(int cases, std::uint64_t seed) {
  using namespace garside;
  std::mt19937_64 rng(seed);
  Outcome out;
  while (out.cases < cases) {
    const int n = 4 + out.cases % 2;
    const NormalForm x = send_to_sss(normal_form(BraidWord(n, oracle::random_word(rng, n, 12))));
    if (x.canonical_length() == 0) continue;
    ++out.cases;
    const auto simples = all_simples(n);
    try {
      if (transport(x, initial_factor(x)) != initial_factor(cycling(x))) {
        out.fail("transport of iota(x) is not iota(cycling(x)) for " + to_string(x));
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0, simples.size() - 1);
      int tried = 0;
      for (int attempt = 0; attempt < 400 && tried < 3; ++attempt) {
        const auto& s = simples[pick(rng)];
        const NormalForm y = conjugate(x, s);
        if (y.inf() != x.inf() || y.sup() != x.sup()) continue;
        ++tried;
        const PermutationBraid t = transport(x, s);
        if (conjugate(cycling(x), t) != cycling(y)) out.fail("square fails for " + to_string(x) + " by " + to_string(s));
      }
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what() + " on " + to_string(x));
    }
  }
  return out;
}

// If the image of a round curve under a normal form is round, so is its
// image under every prefix of the normal form.
inline Outcome bgn_prefix_roundness(int cases, std::uint64_t seed, int* round_finals = nullptr) {
  using namespace garside;
  std::mt19937_64 rng(seed);
  Outcome out;
  int rounds = 0;
  for (int c = 0; c < cases; ++c, ++out.cases) {
    const int n = 4 + c % 3;
    // Leaving out one generator keeps many round curves round.
    const int missing = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    oracle::Word w;
    for (int l : oracle::random_word(rng, n, 6 + c % 10)) {
      if (std::abs(l) != missing || c % 4 == 0) w.push_back(l);
    }
    const NormalForm x = normal_form(BraidWord(n, w));
    for (const auto& curve : all_round_curves(n)) {
      const BgnTrace trace = bgn_scan(x, curve, false);
      const auto final = trace.final_image();
      if (final != image_of_round(x, curve)) out.fail("trace end disagrees with image_of_round on " + show(w));
      if (!final) continue;
      ++rounds;
      for (const auto& step : trace.steps) {
        if (!step.image) out.fail("non-round prefix image for " + to_string(curve) + " under " + to_string(x));
      }
    }
  }
  if (round_finals) *round_finals = rounds;
  return out;
}

// SC(x) is contained in SSS(x).
inline Outcome sliding_circuits_in_super_summit(int cases, std::uint64_t seed) {
  using namespace garside;
  std::mt19937_64 rng(seed);
  Outcome out;
  while (out.cases < cases) {
    const NormalForm x = normal_form(BraidWord(5, oracle::random_word(rng, 5, 2 + out.cases % 6)));
    if (x.canonical_length() > 4) continue;
    ++out.cases;
    const auto sc = enumerate(SetKind::SlidingCircuits, x);
    const auto sss = enumerate(SetKind::SuperSummit, x);
    for (const auto& m : sc.members) {
      if (!sss.contains(m)) {
        out.fail(to_string(m) + " in SC but not in SSS of " + to_string(x));
        break;
      }
    }
  }
  return out;
}

// The Artin action respects the braid relations and is an action.
inline Outcome artin_relations(int cases, std::uint64_t seed) {
  using namespace garside;
  std::mt19937_64 rng(seed);
  Outcome out;
  const int n = 5;
  for (int c = 0; c < cases; ++c, ++out.cases) {
    std::vector<int> letters;
    for (int i = 0; i < 3 + c % 10; ++i) {
      const int g = 1 + static_cast<int>(rng() % n);
      letters.push_back(rng() % 2 ? g : -g);
    }
    const CyclicWord cls(n, letters);
    const int i = 1 + static_cast<int>(rng() % (n - 2));
    const int j = 1 + static_cast<int>(rng() % (n - 1));
    const int far = 1 + static_cast<int>(rng() % (n - 1));
    auto act = [&](std::vector<int> w) { return artin_apply(BraidWord(n, std::move(w)), cls); };
    if (!act({i, i + 1, i}).same_class(act({i + 1, i, i + 1}))) out.fail("braid relation at " + std::to_string(i));
    if (std::abs(j - far) >= 2 && !act({j, far}).same_class(act({far, j}))) out.fail("far commutation");
    if (!act({j, -j}).same_class(cls) || !act({-j, j}).same_class(cls)) out.fail("inverse letters");
    const auto u = oracle::random_word(rng, n, 4);
    const auto v = oracle::random_word(rng, n, 4);
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    if (!act(uv).same_class(artin_apply(BraidWord(n, v), act(u)))) out.fail("action law on " + show(uv));
  }
  return out;
}

}  // namespace suites
