#include "garside/family.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>
#include <unordered_set>

#include "garside/classify.hpp"
#include "garside/curves.hpp"

namespace garside::family {

namespace {

constexpr int n = kStrands;

void require_k(int k) {
  if (k < 2) throw std::domain_error("the braid family is defined for k >= 2, got k = " + std::to_string(k));
}

BraidWord w(std::initializer_list<int> letters) { return words::from_letters(n, letters); }

// Named pieces of the closed forms.
BraidWord Delta3() { return words::half_twist(n, 3); }
BraidWord s(int i) { return words::sigma(n, i); }
BraidWord Delta3_s4() { return Delta3() * s(4); }
BraidWord delta3_s4_s3_s4() { return words::delta3(n) * w({4, 3, 4}); }

PermutationBraid simple(const BraidWord& word) {
  auto out = is_simple(word);
  if (!out) throw std::logic_error("expected a simple braid: " + to_string(word));
  return *out;
}

void repeat(std::vector<PermutationBraid>& out, const PermutationBraid& f, int times) {
  for (int i = 0; i < times; ++i) out.push_back(f);
}

std::vector<int> checked_bits(int k, std::span<const int> bits) {
  require_k(k);
  if (bits.size() != static_cast<std::size_t>(2 * k - 2)) {
    throw std::invalid_argument("expected " + std::to_string(2 * k - 2) + " bits, got " +
                                std::to_string(bits.size()));
  }
  for (int b : bits) {
    if (b != 1 && b != 2) throw std::invalid_argument("bits must be 1 or 2");
  }
  return {bits.begin(), bits.end()};
}

// a_t = a_{i_{t-1}, i_t} with i_0 = 1, for t = 1 .. 2k-2.
std::vector<Atom> atoms_of(std::span<const int> bits) {
  std::vector<Atom> out;
  int previous = 1;
  for (int b : bits) {
    out.push_back({previous, b});
    previous = b;
  }
  return out;
}

std::string factor_list(const std::vector<PermutationBraid>& fs) {
  std::string out;
  for (const auto& f : fs) out += to_string(f);
  return out;
}

}  // namespace

BraidWord atom_word(const Atom& a) {
  if (a.i == 1 && a.j == 1) return w({1});
  if (a.i == 1 && a.j == 2) return w({1, 2});
  if (a.i == 2 && a.j == 1) return w({2, 1});
  if (a.i == 2 && a.j == 2) return w({2});
  throw std::invalid_argument("atom indices must lie in {1, 2}");
}

PermutationBraid atom(const Atom& a) { return simple(atom_word(a)); }

BraidWord psi_word(int k) {
  require_k(k);
  return words::delta3(n).power(3 * k + 1) * s(4).power(2 * k + 2) * s(3) * s(4).power(2 * k - 1);
}

BraidWord tau_conjugator_word(int k) {
  require_k(k);
  return Delta3_s4().power(2 * k) * delta3_s4_s3_s4() * (s(3) * s(4) * Delta3()) *
         Delta3_s4().power(2 * k - 1) * delta3_s4_s3_s4();
}

NormalForm psi(int k) { return normal_form(psi_word(k)); }

NormalForm tau_conjugator(int k) { return normal_form(tau_conjugator_word(k)); }

NormalForm beta(int k) { return conjugate(psi(k), tau_conjugator(k)); }

std::vector<PermutationBraid> psi_expected_factors(int k) {
  require_k(k);
  std::vector<PermutationBraid> out;
  repeat(out, simple(Delta3_s4()), 2 * k);
  out.push_back(simple(delta3_s4_s3_s4()));
  out.push_back(simple(w({3, 4})));
  repeat(out, simple(s(4)), 2 * k - 3);
  return out;
}

std::vector<PermutationBraid> beta_expected_factors(int k) {
  require_k(k);
  std::vector<PermutationBraid> out;
  repeat(out, simple(w({1, 3})), 2 * k - 2);
  out.push_back(simple(w({3, 4}) * Delta3()));
  out.push_back(simple(Delta3_s4()));
  for (int i = 0; i < k - 1; ++i) {
    out.push_back(simple(words::delta3(n) * s(4)));
    out.push_back(simple(words::delta3_tilde(n) * s(4)));
  }
  out.push_back(simple(delta3_s4_s3_s4()));
  return out;
}

NormalForm witness_conjugator(int k, std::span<const int> bits) {
  const auto checked = checked_bits(k, bits);
  BraidWord word = BraidWord::identity(n);
  for (const auto& a : atoms_of(checked)) word *= atom_word(a);
  return normal_form(word);
}

NormalForm psi_variant(int k, std::span<const int> bits) {
  return conjugate(psi(k), witness_conjugator(k, bits));
}

std::vector<PermutationBraid> psi_variant_expected_factors(int k, std::span<const int> bits) {
  const auto atoms = atoms_of(checked_bits(k, bits));
  const PermutationBraid delta3 = simple(Delta3());
  const PermutationBraid s4 = simple(s(4));
  // Delta_3 a^{-1}, then conjugated by Delta_3 once per earlier atom.
  auto twisted_left_complement = [&](const PermutationBraid& a, std::size_t twists) {
    PermutationBraid y = compose(delta3, a.inverse_permutation());
    for (std::size_t i = 0; i < twists; ++i) y = compose(compose(delta3, y), delta3);
    return y;
  };

  std::vector<PermutationBraid> out;
  repeat(out, simple(Delta3_s4()), 2);
  for (std::size_t t = atoms.size(); t-- > 0;) {
    out.push_back(compose(twisted_left_complement(atom(atoms[t]), t), s4));
  }
  out.push_back(simple(delta3_s4_s3_s4()));
  out.push_back(compose(simple(w({3, 4})), atom(atoms.front())));
  for (std::size_t t = 1; t < atoms.size(); ++t) out.push_back(compose(s4, atom(atoms[t])));
  return out;
}

std::vector<std::vector<int>> all_bit_sequences(int k) {
  require_k(k);
  const int length = 2 * k - 2;
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << length); ++mask) {
    std::vector<int> bits(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = ((mask >> (length - 1 - i)) & 1u) ? 2 : 1;
    out.push_back(std::move(bits));
  }
  return out;
}

std::vector<NormalForm> sss_witnesses(int k) {
  const NormalForm base = psi(k);
  std::unordered_set<NormalForm> distinct;
  std::vector<NormalForm> out;
  for (const auto& bits : all_bit_sequences(k)) {
    NormalForm v = conjugate(base, witness_conjugator(k, bits));
    if (v.canonical_length() != 4 * k - 1) {
      throw std::logic_error("witness has canonical length " + std::to_string(v.canonical_length()));
    }
    if (!distinct.insert(v).second) throw std::logic_error("two bit sequences give the same witness");
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool FamilyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

FamilyReport verify_paper(int k, const VerifyOptions& options) {
  require_k(k);
  const int r = 4 * k - 1;
  const NormalForm x = psi(k);
  const NormalForm b = beta(k);
  const NormalForm t = tau_conjugator(k);
  const bool enumerate_sss = options.enumerate_sss.value_or(k == 2);

  using Task = std::function<Check()>;
  std::vector<Task> tasks;

  tasks.push_back([&] {
    const bool ok = x.inf() == 0 && x.sup() == r && x.factors() == psi_expected_factors(k);
    return Check{"psi normal form", ok, to_string(x)};
  });
  tasks.push_back([&] {
    const bool ok = b.inf() == 0 && b.sup() == r && b.factors() == beta_expected_factors(k);
    return Check{"beta normal form", ok, to_string(b)};
  });
  tasks.push_back([&] { return Check{"beta rigid", is_rigid(b), ""}; });
  tasks.push_back([&] {
    const NormalForm direct = mul(mul(inverse(t), x), t);
    return Check{"tau conjugates psi to beta", direct == b, "tau = " + to_string(t)};
  });
  tasks.push_back([&] {
    const auto cert = verify_single_orbit_certificate(b);
    std::string detail = std::to_string(cert.prefixes.size()) + " strict prefixes";
    for (const auto& f : cert.failures) detail += "; " + f;
    return Check{"single-orbit prefix certificate", cert.pass, detail};
  });
  tasks.push_back([&] {
    try {
      const auto sc = enumerate(SetKind::SlidingCircuits, x, options.enumeration);
      const auto orbit = orbit_closure(b);
      const bool ok = sc.members == orbit.members;
      return Check{"SC equals the orbit of beta", ok,
                   "|SC| = " + std::to_string(sc.members.size()) + ", |orbit| = " + std::to_string(orbit.members.size())};
    } catch (const ResourceLimitError& e) {
      return Check{"SC equals the orbit of beta", false, e.what()};
    }
  });
  tasks.push_back([&] { return Check{"not periodic", !is_periodic(x).has_value(), ""}; });
  tasks.push_back([&] {
    bool ok = true;
    std::string detail;
    for (const auto& c : all_round_curves(n)) {
      const auto trace = bgn_scan(b, c);
      if (trace.final_image()) {
        ok = false;
        detail += to_string(c) + " stays round; ";
      }
    }
    return Check{"beta sends no round curve to a round curve", ok, detail};
  });
  tasks.push_back([&] {
    ClassifyOptions copts;
    copts.enumeration = options.enumeration;
    const auto verdict = classify_nt(x, copts);
    return Check{"pseudo-Anosov certified", verdict.verdict == Verdict::PseudoAnosovCertified,
                 to_string(verdict.verdict) + (verdict.reason.empty() ? "" : ": " + verdict.reason)};
  });
  tasks.push_back([&] {
    try {
      const auto witnesses = sss_witnesses(k);
      const bool ok = witnesses.size() == (std::size_t{1} << (2 * k - 2));
      return Check{"SSS witnesses", ok, std::to_string(witnesses.size()) + " distinct, canonical length " +
                                            std::to_string(r)};
    } catch (const std::logic_error& e) {
      return Check{"SSS witnesses", false, e.what()};
    }
  });
  tasks.push_back([&] {
    bool ok = true;
    std::string detail;
    for (const auto& bits : all_bit_sequences(k)) {
      const auto expected = psi_variant_expected_factors(k, bits);
      const auto actual = psi_variant(k, bits);
      if (actual.inf() != 0 || actual.factors() != expected) {
        ok = false;
        detail = "mismatch: " + to_string(actual) + " vs " + factor_list(expected);
        break;
      }
    }
    return Check{"witness normal forms", ok, detail};
  });
  if (enumerate_sss) {
    tasks.push_back([&] {
      try {
        const auto sss = enumerate(SetKind::SuperSummit, x, options.enumeration);
        bool ok = true;
        for (const auto& v : sss_witnesses(k)) ok = ok && sss.contains(v);
        return Check{"witnesses lie in the enumerated SSS", ok, "|SSS| = " + std::to_string(sss.members.size())};
      } catch (const ResourceLimitError& e) {
        return Check{"witnesses lie in the enumerated SSS", false, e.what()};
      }
    });
  }

  FamilyReport report;
  report.k = k;
  if (options.jobs <= 1) {
    for (auto& task : tasks) report.checks.push_back(task());
  } else {
    std::vector<std::future<Check>> futures;
    for (auto& task : tasks) futures.push_back(std::async(std::launch::async, task));
    for (auto& f : futures) report.checks.push_back(f.get());
  }
  return report;
}

}  // namespace garside::family
