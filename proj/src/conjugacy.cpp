#include "garside/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace garside {

namespace {

void require_length(const NormalForm& x, const char* what) {
  if (x.canonical_length() == 0) {
    throw std::domain_error(std::string(what) + " is undefined for a power of Delta");
  }
}

std::vector<NormalForm> sorted_canonically(std::vector<NormalForm> xs) {
  std::vector<std::pair<std::string, NormalForm>> keyed;
  keyed.reserve(xs.size());
  for (auto& x : xs) keyed.emplace_back(to_string(x), std::move(x));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<NormalForm> out;
  out.reserve(keyed.size());
  for (auto& [key, x] : keyed) out.push_back(std::move(x));
  return out;
}

bool by_length_then_images(const PermutationBraid& a, const PermutationBraid& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a < b;
}

}  // namespace

PermutationBraid initial_factor(const NormalForm& x) {
  require_length(x, "initial factor");
  return tau_power(x.factors().front(), x.inf());
}

PermutationBraid final_factor(const NormalForm& x) {
  require_length(x, "final factor");
  return x.factors().back();
}

NormalForm cycling(const NormalForm& x) {
  if (x.canonical_length() == 0) return x;
  return conjugate(x, initial_factor(x));
}

NormalForm decycling(const NormalForm& x) {
  if (x.canonical_length() == 0) return x;
  const NormalForm phi = NormalForm::from_simple(final_factor(x));
  return mul(mul(phi, x), inverse(phi));
}

PermutationBraid preferred_prefix(const NormalForm& x) {
  if (x.canonical_length() == 0) return PermutationBraid::identity(x.strands());
  return meet(initial_factor(x), complement(final_factor(x)));
}

NormalForm cyclic_sliding(const NormalForm& x) {
  if (x.canonical_length() == 0) return x;
  return conjugate(x, preferred_prefix(x));
}

bool is_rigid(const NormalForm& x) {
  if (x.canonical_length() == 0) return true;
  return left_weighted(final_factor(x), initial_factor(x));
}

NormalForm send_to_sss(const NormalForm& x) {
  // If inf is not maximal in the conjugacy class, some cycling within
  // |Delta| = n(n-1)/2 steps raises it; decycling behaves the same for sup.
  const int n = x.strands();
  const int bound = n * (n - 1) / 2;
  NormalForm best = x;
  NormalForm y = x;
  for (int stale = 0; stale < bound && y.canonical_length() > 0;) {
    y = cycling(y);
    if (y.inf() > best.inf()) {
      best = y;
      stale = 0;
    } else {
      ++stale;
    }
  }
  y = best;
  for (int stale = 0; stale < bound && y.canonical_length() > 0;) {
    y = decycling(y);
    if (y.sup() < best.sup()) {
      best = y;
      stale = 0;
    } else {
      ++stale;
    }
  }
  return best;
}

bool in_sliding_circuit(const NormalForm& x, std::size_t cap) {
  std::unordered_set<NormalForm> visited;
  NormalForm y = x;
  for (std::size_t step = 0; step < cap; ++step) {
    y = cyclic_sliding(y);
    if (y == x) return true;
    if (!visited.insert(y).second) return false;
  }
  throw ResourceLimitError("cyclic sliding did not close up within " + std::to_string(cap) + " steps",
                           visited.size());
}

NormalForm send_to_sc(const NormalForm& x, std::size_t cap) {
  std::unordered_map<NormalForm, std::size_t> seen;
  std::vector<NormalForm> trail;
  NormalForm y = send_to_sss(x);
  for (std::size_t step = 0; step <= cap; ++step) {
    auto [it, inserted] = seen.emplace(y, trail.size());
    if (!inserted) {
      std::vector<NormalForm> circuit(trail.begin() + static_cast<std::ptrdiff_t>(it->second), trail.end());
      return sorted_canonically(std::move(circuit)).front();
    }
    trail.push_back(y);
    y = cyclic_sliding(y);
  }
  throw ResourceLimitError("cyclic sliding did not become periodic within " + std::to_string(cap) + " steps",
                           trail.size());
}

std::string to_string(SetKind kind) { return kind == SetKind::SuperSummit ? "SSS" : "SC"; }

bool ConjugacySet::contains(const NormalForm& x) const {
  return std::any_of(members.begin(), members.end(), [&](const NormalForm& m) { return m == x; });
}

ConjugacySet enumerate(SetKind kind, const NormalForm& x, const EnumerateOptions& options) {
  const int n = x.strands();
  const NormalForm start =
      kind == SetKind::SuperSummit ? send_to_sss(x) : send_to_sc(x, options.sliding_cap);
  const int inf = start.inf();
  const int sup = start.sup();

  std::vector<PermutationBraid> candidates;
  for (auto& s : all_simples(n)) {
    if (!s.is_identity()) candidates.push_back(s);
  }

  std::vector<NormalForm> found{start};
  std::unordered_map<NormalForm, std::size_t> index{{start, 0}};
  std::unordered_set<NormalForm> rejected;
  struct RawEdge {
    std::size_t from;
    PermutationBraid conjugator;
    NormalForm target;
  };
  std::vector<RawEdge> raw_edges;

  std::vector<std::size_t> frontier{0};
  const int jobs = std::max(1, options.jobs);

  while (!frontier.empty()) {
    // Workers only read `index` and `rejected`; all insertion happens
    // below, in frontier order, so the result does not depend on `jobs`.
    struct Hit {
      PermutationBraid conjugator;
      NormalForm target;
      bool accepted;
    };
    std::vector<std::vector<Hit>> hits(frontier.size());
    auto expand = [&](std::size_t slot) {
      const NormalForm& a = found[frontier[slot]];
      for (const auto& s : candidates) {
        NormalForm b = conjugate(a, s);
        if (b.inf() != inf || b.sup() != sup) continue;
        bool accepted = true;
        if (kind == SetKind::SlidingCircuits && !index.contains(b)) {
          accepted = !rejected.contains(b) && in_sliding_circuit(b, options.sliding_cap);
        }
        hits[slot].push_back({s, std::move(b), accepted});
      }
    };
    if (jobs == 1 || frontier.size() == 1) {
      for (std::size_t slot = 0; slot < frontier.size(); ++slot) expand(slot);
    } else {
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
      for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          try {
            for (std::size_t slot = static_cast<std::size_t>(w); slot < frontier.size();
                 slot += static_cast<std::size_t>(jobs)) {
              expand(slot);
            }
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
      for (auto& t : workers) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    std::vector<std::size_t> next;
    for (std::size_t slot = 0; slot < frontier.size(); ++slot) {
      for (auto& hit : hits[slot]) {
        if (!hit.accepted) {
          rejected.insert(std::move(hit.target));
          continue;
        }
        auto [it, inserted] = index.emplace(hit.target, found.size());
        if (inserted) {
          found.push_back(hit.target);
          next.push_back(it->second);
          if (found.size() > options.member_cap) {
            throw ResourceLimitError(to_string(kind) + " enumeration exceeded the cap of " +
                                         std::to_string(options.member_cap) + " members",
                                     found.size());
          }
        }
        raw_edges.push_back({frontier[slot], hit.conjugator, std::move(hit.target)});
      }
    }
    frontier = std::move(next);
  }

  ConjugacySet result;
  result.kind = kind;
  result.inf = inf;
  result.sup = sup;
  result.members = sorted_canonically(found);
  std::unordered_map<NormalForm, std::size_t> position;
  for (std::size_t i = 0; i < result.members.size(); ++i) position.emplace(result.members[i], i);
  for (const auto& e : raw_edges) {
    result.edges.push_back({position.at(found[e.from]), e.conjugator, position.at(e.target)});
  }
  std::sort(result.edges.begin(), result.edges.end(), [](const ConjugacyEdge& a, const ConjugacyEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.conjugator != b.conjugator) return a.conjugator < b.conjugator;
    return a.to < b.to;
  });
  result.base = result.members.front();
  return result;
}

PermutationBraid transport(const NormalForm& x, const PermutationBraid& s) {
  auto in_sss = [](const NormalForm& z) {
    const NormalForm summit = send_to_sss(z);
    return summit.inf() == z.inf() && summit.sup() == z.sup();
  };
  if (!in_sss(x)) throw std::domain_error("transport: x is not in its super summit set");
  const NormalForm y = conjugate(x, s);
  if (!in_sss(y)) throw std::domain_error("transport: s^{-1} x s is not in the super summit set");

  const int n = x.strands();
  const auto iota_or_one = [n](const NormalForm& z) {
    return z.canonical_length() == 0 ? PermutationBraid::identity(n) : initial_factor(z);
  };
  const NormalForm t = mul(mul(inverse(NormalForm::from_simple(iota_or_one(x))), NormalForm::from_simple(s)),
                           NormalForm::from_simple(iota_or_one(y)));
  const auto simple = t.as_simple();
  if (!simple) throw std::logic_error("transport produced a non-simple braid: " + to_string(t));
  if (conjugate(cycling(x), *simple) != cycling(y)) {
    throw std::logic_error("transport does not conjugate cycling(x) to cycling(y)");
  }
  return *simple;
}

bool OrbitSet::contains(const NormalForm& x) const {
  return std::any_of(members.begin(), members.end(), [&](const NormalForm& m) { return m == x; });
}

std::vector<NormalForm> cycling_closure(const NormalForm& x) {
  std::unordered_set<NormalForm> seen{x};
  std::vector<NormalForm> out{x};
  std::deque<NormalForm> queue{x};
  while (!queue.empty()) {
    const NormalForm a = queue.front();
    queue.pop_front();
    for (NormalForm b : {cycling(a), tau(a)}) {
      if (seen.insert(b).second) {
        out.push_back(b);
        queue.push_back(std::move(b));
      }
    }
  }
  return sorted_canonically(std::move(out));
}

OrbitSet orbit_closure(const NormalForm& x) {
  if (!is_rigid(x)) throw std::domain_error("orbit_closure requires a rigid braid");
  return OrbitSet{cycling_closure(x)};
}

std::vector<PermutationBraid> strict_prefixes(const PermutationBraid& s) {
  std::vector<PermutationBraid> out;
  for (const auto& u : all_simples(s.strands())) {
    if (!u.is_identity() && u != s && prefix_le(u, s)) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), by_length_then_images);
  return out;
}

SingleOrbitCertificate verify_single_orbit_certificate(const NormalForm& x) {
  if (x.canonical_length() == 0) throw std::domain_error("certificate needs canonical length >= 1");
  if (!is_rigid(x)) throw std::domain_error("certificate needs a rigid braid");

  SingleOrbitCertificate cert;
  cert.base = x;
  cert.initial = initial_factor(x);
  cert.complement_of_final = complement(final_factor(x));
  const OrbitSet orbit = orbit_closure(x);
  cert.orbit_size = orbit.members.size();

  auto examine = [&](PrefixConjugate::Source source, const PermutationBraid& bound) {
    for (const auto& p : strict_prefixes(bound)) {
      PrefixConjugate entry{source, p, conjugate(x, p)};
      entry.canonical_length = entry.conjugate.canonical_length();
      entry.rigid = is_rigid(entry.conjugate);
      entry.same_inf_sup = entry.conjugate.inf() == x.inf() && entry.conjugate.sup() == x.sup();
      entry.excluded = !entry.same_inf_sup || !entry.rigid;
      if (!entry.excluded) {
        cert.failures.push_back("conjugate by prefix " + to_string(p) + " stays in the SSS and is rigid");
      }
      cert.prefixes.push_back(std::move(entry));
    }
  };
  examine(PrefixConjugate::Source::InitialFactor, cert.initial);
  examine(PrefixConjugate::Source::ComplementOfFinal, cert.complement_of_final);

  cert.initial_conjugate_in_orbit = orbit.contains(conjugate(x, cert.initial));
  cert.complement_conjugate_in_orbit = orbit.contains(conjugate(x, cert.complement_of_final));
  if (!cert.initial_conjugate_in_orbit) cert.failures.push_back("conjugate by iota(x) leaves the orbit");
  if (!cert.complement_conjugate_in_orbit) {
    cert.failures.push_back("conjugate by complement(phi(x)) leaves the orbit");
  }
  cert.pass = cert.failures.empty();
  return cert;
}

}  // namespace garside
