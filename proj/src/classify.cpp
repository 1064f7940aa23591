#include "garside/classify.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace garside {

namespace {

OrbitScan scan(const NormalForm& rep, std::size_t orbit_size) {
  OrbitScan out{rep, orbit_size, {}, false};
  for (const auto& c : all_round_curves(rep.strands())) {
    const auto image = bgn_scan(rep, c).final_image();
    out.any_round = out.any_round || image.has_value();
    out.images.push_back({c, image});
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Periodic: return "Periodic";
    case Verdict::PseudoAnosovCertified: return "PseudoAnosovCertified";
    case Verdict::ReducibleCertified: return "ReducibleCertified";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<PowerRelation> is_periodic(const NormalForm& x) {
  if (x.is_delta_power()) return PowerRelation{1, x.inf()};
  const int n = x.strands();
  for (int m : {n - 1, n}) {
    const NormalForm y = power(x, m);
    if (y.is_delta_power()) return PowerRelation{m, y.inf()};
  }
  return std::nullopt;
}

bool compatible(const RoundCurve& a, const RoundCurve& b) {
  const bool apart = a.last < b.first || b.last < a.first;
  const bool nested = (a.first <= b.first && b.last <= a.last) || (b.first <= a.first && a.last <= b.last);
  return apart || nested;
}

std::optional<std::vector<RoundCurve>> invariant_round_multicurve(const NormalForm& x) {
  std::map<RoundCurve, RoundCurve> images;
  for (const auto& c : all_round_curves(x.strands())) {
    if (auto image = image_of_round(x, c)) images.emplace(c, *image);
  }
  std::optional<std::vector<RoundCurve>> best;
  for (const auto& [start, unused] : images) {
    std::vector<RoundCurve> cycle{start};
    auto it = images.find(start);
    while (it != images.end() && it->second != start && cycle.size() <= images.size()) {
      cycle.push_back(it->second);
      it = images.find(it->second);
    }
    if (it == images.end() || it->second != start) continue;
    bool ok = true;
    for (std::size_t i = 0; i < cycle.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < cycle.size() && ok; ++j) ok = compatible(cycle[i], cycle[j]);
    }
    if (!ok) continue;
    std::sort(cycle.begin(), cycle.end());
    if (!best || cycle.size() < best->size()) best = std::move(cycle);
  }
  return best;
}

NTVerdict classify_nt(const NormalForm& x, const ClassifyOptions& options) {
  NTVerdict out;
  if (auto relation = is_periodic(x)) {
    out.verdict = Verdict::Periodic;
    out.power = relation;
    return out;
  }

  ConjugacySet sc;
  try {
    sc = enumerate(SetKind::SlidingCircuits, x, options.enumeration);
  } catch (const ResourceLimitError& e) {
    out.verdict = Verdict::Unknown;
    out.reason = std::string("resource limit: ") + e.what();
    return out;
  }
  out.sc_size = sc.members.size();

  // Members come sorted, so each orbit is represented by its canonically
  // smallest element.
  std::unordered_set<NormalForm> covered;
  for (const auto& m : sc.members) {
    if (options.full_scan) {
      out.scans.push_back(scan(m, 1));
      continue;
    }
    if (covered.contains(m)) continue;
    const auto orbit = cycling_closure(m);
    covered.insert(orbit.begin(), orbit.end());
    out.scans.push_back(scan(m, orbit.size()));
  }

  const bool any_round =
      std::any_of(out.scans.begin(), out.scans.end(), [](const OrbitScan& s) { return s.any_round; });
  if (!any_round) {
    out.verdict = Verdict::PseudoAnosovCertified;
    return out;
  }

  for (const auto& m : sc.members) {
    if (auto curves = invariant_round_multicurve(m)) {
      out.verdict = Verdict::ReducibleCertified;
      out.reducing = InvariantMulticurve{m, std::move(*curves)};
      return out;
    }
  }

  out.verdict = Verdict::Unknown;
  out.reason = "a sliding-circuit element sends a round curve to a round curve, "
               "but no round multicurve is invariant";
  return out;
}

std::vector<std::string> replay_evidence(const NormalForm& x, const NTVerdict& verdict) {
  std::vector<std::string> problems;
  const auto periodic = is_periodic(x);
  switch (verdict.verdict) {
    case Verdict::Periodic: {
      if (!verdict.power) {
        problems.push_back("periodic verdict without a power relation");
        break;
      }
      if (power(x, verdict.power->m) != NormalForm::delta_power(x.strands(), verdict.power->l)) {
        problems.push_back("power relation does not hold");
      }
      break;
    }
    case Verdict::PseudoAnosovCertified: {
      if (periodic) problems.push_back("braid is periodic");
      std::size_t covered = 0;
      for (const auto& s : verdict.scans) {
        covered += s.orbit_size;
        if (!in_sliding_circuit(s.representative)) {
          problems.push_back("representative " + to_string(s.representative) + " is not a sliding circuit element");
        }
        for (const auto& c : all_round_curves(x.strands())) {
          if (image_of_round(s.representative, c)) {
            problems.push_back("representative sends " + to_string(c) + " to a round curve");
          }
        }
      }
      if (covered != verdict.sc_size) problems.push_back("scanned orbits do not cover the sliding circuits");
      break;
    }
    case Verdict::ReducibleCertified: {
      if (periodic) problems.push_back("braid is periodic");
      if (!verdict.reducing) {
        problems.push_back("reducible verdict without a multicurve");
        break;
      }
      const auto& r = *verdict.reducing;
      if (!in_sliding_circuit(r.member)) problems.push_back("multicurve witness is not a sliding circuit element");
      if (!enumerate(SetKind::SlidingCircuits, x).contains(r.member)) {
        problems.push_back("multicurve witness is not in the sliding circuits of x");
      }
      std::vector<RoundCurve> images;
      for (const auto& c : r.curves) {
        auto image = image_of_round(r.member, c);
        if (!image) {
          problems.push_back("curve " + to_string(c) + " has a non-round image");
          continue;
        }
        images.push_back(*image);
      }
      std::sort(images.begin(), images.end());
      if (images != r.curves) problems.push_back("multicurve is not invariant");
      for (std::size_t i = 0; i < r.curves.size(); ++i) {
        for (std::size_t j = i + 1; j < r.curves.size(); ++j) {
          if (!compatible(r.curves[i], r.curves[j])) problems.push_back("multicurve components intersect");
        }
      }
      break;
    }
    case Verdict::Unknown:
      if (periodic) problems.push_back("braid is periodic");
      break;
  }
  return problems;
}

}  // namespace garside
