#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/curves.hpp"
#include "garside/normal_form.hpp"

namespace garside {

enum class Verdict { Periodic, PseudoAnosovCertified, ReducibleCertified, Unknown };

std::string to_string(Verdict v);

/// x^m = Delta^l.
struct PowerRelation {
  int m = 0;
  int l = 0;
};

struct CurveImage {
  RoundCurve curve;
  std::optional<RoundCurve> image;
};

/// Round-curve images under one sliding-circuit element, standing for its
/// whole orbit under cycling and Delta-conjugation.
struct OrbitScan {
  NormalForm representative;
  std::size_t orbit_size = 0;
  std::vector<CurveImage> images;
  bool any_round = false;
};

/// A family of pairwise disjoint round curves permuted by `member`.
struct InvariantMulticurve {
  NormalForm member;
  std::vector<RoundCurve> curves;
};

struct NTVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<PowerRelation> power;
  std::size_t sc_size = 0;
  std::vector<OrbitScan> scans;
  std::optional<InvariantMulticurve> reducing;
  std::string reason;
};

struct ClassifyOptions {
  EnumerateOptions enumeration;
  /// Scan every sliding-circuit element instead of one per orbit.
  bool full_scan = false;
};

/// Tests m = n-1 and m = n (every periodic braid has one of these powers in
/// the centre). Powers of Delta report m = 1.
std::optional<PowerRelation> is_periodic(const NormalForm& x);

NTVerdict classify_nt(const NormalForm& x, const ClassifyOptions& options = {});

/// Re-executes the checks named in the evidence. Returns a list of
/// mismatches; empty means the verdict replays.
std::vector<std::string> replay_evidence(const NormalForm& x, const NTVerdict& verdict);

/// Whether two round curves can be realized disjointly (nested or apart).
bool compatible(const RoundCurve& a, const RoundCurve& b);

/// Smallest cycle of pairwise compatible round curves permuted by x.
std::optional<std::vector<RoundCurve>> invariant_round_multicurve(const NormalForm& x);

}  // namespace garside
