#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/normal_form.hpp"
#include "garside/permutation.hpp"

namespace garside {

/// Raised when an enumeration or iteration exceeds its configured budget.
/// Carries how far the computation got so callers can report a partial
/// result.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::size_t partial_count)
      : std::runtime_error(what), partial_count_(partial_count) {}
  std::size_t partial_count() const { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// Iota(x) = Delta^{-p} x_1 Delta^p. Throws std::domain_error when r = 0.
PermutationBraid initial_factor(const NormalForm& x);
/// Phi(x) = x_r. Throws std::domain_error when r = 0.
PermutationBraid final_factor(const NormalForm& x);

NormalForm cycling(const NormalForm& x);
NormalForm decycling(const NormalForm& x);

/// meet(iota(x), complement(phi(x))); the identity when r = 0.
PermutationBraid preferred_prefix(const NormalForm& x);
NormalForm cyclic_sliding(const NormalForm& x);

bool is_rigid(const NormalForm& x);

/// A conjugate of x with maximal inf and then minimal sup.
NormalForm send_to_sss(const NormalForm& x);

/// Slides a super summit element until it revisits itself, with a hard cap
/// of `cap` steps (exceeding it throws ResourceLimitError).
bool in_sliding_circuit(const NormalForm& x, std::size_t cap = 4096);

/// The canonically smallest element of the sliding circuit reached from
/// send_to_sss(x).
NormalForm send_to_sc(const NormalForm& x, std::size_t cap = 4096);

enum class SetKind { SuperSummit, SlidingCircuits };

std::string to_string(SetKind kind);

struct ConjugacyEdge {
  std::size_t from;
  PermutationBraid conjugator;
  std::size_t to;
};

/// An enumerated SSS or SC. Members are sorted by canonical serialization;
/// edges index into `members` and are sorted by (from, conjugator, to).
struct ConjugacySet {
  SetKind kind = SetKind::SuperSummit;
  NormalForm base;
  std::vector<NormalForm> members;
  std::vector<ConjugacyEdge> edges;
  int inf = 0;
  int sup = 0;

  bool contains(const NormalForm& x) const;
};

struct EnumerateOptions {
  std::size_t member_cap = 1'000'000;
  std::size_t sliding_cap = 4096;
  int jobs = 1;
};

/// Breadth-first closure under conjugation by nontrivial simple braids,
/// starting from send_to_sss / send_to_sc.
ConjugacySet enumerate(SetKind kind, const NormalForm& x, const EnumerateOptions& options = {});

/// s^{(1)} = iota(x)^{-1} s iota(y) with y = s^{-1} x s. Throws
/// std::domain_error if x or y is not a super summit element, and
/// std::logic_error if the transport fails to be simple or the cycling
/// square does not commute.
PermutationBraid transport(const NormalForm& x, const PermutationBraid& s);

/// Closure of a rigid element under cycling and conjugation by Delta.
struct OrbitSet {
  std::vector<NormalForm> members;  // canonical order

  bool contains(const NormalForm& x) const;
};

/// Throws std::domain_error if x is not rigid.
OrbitSet orbit_closure(const NormalForm& x);

/// Closure under cycling and Delta-conjugation without the rigidity
/// requirement.
std::vector<NormalForm> cycling_closure(const NormalForm& x);

struct PrefixConjugate {
  enum class Source { InitialFactor, ComplementOfFinal };
  Source source;
  PermutationBraid prefix;
  NormalForm conjugate;
  int canonical_length = 0;
  bool rigid = false;
  bool same_inf_sup = false;
  /// Outside the sliding circuits: either off the super summit set or not
  /// rigid while the base element is.
  bool excluded = false;
};

struct SingleOrbitCertificate {
  NormalForm base;
  PermutationBraid initial;
  PermutationBraid complement_of_final;
  std::vector<PrefixConjugate> prefixes;
  bool initial_conjugate_in_orbit = false;
  bool complement_conjugate_in_orbit = false;
  std::size_t orbit_size = 0;
  std::vector<std::string> failures;
  bool pass = false;
};

/// Checks every strict prefix of iota(x) and of complement(phi(x)) for a
/// rigid x: the conjugate must leave the SSS or be non-rigid, and the
/// conjugates by iota(x), complement(phi(x)) themselves must land in the
/// cycling/Delta orbit of x.
SingleOrbitCertificate verify_single_orbit_certificate(const NormalForm& x);

/// Nontrivial strict prefixes of s (excluding 1 and s), in canonical order.
std::vector<PermutationBraid> strict_prefixes(const PermutationBraid& s);

}  // namespace garside
