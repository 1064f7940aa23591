#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "garside/braid_word.hpp"
#include "garside/permutation.hpp"

namespace garside {

/// Left normal form Delta^p x_1 ... x_r: the canonical value type for braid
/// group elements. Factors are simple, never trivial and never Delta, and
/// every adjacent pair is left-weighted, so two NormalForms are equal as
/// group elements exactly when their fields are equal.
class NormalForm {
 public:
  NormalForm() = default;

  static NormalForm identity(int n);
  static NormalForm delta_power(int n, int p);
  static NormalForm from_simple(const PermutationBraid& s);
  /// Normal form of Delta^p s_1 ... s_m for arbitrary simple s_i.
  static NormalForm from_factors(int n, int p, std::span<const PermutationBraid> simples);

  int strands() const { return n_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + canonical_length(); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<PermutationBraid>& factors() const { return factors_; }

  bool is_delta_power() const { return factors_.empty(); }
  /// Simple elements are the identity, Delta, and single-factor forms with p = 0.
  std::optional<PermutationBraid> as_simple() const;

  std::size_t hash() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  NormalForm(int n, int p, std::vector<PermutationBraid> factors)
      : n_(n), inf_(p), factors_(std::move(factors)) {}

  int n_ = 2;
  int inf_ = 0;
  std::vector<PermutationBraid> factors_;
};

NormalForm normal_form(const BraidWord& w);

/// The simple braid represented by `w`, when `w` is a positive word in
/// which no pair of strands crosses twice.
std::optional<PermutationBraid> is_simple(const BraidWord& w);

NormalForm mul(const NormalForm& x, const NormalForm& y);
NormalForm inverse(const NormalForm& x);
NormalForm power(const NormalForm& x, int m);

/// g^{-1} x g.
NormalForm conjugate(const NormalForm& x, const NormalForm& g);
/// s^{-1} x s for a simple s.
NormalForm conjugate(const NormalForm& x, const PermutationBraid& s);
/// Delta^{-1} x Delta, i.e. tau applied to every factor.
NormalForm tau(const NormalForm& x);

/// Word expansion: Delta^p as the standard half-twist word, factors via
/// their bubble-sort words.
BraidWord to_word(const NormalForm& x);

/// Throws std::logic_error naming the violated invariant.
void validate(const NormalForm& x);

/// "D^p (..)(..)" with one-line permutations; the canonical serialization
/// used for ordering and hashing sets of normal forms.
std::string to_string(const NormalForm& x);

/// Lexicographic order on to_string.
bool canonical_less(const NormalForm& a, const NormalForm& b);

}  // namespace garside

template <>
struct std::hash<garside::NormalForm> {
  std::size_t operator()(const garside::NormalForm& x) const noexcept { return x.hash(); }
};
