#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace garside {

/// Largest strand count supported by the inline permutation storage.
inline constexpr int kMaxStrands = 32;

/// A simple (permutation) braid: a positive braid in which every pair of
/// strands crosses at most once. Stored as the permutation sending the
/// starting position of each strand to its final position (0-based).
///
/// Products read left to right: in `s * t` the strands first follow `s`,
/// then `t`.
class PermutationBraid {
 public:
  PermutationBraid() = default;

  static PermutationBraid identity(int n);
  static PermutationBraid delta(int n);
  /// sigma_i for 1 <= i <= n-1.
  static PermutationBraid generator(int n, int i);
  /// One-line notation, 1-based images. Throws std::invalid_argument if
  /// the images are not a bijection of {1..n}.
  static PermutationBraid from_images(std::span<const int> images);

  int strands() const { return n_; }
  /// 0-based final position of the strand starting at position `i`.
  int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
  std::vector<int> images() const;  // 1-based

  bool is_identity() const;
  bool is_delta() const;
  /// Number of crossings (length as a positive word).
  int length() const;
  /// Whether the strands starting at positions a < b cross.
  bool crosses(int a, int b) const { return (*this)[a] > (*this)[b]; }

  PermutationBraid inverse_permutation() const;

  /// A positive word (1-based generator indices) obtained by bubble sort.
  std::vector<int> positive_word() const;

  std::size_t hash() const;

  friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;
  friend std::strong_ordering operator<=>(const PermutationBraid&, const PermutationBraid&) = default;

 private:
  friend PermutationBraid compose(const PermutationBraid& s, const PermutationBraid& t);
  friend PermutationBraid tau(const PermutationBraid& s);

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> image_{};
};

/// Composition of permutations, with no simplicity check.
PermutationBraid compose(const PermutationBraid& s, const PermutationBraid& t);

PermutationBraid delta(int n);
/// Conjugation by the half twist: Delta^{-1} s Delta.
PermutationBraid tau(const PermutationBraid& s);
PermutationBraid tau_power(const PermutationBraid& s, long long e);
/// Right complement: s^{-1} Delta.
PermutationBraid complement(const PermutationBraid& s);
/// Left complement: Delta s^{-1}.
PermutationBraid left_complement(const PermutationBraid& s);

/// s <= t in the prefix order (s^{-1} t positive).
bool prefix_le(const PermutationBraid& s, const PermutationBraid& t);
/// s >= t in the suffix order (s t^{-1} positive).
bool suffix_ge(const PermutationBraid& s, const PermutationBraid& t);

/// u^{-1} s, requires u <= s.
PermutationBraid left_quotient(const PermutationBraid& u, const PermutationBraid& s);
/// s t^{-1}, requires s >= t.
PermutationBraid right_quotient(const PermutationBraid& s, const PermutationBraid& t);

/// s * t if the product is again simple.
bool product_is_simple(const PermutationBraid& s, const PermutationBraid& t);

/// Greatest common prefix.
PermutationBraid meet(const PermutationBraid& s, const PermutationBraid& t);

/// Generators sigma_i (1-based i) with sigma_i <= s. Throws on the identity.
std::vector<int> starting_set(const PermutationBraid& s);
/// Generators sigma_i with s >= sigma_i. Throws on the identity.
std::vector<int> finishing_set(const PermutationBraid& s);

/// No generator can be moved from the head of t into s.
bool left_weighted(const PermutationBraid& s, const PermutationBraid& t);

/// All n! simple braids, in lexicographic order of their images.
std::vector<PermutationBraid> all_simples(int n);

/// "(2 1 3 4 5)".
std::string to_string(const PermutationBraid& s);

}  // namespace garside

template <>
struct std::hash<garside::PermutationBraid> {
  std::size_t operator()(const garside::PermutationBraid& s) const noexcept { return s.hash(); }
};
