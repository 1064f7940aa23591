#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "garside/braid_word.hpp"
#include "garside/normal_form.hpp"

namespace garside {

/// An essential round curve enclosing the consecutive punctures
/// first..last (1-based), with 2 <= last - first + 1 <= n - 1.
struct RoundCurve {
  int first = 1;
  int last = 2;

  friend auto operator<=>(const RoundCurve&, const RoundCurve&) = default;
};

std::string to_string(const RoundCurve& c);

/// Free homotopy class of a closed curve, as a freely and cyclically
/// reduced word in x_1..x_n (letter +-i for x_i^{+-1}).
class CyclicWord {
 public:
  CyclicWord(int n, std::vector<int> letters);  // reduces on construction

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  /// Exponent sum of each generator (index 0 for x_1).
  std::vector<int> abelianization() const;

  /// Equality as cyclic words (rotation-invariant).
  bool same_class(const CyclicWord& other) const;

 private:
  int n_;
  std::vector<int> letters_;
};

/// All essential round curves on n punctures, sorted by (first, last).
std::vector<RoundCurve> all_round_curves(int n);

/// x_first x_{first+1} ... x_last.
CyclicWord curve_class(int n, const RoundCurve& c);

/// Action of sigma_i (i > 0) or its inverse (i < 0) on one cyclic word:
/// x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.
CyclicWord artin_apply_letter(int letter, const CyclicWord& c);
/// Letters act in reading order: the leftmost letter acts first.
CyclicWord artin_apply(const BraidWord& w, const CyclicWord& c);

std::optional<RoundCurve> round_of_class(const CyclicWord& c);

/// The image of a round curve under x, if it is round. Uses the induced
/// permutation as an exact filter before computing the image word.
std::optional<RoundCurve> image_of_round(const NormalForm& x, const RoundCurve& c);

/// Image under x computed without any shortcut.
CyclicWord image_class(const NormalForm& x, const RoundCurve& c);

struct BgnStep {
  std::string label;  // "D^p" or "x_m"
  std::optional<RoundCurve> image;
};

/// Images of a round curve under the successive prefixes Delta^p,
/// Delta^p x_1, ..., Delta^p x_1...x_r.
struct BgnTrace {
  RoundCurve start;
  std::vector<BgnStep> steps;
  bool exited_early = false;

  /// Image after the last computed prefix; absent after an early exit.
  std::optional<RoundCurve> final_image() const;
  /// One line per prefix: "round [p,q]" or "non-round (exit)".
  std::vector<std::string> render() const;
};

/// With `early_exit`, stops at the first non-round prefix image: by the
/// prefix property of left normal forms the final image is then non-round.
BgnTrace bgn_scan(const NormalForm& x, const RoundCurve& c, bool early_exit = true);

/// Positions reached by the punctures of c under the permutation of x.
std::vector<int> permuted_punctures(const NormalForm& x, const RoundCurve& c);

}  // namespace garside
