#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace garside {

/// A signed word in the Artin generators on `n` strands. Letter `i` stands
/// for sigma_i and `-i` for its inverse. No reduction is applied on
/// construction.
class BraidWord {
 public:
  BraidWord() = default;
  /// Throws std::invalid_argument on n < 2 or a letter outside +-[1, n-1].
  BraidWord(int n, std::vector<int> letters);

  static BraidWord identity(int n) { return BraidWord(n, {}); }

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  bool is_positive() const;

  BraidWord inverse() const;
  BraidWord power(int m) const;

  BraidWord& operator*=(const BraidWord& rhs);
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_ = 2;
  std::vector<int> letters_;
};

/// "1 2 -3"; the empty word prints as "".
std::string to_string(const BraidWord& w);

// Named words used throughout the braid family constructions.
namespace words {

BraidWord sigma(int n, int i);
/// Delta_m = (s_1 ... s_{m-1})(s_1 ... s_{m-2}) ... (s_1 s_2) s_1 inside B_n.
BraidWord half_twist(int n, int m);
/// delta_3 = s_2 s_1.
BraidWord delta3(int n);
/// s_1 s_2.
BraidWord delta3_tilde(int n);
BraidWord from_letters(int n, std::initializer_list<int> letters);

}  // namespace words

}  // namespace garside
