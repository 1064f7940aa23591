#include "garside/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "garside/permutation.hpp"

namespace garside {

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 2 || n > kMaxStrands) {
    throw std::invalid_argument("strand count must lie in [2, " + std::to_string(kMaxStrands) +
                                "], got " + std::to_string(n));
  }
  for (int letter : letters_) {
    if (letter == 0 || std::abs(letter) >= n) {
      throw std::invalid_argument("generator " + std::to_string(letter) + " out of range for " +
                                  std::to_string(n) + " strands");
    }
  }
}

bool BraidWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](int l) { return l > 0; });
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(n_, std::move(out));
}

BraidWord BraidWord::power(int m) const {
  const BraidWord base = m < 0 ? inverse() : *this;
  BraidWord out = identity(n_);
  for (int i = 0; i < std::abs(m); ++i) out *= base;
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("concatenating words on different strand counts");
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

namespace words {

BraidWord sigma(int n, int i) { return BraidWord(n, {i}); }

BraidWord half_twist(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("half_twist: need 1 <= m <= n");
  std::vector<int> letters;
  for (int top = m - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) letters.push_back(i);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord delta3(int n) { return BraidWord(n, {2, 1}); }

BraidWord delta3_tilde(int n) { return BraidWord(n, {1, 2}); }

BraidWord from_letters(int n, std::initializer_list<int> letters) {
  return BraidWord(n, std::vector<int>(letters));
}

}  // namespace words

}  // namespace garside
