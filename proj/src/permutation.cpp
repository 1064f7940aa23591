#include "garside/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace garside {

namespace {

void check_strands(int n) {
  if (n < 2 || n > kMaxStrands) {
    throw std::invalid_argument("strand count must lie in [2, " + std::to_string(kMaxStrands) +
                                "], got " + std::to_string(n));
  }
}

void check_same(const PermutationBraid& s, const PermutationBraid& t) {
  if (s.strands() != t.strands()) {
    throw std::invalid_argument("simple braids on different strand counts");
  }
}

// Inversion sets over pairs of starting positions.
bool inversions_contained(const PermutationBraid& s, const PermutationBraid& t) {
  const int n = s.strands();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (s.crosses(a, b) && !t.crosses(a, b)) return false;
    }
  }
  return true;
}

}  // namespace

PermutationBraid PermutationBraid::identity(int n) {
  check_strands(n);
  PermutationBraid s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) s.image_[i] = static_cast<std::uint8_t>(i);
  return s;
}

PermutationBraid PermutationBraid::delta(int n) {
  check_strands(n);
  PermutationBraid s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) s.image_[i] = static_cast<std::uint8_t>(n - 1 - i);
  return s;
}

PermutationBraid PermutationBraid::generator(int n, int i) {
  if (i < 1 || i >= n) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for " +
                                std::to_string(n) + " strands");
  }
  PermutationBraid s = identity(n);
  std::swap(s.image_[i - 1], s.image_[i]);
  return s;
}

PermutationBraid PermutationBraid::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_strands(n);
  PermutationBraid s;
  s.n_ = static_cast<std::uint8_t>(n);
  std::vector<bool> seen(images.size(), false);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[v - 1] = true;
    s.image_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return s;
}

std::vector<int> PermutationBraid::images() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = image_[i] + 1;
  return out;
}

bool PermutationBraid::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

bool PermutationBraid::is_delta() const {
  for (int i = 0; i < n_; ++i) {
    if (image_[i] != n_ - 1 - i) return false;
  }
  return true;
}

int PermutationBraid::length() const {
  int count = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) count += crosses(a, b) ? 1 : 0;
  }
  return count;
}

PermutationBraid PermutationBraid::inverse_permutation() const {
  PermutationBraid s = *this;
  for (int i = 0; i < n_; ++i) s.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return s;
}

std::vector<int> PermutationBraid::positive_word() const {
  // target[pos] = final position of the strand currently at pos
  std::vector<int> target(n_);
  for (int i = 0; i < n_; ++i) target[i] = image_[i];
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int pos = 0; pos + 1 < n_; ++pos) {
      if (target[pos] > target[pos + 1]) {
        std::swap(target[pos], target[pos + 1]);
        word.push_back(pos + 1);
        swapped = true;
      }
    }
  }
  return word;
}

std::size_t PermutationBraid::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 31 + image_[i];
  return h;
}

PermutationBraid compose(const PermutationBraid& s, const PermutationBraid& t) {
  check_same(s, t);
  PermutationBraid out = s;
  for (int i = 0; i < s.n_; ++i) out.image_[i] = t.image_[s.image_[i]];
  return out;
}

PermutationBraid delta(int n) { return PermutationBraid::delta(n); }

PermutationBraid tau(const PermutationBraid& s) {
  const int n = s.n_;
  PermutationBraid out = s;
  for (int i = 0; i < n; ++i) out.image_[i] = static_cast<std::uint8_t>(n - 1 - s.image_[n - 1 - i]);
  return out;
}

PermutationBraid tau_power(const PermutationBraid& s, long long e) {
  return (e % 2 == 0) ? s : tau(s);
}

PermutationBraid complement(const PermutationBraid& s) {
  return compose(s.inverse_permutation(), delta(s.strands()));
}

PermutationBraid left_complement(const PermutationBraid& s) {
  return compose(delta(s.strands()), s.inverse_permutation());
}

bool prefix_le(const PermutationBraid& s, const PermutationBraid& t) {
  check_same(s, t);
  return inversions_contained(s, t);
}

bool suffix_ge(const PermutationBraid& s, const PermutationBraid& t) {
  check_same(s, t);
  return inversions_contained(t.inverse_permutation(), s.inverse_permutation());
}

PermutationBraid left_quotient(const PermutationBraid& u, const PermutationBraid& s) {
  if (!prefix_le(u, s)) throw std::invalid_argument("left_quotient: not a prefix");
  return compose(u.inverse_permutation(), s);
}

PermutationBraid right_quotient(const PermutationBraid& s, const PermutationBraid& t) {
  if (!suffix_ge(s, t)) throw std::invalid_argument("right_quotient: not a suffix");
  return compose(s, t.inverse_permutation());
}

bool product_is_simple(const PermutationBraid& s, const PermutationBraid& t) {
  return compose(s, t).length() == s.length() + t.length();
}

PermutationBraid meet(const PermutationBraid& s, const PermutationBraid& t) {
  check_same(s, t);
  const int n = s.strands();
  PermutationBraid u = PermutationBraid::identity(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i < n; ++i) {
      // u * sigma_i is simple iff the strands now at positions i-1, i have not crossed
      const PermutationBraid inv = u.inverse_permutation();
      if (inv[i - 1] > inv[i]) continue;
      PermutationBraid next = compose(u, PermutationBraid::generator(n, i));
      if (prefix_le(next, s) && prefix_le(next, t)) {
        u = next;
        grew = true;
      }
    }
  }
  return u;
}

std::vector<int> starting_set(const PermutationBraid& s) {
  if (s.is_identity()) throw std::domain_error("starting_set of the trivial braid");
  std::vector<int> out;
  for (int i = 1; i < s.strands(); ++i) {
    if (s.crosses(i - 1, i)) out.push_back(i);
  }
  return out;
}

std::vector<int> finishing_set(const PermutationBraid& s) {
  if (s.is_identity()) throw std::domain_error("finishing_set of the trivial braid");
  const PermutationBraid inv = s.inverse_permutation();
  std::vector<int> out;
  for (int i = 1; i < s.strands(); ++i) {
    if (inv.crosses(i - 1, i)) out.push_back(i);
  }
  return out;
}

bool left_weighted(const PermutationBraid& s, const PermutationBraid& t) {
  check_same(s, t);
  const PermutationBraid s_inv = s.inverse_permutation();
  for (int i = 1; i < s.strands(); ++i) {
    const bool in_start = t.crosses(i - 1, i);
    const bool in_finish = s_inv.crosses(i - 1, i);
    if (in_start && !in_finish) return false;
  }
  return true;
}

std::vector<PermutationBraid> all_simples(int n) {
  check_strands(n);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<PermutationBraid> out;
  do {
    out.push_back(PermutationBraid::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(const PermutationBraid& s) {
  std::string out = "(";
  for (int i = 0; i < s.strands(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s[i] + 1);
  }
  out += ')';
  return out;
}

}  // namespace garside
