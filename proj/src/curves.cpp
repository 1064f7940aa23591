#include "garside/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace garside {

namespace {

void push_reduced(std::vector<int>& word, int letter) {
  if (!word.empty() && word.back() == -letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

std::vector<int> cyclically_reduced(const std::vector<int>& letters) {
  std::vector<int> word;
  word.reserve(letters.size());
  for (int l : letters) push_reduced(word, l);
  std::size_t lo = 0;
  std::size_t hi = word.size();
  while (hi - lo >= 2 && word[lo] == -word[hi - 1]) {
    ++lo;
    --hi;
  }
  return {word.begin() + static_cast<std::ptrdiff_t>(lo), word.begin() + static_cast<std::ptrdiff_t>(hi)};
}

// Image of the generator x_g (g >= 1) under sigma_i^{+-1}.
void generator_image(int letter, int g, std::vector<int>& out) {
  const int i = std::abs(letter);
  if (letter > 0) {
    if (g == i) {
      out = {i, i + 1, -i};
    } else if (g == i + 1) {
      out = {i};
    } else {
      out = {g};
    }
  } else {
    if (g == i) {
      out = {i + 1};
    } else if (g == i + 1) {
      out = {-(i + 1), i, i + 1};
    } else {
      out = {g};
    }
  }
}

// Total permutation of x, as positions of strands.
PermutationBraid permutation_of(const NormalForm& x) {
  const int n = x.strands();
  PermutationBraid perm = x.inf() % 2 == 0 ? PermutationBraid::identity(n) : PermutationBraid::delta(n);
  for (const auto& f : x.factors()) perm = compose(perm, f);
  return perm;
}

bool consecutive(const std::vector<int>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] != sorted[i - 1] + 1) return false;
  }
  return true;
}

CyclicWord apply_letters(const std::vector<int>& letters, CyclicWord c) {
  for (int l : letters) c = artin_apply_letter(l, c);
  return c;
}

// Delta^2 acts on free homotopy classes trivially, so only the parity of
// the Delta power matters.
CyclicWord apply_delta_power(int p, const CyclicWord& c) {
  if (p % 2 == 0) return c;
  return apply_letters(words::half_twist(c.strands(), c.strands()).letters(), c);
}

void check_curve(int n, const RoundCurve& c) {
  const int size = c.last - c.first + 1;
  if (c.first < 1 || c.last > n || size < 2 || size > n - 1) {
    throw std::invalid_argument("not an essential round curve on " + std::to_string(n) +
                                " punctures: " + to_string(c));
  }
}

}  // namespace

std::string to_string(const RoundCurve& c) {
  return "[" + std::to_string(c.first) + "," + std::to_string(c.last) + "]";
}

CyclicWord::CyclicWord(int n, std::vector<int> letters) : n_(n) {
  for (int l : letters) {
    if (l == 0 || std::abs(l) > n) {
      throw std::invalid_argument("free generator " + std::to_string(l) + " out of range");
    }
  }
  letters_ = cyclically_reduced(letters);
}

std::vector<int> CyclicWord::abelianization() const {
  std::vector<int> out(static_cast<std::size_t>(n_), 0);
  for (int l : letters_) out[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  return out;
}

bool CyclicWord::same_class(const CyclicWord& other) const {
  if (n_ != other.n_ || letters_.size() != other.letters_.size()) return false;
  if (letters_.empty()) return true;
  std::vector<int> doubled = letters_;
  doubled.insert(doubled.end(), letters_.begin(), letters_.end());
  return std::search(doubled.begin(), doubled.end(), other.letters_.begin(), other.letters_.end()) !=
         doubled.end();
}

std::vector<RoundCurve> all_round_curves(int n) {
  std::vector<RoundCurve> out;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      if (p == 1 && q == n) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

CyclicWord curve_class(int n, const RoundCurve& c) {
  check_curve(n, c);
  std::vector<int> letters;
  for (int i = c.first; i <= c.last; ++i) letters.push_back(i);
  return CyclicWord(n, std::move(letters));
}

CyclicWord artin_apply_letter(int letter, const CyclicWord& c) {
  if (letter == 0 || std::abs(letter) >= c.strands()) {
    throw std::invalid_argument("braid letter " + std::to_string(letter) + " out of range");
  }
  std::vector<int> out;
  out.reserve(c.size() + 8);
  std::vector<int> image;
  for (int l : c.letters()) {
    generator_image(letter, std::abs(l), image);
    if (l > 0) {
      for (int a : image) push_reduced(out, a);
    } else {
      for (auto it = image.rbegin(); it != image.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return CyclicWord(c.strands(), std::move(out));
}

CyclicWord artin_apply(const BraidWord& w, const CyclicWord& c) {
  if (w.strands() != c.strands()) throw std::invalid_argument("braid and curve on different strand counts");
  return apply_letters(w.letters(), c);
}

std::optional<RoundCurve> round_of_class(const CyclicWord& c) {
  const int n = c.strands();
  std::vector<int> word = c.letters();
  const int m = static_cast<int>(word.size());
  if (m < 2 || m > n - 1) return std::nullopt;
  if (std::all_of(word.begin(), word.end(), [](int l) { return l < 0; })) {
    std::reverse(word.begin(), word.end());
    for (int& l : word) l = -l;
  } else if (!std::all_of(word.begin(), word.end(), [](int l) { return l > 0; })) {
    return std::nullopt;
  }
  const int first = *std::min_element(word.begin(), word.end());
  const auto start = std::find(word.begin(), word.end(), first);
  std::rotate(word.begin(), start, word.end());
  for (int j = 0; j < m; ++j) {
    if (word[static_cast<std::size_t>(j)] != first + j) return std::nullopt;
  }
  return RoundCurve{first, first + m - 1};
}

std::vector<int> permuted_punctures(const NormalForm& x, const RoundCurve& c) {
  check_curve(x.strands(), c);
  const PermutationBraid perm = permutation_of(x);
  std::vector<int> out;
  for (int i = c.first; i <= c.last; ++i) out.push_back(perm[i - 1] + 1);
  std::sort(out.begin(), out.end());
  return out;
}

CyclicWord image_class(const NormalForm& x, const RoundCurve& c) {
  CyclicWord w = apply_delta_power(x.inf(), curve_class(x.strands(), c));
  for (const auto& f : x.factors()) w = apply_letters(f.positive_word(), w);
  return w;
}

std::optional<RoundCurve> image_of_round(const NormalForm& x, const RoundCurve& c) {
  if (!consecutive(permuted_punctures(x, c))) return std::nullopt;
  return round_of_class(image_class(x, c));
}

std::optional<RoundCurve> BgnTrace::final_image() const {
  if (exited_early || steps.empty()) return std::nullopt;
  return steps.back().image;
}

std::vector<std::string> BgnTrace::render() const {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    std::string line = s.label + ": ";
    if (s.image) {
      line += "round " + to_string(*s.image);
    } else {
      line += (exited_early && i + 1 == steps.size()) ? "non-round (exit)" : "non-round";
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

BgnTrace bgn_scan(const NormalForm& x, const RoundCurve& c, bool early_exit) {
  BgnTrace trace;
  trace.start = c;
  CyclicWord w = apply_delta_power(x.inf(), curve_class(x.strands(), c));
  trace.steps.push_back({"D^" + std::to_string(x.inf()), round_of_class(w)});
  for (std::size_t m = 0; m < x.factors().size(); ++m) {
    if (early_exit && !trace.steps.back().image) {
      trace.exited_early = true;
      return trace;
    }
    w = apply_letters(x.factors()[m].positive_word(), w);
    trace.steps.push_back({"x_" + std::to_string(m + 1), round_of_class(w)});
  }
  if (early_exit && !trace.steps.back().image && !x.factors().empty()) trace.exited_early = true;
  return trace;
}

}  // namespace garside
