#include "garside/normal_form.hpp"

#include <cstdlib>
#include <stdexcept>

namespace garside {

namespace {

// Delta^p f_1 ... f_m under construction. Invariant between calls: the
// factors are left-weighted pairwise and contain no identity factors.
class Builder {
 public:
  Builder(int n, long long p) : n_(n), p_(p) {}
  Builder(int n, long long p, std::vector<PermutationBraid> normal_factors)
      : n_(n), p_(p), f_(std::move(normal_factors)) {}

  // Right multiplication by a simple, restoring left-weightedness from the
  // right end backwards.
  void append(const PermutationBraid& s) {
    if (s.is_identity()) return;
    if (s.is_delta()) {
      // f * Delta = Delta * tau(f)
      ++p_;
      for (auto& x : f_) x = tau(x);
      return;
    }
    f_.push_back(s);
    for (std::size_t j = f_.size() - 1; j > 0; --j) {
      if (!weight_pair(j - 1)) break;
    }
    while (!f_.empty() && f_.back().is_identity()) f_.pop_back();
  }

  // Left multiplication (after the Delta power) by a simple, restoring
  // left-weightedness from the front forwards.
  void prepend(const PermutationBraid& s) {
    if (s.is_identity()) return;
    if (s.is_delta()) {
      ++p_;
      return;
    }
    f_.insert(f_.begin(), s);
    for (std::size_t j = 0; j + 1 < f_.size(); ++j) {
      if (!weight_pair(j)) break;
    }
    std::erase_if(f_, [](const PermutationBraid& x) { return x.is_identity(); });
  }

  NormalForm finish() && {
    std::size_t lead = 0;
    while (lead < f_.size() && f_[lead].is_delta()) ++lead;
    p_ += static_cast<long long>(lead);
    f_.erase(f_.begin(), f_.begin() + static_cast<std::ptrdiff_t>(lead));
    std::erase_if(f_, [](const PermutationBraid& x) { return x.is_identity(); });
    return NormalForm::from_factors(n_, static_cast<int>(p_), f_);
  }

  long long inf() const { return p_; }
  std::vector<PermutationBraid>& factors() { return f_; }

 private:
  // Moves the largest possible prefix of f_[j+1] into f_[j]. Returns
  // whether anything moved.
  bool weight_pair(std::size_t j) {
    PermutationBraid& a = f_[j];
    PermutationBraid& b = f_[j + 1];
    const PermutationBraid t = meet(complement(a), b);
    if (t.is_identity()) return false;
    a = compose(a, t);
    b = left_quotient(t, b);
    return true;
  }

  int n_;
  long long p_;
  std::vector<PermutationBraid> f_;
};

// Feeds simples into the builder, merging neighbours whose product stays
// simple.
void append_merged(Builder& builder, const std::vector<PermutationBraid>& simples) {
  std::optional<PermutationBraid> pending;
  for (const auto& s : simples) {
    if (pending && product_is_simple(*pending, s)) {
      pending = compose(*pending, s);
      continue;
    }
    if (pending) builder.append(*pending);
    pending = s;
  }
  if (pending) builder.append(*pending);
}

void check_same(const NormalForm& x, const NormalForm& y) {
  if (x.strands() != y.strands()) {
    throw std::invalid_argument("braids on different strand counts (" + std::to_string(x.strands()) +
                                " vs " + std::to_string(y.strands()) + ")");
  }
}

}  // namespace

NormalForm NormalForm::identity(int n) { return delta_power(n, 0); }

NormalForm NormalForm::delta_power(int n, int p) {
  (void)PermutationBraid::identity(n);  // validates n
  return NormalForm(n, p, {});
}

NormalForm NormalForm::from_simple(const PermutationBraid& s) {
  if (s.is_identity()) return identity(s.strands());
  if (s.is_delta()) return delta_power(s.strands(), 1);
  return NormalForm(s.strands(), 0, {s});
}

NormalForm NormalForm::from_factors(int n, int p, std::span<const PermutationBraid> simples) {
  bool already_normal = true;
  for (std::size_t i = 0; i < simples.size() && already_normal; ++i) {
    if (simples[i].strands() != n) throw std::invalid_argument("factor on the wrong strand count");
    if (simples[i].is_identity() || simples[i].is_delta()) already_normal = false;
    if (i > 0 && already_normal && !left_weighted(simples[i - 1], simples[i])) already_normal = false;
  }
  if (already_normal) {
    return NormalForm(n, p, std::vector<PermutationBraid>(simples.begin(), simples.end()));
  }
  Builder builder(n, p);
  for (const auto& s : simples) builder.append(s);
  return std::move(builder).finish();
}

std::optional<PermutationBraid> NormalForm::as_simple() const {
  if (factors_.empty()) {
    if (inf_ == 0) return PermutationBraid::identity(n_);
    if (inf_ == 1) return PermutationBraid::delta(n_);
    return std::nullopt;
  }
  if (inf_ == 0 && factors_.size() == 1) return factors_.front();
  return std::nullopt;
}

std::size_t NormalForm::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 1000003u + static_cast<std::size_t>(inf_ + 1000);
  for (const auto& f : factors_) h = h * 0x9e3779b97f4a7c15ull + f.hash();
  return h;
}

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  const auto& letters = w.letters();
  // sigma_i^{-1} = complement(sigma_i) Delta^{-1}; every Delta^{-1} is then
  // moved to the front, twisting each simple to its left by tau.
  long long delta_after = 0;
  std::vector<PermutationBraid> simples(letters.size());
  for (std::size_t k = letters.size(); k-- > 0;) {
    const int l = letters[k];
    PermutationBraid s = PermutationBraid::generator(n, std::abs(l));
    if (l < 0) {
      s = complement(s);
      --delta_after;
    }
    simples[k] = tau_power(s, delta_after);
  }
  Builder builder(n, delta_after);
  append_merged(builder, simples);
  return std::move(builder).finish();
}

std::optional<PermutationBraid> is_simple(const BraidWord& w) {
  if (!w.is_positive()) return std::nullopt;
  const int n = w.strands();
  PermutationBraid s = PermutationBraid::identity(n);
  for (int l : w.letters()) {
    const PermutationBraid g = PermutationBraid::generator(n, l);
    if (!product_is_simple(s, g)) return std::nullopt;
    s = compose(s, g);
  }
  return s;
}

NormalForm mul(const NormalForm& x, const NormalForm& y) {
  check_same(x, y);
  std::vector<PermutationBraid> head = x.factors();
  if (y.inf() % 2 != 0) {
    for (auto& f : head) f = tau(f);
  }
  Builder builder(x.strands(), static_cast<long long>(x.inf()) + y.inf(), std::move(head));
  for (const auto& f : y.factors()) builder.append(f);
  return std::move(builder).finish();
}

NormalForm inverse(const NormalForm& x) {
  // x^{-1} = prod_{i=r..1} complement(x_i) Delta^{-1} * Delta^{-p}
  const int r = x.canonical_length();
  const long long p = x.inf();
  Builder builder(x.strands(), -p - r);
  for (int i = r; i >= 1; --i) {
    builder.append(tau_power(complement(x.factors()[i - 1]), i + p));
  }
  return std::move(builder).finish();
}

NormalForm power(const NormalForm& x, int m) {
  const NormalForm base = m < 0 ? inverse(x) : x;
  NormalForm out = NormalForm::identity(x.strands());
  for (int i = 0; i < std::abs(m); ++i) out = mul(out, base);
  return out;
}

NormalForm conjugate(const NormalForm& x, const NormalForm& g) { return mul(mul(inverse(g), x), g); }

NormalForm conjugate(const NormalForm& x, const PermutationBraid& s) {
  if (s.strands() != x.strands()) throw std::invalid_argument("conjugator on the wrong strand count");
  // s^{-1} = Delta^{-1} tau(complement(s)), so
  // s^{-1} x s = Delta^{p-1} tau^{p+1}(complement(s)) x_1 ... x_r s.
  const long long p = x.inf();
  Builder builder(x.strands(), p - 1, x.factors());
  builder.prepend(tau_power(complement(s), p + 1));
  builder.append(s);
  return std::move(builder).finish();
}

NormalForm tau(const NormalForm& x) {
  std::vector<PermutationBraid> f = x.factors();
  for (auto& s : f) s = tau(s);
  return NormalForm::from_factors(x.strands(), x.inf(), f);
}

BraidWord to_word(const NormalForm& x) {
  const int n = x.strands();
  BraidWord out = words::half_twist(n, n).power(x.inf());
  for (const auto& f : x.factors()) out *= BraidWord(n, f.positive_word());
  return out;
}

void validate(const NormalForm& x) {
  const auto& f = x.factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].strands() != x.strands()) throw std::logic_error("factor on the wrong strand count");
    if (f[i].is_identity()) throw std::logic_error("trivial factor at position " + std::to_string(i));
    if (f[i].is_delta()) throw std::logic_error("Delta factor at position " + std::to_string(i));
    if (i > 0 && !left_weighted(f[i - 1], f[i])) {
      throw std::logic_error("factors " + std::to_string(i - 1) + " and " + std::to_string(i) +
                             " are not left-weighted");
    }
  }
}

std::string to_string(const NormalForm& x) {
  std::string out = "D^" + std::to_string(x.inf());
  if (!x.factors().empty()) out += ' ';
  for (const auto& f : x.factors()) out += to_string(f);
  return out;
}

bool canonical_less(const NormalForm& a, const NormalForm& b) { return to_string(a) < to_string(b); }

}  // namespace garside
