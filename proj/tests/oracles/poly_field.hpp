#pragma once

// Schoolbook arithmetic in GF(p)[x]/(f) on coefficient vectors. Shares
// nothing with the log tables of FieldCtx except the modulus f.

#include <cstdint>
#include <vector>

namespace oracle {

class PolyField {
 public:
  using Poly = std::vector<int>;

  PolyField(int p, std::vector<int> f) : p_(p), f_(std::move(f)), n_(static_cast<int>(f_.size()) - 1) {}

  [[nodiscard]] int degree() const { return n_; }

  [[nodiscard]] Poly zero() const { return Poly(static_cast<std::size_t>(n_), 0); }
  [[nodiscard]] Poly one() const {
    Poly r = zero();
    r[0] = 1;
    return r;
  }
  /// Requires degree >= 2.
  [[nodiscard]] Poly x() const {
    Poly r = zero();
    r[1] = 1;
    return r;
  }

  [[nodiscard]] Poly add(const Poly& a, const Poly& b) const {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }

  [[nodiscard]] Poly neg(const Poly& a) const {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (p_ - a[i]) % p_;
    return r;
  }

  [[nodiscard]] Poly mul(const Poly& a, const Poly& b) const {
    std::vector<std::int64_t> t(static_cast<std::size_t>(2 * n_ - 1), 0);
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) t[static_cast<std::size_t>(i + k)] += static_cast<std::int64_t>(a[i]) * b[k];
    }
    // f is monic: x^n = -(f_0 + ... + f_(n-1) x^(n-1))
    for (int d = 2 * n_ - 2; d >= n_; --d) {
      const std::int64_t c = t[static_cast<std::size_t>(d)] % p_;
      t[static_cast<std::size_t>(d)] = 0;
      for (int i = 0; i < n_; ++i) t[static_cast<std::size_t>(d - n_ + i)] -= c * f_[static_cast<std::size_t>(i)];
    }
    Poly r(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) r[i] = static_cast<int>(((t[static_cast<std::size_t>(i)] % p_) + p_) % p_);
    return r;
  }

  [[nodiscard]] Poly pow(Poly a, std::int64_t e) const {
    Poly r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  [[nodiscard]] std::int64_t size() const {
    std::int64_t s = 1;
    for (int i = 0; i < n_; ++i) s *= p_;
    return s;
  }

  /// a^(size-2)
  [[nodiscard]] Poly inv(const Poly& a) const { return pow(a, size() - 2); }

 private:
  int p_;
  std::vector<int> f_;
  int n_;
};

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace oracle
