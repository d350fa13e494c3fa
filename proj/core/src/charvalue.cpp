#include "mchar/charvalue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mchar {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t CharValue::modulus_for(int q) {
  const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
  return 4 * (q2 * q2 - 1);
}

CharValue CharValue::root(std::int64_t n, std::int64_t t, std::int64_t c) {
  CharValue v(n);
  if (c != 0) v.terms_.emplace_back(mod(t, n), c);
  return v;
}

void CharValue::check(const CharValue& o) const {
  if (n_ != o.n_) throw std::invalid_argument("CharValue moduli differ");
}

void CharValue::normalize() {
  std::sort(terms_.begin(), terms_.end());
  std::vector<Term> out;
  for (const auto& [t, c] : terms_) {
    if (!out.empty() && out.back().first == t) {
      out.back().second += c;
    } else {
      out.emplace_back(t, c);
    }
  }
  std::erase_if(out, [](const Term& x) { return x.second == 0; });
  terms_ = std::move(out);
}

std::complex<double> CharValue::eval() const {
  const auto v = eval_long();
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

std::complex<long double> CharValue::eval_long() const {
  long double re = 0, im = 0;
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  for (const auto& [t, c] : terms_) {
    const long double a = two_pi * static_cast<long double>(t) / static_cast<long double>(n_);
    re += c * std::cos(a);
    im += c * std::sin(a);
  }
  return {re, im};
}

CharValue CharValue::conj() const {
  CharValue v(n_);
  for (const auto& [t, c] : terms_) v.terms_.emplace_back(mod(-t, n_), c);
  v.normalize();
  return v;
}

CharValue CharValue::scaled(std::int64_t k) const {
  CharValue v(n_);
  if (k == 0) return v;
  v.terms_ = terms_;
  for (auto& term : v.terms_) term.second *= k;
  return v;
}

CharValue CharValue::halved() const {
  CharValue v(n_);
  v.terms_ = terms_;
  for (auto& term : v.terms_) {
    if (term.second % 2 != 0) throw std::domain_error("halving a CharValue with an odd coefficient");
    term.second /= 2;
  }
  return v;
}

CharValue& CharValue::operator+=(const CharValue& o) {
  check(o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

CharValue operator*(const CharValue& a, const CharValue& b) {
  a.check(b);
  CharValue v(a.n_);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) v.terms_.emplace_back(mod(ta + tb, a.n_), ca * cb);
  }
  v.normalize();
  return v;
}

RootSteps RootSteps::for_q(int q) {
  const std::int64_t q1 = q;
  const std::int64_t q2 = q1 * q1;
  return RootSteps{CharValue::modulus_for(q), 8 * (q2 + 1), 8 * (q2 - 1), 2 * (q1 + 1) * (q2 + 1),
                   2 * (q1 - 1) * (q2 + 1), q2 * q2 - 1};
}

}  // namespace mchar
