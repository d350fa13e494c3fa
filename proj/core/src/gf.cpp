#include "mchar/gf.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace mchar {
namespace {

constexpr int kMaxQ = 31;
// Seed for the primitive polynomial search. Changing it changes xi and zeta
// and therefore the exponent labels of every class.
constexpr std::uint64_t kPolySeed = 0x6d63686172'2d6766ULL;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t t = old_r / r;
    old_r = std::exchange(r, old_r - t * r);
    old_s = std::exchange(s, old_s - t * s);
  }
  if (old_r != 1) throw std::logic_error("inverse_mod: not invertible");
  return mod(old_s, m);
}

}  // namespace

PrimePower PrimePower::from_q(std::int64_t q) {
  if (q < 3) throw std::invalid_argument("q must be an odd prime power >= 3");
  if (q % 2 == 0) throw std::invalid_argument("q must be odd, got " + std::to_string(q));
  if (q > kMaxQ) {
    throw std::invalid_argument("q = " + std::to_string(q) + " exceeds the supported maximum " +
                                std::to_string(kMaxQ));
  }
  std::int64_t p = 3;
  while (q % p != 0) p += 2;
  std::int64_t rest = q;
  int e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return PrimePower{static_cast<int>(p), e, static_cast<int>(q)};
}

std::string to_string(Level level) {
  switch (level) {
    case Level::Base: return "GF(q)";
    case Level::Quad: return "GF(q^2)";
    case Level::Quartic: return "GF(q^4)";
  }
  return "?";
}

FieldCtx::FieldCtx(PrimePower pp) : pp_(pp) {
  const std::int64_t q = pp_.q;
  degree_ = 4 * pp_.e;
  size_ = 1;
  for (int i = 0; i < degree_; ++i) size_ *= pp_.p;
  n4_ = q * q * q * q - 1;
  n2_ = q * q - 1;
  n1_ = q - 1;
  assert(size_ == n4_ + 1);

  const int n = degree_;
  const int p = pp_.p;
  std::mt19937_64 rng(kPolySeed);
  std::uniform_int_distribution<int> coeff(0, p - 1);
  std::vector<int> cur(n);
  antilog_.assign(static_cast<std::size_t>(n4_), 0);

  auto encode = [&](const std::vector<int>& v) {
    std::int64_t code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * p + v[i];
    return static_cast<std::int32_t>(code);
  };

  for (;;) {
    poly_.assign(n + 1, 0);
    poly_[n] = 1;
    for (int i = 0; i < n; ++i) poly_[i] = coeff(rng);
    if (poly_[0] == 0) continue;

    // Walk the powers of x; f is primitive iff x first returns to 1 at step n4.
    std::fill(cur.begin(), cur.end(), 0);
    cur[0] = 1;
    bool primitive = true;
    for (std::int64_t t = 0; t < n4_; ++t) {
      const std::int32_t code = encode(cur);
      if (t > 0 && code == 1) {
        primitive = false;
        break;
      }
      antilog_[t] = code;
      const int top = cur[n - 1];
      for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < n; ++i) cur[i] = static_cast<int>(mod(cur[i] - top * poly_[i], p));
      }
    }
    if (primitive && encode(cur) == 1) break;
  }

  log_.assign(static_cast<std::size_t>(size_), -1);
  for (std::int64_t t = 0; t < n4_; ++t) log_[antilog_[t]] = static_cast<std::int32_t>(t);

  // 1 + eta^t: bump the constant digit.
  auto& z4 = zech_[static_cast<int>(Level::Quartic)];
  z4.assign(static_cast<std::size_t>(n4_), -1);
  for (std::int64_t t = 0; t < n4_; ++t) {
    const std::int32_t code = antilog_[t];
    const int c0 = code % p;
    const std::int32_t bumped = code - c0 + (c0 + 1) % p;
    z4[t] = log_[bumped];
  }
  for (Level level : {Level::Quad, Level::Base}) {
    const std::int64_t s = scale(level);
    const std::int64_t order = unit_order(level);
    auto& z = zech_[static_cast<int>(level)];
    z.assign(static_cast<std::size_t>(order), -1);
    for (std::int64_t t = 0; t < order; ++t) {
      const std::int32_t v = z4[t * s];
      if (v >= 0) {
        if (v % s != 0) throw std::logic_error("subfield not closed under addition");
        z[t] = static_cast<std::int32_t>(v / s);
      }
    }
  }
}

std::int64_t FieldCtx::unit_order(Level level) const {
  switch (level) {
    case Level::Base: return n1_;
    case Level::Quad: return n2_;
    case Level::Quartic: return n4_;
  }
  return 0;
}

std::int64_t FieldCtx::scale(Level level) const {
  const std::int64_t q = pp_.q;
  switch (level) {
    case Level::Base: return (q * q + 1) * (q + 1);
    case Level::Quad: return q * q + 1;
    case Level::Quartic: return 1;
  }
  return 1;
}

void FieldCtx::check_same(FElem a, FElem b) const {
  if (a.level() != b.level()) {
    throw std::invalid_argument("field operation mixes " + to_string(a.level()) + " and " +
                                to_string(b.level()));
  }
}

FElem FieldCtx::minus_one(Level level) const {
  return FElem{level, unit_order(level) / 2};
}

FElem FieldCtx::power_of_generator(Level level, std::int64_t t) const {
  return FElem{level, mod(t, unit_order(level))};
}

FElem FieldCtx::zeta(std::int64_t t) const {
  const std::int64_t q2 = static_cast<std::int64_t>(pp_.q) * pp_.q;
  return FElem{Level::Quartic, mod(mod(t, q2 + 1) * (q2 - 1), n4_)};
}

FElem FieldCtx::from_int(std::int64_t n, Level level) const {
  return from_code(mod(n, pp_.p), level);
}

FElem FieldCtx::add(FElem a, FElem b) const {
  check_same(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t order = unit_order(a.level());
  const std::int32_t z = zech_[static_cast<int>(a.level())][mod(b.log() - a.log(), order)];
  if (z < 0) return zero(a.level());
  return FElem{a.level(), mod(a.log() + z, order)};
}

FElem FieldCtx::neg(FElem a) const {
  if (a.is_zero()) return a;
  const std::int64_t order = unit_order(a.level());
  return FElem{a.level(), mod(a.log() + order / 2, order)};
}

FElem FieldCtx::mul(FElem a, FElem b) const {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return zero(a.level());
  return FElem{a.level(), mod(a.log() + b.log(), unit_order(a.level()))};
}

FElem FieldCtx::inv(FElem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return FElem{a.level(), mod(-a.log(), unit_order(a.level()))};
}

FElem FieldCtx::pow(FElem a, std::int64_t n) const {
  if (a.is_zero()) {
    if (n > 0) return a;
    if (n == 0) return one(a.level());
    throw std::domain_error("negative power of zero");
  }
  const std::int64_t order = unit_order(a.level());
  return FElem{a.level(), mod(mod(a.log(), order) * mod(n, order), order)};
}

FElem FieldCtx::sigma(FElem a) const { return pow(a, pp_.q); }

FElem FieldCtx::frobenius_p(FElem a) const { return pow(a, pp_.p); }

bool FieldCtx::is_square(FElem a) const {
  if (a.is_zero()) throw std::domain_error("is_square(0) is undefined");
  return a.log() % 2 == 0;
}

std::optional<FElem> FieldCtx::sqrt(FElem a) const {
  if (a.is_zero()) return a;
  if (a.log() % 2 != 0) return std::nullopt;
  return FElem{a.level(), a.log() / 2};
}

std::optional<std::int64_t> FieldCtx::dlog(FElem a, FElem base) const {
  if (a.is_zero() || base.is_zero()) throw std::invalid_argument("dlog of or to zero");
  const Level level = std::max(a.level(), base.level());
  const std::int64_t n = unit_order(level);
  const std::int64_t la = embed(a, level).log();
  const std::int64_t lb = embed(base, level).log();
  const std::int64_t g = std::gcd(lb, n);
  if (la % g != 0) return std::nullopt;
  const std::int64_t m = n / g;
  if (m == 1) return 0;
  return mod((la / g) % m * inverse_mod(lb / g, m), m);
}

std::int64_t FieldCtx::order(FElem a) const {
  if (a.is_zero()) throw std::domain_error("order of zero");
  const std::int64_t n = unit_order(a.level());
  return n / std::gcd(a.log(), n);
}

FElem FieldCtx::embed(FElem a, Level to) const {
  if (to < a.level()) throw std::invalid_argument("embed into a smaller field");
  if (a.is_zero()) return zero(to);
  return FElem{to, a.log() * (scale(a.level()) / scale(to))};
}

std::optional<FElem> FieldCtx::restrict_to(FElem a, Level to) const {
  if (a.is_zero()) return zero(to);
  const std::int64_t abs_log = a.log() * scale(a.level());
  const std::int64_t s = scale(to);
  if (abs_log % s != 0) return std::nullopt;
  return FElem{to, abs_log / s};
}

std::int64_t FieldCtx::code_of(FElem a) const {
  if (a.is_zero()) return 0;
  return antilog_[a.log() * scale(a.level())];
}

FElem FieldCtx::from_code(std::int64_t code, Level level) const {
  const std::int32_t t = log_.at(static_cast<std::size_t>(code));
  if (t < 0) return zero(level);
  auto r = restrict_to(FElem{Level::Quartic, t}, level);
  if (!r) throw std::invalid_argument("element does not lie in " + to_string(level));
  return *r;
}

std::vector<int> FieldCtx::coefficients(FElem a) const {
  std::int64_t code = code_of(a);
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) {
    out[i] = static_cast<int>(code % pp_.p);
    code /= pp_.p;
  }
  return out;
}

FElem FieldCtx::from_coefficients(std::span<const int> coeffs, Level level) const {
  if (static_cast<int>(coeffs.size()) > degree_) throw std::invalid_argument("too many coefficients");
  std::int64_t code = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) code = code * pp_.p + mod(coeffs[i], pp_.p);
  return from_code(code, level);
}

std::vector<FElem> FieldCtx::elements(Level level) const {
  std::vector<FElem> out;
  out.reserve(static_cast<std::size_t>(field_size(level)));
  out.push_back(zero(level));
  for (std::int64_t t = 0; t < unit_order(level); ++t) out.push_back(FElem{level, t});
  return out;
}

std::string FieldCtx::format(FElem a) const {
  if (a.is_zero()) return "0";
  return "x^" + std::to_string(a.log());
}

FieldCtx build_field(std::int64_t q) { return FieldCtx(PrimePower::from_q(q)); }

}  // namespace mchar
