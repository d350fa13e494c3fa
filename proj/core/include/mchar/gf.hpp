#pragma once

// Finite field tower GF(q) < GF(q^2) < GF(q^4) for odd prime powers q.
//
// All three fields live inside one table-driven model of GF(q^4) built as
// GF(p)[x]/(f) with f primitive. Nonzero elements are stored as discrete logs
// of the generator of their level; addition goes through Zech logarithms.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mchar {

/// An odd prime power q = p^e with q >= 3.
struct PrimePower {
  int p = 0;
  int e = 0;
  int q = 0;

  /// Factors q; throws std::invalid_argument for even, composite-non-prime-power
  /// or oversized values.
  static PrimePower from_q(std::int64_t q);

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Which field of the tower an element belongs to.
enum class Level : std::uint8_t { Base, Quad, Quartic };

std::string to_string(Level level);

/// Field element in discrete-log form. Zero is a sentinel.
class FElem {
 public:
  constexpr FElem() = default;

  [[nodiscard]] constexpr bool is_zero() const { return log_ < 0; }
  /// Exponent with respect to the generator of the element's level.
  /// Meaningless for zero.
  [[nodiscard]] constexpr std::int64_t log() const { return log_; }
  [[nodiscard]] constexpr Level level() const { return level_; }

  friend constexpr bool operator==(const FElem&, const FElem&) = default;
  friend constexpr auto operator<=>(const FElem& a, const FElem& b) {
    if (a.level_ != b.level_) return a.level_ <=> b.level_;
    return a.log_ <=> b.log_;
  }

 private:
  friend class FieldCtx;
  constexpr FElem(Level level, std::int64_t log) : log_(log), level_(level) {}

  std::int64_t log_ = -1;
  Level level_ = Level::Quad;
};

/// Immutable arithmetic context for the tower belonging to one q.
///
/// Generators: eta is primitive in GF(q^4); xi = eta^(q^2+1) is primitive in
/// GF(q^2); zeta = eta^(q^2-1) has order q^2+1; xi^(q+1) generates GF(q)*.
/// The primitive polynomial is found by a seeded search, so every context for
/// the same q uses the same generators.
class FieldCtx {
 public:
  explicit FieldCtx(PrimePower pp);

  [[nodiscard]] const PrimePower& prime_power() const { return pp_; }
  [[nodiscard]] int q() const { return pp_.q; }
  [[nodiscard]] int p() const { return pp_.p; }

  /// Order of the multiplicative group of a level: q-1, q^2-1, q^4-1.
  [[nodiscard]] std::int64_t unit_order(Level level) const;
  /// Number of field elements of a level.
  [[nodiscard]] std::int64_t field_size(Level level) const { return unit_order(level) + 1; }

  [[nodiscard]] FElem zero(Level level = Level::Quad) const { return FElem{level, -1}; }
  [[nodiscard]] FElem one(Level level = Level::Quad) const { return FElem{level, 0}; }
  [[nodiscard]] FElem minus_one(Level level = Level::Quad) const;
  /// generator(level)^t, with t reduced modulo the unit order.
  [[nodiscard]] FElem power_of_generator(Level level, std::int64_t t) const;
  [[nodiscard]] FElem xi(std::int64_t t = 1) const { return power_of_generator(Level::Quad, t); }
  [[nodiscard]] FElem zeta(std::int64_t t = 1) const;
  [[nodiscard]] FElem eta(std::int64_t t = 1) const { return power_of_generator(Level::Quartic, t); }
  /// Image of the integer n under Z -> GF(p) -> level.
  [[nodiscard]] FElem from_int(std::int64_t n, Level level = Level::Quad) const;

  [[nodiscard]] FElem add(FElem a, FElem b) const;
  [[nodiscard]] FElem sub(FElem a, FElem b) const { return add(a, neg(b)); }
  [[nodiscard]] FElem neg(FElem a) const;
  [[nodiscard]] FElem mul(FElem a, FElem b) const;
  /// Throws std::domain_error for zero.
  [[nodiscard]] FElem inv(FElem a) const;
  [[nodiscard]] FElem div(FElem a, FElem b) const { return mul(a, inv(b)); }
  /// a^n for any integer n; negative n requires a != 0.
  [[nodiscard]] FElem pow(FElem a, std::int64_t n) const;

  /// x -> x^q on GF(q^2) (also valid on GF(q), where it is the identity).
  [[nodiscard]] FElem sigma(FElem a) const;
  /// x -> x^p on any level.
  [[nodiscard]] FElem frobenius_p(FElem a) const;

  /// Square test in the element's own level. Throws std::domain_error on zero.
  [[nodiscard]] bool is_square(FElem a) const;
  /// One square root in the element's level, or nullopt for non-squares.
  [[nodiscard]] std::optional<FElem> sqrt(FElem a) const;

  /// Smallest t >= 0 with base^t = a, or nullopt if a is not in <base>.
  /// Elements from different levels are compared inside the larger one.
  [[nodiscard]] std::optional<std::int64_t> dlog(FElem a, FElem base) const;
  /// Multiplicative order of a nonzero element.
  [[nodiscard]] std::int64_t order(FElem a) const;

  /// Embeds a into a larger (or equal) level.
  [[nodiscard]] FElem embed(FElem a, Level to) const;
  /// Views a as an element of a smaller level, if it lies there.
  [[nodiscard]] std::optional<FElem> restrict_to(FElem a, Level to) const;

  /// Coefficients over GF(p) of the Quartic image of a in the basis
  /// 1, x, ..., x^(n-1) of GF(p)[x]/(f).
  [[nodiscard]] std::vector<int> coefficients(FElem a) const;
  [[nodiscard]] FElem from_coefficients(std::span<const int> coeffs, Level level) const;
  /// Defining polynomial f of GF(q^4) over GF(p), low degree first, monic.
  [[nodiscard]] const std::vector<int>& defining_polynomial() const { return poly_; }

  /// All elements of a level, zero first then generator powers in order.
  [[nodiscard]] std::vector<FElem> elements(Level level) const;

  /// Compact rendering: "0" or "x^k" relative to the level generator.
  [[nodiscard]] std::string format(FElem a) const;

 private:
  [[nodiscard]] std::int64_t scale(Level level) const;
  void check_same(FElem a, FElem b) const;
  [[nodiscard]] std::int64_t code_of(FElem a) const;
  [[nodiscard]] FElem from_code(std::int64_t code, Level level) const;

  PrimePower pp_;
  int degree_ = 0;                     // 4e
  std::int64_t size_ = 0;              // p^(4e)
  std::int64_t n4_ = 0, n2_ = 0, n1_ = 0;
  std::vector<int> poly_;              // f, low degree first
  std::vector<std::int32_t> antilog_;  // eta^t -> packed coefficient code
  std::vector<std::int32_t> log_;      // code -> t, -1 for zero
  // zech_[level][t] = log(1 + g^t) in that level, -1 when the sum is zero.
  std::vector<std::int32_t> zech_[3];
};

/// Convenience wrapper: validates q and builds the tower.
FieldCtx build_field(std::int64_t q);

}  // namespace mchar
