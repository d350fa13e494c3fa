#pragma once

// Formal integer combinations of N-th roots of unity, N = 4(q^4 - 1).

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace mchar {

class CharValue {
 public:
  using Term = std::pair<std::int64_t, std::int64_t>;  // (exponent t, coefficient c)

  CharValue() = default;
  explicit CharValue(std::int64_t n) : n_(n) {}

  /// c * e^(2 pi i t / n)
  static CharValue root(std::int64_t n, std::int64_t t, std::int64_t c = 1);
  static CharValue integer(std::int64_t n, std::int64_t c) { return root(n, 0, c); }
  /// N = 4(q^4 - 1)
  static std::int64_t modulus_for(int q);

  [[nodiscard]] std::int64_t modulus() const { return n_; }
  /// Sorted by exponent, no zero coefficients.
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] std::complex<double> eval() const;
  [[nodiscard]] std::complex<long double> eval_long() const;
  /// Complex conjugate: negates exponents.
  [[nodiscard]] CharValue conj() const;
  [[nodiscard]] CharValue scaled(std::int64_t k) const;
  /// Divides every coefficient by 2; throws std::domain_error on an odd one.
  [[nodiscard]] CharValue halved() const;

  CharValue& operator+=(const CharValue& o);
  CharValue& operator-=(const CharValue& o) { return *this += o.scaled(-1); }
  friend CharValue operator+(CharValue a, const CharValue& b) { return a += b; }
  friend CharValue operator-(CharValue a, const CharValue& b) { return a -= b; }
  friend CharValue operator-(const CharValue& a) { return a.scaled(-1); }
  friend CharValue operator*(const CharValue& a, const CharValue& b);

  /// Structural equality of the formal sums (not equality of complex numbers).
  friend bool operator==(const CharValue&, const CharValue&) = default;

 private:
  void check(const CharValue& o) const;
  void normalize();

  std::int64_t n_ = 1;
  std::vector<Term> terms_;
};

/// Root-of-unity steps inside N = 4(q^4 - 1) for the complex constants used in
/// the character tables.
struct RootSteps {
  std::int64_t n;        // 4(q^4 - 1)
  std::int64_t alpha;    // exp(4 pi i / (q^2 - 1))
  std::int64_t beta;     // exp(4 pi i / (q^2 + 1))
  std::int64_t alpha_1;  // exp(i pi / (q - 1))
  std::int64_t beta_1;   // exp(i pi / (q + 1))
  std::int64_t i;        // sqrt(-1)

  static RootSteps for_q(int q);
};

}  // namespace mchar
