#pragma once

// The twisted fractional linear group M(q^2) as cosets [A, t] of scalar
// matrices, with multiplication (A, r)(B, s) = (A * B^(sigma^r), r + s).

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mchar/gf.hpp"

namespace mchar {

/// 2x2 matrix over GF(q^2), rows (a b) and (c d).
struct Mat2 {
  FElem a, b, c, d;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 dia(FElem x, FElem y) { return Mat2{x, FElem{}, FElem{}, y}; }
inline Mat2 off(FElem x, FElem y) { return Mat2{FElem{}, x, y, FElem{}}; }

/// Element [A, t] of M(q^2). The matrix is kept in canonical projective form
/// (first nonzero entry in the order a, b, c, d equals 1) and the twist bit is
/// 1 exactly when det(A) is a non-square.
class GElem {
 public:
  [[nodiscard]] const Mat2& mat() const { return m_; }
  [[nodiscard]] bool twisted() const { return twist_; }
  [[nodiscard]] int twist() const { return twist_ ? 1 : 0; }

  friend bool operator==(const GElem&, const GElem&) = default;

 private:
  friend class Group;
  GElem(const Mat2& m, bool twist) : m_(m), twist_(twist) {}

  Mat2 m_;
  bool twist_ = false;
};

/// Point of the projective line over GF(q^2).
struct ProjPoint {
  FElem z;
  bool at_infinity = false;

  static ProjPoint finite(FElem z) { return ProjPoint{z, false}; }
  static ProjPoint infinity() { return ProjPoint{FElem{}, true}; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Default ceiling on q for full enumeration of the group.
inline constexpr int kDefaultEnumerationCap = 7;

class Group {
 public:
  explicit Group(FieldCtx field);
  explicit Group(std::int64_t q) : Group(build_field(q)) {}

  [[nodiscard]] const FieldCtx& field() const { return field_; }
  [[nodiscard]] int q() const { return field_.q(); }
  /// |M(q^2)| = q^2 (q^4 - 1).
  [[nodiscard]] std::int64_t order() const;

  /// Builds [A, iota_A]. Throws std::invalid_argument for singular A.
  [[nodiscard]] GElem make(const Mat2& a) const;
  [[nodiscard]] GElem identity() const;
  [[nodiscard]] GElem mul(const GElem& g, const GElem& h) const;
  [[nodiscard]] GElem inv(const GElem& g) const;
  [[nodiscard]] GElem pow(const GElem& g, std::int64_t n) const;
  /// x g x^-1
  [[nodiscard]] GElem conjugate(const GElem& g, const GElem& x) const;
  [[nodiscard]] std::int64_t element_order(const GElem& g) const;
  [[nodiscard]] bool is_identity(const GElem& g) const;

  [[nodiscard]] ProjPoint act(const GElem& g, const ProjPoint& z) const;
  [[nodiscard]] int fixed_point_count(const GElem& g) const;
  /// The q^2 + 1 points: finite points in generator order, then infinity.
  [[nodiscard]] std::vector<ProjPoint> points() const;

  /// Calls fn for each of the q^2 (q^4 - 1) elements. Throws
  /// std::invalid_argument when q exceeds cap.
  void for_each_element(const std::function<void(const GElem&)>& fn,
                        int cap = kDefaultEnumerationCap) const;
  [[nodiscard]] std::vector<GElem> enumerate(int cap = kDefaultEnumerationCap) const;

  /// Injective key of an element into [0, key_space()). Keys are dense enough
  /// to back lookup tables for small q.
  [[nodiscard]] std::int64_t key(const GElem& g) const;
  [[nodiscard]] std::int64_t key_space() const;

  /// Uniformly random element.
  [[nodiscard]] GElem random(std::mt19937_64& rng) const;

  /// g1 = [dia(xi, xi^-1), 0], g2 = [dia(1,0) + off(-1,1), 0] and the twisted
  /// element [dia(xi, 1), 1]; together they generate the group.
  [[nodiscard]] std::vector<GElem> generators() const;

  // Matrix helpers over GF(q^2).
  [[nodiscard]] FElem det(const Mat2& m) const;
  [[nodiscard]] Mat2 matmul(const Mat2& x, const Mat2& y) const;
  [[nodiscard]] Mat2 sigma(const Mat2& m) const;
  [[nodiscard]] Mat2 adjugate(const Mat2& m) const;
  [[nodiscard]] Mat2 scale(FElem s, const Mat2& m) const;
  [[nodiscard]] FElem trace(const Mat2& m) const;

  /// Element syntax "a,b,c,d;t" with entries "0" or "x^k" (k an exponent of
  /// the fixed primitive element of GF(q^2)); "1" and "x" are also accepted.
  [[nodiscard]] GElem parse(std::string_view text) const;
  [[nodiscard]] std::string format(const GElem& g) const;

 private:
  [[nodiscard]] Mat2 canonical(const Mat2& m) const;

  FieldCtx field_;
};

}  // namespace mchar
