#pragma once

// The 2(q^2+1)-dimensional representations of M(q^2) induced from linear
// characters of the upper-triangular subgroup, their intertwiners, and the
// trace formula for the characters that are non-zero off PSL(2, q^2).

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mchar/group.hpp"

namespace mchar {

using CMatrix = Eigen::MatrixXcd;

/// f(t) with xi^f(t) = -1 - xi^-t, for 0 <= t < q^2-1; the entry at
/// (q^2-1)/2 is -1 (undefined).
std::vector<std::int64_t> f_table(const FieldCtx& f);

/// f^-1 as a table; the entry at (q^2-1)/2 is -1.
std::vector<std::int64_t> f_inverse_table(const FieldCtx& f);

/// Number of fixed points of f and whether every other orbit is a 3-cycle
/// (a, f(a), -a-f(a)).
struct FCycleShape {
  int fixed_points = 0;
  bool three_cycles = false;
  std::vector<std::int64_t> fixed;
};
FCycleShape f_cycle_shape(const FieldCtx& f);

/// |sum_{u=0}^{q-2} gamma^(2 f^-1(u(q+1)-j)) + gamma^(2j) + 1| for odd j.
double sum_identity_deviation(const FieldCtx& f, std::int64_t ell, std::int64_t j);
/// The q-1 values f^-1(t(q+1)-j), t < q-1, are pairwise distinct mod q+1
/// and avoid 0 and j mod q+1.
bool residues_distinct(const FieldCtx& f, std::int64_t j);

enum class ClosedForm : std::uint8_t { G1, G2, G3, G4 };

/// Index layout, in order: 0..q^2-2, 0'..(q^2-2)', *, inf, *', inf'.
struct RepIndex {
  std::int64_t n1;  // q^2 - 1

  [[nodiscard]] int dim() const { return static_cast<int>(2 * n1 + 4); }
  [[nodiscard]] int t(std::int64_t v) const;        // v mod q^2-1
  [[nodiscard]] int t_dash(std::int64_t v) const;
  [[nodiscard]] int star() const { return static_cast<int>(2 * n1); }
  [[nodiscard]] int inf() const { return star() + 1; }
  [[nodiscard]] int star_dash() const { return star() + 2; }
  [[nodiscard]] int inf_dash() const { return star() + 3; }
  /// Positions of Ind (undashed) or Ind' in the order 0..q^2-2, *, inf.
  [[nodiscard]] std::vector<int> block(bool dashed) const;
};

class InducedRep {
 public:
  /// Any integer ell is accepted; the theory of the intertwiner needs ell in
  /// L+ or L-.
  InducedRep(const Group& group, std::int64_t ell);

  [[nodiscard]] const Group& group() const { return *group_; }
  [[nodiscard]] std::int64_t ell() const { return ell_; }
  [[nodiscard]] const RepIndex& index() const { return idx_; }
  [[nodiscard]] int dim() const { return idx_.dim(); }
  [[nodiscard]] bool in_l_plus() const;
  [[nodiscard]] bool in_l_minus() const;
  /// r for ell = r(q+1)/2 in L+, s for ell = s(q-1)/2 in L-.
  [[nodiscard]] std::int64_t rs() const;

  /// gamma^k with gamma = exp(2 pi i ell / (q^2-1)).
  [[nodiscard]] std::complex<double> gamma(std::int64_t k = 1) const;

  /// u with h = [h(u,d), 0], 0 <= u < (q^2-1)/2, or nullopt outside H_upp.
  [[nodiscard]] std::optional<std::int64_t> upp_exponent(const GElem& h) const;
  /// exp(4 pi i ell u / (q^2-1)); throws std::invalid_argument outside H_upp.
  [[nodiscard]] std::complex<double> phi_linear(const GElem& h) const;

  /// Transversal elements in index order.
  [[nodiscard]] const std::vector<GElem>& transversal() const { return reps_; }
  /// Induced matrix by the coset rule.
  [[nodiscard]] CMatrix phi_lift(const GElem& g) const;
  /// Explicit entry tables for g1, g2, g3(j), g4(j). Throws for even j or j
  /// out of range.
  [[nodiscard]] CMatrix closed_form(ClosedForm which, std::int64_t j = 1) const;
  [[nodiscard]] GElem generator(ClosedForm which, std::int64_t j = 1) const;

  /// Sub-block of a full matrix: rows from Ind or Ind', columns likewise.
  [[nodiscard]] CMatrix block(const CMatrix& m, bool dashed_rows, bool dashed_cols) const;

  /// Q for L+, the explicit Hermitian matrix for L- (y = 1/q).
  [[nodiscard]] CMatrix intertwiner() const;
  /// (-1)^delta(ell) in the constraint for C_low.
  [[nodiscard]] int delta_sign() const;

  struct Constraints {
    double hermitian = 0;   // |M - M*|
    double involution = 0;  // |M^2 - I|
    double a = 0;           // |A_low - M^-1 A_upp M|
    double b = 0;           // |B - M^-1 B M| and |B_low - B_upp|
    double c = 0;           // |C_low - (-1)^delta gamma^2 M^-1 C_upp M|
    [[nodiscard]] double worst() const;
  };
  [[nodiscard]] Constraints check_intertwiner(const CMatrix& m) const;

  /// tr(c* E_upp(g) M) with c* = i^(r or s) gamma; g must be twisted.
  [[nodiscard]] std::complex<double> chi_trace(const GElem& g) const;
  [[nodiscard]] std::complex<double> chi_trace(const GElem& g, const CMatrix& m) const;

 private:
  const Group* group_;
  std::int64_t ell_;
  RepIndex idx_;
  std::vector<GElem> reps_;
  std::vector<GElem> rep_inv_;
  std::vector<std::int64_t> f_;
  std::vector<std::int64_t> f_inv_;
};

}  // namespace mchar
