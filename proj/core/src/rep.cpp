#include "mchar/rep.hpp"

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

using cd = std::complex<double>;

}  // namespace

std::vector<std::int64_t> f_table(const FieldCtx& f) {
  const std::int64_t n1 = f.unit_order(Level::Quad);
  std::vector<std::int64_t> out(static_cast<std::size_t>(n1), -1);
  for (std::int64_t t = 0; t < n1; ++t) {
    const FElem v = f.sub(f.minus_one(), f.xi(-t));
    if (!v.is_zero()) out[static_cast<std::size_t>(t)] = v.log();
  }
  return out;
}

std::vector<std::int64_t> f_inverse_table(const FieldCtx& f) {
  const auto fw = f_table(f);
  std::vector<std::int64_t> out(fw.size(), -1);
  for (std::size_t t = 0; t < fw.size(); ++t) {
    if (fw[t] >= 0) out[static_cast<std::size_t>(fw[t])] = static_cast<std::int64_t>(t);
  }
  return out;
}

FCycleShape f_cycle_shape(const FieldCtx& f) {
  const auto fw = f_table(f);
  const auto n1 = static_cast<std::int64_t>(fw.size());
  FCycleShape out;
  out.three_cycles = true;
  for (std::int64_t a = 0; a < n1; ++a) {
    const std::int64_t b = fw[static_cast<std::size_t>(a)];
    if (b < 0) continue;
    if (b == a) {
      ++out.fixed_points;
      out.fixed.push_back(a);
      continue;
    }
    const std::int64_t c = mod(-a - b, n1);
    if (fw[static_cast<std::size_t>(b)] != c || fw[static_cast<std::size_t>(c)] != a) out.three_cycles = false;
  }
  return out;
}

double sum_identity_deviation(const FieldCtx& f, std::int64_t ell, std::int64_t j) {
  const std::int64_t q = f.q();
  const std::int64_t n1 = f.unit_order(Level::Quad);
  const auto finv = f_inverse_table(f);
  auto g = [&](std::int64_t k) {
    const double a = 2 * std::numbers::pi * static_cast<double>(mod(ell * mod(k, n1), n1)) / static_cast<double>(n1);
    return cd{std::cos(a), std::sin(a)};
  };
  cd sum = 0;
  for (std::int64_t u = 0; u < q - 1; ++u) sum += g(2 * finv[static_cast<std::size_t>(mod(u * (q + 1) - j, n1))]);
  return std::abs(sum + g(2 * j) + 1.0);
}

bool residues_distinct(const FieldCtx& f, std::int64_t j) {
  const std::int64_t q = f.q();
  const std::int64_t n1 = f.unit_order(Level::Quad);
  const auto finv = f_inverse_table(f);
  std::vector<bool> seen(static_cast<std::size_t>(q + 1), false);
  for (std::int64_t t = 0; t < q - 1; ++t) {
    const std::int64_t v = finv[static_cast<std::size_t>(mod(t * (q + 1) - j, n1))];
    if (v < 0) return false;
    const std::int64_t r = mod(v, q + 1);
    if (r == 0 || r == mod(j, q + 1) || seen[static_cast<std::size_t>(r)]) return false;
    seen[static_cast<std::size_t>(r)] = true;
  }
  return true;
}

int RepIndex::t(std::int64_t v) const { return static_cast<int>(mod(v, n1)); }
int RepIndex::t_dash(std::int64_t v) const { return static_cast<int>(n1 + mod(v, n1)); }

std::vector<int> RepIndex::block(bool dashed) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n1 + 2));
  for (std::int64_t v = 0; v < n1; ++v) out.push_back(dashed ? t_dash(v) : t(v));
  out.push_back(dashed ? star_dash() : star());
  out.push_back(dashed ? inf_dash() : inf());
  return out;
}

InducedRep::InducedRep(const Group& group, std::int64_t ell)
    : group_(&group), ell_(ell), idx_{group.field().unit_order(Level::Quad)} {
  const FieldCtx& f = group.field();
  const FElem one = f.one();
  const FElem zero = f.zero();
  reps_.resize(static_cast<std::size_t>(dim()), group.identity());
  for (std::int64_t t = 0; t < idx_.n1; ++t) {
    reps_[static_cast<std::size_t>(idx_.t(t))] = group.make(Mat2{one, zero, f.xi(t), one});
    reps_[static_cast<std::size_t>(idx_.t_dash(t))] = group.make(Mat2{f.xi(), zero, f.xi(t), one});
  }
  reps_[static_cast<std::size_t>(idx_.star())] = group.identity();
  reps_[static_cast<std::size_t>(idx_.inf())] = group.make(off(one, f.minus_one()));
  reps_[static_cast<std::size_t>(idx_.star_dash())] = group.make(dia(f.xi(), one));
  reps_[static_cast<std::size_t>(idx_.inf_dash())] = group.make(off(f.xi(), f.minus_one()));
  rep_inv_.reserve(reps_.size());
  for (const auto& r : reps_) rep_inv_.push_back(group.inv(r));

  f_ = f_table(f);
  f_inv_ = f_inverse_table(f);
}

bool InducedRep::in_l_plus() const {
  const std::int64_t q = group_->q();
  return ell_ % ((q + 1) / 2) == 0 && ell_ / ((q + 1) / 2) >= 1 && ell_ / ((q + 1) / 2) <= (q - 3) / 2;
}

bool InducedRep::in_l_minus() const {
  const std::int64_t q = group_->q();
  return ell_ % ((q - 1) / 2) == 0 && ell_ / ((q - 1) / 2) >= 1 && ell_ / ((q - 1) / 2) <= (q - 1) / 2;
}

std::int64_t InducedRep::rs() const {
  const std::int64_t q = group_->q();
  if (in_l_plus()) return ell_ / ((q + 1) / 2);
  if (in_l_minus()) return ell_ / ((q - 1) / 2);
  throw std::logic_error("ell is in neither L+ nor L-");
}

cd InducedRep::gamma(std::int64_t k) const {
  const std::int64_t e = mod(mod(ell_, idx_.n1) * mod(k, idx_.n1), idx_.n1);
  const double a = 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(idx_.n1);
  return {std::cos(a), std::sin(a)};
}

std::optional<std::int64_t> InducedRep::upp_exponent(const GElem& h) const {
  if (h.twisted()) return std::nullopt;
  const Mat2& m = h.mat();
  const FieldCtx& f = group_->field();
  if (!m.c.is_zero() || m.a != f.one()) return std::nullopt;
  // m = xi^u h(u, d) with lower diagonal xi^(-2u)
  const std::int64_t l = m.d.log();
  if (l % 2 != 0) return std::nullopt;
  return mod((idx_.n1 - l) / 2, idx_.n1 / 2);
}

cd InducedRep::phi_linear(const GElem& h) const {
  const auto u = upp_exponent(h);
  if (!u) throw std::invalid_argument("element is not in H_upp");
  return gamma(2 * *u);
}

CMatrix InducedRep::phi_lift(const GElem& g) const {
  const int n = dim();
  CMatrix out = CMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    const GElem ag = group_->mul(reps_[static_cast<std::size_t>(a)], g);
    const bool want_dashed = ag.twisted();
    for (int b = 0; b < n; ++b) {
      if (reps_[static_cast<std::size_t>(b)].twisted() != want_dashed) continue;
      const GElem x = group_->mul(ag, rep_inv_[static_cast<std::size_t>(b)]);
      if (const auto u = upp_exponent(x)) {
        out(a, b) = gamma(2 * *u);
        break;
      }
    }
  }
  return out;
}

GElem InducedRep::generator(ClosedForm which, std::int64_t j) const {
  const FieldCtx& f = group_->field();
  switch (which) {
    case ClosedForm::G1:
      return group_->make(dia(f.xi(), f.xi(-1)));
    case ClosedForm::G2:
      return group_->make(Mat2{f.one(), f.minus_one(), f.one(), f.zero()});
    case ClosedForm::G3:
      return group_->make(dia(f.xi(j), f.one()));
    case ClosedForm::G4:
      return group_->make(off(f.xi(j), f.one()));
  }
  throw std::logic_error("unknown generator");
}

CMatrix InducedRep::closed_form(ClosedForm which, std::int64_t j) const {
  const std::int64_t q = group_->q();
  const std::int64_t n1 = idx_.n1;
  const int n = dim();
  CMatrix m = CMatrix::Zero(n, n);
  const RepIndex& I = idx_;
  const std::int64_t qbar = n1 / 2;
  if (which == ClosedForm::G3 || which == ClosedForm::G4) {
    const std::int64_t jmax = which == ClosedForm::G3 ? q - 2 : q;
    if (j < 1 || j > jmax || j % 2 == 0) throw std::invalid_argument("j must be odd and in range");
  }
  const double sgn = (ell_ % 2 == 0) ? 1.0 : -1.0;
  switch (which) {
    case ClosedForm::G1:
      for (std::int64_t t = 0; t < n1; ++t) {
        m(I.t(t), I.t(t + 2)) = gamma(2);
        m(I.t_dash(t), I.t_dash(t + 2 * q)) = gamma(2 * q);
      }
      m(I.star(), I.star()) = gamma(2);
      m(I.star_dash(), I.star_dash()) = gamma(2 * q);
      m(I.inf(), I.inf()) = gamma(-2);
      m(I.inf_dash(), I.inf_dash()) = gamma(-2 * q);
      break;
    case ClosedForm::G2:
      for (std::int64_t t = 0; t < n1; ++t) {
        if (t == qbar) continue;
        const std::int64_t ft = f_[static_cast<std::size_t>(t)];
        m(I.t(t), I.t(ft)) = gamma(-2 * t);
        m(I.t_dash(t), I.t_dash(ft)) = gamma(-2 * t);
      }
      m(I.t(qbar), I.star()) = 1;
      m(I.star(), I.inf()) = 1;
      m(I.inf(), I.t(qbar)) = 1;
      m(I.t_dash(qbar), I.star_dash()) = 1;
      m(I.star_dash(), I.inf_dash()) = 1;
      m(I.inf_dash(), I.t_dash(qbar)) = 1;
      break;
    case ClosedForm::G3:
      for (std::int64_t t = 0; t < n1; ++t) {
        m(I.t(t), I.t_dash(t + j)) = gamma(j - 1);
        m(I.t_dash(t), I.t(t + j * q)) = gamma(j * q + 1);
      }
      m(I.star(), I.star_dash()) = gamma(j - 1);
      m(I.star_dash(), I.star()) = gamma(j * q + 1);
      m(I.inf(), I.inf_dash()) = gamma(-j - 1);
      m(I.inf_dash(), I.inf()) = gamma(-j * q + 1);
      break;
    case ClosedForm::G4:
      for (std::int64_t t = 0; t < n1; ++t) {
        m(I.t(t), I.t_dash(-t - j)) = sgn * gamma(-j - 2 * t - 1);
        m(I.t_dash(t), I.t(-t - j * q)) = sgn * gamma(-j * q - 2 * t + 1);
      }
      m(I.star(), I.inf_dash()) = sgn * gamma(j - 1);
      m(I.inf(), I.star_dash()) = sgn * gamma(-j - 1);
      m(I.star_dash(), I.inf()) = sgn * gamma(j * q + 1);
      m(I.inf_dash(), I.star()) = sgn * gamma(-j * q + 1);
      break;
  }
  return m;
}

CMatrix InducedRep::block(const CMatrix& m, bool dashed_rows, bool dashed_cols) const {
  const auto rows = idx_.block(dashed_rows);
  const auto cols = idx_.block(dashed_cols);
  CMatrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = m(rows[i], cols[k]);
    }
  }
  return out;
}

// Indexed by Ind in block order 0..q^2-2, *, inf.
CMatrix InducedRep::intertwiner() const {
  const std::int64_t q = group_->q();
  const std::int64_t n1 = idx_.n1;
  const auto sz = static_cast<Eigen::Index>(n1 + 2);
  const Eigen::Index star = sz - 2;
  const Eigen::Index inf = sz - 1;
  CMatrix m = CMatrix::Zero(sz, sz);
  if (in_l_plus()) {
    for (std::int64_t a = 0; a < n1; ++a) m(a, mod(a * q, n1)) = 1;
    m(star, star) = 1;
    m(inf, inf) = 1;
    return m;
  }
  if (!in_l_minus()) throw std::logic_error("ell is in neither L+ nor L-");
  const double y = 1.0 / static_cast<double>(q);
  const std::int64_t qbar = n1 / 2;
  for (std::int64_t a = 0; a < n1; ++a) {
    m(a, inf) = y;
    m(inf, a) = y;
    m(a, star) = y * gamma(-2 * a);
    m(star, a) = y * gamma(2 * a);
    for (std::int64_t b = 0; b < n1; ++b) {
      if (a == mod(b * q, n1)) continue;
      const std::int64_t v = mod(a - b * q + qbar, n1);
      m(a, b) = y * gamma(2 * f_inv_[static_cast<std::size_t>(v)] + 2 * b);
    }
  }
  m(star, inf) = y;
  m(inf, star) = y;
  return m;
}

int InducedRep::delta_sign() const { return rs() % 2 == 0 ? 1 : -1; }

double InducedRep::Constraints::worst() const {
  return std::max({hermitian, involution, a, b, c});
}

InducedRep::Constraints InducedRep::check_intertwiner(const CMatrix& m) const {
  Constraints out;
  const CMatrix id = CMatrix::Identity(m.rows(), m.cols());
  out.hermitian = (m - m.adjoint()).cwiseAbs().maxCoeff();
  out.involution = (m * m - id).cwiseAbs().maxCoeff();
  const CMatrix mi = m.inverse();

  const CMatrix e1 = phi_lift(generator(ClosedForm::G1));
  const CMatrix a_upp = block(e1, false, false);
  const CMatrix a_low = block(e1, true, true);
  out.a = (a_low - mi * a_upp * m).cwiseAbs().maxCoeff();

  const CMatrix e2 = phi_lift(generator(ClosedForm::G2));
  const CMatrix b_upp = block(e2, false, false);
  const CMatrix b_low = block(e2, true, true);
  out.b = std::max((b_upp - mi * b_upp * m).cwiseAbs().maxCoeff(), (b_low - b_upp).cwiseAbs().maxCoeff());

  const CMatrix e3 = phi_lift(generator(ClosedForm::G3, 1));
  const CMatrix c_upp = block(e3, false, true);
  const CMatrix c_low = block(e3, true, false);
  const cd k = static_cast<double>(delta_sign()) * gamma(2);
  out.c = (c_low - k * mi * c_upp * m).cwiseAbs().maxCoeff();
  return out;
}

cd InducedRep::chi_trace(const GElem& g) const { return chi_trace(g, intertwiner()); }

cd InducedRep::chi_trace(const GElem& g, const CMatrix& m) const {
  if (!g.twisted()) throw std::invalid_argument("chi_trace needs a twisted element");
  const CMatrix e = phi_lift(g);
  const CMatrix upp = block(e, false, true);
  static constexpr cd kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cd c_star = kI[mod(rs(), 4)] * gamma(1);
  return c_star * (upp * m).trace();
}

}  // namespace mchar
