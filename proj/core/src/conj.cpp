#include "mchar/conj.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <stdexcept>

namespace mchar {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t orbit_min(std::int64_t x, std::int64_t q, std::int64_t n, std::int64_t shift) {
  std::int64_t best = n;
  for (std::int64_t base : {x, -x, x * q, -x * q}) {
    best = std::min({best, mod(base, n), mod(base + shift, n)});
  }
  return best;
}

// Solves the homogeneous system m * x = 0 over GF(q) (entries are GF(q)
// elements carried at Quad level) and calls visit on every nonzero solution
// up to the first one that returns true.
template <class Visit>
bool for_each_kernel_vector(const FieldCtx& f, std::array<std::array<FElem, 8>, 8> m,
                            const std::vector<FElem>& scalars, Visit&& visit) {
  constexpr int n = 8;
  std::array<int, n> pivot_col{};
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pr = -1;
    for (int r = rank; r < n; ++r) {
      if (!m[r][col].is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[pr], m[rank]);
    const FElem inv = f.inv(m[rank][col]);
    for (int c = col; c < n; ++c) m[rank][c] = f.mul(m[rank][c], inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const FElem factor = m[r][col];
      for (int c = col; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
    }
    pivot_col[rank++] = col;
  }
  std::vector<int> free_cols;
  {
    std::array<bool, n> is_pivot{};
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    for (int c = 0; c < n; ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
  }
  if (free_cols.empty()) return false;

  const std::size_t nf = free_cols.size();
  std::vector<std::size_t> digits(nf, 0);
  std::array<FElem, n> x{};
  for (;;) {
    // Advance first so the all-zero assignment is skipped.
    std::size_t i = 0;
    while (i < nf && ++digits[i] == scalars.size()) digits[i++] = 0;
    if (i == nf) return false;

    for (int c = 0; c < n; ++c) x[c] = f.zero();
    for (std::size_t k = 0; k < nf; ++k) x[free_cols[k]] = scalars[digits[k]];
    for (int r = 0; r < rank; ++r) {
      FElem acc = f.zero();
      for (int fc : free_cols) acc = f.add(acc, f.mul(m[r][fc], x[fc]));
      x[pivot_col[r]] = f.neg(acc);
    }
    if (visit(x)) return true;
  }
}

}  // namespace

std::string to_string(Family fam) {
  switch (fam) {
    case Family::Identity: return "Identity";
    case Family::Unipotent: return "Unipotent";
    case Family::OrderTwoLike: return "OrderTwoLike";
    case Family::XiGeneric: return "XiGeneric";
    case Family::XiBoundary: return "XiBoundary";
    case Family::ZetaGeneric: return "ZetaGeneric";
    case Family::TwistedDiag: return "TwistedDiag";
    case Family::TwistedOff: return "TwistedOff";
  }
  return "?";
}

std::string label(const ClassId& c) {
  switch (c.kind) {
    case ClassKind::Id: return "I";
    case ClassKind::U: return "u";
    case ClassKind::W: return "w";
    case ClassKind::Xi: return "xi:" + std::to_string(c.param);
    case ClassKind::Zeta: return "zeta:" + std::to_string(c.param);
    case ClassKind::TwDiag: return "dia:" + std::to_string(c.param);
    case ClassKind::TwOff: return "off:" + std::to_string(c.param);
  }
  return "?";
}

ClassId parse_label(std::string_view text) {
  if (text == "I") return {ClassKind::Id, 0};
  if (text == "u") return {ClassKind::U, 0};
  if (text == "w") return {ClassKind::W, 0};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown class label '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail = text.substr(colon + 1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || v < 0) {
    throw std::invalid_argument("bad class parameter in '" + std::string(text) + "'");
  }
  if (head == "xi") return {ClassKind::Xi, v};
  if (head == "zeta") return {ClassKind::Zeta, v};
  if (head == "dia") return {ClassKind::TwDiag, v};
  if (head == "off") return {ClassKind::TwOff, v};
  throw std::invalid_argument("unknown class label '" + std::string(text) + "'");
}

std::int64_t canonical_xi(int q, std::int64_t j) {
  const std::int64_t n = static_cast<std::int64_t>(q) * q - 1;
  return orbit_min(j, q, n, n / 2);
}

std::int64_t canonical_zeta(int q, std::int64_t k) {
  const std::int64_t n = static_cast<std::int64_t>(q) * q + 1;
  return orbit_min(k, q, n, n / 2);
}

bool is_boundary_xi(int q, std::int64_t j) {
  return mod(j, (q + 1) / 2) == 0 || mod(j, (q - 1) / 2) == 0;
}

bool is_real_class(int q, const ClassId& c) {
  switch (c.kind) {
    case ClassKind::TwDiag: return q % 4 == 3 && c.param == (q - 1) / 2;
    case ClassKind::TwOff: return q % 4 == 1 && c.param == (q + 1) / 2;
    default: return true;
  }
}

Conjugacy::Conjugacy(const Group& group) : group_(&group) {
  const FieldCtx& f = group.field();
  const std::int64_t q = group.q();
  const std::int64_t q2 = q * q;
  const std::int64_t order = group.order();

  std::set<std::int64_t> generic, boundary, zeta;
  for (std::int64_t j = 1; j < q2 - 1; ++j) {
    if (j % ((q2 - 1) / 4) == 0) continue;
    const std::int64_t c = canonical_xi(static_cast<int>(q), j);
    (is_boundary_xi(static_cast<int>(q), c) ? boundary : generic).insert(c);
  }
  for (std::int64_t k = 1; k < q2 + 1; ++k) {
    if (k % ((q2 + 1) / 2) == 0) continue;
    zeta.insert(canonical_zeta(static_cast<int>(q), k));
  }
  sets_.U.assign(generic.begin(), generic.end());
  sets_.V.assign(zeta.begin(), zeta.end());

  auto add = [&](ClassId id, GElem rep, std::int64_t cent, Family fam) {
    inventory_.push_back(ClassInfo{id, rep, order / cent, cent, fam});
  };
  const FElem one = f.one();
  add({ClassKind::Id, 0}, group.identity(), order, Family::Identity);
  add({ClassKind::U, 0}, group.make(Mat2{one, one, f.zero(), one}), q2, Family::Unipotent);
  add({ClassKind::W, 0}, group.make(off(one, f.minus_one())), 2 * (q2 - 1), Family::OrderTwoLike);
  for (std::int64_t j : sets_.U) {
    add({ClassKind::Xi, j}, group.make(dia(f.xi(j), f.xi(-j))), (q2 - 1) / 2, Family::XiGeneric);
  }
  for (std::int64_t j : boundary) {
    add({ClassKind::Xi, j}, group.make(dia(f.xi(j), f.xi(-j))), q2 - 1, Family::XiBoundary);
  }
  for (std::int64_t k : sets_.V) {
    const auto t = f.restrict_to(f.add(f.zeta(k), f.zeta(-k)), Level::Quad);
    if (!t) throw std::logic_error("zeta^k + zeta^-k outside GF(q^2)");
    add({ClassKind::Zeta, k}, group.make(Mat2{f.zero(), f.minus_one(), one, *t}), (q2 + 1) / 2,
        Family::ZetaGeneric);
  }
  for (std::int64_t j = 1; j <= q - 2; j += 2) {
    add({ClassKind::TwDiag, j}, group.make(dia(f.xi(j), one)), 2 * (q - 1), Family::TwistedDiag);
  }
  for (std::int64_t j = 1; j <= q; j += 2) {
    add({ClassKind::TwOff, j}, group.make(off(f.xi(j), one)), 2 * (q + 1), Family::TwistedOff);
  }

  for (const ClassInfo& c : inventory_) {
    if (c.id.twisted()) twisted_squares_.emplace_back(c.id, classify_untwisted(group.mul(c.rep, c.rep)));
  }
}

std::optional<std::size_t> Conjugacy::column_of(const ClassId& c) const {
  for (std::size_t i = 0; i < inventory_.size(); ++i) {
    if (inventory_[i].id == c) return i;
  }
  return std::nullopt;
}

const ClassInfo& Conjugacy::info(const ClassId& c) const {
  const auto i = column_of(c);
  if (!i) throw std::invalid_argument("class " + label(c) + " does not exist for q = " + std::to_string(group_->q()));
  return inventory_[*i];
}

ClassId Conjugacy::classify_untwisted(const GElem& g) const {
  const FieldCtx& f = group_->field();
  const int q = group_->q();
  const Mat2& a = g.mat();
  const auto s = f.sqrt(group_->det(a));
  if (!s) throw std::logic_error("untwisted element with non-square determinant");
  const FElem t = f.div(group_->trace(a), *s);
  const FElem two = f.from_int(2);

  if (t == two || t == f.neg(two)) {
    if (a.b.is_zero() && a.c.is_zero() && a.a == a.d) return {ClassKind::Id, 0};
    return {ClassKind::U, 0};
  }
  if (t.is_zero()) return {ClassKind::W, 0};

  const FElem disc = f.sub(f.mul(t, t), f.from_int(4));
  const FElem half = f.inv(two);
  if (auto r = f.sqrt(disc)) {
    const FElem theta = f.mul(f.add(t, *r), half);
    return {ClassKind::Xi, canonical_xi(q, theta.log())};
  }
  const FElem disc4 = f.embed(disc, Level::Quartic);
  const FElem r4 = *f.sqrt(disc4);
  const FElem theta = f.mul(f.add(f.embed(t, Level::Quartic), r4), f.embed(half, Level::Quartic));
  const auto k = f.dlog(theta, f.zeta());
  if (!k) throw std::logic_error("elliptic eigenvalue outside <zeta>");
  return {ClassKind::Zeta, canonical_zeta(q, *k)};
}

ClassId Conjugacy::classify(const GElem& g) const {
  if (!g.twisted()) return classify_untwisted(g);
  const GElem sq = group_->mul(g, g);
  if (group_->is_identity(sq)) throw std::logic_error("twisted involution encountered");
  const ClassId sq_class = classify_untwisted(sq);

  std::vector<ClassId> confirmed;
  for (const auto& [id, square] : twisted_squares_) {
    if (square != sq_class) continue;
    if (conjugacy_probe(g, info(id).rep)) confirmed.push_back(id);
  }
  if (confirmed.size() != 1) {
    throw std::logic_error("twisted element " + group_->format(g) + " matched " +
                           std::to_string(confirmed.size()) + " canonical classes");
  }
  return confirmed.front();
}

bool Conjugacy::conjugacy_probe(const GElem& g, const GElem& h) const {
  if (g.twisted() != h.twisted()) return false;
  if (g == h) return true;
  const Group& grp = *group_;
  const FieldCtx& f = grp.field();
  const int q = grp.q();
  const bool r = g.twisted();

  // GF(q) coordinates of y = a + b xi.
  const FElem xi = f.xi();
  const FElem inv_gap = f.inv(f.sub(xi, f.sigma(xi)));
  auto coords = [&](FElem y, FElem& a, FElem& b) {
    b = f.mul(f.sub(y, f.sigma(y)), inv_gap);
    a = f.sub(y, f.mul(b, xi));
  };
  std::vector<FElem> scalars;
  scalars.push_back(f.zero());
  for (int i = 0; i < q - 1; ++i) scalars.push_back(f.xi(static_cast<std::int64_t>(i) * (q + 1)));

  auto entry = [](Mat2& m, int i) -> FElem& {
    switch (i) {
      case 0: return m.a;
      case 1: return m.b;
      case 2: return m.c;
      default: return m.d;
    }
  };

  const Mat2& b_mat = h.mat();
  // Scaling X by lambda multiplies delta by lambda^(1-q) in the twisted case,
  // so coset representatives of <xi^(q-1)> suffice there.
  const std::int64_t n_delta = r ? q - 1 : static_cast<std::int64_t>(q) * q - 1;
  for (int eps = 0; eps < 2; ++eps) {
    const Mat2 a_mat = eps ? grp.sigma(g.mat()) : g.mat();
    for (std::int64_t dl = 0; dl < n_delta; ++dl) {
      const Mat2 db = grp.scale(f.xi(dl), b_mat);
      auto apply = [&](const Mat2& x) {
        const Mat2 lhs = grp.matmul(x, a_mat);
        const Mat2 rhs = grp.matmul(db, r ? grp.sigma(x) : x);
        return Mat2{f.sub(lhs.a, rhs.a), f.sub(lhs.b, rhs.b), f.sub(lhs.c, rhs.c), f.sub(lhs.d, rhs.d)};
      };
      std::array<std::array<FElem, 8>, 8> sys{};
      for (int col = 0; col < 8; ++col) {
        Mat2 basis{f.zero(), f.zero(), f.zero(), f.zero()};
        entry(basis, col / 2) = (col % 2 == 0) ? f.one() : xi;
        Mat2 img = apply(basis);
        for (int i = 0; i < 4; ++i) coords(entry(img, i), sys[2 * i][col], sys[2 * i + 1][col]);
      }
      const bool found = for_each_kernel_vector(f, sys, scalars, [&](const std::array<FElem, 8>& v) {
        Mat2 x{};
        for (int i = 0; i < 4; ++i) entry(x, i) = f.add(v[2 * i], f.mul(v[2 * i + 1], xi));
        const FElem d = grp.det(x);
        return !d.is_zero() && f.is_square(d) == (eps == 0);
      });
      if (found) return true;
    }
  }
  return false;
}

}  // namespace mchar
