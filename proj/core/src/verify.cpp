#include "mchar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mchar/rep.hpp"

namespace mchar {
namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckReport finish(std::string name, double dev, double tol, const Stopwatch& sw, std::string detail,
                   bool extra_ok = true) {
  return CheckReport{std::move(name), extra_ok && dev <= tol, dev, tol, sw.seconds(), std::move(detail)};
}

std::vector<std::vector<cd>> evaluate(const CharacterTable& t) {
  std::vector<std::vector<cd>> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) {
    std::vector<cd> v;
    v.reserve(row.values.size());
    for (const auto& x : row.values) v.push_back(x.eval());
    out.push_back(std::move(v));
  }
  return out;
}

cd inner(const CharacterTable& t, const std::vector<cd>& a, const std::vector<cd>& b) {
  cd s = 0;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    s += static_cast<double>(t.columns[c].size) * a[c] * std::conj(b[c]);
  }
  return s / static_cast<double>(t.group_order);
}

// PSL classes of h and of its outer conjugate for an untwisted G class.
std::pair<PslClass, PslClass> psl_pair(int q, const ClassId& c) {
  const std::int64_t quarter = (static_cast<std::int64_t>(q) * q - 1) / 4;
  auto xi = [&](std::int64_t j) {
    const std::int64_t e = psl_xi_exponent(q, j);
    return e == quarter ? PslClass{PslKind::W, 0} : PslClass{PslKind::Xi, e};
  };
  switch (c.kind) {
    case ClassKind::Id: return {{PslKind::I, 0}, {PslKind::I, 0}};
    case ClassKind::U: return {{PslKind::B1, 0}, {PslKind::Beps, 0}};
    case ClassKind::W: return {{PslKind::W, 0}, {PslKind::W, 0}};
    case ClassKind::Xi: return {xi(c.param), xi(c.param * q)};
    case ClassKind::Zeta:
      return {{PslKind::Zeta, psl_zeta_exponent(q, c.param)}, {PslKind::Zeta, psl_zeta_exponent(q, c.param * q)}};
    default: throw std::invalid_argument("twisted class has no PSL image");
  }
}

std::size_t psl_column(const CharacterTable& psl, const PslClass& c) { return psl.column_index(label(c)); }

bool contains(const std::vector<std::int64_t>& v, std::int64_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

CheckReport orthogonality_rows(const CharacterTable& t, double tol) {
  Stopwatch sw;
  const auto v = evaluate(t);
  double dev = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a; b < v.size(); ++b) {
      const cd s = inner(t, v[a], v[b]);
      dev = std::max(dev, std::abs(s - cd(a == b ? 1.0 : 0.0)));
    }
  }
  return finish("orthogonality_rows", dev, tol, sw, std::to_string(v.size()) + " rows");
}

CheckReport orthogonality_cols(const CharacterTable& t, double tol) {
  Stopwatch sw;
  const auto v = evaluate(t);
  double dev = 0;
  const std::size_t n = t.columns.size();
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = c; d < n; ++d) {
      cd s = 0;
      for (const auto& row : v) s += row[c] * std::conj(row[d]);
      s /= static_cast<double>(t.columns[c].centralizer);
      dev = std::max(dev, std::abs(s - cd(c == d ? 1.0 : 0.0)));
    }
  }
  const bool square = v.size() == n;
  return finish("orthogonality_cols", dev, tol, sw, std::to_string(n) + " columns", square);
}

CheckReport degree_check(const CharacterTable& t) {
  Stopwatch sw;
  const auto got = degree_multiset(t);
  const auto want = number_by_degree(t.q);
  std::int64_t sum = 0;
  for (const auto& row : t.rows) sum += row.degree * row.degree;
  const bool ok = got == want && sum == t.group_order;
  std::ostringstream os;
  os << "sum of squared degrees " << sum << ", |G| " << t.group_order;
  for (const auto& [d, n] : got) os << "; " << n << " x " << d;
  return finish("degrees", ok ? 0.0 : 1.0, 0.0, sw, os.str());
}

std::int32_t ClassPartition::orbit_of(const Group& g, const GElem& x) const {
  return orbit[static_cast<std::size_t>(index_of_key[static_cast<std::size_t>(g.key(x))])];
}

ClassPartition partition_classes(const Conjugacy& conj, int cap) {
  const Group& g = conj.group();
  ClassPartition p;
  p.elements = g.enumerate(cap);
  p.index_of_key.assign(static_cast<std::size_t>(g.key_space()), -1);
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    p.index_of_key[static_cast<std::size_t>(g.key(p.elements[i]))] = static_cast<std::int32_t>(i);
  }
  const auto gens = g.generators();
  std::vector<GElem> gens_inv;
  for (const auto& s : gens) gens_inv.push_back(g.inv(s));
  p.orbit.assign(p.elements.size(), -1);
  for (std::size_t start = 0; start < p.elements.size(); ++start) {
    if (p.orbit[start] >= 0) continue;
    const auto id = static_cast<std::int32_t>(p.orbits.size());
    std::vector<std::int32_t> members{static_cast<std::int32_t>(start)};
    p.orbit[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const GElem& x = p.elements[static_cast<std::size_t>(members[head])];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const GElem y = g.mul(g.mul(gens[k], x), gens_inv[k]);
        const std::int32_t yi = p.index_of_key[static_cast<std::size_t>(g.key(y))];
        if (p.orbit[static_cast<std::size_t>(yi)] < 0) {
          p.orbit[static_cast<std::size_t>(yi)] = id;
          members.push_back(yi);
        }
      }
    }
    p.orbits.push_back(std::move(members));
    const ClassId c = conj.classify(p.elements[start]);
    const auto col = conj.column_of(c);
    if (!col) throw std::logic_error("classify returned a label outside the inventory: " + label(c));
    p.column.push_back(*col);
  }
  return p;
}

CheckReport brute_force_validate(const Conjugacy& conj, const ClassPartition& part, const CharacterTable& t,
                                 double tol) {
  Stopwatch sw;
  const Group& g = conj.group();
  const auto& inv = conj.class_inventory();
  std::ostringstream os;
  bool ok = part.orbits.size() == inv.size();
  os << part.orbits.size() << " orbits, " << inv.size() << " inventory classes";

  std::vector<int> hits(inv.size(), 0);
  for (std::size_t o = 0; o < part.orbits.size(); ++o) {
    const std::size_t c = part.column[o];
    ++hits[c];
    if (static_cast<std::int64_t>(part.orbits[o].size()) != inv[c].size) {
      ok = false;
      os << "; size mismatch at " << label(inv[c].id);
    }
    const auto& members = part.orbits[o];
    const std::size_t step = g.q() <= 3 ? 1 : std::max<std::size_t>(1, members.size() / 4);
    for (std::size_t i = 0; i < members.size(); i += step) {
      if (conj.column_of(conj.classify(part.elements[static_cast<std::size_t>(members[i])])) != c) {
        ok = false;
        os << "; classify disagrees inside " << label(inv[c].id);
        break;
      }
    }
  }
  for (std::size_t c = 0; c < inv.size(); ++c) {
    if (hits[c] != 1) {
      ok = false;
      os << "; " << label(inv[c].id) << " hit " << hits[c] << " times";
    }
    if (part.orbit_of(g, inv[c].rep) < 0 || part.column[static_cast<std::size_t>(part.orbit_of(g, inv[c].rep))] != c) {
      ok = false;
      os << "; representative of " << label(inv[c].id) << " lands elsewhere";
    }
  }

  // Full-group norms, one term per element.
  const auto v = evaluate(t);
  double dev = 0;
  for (const auto& row : v) {
    long double s = 0;
    for (std::size_t o = 0; o < part.orbits.size(); ++o) {
      s += static_cast<long double>(part.orbits[o].size()) * std::norm(row[part.column[o]]);
    }
    dev = std::max(dev, static_cast<double>(std::abs(s / static_cast<long double>(part.elements.size()) - 1)));
  }
  os << "; worst full-group norm deviation " << dev;
  return finish("brute_force", dev, tol, sw, os.str(), ok);
}

CheckReport reality_check(const Conjugacy& conj, const ClassPartition& part) {
  Stopwatch sw;
  const Group& g = conj.group();
  const auto& inv = conj.class_inventory();
  int bad = 0;
  std::ostringstream os;
  int real = 0;
  for (std::size_t c = 0; c < inv.size(); ++c) {
    const auto o = part.orbit_of(g, inv[c].rep);
    const bool brute = part.orbit_of(g, g.inv(inv[c].rep)) == o;
    real += brute ? 1 : 0;
    if (brute != conj.is_real_class(inv[c].id)) {
      ++bad;
      os << label(inv[c].id) << " ";
    }
  }
  os << real << " real classes of " << inv.size();
  return finish("reality", bad, 0.0, sw, os.str());
}

CheckReport steinberg_check(const Conjugacy& conj, const CharacterTable& t) {
  Stopwatch sw;
  const auto& inv = conj.class_inventory();
  const auto& row = t.rows[t.row_index({CharKind::Steinberg, 0})];
  double dev = 0;
  for (std::size_t c = 0; c < inv.size(); ++c) {
    const double fixed = conj.group().fixed_point_count(inv[c].rep) - 1;
    dev = std::max(dev, std::abs(row.values[c].eval() - cd(fixed)));
  }
  return finish("steinberg", dev, kTableTolerance, sw, std::to_string(inv.size()) + " representatives");
}

std::vector<cd> induced_values(const Conjugacy& conj, const CharacterTable& psl, std::size_t psl_row) {
  const int q = conj.group().q();
  std::vector<cd> out;
  const auto& row = psl.rows[psl_row];
  for (const ClassInfo& c : conj.class_inventory()) {
    if (c.id.twisted()) {
      out.emplace_back(0);
      continue;
    }
    const auto [h, hg] = psl_pair(q, c.id);
    out.push_back(row.values[psl_column(psl, h)].eval() + row.values[psl_column(psl, hg)].eval());
  }
  return out;
}

std::vector<CharLabel> predicted_constituents(int q, const CharLabel& r) {
  switch (r.kind) {
    case CharKind::PslIota: return {{CharKind::Iota, 0}, {CharKind::Lambda, 0}};
    case CharKind::PslSteinberg: return {{CharKind::Steinberg, 0}, {CharKind::SteinbergLambda, 0}};
    case CharKind::PslRho:
    case CharKind::PslRhoPrime: return {{CharKind::RhoSum, 0}};
    case CharKind::PslPi: return {{CharKind::PiQ, canonical_zeta(q, r.param)}};
    case CharKind::PslRhoL:
      if (contains(l_plus(q), r.param)) return {{CharKind::ChiPlus, r.param}, {CharKind::ChiPlusLambda, r.param}};
      if (contains(l_minus(q), r.param)) return {{CharKind::ChiMinus, r.param}, {CharKind::ChiMinusLambda, r.param}};
      return {{CharKind::RhoQ, canonical_xi(q, r.param)}};
    default: throw std::invalid_argument("not a PSL row: " + label(r));
  }
}

CheckReport induction_check(const Conjugacy& conj, const CharacterTable& t, double tol) {
  Stopwatch sw;
  const int q = conj.group().q();
  const CharacterTable psl = psl_table(q);
  const auto v = evaluate(t);
  double dev = 0;
  bool ok = true;
  std::ostringstream os;
  int norm1 = 0;
  int norm2 = 0;
  for (std::size_t r = 0; r < psl.rows.size(); ++r) {
    const auto ind = induced_values(conj, psl, r);
    const double norm = inner(t, ind, ind).real();
    const auto want = predicted_constituents(q, psl.rows[r].label);
    if (std::abs(norm - static_cast<double>(want.size())) > tol) {
      ok = false;
      os << label(psl.rows[r].label) << " has norm " << norm << "; ";
    }
    (want.size() == 1 ? norm1 : norm2) += 1;
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
      const bool expected = std::find(want.begin(), want.end(), t.rows[k].label) != want.end();
      dev = std::max(dev, std::abs(inner(t, ind, v[k]) - cd(expected ? 1.0 : 0.0)));
    }
  }
  os << psl.rows.size() << " PSL rows, " << norm1 << " with norm 1, " << norm2 << " with norm 2";
  return finish("induction", dev, tol, sw, os.str(), ok);
}

CheckReport rep_check(const Conjugacy& conj, const CharacterTable& t, double tol, std::uint64_t seed) {
  Stopwatch sw;
  const Group& g = conj.group();
  const int q = g.q();
  const FieldCtx& f = g.field();
  const auto& inv = conj.class_inventory();
  const CharacterTable psl = psl_table(q);
  std::mt19937_64 rng(seed);
  std::ostringstream os;
  bool ok = true;
  double dev = 0;
  auto note = [&](double d, const std::string& what) {
    if (d > tol && dev <= tol) os << "first failure: " << what << " (" << d << "); ";
    dev = std::max(dev, d);
  };

  const auto shape = f_cycle_shape(f);
  const bool power_of_3 = f.p() == 3;
  if (!shape.three_cycles || shape.fixed_points != (power_of_3 ? 1 : 2)) {
    ok = false;
    os << "f has " << shape.fixed_points << " fixed points; ";
  }

  std::vector<std::int64_t> ells = l_plus(q);
  for (std::int64_t l : l_minus(q)) ells.push_back(l);
  for (std::int64_t ell : ells) {
    const InducedRep rep(g, ell);
    const std::string tag = "l=" + std::to_string(ell);
    const int n = rep.dim();
    const CMatrix id = CMatrix::Identity(n, n);

    note((rep.phi_lift(rep.generator(ClosedForm::G1)) - rep.closed_form(ClosedForm::G1)).cwiseAbs().maxCoeff(),
         tag + " g1");
    note((rep.phi_lift(rep.generator(ClosedForm::G2)) - rep.closed_form(ClosedForm::G2)).cwiseAbs().maxCoeff(),
         tag + " g2");
    for (std::int64_t j = 1; j <= q; j += 2) {
      if (j <= q - 2) {
        note((rep.phi_lift(rep.generator(ClosedForm::G3, j)) - rep.closed_form(ClosedForm::G3, j))
                 .cwiseAbs()
                 .maxCoeff(),
             tag + " g3");
      }
      note((rep.phi_lift(rep.generator(ClosedForm::G4, j)) - rep.closed_form(ClosedForm::G4, j))
               .cwiseAbs()
               .maxCoeff(),
           tag + " g4");
    }

    for (int k = 0; k < 20; ++k) {
      const GElem a = g.random(rng);
      const GElem b = g.random(rng);
      const CMatrix ea = rep.phi_lift(a);
      note((rep.phi_lift(g.mul(a, b)) - ea * rep.phi_lift(b)).cwiseAbs().maxCoeff(), tag + " homomorphism");
      note((ea * ea.adjoint() - id).cwiseAbs().maxCoeff(), tag + " unitarity");
    }

    const CMatrix m = rep.intertwiner();
    note(rep.check_intertwiner(m).worst(), tag + " intertwiner");

    const std::size_t rho = psl.row_index({CharKind::PslRhoL, ell});
    for (const ClassInfo& c : inv) {
      if (c.id.twisted()) continue;
      const CMatrix e = rep.phi_lift(c.rep);
      const cd want = psl.rows[rho].values[psl_column(psl, psl_pair(q, c.id).first)].eval();
      note(std::abs(rep.block(e, false, false).trace() - want), tag + " restriction " + label(c.id));
      note(std::abs(rep.block(e, true, true).trace() - want), tag + " restriction' " + label(c.id));
    }

    if (rep.in_l_minus()) {
      for (std::int64_t j = 1; j <= q; j += 2) {
        note(sum_identity_deviation(f, ell, j), tag + " f-sum identity");
        if (!residues_distinct(f, j)) {
          ok = false;
          os << tag << " residues collide at j=" << j << "; ";
        }
      }
    }

    const bool plus = rep.in_l_plus();
    const auto& chi = t.rows[t.row_index({plus ? CharKind::ChiPlus : CharKind::ChiMinus, ell})];
    const auto& chil = t.rows[t.row_index({plus ? CharKind::ChiPlusLambda : CharKind::ChiMinusLambda, ell})];
    double d_chi = 0;
    double d_chil = 0;
    for (std::size_t c = 0; c < inv.size(); ++c) {
      if (!inv[c].id.twisted()) continue;
      const cd tr = rep.chi_trace(inv[c].rep, m);
      d_chi = std::max(d_chi, std::abs(tr - chi.values[c].eval()));
      d_chil = std::max(d_chil, std::abs(tr - chil.values[c].eval()));
      for (int k = 0; k < 20; ++k) {
        const GElem x = g.random(rng);
        note(std::abs(rep.chi_trace(g.conjugate(inv[c].rep, x), m) - tr), tag + " class function");
      }
    }
    if ((d_chi <= tol) == (d_chil <= tol)) {
      ok = false;
      os << tag << " trace matches " << (d_chi <= tol ? "both" : "neither") << " sign; ";
    }
    note(std::min(d_chi, d_chil), tag + " chi_trace");
  }
  os << ells.size() << " values of l";
  return finish("rep", dev, tol, sw, os.str(), ok);
}

FrobeniusCount frobenius_count(const CharacterTable& t, std::size_t c1, std::size_t c2, std::size_t c3,
                               double tol) {
  cld s = 0;
  for (const auto& row : t.rows) {
    s += row.values[c1].eval_long() * row.values[c2].eval_long() * row.values[c3].eval_long() /
         static_cast<long double>(row.degree);
  }
  const long double scale = static_cast<long double>(t.columns[c1].size) * t.columns[c2].size *
                            t.columns[c3].size / static_cast<long double>(t.group_order);
  s *= scale;
  FrobeniusCount out;
  out.raw = {static_cast<double>(s.real()), static_cast<double>(s.imag())};
  out.count = std::llround(s.real());
  out.deviation = static_cast<double>(std::abs(s - cld(static_cast<long double>(out.count), 0)));
  out.valid = out.deviation <= tol && out.count >= 0;
  return out;
}

std::vector<std::int64_t> triple_counts(const Conjugacy& conj, const ClassPartition& part) {
  const Group& g = conj.group();
  const std::size_t k = conj.class_inventory().size();
  std::vector<std::vector<std::int32_t>> by_col(k);
  for (std::size_t o = 0; o < part.orbits.size(); ++o) {
    auto& dst = by_col[part.column[o]];
    dst.insert(dst.end(), part.orbits[o].begin(), part.orbits[o].end());
  }
  std::vector<std::int64_t> n(k * k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (const auto xi : by_col[a]) {
        const GElem& x = part.elements[static_cast<std::size_t>(xi)];
        for (const auto yi : by_col[b]) {
          const GElem z = g.inv(g.mul(x, part.elements[static_cast<std::size_t>(yi)]));
          ++n[(a * k + b) * k + part.column[static_cast<std::size_t>(part.orbit_of(g, z))]];
        }
      }
    }
  }
  return n;
}

CheckReport frobenius_check(const CharacterTable& t, const Conjugacy& conj, const ClassPartition* part,
                            int samples, std::uint64_t seed) {
  Stopwatch sw;
  const std::size_t k = t.columns.size();
  double dev = 0;
  bool ok = true;
  std::ostringstream os;
  if (part != nullptr) {
    const auto brute = triple_counts(conj, *part);
    int mismatches = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          const auto r = frobenius_count(t, a, b, c);
          dev = std::max(dev, r.deviation);
          if (!r.valid || r.count != brute[(a * k + b) * k + c]) ++mismatches;
        }
      }
    }
    ok = mismatches == 0;
    os << k * k * k << " triples against exhaustive counts, " << mismatches << " mismatches";
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
      const auto r = frobenius_count(t, pick(rng), pick(rng), pick(rng));
      dev = std::max(dev, r.deviation);
      if (!r.valid) ++bad;
    }
    ok = bad == 0;
    os << samples << " random triples, " << bad << " non-integral or negative";
  }
  return finish("frobenius", dev, kIntegralityTolerance, sw, os.str(), ok);
}

}  // namespace mchar
