#include "mchar/chartable.hpp"

#include <cmath>
#include <stdexcept>

namespace mchar {
namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t sign_pow(std::int64_t e) { return mod(e, 2) == 0 ? 1 : -1; }

std::int64_t q2_of(int q) { return static_cast<std::int64_t>(q) * q; }

// e^(x) + e^(-x) for the root with the given step.
CharValue pair_sum(std::int64_t n, std::int64_t step, std::int64_t x) {
  return CharValue::root(n, step * x) + CharValue::root(n, -step * x);
}

}  // namespace

std::string label(const CharLabel& c) {
  const std::string p = "[" + std::to_string(c.param) + "]";
  switch (c.kind) {
    case CharKind::Iota: return "iota";
    case CharKind::Lambda: return "lambda";
    case CharKind::Steinberg: return "Sigma";
    case CharKind::SteinbergLambda: return "Sigma*lambda";
    case CharKind::RhoSum: return "rho+rho'";
    case CharKind::PiQ: return "pi" + p;
    case CharKind::RhoQ: return "rho" + p;
    case CharKind::ChiPlus: return "chi+" + p;
    case CharKind::ChiPlusLambda: return "chi+" + p + "*lambda";
    case CharKind::ChiMinus: return "chi-" + p;
    case CharKind::ChiMinusLambda: return "chi-" + p + "*lambda";
    case CharKind::PslIota: return "iota";
    case CharKind::PslSteinberg: return "St";
    case CharKind::PslRho: return "rho";
    case CharKind::PslRhoPrime: return "rho'";
    case CharKind::PslRhoL: return "rho_l" + p;
    case CharKind::PslPi: return "pi_m" + p;
  }
  return "?";
}

std::string label(const PslClass& c) {
  switch (c.kind) {
    case PslKind::I: return "I";
    case PslKind::B1: return "B1";
    case PslKind::Beps: return "Beps";
    case PslKind::W: return "w";
    case PslKind::Xi: return "xi:" + std::to_string(c.param);
    case PslKind::Zeta: return "zeta:" + std::to_string(c.param);
  }
  return "?";
}

std::size_t CharacterTable::row_index(const CharLabel& c) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].label == c) return i;
  }
  throw std::invalid_argument("no character " + label(c) + " in table");
}

std::size_t CharacterTable::column_index(std::string_view column_label) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].label == column_label) return i;
  }
  throw std::invalid_argument("no class " + std::string(column_label) + " in table");
}

std::vector<PslClass> psl_classes(int q) {
  const std::int64_t q2 = q2_of(q);
  std::vector<PslClass> out{{PslKind::I, 0}, {PslKind::B1, 0}, {PslKind::Beps, 0}, {PslKind::W, 0}};
  for (std::int64_t j = 1; j <= (q2 - 5) / 4; ++j) out.push_back({PslKind::Xi, j});
  for (std::int64_t k = 1; k <= (q2 - 1) / 4; ++k) out.push_back({PslKind::Zeta, k});
  return out;
}

std::int64_t psl_xi_exponent(int q, std::int64_t j) {
  const std::int64_t h = (q2_of(q) - 1) / 2;
  const std::int64_t r = mod(j, h);
  return std::min(r, h - r);
}

std::int64_t psl_zeta_exponent(int q, std::int64_t k) {
  const std::int64_t h = (q2_of(q) + 1) / 2;
  const std::int64_t r = mod(k, h);
  return std::min(r, h - r);
}

std::vector<std::int64_t> l_plus(int q) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r <= (q - 3) / 2; ++r) out.push_back(r * (q + 1) / 2);
  return out;
}

std::vector<std::int64_t> l_minus(int q) {
  std::vector<std::int64_t> out;
  for (std::int64_t s = 1; s <= (q - 1) / 2; ++s) out.push_back(s * (q - 1) / 2);
  return out;
}

CharValue omega_rho(int q, std::int64_t x) {
  const RootSteps st = RootSteps::for_q(q);
  return pair_sum(st.n, st.alpha, x) + pair_sum(st.n, st.alpha, x * q);
}

CharValue omega_pi(int q, std::int64_t x) {
  const RootSteps st = RootSteps::for_q(q);
  return pair_sum(st.n, st.beta, x) + pair_sum(st.n, st.beta, x * q);
}

CharValue tau_plus(int q, std::int64_t l, std::int64_t j) {
  const RootSteps st = RootSteps::for_q(q);
  const std::int64_t r = 2 * l / (q + 1);
  return CharValue::root(st.n, st.i * r) * pair_sum(st.n, st.alpha_1 * r, j);
}

CharValue tau_minus(int q, std::int64_t l, std::int64_t j) {
  const RootSteps st = RootSteps::for_q(q);
  const std::int64_t s = 2 * l / (q - 1);
  return CharValue::root(st.n, st.i * s) * pair_sum(st.n, st.beta_1 * s, j);
}

CharacterTable psl_table(int q) {
  const std::int64_t q2 = q2_of(q);
  const RootSteps st = RootSteps::for_q(q);
  const std::int64_t n = st.n;
  auto I = [n](std::int64_t c) { return CharValue::integer(n, c); };

  CharacterTable t;
  t.q = q;
  t.group_order = q2 * (q2 * q2 - 1) / 2;
  const std::vector<PslClass> classes = psl_classes(q);
  for (const PslClass& c : classes) {
    std::int64_t size = 0;
    switch (c.kind) {
      case PslKind::I: size = 1; break;
      case PslKind::B1:
      case PslKind::Beps: size = (q2 * q2 - 1) / 2; break;
      case PslKind::W: size = q2 * (q2 + 1) / 2; break;
      case PslKind::Xi: size = q2 * (q2 + 1); break;
      case PslKind::Zeta: size = q2 * (q2 - 1); break;
    }
    t.columns.push_back({label(c), size, t.group_order / size});
  }

  auto add_row = [&](CharLabel lab, auto&& value) {
    CharRow row{lab, 0, {}};
    for (const PslClass& c : classes) row.values.push_back(value(c));
    row.degree = std::llround(row.values.front().eval().real());
    t.rows.push_back(std::move(row));
  };

  add_row({CharKind::PslIota, 0}, [&](const PslClass&) { return I(1); });
  add_row({CharKind::PslSteinberg, 0}, [&](const PslClass& c) {
    switch (c.kind) {
      case PslKind::I: return I(q2);
      case PslKind::B1:
      case PslKind::Beps: return I(0);
      case PslKind::Zeta: return I(-1);
      default: return I(1);
    }
  });
  for (bool prime : {false, true}) {
    add_row({prime ? CharKind::PslRhoPrime : CharKind::PslRho, 0}, [&](const PslClass& c) {
      switch (c.kind) {
        case PslKind::I: return I((q2 + 1) / 2);
        case PslKind::B1: return I(prime ? (1 - q) / 2 : (1 + q) / 2);
        case PslKind::Beps: return I(prime ? (1 + q) / 2 : (1 - q) / 2);
        case PslKind::W: return I(1);
        case PslKind::Xi: return I(sign_pow(c.param));
        case PslKind::Zeta: return I(0);
      }
      return I(0);
    });
  }
  for (std::int64_t l = 1; l <= (q2 - 5) / 4; ++l) {
    add_row({CharKind::PslRhoL, l}, [&](const PslClass& c) {
      switch (c.kind) {
        case PslKind::I: return I(q2 + 1);
        case PslKind::B1:
        case PslKind::Beps: return I(1);
        case PslKind::W: return I(2 * sign_pow(l));
        case PslKind::Xi: return pair_sum(n, st.alpha, c.param * l);
        case PslKind::Zeta: return I(0);
      }
      return I(0);
    });
  }
  for (std::int64_t m = 1; m <= (q2 - 1) / 4; ++m) {
    add_row({CharKind::PslPi, m}, [&](const PslClass& c) {
      switch (c.kind) {
        case PslKind::I: return I(q2 - 1);
        case PslKind::B1:
        case PslKind::Beps: return I(-1);
        case PslKind::Zeta: return -pair_sum(n, st.beta, c.param * m);
        default: return I(0);
      }
    });
  }
  return t;
}

CharacterTable build_table(const Conjugacy& conj) {
  const int q = conj.group().q();
  const std::int64_t q2 = q2_of(q);
  const std::int64_t n = CharValue::modulus_for(q);
  auto I = [n](std::int64_t c) { return CharValue::integer(n, c); };
  const auto& inv = conj.class_inventory();

  CharacterTable t;
  t.q = q;
  t.group_order = conj.group().order();
  for (const ClassInfo& c : inv) t.columns.push_back({label(c.id), c.size, c.centralizer});

  auto add_row = [&](CharLabel lab, std::int64_t degree, auto&& value) {
    CharRow row{lab, degree, {}};
    for (const ClassInfo& c : inv) row.values.push_back(value(c));
    t.rows.push_back(std::move(row));
  };
  auto twist_sign = [](const ClassInfo& c, bool negate) { return c.id.twisted() && negate ? -1 : 1; };

  for (bool lam : {false, true}) {
    add_row({lam ? CharKind::Lambda : CharKind::Iota, 0}, 1,
            [&](const ClassInfo& c) { return I(twist_sign(c, lam)); });
  }
  for (bool lam : {false, true}) {
    add_row({lam ? CharKind::SteinbergLambda : CharKind::Steinberg, 0}, q2, [&](const ClassInfo& c) {
      switch (c.family) {
        case Family::Identity: return I(q2);
        case Family::Unipotent: return I(0);
        case Family::ZetaGeneric: return I(-1);
        case Family::TwistedDiag: return I(lam ? -1 : 1);
        case Family::TwistedOff: return I(lam ? 1 : -1);
        default: return I(1);
      }
    });
  }
  add_row({CharKind::RhoSum, 0}, q2 + 1, [&](const ClassInfo& c) {
    switch (c.family) {
      case Family::Identity: return I(q2 + 1);
      case Family::Unipotent: return I(1);
      case Family::OrderTwoLike: return I(2);
      case Family::XiGeneric:
      case Family::XiBoundary: return I(2 * sign_pow(c.id.param));
      default: return I(0);
    }
  });
  for (std::int64_t m : conj.index_sets().V) {
    add_row({CharKind::PiQ, m}, 2 * (q2 - 1), [&](const ClassInfo& c) {
      switch (c.family) {
        case Family::Identity: return I(2 * (q2 - 1));
        case Family::Unipotent: return I(-2);
        case Family::ZetaGeneric: return -omega_pi(q, c.id.param * m);
        default: return I(0);
      }
    });
  }
  for (std::int64_t l : conj.index_sets().U) {
    add_row({CharKind::RhoQ, l}, 2 * (q2 + 1), [&](const ClassInfo& c) {
      switch (c.family) {
        case Family::Identity: return I(2 * (q2 + 1));
        case Family::Unipotent: return I(2);
        case Family::OrderTwoLike: return I(4 * sign_pow(l));
        case Family::XiGeneric:
        case Family::XiBoundary: return omega_rho(q, c.id.param * l);
        default: return I(0);
      }
    });
  }

  auto chi_rows = [&](std::int64_t l, bool plus) {
    for (bool lam : {false, true}) {
      const CharKind kind = plus ? (lam ? CharKind::ChiPlusLambda : CharKind::ChiPlus)
                                 : (lam ? CharKind::ChiMinusLambda : CharKind::ChiMinus);
      add_row({kind, l}, q2 + 1, [&](const ClassInfo& c) {
        switch (c.family) {
          case Family::Identity: return I(q2 + 1);
          case Family::Unipotent: return I(1);
          case Family::OrderTwoLike: return I(2 * sign_pow(l));
          case Family::XiGeneric:
          case Family::XiBoundary: return omega_rho(q, c.id.param * l).halved();
          case Family::TwistedDiag:
            return plus ? tau_plus(q, l, c.id.param).scaled(lam ? -1 : 1) : I(0);
          case Family::TwistedOff:
            return plus ? I(0) : tau_minus(q, l, c.id.param).scaled(lam ? -1 : 1);
          default: return I(0);
        }
      });
    }
  };
  for (std::int64_t l : l_plus(q)) chi_rows(l, true);
  for (std::int64_t l : l_minus(q)) chi_rows(l, false);
  return t;
}

std::map<std::int64_t, std::int64_t> number_by_degree(int q) {
  const std::int64_t q1 = q;
  const std::int64_t q2 = q1 * q1;
  std::map<std::int64_t, std::int64_t> out{{1, 2}, {q2, 2}, {2 * (q2 - 1), (q2 - 1) / 8}, {q2 + 1, 2 * q1 - 3}};
  const std::int64_t big = (q1 - 1) * (q1 - 3) / 8;
  if (big > 0) out[2 * (q2 + 1)] = big;
  return out;
}

std::map<std::int64_t, std::int64_t> degree_multiset(const CharacterTable& table) {
  std::map<std::int64_t, std::int64_t> out;
  for (const CharRow& r : table.rows) ++out[r.degree];
  return out;
}

}  // namespace mchar
