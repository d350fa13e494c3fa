#pragma once

// Closed-form character tables of PSL(2, q^2) and of M(q^2).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mchar/charvalue.hpp"
#include "mchar/conj.hpp"

namespace mchar {

enum class CharKind : std::uint8_t {
  // M(q^2)
  Iota,
  Lambda,
  Steinberg,
  SteinbergLambda,
  RhoSum,
  PiQ,
  RhoQ,
  ChiPlus,
  ChiPlusLambda,
  ChiMinus,
  ChiMinusLambda,
  // PSL(2, q^2)
  PslIota,
  PslSteinberg,
  PslRho,
  PslRhoPrime,
  PslRhoL,
  PslPi,
};

struct CharLabel {
  CharKind kind = CharKind::Iota;
  std::int64_t param = 0;  // m, l, or 0

  friend bool operator==(const CharLabel&, const CharLabel&) = default;
};

/// "iota", "lambda", "Sigma", "Sigma*lambda", "rho+rho'", "pi[m]", "rho[l]",
/// "chi+[l]", "chi+[l]*lambda", "chi-[l]", "chi-[l]*lambda"; PSL rows use
/// "iota", "St", "rho", "rho'", "rho_l[l]", "pi_m[m]".
std::string label(const CharLabel& c);

struct TableColumn {
  std::string label;
  std::int64_t size = 0;
  std::int64_t centralizer = 0;
};

struct CharRow {
  CharLabel label;
  std::int64_t degree = 0;
  std::vector<CharValue> values;
};

struct CharacterTable {
  int q = 0;
  std::int64_t group_order = 0;
  std::vector<TableColumn> columns;
  std::vector<CharRow> rows;

  [[nodiscard]] std::size_t row_index(const CharLabel& c) const;
  [[nodiscard]] std::size_t column_index(std::string_view column_label) const;
};

/// Classes of PSL(2, q^2): I, B1, Beps, w, a(xi^j) for 1 <= j <= (q^2-5)/4 and
/// a(zeta^k) for 1 <= k <= (q^2-1)/4.
enum class PslKind : std::uint8_t { I, B1, Beps, W, Xi, Zeta };

struct PslClass {
  PslKind kind = PslKind::I;
  std::int64_t param = 0;

  friend bool operator==(const PslClass&, const PslClass&) = default;
};

std::string label(const PslClass& c);
/// Columns of psl_table in order.
std::vector<PslClass> psl_classes(int q);
/// j -> min(j, (q^2-1)/2 - j) after reduction mod (q^2-1)/2.
std::int64_t psl_xi_exponent(int q, std::int64_t j);
/// k -> min(k, (q^2+1)/2 - k) after reduction mod (q^2+1)/2.
std::int64_t psl_zeta_exponent(int q, std::int64_t k);

CharacterTable psl_table(int q);
CharacterTable build_table(const Conjugacy& conj);

/// Count of irreducible characters by degree from the closed formulas.
std::map<std::int64_t, std::int64_t> number_by_degree(int q);
/// The same count read off a table.
std::map<std::int64_t, std::int64_t> degree_multiset(const CharacterTable& table);

/// L+ = {r(q+1)/2 : 1 <= r <= (q-3)/2}, L- = {s(q-1)/2 : 1 <= s <= (q-1)/2}.
std::vector<std::int64_t> l_plus(int q);
std::vector<std::int64_t> l_minus(int q);

/// omega_rho(x) = alpha^x + alpha^-x + alpha^(xq) + alpha^(-xq).
CharValue omega_rho(int q, std::int64_t x);
/// omega_pi(x) = beta^x + beta^-x + beta^(xq) + beta^(-xq).
CharValue omega_pi(int q, std::int64_t x);
/// i^r (alpha_r^j + alpha_r^-j) for l = r(q+1)/2.
CharValue tau_plus(int q, std::int64_t l, std::int64_t j);
/// i^s (beta_s^j + beta_s^-j) for l = s(q-1)/2.
CharValue tau_minus(int q, std::int64_t l, std::int64_t j);

}  // namespace mchar
