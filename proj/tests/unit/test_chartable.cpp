#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "direct_values.hpp"
#include "mchar/chartable.hpp"
#include "mchar/verify.hpp"

using namespace mchar;

TEST_CASE("PSL(2,9) degrees") {
  const CharacterTable t = psl_table(3);
  std::vector<std::int64_t> deg;
  for (const auto& r : t.rows) deg.push_back(r.degree);
  CHECK(deg == std::vector<std::int64_t>{1, 9, 5, 5, 10, 8, 8});
  CHECK(t.columns.size() == 7);
}

TEST_CASE("PSL tables are orthonormal") {
  for (int q : {3, 5, 7, 9, 11, 13}) {
    CAPTURE(q);
    const CharacterTable t = psl_table(q);
    CHECK(t.rows.size() == t.columns.size());
    CHECK(orthogonality_rows(t, 1e-9).passed);
    CHECK(orthogonality_cols(t, 1e-9).passed);
    const auto& st = t.rows[t.row_index({CharKind::PslSteinberg, 0})];
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (t.columns[c].label.rfind("zeta:", 0) == 0) CHECK(st.values[c] == CharValue::integer(st.values[c].modulus(), -1));
    }
  }
}

TEST_CASE("degree counts") {
  CHECK(number_by_degree(5) == std::map<std::int64_t, std::int64_t>{{1, 2}, {25, 2}, {26, 7}, {48, 3}, {52, 1}});
  for (int q : {3, 5, 7, 9, 11, 13}) {
    CAPTURE(q);
    std::int64_t classes = 0;
    std::int64_t squares = 0;
    for (const auto& [d, n] : number_by_degree(q)) {
      classes += n;
      squares += n * d * d;
    }
    const std::int64_t q2 = static_cast<std::int64_t>(q) * q;
    CHECK(classes == (q + 1) * (q + 5) / 4);
    CHECK(squares == q2 * (q2 * q2 - 1));
  }
}

TEST_CASE("degenerate case q=3") {
  const Group g(3);
  const Conjugacy c(g);
  const CharacterTable t = build_table(c);
  std::vector<std::int64_t> deg;
  for (const auto& r : t.rows) deg.push_back(r.degree);
  CHECK(deg == std::vector<std::int64_t>{1, 1, 9, 9, 10, 16, 10, 10});
  CHECK(std::count(deg.begin(), deg.end(), 20) == 0);
  CHECK(number_by_degree(3).count(20) == 0);
}

TEST_CASE("generated tables pass both orthogonality relations") {
  for (int q : {3, 5, 7, 9, 11, 13}) {
    CAPTURE(q);
    const Group g(q);
    const Conjugacy c(g);
    const CharacterTable t = build_table(c);
    CHECK(orthogonality_rows(t).passed);
    CHECK(orthogonality_cols(t).passed);
    CHECK(degree_check(t).passed);
    CHECK(t.columns.front().centralizer == g.order());
  }
}

TEST_CASE("chi pairs at q=7 are orthogonal") {
  const Group g(7);
  const Conjugacy c(g);
  const CharacterTable t = build_table(c);
  for (std::int64_t l : l_plus(7)) {
    const auto& a = t.rows[t.row_index({CharKind::ChiPlus, l})];
    const auto& b = t.rows[t.row_index({CharKind::ChiPlusLambda, l})];
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
      s += static_cast<double>(t.columns[k].size) * a.values[k].eval() * std::conj(b.values[k].eval());
    }
    CHECK(std::abs(s) / static_cast<double>(t.group_order) < 1e-8);
  }
}

TEST_CASE("row values against direct complex values") {
  const int q = 7;
  const Group g(q);
  const Conjugacy c(g);
  const CharacterTable t = build_table(c);
  const auto& inv = c.class_inventory();
  for (std::size_t k = 0; k < inv.size(); ++k) {
    const ClassInfo& ci = inv[k];
    for (std::int64_t l : c.index_sets().U) {
      const auto v = t.rows[t.row_index({CharKind::RhoQ, l})].values[k].eval();
      if (ci.id.kind == ClassKind::Xi) CHECK(std::abs(v - oracle::omega_rho(q, ci.id.param * l)) < 1e-12);
    }
    for (std::int64_t m : c.index_sets().V) {
      const auto v = t.rows[t.row_index({CharKind::PiQ, m})].values[k].eval();
      if (ci.id.kind == ClassKind::Zeta) CHECK(std::abs(v + oracle::omega_pi(q, ci.id.param * m)) < 1e-12);
    }
    for (std::int64_t l : l_plus(q)) {
      const auto v = t.rows[t.row_index({CharKind::ChiPlus, l})].values[k].eval();
      if (ci.id.kind == ClassKind::TwDiag) CHECK(std::abs(v - oracle::tau_plus(q, l, ci.id.param)) < 1e-12);
      if (ci.id.kind == ClassKind::TwOff) CHECK(std::abs(v) < 1e-12);
      if (ci.id.kind == ClassKind::Xi) CHECK(std::abs(v - oracle::omega_rho(q, ci.id.param * l) / 2.0) < 1e-12);
    }
    for (std::int64_t l : l_minus(q)) {
      const auto v = t.rows[t.row_index({CharKind::ChiMinusLambda, l})].values[k].eval();
      if (ci.id.kind == ClassKind::TwOff) CHECK(std::abs(v + oracle::tau_minus(q, l, ci.id.param)) < 1e-12);
      if (ci.id.kind == ClassKind::TwDiag) CHECK(std::abs(v) < 1e-12);
    }
  }
}

TEST_CASE("values do not depend on the orbit representative") {
  const int q = 9;
  const std::int64_t n = q * q - 1;
  const std::int64_t m = q * q + 1;
  for (std::int64_t l = 1; l < n; ++l) {
    for (std::int64_t j : {1, 2, 5, 7}) {
      const auto base = omega_rho(q, j * l).eval();
      for (std::int64_t jj : {-j, j * q, -j * q, j + n / 2}) CHECK(std::abs(omega_rho(q, jj * l).eval() - base) < 1e-10);
    }
  }
  for (std::int64_t k = 1; k < m; ++k) {
    const auto base = omega_pi(q, k).eval();
    for (std::int64_t kk : {-k, k * q, -k * q, k + m / 2}) CHECK(std::abs(omega_pi(q, kk).eval() - base) < 1e-10);
  }
}

TEST_CASE("labels and lookup") {
  const Group g(5);
  const CharacterTable t = build_table(Conjugacy(g));
  CHECK(label(t.rows.front().label) == "iota");
  CHECK(t.column_index("I") == 0);
  CHECK_THROWS_AS((void)t.column_index("nope"), std::invalid_argument);
  CHECK_THROWS_AS((void)t.row_index({CharKind::ChiPlus, 99}), std::invalid_argument);
}
