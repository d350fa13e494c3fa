#include <doctest.h>

#include <stdexcept>

#include <numbers>

#include "direct_values.hpp"
#include "generators.hpp"
#include "mchar/chartable.hpp"
#include "mchar/rep.hpp"

using namespace mchar;

namespace {

std::vector<std::int64_t> all_l(int q) {
  auto v = l_plus(q);
  for (auto l : l_minus(q)) v.push_back(l);
  return v;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("linear character of the upper triangular subgroup") {
  const Group g(5);
  const FieldCtx& f = g.field();
  const InducedRep rep(g, 3);
  CHECK(std::abs(rep.phi_linear(g.identity()) - 1.0) < 1e-15);
  const GElem h = g.make(Mat2{f.xi(), f.zero(), f.zero(), f.xi(-1)});
  CHECK(std::abs(rep.phi_linear(h) - std::complex<double>(0, 1)) < 1e-12);
  CHECK_THROWS_AS((void)rep.phi_linear(g.make(off(f.one(), f.minus_one()))), std::invalid_argument);

  const InducedRep rep2(g, 2);
  oracle::Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    const GElem a = g.make(Mat2{f.xi(gen.integer(0, 23)), gen.element(f), f.zero(), f.one()});
    const GElem b = g.make(Mat2{f.xi(gen.integer(0, 23)), gen.element(f), f.zero(), f.one()});
    if (a.twisted() || b.twisted()) continue;
    CHECK(std::abs(rep2.phi_linear(g.mul(a, b)) - rep2.phi_linear(a) * rep2.phi_linear(b)) < 1e-12);
  }
}

TEST_CASE("transversal covers the group once") {
  const Group g(3);
  const InducedRep rep(g, 1);
  const auto& reps = rep.transversal();
  REQUIRE(reps.size() == 20);
  std::vector<int> hits(reps.size(), 0);
  g.for_each_element([&](const GElem& x) {
    int found = 0;
    for (std::size_t a = 0; a < reps.size(); ++a) {
      if (rep.upp_exponent(g.mul(g.inv(reps[a]), x))) {
        ++hits[a];
        ++found;
      }
    }
    CHECK(found == 1);
  });
  for (int h : hits) CHECK(h == 36);
}

TEST_CASE("lifted matrices are a unitary monomial representation") {
  for (int q : {3, 5}) {
    CAPTURE(q);
    const Group g(q);
    oracle::Gen gen(41 + q);
    for (std::int64_t l : all_l(q)) {
      const InducedRep rep(g, l);
      const int n = rep.dim();
      CHECK(max_abs(rep.phi_lift(g.identity()) - CMatrix::Identity(n, n)) < 1e-15);
      const std::vector<GElem> letters{rep.generator(ClosedForm::G1), rep.generator(ClosedForm::G2),
                                       rep.generator(ClosedForm::G3, 1), rep.generator(ClosedForm::G4, 1)};
      for (int i = 0; i < 50; ++i) {
        const GElem a = gen.word(g, letters, 6);
        const GElem b = gen.integer(0, 1) ? gen.word(g, letters, 6) : gen.group_element(g);
        const CMatrix ea = rep.phi_lift(a);
        CHECK(max_abs(rep.phi_lift(g.mul(a, b)) - ea * rep.phi_lift(b)) < 1e-9);
        CHECK(max_abs(ea * ea.adjoint() - CMatrix::Identity(n, n)) < 1e-10);
        for (int r = 0; r < n; ++r) CHECK((ea.row(r).array().abs() > 0.5).count() == 1);
        const CMatrix off_upp = rep.block(ea, false, true);
        const CMatrix diag_upp = rep.block(ea, false, false);
        if (a.twisted()) {
          CHECK(max_abs(diag_upp) == 0);
        } else {
          CHECK(max_abs(off_upp) == 0);
        }
      }
    }
  }
}

TEST_CASE("closed forms agree with the coset rule") {
  for (int q : {3, 5}) {
    CAPTURE(q);
    const Group g(q);
    for (std::int64_t l : all_l(q)) {
      CAPTURE(l);
      const InducedRep rep(g, l);
      CHECK(max_abs(rep.phi_lift(rep.generator(ClosedForm::G1)) - rep.closed_form(ClosedForm::G1)) < 1e-12);
      CHECK(max_abs(rep.phi_lift(rep.generator(ClosedForm::G2)) - rep.closed_form(ClosedForm::G2)) < 1e-12);
      for (std::int64_t j = 1; j <= q; j += 2) {
        if (j <= q - 2) {
          CHECK(max_abs(rep.phi_lift(rep.generator(ClosedForm::G3, j)) - rep.closed_form(ClosedForm::G3, j)) < 1e-12);
        }
        CHECK(max_abs(rep.phi_lift(rep.generator(ClosedForm::G4, j)) - rep.closed_form(ClosedForm::G4, j)) < 1e-12);
      }
    }
  }
}

TEST_CASE("closed form details") {
  const Group g(5);
  const InducedRep rep(g, 3);
  const auto& I = rep.index();
  const CMatrix c = rep.closed_form(ClosedForm::G3, 3);
  CHECK(std::abs(c(I.star(), I.star_dash()) - rep.gamma(2)) < 1e-15);
  const CMatrix b = rep.closed_form(ClosedForm::G2);
  const std::int64_t qbar = 12;
  CHECK(b(I.t(qbar), I.star()) == std::complex<double>(1));
  CHECK(b(I.star(), I.inf()) == std::complex<double>(1));
  CHECK(b(I.inf(), I.t(qbar)) == std::complex<double>(1));
  const auto f = f_table(g.field());
  for (std::int64_t t = 0; t < 24; ++t) {
    if (t == qbar) continue;
    CHECK(std::abs(b(I.t(t), I.t(f[static_cast<std::size_t>(t)])) - rep.gamma(-2 * t)) < 1e-15);
  }
  CHECK_THROWS_AS((void)rep.closed_form(ClosedForm::G3, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)rep.closed_form(ClosedForm::G3, 5), std::invalid_argument);
  CHECK_THROWS_AS((void)rep.closed_form(ClosedForm::G4, 7), std::invalid_argument);
}

TEST_CASE("f cycle structure") {
  const auto s5 = f_cycle_shape(build_field(5));
  CHECK(s5.fixed_points == 2);
  CHECK(s5.three_cycles);
  // the fixed points are the primitive cube roots of unity
  for (auto t : s5.fixed) CHECK(t % 8 == 0);
  const auto s3 = f_cycle_shape(build_field(3));
  CHECK(s3.fixed_points == 1);
  CHECK(s3.fixed == std::vector<std::int64_t>{0});
  CHECK(s3.three_cycles);
  CHECK(f_cycle_shape(build_field(9)).fixed_points == 1);

  const FieldCtx f7 = build_field(7);
  const auto f = f_table(f7);
  for (std::int64_t a = 0; a < 48; ++a) {
    if (a == 24) continue;
    CHECK(f[static_cast<std::size_t>((a * 7) % 48)] == (f[static_cast<std::size_t>(a)] * 7) % 48);
  }
}

TEST_CASE("intertwiners") {
  for (int q : {3, 5, 7}) {
    CAPTURE(q);
    const Group g(q);
    for (std::int64_t l : all_l(q)) {
      CAPTURE(l);
      const InducedRep rep(g, l);
      const CMatrix m = rep.intertwiner();
      const auto c = rep.check_intertwiner(m);
      CHECK(c.hermitian < 1e-10);
      CHECK(c.involution < 1e-10);
      CHECK(c.worst() < 1e-9);
      if (rep.in_l_minus()) {
        const double y = m(rep.index().n1 + 1, 0).real();
        CHECK(std::abs(y * y * q * q - 1) < 1e-12);
        CHECK(rep.delta_sign() == (rep.rs() % 2 == 0 ? 1 : -1));
      }
    }
  }
  const Group g(5);
  const InducedRep rep(g, 3);
  REQUIRE(rep.in_l_plus());
  const CMatrix q = rep.intertwiner();
  const CMatrix b = rep.block(rep.phi_lift(rep.generator(ClosedForm::G2)), false, false);
  CHECK(max_abs(q.inverse() * b * q - b) < 1e-12);
  CHECK_THROWS_AS((void)InducedRep(g, 1).intertwiner(), std::logic_error);
}

TEST_CASE("f sums and residues") {
  for (int q : {3, 5, 7, 9, 11}) {
    CAPTURE(q);
    const FieldCtx f = build_field(q);
    for (std::int64_t l : l_minus(q)) {
      for (std::int64_t j = 1; j <= q; j += 2) CHECK(sum_identity_deviation(f, l, j) < 1e-10);
    }
    for (std::int64_t j = 1; j <= q; j += 2) CHECK(residues_distinct(f, j));
  }
}

TEST_CASE("traces on twisted elements") {
  for (int q : {3, 5}) {
    CAPTURE(q);
    const Group g(q);
    for (std::int64_t l : l_plus(q)) {
      const InducedRep rep(g, l);
      for (std::int64_t j = 1; j <= q; j += 2) {
        if (j <= q - 2) {
          CHECK(std::abs(rep.chi_trace(rep.generator(ClosedForm::G3, j)) - oracle::tau_plus(q, l, j)) < 1e-8);
        }
        CHECK(std::abs(rep.chi_trace(rep.generator(ClosedForm::G4, j))) < 1e-8);
      }
    }
    for (std::int64_t l : l_minus(q)) {
      const InducedRep rep(g, l);
      int plus = 0;
      int minus = 0;
      for (std::int64_t j = 1; j <= q; j += 2) {
        if (j <= q - 2) CHECK(std::abs(rep.chi_trace(rep.generator(ClosedForm::G3, j))) < 1e-8);
        const auto tr = rep.chi_trace(rep.generator(ClosedForm::G4, j));
        const auto tau = oracle::tau_minus(q, l, j);
        if (std::abs(tau) < 1e-8) continue;
        plus += std::abs(tr - tau) < 1e-8 ? 1 : 0;
        minus += std::abs(tr + tau) < 1e-8 ? 1 : 0;
      }
      CHECK(plus + minus > 0);
      CHECK(plus * minus == 0);
    }
  }
  const Group g5(5);
  const std::complex<double> want(0, 2 * std::cos(std::numbers::pi / 4));
  CHECK(std::abs(InducedRep(g5, 3).chi_trace(g5.make(dia(g5.field().xi(), g5.field().one()))) - want) < 1e-12);
  const Group g3(3);
  const InducedRep r3(g3, 1);
  CHECK(std::abs(r3.chi_trace(r3.generator(ClosedForm::G3, 1))) < 1e-12);
  CHECK_THROWS_AS((void)r3.chi_trace(g3.identity()), std::invalid_argument);
}

TEST_CASE("traces are class functions") {
  const Group g(5);
  oracle::Gen gen(8);
  for (std::int64_t l : all_l(5)) {
    const InducedRep rep(g, l);
    const CMatrix m = rep.intertwiner();
    for (const GElem& x : {rep.generator(ClosedForm::G3, 1), rep.generator(ClosedForm::G3, 3),
                           rep.generator(ClosedForm::G4, 1), rep.generator(ClosedForm::G4, 5)}) {
      const auto base = rep.chi_trace(x, m);
      for (int i = 0; i < 20; ++i) CHECK(std::abs(rep.chi_trace(g.conjugate(x, gen.group_element(g)), m) - base) < 1e-9);
    }
  }
}
