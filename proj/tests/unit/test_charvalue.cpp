#include <doctest.h>

#include <stdexcept>

#include "direct_values.hpp"
#include "generators.hpp"
#include "mchar/chartable.hpp"

using namespace mchar;

TEST_CASE("integer and root arithmetic") {
  const std::int64_t n = CharValue::modulus_for(3);
  CHECK(n == 320);
  CHECK((CharValue::integer(n, 1) + CharValue::integer(n, -1)).is_zero());
  const RootSteps st = RootSteps::for_q(3);
  const CharValue i = CharValue::root(n, st.i);
  CHECK(i * i * i * i == CharValue::integer(n, 1));
  CHECK(i * i == CharValue::root(n, n / 2));
  CHECK(CharValue::root(n, n) == CharValue::integer(n, 1));
  CHECK(std::abs(i.eval() - std::complex<double>(0, 1)) < 1e-15);
}

TEST_CASE("conjugation and halving") {
  const std::int64_t n = CharValue::modulus_for(5);
  const CharValue v = CharValue::root(n, 7, 2) + CharValue::root(n, 11, -4);
  CHECK(std::abs(v.conj().eval() - std::conj(v.eval())) < 1e-12);
  CHECK(v.halved().scaled(2) == v);
  CHECK_THROWS_AS((void)CharValue::root(n, 3, 3).halved(), std::domain_error);
  CHECK_THROWS_AS((void)(CharValue::integer(n, 1) + CharValue::integer(n + 1, 1)), std::invalid_argument);
}

TEST_CASE("omega sums against direct complex values") {
  const int q = 7;
  oracle::Gen gen(7);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t x = gen.integer(-200, 200);
    CHECK(std::abs(omega_rho(q, x).eval() - oracle::omega_rho(q, x)) < 1e-12);
    CHECK(std::abs(omega_pi(q, x).eval() - oracle::omega_pi(q, x)) < 1e-12);
  }
}

TEST_CASE("tau values against direct complex values") {
  for (int q : {3, 5, 7, 9, 11, 13}) {
    CAPTURE(q);
    for (std::int64_t l : l_plus(q)) {
      for (std::int64_t j = 1; j <= q - 2; j += 2) CHECK(std::abs(tau_plus(q, l, j).eval() - oracle::tau_plus(q, l, j)) < 1e-12);
    }
    for (std::int64_t l : l_minus(q)) {
      for (std::int64_t j = 1; j <= q; j += 2) CHECK(std::abs(tau_minus(q, l, j).eval() - oracle::tau_minus(q, l, j)) < 1e-12);
    }
  }
}

TEST_CASE("half omega is exact for l in L") {
  for (int q : {5, 7, 9, 11, 13}) {
    for (std::int64_t l : l_plus(q)) {
      for (std::int64_t j = 1; j < q * q; ++j) CHECK_NOTHROW((void)omega_rho(q, j * l).halved());
    }
    for (std::int64_t l : l_minus(q)) {
      for (std::int64_t j = 1; j < q * q; ++j) CHECK_NOTHROW((void)omega_rho(q, j * l).halved());
    }
  }
}
