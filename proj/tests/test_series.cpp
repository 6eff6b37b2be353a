#include "doctest.h"

#include <limits>
#include <random>

#include "cylq/series.hpp"

using namespace cylq;

namespace {

Series from_terms(std::initializer_list<Term> terms, int q_cap, int z_cap) {
  Series s(q_cap, z_cap);
  for (const auto &t : terms) s.add_to(t.n, t.m, t.coeff);
  return s;
}

Series q_poly(std::initializer_list<Coeff> coeffs, int q_cap) {
  Series s(q_cap, 0);
  int n = 0;
  for (Coeff c : coeffs) s.add_to(n++, 0, c);
  return s;
}

Series random_series(std::mt19937 &rng, int q_cap, int z_cap, Coeff span = 5) {
  std::uniform_int_distribution<Coeff> coeff(-span, span);
  Series s(q_cap, z_cap);
  for (int n = 0; n <= q_cap; ++n)
    for (int m = 0; m <= z_cap; ++m) s.add_to(n, m, coeff(rng));
  return s;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(series_const(1, 10, 10) == from_terms({{0, 0, 1}}, 10, 10));
  CHECK(series_is_zero(series_const(0, 10, 10)));
  CHECK(series_const(-3, 5, 5).at(0, 0) == -3);
  CHECK(series_const(-3, 5, 5).terms().size() == 1);
}

TEST_CASE("addition and subtraction") {
  const Series one_zq = from_terms({{0, 0, 1}, {1, 1, 1}}, 6, 6);
  const Series zq = from_terms({{1, 1, 1}}, 6, 6);
  CHECK(one_zq + zq == from_terms({{0, 0, 1}, {1, 1, 2}}, 6, 6));
  CHECK(series_is_zero(one_zq - one_zq));
  CHECK(q_poly({1, -1}, 4) + q_poly({0, 1}, 4) == series_const(1, 4, 0));
}

TEST_CASE("multiplication") {
  const int N = 7;
  Series geo(N, 0);
  for (int n = 0; n <= N; ++n) geo.add_to(n, 0, 1);
  CHECK(q_poly({1, -1}, N) * geo == series_const(1, N, 0));

  const Series zq = from_terms({{1, 1, 1}}, 5, 5);
  CHECK(zq * zq == from_terms({{2, 2, 1}}, 5, 5));

  const Series p = q_poly({1, -1}, 8) * q_poly({1, 0, -1}, 8) * q_poly({1, 0, 0, -1}, 8);
  CHECK(p == q_poly({1, -1, -1, 0, 1, 1, -1}, 8));
}

TEST_CASE("cap mismatch is loud") {
  CHECK_THROWS_AS(series_add(Series(3, 3), Series(3, 4)), CapMismatch);
  CHECK_THROWS_AS(series_mul(Series(3, 3), Series(4, 3)), CapMismatch);
  CHECK_THROWS_AS((void)series_eq(Series(1, 1), Series(2, 1)), CapMismatch);
  CHECK(series_recap(series_const(2, 3, 3), 5, 1) == series_const(2, 5, 1));
}

TEST_CASE("overflow is detected") {
  Series big = series_const(std::numeric_limits<Coeff>::max() / 2 + 1, 2, 2);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * series_const(2, 2, 2), std::overflow_error);
}

TEST_CASE("substitution z -> z q^k") {
  const Series s = from_terms({{0, 0, 1}, {1, 1, 1}}, 6, 6);
  CHECK(series_subst_z(s, 1) == from_terms({{0, 0, 1}, {2, 1, 1}}, 6, 6));
  CHECK(series_subst_z(s, 0) == s);
  CHECK(series_subst_z(from_terms({{1, 2, 1}}, 6, 6), 2) == from_terms({{5, 2, 1}}, 6, 6));
  CHECK(series_subst_z(from_terms({{1, 2, 1}}, 4, 6), 2).is_zero());
}

TEST_CASE("geometric series") {
  CHECK(series_inv_one_minus({1, 1, 1}, 3, 3) == from_terms({{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}}, 3, 3));
  CHECK(series_inv_one_minus({0, 2, 1}, 5, 0) == q_poly({1, 0, 1, 0, 1}, 5));
  CHECK(series_inv_one_minus({1, 0, 1}, 0, 2) == from_terms({{0, 0, 1}, {0, 1, 1}, {0, 2, 1}}, 0, 2));
  CHECK_THROWS(series_inv_one_minus({0, 0, 1}, 3, 3));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer({0, 1, 1}, 3, 1, 8, 0) == q_poly({1, -1, -1, 0, 1, 1, -1}, 8));
  CHECK(pochhammer({0, 1, 1}, 0, 1, 8, 0) == series_const(1, 8, 0));
  CHECK(pochhammer({0, 1, -1}, kInfinite, 1, 5, 0) == q_poly({1, 1, 1, 2, 2, 3}, 5));
  CHECK_THROWS_AS(pochhammer({1, 0, 1}, kInfinite, 1, 5, 5), std::domain_error);
  CHECK_THROWS(pochhammer({0, 1, 1}, 3, 0, 5, 0));
}

TEST_CASE("theta") {
  // (q;q^2)_inf^2
  const Series t = theta_trunc(1, 2, 6);
  Series half = pochhammer({0, 1, 1}, kInfinite, 2, 6, 0);
  CHECK(t == half * half);
  CHECK(t == q_poly({1, -2, 1, -2, 4, -4, 5}, 6));
  for (int m = 2; m <= 7; ++m)
    for (int a = 1; a < m; ++a) {
      CHECK(theta_trunc(a, m, 20) == theta_trunc(m - a, m, 20));
      CHECK(theta_trunc(a, m, 20).at(0, 0) == 1);
    }
  CHECK_THROWS(theta_trunc(0, 3, 5));
  CHECK_THROWS(theta_trunc(3, 3, 5));
}

TEST_CASE("equality respects truncation") {
  CHECK(series_eq(from_terms({{0, 0, 1}, {1, 1, 1}}, 4, 4), from_terms({{0, 0, 1}, {1, 1, 1}}, 4, 4)));
  CHECK(series_eq(series_const(1, 4, 0), from_terms({{0, 0, 1}, {5, 0, 1}}, 4, 0)));
  CHECK(series_is_zero(series_const(7, 3, 3) - series_const(7, 3, 3)));
}

TEST_CASE("property: ring axioms") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int qc = static_cast<int>(rng() % 9), zc = static_cast<int>(rng() % 6);
    const Series a = random_series(rng, qc, zc), b = random_series(rng, qc, zc), c = random_series(rng, qc, zc);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * series_const(1, qc, zc) == a);
    CHECK(series_is_zero(a + (-a)));
  }
}

TEST_CASE("property: parallel and serial products agree") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const int qc = 20 + static_cast<int>(rng() % 30), zc = 10 + static_cast<int>(rng() % 20);
    const Series a = random_series(rng, qc, zc, 3), b = random_series(rng, qc, zc, 3);
    CHECK(series_mul(a, b, Exec::parallel) == series_mul_serial(a, b));
  }
}

TEST_CASE("property: geometric inverse") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int qc = static_cast<int>(rng() % 9), zc = static_cast<int>(rng() % 6);
    Monomial m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 1};
    if (m.z_exp == 0 && m.q_exp == 0) m.q_exp = 1;
    const Series a = random_series(rng, qc, zc);
    Series one_minus = series_const(1, qc, zc);
    one_minus.add_to(m.q_exp, m.z_exp, -1);
    CHECK(series_mul(a, series_inv_one_minus(m, qc, zc)) * one_minus == a);

    Series d = a;
    d.div_one_minus(m);
    d.mul_one_minus(m);
    CHECK(d == a);
  }
}

TEST_CASE("property: general inverse") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const int qc = static_cast<int>(rng() % 8), zc = static_cast<int>(rng() % 5);
    Series a = random_series(rng, qc, zc, 3);
    a.add_to(0, 0, 1 - a.at(0, 0));
    CHECK(a * series_inverse(a) == series_const(1, qc, zc));
  }
  CHECK_THROWS_AS(series_inverse(series_const(2, 3, 3)), std::domain_error);
}

TEST_CASE("property: substitution composes") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const Series a = random_series(rng, 10, 5);
    const int j = static_cast<int>(rng() % 4), k = static_cast<int>(rng() % 4);
    CHECK(series_subst_z(series_subst_z(a, j), k) == series_subst_z(a, j + k));
  }
}

TEST_CASE("property: pochhammer equals the product of its factors") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng() % 7);
    const int step = 1 + static_cast<int>(rng() % 3);
    const Monomial base{static_cast<int>(rng() % 2), static_cast<int>(rng() % 3),
                        static_cast<Coeff>(rng() % 2 ? 1 : -1)};
    Series expect = series_const(1, 12, 4);
    for (int j = 0; j < n; ++j) {
      Series factor = series_const(1, 12, 4);
      factor.add_to(base.q_exp + j * step, base.z_exp, -base.coeff);
      expect = expect * factor;
    }
    CHECK(pochhammer(base, n, step, 12, 4) == expect);
  }
}

TEST_CASE("z = 1 specialization") {
  const Series s = from_terms({{0, 0, 1}, {2, 1, 3}, {2, 2, 4}}, 3, 3);
  CHECK(series_at_z1(s) == q_poly({1, 0, 7}, 3));
}
