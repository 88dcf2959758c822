#include <random>

#include "doctest.h"
#include "wildram/series.hpp"

using namespace wildram;

namespace {

ArtinAlgebra ring(int p, int d, int n) { return ArtinAlgebra::make(Field::make(p, d), n); }

LaurentSeries poly(const ArtinAlgebra& A, int lead, std::vector<int> c, int prec) {
  std::vector<FieldElem> f;
  for (int x : c) f.push_back(A.field().from_int(x));
  return LaurentSeries::from_field(A, lead, f, prec);
}

LaurentSeries random_series(const ArtinAlgebra& A, std::mt19937_64& rng, int lead, int prec) {
  std::vector<ArtinElem> c(static_cast<std::size_t>(prec - lead));
  for (auto& x : c)
    for (int j = 0; j < A.order(); ++j) x.c[j] = FieldElem{static_cast<std::uint32_t>(rng() % A.field().order())};
  return LaurentSeries(A, lead, std::move(c), prec);
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("basic arithmetic") {
  auto F2 = ring(2, 1, 1);
  auto t = LaurentSeries::t(F2, 6);
  CHECK(add(t, t).is_zero());
  auto a = poly(F2, -1, {1, 1}, 6);
  auto r = mul(a, t);
  CHECK(r.lead() == 0);
  CHECK(agree(r, poly(F2, 0, {1, 1}, 5)));
  auto F3 = ring(3, 1, 1);
  CHECK(derivative(poly(F3, 3, {1}, 8)).is_zero());
  CHECK_THROWS_AS(LaurentSeries::zero(F2, 4).valuation(), Error);
}

TEST_CASE("precision propagation") {
  auto F5 = ring(5, 1, 1);
  auto a = poly(F5, -2, {1, 2, 3}, 4);
  auto b = poly(F5, 1, {1, 4}, 7);
  auto c = mul(a, b);
  CHECK(c.prec() == std::min(4 + 1, 7 - 2));
  CHECK(add(a, b).prec() == 4);
  CHECK(derivative(b).prec() == 6);
  CHECK(frobenius(b, 1).prec() == 35);
}

TEST_CASE("inversion") {
  auto F2 = ring(2, 1, 1);
  auto inv = invert(poly(F2, 0, {1, 1}, 5));
  CHECK(agree(inv, poly(F2, 0, {1, 1, 1, 1, 1}, 5)));
  CHECK(inv.prec() == 5);
  auto m3 = invert(poly(F2, -3, {1}, 5));
  CHECK(m3.lead() == 3);
  CHECK(m3.coeff(3) == F2.one());

  auto D = ring(2, 1, 2);
  std::vector<ArtinElem> c{D.eps(), D.one()};
  LaurentSeries x(D, 0, c, 6);
  auto y = invert(x);
  CHECK(y.coeff(-1) == D.one());
  CHECK(y.coeff(-2) == D.eps());
  CHECK(agree(mul(x, y), LaurentSeries::one(D, 10)));
  CHECK_THROWS_AS(invert(LaurentSeries::monomial(D, D.eps(), 0, 4)), Error);
}

TEST_CASE("composition") {
  auto F2 = ring(2, 1, 1);
  auto sq = compose(poly(F2, 2, {1}, 4), poly(F2, 1, {1, 1}, 4));
  CHECK(agree(sq, poly(F2, 2, {1, 0}, 4)));
  auto inner = poly(F2, 1, {1, 1}, 8);
  auto r = compose(poly(F2, -1, {1}, 8), inner);
  CHECK(agree(mul(r, inner), LaurentSeries::one(F2, 6)));
  CHECK(r.coeff(-1) == F2.one());
  CHECK(r.coeff(0) == F2.one());
  auto outer = poly(F2, -2, {1, 0, 1, 1, 0, 1}, 8);
  CHECK(agree(compose(outer, LaurentSeries::t(F2, 8)), outer));
  CHECK_THROWS_AS(compose(outer, poly(F2, 0, {1, 1}, 4)), Error);
}

TEST_CASE("reversion") {
  auto F2 = ring(2, 1, 1);
  auto a = poly(F2, 1, {1, 1}, 5);
  auto b = revert(a);
  CHECK(agree(b, poly(F2, 1, {1, 1, 0, 1}, 5)));
  CHECK(agree(compose(a, b), LaurentSeries::t(F2, 5)));
  CHECK(agree(compose(b, a), LaurentSeries::t(F2, 5)));
  CHECK_THROWS_AS(revert(poly(F2, 2, {1}, 5)), Error);
}

TEST_CASE("mth roots") {
  auto F5 = ring(5, 1, 1);
  auto r = mth_root_unit(poly(F5, 0, {1, 0, 1}, 7), 2);
  CHECK(agree(mul(r, r), poly(F5, 0, {1, 0, 1}, 7)));
  auto rho = mul(LaurentSeries::t(F5, 8), invert(r));
  CHECK(agree(rho, poly(F5, 1, {1, 0, 2, 0, 1}, 6)));
  CHECK(agree(mth_root_unit(LaurentSeries::one(F5, 6), 3), LaurentSeries::one(F5, 6)));

  auto D = ring(2, 1, 2);
  std::vector<ArtinElem> c(4);
  c[0] = D.one();
  c[3] = D.add(D.one(), D.eps());
  LaurentSeries a(D, 0, c, 12);
  auto s = mth_root_unit(a, 3);
  CHECK(agree(power(s, 3), a));
  CHECK_THROWS_AS(mth_root_unit(a, 2), Error);
  CHECK_THROWS_AS(mth_root_unit(poly(ring(3, 1, 1), 0, {2, 1}, 4), 2), Error);
}

TEST_CASE("weierstrass preparation") {
  auto F2 = ring(2, 1, 1);
  auto w0 = weierstrass_prepare(poly(F2, 3, {1, 1}, 10));
  CHECK(w0.g.m == 3);
  CHECK(agree(w0.u, poly(F2, 0, {1, 1}, 7)));

  auto D = ring(2, 1, 2);
  LaurentSeries f1(D, 0, {D.eps(), D.zero(), D.one()}, 10);
  auto w1 = weierstrass_prepare(f1);
  CHECK(w1.g.a[0] == D.eps());
  CHECK(w1.g.a[1] == D.zero());
  CHECK(agree(w1.u, LaurentSeries::one(D, 8)));

  LaurentSeries f2(D, 0, {D.zero(), D.eps(), D.one(), D.one()}, 12);
  auto w2 = weierstrass_prepare(f2);
  CHECK(w2.g.m == 2);
  CHECK(w2.g.a[0] == D.zero());
  CHECK(w2.g.a[1] == D.eps());
  CHECK(agree(w2.u.reduce(), poly(ring(2, 1, 1), 0, {1, 1}, 8)));
  CHECK(agree(mul(w2.g.to_series(12), w2.u), f2));
  CHECK(mul(w2.g.to_series(12), w2.u).prec() >= 8);
  CHECK_THROWS_AS(weierstrass_prepare(LaurentSeries::monomial(D, D.eps(), 1, 6)), Error);
}

TEST_CASE("pole part") {
  auto F2 = ring(2, 1, 1);
  CHECK(pole_part(poly(F2, 0, {1, 1}, 5)).is_zero());
  auto p = pole_part(poly(F2, -2, {1, 0, 1, 1}, 5));
  CHECK(p.lead() == -2);
  CHECK(p.coeffs().size() == 2);
}

TEST_CASE("random ring axioms and consistency") {
  std::mt19937_64 rng(7);
  for (auto A : {ring(2, 1, 1), ring(3, 2, 1), ring(5, 1, 2), ring(2, 2, 3)}) {
    bool ok = true;
    for (int it = 0; it < 100; ++it) {
      auto a = random_series(A, rng, -2, 10);
      auto b = random_series(A, rng, 0, 12);
      auto c = random_series(A, rng, 1, 9);
      ok = ok && agree(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
      ok = ok && agree(mul(mul(a, b), c), mul(a, mul(b, c)));
      ok = ok && agree(mul(a, b), mul(b, a));
      if (A.is_unit(b.coeff(0))) ok = ok && agree(mul(b, invert(b)), LaurentSeries::one(A, 20));
    }
    CHECK(ok);
  }
}

TEST_CASE("reversion and roots on random input") {
  std::mt19937_64 rng(11);
  for (auto A : {ring(2, 1, 1), ring(3, 1, 2), ring(5, 2, 1)}) {
    for (int it = 0; it < 20; ++it) {
      auto a = random_series(A, rng, 1, 14);
      std::vector<ArtinElem> c(a.coeffs());
      c[0] = A.one();
      a = LaurentSeries(A, 1, c, 14);
      auto b = revert(a);
      CHECK(agree(compose(a, b), LaurentSeries::t(A, 14)));
      CHECK(agree(compose(b, a), LaurentSeries::t(A, 14)));
      auto u = random_series(A, rng, 0, 12);
      std::vector<ArtinElem> uc(u.coeffs().size());
      for (std::size_t i = 0; i < uc.size(); ++i) uc[i] = u.coeff(static_cast<int>(i));
      uc[0] = A.one();
      u = LaurentSeries(A, 0, uc, 12);
      const int m = A.p() == 2 ? 3 : 2;
      auto r = mth_root_unit(u, m);
      CHECK(agree(power(r, static_cast<unsigned>(m)), u));
      CHECK(agree(mth_root_unit(u.truncate(8), m), r.truncate(8)));
      CHECK(mth_root_unit(u.truncate(8), m).coeffs() == r.truncate(8).coeffs());
    }
  }
}

}
