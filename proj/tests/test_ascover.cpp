#include <random>

#include "doctest.h"
#include "wildram/ascover.hpp"

using namespace wildram;

namespace {

LaurentSeries fser(const Field& k, int lead, std::vector<int> c, int prec) {
  std::vector<FieldElem> f;
  for (int x : c) f.push_back(k.from_int(x));
  return LaurentSeries::from_field(ArtinAlgebra::make(k, 1), lead, f, prec);
}

Character chr(int p, int s, int m) {
  auto k = Field::make(p, s == 1 ? 1 : 2);
  std::vector<FieldElem> vals{k.one()};
  if (s == 2) vals.push_back(k.gen());
  return Character::make(k, vals, m);
}

}  // namespace

TEST_SUITE("ascover") {

TEST_CASE("classical artin-schreier") {
  auto k = Field::make(3, 1);
  auto A = ArtinAlgebra::make(k, 1);
  auto d = build_u(Character::make(k, {k.one()}, 2));
  CHECK(d.u1 == PPolynomial::term(A, 0, A.one()));
  CHECK(d.u.coeff(1) == A.one());
  CHECK(d.u.coeff(0) == A.from_int(-1));
  CHECK(d.coefficient_relation);
  CHECK(d.matches_generators);
}

TEST_CASE("general cyclic character") {
  auto k = Field::make(3, 1);
  auto A = ArtinAlgebra::make(k, 1);
  auto d = build_u(Character::make(k, {k.from_int(2)}, 2));
  CHECK(d.u1.coeff(0) == A.from_int(2));
  CHECK(d.u.coeff(1) == A.from_int(2));
  CHECK(d.u.coeff(0) == A.from_int(1));
}

TEST_CASE("rank two over F_4") {
  auto k = Field::make(2, 2);
  auto A = ArtinAlgebra::make(k, 1);
  const FieldElem w = k.gen();
  auto ch = Character::make(k, {k.one(), w}, 3);
  auto d = build_u(ch, std::vector<FieldElem>{k.one(), w});
  CHECK(d.o == std::vector<FieldElem>{k.one(), k.zero()});
  CHECK(d.u.coeff(2) == A.one());
  CHECK(d.u.coeff(0) == A.one());
  CHECK(d.coefficient_relation);
  CHECK(d.matches_generators);
  CHECK(default_mu(k, 2) == std::vector<FieldElem>{k.one(), w});
}

TEST_CASE("dependent mu") {
  auto k = Field::make(2, 2);
  auto ch = Character::make(k, {k.one(), k.gen()}, 3);
  try {
    build_u(ch, std::vector<FieldElem>{k.one(), k.one()});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DependentMu);
  }
  CHECK_THROWS_AS(default_mu(Field::make(2, 3), 2), Error);
}

TEST_CASE("relations on the grid") {
  for (int p : {2, 3, 5})
    for (int s : {1, 2})
      for (int m : {2, 3, 4, 7}) {
        if (m % p == 0) continue;
        auto d = build_u(chr(p, s, m));
        CHECK(d.coefficient_relation);
        CHECK(d.matches_generators);
      }
}

TEST_CASE("normalized generators") {
  auto k = Field::make(2, 2);
  auto A = ArtinAlgebra::make(k, 1);
  const FieldElem w = k.gen();
  auto gens = normalized_generators(Character::make(k, {k.one(), w}, 3));
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].y.coeff(1) == A.embed(w));
  CHECK(gens[0].y.coeff(0) == A.embed(k.mul(w, w)));
  for (const auto& g : gens) {
    CHECK(g.vanishes_at_zero);
    for (bool b : g.shift) CHECK(b);
  }
  auto one = normalized_generators(Character::make(Field::make(5, 1), {Field::make(5, 1).from_int(3)}, 2));
  CHECK(one[0].y.coeff(0) == ArtinAlgebra::make(Field::make(5, 1), 1).from_int(2));
  for (int p : {3, 5}) {
    auto gs = normalized_generators(chr(p, 2, 4));
    for (const auto& g : gs)
      for (bool b : g.shift) CHECK(b);
  }
}

TEST_CASE("germ model upstairs") {
  auto k = Field::make(2, 1);
  auto g1 = germ_model(Character::make(k, {k.one()}, 1));
  CHECK(agree(g1.upstairs, fser(k, -2, {1, 1}, 1)));
  auto g3 = germ_model(Character::make(k, {k.one()}, 3));
  CHECK(agree(g3.upstairs, fser(k, -6, {1, 0, 0, 1}, 1)));
  auto k4 = Field::make(2, 2);
  const FieldElem w = k4.gen();
  auto ch = Character::make(k4, {k4.one(), w}, 3);
  CHECK(germ_model(ch, std::vector<FieldElem>{k4.one(), w}).upstairs.lead() == -12);
  CHECK(germ_model(ch, std::vector<FieldElem>{k4.one(), k4.mul(w, w)}).upstairs.lead() == -24);
}

TEST_CASE("germ model downstairs") {
  auto k = Field::make(2, 1);
  auto g3 = germ_model(Character::make(k, {k.one()}, 3));
  CHECK(agree(g3.downstairs, fser(k, -3, {1}, 1)));
  auto g = germ_model(chr(3, 2, 4));
  CHECK(g.downstairs_poly.degree_index() <= 1);
  CHECK(conductor(class_reduce(g.downstairs, 2)).value == 4);
}

TEST_CASE("upstairs germ is a trivial class") {
  auto k = Field::make(2, 1);
  auto g = germ_model(Character::make(k, {k.one()}, 3));
  CHECK(conductor(class_reduce(g.upstairs, 1)).unramified);
}

TEST_CASE("class reduction") {
  auto k = Field::make(2, 1);
  CHECK(class_reduce(fser(k, 0, {1, 1}, 4), 1).rep.is_zero());
  auto c4 = class_reduce(fser(k, -4, {1}, 2), 1);
  CHECK(agree(c4.rep, fser(k, -1, {1}, 0)));
  auto c3 = class_reduce(fser(k, -3, {1}, 2), 1);
  CHECK(agree(c3.rep, fser(k, -3, {1}, 0)));
  auto c63 = class_reduce(fser(k, -6, {1, 0, 0, 1}, 1), 1);
  CHECK(c63.rep.is_zero());
  CHECK(witness_ok(fser(k, -6, {1, 0, 0, 1}, 1), c63));
}

TEST_CASE("reduction witness and idempotence") {
  auto k = Field::make(3, 2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FieldElem> c;
    for (int i = 0; i < 40; ++i) c.push_back(FieldElem{static_cast<std::uint32_t>(rng() % 9)});
    auto g = LaurentSeries::from_field(ArtinAlgebra::make(k, 1), -30, c, 10);
    for (int s : {1, 2}) {
      auto cls = class_reduce(g, s);
      CHECK(witness_ok(g, cls));
      auto again = class_reduce(cls.rep, s);
      CHECK(agree(again.rep, cls.rep));
      if (!cls.rep.is_zero()) {
        int q = s == 1 ? 3 : 9;
        for (int e = cls.rep.lead(); e < 0; ++e)
          if (e % q == 0) CHECK(cls.rep.coeff(e) == ArtinElem{});
      }
    }
  }
}

TEST_CASE("conductor") {
  auto k2 = Field::make(2, 1);
  CHECK(conductor(class_reduce(fser(k2, -1, {1}, 0), 1)).value == 1);
  auto k3 = Field::make(3, 1);
  CHECK(conductor(class_reduce(fser(k3, -4, {1, 1}, 0), 1)).value == 4);
  auto z = conductor(class_reduce(fser(k3, 0, {1}, 3), 1));
  CHECK(z.unramified);
  CHECK(z.value == 0);
}

TEST_CASE("conductor round trip") {
  for (int p : {2, 3, 5})
    for (int s : {1, 2})
      for (int m = 1; m <= 9; ++m) {
        if (m % p == 0 || (s == 2 && m == 1)) continue;
        CAPTURE(p);
        CAPTURE(s);
        CAPTURE(m);
        auto g = germ_model(chr(p, s, m));
        auto cls = class_reduce(g.downstairs, s);
        CHECK(conductor(cls).value == m);
        CHECK(witness_ok(g.downstairs, cls));
      }
}

TEST_CASE("equivalent covers") {
  auto k = Field::make(2, 1);
  auto g = fser(k, -5, {1, 0, 1}, 0);
  auto r = equivalent_covers(g, g, 1);
  CHECK(r.equivalent);
  CHECK(r.zeta == k.one());
  CHECK(equivalent_covers(fser(k, -4, {1}, 0), fser(k, -1, {1}, 0), 1).equivalent);
  CHECK_FALSE(equivalent_covers(fser(k, -3, {1}, 0), fser(k, -1, {1}, 0), 1).equivalent);
}

TEST_CASE("equivalence is an equivalence relation") {
  auto k = Field::make(2, 2);
  auto A = ArtinAlgebra::make(k, 1);
  const FieldElem w = k.gen();
  auto base = fser(k, -7, {1, 0, 1, 0, 0, 1}, 0);
  std::vector<LaurentSeries> xs{base, scale(A.embed(w), base), add(scale(A.embed(k.mul(w, w)), base), fser(k, -16, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 0)),
                                fser(k, -5, {1}, 0)};
  for (const auto& a : xs) CHECK(equivalent_covers(a, a, 2).equivalent);
  for (const auto& a : xs)
    for (const auto& b : xs) {
      auto ab = equivalent_covers(a, b, 2), ba = equivalent_covers(b, a, 2);
      CHECK(ab.equivalent == ba.equivalent);
      if (ab.equivalent) CHECK(*ba.zeta == k.inv(*ab.zeta));
      for (const auto& c : xs) {
        auto bc = equivalent_covers(b, c, 2);
        if (ab.equivalent && bc.equivalent) {
          auto ac = equivalent_covers(a, c, 2);
          CHECK(ac.equivalent);
          CHECK(*ac.zeta == k.mul(*ab.zeta, *bc.zeta));
        }
      }
    }
  CHECK(equivalent_covers(xs[0], xs[2], 2).equivalent);
  CHECK_FALSE(equivalent_covers(xs[0], xs[3], 2).equivalent);
}

TEST_CASE("deformed u without deformation") {
  for (auto [p, s, m] : std::vector<std::tuple<int, int, int>>{{2, 1, 3}, {3, 1, 2}, {2, 2, 3}, {3, 2, 4}}) {
    auto ch = chr(p, s, m);
    auto A = ArtinAlgebra::make(ch.field(), 2);
    std::vector<ArtinElem> C;
    for (auto v : ch.vals()) C.push_back(A.embed(v));
    auto r = deformed_u(ch, std::nullopt, C, LaurentSeries::monomial(A, A.one(), -m, 4));
    CHECK(agree(r.U, r.u.change_ring(A)));
    CHECK_FALSE(r.splits_branch);
  }
}

TEST_CASE("deformed u with a deformed character value") {
  auto k = Field::make(2, 1);
  auto ch = Character::make(k, {k.one()}, 3);
  auto A = ArtinAlgebra::make(k, 2);
  auto r = deformed_u(ch, std::nullopt, {A.add(A.one(), A.eps())}, LaurentSeries::monomial(A, A.one(), -3, 4));
  CHECK(agree(r.U.reduce(), r.u));
  CHECK_FALSE(agree(r.U, r.u.change_ring(A)));
  // (f/(1+eps))^2 + f/(1+eps) with (1+eps)^{-1} = 1 + eps
  auto f = LaurentSeries::monomial(A, A.one(), -3, 4);
  auto g = scale(A.add(A.one(), A.eps()), f);
  CHECK(agree(r.U, add(mul(g, g), g)));
}

TEST_CASE("branch splitting") {
  auto k = Field::make(2, 1);
  auto ch = Character::make(k, {k.one()}, 3);
  auto A = ArtinAlgebra::make(k, 2);
  auto inv_f = add(LaurentSeries::monomial(A, A.one(), 3, 12), LaurentSeries::monomial(A, A.eps(), 1, 12));
  auto r = deformed_u(ch, std::nullopt, {A.one()}, invert(inv_f));
  CHECK(r.splits_branch);
  CHECK(agree(r.U.reduce(), r.u));
}

TEST_CASE("reduction mismatch") {
  auto k = Field::make(3, 1);
  auto ch = Character::make(k, {k.one()}, 2);
  auto A = ArtinAlgebra::make(k, 2);
  try {
    deformed_u(ch, std::nullopt, {A.from_int(2)}, LaurentSeries::monomial(A, A.one(), -2, 4));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReductionMismatch);
  }
}

TEST_CASE("pure powers") {
  auto k = Field::make(3, 1);
  auto A = ArtinAlgebra::make(k, 3);
  // (t - eps)^2 = t^2 + eps t + eps^2 over F_3
  DistinguishedPolynomial g{A, 2, {A.mul(A.eps(), A.eps()), A.eps()}};
  CHECK(is_pure_power(g));
  DistinguishedPolynomial h{A, 2, {A.eps(), A.zero()}};
  CHECK_FALSE(is_pure_power(h));
}

}
