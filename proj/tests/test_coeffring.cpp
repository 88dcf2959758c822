#include "doctest.h"
#include "wildram/artin.hpp"

using namespace wildram;

TEST_SUITE("coeffring") {

TEST_CASE("default moduli") {
  CHECK(Field::make(2, 1).modulus() == std::vector<int>{0, 1});
  CHECK(Field::make(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field::make(2, 3).order() == 8);
}

TEST_CASE("construction errors") {
  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind([] { Field::make(4, 1); }) == ErrorKind::NonPrimeP);
  CHECK(kind([] { Field::make(3, 1, std::vector<int>{1, 1, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind([] { Field::make(2, 2, std::vector<int>{1, 0, 1}); }) == ErrorKind::ReducibleModulus);
  CHECK(kind([] { Field::make(3, 1).inv(FieldElem{0}); }) == ErrorKind::NotAUnit);
}

TEST_CASE("F4 inverse and roots") {
  auto k = Field::make(2, 2);
  const FieldElem w = k.gen();
  CHECK(k.coeffs(w) == std::vector<int>{0, 1});
  CHECK(k.inv(w) == k.mul(w, w));
  CHECK(k.p_power_root(w, 1) == k.mul(w, w));
  CHECK(k.p_power_root(k.zero(), 3) == k.zero());
  auto f2 = Field::make(2, 1);
  CHECK(f2.p_power_root(f2.one(), 3) == f2.one());
}

TEST_CASE("exhaustive field axioms for small q") {
  for (auto [p, d] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}}) {
    auto k = Field::make(p, d);
    const std::uint32_t q = k.order();
    INFO("p=" << p << " d=" << d);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      const FieldElem x{a};
      if (a) ok = ok && k.mul(x, k.inv(x)) == k.one();
      ok = ok && k.add(x, k.neg(x)) == k.zero();
      ok = ok && k.p_power_root(k.frob(x, 1), 1) == x;
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        const FieldElem y{b};
        ok = ok && k.frob(k.add(x, y)) == k.add(k.frob(x), k.frob(y));
        ok = ok && k.frob(k.mul(x, y)) == k.mul(k.frob(x), k.frob(y));
        if (q <= 16)
          for (std::uint32_t c = 0; c < q && ok; ++c) {
            const FieldElem z{c};
            ok = ok && k.mul(x, k.add(y, z)) == k.add(k.mul(x, y), k.mul(x, z));
            ok = ok && k.mul(k.mul(x, y), z) == k.mul(x, k.mul(y, z));
            ok = ok && k.add(k.add(x, y), z) == k.add(x, k.add(y, z));
          }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("subfields") {
  auto k = Field::make(2, 4);
  CHECK(k.subfield_elements(2).size() == 4);
  CHECK(k.subfield_elements(1).size() == 2);
  CHECK_THROWS_AS(k.subfield_elements(3), Error);
}

TEST_CASE("artin algebras") {
  auto f2 = Field::make(2, 1);
  auto A = ArtinAlgebra::make(f2, 2);
  const ArtinElem e = A.eps();
  CHECK(A.is_zero(A.mul(e, e)));
  const ArtinElem u = A.add(A.one(), e);
  CHECK(A.inv(u) == u);
  CHECK_THROWS_AS(A.inv(e), Error);

  auto f3 = Field::make(3, 1);
  auto B = ArtinAlgebra::make(f3, 3);
  const ArtinElem e2 = B.mul(B.eps(), B.eps());
  CHECK(!B.is_zero(e2));
  CHECK(B.is_zero(B.mul(B.eps(), e2)));
  CHECK(ArtinAlgebra::make(f2, 1).order() == 1);
}

TEST_CASE("small extension is a ring morphism with square-zero kernel") {
  auto k = Field::make(3, 1);
  auto A = ArtinAlgebra::make(k, 3);
  auto B = A.small_extension();
  std::vector<ArtinElem> all;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c) all.push_back(A.make_elem({{a}, {b}, {c}}));
  bool ok = true;
  for (auto& x : all)
    for (auto& y : all) {
      ok = ok && A.project(A.mul(x, y), B) == B.mul(A.project(x, B), A.project(y, B));
      ok = ok && A.project(A.add(x, y), B) == B.add(A.project(x, B), A.project(y, B));
      const ArtinElem ker = A.mul(x, A.mul(A.eps(), A.eps()));
      if (!A.is_unit(y)) ok = ok && A.is_zero(A.mul(ker, y));
      if (A.is_unit(x)) ok = ok && A.mul(x, A.inv(x)) == A.one();
    }
  CHECK(ok);
}

}
