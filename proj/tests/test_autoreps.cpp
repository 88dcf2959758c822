#include "doctest.h"
#include "wildram/autoreps.hpp"

using namespace wildram;

namespace {

LaurentSeries fpoly(const Field& k, int lead, std::vector<int> c, int prec) {
  std::vector<FieldElem> f;
  for (int x : c) f.push_back(k.from_int(x));
  return LaurentSeries::from_field(ArtinAlgebra::make(k, 1), lead, f, prec);
}

}  // namespace

TEST_SUITE("autoreps") {

TEST_CASE("character values") {
  auto k = Field::make(2, 2);
  auto ch = Character::make(k, {k.one(), k.gen()}, 3);
  CHECK(character_value(ch, GroupElem::identity(2)) == k.zero());
  CHECK(character_value(ch, GroupElem::generator(2, 0)) == k.one());
  CHECK(character_value(ch, GroupElem{{1, 1}}) == k.add(k.one(), k.gen()));
}

TEST_CASE("character validation") {
  auto k = Field::make(2, 2);
  CHECK_THROWS_AS(Character::make(k, {k.one(), k.one()}, 3), Error);
  CHECK_THROWS_AS(Character::make(k, {k.one(), k.zero()}, 3), Error);
  CHECK_THROWS_AS(Character::make(k, {k.one(), k.gen()}, 1), Error);
  CHECK_THROWS_AS(Character::make(k, {k.one()}, 4), Error);
  CHECK_NOTHROW(Character::make(k, {k.one()}, 1));
  try {
    Character::make(k, {k.one(), k.one()}, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCharacter);
  }
}

TEST_CASE("rho examples") {
  auto f5 = Field::make(5, 1);
  auto ch = Character::make(f5, {f5.one()}, 2);
  auto r = build_rho(ch, GroupElem::generator(1, 0), 7);
  CHECK(agree(r, fpoly(f5, 1, {1, 0, 2, 0, 1, 0}, 7)));
  CHECK(r.prec() == 7);
  CHECK(agree(build_rho(ch, GroupElem::identity(1), 7), LaurentSeries::t(ArtinAlgebra::make(f5, 1), 7)));

  auto f2 = Field::make(2, 1);
  auto ch2 = Character::make(f2, {f2.one()}, 3);
  auto r2 = build_rho(ch2, GroupElem::generator(1, 0), 20);
  CHECK(sub(r2, LaurentSeries::t(ArtinAlgebra::make(f2, 1), 20)).valuation() == 4);
  // self-inverse
  CHECK(agree(revert(r2), r2));
}

TEST_CASE("group law") {
  auto k = Field::make(2, 2);
  auto ch = Character::make(k, {k.one(), k.gen()}, 3);
  auto rep = verify_group_law(ch, 24);
  CHECK(rep.ok);
  CHECK(rep.pairs_checked == 16);
  for (auto [p, m] : {std::pair{3, 2}, {3, 4}, {5, 3}, {2, 5}}) {
    auto f = Field::make(p, 1);
    auto c = Character::make(f, {f.from_int(p - 1)}, m);
    auto rp = verify_group_law(c, 3 * (m + 1) + 2);
    CHECK_MESSAGE(rp.ok, rp.first_discrepancy);
  }
  auto k9 = Field::make(3, 2);
  auto ch9 = Character::make(k9, {k9.one(), k9.gen()}, 2);
  CHECK(verify_group_law(ch9, 12).ok);
}

TEST_CASE("ramification data") {
  auto f2 = Field::make(2, 1);
  auto d = ramification_data(Character::make(f2, {f2.one()}, 3), 16);
  REQUIRE(d.i_sigma.size() == 1);
  CHECK(d.i_sigma[0].second == 4);
  CHECK(d.ar_identity == 4);
  auto f3 = Field::make(3, 1);
  auto d3 = ramification_data(Character::make(f3, {f3.one()}, 2), 12);
  CHECK(d3.ar_identity == 6);
  CHECK(d3.sum_i == d3.ar_identity);
  CHECK(d3.uniform_break);
  auto k = Field::make(2, 2);
  auto d4 = ramification_data(Character::make(k, {k.one(), k.gen()}, 5), 20);
  CHECK(d4.sum_i == d4.ar_identity);
  CHECK(d4.single_jump);
}

}
