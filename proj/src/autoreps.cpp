#include "wildram/autoreps.hpp"

#include <map>
#include <numeric>
#include <random>

#include "wildram/addpoly.hpp"

namespace wildram {

GroupElem GroupElem::generator(int s, int i) {
  GroupElem g = identity(s);
  g.exps.at(static_cast<std::size_t>(i)) = 1;
  return g;
}

bool GroupElem::is_identity() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

std::string GroupElem::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exps.size(); ++i) out += (i ? "," : "") + std::to_string(exps[i]);
  return out + ")";
}

GroupElem group_mul(int p, const GroupElem& a, const GroupElem& b) {
  GroupElem r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] = (a.exps[i] + b.exps[i]) % p;
  return r;
}

GroupElem group_inv(int p, const GroupElem& a) {
  GroupElem r = a;
  for (auto& e : r.exps) e = (p - e) % p;
  return r;
}

std::vector<GroupElem> group_elements(int p, int s) {
  std::vector<GroupElem> out;
  int total = 1;
  for (int i = 0; i < s; ++i) total *= p;
  for (int idx = 0; idx < total; ++idx) {
    GroupElem g = GroupElem::identity(s);
    int r = idx;
    for (int i = s - 1; i >= 0; --i) {
      g.exps[static_cast<std::size_t>(i)] = r % p;
      r /= p;
    }
    out.push_back(std::move(g));
  }
  return out;
}

Character Character::make(const Field& k, std::vector<FieldElem> vals, int m) {
  if (vals.empty()) throw Error(ErrorKind::InvalidCharacter, "rank must be at least 1");
  for (auto v : vals)
    if (v.v >= k.order()) throw Error(ErrorKind::InvalidCharacter, "value outside the field");
  if (m < 1) throw Error(ErrorKind::InvalidCharacter, "conductor must be positive");
  if (std::gcd(m, k.p()) != 1)
    throw Error(ErrorKind::InvalidCharacter, "conductor " + std::to_string(m) + " is divisible by p");
  if (vals.size() >= 2 && m == 1) throw Error(ErrorKind::InvalidCharacter, "rank >= 2 requires conductor > 1");
  if (moore_det(k, vals).v == 0)
    throw Error(ErrorKind::InvalidCharacter, "character values are linearly dependent over F_p");
  return Character(k, std::move(vals), m);
}

FieldElem character_value(const Character& ch, const GroupElem& g) {
  const Field& k = ch.field();
  if (static_cast<int>(g.exps.size()) != ch.s()) throw Error(ErrorKind::InvalidArgument, "group element of wrong rank");
  FieldElem r = k.zero();
  for (int i = 0; i < ch.s(); ++i)
    r = k.add(r, k.mul(k.from_int(g.exps[static_cast<std::size_t>(i)]), ch.vals()[static_cast<std::size_t>(i)]));
  return r;
}

LaurentSeries rho_series(const ArtinAlgebra& A, const ArtinElem& c, int m, int prec) {
  if (prec < 2) throw Error(ErrorKind::InvalidArgument, "precision too small");
  LaurentSeries w = add(LaurentSeries::one(A, prec - 1), LaurentSeries::monomial(A, c, m, prec - 1));
  const LaurentSeries y = invert(mth_root_unit(w, m));
  return mul(LaurentSeries::t(A, prec + 1), y).truncate(prec);
}

LaurentSeries rho_series_newton(const ArtinAlgebra& A, const ArtinElem& c, int m, int prec) {
  if (prec < 2) throw Error(ErrorKind::InvalidArgument, "precision too small");
  if (m % A.p() == 0) throw Error(ErrorKind::RootDegreeDivisibleByP, "m divisible by p");
  const int P = prec - 1;
  const LaurentSeries w = add(LaurentSeries::one(A, P), LaurentSeries::monomial(A, c, m, P));
  const LaurentSeries one = LaurentSeries::one(A, P);
  const ArtinElem minv = A.inv(A.from_int(m));
  LaurentSeries y = one;
  for (int it = 0; it < 64; ++it) {
    const LaurentSeries ym1 = power(y, static_cast<unsigned>(m - 1));
    const LaurentSeries r = sub(mul(mul(ym1, y), w), one);
    if (r.is_zero()) break;
    y = sub(y, scale(minv, mul(r, invert(mul(ym1, w))))).truncate(P);
  }
  return mul(LaurentSeries::t(A, prec + 1), y).truncate(prec);
}

LaurentSeries build_rho(const Character& ch, const GroupElem& g, int prec) {
  const auto A = ArtinAlgebra::make(ch.field(), 1);
  return rho_series(A, A.embed(character_value(ch, g)), ch.m(), prec);
}

GroupLawReport verify_group_law(const Character& ch, int prec) {
  GroupLawReport rep;
  const int p = ch.p(), s = ch.s(), m = ch.m();
  const auto A = ArtinAlgebra::make(ch.field(), 1);
  const auto elems = group_elements(p, s);
  std::map<GroupElem, LaurentSeries> rho;
  auto fail = [&](const std::string& msg) {
    if (rep.ok) rep.first_discrepancy = msg;
    rep.ok = false;
  };
  for (const auto& g : elems) {
    auto r = build_rho(ch, g, prec);
    const ArtinElem c = A.embed(character_value(ch, g));
    if (r.coeffs() != rho_series_newton(A, c, m, prec).coeffs()) fail("Newton cross-check differs at " + g.to_string());
    const LaurentSeries lhs = invert(power(r, static_cast<unsigned>(m)));
    const LaurentSeries rhs = add(LaurentSeries::monomial(A, A.one(), -m, lhs.prec()), LaurentSeries::monomial(A, c, 0, lhs.prec()));
    if (!agree(lhs, rhs)) fail("defining equation fails at " + g.to_string());
    rho.emplace(g, std::move(r));
  }
  auto check_pair = [&](const GroupElem& g, const GroupElem& h) {
    ++rep.pairs_checked;
    if (!agree(compose(rho.at(g), rho.at(h)), rho.at(group_mul(p, g, h))))
      fail("composition law fails for " + g.to_string() + " and " + h.to_string());
  };
  if (elems.size() <= 25) {
    for (const auto& g : elems)
      for (const auto& h : elems) check_pair(g, h);
  } else {
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) check_pair(GroupElem::generator(s, i), GroupElem::generator(s, j));
    std::mt19937_64 rng(0x5eed);
    for (int it = 0; it < 40; ++it)
      check_pair(elems[rng() % elems.size()], elems[rng() % elems.size()]);
  }
  for (int i = 0; i < s; ++i) {
    const auto& r = rho.at(GroupElem::generator(s, i));
    LaurentSeries acc = r;
    for (int k = 1; k < p; ++k) acc = compose(r, acc);
    if (!agree(acc, LaurentSeries::t(A, prec))) fail("generator " + std::to_string(i + 1) + " does not have order p");
  }
  return rep;
}

RamificationData ramification_data(const Character& ch, int prec) {
  if (prec <= ch.m() + 2) throw Error(ErrorKind::InvalidArgument, "precision must exceed m+2");
  RamificationData out;
  const auto A = ArtinAlgebra::make(ch.field(), 1);
  int first = -1;
  for (const auto& g : group_elements(ch.p(), ch.s())) {
    if (g.is_identity()) continue;
    const auto d = sub(build_rho(ch, g, prec), LaurentSeries::t(A, prec));
    const int i = d.is_zero() ? prec : d.valuation();
    out.i_sigma.emplace_back(g, i);
    out.sum_i += i;
    if (i != ch.m() + 1) out.uniform_break = false;
    if (first < 0) first = i;
    if (i != first) out.single_jump = false;
  }
  int order = 1;
  for (int i = 0; i < ch.s(); ++i) order *= ch.p();
  out.ar_identity = (order - 1) * (ch.m() + 1);
  return out;
}

}  // namespace wildram
