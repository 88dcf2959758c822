#include "wildram/ascover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wildram {

namespace {

std::uint64_t ipow(int p, int e) {
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p);
  return q;
}

ArtinElem ppow(const ArtinAlgebra& A, const ArtinElem& x, int nu) {
  if (nu == 0) return x;
  if (A.order() == 1) return A.frob(x, nu);
  return A.pow(x, ipow(A.p(), nu));
}

std::vector<ArtinElem> embed_all(const ArtinAlgebra& A, const std::vector<FieldElem>& xs) {
  std::vector<ArtinElem> out;
  for (auto x : xs) out.push_back(A.embed(x));
  return out;
}

using Terms = std::map<int, FieldElem>;

LaurentSeries from_terms(const ArtinAlgebra& A, const Terms& t, int prec) {
  if (t.empty()) return LaurentSeries::zero(A, prec);
  const int lead = t.begin()->first;
  std::vector<ArtinElem> c(static_cast<std::size_t>(prec - lead));
  for (const auto& [e, a] : t) c[static_cast<std::size_t>(e - lead)] = A.embed(a);
  return LaurentSeries(A, lead, std::move(c), prec);
}

Terms pole_terms(const LaurentSeries& g) {
  Terms t;
  for (int e = g.lead(); e < 0; ++e) {
    const FieldElem a = g.coeff(e).c[0];
    if (a.v) t[e] = a;
  }
  return t;
}

void add_term(const Field& k, Terms& t, int e, FieldElem a) {
  const FieldElem r = k.add(t.count(e) ? t[e] : k.zero(), a);
  if (r.v)
    t[e] = r;
  else
    t.erase(e);
}

// Nonzero elements of F_{p^s} inside k, 1 first.
std::vector<FieldElem> scalars(const Field& k, int s) {
  std::vector<FieldElem> out{k.one()};
  for (auto z : k.subfield_elements(std::gcd(s, k.d())))
    if (z.v && !(z == k.one())) out.push_back(z);
  return out;
}

std::vector<FieldElem> resolve_mu(const Character& ch, const std::optional<std::vector<FieldElem>>& mu) {
  const Field& k = ch.field();
  const int s = ch.s();
  std::vector<FieldElem> m = mu ? *mu : default_mu(k, s);
  if (static_cast<int>(m.size()) != s) throw Error(ErrorKind::DependentMu, "mu needs " + std::to_string(s) + " elements");
  for (auto x : m)
    if (!(k.frob(x, s) == x)) throw Error(ErrorKind::DependentMu, "mu is not inside F_{p^s}");
  if (moore_det(k, m).v == 0) throw Error(ErrorKind::DependentMu, "mu is dependent over F_p");
  return m;
}

}  // namespace

std::vector<FieldElem> default_mu(const Field& k, int s) {
  if (k.d() % s != 0)
    throw Error(ErrorKind::FieldTooSmall, "F_" + std::to_string(k.p()) + "^" + std::to_string(s) + " is not a subfield");
  auto generates = [&](FieldElem x) {
    for (int j = 1; j < s; ++j)
      if (s % j == 0 && k.frob(x, j) == x) return false;
    return true;
  };
  FieldElem theta = k.one();
  if (k.d() == s && generates(k.gen())) {
    theta = k.gen();
  } else {
    for (auto x : k.subfield_elements(s))
      if (x.v && generates(x)) {
        theta = x;
        break;
      }
  }
  std::vector<FieldElem> out{k.one()};
  for (int i = 1; i < s; ++i) out.push_back(k.mul(out.back(), theta));
  return out;
}

PPolynomial bordered_moore_ppoly(const ArtinAlgebra& A, const std::vector<ArtinElem>& xs,
                                 const std::vector<ArtinElem>& mu) {
  const std::size_t s = xs.size();
  const ArtinElem delta = moore_det(A, xs);
  if (!A.is_unit(delta)) throw Error(ErrorKind::InvalidCharacter, "values are linearly dependent over F_p");
  const ArtinElem dinv = A.inv(delta);
  PPolynomial P(A);
  for (std::size_t j = 1; j <= s; ++j) {
    std::vector<std::vector<ArtinElem>> minor;
    for (std::size_t r = 0; r <= s; ++r) {
      if (r == j) continue;
      std::vector<ArtinElem> row(s);
      for (std::size_t i = 0; i < s; ++i) row[i] = r == 0 ? mu[i] : ppow(A, xs[i], static_cast<int>(r - 1));
      minor.push_back(std::move(row));
    }
    ArtinElem cof = A.mul(laplace_det(A, minor), dinv);
    if ((j + s) % 2) cof = A.neg(cof);
    P.set(static_cast<int>(j - 1), cof);
  }
  return P;
}

UData build_u(const Character& ch, const std::optional<std::vector<FieldElem>>& mu) {
  const Field& k = ch.field();
  const int s = ch.s();
  const auto m = resolve_mu(ch, mu);
  const auto A = ArtinAlgebra::make(k, 1);
  UData d{bordered_moore_ppoly(A, embed_all(A, ch.vals()), embed_all(A, m)), PPolynomial(A), {}, false, false};
  for (int j = 0; j < s; ++j) d.o.push_back(d.u1.coeff(j).c[0]);
  d.u = ppoly_apply(artin_schreier_operator(A, s), d.u1);
  d.coefficient_relation = true;
  for (int nu = 0; nu < s; ++nu)
    if (!(d.u.coeff(nu + s) == A.neg(A.frob(d.u.coeff(nu), s)))) d.coefficient_relation = false;
  PPolynomial y(A);
  const auto gens = normalized_generators(ch);
  for (int i = 0; i < s; ++i) y = ppoly_add(y, ppoly_scale(A.embed(m[static_cast<std::size_t>(i)]), gens[static_cast<std::size_t>(i)].y));
  d.matches_generators = (s % 2 ? y : ppoly_scale(A.from_int(-1), y)) == d.u1;
  return d;
}

std::vector<NormalizedGenerator> normalized_generators(const Character& ch) {
  const Field& k = ch.field();
  const auto A = ArtinAlgebra::make(k, 1);
  const int s = ch.s();
  std::vector<NormalizedGenerator> out;
  for (int i = 1; i <= s; ++i) {
    const PPolynomial ad = additive_poly_from_character(ch, i);
    const FieldElem at = ppoly_apply(ad, ch.vals()[static_cast<std::size_t>(i - 1)]);
    NormalizedGenerator g{ppoly_scale(A.embed(k.inv(at)), ad), {}, false};
    for (int j = 1; j <= s; ++j)
      g.shift.push_back(ppoly_apply(g.y, ch.vals()[static_cast<std::size_t>(j - 1)]) == (i == j ? k.one() : k.zero()));
    g.vanishes_at_zero = ppoly_apply(g.y, k.zero()) == k.zero();
    out.push_back(std::move(g));
  }
  return out;
}

ASCover germ_model(const Character& ch, const std::optional<std::vector<FieldElem>>& mu) {
  const auto A = ArtinAlgebra::make(ch.field(), 1);
  const UData d = build_u(ch, mu);
  const auto div = ppoly_right_divide(d.u, additive_poly_from_character(ch));
  if (!div.remainder.is_zero()) throw Error(ErrorKind::InvalidArgument, "u is not a polynomial in the norm of f");
  const auto f = LaurentSeries::monomial(A, A.one(), -ch.m(), 1);
  return {ch.s(), ch.m(), d.u, div.quotient, ppoly_apply(d.u, f), ppoly_apply(div.quotient, f)};
}

CoverClass class_reduce(const LaurentSeries& g, int s) {
  const auto& A = g.ring();
  if (A.order() != 1) throw Error(ErrorKind::RingMismatch, "class reduction needs a series over the residue field");
  if (g.prec() < 0) throw Error(ErrorKind::InvalidArgument, "pole part known only to t^" + std::to_string(g.prec()));
  const Field& k = A.field();
  const long long q = static_cast<long long>(ipow(k.p(), s));
  Terms t = pole_terms(g), w;
  for (auto it = t.begin(); it != t.end();) {
    const auto [e, a] = *it;
    if (e % q != 0) {
      ++it;
      continue;
    }
    const FieldElem b = k.p_power_root(a, s);
    const int e2 = static_cast<int>(e / q);
    add_term(k, w, e2, b);
    add_term(k, t, e2, b);
    it = t.erase(it);
  }
  Terms h;
  for (int e = std::max(g.lead(), 0); e < g.prec(); ++e)
    if (g.coeff(e).c[0].v) h[e] = g.coeff(e).c[0];
  const auto rep = from_terms(A, t, 0);
  CoverClass c{s, rep, from_terms(A, w, 0),
               h.empty() ? LaurentSeries::zero(A, g.prec()) : from_terms(A, h, g.prec()), rep, k.one()};
  auto key = [&](const LaurentSeries& x) {
    std::vector<std::uint32_t> v;
    for (const auto& a : x.coeffs()) v.push_back(a.c[0].v);
    return v;
  };
  if (!c.rep.is_zero())
    for (auto z : scalars(k, s)) {
      auto cand = scale(A.embed(z), c.rep);
      if (key(cand) < key(c.orbit_marker)) {
        c.orbit_marker = cand;
        c.orbit_zeta = z;
      }
    }
  return c;
}

bool witness_ok(const LaurentSeries& g, const CoverClass& cls) {
  const Field& k = g.ring().field();
  const int q = static_cast<int>(ipow(k.p(), cls.s));
  Terms lhs = pole_terms(g);
  for (const auto& [e, a] : pole_terms(cls.rep)) add_term(k, lhs, e, k.neg(a));
  Terms rhs;
  for (const auto& [e, b] : pole_terms(cls.witness)) {
    add_term(k, rhs, e * q, k.frob(b, cls.s));
    add_term(k, rhs, e, k.neg(b));
  }
  return lhs == rhs;
}

Conductor conductor(const CoverClass& cls) {
  if (cls.rep.is_zero()) return {0, true};
  const int p = cls.rep.ring().p();
  Conductor c;
  for (const auto& [e, a] : pole_terms(cls.rep)) {
    int n = -e;
    while (n % p == 0) n /= p;
    c.value = std::max(c.value, n);
  }
  return c;
}

Equivalence equivalent_covers(const LaurentSeries& g1, const LaurentSeries& g2, int s) {
  const auto& A = g1.ring();
  if (!(A == g2.ring())) throw Error(ErrorKind::RingMismatch, "covers over different rings");
  for (auto z : scalars(A.field(), s))
    if (class_reduce(sub(g1, scale(A.embed(z), g2)), s).rep.is_zero()) return {true, z};
  return {false, std::nullopt};
}

bool is_pure_power(const DistinguishedPolynomial& g) {
  const auto& A = g.ring;
  const int m = g.m;
  if (m == 0) return true;
  if (m % A.p() == 0) throw Error(ErrorKind::RootDegreeDivisibleByP, "degree divisible by p");
  const ArtinElem r = A.neg(A.mul(g.a[static_cast<std::size_t>(m - 1)], A.inv(A.from_int(m))));
  std::vector<ArtinElem> c{A.one()};
  for (int i = 0; i < m; ++i) {
    std::vector<ArtinElem> n(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      n[j + 1] = A.add(n[j + 1], c[j]);
      n[j] = A.sub(n[j], A.mul(r, c[j]));
    }
    c = std::move(n);
  }
  for (int j = 0; j < m; ++j)
    if (!(c[static_cast<std::size_t>(j)] == g.a[static_cast<std::size_t>(j)])) return false;
  return true;
}

DeformedU deformed_u(const Character& ch, const std::optional<std::vector<FieldElem>>& mu,
                     const std::vector<ArtinElem>& Cvals, const LaurentSeries& ftilde) {
  const auto& A = ftilde.ring();
  const int s = ch.s();
  if (!(A.field() == ch.field())) throw Error(ErrorKind::RingMismatch, "deformation over a different field");
  if (static_cast<int>(Cvals.size()) != s) throw Error(ErrorKind::ReductionMismatch, "wrong number of deformed values");
  for (int i = 0; i < s; ++i)
    if (!(A.reduce(Cvals[static_cast<std::size_t>(i)]) == ch.vals()[static_cast<std::size_t>(i)]))
      throw Error(ErrorKind::ReductionMismatch, "C(sigma_" + std::to_string(i + 1) + ") does not reduce to c");
  const auto A1 = ArtinAlgebra::make(ch.field(), 1);
  const auto f0 = ftilde.reduce();
  if (!agree(f0, LaurentSeries::monomial(A1, A1.one(), -ch.m(), f0.prec())))
    throw Error(ErrorKind::ReductionMismatch, "f does not reduce to t^-m");
  const auto m = resolve_mu(ch, mu);
  const PPolynomial U1 = bordered_moore_ppoly(A, Cvals, embed_all(A, m));
  const PPolynomial Upoly = ppoly_apply(artin_schreier_operator(A, s), U1);
  DeformedU r{ppoly_apply(Upoly, ftilde), ppoly_apply(build_u(ch, m).u, f0), false};
  if (!agree(r.U.reduce(), r.u)) throw Error(ErrorKind::ReductionMismatch, "U does not reduce to u");
  r.splits_branch = !is_pure_power(weierstrass_prepare(invert(ftilde)).g);
  return r;
}

}  // namespace wildram
