#include "wildram/deform.hpp"

#include <numeric>

namespace wildram {

namespace {

ArtinElem eps_pow(const ArtinAlgebra& A, int j) {
  ArtinElem r = A.one();
  for (int i = 0; i < j; ++i) r = A.mul(r, A.eps());
  return r;
}

FieldElem random_elem(const Field& k, std::mt19937_64& rng) {
  return FieldElem{static_cast<std::uint32_t>(rng() % k.order())};
}

// Component j of a, requiring components below j to vanish.
LaurentSeries top_component(const LaurentSeries& a, int j, ErrorKind kind, const std::string& what) {
  for (int i = 0; i < j; ++i)
    if (!a.component(i).is_zero()) throw Error(kind, what);
  return a.component(j);
}

}  // namespace

MatrixRep MatrixRep::from_generators(const ArtinAlgebra& A, const Character& ch, const std::vector<ArtinElem>& Cgen,
                                     const std::vector<ArtinElem>& lamgen) {
  const int s = ch.s();
  if (static_cast<int>(Cgen.size()) != s || static_cast<int>(lamgen.size()) != s)
    throw Error(ErrorKind::InvalidArgument, "need one entry per generator");
  MatrixRep r{A, ch, {}, {}};
  for (const auto& g : group_elements(ch.p(), s)) {
    ArtinElem C = A.zero(), lam = A.one();
    for (int i = 0; i < s; ++i)
      for (int e = 0; e < g.exps[static_cast<std::size_t>(i)]; ++e) {
        C = A.add(C, A.mul(lam, Cgen[static_cast<std::size_t>(i)]));
        lam = A.mul(lam, lamgen[static_cast<std::size_t>(i)]);
      }
    r.C.push_back(C);
    r.lam.push_back(lam);
  }
  return r;
}

MatrixRep MatrixRep::trivial(const ArtinAlgebra& A, const Character& ch) {
  std::vector<ArtinElem> C, lam;
  for (auto v : ch.vals()) {
    C.push_back(A.embed(v));
    lam.push_back(A.one());
  }
  return from_generators(A, ch, C, lam);
}

const ArtinElem& MatrixRep::C_of(const GroupElem& g) const { return C.at(group_index(ch.p(), g)); }
const ArtinElem& MatrixRep::lam_of(const GroupElem& g) const { return lam.at(group_index(ch.p(), g)); }

RepReport rep_validate(const MatrixRep& rep) {
  const auto& A = rep.A;
  const int p = rep.ch.p(), s = rep.ch.s();
  RepReport r;
  r.reduction = r.homomorphism = r.order_p = r.commuting = true;
  const auto elems = group_elements(p, s);
  if (rep.C.size() != elems.size() || rep.lam.size() != elems.size()) {
    r.reduction = r.homomorphism = r.order_p = r.commuting = false;
    r.failures.push_back("tables do not cover the group");
    return r;
  }
  for (const auto& g : elems) {
    if (!(A.reduce(rep.C_of(g)) == character_value(rep.ch, g)) || !(A.reduce(rep.lam_of(g)) == A.field().one())) {
      r.reduction = false;
      r.failures.push_back("reduction at " + g.to_string());
    }
    for (const auto& h : elems) {
      const auto gh = group_mul(p, g, h);
      if (!(rep.C_of(gh) == A.add(rep.C_of(g), A.mul(rep.lam_of(g), rep.C_of(h)))) ||
          !(rep.lam_of(gh) == A.mul(rep.lam_of(g), rep.lam_of(h)))) {
        if (r.homomorphism) r.failures.push_back("product rule at " + g.to_string() + h.to_string());
        r.homomorphism = false;
      }
    }
  }
  for (int i = 0; i < s; ++i) {
    const auto g = GroupElem::generator(s, i);
    const ArtinElem lam = rep.lam_of(g);
    ArtinElem sum = A.zero(), pw = A.one();
    for (int nu = 0; nu < p; ++nu) {
      sum = A.add(sum, pw);
      pw = A.mul(pw, lam);
    }
    if (!(pw == A.one()) || !A.is_zero(A.mul(rep.C_of(g), sum))) {
      r.order_p = false;
      r.failures.push_back("order p at generator " + std::to_string(i + 1));
    }
    for (int j = i + 1; j < s; ++j) {
      const auto h = GroupElem::generator(s, j);
      if (!(A.add(rep.C_of(g), A.mul(lam, rep.C_of(h))) == A.add(rep.C_of(h), A.mul(rep.lam_of(h), rep.C_of(g))))) {
        r.commuting = false;
        r.failures.push_back("commuting relation at generators " + std::to_string(i + 1) + "," + std::to_string(j + 1));
      }
    }
  }
  r.ok = r.reduction && r.homomorphism && r.order_p && r.commuting;
  return r;
}

MatrixRep conjugate_rep(const MatrixRep& rep, const ArtinElem& mu, const ArtinElem& lam0) {
  const auto& A = rep.A;
  MatrixRep r = rep;
  for (std::size_t i = 0; i < r.C.size(); ++i)
    r.C[i] = A.sub(A.add(mu, A.mul(lam0, rep.C[i])), A.mul(rep.lam[i], mu));
  return r;
}

LaurentSeries deformed_rho(const MatrixRep& rep, const LaurentSeries& ftilde, const GroupElem& g, int prec) {
  const auto& A = rep.A;
  const int m = rep.ch.m();
  if (!(ftilde.ring() == A)) throw Error(ErrorKind::RingMismatch, "f and the representation live over different rings");
  const auto k1 = ArtinAlgebra::make(A.field(), 1);
  const LaurentSeries F = invert(ftilde);
  if (!agree(F.reduce(), LaurentSeries::monomial(k1, k1.one(), m, F.prec())))
    throw Error(ErrorKind::ReductionMismatch, "1/f does not reduce to t^m");
  const auto rho = build_rho(rep.ch, g, prec + m + 2);
  LaurentSeries T = rho.change_ring(A);
  const LaurentSeries G =
      invert(add(scale(rep.lam_of(g), ftilde), LaurentSeries::monomial(A, rep.C_of(g), 0, ftilde.prec())));
  const LaurentSeries dinv = invert(scale(k1.from_int(m), power(rho, static_cast<unsigned>(m - 1))));
  for (int j = 1; j < A.order(); ++j) {
    const LaurentSeries R = sub(G, compose(F, T));
    const LaurentSeries X = mul(top_component(R, j, ErrorKind::NoSolution, "residual below the lifting step"), dinv);
    if (!X.is_zero() && X.lead() < 0) throw Error(ErrorKind::NoSolution, "correction has a pole");
    T = add(T, scale(eps_pow(A, j), X.change_ring(A)));
  }
  if (T.prec() < prec)
    throw Error(ErrorKind::InvalidArgument,
                "f known only to t^" + std::to_string(ftilde.prec()) + "; result reaches t^" + std::to_string(T.prec()));
  return T.truncate(prec);
}

MatrixRep DeformationDatum::rep() const {
  const auto A = ArtinAlgebra::make(ch.field(), 2);
  std::vector<ArtinElem> C, lam;
  for (int i = 0; i < ch.s(); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    C.push_back(A.make_elem({ch.vals()[ui], delta.at(ui)}));
    lam.push_back(A.make_elem({ch.field().one(), lambda1.at(ui)}));
  }
  return MatrixRep::from_generators(A, ch, C, lam);
}

LaurentSeries DeformationDatum::ftilde(int prec) const {
  const auto A = ArtinAlgebra::make(ch.field(), 2);
  const int m = ch.m();
  LaurentSeries inv = LaurentSeries::monomial(A, A.one(), m, prec + 2 * m);
  for (int mu = 0; mu < m; ++mu)
    inv = add(inv, LaurentSeries::monomial(A, A.make_elem({ch.field().zero(), a1.at(static_cast<std::size_t>(mu))}), mu,
                                           prec + 2 * m));
  return invert(inv);
}

DeformationDatum random_datum(const Character& ch, std::mt19937_64& rng) {
  const Field& k = ch.field();
  DeformationDatum d{ch, {}, {}, {}};
  const FieldElem lambda = ch.p() == 2 ? k.zero() : random_elem(k, rng);
  for (auto v : ch.vals()) {
    d.lambda1.push_back(k.mul(lambda, v));
    d.delta.push_back(random_elem(k, rng));
  }
  for (int mu = 0; mu < ch.m(); ++mu) d.a1.push_back(random_elem(k, rng));
  return d;
}

TangentCocycle tangent_cocycle_extract(const MatrixRep& rep, const LaurentSeries& ftilde, int prec) {
  const auto& A = rep.A;
  if (A.order() != 2) throw Error(ErrorKind::InvalidArgument, "tangent cocycles need k[eps]/eps^2");
  const int m = rep.ch.m(), s = rep.ch.s(), p = rep.ch.p();
  TangentCocycle out;
  for (int i = 0; i < s; ++i) {
    const auto g = GroupElem::generator(s, i);
    const LaurentSeries T = deformed_rho(rep, ftilde, g, prec);
    const LaurentSeries back = build_rho(rep.ch, group_inv(p, g), prec).change_ring(A);
    const LaurentSeries H = compose(back, T);
    const LaurentSeries h = top_component(sub(H, LaurentSeries::t(A, H.prec())), 1, ErrorKind::ReductionMismatch,
                                          "rho~ o rho^{-1} does not reduce to the identity");
    const LaurentSeries v = h.shift(-(m + 1));
    out.poles.push_back(PolePartClass::from_series(pole_part(v), m));
    out.cochain.vals.push_back(v);
  }
  return out;
}

PolePartClass cocycle_formula(const DeformationDatum& d, const GroupElem& g) {
  const Field& k = d.ch.field();
  const int m = d.ch.m(), p = d.ch.p();
  if (m % p == 0) throw Error(ErrorKind::InvalidArgument, "m must be prime to p");
  const auto rep = d.rep();
  const FieldElem lambda1 = rep.lam_of(g).c[1];
  const FieldElem c = character_value(d.ch, g);
  const FieldElem minv = k.inv(k.from_int(m));
  PolePartClass r = PolePartClass::zero(m);
  auto at = [&](int i) -> FieldElem& { return r.coeffs[static_cast<std::size_t>(i - 1)]; };
  at(m) = k.add(at(m), k.mul(minv, lambda1));
  for (int mu = 0; mu < m; ++mu) {
    const FieldElem w = k.mul(k.mul(k.from_int(2 * m - mu), k.mul(minv, minv)), k.mul(d.a1.at(static_cast<std::size_t>(mu)), c));
    at(m - mu) = k.add(at(m - mu), w);
  }
  return r;
}

std::pair<MatrixRep, LaurentSeries> lift_data(const DeformationDatum& d, int n, int prec) {
  if (n == 2) return {d.rep(), d.ftilde(prec)};
  const Character& ch = d.ch;
  const Field& k = ch.field();
  const auto A = ArtinAlgebra::make(k, n);
  std::vector<ArtinElem> C, lam;
  for (int i = 0; i < ch.s(); ++i) {
    ArtinElem c{};
    c.c[0] = ch.vals()[static_cast<std::size_t>(i)];
    for (int j = 1; j < n; ++j) c.c[static_cast<std::size_t>(j)] = d.delta[static_cast<std::size_t>(i)];
    C.push_back(c);
    lam.push_back(A.one());
  }
  LaurentSeries phi = LaurentSeries::t(A, prec);
  for (int mu = 0; mu < ch.m(); ++mu)
    phi = add(phi, LaurentSeries::monomial(A, A.scale(d.a1[static_cast<std::size_t>(mu)], A.eps()), mu + 2, prec));
  return {MatrixRep::from_generators(A, ch, C, lam), compose(LaurentSeries::monomial(A, A.one(), -ch.m(), prec), phi)};
}

Obstruction obstruction_two_cocycle(const MatrixRep& repA, const LaurentSeries& ftilde,
                                    const std::vector<LaurentSeries>& lifts, int prec) {
  const auto& A = repA.A;
  const Character& ch = repA.ch;
  const int p = ch.p(), s = ch.s(), m = ch.m();
  if (A.order() < 2) throw Error(ErrorKind::InvalidArgument, "no small extension below the residue field");
  if (!(ftilde.ring() == A)) throw Error(ErrorKind::RingMismatch, "f and the representation live over different rings");
  const auto elems = group_elements(p, s);
  if (lifts.size() != elems.size()) throw Error(ErrorKind::InvalidArgument, "need one lift per group element");
  const int top = A.order() - 1;
  for (std::size_t g = 0; g < elems.size(); ++g) {
    const auto low = deformed_rho(repA, ftilde, elems[g], prec);
    const auto diff = sub(lifts[g], low);
    top_component(diff, top, ErrorKind::ReductionMismatch, "lift of " + elems[g].to_string() + " reduces incorrectly");
  }
  Obstruction out{TwoCochain::zero(p, s, m), false, false};
  for (std::size_t g = 0; g < elems.size(); ++g)
    for (std::size_t h = 0; h < elems.size(); ++h) {
      const auto gh = group_mul(p, elems[g], elems[h]);
      const std::size_t ghi = group_index(p, gh);
      const auto D = sub(compose(lifts[g], lifts[h]), lifts[ghi]);
      const auto Y = top_component(D, top, ErrorKind::ReductionMismatch, "composite does not reduce to the product");
      const auto back = build_rho(ch, group_inv(p, gh), prec);
      const auto hv = compose(Y, back).shift(-(m + 1));
      out.cochain.at(g, h) = PolePartClass::from_series(pole_part(hv), m);
    }
  H2Engine h2(ch);
  out.is_cocycle = h2.is_cocycle(out.cochain);
  out.vanishes_in_h2 = h2.is_coboundary(out.cochain);
  return out;
}

LiftingPredicates lifting_predicates(int p, int s, int m) {
  if (std::gcd(m, p) != 1) throw Error(ErrorKind::InvalidArgument, "m must be prime to p");
  LiftingPredicates r;
  int q = 1;
  for (int i = 1; i < s; ++i) q *= p;
  r.char0_lift_necessary_condition = (m + 1) % q == 0;
  r.invariant_divisor_exists = s == 1 || (m + 1) % p != 0;
  r.invariant_divisor_excluded_mixed = s > 2;
  r.stichtenoth_two_dim = m < q * p;
  r.two_dim_wellformed = std::gcd(m, p) == 1 && (s == 1 || m > 1);
  return r;
}

}  // namespace wildram
