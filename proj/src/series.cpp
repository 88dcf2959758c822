#include "wildram/series.hpp"

#include <algorithm>
#include <climits>

namespace wildram {

namespace {

void check_same_ring(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::RingMismatch, "series over different coefficient rings");
}

}  // namespace

LaurentSeries::LaurentSeries(ArtinAlgebra ring, int lead, std::vector<ArtinElem> coeffs, int prec)
    : ring_(std::move(ring)), lead_(lead), prec_(prec), c_(std::move(coeffs)) {
  if (static_cast<long long>(lead_) + static_cast<long long>(c_.size()) > prec_) c_.resize(std::max(0, prec_ - lead_));
  normalize();
}

void LaurentSeries::normalize() {
  std::size_t z = 0;
  while (z < c_.size() && ring_.is_zero(c_[z])) ++z;
  if (z == c_.size()) {
    c_.clear();
    lead_ = prec_;
    return;
  }
  if (z) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(z));
  lead_ += static_cast<int>(z);
  // pad to dense length
  c_.resize(static_cast<std::size_t>(prec_ - lead_));
}

LaurentSeries LaurentSeries::zero(const ArtinAlgebra& ring, int prec) { return LaurentSeries(ring, prec, {}, prec); }

LaurentSeries LaurentSeries::monomial(const ArtinAlgebra& ring, const ArtinElem& c, int e, int prec) {
  if (e >= prec) return zero(ring, prec);
  return LaurentSeries(ring, e, {c}, prec);
}

LaurentSeries LaurentSeries::t(const ArtinAlgebra& ring, int prec) { return monomial(ring, ring.one(), 1, prec); }

LaurentSeries LaurentSeries::one(const ArtinAlgebra& ring, int prec) { return monomial(ring, ring.one(), 0, prec); }

LaurentSeries LaurentSeries::from_field(const ArtinAlgebra& ring, int lead, const std::vector<FieldElem>& coeffs,
                                        int prec) {
  std::vector<ArtinElem> c;
  c.reserve(coeffs.size());
  for (auto x : coeffs) c.push_back(ring.embed(x));
  return LaurentSeries(ring, lead, std::move(c), prec);
}

ArtinElem LaurentSeries::coeff(int e) const {
  if (e >= prec_) throw Error(ErrorKind::InvalidArgument, "coefficient of t^" + std::to_string(e) + " is beyond precision");
  if (e < lead_) return ArtinElem{};
  return c_[static_cast<std::size_t>(e - lead_)];
}

int LaurentSeries::valuation() const {
  if (c_.empty()) throw Error(ErrorKind::ValuationOfZero, "series vanishes to precision " + std::to_string(prec_));
  return lead_;
}

int LaurentSeries::reduced_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i].c[0].v != 0) return lead_ + static_cast<int>(i);
  throw Error(ErrorKind::ValuationOfZero, "reduction vanishes to precision " + std::to_string(prec_));
}

LaurentSeries LaurentSeries::truncate(int p) const {
  if (p >= prec_) return *this;
  return LaurentSeries(ring_, lead_, c_, p);
}

LaurentSeries LaurentSeries::extend_exact(int p) const {
  if (p <= prec_) return truncate(p);
  if (c_.empty()) return zero(ring_, p);
  return LaurentSeries(ring_, lead_, c_, p);
}

LaurentSeries LaurentSeries::shift(int k) const {
  LaurentSeries r = *this;
  r.lead_ += k;
  r.prec_ += k;
  return r;
}

LaurentSeries LaurentSeries::component(int j) const {
  ArtinAlgebra k = ArtinAlgebra::make(ring_.field(), 1);
  std::vector<ArtinElem> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i].c[0] = j < ring_.order() ? c_[i].c[static_cast<std::size_t>(j)] : FieldElem{};
  return LaurentSeries(k, lead_, std::move(c), prec_);
}

LaurentSeries LaurentSeries::change_ring(const ArtinAlgebra& target) const {
  if (!(target.field() == ring_.field())) throw Error(ErrorKind::RingMismatch, "change_ring across residue fields");
  std::vector<ArtinElem> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = ring_.project(c_[i], target);
  return LaurentSeries(target, lead_, std::move(c), prec_);
}

std::string LaurentSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (ring_.is_zero(c_[i])) continue;
    const int e = lead_ + static_cast<int>(i);
    std::string term = ring_.to_string(c_[i]);
    if (term.find(' ') != std::string::npos) term = "(" + term + ")";
    if (e != 0) term += e == 1 ? "*t" : "*t^" + std::to_string(e);
    if (!out.empty()) out += " + ";
    out += term;
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(prec_) + ")";
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_ring(a, b);
  const auto& A = a.ring();
  const int prec = std::min(a.prec(), b.prec());
  const int lead = std::min(a.lead(), b.lead());
  if (lead >= prec) return LaurentSeries::zero(A, prec);
  std::vector<ArtinElem> c(static_cast<std::size_t>(prec - lead));
  for (int e = lead; e < prec; ++e) {
    ArtinElem x = e >= a.lead() ? a.coeffs()[static_cast<std::size_t>(e - a.lead())] : ArtinElem{};
    if (e >= b.lead()) x = A.add(x, b.coeffs()[static_cast<std::size_t>(e - b.lead())]);
    c[static_cast<std::size_t>(e - lead)] = x;
  }
  return LaurentSeries(A, lead, std::move(c), prec);
}

LaurentSeries neg(const LaurentSeries& a) {
  std::vector<ArtinElem> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ring().neg(a.coeffs()[i]);
  return LaurentSeries(a.ring(), a.lead(), std::move(c), a.prec());
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return add(a, neg(b)); }

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_ring(a, b);
  const auto& A = a.ring();
  const long long pa = static_cast<long long>(a.prec()) + b.lead();
  const long long pb = static_cast<long long>(b.prec()) + a.lead();
  const int prec = static_cast<int>(std::min(pa, pb));
  const int lead = a.lead() + b.lead();
  if (a.is_zero() || b.is_zero() || lead >= prec) return LaurentSeries::zero(A, prec);
  const std::size_t len = static_cast<std::size_t>(prec - lead);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<ArtinElem> c(len);
  if (A.order() == 1) {
    const Field& k = A.field();
    for (std::size_t i = 0; i < ca.size() && i < len; ++i) {
      const FieldElem x = ca[i].c[0];
      if (x.v == 0) continue;
      const std::size_t jmax = std::min(cb.size(), len - i);
      for (std::size_t j = 0; j < jmax; ++j) {
        if (cb[j].c[0].v == 0) continue;
        c[i + j].c[0] = k.add(c[i + j].c[0], k.mul(x, cb[j].c[0]));
      }
    }
  } else {
    for (std::size_t i = 0; i < ca.size() && i < len; ++i) {
      if (A.is_zero(ca[i])) continue;
      const std::size_t jmax = std::min(cb.size(), len - i);
      for (std::size_t j = 0; j < jmax; ++j) c[i + j] = A.add(c[i + j], A.mul(ca[i], cb[j]));
    }
  }
  return LaurentSeries(A, lead, std::move(c), prec);
}

LaurentSeries scale(const ArtinElem& s, const LaurentSeries& a) {
  std::vector<ArtinElem> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.ring().mul(s, a.coeffs()[i]);
  return LaurentSeries(a.ring(), a.lead(), std::move(c), a.prec());
}

LaurentSeries derivative(const LaurentSeries& a) {
  const auto& A = a.ring();
  if (a.is_zero()) return LaurentSeries::zero(A, a.prec() - 1);
  std::vector<ArtinElem> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int e = a.lead() + static_cast<int>(i);
    c[i] = A.mul(A.from_int(e), a.coeffs()[i]);
  }
  return LaurentSeries(A, a.lead() - 1, std::move(c), a.prec() - 1);
}

LaurentSeries power(const LaurentSeries& a, unsigned e) {
  if (e == 0) return LaurentSeries::one(a.ring(), std::max(a.prec() - a.lead(), 1));
  LaurentSeries b = a;
  while (!(e & 1)) {
    b = mul(b, b);
    e >>= 1;
  }
  LaurentSeries r = b;
  e >>= 1;
  while (e) {
    b = mul(b, b);
    if (e & 1) r = mul(r, b);
    e >>= 1;
  }
  return r;
}

namespace {

// Inverse of a field series u with u_0 != 0, relative precision len.
std::vector<ArtinElem> invert_field_unit(const Field& k, const std::vector<ArtinElem>& u, std::size_t len) {
  std::vector<ArtinElem> b(len);
  if (len == 0) return b;
  const FieldElem u0i = k.inv(u[0].c[0]);
  b[0].c[0] = u0i;
  for (std::size_t n = 1; n < len; ++n) {
    FieldElem s{};
    const std::size_t imax = std::min(n, u.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) {
      if (u[i].c[0].v == 0) continue;
      s = k.add(s, k.mul(u[i].c[0], b[n - i].c[0]));
    }
    b[n].c[0] = k.neg(k.mul(s, u0i));
  }
  return b;
}

}  // namespace

LaurentSeries invert(const LaurentSeries& a) {
  const auto& A = a.ring();
  int v;
  try {
    v = a.reduced_valuation();
  } catch (const Error&) {
    throw Error(ErrorKind::NotAUnitSeries, "reduction mod eps vanishes to precision " + std::to_string(a.prec()));
  }
  // reduction, as field coefficients from exponent v
  const std::size_t rel = static_cast<std::size_t>(a.prec() - v);
  std::vector<ArtinElem> u(rel);
  for (std::size_t i = 0; i < rel; ++i) u[i].c[0] = a.coeff(v + static_cast<int>(i)).c[0];
  std::vector<ArtinElem> binv = invert_field_unit(A.field(), u, rel);
  LaurentSeries b(A, -v, std::move(binv), a.prec() - 2 * v);
  if (A.order() == 1) return b;

  std::vector<ArtinElem> nil(a.coeffs());
  for (auto& x : nil) x.c[0] = FieldElem{};
  LaurentSeries x = neg(mul(LaurentSeries(A, a.lead(), std::move(nil), a.prec()), b));
  LaurentSeries sum = LaurentSeries::one(A, x.prec());
  LaurentSeries term = x;
  for (int j = 1; j < A.order(); ++j) {
    if (j > 1) term = mul(term, x);
    sum = add(sum, term);
  }
  return mul(b, sum);
}

LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner) {
  check_same_ring(outer, inner);
  const auto& A = outer.ring();
  const int n = A.order();
  int vred;
  try {
    vred = inner.reduced_valuation();
  } catch (const Error&) {
    throw Error(ErrorKind::CompositionDiverges, "inner series has vanishing reduction");
  }
  if (vred <= 0) throw Error(ErrorKind::CompositionDiverges, "inner series has reduced valuation " + std::to_string(vred));
  const int lraw = inner.lead();
  const long long slack = static_cast<long long>(n - 1) * (vred - lraw);
  // lower bound on the valuation of inner^k
  auto low = [&](long long k) { return k * vred - slack; };
  long long bound = static_cast<long long>(outer.prec()) * vred - slack;
  bound = std::min<long long>(bound, INT_MAX / 4);
  int prec = static_cast<int>(bound);

  LaurentSeries acc = LaurentSeries::zero(A, prec);
  if (outer.is_zero()) return acc;

  const int kmin = outer.lead();
  const int kmax = outer.prec() - 1;
  auto add_term = [&](int k, const LaurentSeries& pw) {
    const ArtinElem a = outer.coeff(k);
    if (A.is_zero(a)) return;
    acc = add(acc, scale(a, pw));
  };

  if (kmin <= 0 && kmax >= 0) add_term(0, LaurentSeries::one(A, prec));
  if (kmax >= 1) {
    const int k0 = std::max(kmin, 1);
    LaurentSeries pw = power(inner.truncate(prec), static_cast<unsigned>(k0)).truncate(prec);
    for (int k = k0; k <= kmax && low(k) < prec; ++k) {
      add_term(k, pw);
      pw = mul(pw, inner).truncate(prec);
    }
  }
  if (kmin < 0) {
    const LaurentSeries iv = invert(inner);
    LaurentSeries pw = iv;
    for (int k = -1; k >= kmin; --k) {
      if (k <= kmax) add_term(k, pw);
      if (k > kmin) pw = mul(pw, iv);
    }
  }
  return acc;
}

LaurentSeries revert(const LaurentSeries& a) {
  const auto& A = a.ring();
  if (a.is_zero() || a.lead() != 1 || !A.is_unit(a.coeff(1)))
    throw Error(ErrorKind::NotReversible, "series is not of the form c*t + O(t^2) with c a unit");
  const int P = a.prec();
  const LaurentSeries t = LaurentSeries::t(A, P);
  const LaurentSeries da = derivative(a);
  LaurentSeries b = LaurentSeries::monomial(A, A.inv(a.coeff(1)), 1, P);
  for (int it = 0; it < 64; ++it) {
    const LaurentSeries r = sub(compose(a, b), t);
    if (r.is_zero()) return b.truncate(std::min(b.prec(), r.prec()));
    const LaurentSeries corr = mul(r, invert(compose(da, b)));
    b = sub(b, corr).truncate(P);
  }
  throw Error(ErrorKind::NotReversible, "Newton iteration did not converge");
}

LaurentSeries mth_root_unit(const LaurentSeries& a, int m) {
  const auto& A = a.ring();
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "root degree must be positive");
  if (m % A.p() == 0) throw Error(ErrorKind::RootDegreeDivisibleByP, std::to_string(m) + " is divisible by p");
  if (a.is_zero() || a.lead() < 0 || a.prec() <= 0 || a.coeff(0).c[0] != A.field().one())
    throw Error(ErrorKind::NotAOnePlusSeries, "expected 1 + higher order terms");
  const int P = a.prec();
  const ArtinElem minv = A.inv(A.from_int(m));
  LaurentSeries x = LaurentSeries::one(A, P);
  for (int it = 0; it < 64; ++it) {
    const LaurentSeries xm1 = power(x, static_cast<unsigned>(m - 1));
    const LaurentSeries r = sub(mul(xm1, x), a);
    if (r.is_zero()) return x;
    x = sub(x, scale(minv, mul(r, invert(xm1)))).truncate(P);
  }
  throw Error(ErrorKind::NotAOnePlusSeries, "Newton iteration for the root did not converge");
}

LaurentSeries frobenius(const LaurentSeries& a, int e) {
  const auto& A = a.ring();
  long long q = 1;
  for (int i = 0; i < e; ++i) q *= A.p();
  const long long newprec = static_cast<long long>(a.prec()) * q;
  if (newprec > INT_MAX / 4 || newprec < -(INT_MAX / 4))
    throw Error(ErrorKind::TooLarge, "Frobenius power exceeds precision range");
  if (a.is_zero()) return LaurentSeries::zero(A, static_cast<int>(newprec));
  const int lead = static_cast<int>(a.lead() * q);
  std::vector<ArtinElem> c(static_cast<std::size_t>(newprec - lead));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const ArtinElem& x = a.coeffs()[i];
    if (A.is_zero(x)) continue;
    c[static_cast<std::size_t>(i * q)] = A.order() == 1 ? A.frob(x, e) : A.pow(x, static_cast<std::uint64_t>(q));
  }
  return LaurentSeries(A, lead, std::move(c), static_cast<int>(newprec));
}

LaurentSeries pole_part(const LaurentSeries& a) {
  const int prec = std::min(a.prec(), 0);
  if (a.lead() >= prec) return LaurentSeries::zero(a.ring(), prec);
  return a.truncate(prec);
}

bool agree(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b).is_zero(); }

LaurentSeries DistinguishedPolynomial::to_series(int prec) const {
  std::vector<ArtinElem> c(a);
  c.resize(static_cast<std::size_t>(m) + 1);
  c[static_cast<std::size_t>(m)] = ring.one();
  return LaurentSeries(ring, 0, std::move(c), std::max(prec, m + 1));
}

WeierstrassResult weierstrass_prepare(const LaurentSeries& f) {
  const auto& A = f.ring();
  if (f.lead() < 0) throw Error(ErrorKind::InvalidArgument, "weierstrass_prepare needs a power series");
  int m;
  try {
    m = f.reduced_valuation();
  } catch (const Error&) {
    throw Error(ErrorKind::ReductionIsZero, "f vanishes mod the maximal ideal to precision " + std::to_string(f.prec()));
  }
  const int P = f.prec();
  std::vector<ArtinElem> lo(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) lo[static_cast<std::size_t>(e)] = f.coeff(e);
  const LaurentSeries flo = LaurentSeries(A, 0, lo, P).extend_exact(P);
  std::vector<ArtinElem> hi;
  for (int e = m; e < P; ++e) hi.push_back(f.coeff(e));
  const LaurentSeries fhi(A, 0, std::move(hi), P - m);
  const LaurentSeries fhi_inv = invert(fhi);
  auto high_shift = [&](const LaurentSeries& s) {
    std::vector<ArtinElem> c;
    for (int e = m; e < s.prec(); ++e) c.push_back(s.coeff(e));
    return LaurentSeries(A, 0, std::move(c), s.prec() - m);
  };
  const LaurentSeries one = LaurentSeries::one(A, P);
  LaurentSeries w = fhi_inv;
  for (int it = 1; it < A.order(); ++it) w = mul(fhi_inv, sub(one, high_shift(mul(flo, w))));
  const LaurentSeries fw = mul(f, w);
  DistinguishedPolynomial g{A, m, std::vector<ArtinElem>(static_cast<std::size_t>(m))};
  for (int e = 0; e < m; ++e) g.a[static_cast<std::size_t>(e)] = fw.coeff(e);
  return {g, invert(w)};
}

}  // namespace wildram
