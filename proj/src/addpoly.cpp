#include "wildram/addpoly.hpp"

#include <algorithm>

namespace wildram {

namespace {

std::uint64_t ppow(int p, int nu) {
  std::uint64_t q = 1;
  for (int i = 0; i < nu; ++i) q *= static_cast<std::uint64_t>(p);
  return q;
}

ArtinElem frob_pow(const ArtinAlgebra& A, const ArtinElem& x, int nu) {
  if (nu == 0) return x;
  if (A.order() == 1) return A.frob(x, nu);
  return A.pow(x, ppow(A.p(), nu));
}

}  // namespace

ArtinElem laplace_det(const ArtinAlgebra& A, const std::vector<std::vector<ArtinElem>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return A.one();
  if (n == 1) return m[0][0];
  if (n == 2) return A.sub(A.mul(m[0][0], m[1][1]), A.mul(m[0][1], m[1][0]));
  ArtinElem r = A.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (A.is_zero(m[0][j])) continue;
    std::vector<std::vector<ArtinElem>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    const ArtinElem term = A.mul(m[0][j], laplace_det(A, minor));
    r = j % 2 ? A.sub(r, term) : A.add(r, term);
  }
  return r;
}

PPolynomial PPolynomial::term(const ArtinAlgebra& A, int nu, const ArtinElem& a) {
  PPolynomial P(A);
  P.set(nu, a);
  return P;
}

int PPolynomial::degree_index() const { return c.empty() ? -1 : c.rbegin()->first; }

ArtinElem PPolynomial::coeff(int nu) const {
  auto it = c.find(nu);
  return it == c.end() ? ArtinElem{} : it->second;
}

void PPolynomial::set(int nu, const ArtinElem& a) {
  if (nu < 0) throw Error(ErrorKind::InvalidArgument, "negative Frobenius index");
  if (ring.is_zero(a))
    c.erase(nu);
  else
    c[nu] = a;
}

std::string PPolynomial::to_string() const {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [nu, a] : c) {
    if (!out.empty()) out += " + ";
    std::string coef = ring.to_string(a);
    if (coef.find(' ') != std::string::npos) coef = "(" + coef + ")";
    out += coef + "*Y^" + std::to_string(ppow(ring.p(), nu));
  }
  return out;
}

PPolynomial ppoly_add(const PPolynomial& a, const PPolynomial& b) {
  PPolynomial r = a;
  for (const auto& [nu, x] : b.c) r.set(nu, a.ring.add(r.coeff(nu), x));
  return r;
}

PPolynomial ppoly_scale(const ArtinElem& s, const PPolynomial& a) {
  PPolynomial r(a.ring);
  for (const auto& [nu, x] : a.c) r.set(nu, a.ring.mul(s, x));
  return r;
}

PPolynomial ppoly_sub(const PPolynomial& a, const PPolynomial& b) {
  return ppoly_add(a, ppoly_scale(a.ring.from_int(-1), b));
}

ArtinElem ppoly_apply(const PPolynomial& P, const ArtinElem& x) {
  const auto& A = P.ring;
  ArtinElem r = A.zero();
  for (const auto& [nu, a] : P.c) r = A.add(r, A.mul(a, frob_pow(A, x, nu)));
  return r;
}

FieldElem ppoly_apply(const PPolynomial& P, FieldElem x) { return ppoly_apply(P, P.ring.embed(x)).c[0]; }

LaurentSeries ppoly_apply(const PPolynomial& P, const LaurentSeries& x) {
  const auto& A = x.ring();
  const bool embed = !(P.ring == A);
  if (embed && !(P.ring.order() == 1 && P.ring.field() == A.field()))
    throw Error(ErrorKind::RingMismatch, "p-polynomial and series over different rings");
  LaurentSeries r = LaurentSeries::zero(A, x.prec());
  bool first = true;
  for (const auto& [nu, a] : P.c) {
    LaurentSeries term = scale(embed ? A.embed(a.c[0]) : a, frobenius(x, nu));
    r = first ? term : add(r, term);
    first = false;
  }
  return r;
}

PPolynomial ppoly_apply(const PPolynomial& P, const PPolynomial& Q) {
  const auto& A = P.ring;
  PPolynomial r(A);
  for (const auto& [nu, a] : P.c)
    for (const auto& [mu, b] : Q.c) r.set(nu + mu, A.add(r.coeff(nu + mu), A.mul(a, frob_pow(A, b, nu))));
  return r;
}

PPolyDivision ppoly_right_divide(const PPolynomial& u, const PPolynomial& divisor) {
  const auto& A = u.ring;
  const int s = divisor.degree_index();
  if (s < 0) throw Error(ErrorKind::InvalidArgument, "division by the zero p-polynomial");
  const ArtinElem lc = divisor.coeff(s);
  if (!A.is_unit(lc)) throw Error(ErrorKind::NotAUnit, "leading coefficient of the divisor is not a unit");
  PPolynomial q(A), r = u;
  while (r.degree_index() >= s) {
    const int N = r.degree_index();
    const ArtinElem a = A.mul(r.coeff(N), A.inv(frob_pow(A, lc, N - s)));
    q.set(N - s, a);
    r = ppoly_sub(r, ppoly_apply(PPolynomial::term(A, N - s, a), divisor));
  }
  return {q, r};
}

PPolynomial artin_schreier_operator(const ArtinAlgebra& A, int s) {
  PPolynomial D(A);
  D.set(s, A.one());
  D.set(0, A.add(D.coeff(0), A.from_int(-1)));
  return D;
}

ArtinElem moore_det(const ArtinAlgebra& A, const std::vector<ArtinElem>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<ArtinElem>> m(n, std::vector<ArtinElem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = frob_pow(A, xs[j], static_cast<int>(i));
  return laplace_det(A, m);
}

FieldElem moore_det(const Field& k, const std::vector<FieldElem>& xs) {
  const auto A = ArtinAlgebra::make(k, 1);
  std::vector<ArtinElem> e;
  for (auto x : xs) e.push_back(A.embed(x));
  return moore_det(A, e).c[0];
}

PPolynomial moore_ppoly(const ArtinAlgebra& A, const std::vector<ArtinElem>& xs) {
  const std::size_t n = xs.size();
  const ArtinElem base = moore_det(A, xs);
  if (!A.is_unit(base)) throw Error(ErrorKind::InvalidCharacter, "values are linearly dependent over F_p");
  const ArtinElem binv = A.inv(base);
  PPolynomial P(A);
  // Y occupies column n of the (n+1) x (n+1) matrix; row i holds p^i powers.
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::vector<ArtinElem>> minor;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == i) continue;
      std::vector<ArtinElem> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = frob_pow(A, xs[j], static_cast<int>(r));
      minor.push_back(std::move(row));
    }
    ArtinElem cof = A.mul(laplace_det(A, minor), binv);
    if ((i + n) % 2) cof = A.neg(cof);
    P.set(static_cast<int>(i), cof);
  }
  return P;
}

PPolynomial additive_poly_from_character(const Character& ch, std::optional<int> omit) {
  const auto A = ArtinAlgebra::make(ch.field(), 1);
  if (omit && (*omit < 1 || *omit > ch.s()))
    throw Error(ErrorKind::InvalidArgument, "omitted index out of range: " + std::to_string(*omit));
  std::vector<ArtinElem> xs;
  for (int j = 0; j < ch.s(); ++j)
    if (!omit || j + 1 != *omit) xs.push_back(A.embed(ch.vals()[static_cast<std::size_t>(j)]));
  return moore_ppoly(A, xs);
}

bool moore_swap_identity_check(const Character& ch, int i) {
  const Field& k = ch.field();
  const int s = ch.s();
  if (i < 1 || i > s) throw Error(ErrorKind::InvalidArgument, "index out of range");
  std::vector<FieldElem> swapped;
  for (int j = 0; j < s; ++j)
    if (j + 1 != i) swapped.push_back(ch.vals()[static_cast<std::size_t>(j)]);
  swapped.push_back(ch.vals()[static_cast<std::size_t>(i - 1)]);
  FieldElem rhs = moore_det(k, ch.vals());
  if ((s - i) % 2) rhs = k.neg(rhs);
  return moore_det(k, swapped) == rhs;
}

}  // namespace wildram
