#include "wildram/artin.hpp"

namespace wildram {

ArtinAlgebra ArtinAlgebra::make(const Field& k, int n) {
  if (n < 1 || n > kMaxOrder)
    throw Error(ErrorKind::InvalidArgument, "Artin order must lie in [1, 4], got " + std::to_string(n));
  return ArtinAlgebra(k, n);
}

ArtinElem ArtinAlgebra::eps() const {
  ArtinElem r;
  if (n_ > 1) r.c[1] = k_.one();
  return r;
}

ArtinElem ArtinAlgebra::embed(FieldElem a) const {
  ArtinElem r;
  r.c[0] = a;
  return r;
}

ArtinElem ArtinAlgebra::make_elem(std::initializer_list<FieldElem> comps) const {
  ArtinElem r;
  int i = 0;
  for (auto x : comps) {
    if (i >= n_) {
      if (x.v != 0) throw Error(ErrorKind::RingMismatch, "component beyond eps^(n-1)");
      continue;
    }
    r.c[i++] = x;
  }
  return r;
}

int ArtinAlgebra::eps_valuation(const ArtinElem& a) const {
  for (int j = 0; j < n_; ++j)
    if (a.c[j].v != 0) return j;
  return n_;
}

ArtinElem ArtinAlgebra::add(const ArtinElem& a, const ArtinElem& b) const {
  ArtinElem r;
  for (int j = 0; j < n_; ++j) r.c[j] = k_.add(a.c[j], b.c[j]);
  return r;
}

ArtinElem ArtinAlgebra::sub(const ArtinElem& a, const ArtinElem& b) const {
  ArtinElem r;
  for (int j = 0; j < n_; ++j) r.c[j] = k_.sub(a.c[j], b.c[j]);
  return r;
}

ArtinElem ArtinAlgebra::neg(const ArtinElem& a) const {
  ArtinElem r;
  for (int j = 0; j < n_; ++j) r.c[j] = k_.neg(a.c[j]);
  return r;
}

ArtinElem ArtinAlgebra::mul(const ArtinElem& a, const ArtinElem& b) const {
  if (n_ == 1) return embed(k_.mul(a.c[0], b.c[0]));
  ArtinElem r;
  for (int i = 0; i < n_; ++i) {
    if (a.c[i].v == 0) continue;
    for (int j = 0; i + j < n_; ++j)
      r.c[i + j] = k_.add(r.c[i + j], k_.mul(a.c[i], b.c[j]));
  }
  return r;
}

ArtinElem ArtinAlgebra::scale(FieldElem s, const ArtinElem& a) const {
  ArtinElem r;
  for (int j = 0; j < n_; ++j) r.c[j] = k_.mul(s, a.c[j]);
  return r;
}

ArtinElem ArtinAlgebra::inv(const ArtinElem& a) const {
  if (a.c[0].v == 0) throw Error(ErrorKind::NotAUnit, "element of the maximal ideal: " + to_string(a));
  // a = a0 (1 + x), x nilpotent: a^{-1} = a0^{-1} sum (-x)^j
  const FieldElem a0i = k_.inv(a.c[0]);
  ArtinElem x = scale(a0i, a);
  x.c[0] = k_.zero();
  const ArtinElem mx = neg(x);
  ArtinElem term = one(), sum = one();
  for (int j = 1; j < n_; ++j) {
    term = mul(term, mx);
    sum = add(sum, term);
  }
  return scale(a0i, sum);
}

ArtinElem ArtinAlgebra::pow(const ArtinElem& a, std::uint64_t e) const {
  ArtinElem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

ArtinElem ArtinAlgebra::frob(const ArtinElem& a, int e) const {
  ArtinElem r;
  for (int j = 0; j < n_; ++j) r.c[j] = k_.frob(a.c[j], e);
  return r;
}

ArtinAlgebra ArtinAlgebra::small_extension() const {
  if (n_ == 1) throw Error(ErrorKind::InvalidArgument, "the residue field has no small extension");
  return ArtinAlgebra(k_, n_ - 1);
}

ArtinElem ArtinAlgebra::project(const ArtinElem& a, const ArtinAlgebra& target) const {
  ArtinElem r;
  for (int j = 0; j < target.n_ && j < n_; ++j) r.c[j] = a.c[j];
  return r;
}

std::string ArtinAlgebra::to_string(const ArtinElem& a) const {
  std::string out;
  auto elem = [&](FieldElem x) {
    if (k_.d() == 1) return std::to_string(x.v);
    std::string s = "[";
    auto cs = k_.coeffs(x);
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + std::to_string(cs[i]);
    return s + "]";
  };
  for (int j = 0; j < n_; ++j) {
    if (a.c[j].v == 0) continue;
    if (!out.empty()) out += " + ";
    out += elem(a.c[j]);
    if (j == 1) out += "*e";
    if (j > 1) out += "*e^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace wildram
