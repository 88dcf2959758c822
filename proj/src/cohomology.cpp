#include "wildram/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wildram {

namespace {

Matrix identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = FieldElem{1};
  return I;
}

Matrix matmul(const Field& k, const Matrix& A, const Matrix& B) {
  Matrix C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t l = 0; l < A.cols; ++l) {
      const FieldElem x = A.at(i, l);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) {
        const FieldElem y = B.at(l, j);
        if (y.v) C.at(i, j) = k.add(C.at(i, j), k.mul(x, y));
      }
    }
  return C;
}

Matrix matadd(const Field& k, const Matrix& A, const Matrix& B, bool subtract = false) {
  Matrix C = A;
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = subtract ? k.sub(A.a[i], B.a[i]) : k.add(A.a[i], B.a[i]);
  return C;
}

std::vector<FieldElem> matvec(const Field& k, const Matrix& A, const std::vector<FieldElem>& x) {
  std::vector<FieldElem> y(A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j)
      if (A.at(i, j).v && x[j].v) y[i] = k.add(y[i], k.mul(A.at(i, j), x[j]));
  return y;
}

Matrix norm_of(const Field& k, const Matrix& S, int p) {
  Matrix acc = identity(S.rows), pw = identity(S.rows);
  for (int j = 1; j < p; ++j) {
    pw = matmul(k, S, pw);
    acc = matadd(k, acc, pw);
  }
  return acc;
}

// Clears the pivot columns of e from v.
void reduce(const Field& k, const Echelon& e, std::vector<FieldElem>& v) {
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const FieldElem f = v[e.pivots[r]];
    if (f.v == 0) continue;
    const FieldElem nf = k.neg(f);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (e.r.at(r, j).v) v[j] = k.add(v[j], k.mul(nf, e.r.at(r, j)));
  }
}

bool all_zero(const std::vector<FieldElem>& v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem x) { return x.v == 0; });
}

Matrix rows_to_matrix(std::size_t cols, const std::vector<std::vector<FieldElem>>& rows) {
  Matrix M(0, cols);
  for (const auto& r : rows) M.append_row(r);
  return M;
}

// Matrix of h -> h(rho) on t^lo..t^{hi-1}, mod t^hi.
Matrix substitution_matrix(const Character& ch, const GroupElem& g, int lo, int hi) {
  const int m = ch.m();
  const auto rho = build_rho(ch, g, hi + std::max(0, -lo) + m + 4);
  const std::size_t n = static_cast<std::size_t>(hi - lo);
  Matrix S(n, n);
  auto fill = [&](int j, const LaurentSeries& pw) {
    for (int e = std::max(lo, pw.lead()); e < hi; ++e) S.at(static_cast<std::size_t>(e - lo), static_cast<std::size_t>(j - lo)) = pw.coeff(e).c[0];
  };
  if (lo <= 0 && hi > 0) S.at(static_cast<std::size_t>(-lo), static_cast<std::size_t>(-lo)) = FieldElem{1};
  if (lo < 0) {
    const auto iv = invert(rho);
    LaurentSeries pw = iv;
    for (int j = -1; j >= lo; --j) {
      if (j < hi) fill(j, pw.truncate(hi));
      if (j > lo) pw = mul(pw, iv);
    }
  }
  if (hi > 1) {
    LaurentSeries pw = rho.truncate(hi);
    for (int j = 1; j < hi; ++j) {
      if (j >= lo) fill(j, pw);
      pw = mul(pw, rho).truncate(hi);
    }
  }
  return S;
}

long long floor_div(long long a, long long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace

PolePartClass PolePartClass::from_series(const LaurentSeries& a, int m) {
  if (a.ring().order() != 1) throw Error(ErrorKind::RingMismatch, "pole parts live over the residue field");
  PolePartClass r = zero(m);
  if (a.is_zero()) return r;
  if (a.lead() < -(m + 1))
    throw Error(ErrorKind::PoleOrderExceeded, "pole of order " + std::to_string(-a.lead()) + " exceeds m+1");
  for (int i = 1; i <= m + 1; ++i)
    if (-i >= a.lead() && -i < a.prec()) r.coeffs[static_cast<std::size_t>(i - 1)] = a.coeff(-i).c[0];
  return r;
}

LaurentSeries PolePartClass::to_series(const Field& k) const {
  std::vector<FieldElem> c(coeffs.rbegin(), coeffs.rend());
  return LaurentSeries::from_field(ArtinAlgebra::make(k, 1), -(m + 1), c, 0);
}

bool PolePartClass::is_zero() const { return all_zero(coeffs); }

PolePartClass module_action(const Character& ch, const GroupElem& g, const PolePartClass& x, int prec) {
  const int m = ch.m();
  if (x.m != m) throw Error(ErrorKind::InvalidArgument, "pole part has the wrong conductor");
  if (prec < 2 * (m + 1)) throw Error(ErrorKind::InvalidArgument, "precision must be at least 2(m+1)");
  const auto rho = build_rho(ch, g, prec);
  const auto hr = compose(x.to_series(ch.field()), rho);
  const auto factor = mul(power(rho, static_cast<unsigned>(m + 1)).shift(-(m + 1)), invert(derivative(rho)));
  return PolePartClass::from_series(pole_part(mul(hr, factor)), m);
}

LaurentSeries act(const Character& ch, const GroupElem& g, const LaurentSeries& h) {
  if (h.is_zero()) return h;
  const auto rho = build_rho(ch, g, std::max(h.prec(), 2) + std::max(0, -h.lead()) + 4);
  return compose(h, rho).truncate(h.prec());
}

H1Engine::H1Engine(const Character& ch, int N, int lift) : ch_(ch) {
  const int m = ch.m(), p = ch.p(), s = ch.s();
  const Field& k = ch.field();
  N_ = N > 0 ? N : 4 * (m + 1);
  lift_ = lift >= 0 ? lift : (s >= 2 ? p * p * (m + 1) : 0);
  const int L = N_ + lift_;
  const int Lb = L + (p - 1) * m;
  const int a = lowest();
  n_ = static_cast<std::size_t>(N_ - a);
  const std::size_t nl = static_cast<std::size_t>(L - a);
  const std::size_t nlb = static_cast<std::size_t>(Lb - a);
  const std::size_t S = static_cast<std::size_t>(s);
  const std::size_t cols = S * nl;
  auto idx = [&](std::size_t e, std::size_t i) { return e * S + i; };

  std::vector<Matrix> norms;
  for (int i = 0; i < s; ++i) {
    S_.push_back(substitution_matrix(ch, GroupElem::generator(s, i), a, Lb));
    norms.push_back(norm_of(k, S_.back(), p));
  }
  std::vector<std::vector<FieldElem>> rows;
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t e = 0; e < nlb; ++e) {
      std::vector<FieldElem> r(cols);
      for (std::size_t f = 0; f < nl; ++f) r[idx(f, i)] = norms[i].at(e, f);
      if (!all_zero(r)) rows.push_back(std::move(r));
    }
  const std::size_t ncomm = static_cast<std::size_t>(L + m - a);
  for (std::size_t i = 0; i < S; ++i)
    for (std::size_t j = i + 1; j < S; ++j)
      for (std::size_t e = 0; e < ncomm; ++e) {
        std::vector<FieldElem> r(cols);
        for (std::size_t f = 0; f < nl; ++f) {
          FieldElem si = S_[i].at(e, f), sj = S_[j].at(e, f);
          if (e == f) {
            si = k.sub(si, k.one());
            sj = k.sub(sj, k.one());
          }
          r[idx(f, j)] = k.add(r[idx(f, j)], si);
          r[idx(f, i)] = k.sub(r[idx(f, i)], sj);
        }
        if (!all_zero(r)) rows.push_back(std::move(r));
      }
  auto deep = nullspace(k, rows_to_matrix(cols, rows));
  for (auto& v : deep) v.resize(S * n_);
  z_ = rref(k, rows_to_matrix(S * n_, deep));

  std::vector<std::vector<FieldElem>> brows;
  for (std::size_t f = 0; f < n_; ++f) {
    std::vector<FieldElem> r(S * n_);
    for (std::size_t i = 0; i < S; ++i)
      for (std::size_t e = 0; e < n_; ++e) {
        FieldElem x = S_[i].at(e, f);
        if (e == f) x = k.sub(x, k.one());
        r[idx(e, i)] = x;
      }
    brows.push_back(std::move(r));
  }
  b_ = rref(k, rows_to_matrix(S * n_, brows));
}

bool H1Engine::coboundaries_are_cocycles() const {
  for (std::size_t r = 0; r < b_.pivots.size(); ++r) {
    std::vector<FieldElem> v(b_.r.a.begin() + static_cast<std::ptrdiff_t>(r * b_.r.cols),
                             b_.r.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * b_.r.cols));
    reduce(ch_.field(), z_, v);
    if (!all_zero(v)) return false;
  }
  return true;
}

std::vector<OneCochain> H1Engine::basis() const {
  std::set<std::size_t> bp(b_.pivots.begin(), b_.pivots.end());
  std::vector<OneCochain> out;
  for (std::size_t r = 0; r < z_.pivots.size(); ++r) {
    if (bp.count(z_.pivots[r])) continue;
    std::vector<FieldElem> v(z_.r.a.begin() + static_cast<std::ptrdiff_t>(r * z_.r.cols),
                             z_.r.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * z_.r.cols));
    reduce(ch_.field(), b_, v);
    out.push_back(from_coords(v));
  }
  return out;
}

std::vector<std::pair<int, int>> H1Engine::leading_positions() const {
  std::set<std::size_t> bp(b_.pivots.begin(), b_.pivots.end());
  std::vector<std::pair<int, int>> out;
  const std::size_t S = static_cast<std::size_t>(ch_.s());
  for (auto c : z_.pivots)
    if (!bp.count(c)) out.emplace_back(lowest() + static_cast<int>(c / S), static_cast<int>(c % S));
  return out;
}

std::vector<FieldElem> H1Engine::coords(const OneCochain& x) const {
  const std::size_t S = static_cast<std::size_t>(ch_.s());
  if (x.vals.size() != S) throw Error(ErrorKind::InvalidArgument, "cochain has the wrong number of generator values");
  std::vector<FieldElem> v(S * n_);
  for (std::size_t i = 0; i < S; ++i) {
    const auto& f = x.vals[i];
    if (f.is_zero()) {
      if (f.prec() < N_) throw Error(ErrorKind::InvalidArgument, "cochain value known only to t^" + std::to_string(f.prec()));
      continue;
    }
    if (f.lead() < lowest()) throw Error(ErrorKind::PoleOrderExceeded, "cochain value has a pole beyond m+1");
    if (f.prec() < N_) throw Error(ErrorKind::InvalidArgument, "cochain value known only to t^" + std::to_string(f.prec()));
    for (int e = std::max(f.lead(), lowest()); e < N_; ++e)
      v[static_cast<std::size_t>(e - lowest()) * S + i] = f.coeff(e).c[0];
  }
  return v;
}

OneCochain H1Engine::from_coords(const std::vector<FieldElem>& v) const {
  const std::size_t S = static_cast<std::size_t>(ch_.s());
  const auto A = ArtinAlgebra::make(ch_.field(), 1);
  OneCochain x;
  for (std::size_t i = 0; i < S; ++i) {
    std::vector<FieldElem> c(n_);
    for (std::size_t e = 0; e < n_; ++e) c[e] = v[e * S + i];
    x.vals.push_back(LaurentSeries::from_field(A, lowest(), c, N_));
  }
  return x;
}

bool H1Engine::is_cocycle(const OneCochain& x) const {
  auto v = coords(x);
  reduce(ch_.field(), z_, v);
  return all_zero(v);
}

bool H1Engine::is_coboundary(const OneCochain& x) const {
  auto v = coords(x);
  reduce(ch_.field(), b_, v);
  return all_zero(v);
}

bool H1Engine::same_class(const OneCochain& a, const OneCochain& b) const {
  OneCochain d;
  for (std::size_t i = 0; i < a.vals.size(); ++i) d.vals.push_back(sub(a.vals[i], b.vals.at(i)));
  return is_coboundary(d);
}

std::size_t H1Engine::class_rank(const std::vector<OneCochain>& xs) const {
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& x : xs) {
    auto v = coords(x);
    reduce(ch_.field(), b_, v);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return 0;
  return rank(ch_.field(), rows_to_matrix(rows[0].size(), rows));
}

OneCochain H1Engine::coboundary_of(const LaurentSeries& y) const {
  OneCochain x;
  for (int i = 0; i < ch_.s(); ++i) x.vals.push_back(sub(act(ch_, GroupElem::generator(ch_.s(), i), y), y));
  return x;
}

H1Result h1_brute_force(const Character& ch, int N) {
  H1Engine e(ch, N);
  return {e.dim(), e.dim_cocycles(), e.dim_coboundaries(), e.basis()};
}

H1Formula h1_closed_formula(int p, int s, int m) {
  if (m % p == 0) throw Error(ErrorKind::InvalidArgument, "m must be prime to p");
  H1Formula out;
  long long a = -(m + 1);
  for (int i = 1; i <= s; ++i) {
    if (i > 1) a = ceil_div(a, p);
    out.a.push_back(static_cast<int>(a));
    out.h1 += static_cast<int>(floor_div(static_cast<long long>(m + 1) * (p - 1) + a, p) - ceil_div(a, p));
  }
  return out;
}

std::vector<int> admissible_exponents(int p, int m) {
  const int b = (m + 1) % p == 0 ? 1 : 2;
  int minv = 1;
  while ((minv * m) % p != 1 % p) ++minv;
  long long fact = 1;
  for (int j = 2; j <= p - 1; ++j) fact = fact * j % p;
  long long fact_inv = 1;
  while ((fact_inv * fact) % p != 1 % p) ++fact_inv;
  std::vector<int> out;
  for (int i = b; i <= m + 1; ++i) {
    const long long x = static_cast<long long>(i) * minv % p;
    long long prod = 1;
    for (int j = 0; j <= p - 2; ++j) prod = prod * (((x - j) % p + p) % p) % p;
    if (prod * fact_inv % p == 0) out.push_back(i);
  }
  return out;
}

CyclicBasis h1_basis_cyclic(int p, int m, const Field& k) {
  if (k.p() != p) throw Error(ErrorKind::InvalidArgument, "field characteristic differs from p");
  const auto ch = Character::make(k, {k.one()}, m);
  H1Engine e(ch);
  CyclicBasis out;
  const auto lead = e.leading_positions();
  const auto reps = e.basis();
  std::vector<int> found;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const int i = -lead[r].first;
    found.push_back(i);
    // normalize the leading coefficient to c(sigma) = 1
    const FieldElem lc = reps[r].vals[0].coeff(-i).c[0];
    OneCochain x{{scale(ArtinAlgebra::make(k, 1).embed(k.inv(lc)), reps[r].vals[0])}};
    out.entries.push_back({i, std::move(x)});
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& x, const auto& y) { return x.i < y.i; });
  std::sort(found.begin(), found.end());
  out.exponents_match = found == admissible_exponents(p, m);
  std::vector<OneCochain> xs;
  for (const auto& en : out.entries) xs.push_back(en.cochain);
  out.span_rank = e.class_rank(xs);
  out.h1_dim = e.dim();
  return out;
}

SplitCondition split_condition(int p, int s, int m) {
  SplitCondition out;
  for (int x = m; x > 0; x /= p) out.digits.push_back(x % p);
  while (static_cast<int>(out.digits.size()) < s) out.digits.push_back(0);
  out.holds = true;
  const int b0 = out.digits[0];
  for (int nu = 2; nu <= s; ++nu)
    if ((2 * b0) / p != (b0 + out.digits[static_cast<std::size_t>(nu - 1)]) / p) out.holds = false;
  return out;
}

SplitCheck split_check(const Character& ch, int N) {
  SplitCheck out;
  H1Engine full(ch, N);
  out.h1_total = full.dim();
  const Field& k = ch.field();
  const std::size_t S = static_cast<std::size_t>(ch.s());
  const std::size_t cols = full.cocycles().r.cols;
  std::vector<std::vector<FieldElem>> wrows;
  for (std::size_t nu = 0; nu < S; ++nu) {
    const auto sub = Character::make(k, {ch.vals()[nu]}, ch.m());
    H1Engine e(sub, full.N());
    out.h1_factors.push_back(e.dim());
    out.factor_sum += e.dim();
    const auto& B = e.coboundaries();
    for (std::size_t r = 0; r < B.pivots.size(); ++r) {
      std::vector<FieldElem> v(cols);
      for (std::size_t j = 0; j < B.r.cols; ++j) v[j * S + nu] = B.r.at(r, j);
      wrows.push_back(std::move(v));
    }
  }
  const std::size_t dz = full.dim_cocycles();
  const std::size_t dw = rank(k, rows_to_matrix(cols, wrows));
  std::vector<std::vector<FieldElem>> both = wrows;
  for (std::size_t r = 0; r < dz; ++r)
    both.emplace_back(full.cocycles().r.a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                      full.cocycles().r.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
  const std::size_t dsum = rank(k, rows_to_matrix(cols, both));
  out.restriction_injective = dz + dw - dsum == full.dim_coboundaries();
  return out;
}

KrullSigma krull_dimension_sigma(int p, int m) {
  KrullSigma out;
  for (int i : admissible_exponents(p, m))
    if (i <= m) out.sigma.push_back(i);
  out.dim = static_cast<int>(out.sigma.size());
  return out;
}

std::size_t TwoCochain::order() const {
  std::size_t q = 1;
  for (int i = 0; i < s; ++i) q *= static_cast<std::size_t>(p);
  return q;
}

bool TwoCochain::is_zero() const {
  return std::all_of(table.begin(), table.end(), [](const PolePartClass& x) { return x.is_zero(); });
}

TwoCochain TwoCochain::zero(int p, int s, int m) {
  TwoCochain t{p, s, m, {}};
  t.table.assign(t.order() * t.order(), PolePartClass::zero(m));
  return t;
}

std::size_t group_index(int p, const GroupElem& g) {
  std::size_t r = 0;
  for (int e : g.exps) r = r * static_cast<std::size_t>(p) + static_cast<std::size_t>(e);
  return r;
}

H2Engine::H2Engine(const Character& ch) : ch_(ch) {
  const int p = ch.p(), s = ch.s(), m = ch.m();
  const Field& k = ch.field();
  int q = 1;
  for (int i = 0; i < s; ++i) q *= p;
  if (q > 27) throw Error(ErrorKind::TooLarge, "p^s = " + std::to_string(q) + " exceeds 27");
  elems_ = group_elements(p, s);
  const std::size_t d = static_cast<std::size_t>(m) + 1;
  for (const auto& g : elems_) {
    // pole part of t^{-j}(rho) for j = 1..m+1, in the basis t^{-1}..t^{-(m+1)}
    const Matrix full = substitution_matrix(ch, g, -(m + 1), 0);
    Matrix A(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) A.at(r, c) = full.at(d - 1 - r, d - 1 - c);
    act_.push_back(std::move(A));
  }

  // multi-indices of total degree n
  auto indices = [&](int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(static_cast<std::size_t>(s), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == s - 1) {
        a[static_cast<std::size_t>(i)] = left;
        out.push_back(a);
        return;
      }
      for (int x = left; x >= 0; --x) {
        a[static_cast<std::size_t>(i)] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, n);
    return out;
  };
  std::vector<Matrix> gen_act, gen_norm;
  for (int i = 0; i < s; ++i) {
    gen_act.push_back(act_[group_index(p, GroupElem::generator(s, i))]);
    gen_norm.push_back(norm_of(k, gen_act.back(), p));
  }
  const Matrix I = identity(d);
  auto differential = [&](int n) {
    const auto src = indices(n), dst = indices(n + 1);
    Matrix D(dst.size() * d, src.size() * d);
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (int i = 0; i < s; ++i) {
        const int ai = dst[r][static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        auto a = dst[r];
        a[static_cast<std::size_t>(i)] -= 1;
        const std::size_t c = static_cast<std::size_t>(std::find(src.begin(), src.end(), a) - src.begin());
        int sign_exp = 0;
        for (int l = 0; l < i; ++l) sign_exp += dst[r][static_cast<std::size_t>(l)];
        const Matrix blk = ai % 2 ? matadd(k, gen_act[static_cast<std::size_t>(i)], I, true) : gen_norm[static_cast<std::size_t>(i)];
        for (std::size_t x = 0; x < d; ++x)
          for (std::size_t y = 0; y < d; ++y) {
            FieldElem v = blk.at(x, y);
            if (sign_exp % 2) v = k.neg(v);
            D.at(r * d + x, c * d + y) = k.add(D.at(r * d + x, c * d + y), v);
          }
      }
    return D;
  };
  const Matrix d1 = differential(1), d2 = differential(2);
  dim_ = d2.cols - rank(k, d2) - rank(k, d1);
}

std::size_t H2Engine::dim_bar() const {
  const Field& k = ch_.field();
  const int p = ch_.p();
  const std::size_t q = elems_.size(), d = static_cast<std::size_t>(ch_.m()) + 1;
  if (q * q * q * d > 60000) throw Error(ErrorKind::TooLarge, "bar complex too large for a dense check");
  auto mulidx = [&](std::size_t g, std::size_t h) { return group_index(p, group_mul(p, elems_[g], elems_[h])); };
  Matrix D1(q * q * d, q * d), D2(q * q * q * d, q * q * d);
  auto addblock = [&](Matrix& M, std::size_t r, std::size_t c, const Matrix* A, bool negate) {
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        FieldElem v = A ? A->at(x, y) : FieldElem{x == y ? 1u : 0u};
        if (negate) v = k.neg(v);
        M.at(r * d + x, c * d + y) = k.add(M.at(r * d + x, c * d + y), v);
      }
  };
  for (std::size_t g = 0; g < q; ++g)
    for (std::size_t h = 0; h < q; ++h) {
      const std::size_t r = g * q + h;
      addblock(D1, r, h, &act_[g], false);
      addblock(D1, r, mulidx(g, h), nullptr, true);
      addblock(D1, r, g, nullptr, false);
      for (std::size_t l = 0; l < q; ++l) {
        const std::size_t r2 = (g * q + h) * q + l;
        addblock(D2, r2, h * q + l, &act_[g], false);
        addblock(D2, r2, mulidx(g, h) * q + l, nullptr, true);
        addblock(D2, r2, g * q + mulidx(h, l), nullptr, false);
        addblock(D2, r2, g * q + h, nullptr, true);
      }
    }
  return D2.cols - rank(k, D2) - rank(k, D1);
}

std::vector<FieldElem> H2Engine::apply(std::size_t g, const std::vector<FieldElem>& x) const {
  return matvec(ch_.field(), act_[g], x);
}

bool H2Engine::is_cocycle(const TwoCochain& a) const {
  const Field& k = ch_.field();
  const int p = ch_.p();
  const std::size_t q = elems_.size();
  for (std::size_t g = 0; g < q; ++g)
    for (std::size_t h = 0; h < q; ++h) {
      const std::size_t gh = group_index(p, group_mul(p, elems_[g], elems_[h]));
      for (std::size_t l = 0; l < q; ++l) {
        const std::size_t hl = group_index(p, group_mul(p, elems_[h], elems_[l]));
        auto v = apply(g, a.at(h, l).coeffs);
        const auto& x = a.at(gh, l).coeffs;
        const auto& y = a.at(g, hl).coeffs;
        const auto& z = a.at(g, h).coeffs;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.sub(k.add(k.sub(v[i], x[i]), y[i]), z[i]);
        if (!all_zero(v)) return false;
      }
    }
  return true;
}

TwoCochain H2Engine::coboundary(const std::vector<PolePartClass>& beta) const {
  const Field& k = ch_.field();
  const int p = ch_.p();
  const std::size_t q = elems_.size();
  TwoCochain out = TwoCochain::zero(p, ch_.s(), ch_.m());
  for (std::size_t g = 0; g < q; ++g)
    for (std::size_t h = 0; h < q; ++h) {
      const std::size_t gh = group_index(p, group_mul(p, elems_[g], elems_[h]));
      auto v = apply(g, beta[h].coeffs);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.add(k.sub(v[i], beta[gh].coeffs[i]), beta[g].coeffs[i]);
      out.at(g, h).coeffs = v;
    }
  return out;
}

bool H2Engine::is_coboundary(const TwoCochain& a) const {
  const Field& k = ch_.field();
  const int p = ch_.p(), s = ch_.s();
  const std::size_t q = elems_.size(), d = static_cast<std::size_t>(ch_.m()) + 1;
  const std::size_t nu = static_cast<std::size_t>(s) * d;
  // beta(g) = L[g] u + b[g]; generators carry the unknowns, the rest follows
  // from beta(sigma_i h) = sigma_i beta(h) + beta(sigma_i) - a(sigma_i, h).
  std::vector<Matrix> L(q, Matrix(d, nu));
  std::vector<std::vector<FieldElem>> b(q, std::vector<FieldElem>(d));
  b[0] = a.at(0, 0).coeffs;
  for (std::size_t g = 1; g < q; ++g) {
    const auto& ge = elems_[g];
    std::size_t i = 0;
    while (ge.exps[i] == 0) ++i;
    const GroupElem gen = GroupElem::generator(s, static_cast<int>(i));
    const std::size_t gi = group_index(p, gen);
    if (g == gi) {
      for (std::size_t x = 0; x < d; ++x) L[g].at(x, i * d + x) = k.one();
      continue;
    }
    const std::size_t h = group_index(p, group_mul(p, ge, group_inv(p, gen)));
    L[g] = matadd(k, matmul(k, act_[gi], L[h]), L[gi]);
    b[g] = apply(gi, b[h]);
    for (std::size_t x = 0; x < d; ++x) b[g][x] = k.sub(k.add(b[g][x], b[gi][x]), a.at(gi, h).coeffs[x]);
  }
  Matrix M(0, nu);
  std::vector<FieldElem> rhs;
  for (std::size_t g = 0; g < q; ++g)
    for (std::size_t h = 0; h < q; ++h) {
      const std::size_t gh = group_index(p, group_mul(p, elems_[g], elems_[h]));
      const Matrix lhs = matadd(k, matadd(k, matmul(k, act_[g], L[h]), L[gh], true), L[g]);
      const auto gb = apply(g, b[h]);
      for (std::size_t x = 0; x < d; ++x) {
        std::vector<FieldElem> row(lhs.a.begin() + static_cast<std::ptrdiff_t>(x * nu),
                                   lhs.a.begin() + static_cast<std::ptrdiff_t>((x + 1) * nu));
        M.append_row(row);
        rhs.push_back(k.add(k.sub(k.sub(a.at(g, h).coeffs[x], gb[x]), b[g][x]), b[gh][x]));
      }
    }
  return solve(k, M, rhs).has_value();
}

}  // namespace wildram
