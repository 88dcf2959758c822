#include "wildram/field.hpp"

#include <algorithm>
#include <numeric>

namespace wildram {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ValuationOfZero: return "ValuationOfZero";
    case ErrorKind::NotAUnitSeries: return "NotAUnitSeries";
    case ErrorKind::CompositionDiverges: return "CompositionDiverges";
    case ErrorKind::NotReversible: return "NotReversible";
    case ErrorKind::RootDegreeDivisibleByP: return "RootDegreeDivisibleByP";
    case ErrorKind::NotAOnePlusSeries: return "NotAOnePlusSeries";
    case ErrorKind::ReductionIsZero: return "ReductionIsZero";
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DependentMu: return "DependentMu";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::EmptyClass: return "EmptyClass";
    case ErrorKind::ReductionMismatch: return "ReductionMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::PoleOrderExceeded: return "PoleOrderExceeded";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::UnknownTask: return "UnknownTask";
    case ErrorKind::GoldenMissing: return "GoldenMissing";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<int>;  // little-endian over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lc = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = ((a[shift + i] - lc * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(int p, const std::vector<int>& poly) {
  Poly f = poly;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int k = 1; k <= deg / 2; ++k) {
    // enumerate monic divisors of degree k
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Poly g(k + 1, 0);
      long long r = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<int>(r % p);
        r /= p;
      }
      g[k] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

namespace detail {

struct FieldTables {
  int p = 0;
  int d = 0;
  std::uint32_t q = 0;
  std::vector<int> modulus;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;  // log[a], a != 0
  std::vector<std::uint32_t> negt;
  std::vector<std::uint16_t> addt;  // q*q when q <= kAddTableMax
  std::uint32_t gen = 0;

  static constexpr std::uint32_t kAddTableMax = 1024;

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, w = 1;
    for (int i = 0; i < d; ++i) {
      r += ((a % p + b % p) % p) * w;
      a /= p;
      b /= p;
      w *= p;
    }
    return r;
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    Poly pa(d), pb(d);
    for (int i = 0; i < d; ++i) {
      pa[i] = static_cast<int>(a % p);
      a /= p;
      pb[i] = static_cast<int>(b % p);
      b /= p;
    }
    Poly prod(2 * d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    Poly r = poly_rem(prod, modulus, p);
    std::uint32_t v = 0, w = 1;
    for (std::size_t i = 0; i < r.size(); ++i, w *= p) v += static_cast<std::uint32_t>(r[i]) * w;
    return v;
  }
};

}  // namespace detail

Field Field::make(int p, int d, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > (1 << 20)) throw Error(ErrorKind::TooLarge, "field order exceeds 2^20");
  }
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->d = d;
  t->q = static_cast<std::uint32_t>(q);
  if (modulus) {
    Poly m = *modulus;
    for (int& c : m) c = ((c % p) + p) % p;
    if (static_cast<int>(m.size()) != d + 1 || m.back() != 1)
      throw Error(ErrorKind::ReducibleModulus, "modulus must be monic of degree " + std::to_string(d));
    if (!is_irreducible(p, m)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
    t->modulus = std::move(m);
  } else {
    // lexicographic from the constant term: a0 is the most significant digit
    const long long count = q;
    for (long long idx = 0; idx < count; ++idx) {
      Poly m(d + 1, 0);
      long long r = idx;
      for (int i = d - 1; i >= 0; --i) {
        m[i] = static_cast<int>(r % p);
        r /= p;
      }
      m[d] = 1;
      if (is_irreducible(p, m)) {
        t->modulus = std::move(m);
        break;
      }
    }
  }

  const std::uint32_t Q = t->q;
  t->negt.resize(Q);
  for (std::uint32_t a = 0; a < Q; ++a) {
    std::uint32_t r = 0, w = 1, x = a;
    for (int i = 0; i < d; ++i, w *= p) {
      r += ((p - x % p) % p) * w;
      x /= p;
    }
    t->negt[a] = r;
  }
  if (Q <= detail::FieldTables::kAddTableMax) {
    t->addt.resize(static_cast<std::size_t>(Q) * Q);
    for (std::uint32_t a = 0; a < Q; ++a)
      for (std::uint32_t b = 0; b < Q; ++b)
        t->addt[a * Q + b] = static_cast<std::uint16_t>(t->add_digits(a, b));
  }

  // primitive element: smallest index whose order is q-1
  std::vector<std::uint32_t> primes;
  {
    std::uint32_t n = Q - 1;
    for (std::uint32_t k = 2; k * k <= n; ++k)
      if (n % k == 0) {
        primes.push_back(k);
        while (n % k == 0) n /= k;
      }
    if (n > 1) primes.push_back(n);
  }
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = t->slow_mul(r, a);
      a = t->slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t g = 0;
  for (std::uint32_t c = 1; c < Q && g == 0; ++c) {
    bool ok = true;
    for (auto r : primes)
      if (slow_pow(c, (Q - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) g = c;
  }
  if (Q == 2) g = 1;
  t->gen = g;
  t->exp.resize(2 * static_cast<std::size_t>(Q - 1) + 1);
  t->log.assign(Q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < Q - 1; ++i) {
    t->exp[i] = x;
    t->log[x] = i;
    x = t->slow_mul(x, g);
  }
  for (std::uint32_t i = Q - 1; i < t->exp.size(); ++i) t->exp[i] = t->exp[i - (Q - 1)];
  return Field(std::move(t));
}

int Field::p() const { return t_->p; }
int Field::d() const { return t_->d; }
std::uint32_t Field::order() const { return t_->q; }
const std::vector<int>& Field::modulus() const { return t_->modulus; }

FieldElem Field::gen() const {
  if (t_->d == 1) return neg(FieldElem{static_cast<std::uint32_t>(t_->modulus[0])});
  return FieldElem{static_cast<std::uint32_t>(t_->p)};
}

FieldElem Field::from_int(long long n) const {
  const long long p = t_->p;
  return FieldElem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

FieldElem Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > t_->d)
    throw Error(ErrorKind::InvalidArgument, "too many coefficients for field element");
  std::uint32_t v = 0, w = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i, w *= t_->p)
    v += static_cast<std::uint32_t>(((coeffs[i] % t_->p) + t_->p) % t_->p) * w;
  return FieldElem{v};
}

std::vector<int> Field::coeffs(FieldElem a) const {
  std::vector<int> out(t_->d);
  std::uint32_t x = a.v;
  for (int i = 0; i < t_->d; ++i) {
    out[i] = static_cast<int>(x % t_->p);
    x /= t_->p;
  }
  return out;
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (!t_->addt.empty()) return FieldElem{t_->addt[a.v * t_->q + b.v]};
  if (t_->d == 1) return FieldElem{(a.v + b.v) % t_->q};
  return FieldElem{t_->add_digits(a.v, b.v)};
}

FieldElem Field::neg(FieldElem a) const { return FieldElem{t_->negt[a.v]}; }
FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (a.v == 0 || b.v == 0) return FieldElem{0};
  return FieldElem{t_->exp[t_->log[a.v] + t_->log[b.v]]};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.v == 0) throw Error(ErrorKind::NotAUnit, "zero has no inverse");
  const std::uint32_t l = t_->log[a.v];
  return FieldElem{t_->exp[l == 0 ? 0 : (t_->q - 1) - l]};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(t_->log[a.v]) * (e % (t_->q - 1))) % (t_->q - 1);
  return FieldElem{t_->exp[l]};
}

FieldElem Field::frob(FieldElem a, int e) const {
  std::uint64_t pe = 1;
  e %= t_->d;
  if (e < 0) e += t_->d;
  for (int i = 0; i < e; ++i) pe *= t_->p;
  return pow(a, pe);
}

FieldElem Field::p_power_root(FieldElem a, int e) const {
  // inverse Frobenius is x -> x^(p^(d-1)), applied e times
  FieldElem r = a;
  for (int i = 0; i < e; ++i) r = frob(r, t_->d - 1);
  return r;
}

std::vector<FieldElem> Field::subfield_elements(int k) const {
  if (k < 1 || t_->d % k != 0)
    throw Error(ErrorKind::FieldTooSmall,
                "F_" + std::to_string(t_->p) + "^" + std::to_string(k) + " is not a subfield");
  std::vector<FieldElem> out;
  for (std::uint32_t v = 0; v < t_->q; ++v)
    if (frob(FieldElem{v}, k) == FieldElem{v}) out.push_back(FieldElem{v});
  return out;
}

bool operator==(const Field& a, const Field& b) {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->d == b.t_->d && a.t_->modulus == b.t_->modulus);
}

}  // namespace wildram
