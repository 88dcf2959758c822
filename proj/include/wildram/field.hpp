#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "wildram/error.hpp"

namespace wildram {

/// Element of F_{p^d}, encoded as the integer sum c_i p^i of its
/// coefficients in the polynomial basis 1, x, ..., x^{d-1}.
struct FieldElem {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

namespace detail {
struct FieldTables;
}

/// Descriptor of F_q = F_p[x]/(modulus). Cheap to copy; all tables are shared.
///
/// Multiplication goes through discrete log / exp tables, addition through a
/// q x q table when q is small and digit-wise otherwise.
class Field {
 public:
  /// Validates p and the modulus. When the modulus is omitted the smallest
  /// monic irreducible of degree d is used, comparing coefficient sequences
  /// lexicographically from the constant term up.
  static Field make(int p, int d, std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const;
  int d() const;
  std::uint32_t order() const;
  /// Little-endian, monic, length d+1.
  const std::vector<int>& modulus() const;

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  /// The class of x, i.e. [0,1]. For d = 1 this is the residue of -modulus[0].
  FieldElem gen() const;
  FieldElem from_int(long long n) const;
  FieldElem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(FieldElem a) const;
  bool is_prime_field_elem(FieldElem a) const { return a.v < static_cast<std::uint32_t>(p()); }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // throws NotAUnit on zero
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  /// a^(p^e).
  FieldElem frob(FieldElem a, int e = 1) const;
  /// The unique r with r^(p^e) = a.
  FieldElem p_power_root(FieldElem a, int e) const;

  /// Elements of the subfield F_{p^k} (requires k | d), in index order.
  std::vector<FieldElem> subfield_elements(int k) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

bool is_prime(long long n);
/// Exhaustive irreducibility test over F_p (trial division by all monic
/// polynomials of degree <= deg/2).
bool is_irreducible(int p, const std::vector<int>& poly);

}  // namespace wildram
