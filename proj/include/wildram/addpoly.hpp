#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wildram/autoreps.hpp"

namespace wildram {

/// Sum_nu c_nu Y^{p^nu}, stored sparsely by Frobenius index nu.
struct PPolynomial {
  ArtinAlgebra ring;
  std::map<int, ArtinElem> c;

  explicit PPolynomial(ArtinAlgebra A) : ring(std::move(A)) {}
  /// Y^{p^nu} scaled by a.
  static PPolynomial term(const ArtinAlgebra& A, int nu, const ArtinElem& a);

  /// Highest nu with a nonzero coefficient, -1 for the zero polynomial.
  int degree_index() const;
  ArtinElem coeff(int nu) const;
  void set(int nu, const ArtinElem& a);
  bool is_zero() const { return c.empty(); }
  std::string to_string() const;

  friend bool operator==(const PPolynomial& a, const PPolynomial& b) { return a.c == b.c && a.ring == b.ring; }
};

PPolynomial ppoly_add(const PPolynomial& a, const PPolynomial& b);
PPolynomial ppoly_sub(const PPolynomial& a, const PPolynomial& b);
PPolynomial ppoly_scale(const ArtinElem& s, const PPolynomial& a);

ArtinElem ppoly_apply(const PPolynomial& P, const ArtinElem& x);
FieldElem ppoly_apply(const PPolynomial& P, FieldElem x);
/// Frobenius powers of the argument are taken coefficient-wise.
LaurentSeries ppoly_apply(const PPolynomial& P, const LaurentSeries& x);
/// P(Q(Y)).
PPolynomial ppoly_apply(const PPolynomial& P, const PPolynomial& Q);

struct PPolyDivision {
  PPolynomial quotient;
  PPolynomial remainder;
};
/// u = quotient(divisor(Y)) + remainder with remainder of lower degree.
/// The leading coefficient of the divisor must be a unit.
PPolyDivision ppoly_right_divide(const PPolynomial& u, const PPolynomial& divisor);

/// The operator x -> x^{p^s} - x as a p-polynomial.
PPolynomial artin_schreier_operator(const ArtinAlgebra& A, int s);

/// Determinant by Laplace expansion along the first row; for small matrices.
ArtinElem laplace_det(const ArtinAlgebra& A, const std::vector<std::vector<ArtinElem>>& m);

/// det(x_j^{p^i}), i, j = 0..n-1.
ArtinElem moore_det(const ArtinAlgebra& A, const std::vector<ArtinElem>& xs);
FieldElem moore_det(const Field& k, const std::vector<FieldElem>& xs);

/// Delta(x_1..x_n, Y) / Delta(x_1..x_n) by Laplace expansion along the Y
/// column. Its roots are the F_p-span of the x_j when they are independent.
PPolynomial moore_ppoly(const ArtinAlgebra& A, const std::vector<ArtinElem>& xs);

/// Phi (omit empty) or ad_i (omit = i, 1-based) for the character values.
PPolynomial additive_poly_from_character(const Character& ch, std::optional<int> omit = std::nullopt);

/// Delta(c_1..^c_i..c_s, c_i) == (-1)^{s-i} Delta(c_1..c_s), i 1-based.
bool moore_swap_identity_check(const Character& ch, int i);

}  // namespace wildram
