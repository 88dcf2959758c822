#pragma once

#include <optional>
#include <vector>

#include "wildram/addpoly.hpp"

namespace wildram {

/// u1 = sum o_nu f^{p^{nu-1}} and u = u1^{p^s} - u1 as p-polynomials in f.
struct UData {
  PPolynomial u1;
  PPolynomial u;
  std::vector<FieldElem> o;
  /// a_{nu+s} = -a_nu^{p^s} for the coefficients of u.
  bool coefficient_relation = false;
  /// u1 = (-1)^{s+1} sum mu_i y_i.
  bool matches_generators = false;
};

/// Power basis 1, theta, ..., theta^{s-1} of F_{p^s} inside k. Throws
/// FieldTooSmall when s does not divide the degree of k.
std::vector<FieldElem> default_mu(const Field& k, int s);

/// Throws DependentMu when mu is not an F_p-basis of F_{p^s}.
UData build_u(const Character& ch, const std::optional<std::vector<FieldElem>>& mu = std::nullopt);

struct NormalizedGenerator {
  PPolynomial y;
  /// shift[j]: y(f + c(sigma_j)) - y(f) equals the Kronecker delta.
  std::vector<bool> shift;
  bool vanishes_at_zero = false;
};
/// y_i = ad_i(f) / ad_i(c(sigma_i)).
std::vector<NormalizedGenerator> normalized_generators(const Character& ch);

/// Germ of y^{p^s} - y = u at the ramified point.
///
/// upstairs is u(t^{-m}) in the parameter t of the cover. Writing
/// u = P(Phi(f)) and choosing the parameter x below with Phi(f) = x^{-m},
/// downstairs is P(x^{-m}).
struct ASCover {
  int s = 0;
  int m = 0;
  PPolynomial u;
  PPolynomial downstairs_poly;
  LaurentSeries upstairs;
  LaurentSeries downstairs;
};
ASCover germ_model(const Character& ch, const std::optional<std::vector<FieldElem>>& mu = std::nullopt);

/// Canonical representative modulo k[[t]] + D(k((t))), D(x) = x^{p^s} - x.
struct CoverClass {
  int s = 0;
  /// Pole part only; no exponent divisible by p^s.
  LaurentSeries rep;
  /// g - rep - holomorphic = D(witness).
  LaurentSeries witness;
  LaurentSeries holomorphic;
  /// Smallest zeta * rep over zeta in F_{p^s}^* (coefficients compared from the top pole).
  LaurentSeries orbit_marker;
  FieldElem orbit_zeta;
};

/// g is a series over the residue field.
CoverClass class_reduce(const LaurentSeries& g, int s);
/// Recomputes D(witness) exactly and compares it with the pole part of g - rep.
bool witness_ok(const LaurentSeries& g, const CoverClass& cls);

struct Conductor {
  int value = 0;
  bool unramified = false;
};
/// max d over pole exponents n = d p^nu with p not dividing d; 0 for the zero class.
Conductor conductor(const CoverClass& cls);

struct Equivalence {
  bool equivalent = false;
  std::optional<FieldElem> zeta;
};
Equivalence equivalent_covers(const LaurentSeries& g1, const LaurentSeries& g2, int s);

struct DeformedU {
  LaurentSeries U;
  LaurentSeries u;
  bool splits_branch = false;
};
/// Cvals reduce to the character values; ftilde is t^{-m} times a unit over A.
/// Throws ReductionMismatch.
DeformedU deformed_u(const Character& ch, const std::optional<std::vector<FieldElem>>& mu,
                     const std::vector<ArtinElem>& Cvals, const LaurentSeries& ftilde);

/// Bordered Moore determinant with first row mu and last column Y, Y^p, ...,
/// divided by Delta(xs), as a p-polynomial in Y.
PPolynomial bordered_moore_ppoly(const ArtinAlgebra& A, const std::vector<ArtinElem>& xs,
                                 const std::vector<ArtinElem>& mu);

/// (t - r)^m == g for some r in the maximal ideal.
bool is_pure_power(const DistinguishedPolynomial& g);

}  // namespace wildram
