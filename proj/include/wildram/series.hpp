#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wildram/artin.hpp"

namespace wildram {

/// Truncated Laurent series sum_{e >= lead} c_e t^e + O(t^prec) over an
/// Artin algebra (a field when order() == 1).
///
/// Storage is dense from lead to prec-1. Leading zero coefficients are
/// stripped, so lead() is the raw valuation; a series that vanishes to its
/// precision has lead() == prec() and no coefficients.
class LaurentSeries {
 public:
  LaurentSeries(ArtinAlgebra ring, int lead, std::vector<ArtinElem> coeffs, int prec);

  static LaurentSeries zero(const ArtinAlgebra& ring, int prec);
  static LaurentSeries monomial(const ArtinAlgebra& ring, const ArtinElem& c, int e, int prec);
  /// t + O(t^prec)
  static LaurentSeries t(const ArtinAlgebra& ring, int prec);
  static LaurentSeries one(const ArtinAlgebra& ring, int prec);
  /// Field coefficients from exponent lead upward, embedded into ring.
  static LaurentSeries from_field(const ArtinAlgebra& ring, int lead, const std::vector<FieldElem>& coeffs,
                                  int prec);

  const ArtinAlgebra& ring() const { return ring_; }
  int lead() const { return lead_; }
  int prec() const { return prec_; }
  const std::vector<ArtinElem>& coeffs() const { return c_; }
  /// Coefficient of t^e; zero below lead. Throws InvalidArgument at or above prec.
  ArtinElem coeff(int e) const;
  bool is_zero() const { return c_.empty(); }

  /// Raw valuation. Throws ValuationOfZero.
  int valuation() const;
  /// Valuation of the reduction mod eps. Throws ValuationOfZero.
  int reduced_valuation() const;

  /// Drop terms of exponent >= p (no-op when p >= prec).
  LaurentSeries truncate(int p) const;
  /// Declares the series exact and pads with zeros up to p. Only meaningful
  /// for series known to be polynomial in t, t^{-1}.
  LaurentSeries extend_exact(int p) const;
  /// t^k * this.
  LaurentSeries shift(int k) const;

  /// Component of eps^j as a series over the residue field.
  LaurentSeries component(int j) const;
  /// Reduction mod eps.
  LaurentSeries reduce() const { return component(0); }
  /// Same coefficients viewed in another Artin algebra over the same field
  /// (zero padding or projection).
  LaurentSeries change_ring(const ArtinAlgebra& target) const;

  std::string to_string() const;

 private:
  void normalize();
  ArtinAlgebra ring_;
  int lead_;
  int prec_;
  std::vector<ArtinElem> c_;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries neg(const LaurentSeries& a);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const ArtinElem& s, const LaurentSeries& a);
LaurentSeries derivative(const LaurentSeries& a);
/// a^e for e >= 0 by repeated squaring.
LaurentSeries power(const LaurentSeries& a, unsigned e);

/// Inverse of a series whose reduction mod eps is nonzero. The reduction is
/// inverted over the field and the nilpotent part by a geometric sum.
LaurentSeries invert(const LaurentSeries& a);
/// outer(inner(t)). inner must have reduced valuation >= 1.
LaurentSeries compose(const LaurentSeries& outer, const LaurentSeries& inner);
/// Compositional inverse of c t + ... with c a unit, by Newton iteration.
LaurentSeries revert(const LaurentSeries& a);
/// The root r = 1 + ... of r^m = a, by Newton iteration on X^m - a.
LaurentSeries mth_root_unit(const LaurentSeries& a, int m);
/// Coefficient-wise a^(p^e): exponents scale by p^e.
LaurentSeries frobenius(const LaurentSeries& a, int e);
/// Strictly negative part, with precision min(prec, 0).
LaurentSeries pole_part(const LaurentSeries& a);
/// True when a and b agree up to the smaller of their precisions.
bool agree(const LaurentSeries& a, const LaurentSeries& b);

/// t^m + a_{m-1} t^{m-1} + ... + a_0 with every a_i in the maximal ideal.
struct DistinguishedPolynomial {
  ArtinAlgebra ring;
  int m = 0;
  std::vector<ArtinElem> a;  // a[0..m-1]
  LaurentSeries to_series(int prec) const;
};

struct WeierstrassResult {
  DistinguishedPolynomial g;
  LaurentSeries u;
};

/// f = g * u with g distinguished of degree equal to the reduced valuation.
WeierstrassResult weierstrass_prepare(const LaurentSeries& f);

}  // namespace wildram
