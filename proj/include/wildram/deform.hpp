#pragma once

#include <random>
#include <utility>
#include <string>
#include <vector>

#include "wildram/cohomology.hpp"

namespace wildram {

/// Lower triangular matrices [[1, 0], [C(g), lam(g)]] acting on the basis
/// 1, f. Entries are indexed like group_elements.
struct MatrixRep {
  ArtinAlgebra A;
  Character ch;
  std::vector<ArtinElem> C;
  std::vector<ArtinElem> lam;

  /// Extends generator values by C(gh) = C(g) + lam(g) C(h), lam(gh) = lam(g) lam(h)
  /// along the word sigma_1^{e_1} ... sigma_s^{e_s}.
  static MatrixRep from_generators(const ArtinAlgebra& A, const Character& ch, const std::vector<ArtinElem>& Cgen,
                                   const std::vector<ArtinElem>& lamgen);
  /// C = c, lam = 1.
  static MatrixRep trivial(const ArtinAlgebra& A, const Character& ch);

  const ArtinElem& C_of(const GroupElem& g) const;
  const ArtinElem& lam_of(const GroupElem& g) const;
};

struct RepReport {
  bool ok = false;
  bool reduction = false;
  bool homomorphism = false;
  bool order_p = false;
  bool commuting = false;
  std::vector<std::string> failures;
};
RepReport rep_validate(const MatrixRep& rep);

/// Conjugation by [[1, 0], [mu, lam0]]: C'(g) = mu + lam0 C(g) - lam(g) mu.
MatrixRep conjugate_rep(const MatrixRep& rep, const ArtinElem& mu, const ArtinElem& lam0);

/// T = rho_g mod m_A with f(T) = lam(g) f + C(g), by lifting one power of
/// eps at a time. Throws NoSolution or ReductionMismatch.
LaurentSeries deformed_rho(const MatrixRep& rep, const LaurentSeries& ftilde, const GroupElem& g, int prec);

/// First-order datum: lam = 1 + eps lambda1, C = c + eps delta on generators,
/// and 1/f = t^m + eps sum a1[mu] t^mu.
struct DeformationDatum {
  Character ch;
  std::vector<FieldElem> lambda1;
  std::vector<FieldElem> delta;
  std::vector<FieldElem> a1;

  MatrixRep rep() const;
  LaurentSeries ftilde(int prec) const;
};

/// Valid data: lambda1 = lambda * c (and lambda = 0 for p = 2), arbitrary delta and a1.
DeformationDatum random_datum(const Character& ch, std::mt19937_64& rng);

struct TangentCocycle {
  /// h_g / t^{m+1} where rho~_g o rho_g^{-1}(t) = t + eps h_g(t).
  OneCochain cochain;
  std::vector<PolePartClass> poles;
};
/// Over k[eps]/eps^2. Throws PoleOrderExceeded if a pole beyond m+1 appears.
TangentCocycle tangent_cocycle_extract(const MatrixRep& rep, const LaurentSeries& ftilde, int prec);

/// (1/m)(lambda1/t^m + lambda1 c - delta + sum (2m-mu)/m a_{mu,1} c / t^{m-mu}), pole part.
PolePartClass cocycle_formula(const DeformationDatum& d, const GroupElem& g);

/// Compatible matrix data over k[eps]/eps^n built from d: d itself for n = 2,
/// otherwise lam = 1, C = c + sum_j eps^j delta and
/// f = t^{-m} o (t + eps sum a1[mu] t^{mu+2}).
std::pair<MatrixRep, LaurentSeries> lift_data(const DeformationDatum& d, int n, int prec);

struct Obstruction {
  TwoCochain cochain;
  bool is_cocycle = false;
  bool vanishes_in_h2 = false;
};
/// lifts[g] (all group elements) lift rho~_g from A'/ker to A'; ker is eps^{n-1}.
/// Values are pole parts of h/t^{m+1} with rho~_g rho~_h rho~_{gh}^{-1}(t) = t + eps^{n-1} h.
Obstruction obstruction_two_cocycle(const MatrixRep& repA, const LaurentSeries& ftilde,
                                    const std::vector<LaurentSeries>& lifts, int prec);

struct LiftingPredicates {
  bool char0_lift_necessary_condition = false;
  bool invariant_divisor_exists = false;
  bool invariant_divisor_excluded_mixed = false;
  bool stichtenoth_two_dim = false;
  bool two_dim_wellformed = false;
};
LiftingPredicates lifting_predicates(int p, int s, int m);

}  // namespace wildram
