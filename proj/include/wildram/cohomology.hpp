#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wildram/autoreps.hpp"
#include "wildram/linalg.hpp"

namespace wildram {

/// Element of t^{-(m+1)} k[[t]] / k[[t]]: coeffs[i-1] is the coefficient of t^{-i}.
struct PolePartClass {
  int m = 0;
  std::vector<FieldElem> coeffs;

  static PolePartClass zero(int m) { return {m, std::vector<FieldElem>(static_cast<std::size_t>(m) + 1)}; }
  /// Pole part of a series over the residue field. Throws PoleOrderExceeded
  /// when a term below t^{-(m+1)} is present.
  static PolePartClass from_series(const LaurentSeries& a, int m);
  LaurentSeries to_series(const Field& k) const;
  bool is_zero() const;
  friend bool operator==(const PolePartClass&, const PolePartClass&) = default;
};

/// Values of a 1-cochain on the generators sigma_1..sigma_s, as elements of
/// t^{-(m+1)} k[[t]] (truncated series over the residue field).
struct OneCochain {
  std::vector<LaurentSeries> vals;
};

/// sigma_g acting on a pole part: rho^{m+1} h(rho) / (t^{m+1} rho'), pole part.
PolePartClass module_action(const Character& ch, const GroupElem& g, const PolePartClass& x, int prec);
/// sigma_g acting on t^{-(m+1)} k[[t]]: h -> h(rho_g).
LaurentSeries act(const Character& ch, const GroupElem& g, const LaurentSeries& h);

/// Linear algebra for H^1(V, t^{-(m+1)} k[[t]]) on generators.
///
/// Cocycles are solved mod t^{N+lift} (norms mod t^{N+lift+(p-1)m},
/// commutators mod t^{N+lift+m}) and projected to t^N. Coordinates are
/// ordered by exponent, then generator.
class H1Engine {
 public:
  /// Cocycles are the truncations to t^N of cocycles computed to t^{N+lift}.
  /// A negative lift selects p^2 (m+1) for s >= 2 and 0 for s = 1.
  explicit H1Engine(const Character& ch, int N = 0, int lift = -1);

  const Character& character() const { return ch_; }
  int N() const { return N_; }
  int lift() const { return lift_; }
  int lowest() const { return -(ch_.m() + 1); }
  std::size_t dim_cocycles() const { return z_.pivots.size(); }
  std::size_t dim_coboundaries() const { return b_.pivots.size(); }
  std::size_t dim() const { return dim_cocycles() - dim_coboundaries(); }
  /// B^1 inside Z^1 (sanity of the truncation).
  bool coboundaries_are_cocycles() const;

  /// Canonical class representatives: rows of the reduced echelon form of
  /// Z^1 whose leading position is not a leading position of B^1, cleared
  /// against B^1.
  std::vector<OneCochain> basis() const;
  /// Leading coordinate (exponent, generator) of each basis element.
  std::vector<std::pair<int, int>> leading_positions() const;

  std::vector<FieldElem> coords(const OneCochain& x) const;
  OneCochain from_coords(const std::vector<FieldElem>& v) const;
  bool is_cocycle(const OneCochain& x) const;
  bool is_coboundary(const OneCochain& x) const;
  bool same_class(const OneCochain& a, const OneCochain& b) const;
  /// Rank of the classes of xs in Z^1/B^1.
  std::size_t class_rank(const std::vector<OneCochain>& xs) const;
  /// Cocycle space and coboundary space as echelon forms.
  const Echelon& cocycles() const { return z_; }
  const Echelon& coboundaries() const { return b_; }
  /// Coboundary ((sigma_i - 1) y)_i of y in t^{-(m+1)} k[[t]].
  OneCochain coboundary_of(const LaurentSeries& y) const;

 private:
  Character ch_;
  int N_, lift_;
  std::size_t n_;
  std::vector<Matrix> S_;  // action of sigma_i, mod t^{N+lift+(p-1)m}
  Echelon z_, b_;
};

struct H1Result {
  std::size_t dim = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::vector<OneCochain> basis;
};

H1Result h1_brute_force(const Character& ch, int N = 0);

struct H1Formula {
  int h1 = 0;
  std::vector<int> a;  // a_1..a_s
};
H1Formula h1_closed_formula(int p, int s, int m);

/// Exponents b <= i <= m+1 with binom(i/m, p-1) = 0 in F_p.
std::vector<int> admissible_exponents(int p, int m);

struct CyclicBasisEntry {
  int i = 0;
  OneCochain cochain;
};
struct CyclicBasis {
  std::vector<CyclicBasisEntry> entries;
  /// Leading exponents -i of the brute-force classes equal the admissible set.
  bool exponents_match = false;
  /// Rank of the entries inside Z^1/B^1.
  std::size_t span_rank = 0;
  std::size_t h1_dim = 0;
};
/// s = 1 with character value 1.
CyclicBasis h1_basis_cyclic(int p, int m, const Field& k);

struct SplitCondition {
  bool holds = false;
  std::vector<int> digits;  // base-p digits of m, least significant first
};
SplitCondition split_condition(int p, int s, int m);

struct SplitCheck {
  std::size_t h1_total = 0;
  std::vector<std::size_t> h1_factors;
  std::size_t factor_sum = 0;
  bool restriction_injective = false;
};
/// Compares H^1(V) with the H^1 of the cyclic subgroups <sigma_nu>.
SplitCheck split_check(const Character& ch, int N = 0);

struct KrullSigma {
  std::vector<int> sigma;
  int dim = 0;
};
KrullSigma krull_dimension_sigma(int p, int m);

/// Table over V x V (elements in group_elements order) with values in the
/// pole-part module.
struct TwoCochain {
  int p = 0, s = 0, m = 0;
  std::vector<PolePartClass> table;
  PolePartClass& at(std::size_t g, std::size_t h) { return table[g * order() + h]; }
  const PolePartClass& at(std::size_t g, std::size_t h) const { return table[g * order() + h]; }
  std::size_t order() const;
  bool is_zero() const;
  static TwoCochain zero(int p, int s, int m);
};

std::size_t group_index(int p, const GroupElem& g);

/// H^2(V, t^{-(m+1)} k[[t]] / k[[t]]) together with a coboundary tester.
class H2Engine {
 public:
  /// Throws TooLarge when p^s > 27.
  explicit H2Engine(const Character& ch);

  /// Dimension from the tensor product of the periodic resolutions.
  std::size_t dim() const { return dim_; }
  /// Dimension from the inhomogeneous (bar) complex; dense, small cases only.
  std::size_t dim_bar() const;

  const Matrix& action(std::size_t g) const { return act_[g]; }
  bool is_cocycle(const TwoCochain& a) const;
  bool is_coboundary(const TwoCochain& a) const;
  /// (delta beta)(g, h) = g beta(h) - beta(gh) + beta(g), beta indexed by element.
  TwoCochain coboundary(const std::vector<PolePartClass>& beta) const;

 private:
  std::vector<FieldElem> apply(std::size_t g, const std::vector<FieldElem>& x) const;
  Character ch_;
  std::vector<GroupElem> elems_;
  std::vector<Matrix> act_;
  std::size_t dim_ = 0;
};

}  // namespace wildram
