#pragma once

#include <string>
#include <vector>

#include "wildram/series.hpp"

namespace wildram {

/// Element of V = (Z/p)^s as an exponent vector on the generators.
struct GroupElem {
  std::vector<int> exps;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;

  static GroupElem identity(int s) { return {std::vector<int>(static_cast<std::size_t>(s), 0)}; }
  static GroupElem generator(int s, int i);
  bool is_identity() const;
  std::string to_string() const;
};

GroupElem group_mul(int p, const GroupElem& a, const GroupElem& b);
GroupElem group_inv(int p, const GroupElem& a);
/// All p^s elements in lexicographic order of the exponent vector (first
/// generator slowest).
std::vector<GroupElem> group_elements(int p, int s);

/// Additive character c : V -> k given on generators, with conductor m.
class Character {
 public:
  /// Throws InvalidCharacter when the values are F_p-dependent, gcd(m, p) != 1,
  /// or s >= 2 with m == 1.
  static Character make(const Field& k, std::vector<FieldElem> vals, int m);

  const Field& field() const { return k_; }
  int p() const { return k_.p(); }
  int s() const { return static_cast<int>(vals_.size()); }
  int m() const { return m_; }
  const std::vector<FieldElem>& vals() const { return vals_; }
  /// Working precision 4(m+1)p.
  int default_prec() const { return 4 * (m_ + 1) * p(); }

 private:
  Character(Field k, std::vector<FieldElem> vals, int m) : k_(std::move(k)), vals_(std::move(vals)), m_(m) {}
  Field k_;
  std::vector<FieldElem> vals_;
  int m_;
};

FieldElem character_value(const Character& ch, const GroupElem& g);

/// t (1 + c t^m)^{-1/m} over any Artin algebra, via the m-th root.
LaurentSeries rho_series(const ArtinAlgebra& A, const ArtinElem& c, int m, int prec);
/// The same series obtained by Newton iteration on Y^m (1 + c t^m) = 1, Y = T/t.
LaurentSeries rho_series_newton(const ArtinAlgebra& A, const ArtinElem& c, int m, int prec);

/// rho_g(t) over the residue field, with 1/rho^m = 1/t^m + c(g).
LaurentSeries build_rho(const Character& ch, const GroupElem& g, int prec);

struct GroupLawReport {
  bool ok = true;
  int pairs_checked = 0;
  std::string first_discrepancy;
};

/// rho_s o rho_t = rho_{st} for all pairs (exhaustive when p^s <= 25, else all
/// generator pairs plus a seeded random sample), together with the defining
/// equation, the Newton cross-check and the order-p property of generators.
GroupLawReport verify_group_law(const Character& ch, int prec);

struct RamificationData {
  std::vector<std::pair<GroupElem, int>> i_sigma;  // nontrivial elements
  int ar_identity = 0;
  int sum_i = 0;
  bool uniform_break = true;  // every i(sigma) == m+1
  bool single_jump = true;
};

RamificationData ramification_data(const Character& ch, int prec);

}  // namespace wildram
