#pragma once

#include <array>
#include <compare>
#include <string>

#include "wildram/field.hpp"

namespace wildram {

/// a_0 + a_1 eps + ... + a_{n-1} eps^{n-1}; unused slots stay zero.
struct ArtinElem {
  std::array<FieldElem, 4> c{};
  friend constexpr auto operator<=>(const ArtinElem&, const ArtinElem&) = default;
};

/// k[eps]/(eps^n) for 1 <= n <= 4. n = 1 is the residue field itself.
class ArtinAlgebra {
 public:
  static constexpr int kMaxOrder = 4;

  static ArtinAlgebra make(const Field& k, int n);

  const Field& field() const { return k_; }
  int order() const { return n_; }
  int p() const { return k_.p(); }

  ArtinElem zero() const { return {}; }
  ArtinElem one() const { return embed(k_.one()); }
  ArtinElem eps() const;
  ArtinElem embed(FieldElem a) const;
  ArtinElem from_int(long long n) const { return embed(k_.from_int(n)); }
  ArtinElem make_elem(std::initializer_list<FieldElem> comps) const;

  bool is_zero(const ArtinElem& a) const { return a == ArtinElem{}; }
  bool is_unit(const ArtinElem& a) const { return a.c[0].v != 0; }
  FieldElem reduce(const ArtinElem& a) const { return a.c[0]; }
  /// Smallest j with a_j != 0; order() for zero.
  int eps_valuation(const ArtinElem& a) const;

  ArtinElem add(const ArtinElem& a, const ArtinElem& b) const;
  ArtinElem sub(const ArtinElem& a, const ArtinElem& b) const;
  ArtinElem neg(const ArtinElem& a) const;
  ArtinElem mul(const ArtinElem& a, const ArtinElem& b) const;
  ArtinElem scale(FieldElem s, const ArtinElem& a) const;
  /// Throws NotAUnit when a_0 = 0.
  ArtinElem inv(const ArtinElem& a) const;
  ArtinElem pow(const ArtinElem& a, std::uint64_t e) const;
  /// Coefficient-wise Frobenius a_j -> a_j^(p^e), leaving eps fixed.
  ArtinElem frob(const ArtinElem& a, int e = 1) const;

  /// k[eps]/eps^{n-1} together with its projection.
  ArtinAlgebra small_extension() const;
  ArtinElem project(const ArtinElem& a, const ArtinAlgebra& target) const;
  /// Lift from a smaller algebra by zero padding.
  ArtinElem lift(const ArtinElem& a) const { return a; }

  std::string to_string(const ArtinElem& a) const;

  friend bool operator==(const ArtinAlgebra& a, const ArtinAlgebra& b) {
    return a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  ArtinAlgebra(Field k, int n) : k_(std::move(k)), n_(n) {}
  Field k_;
  int n_;
};

}  // namespace wildram
