#pragma once

#include <string>

#include "json.hpp"
#include "wildram/ascover.hpp"
#include "wildram/deform.hpp"

namespace wildram::codec {

using Json = nlohmann::json;

/// Little-endian coefficients, length d.
Json encode(const Field& k, FieldElem a);
/// Nested: one field element per power of eps.
Json encode(const ArtinAlgebra& A, const ArtinElem& a);
/// {lead, prec, coeffs}; coefficients as field elements over the residue
/// field and as Artin elements otherwise.
Json encode(const LaurentSeries& a);
/// [[nu, coeff], ...] sorted by nu.
Json encode(const PPolynomial& P);
Json encode(const GroupElem& g);
/// Coefficients of t^{-1}, ..., t^{-(m+1)}.
Json encode(const Field& k, const PolePartClass& x);
Json encode(const TwoCochain& x, const Field& k);
Json encode(const DeformationDatum& d);

/// Decoders throw ConfigInvalid naming the JSON pointer of the bad value.
FieldElem decode_field_elem(const Field& k, const Json& j, const std::string& ptr);
ArtinElem decode_artin_elem(const ArtinAlgebra& A, const Json& j, const std::string& ptr);
LaurentSeries decode_series(const ArtinAlgebra& A, const Json& j, const std::string& ptr);
DeformationDatum decode_datum(const Character& ch, const Json& j, const std::string& ptr);

/// Integer member with bounds; missing members use fallback when given.
int get_int(const Json& obj, const std::string& key, const std::string& ptr, int lo, int hi,
            std::optional<int> fallback = std::nullopt);

[[noreturn]] void invalid(const std::string& ptr, const std::string& what);

}  // namespace wildram::codec
