#include "wildram/codec.hpp"

namespace wildram::codec {

void invalid(const std::string& ptr, const std::string& what) {
  throw Error(ErrorKind::ConfigInvalid, (ptr.empty() ? "/" : ptr) + ": " + what);
}

Json encode(const Field& k, FieldElem a) { return k.coeffs(a); }

Json encode(const ArtinAlgebra& A, const ArtinElem& a) {
  Json out = Json::array();
  for (int j = 0; j < A.order(); ++j) out.push_back(encode(A.field(), a.c[static_cast<std::size_t>(j)]));
  return out;
}

Json encode(const LaurentSeries& a) {
  const auto& A = a.ring();
  Json c = Json::array();
  for (const auto& x : a.coeffs()) c.push_back(A.order() == 1 ? encode(A.field(), x.c[0]) : encode(A, x));
  return {{"lead", a.lead()}, {"prec", a.prec()}, {"coeffs", c}};
}

Json encode(const PPolynomial& P) {
  Json out = Json::array();
  for (const auto& [nu, a] : P.c)
    out.push_back(Json::array({nu, P.ring.order() == 1 ? encode(P.ring.field(), a.c[0]) : encode(P.ring, a)}));
  return out;
}

Json encode(const GroupElem& g) { return g.exps; }

Json encode(const Field& k, const PolePartClass& x) {
  Json out = Json::array();
  for (auto c : x.coeffs) out.push_back(encode(k, c));
  return out;
}

Json encode(const TwoCochain& x, const Field& k) {
  Json out = Json::array();
  for (const auto& v : x.table) out.push_back(encode(k, v));
  return out;
}

Json encode(const DeformationDatum& d) {
  const Field& k = d.ch.field();
  auto list = [&](const std::vector<FieldElem>& v) {
    Json out = Json::array();
    for (auto a : v) out.push_back(encode(k, a));
    return out;
  };
  return {{"lambda1", list(d.lambda1)}, {"delta", list(d.delta)}, {"a1", list(d.a1)}};
}

FieldElem decode_field_elem(const Field& k, const Json& j, const std::string& ptr) {
  if (!j.is_array()) invalid(ptr, "field element must be a coefficient list");
  if (static_cast<int>(j.size()) > k.d()) invalid(ptr, "more than " + std::to_string(k.d()) + " coefficients");
  std::vector<int> c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) invalid(ptr + "/" + std::to_string(i), "coefficient must be an integer");
    const auto v = j[i].get<long long>();
    if (v < 0 || v >= k.p()) invalid(ptr + "/" + std::to_string(i), "coefficient outside 0.." + std::to_string(k.p() - 1));
    c.push_back(static_cast<int>(v));
  }
  return k.from_coeffs(c);
}

ArtinElem decode_artin_elem(const ArtinAlgebra& A, const Json& j, const std::string& ptr) {
  if (!j.is_array()) invalid(ptr, "Artin element must be a list of field elements");
  if (static_cast<int>(j.size()) > A.order()) invalid(ptr, "more components than the algebra has");
  ArtinElem out{};
  for (std::size_t i = 0; i < j.size(); ++i) out.c[i] = decode_field_elem(A.field(), j[i], ptr + "/" + std::to_string(i));
  return out;
}

LaurentSeries decode_series(const ArtinAlgebra& A, const Json& j, const std::string& ptr) {
  if (!j.is_object()) invalid(ptr, "series must be an object");
  const int lead = get_int(j, "lead", ptr, -100000, 100000);
  const int prec = get_int(j, "prec", ptr, -100000, 100000);
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) invalid(ptr + "/coeffs", "missing coefficient list");
  if (prec < lead + static_cast<int>(j["coeffs"].size())) invalid(ptr + "/prec", "precision below the last coefficient");
  std::vector<ArtinElem> c;
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    const std::string p = ptr + "/coeffs/" + std::to_string(i);
    c.push_back(A.order() == 1 ? A.embed(decode_field_elem(A.field(), j["coeffs"][i], p))
                               : decode_artin_elem(A, j["coeffs"][i], p));
  }
  return LaurentSeries(A, lead, c, prec);
}

DeformationDatum decode_datum(const Character& ch, const Json& j, const std::string& ptr) {
  if (!j.is_object()) invalid(ptr, "datum must be an object");
  auto list = [&](const char* key, int n) {
    const std::string p = ptr + "/" + key;
    if (!j.contains(key)) {
      return std::vector<FieldElem>(static_cast<std::size_t>(n), ch.field().zero());
    }
    const auto& v = j[key];
    if (!v.is_array() || static_cast<int>(v.size()) != n) invalid(p, "expected " + std::to_string(n) + " entries");
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(decode_field_elem(ch.field(), v[i], p + "/" + std::to_string(i)));
    return out;
  };
  return {ch, list("lambda1", ch.s()), list("delta", ch.s()), list("a1", ch.m())};
}

int get_int(const Json& obj, const std::string& key, const std::string& ptr, int lo, int hi, std::optional<int> fallback) {
  const std::string p = ptr + "/" + key;
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    invalid(p, "missing");
  }
  const auto& v = obj[key];
  if (!v.is_number_integer()) invalid(p, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > hi) invalid(p, "expected a value in " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(x);
}

}  // namespace wildram::codec
