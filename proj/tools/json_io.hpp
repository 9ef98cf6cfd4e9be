#ifndef ODDLEN_JSON_IO_HPP
#define ODDLEN_JSON_IO_HPP

#include "oddlen/genfun.hpp"
#include "oddlen/verify.hpp"
#include "oddlen/zpoly.hpp"

#include <json.hpp>

namespace oddlen {

template <class Json>
void to_json(Json& j, const IntPoly& p) {
  j = Json{{"coeffs", std::vector<IntPoly::Coeff>(p.coeffs().begin(), p.coeffs().end())}};
}

template <class Json>
void from_json(const Json& j, IntPoly& p) {
  p = IntPoly(j.at("coeffs").template get<std::vector<IntPoly::Coeff>>());
}

inline nlohmann::ordered_json factorization_to_json(const CyclotomicFactorization& f) {
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (auto [k, mult] : f.factors) factors.push_back({{"k", k}, {"multiplicity", mult}});
  return {{"sign", f.sign}, {"factors", factors}};
}

inline nlohmann::ordered_json report_to_json(const GenFunReport& r) {
  nlohmann::ordered_json j{{"family", to_string(r.family)}, {"n", r.n}, {"set", r.set.members()},
                   {"method", to_string(r.method)}};
  if (r.closed) j["closed"] = *r.closed;
  if (r.brute) j["brute"] = *r.brute;
  if (r.equal) j["equal"] = *r.equal;
  j["cyclotomicProduct"] = r.cyclotomic_product;
  if (r.factorization) j["factorization"] = factorization_to_json(*r.factorization);
  if (r.M) j["M"] = *r.M;
  return j;
}

// The inputs of a report: enough to recompute it.
struct ReportKey {
  Family family;
  int n;
  IndexSet set;
  Method method;
};

inline ReportKey report_key_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  return {parse_family(j.at("family").get<std::string>()), n, IndexSet::of(n, j.at("set").get<std::vector<int>>()),
          parse_method(j.at("method").get<std::string>())};
}

inline nlohmann::ordered_json record_to_json(const CheckRecord& r) {
  nlohmann::ordered_json j{{"check", r.check}};
  j["family"] = r.family ? nlohmann::ordered_json(to_string(*r.family)) : nlohmann::ordered_json(nullptr);
  j["n"] = r.n;
  j["set"] = r.set ? nlohmann::ordered_json(r.set->members()) : nlohmann::ordered_json(nullptr);
  j["status"] = r.ok ? "pass" : "fail";
  j["detail"] = r.detail;
  return j;
}

} // namespace oddlen

#endif // ODDLEN_JSON_IO_HPP
