#include "nichols/report_json.hpp"

#include <json.hpp>

namespace nichols {

namespace {

nlohmann::json scalar_json(const ExactScalar& x) {
  nlohmann::json j;
  if (x.context()->is_cyclotomic()) {
    j["kind"] = "cyclotomic";
    j["order"] = x.context()->order_n();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rat& c : x.cyclotomic_coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
  } else {
    j["kind"] = "rational_function";
    nlohmann::json num = nlohmann::json::array(), den = nlohmann::json::array();
    for (const Int& c : x.numerator().coeffs()) num.push_back(c.get_str());
    for (const Int& c : x.denominator().coeffs()) den.push_back(c.get_str());
    j["num"] = num;
    j["den"] = den;
  }
  return j;
}

nlohmann::json degree_json(const DegreeVector& m) { return nlohmann::json(m.entries()); }

}  // namespace

std::string to_json_string(const ExactScalar& x) { return scalar_json(x).dump(); }

std::string to_json_string(const FreenessReport& report) {
  nlohmann::json j;
  j["degree_bound"] = report.degree_bound;
  j["verdict"] = report.free_up_to_bound ? "free-up-to-D" : "not-free";
  nlohmann::json witnesses = nlohmann::json::array();
  for (const DegreeVector& m : report.witnesses) witnesses.push_back(degree_json(m));
  j["witnesses"] = witnesses;
  nlohmann::json values = nlohmann::json::array();
  for (const auto& [m, value] : report.values)
    values.push_back({{"m", degree_json(m)}, {"P", scalar_json(value)}});
  j["values"] = values;
  return j.dump();
}

std::string to_json_string(const KernelReport& report) {
  nlohmann::json j;
  j["m"] = degree_json(report.m);
  j["d"] = report.numbers.d;
  j["d_prime"] = report.numbers.d_prime;
  j["n1"] = report.numbers.n1;
  j["n2"] = report.numbers.n2;
  j["kernel_dim_formula"] = report.kernel_dim_formula;
  if (report.kernel_dim_bruteforce) j["kernel_dim_bruteforce"] = *report.kernel_dim_bruteforce;
  if (report.relation_dim) j["relation_dim"] = *report.relation_dim;
  return j.dump();
}

}  // namespace nichols
