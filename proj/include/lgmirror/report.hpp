#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lgmirror/verify.hpp"

namespace lgm {

using Json = nlohmann::json;

// Rationals are always strings, "p/q" or "p".
Json rational_json(const Q& x);
Json rational_json(const QVec& v);
// Integer when it fits in a long, decimal string otherwise.
Json integer_json(const Z& z);

// prod x^m over the original variable names, "1" for the empty monomial.
std::string monomial_string(const InvertiblePolynomial& w, const IVec& m);
std::string element_string(const StateSpace& s, const StateElement& x);
// Parses "1" or a product of variables into a canonical exponent vector.
IVec parse_monomial(const InvertiblePolynomial& w, const std::string& text);

Json info_report(const InvertiblePolynomial& w);
Json dual_report(const InvertiblePolynomial& w);
Json basis_report(const StateSpace& s);
Json frobenius_report(const StateSpace& s);
Json pairing_report(const StateSpace& s);
Json threept_report(const StateSpace& s, const std::vector<IVec>& insertions);
Json fourpoint_report(const StateSpace& s);
Json reconstruct_report(const Reconstructor& r, std::size_t max_k);
Json criteria_report(const std::vector<CriterionResult>& criteria);
Json criterion_json(const CriterionResult& c);
bool all_pass(const std::vector<CriterionResult>& criteria);

Json error_report(const std::string& kind, const std::string& message);

// Plain-text rendering of criteria for --pretty.
std::string criteria_table(const std::vector<CriterionResult>& criteria);

}  // namespace lgm
