#pragma once

#include <string>
#include <vector>

#include "lgmirror/reconstruction.hpp"

namespace lgm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string got;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool applicable = true;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  double seconds = 0;
  bool pass() const;
};

std::string criterion_title(int id);

// Per-polynomial checks. Each returns the checks of one criterion.
CriterionResult check_four_point_paths(const StateSpace& s);   // 2
CriterionResult check_twisted_rank(const StateSpace& s);       // 3
CriterionResult check_frobenius(const StateSpace& s);          // 4
CriterionResult check_pairing(const StateSpace& s);            // 5
CriterionResult check_jacobian(const StateSpace& s);           // 6
CriterionResult check_hessian(const StateSpace& s);            // 7
CriterionResult check_wdvv(const StateSpace& s);               // 8
CriterionResult check_selection_audit(const StateSpace& s);    // 9, selection part

// Catalog-independent checks.
CriterionResult check_chiodo_types();                                // 1
// K-shape audit on one chain; empty-applicable for anything else.
CriterionResult check_k_shapes(const StateSpace& s);
CriterionResult check_k_shapes_all();                          // chains n <= 3, a_i <= 3

// Everything that applies to one polynomial, criteria in order.
std::vector<CriterionResult> verify_polynomial(const InvertiblePolynomial& w);

std::vector<std::string> default_catalog();

// Limits the brute-force audits.
constexpr std::size_t kSelectionAuditGroupLimit = 64;
constexpr std::size_t kFiveWayMilnorLimit = 9;
constexpr double kWdvvSecondsLimit = 60.0;

}  // namespace lgm
