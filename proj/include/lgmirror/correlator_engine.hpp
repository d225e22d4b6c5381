#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgmirror/mirror_map.hpp"

namespace lgm {

// deg L_j = (k-2) q_j - sum_i theta_i^{(j)} for a genus-zero decoration.
QVec line_bundle_degrees(const Invariants& inv, const std::vector<GroupElement>& gammas);
bool selection_rule(const Invariants& inv, const std::vector<GroupElement>& gammas);

// Insertions are exponent vectors e, each standing for prod_i theta_i^{e_i}.
bool nonvanishing(const StateSpace& s, const std::vector<IVec>& insertions);

struct BoundaryGraph {
  std::size_t partner = 0;  // marking sharing a component with marking 0
  GroupElement plus;        // node decoration on that component
};

std::vector<BoundaryGraph> boundary_decorations(const Invariants& inv, const std::vector<GroupElement>& gammas);

Q bernoulli2(const Q& x);
// B_2(q)/2 - sum B_2(theta_i)/2 + sum B_2(theta_{k,+})/2 with all integrals 1.
Q chiodo_T_raw(const Invariants& inv, std::size_t j, const std::vector<GroupElement>& gammas);
// Sign normalized to the tabulated T_j; equals -chiodo_T_raw.
Q chiodo_T(const Invariants& inv, std::size_t j, const std::vector<GroupElement>& gammas);

struct FourPointSpec {
  std::size_t index = 0;          // canonical variable i of F_i
  std::vector<IVec> insertions;   // (e_i, e_i, e_{i-1} + (a_i - 2) e_i, soc)
};

// The F_i required by reconstruction for an atomic polynomial.
std::vector<FourPointSpec> special_four_points(const StateSpace& s);

Q four_point_special(const StateSpace& s, std::size_t i);

struct ChiodoEvaluation {
  std::size_t index = 0;
  std::string classification;  // concave, a, b, c, d, vanishing-insertion
  std::vector<GroupElement> gammas;
  QVec degrees;                // deg L_j
  std::vector<BoundaryGraph> graphs;
  QVec T;                      // chiodo_T for every j
  QVec T_raw;
  Q value;
};

// Verification path. Throws std::domain_error when the correlator fits
// neither the concave pattern nor a nonconcave type.
ChiodoEvaluation four_point_via_chiodo(const StateSpace& s, std::size_t i);

// Sign s of the concave branch F = s T_{j0}, fixed on x^3.
int concave_sign();

}  // namespace lgm
