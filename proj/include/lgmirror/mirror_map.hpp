#pragma once

#include <string>
#include <vector>

#include "lgmirror/milnor_ring.hpp"

namespace lgm {

// coefficient * dx_{volume[0]} ^ ... on the fixed locus; narrow sectors carry
// coefficient 1 and an empty volume.
struct ChernForm {
  Polynomial coefficient;
  std::vector<std::size_t> volume;
};

struct SectorBasisElement {
  std::size_t index = 0;
  IVec m;
  GroupElement gamma;
  SectorData sector;
  bool broad = false;
  ChernForm form;
  Q degree;  // sum_i m_i q^T_i
};

// Coordinates in the theta-basis, indexed like the standard basis.
using StateElement = MilnorElement;

struct SectorDimension {
  std::size_t dimension = 0;
  std::string restricted;  // w restricted to Fix(gamma)
  bool invertible = true;  // restricted polynomial passed validation
};

class StateSpace {
 public:
  explicit StateSpace(const InvertiblePolynomial& w);

  const InvertiblePolynomial& poly() const { return ring_.poly(); }
  const Invariants& invariants() const { return inv_; }
  const MilnorRing& ring() const { return ring_; }
  const SymmetryGroup& group() const { return group_; }
  const std::vector<SectorBasisElement>& elements() const { return elems_; }
  std::size_t dim() const { return elems_.size(); }

  SectorDimension sector_dimension(const GroupElement& g) const;

  Q pairing_A(const StateElement& a, const StateElement& b) const;
  Q pairing_A_direct(std::size_t i, std::size_t j) const;
  QMatrix gram_A() const;
  QMatrix gram_A_direct() const;
  const QMatrix& inverse_gram() const { return eta_inv_; }

  Q three_point(const StateElement& a, const StateElement& b, const StateElement& c) const;
  Q three_point_basis(std::size_t i, std::size_t j, std::size_t k) const;
  // Multiplication formula: sum <a,b,e_k> eta^{kl} e_l.
  StateElement product_A(const StateElement& a, const StateElement& b) const;
  StateElement product_basis(std::size_t i, std::size_t j) const { return table_[i][j]; }

  // theta_j as a state element (zero when x_j lies in the Jacobian ideal).
  StateElement generator(std::size_t j) const;
  // prod_i theta_i^{e_i} under product_A.
  StateElement monomial(const IVec& e) const;
  StateElement basis_element(std::size_t idx) const { return {{idx, Q(1)}}; }

  // d_j w^T evaluated on the generators with the A-side product.
  std::vector<StateElement> jacobian_relations() const;

 private:
  Invariants inv_;
  MilnorRing ring_;
  SymmetryGroup group_;
  std::vector<SectorBasisElement> elems_;
  QMatrix eta_inv_;
  std::vector<std::vector<StateElement>> table_;
};

struct OracleCase {
  std::string kind;  // concave, chain-broad, loop-broad, index-zero, metric
  std::string label;
  StateElement a, b, c;
  Q expected;
};

// Closed-form three-point values for an atomic polynomial.
std::vector<OracleCase> three_point_oracles(const StateSpace& s);

std::string describe(const StateSpace& s, const StateElement& x);

}  // namespace lgm
