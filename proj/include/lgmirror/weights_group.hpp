#pragma once

#include <set>
#include <vector>

#include "lgmirror/linalg.hpp"
#include "lgmirror/poly_core.hpp"

namespace lgm {

// Phases theta in [0,1)^n of a diagonal symmetry exp(2 pi i theta).
struct GroupElement {
  QVec theta;
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.theta < b.theta; }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.theta == b.theta; }
};

GroupElement group_element(QVec theta);  // reduces mod 1
GroupElement operator+(const GroupElement& a, const GroupElement& b);
GroupElement operator-(const GroupElement& a);
GroupElement identity_element(std::size_t n);

struct Invariants {
  QMatrix rho;  // E^{-1}; rho[i][j] = rho_j^{(i)}
  QVec q;
  QVec dual_q;  // weights of the transposed polynomial
  Q milnor;
  Q dual_milnor;
  Q central_charge;
  Z group_order;  // closed form, product over blocks
  GroupElement J;
  GroupElement zeta;
};

Invariants derive_invariants(const InvertiblePolynomial& w);

// Closed-form E^{-1} entries of an atomic block (block-local indices).
Q chain_rho(const IVec& a, std::size_t i, std::size_t j);
Q loop_rho(const IVec& a, std::size_t i, std::size_t j);
Z block_group_order(const AtomicBlock& b);

struct SymmetryGroup {
  std::vector<GroupElement> generators;  // columns of E^{-1} mod 1
  std::vector<GroupElement> elements;    // sorted
};

SymmetryGroup enumerate_group(const InvertiblePolynomial& w, const Invariants& inv);
bool in_group(const InvertiblePolynomial& w, const GroupElement& g);

// theta = q + sum_j m_j rho_j mod 1.
GroupElement I_map(const Invariants& inv, const IVec& m);

struct SectorData {
  std::vector<std::size_t> fixed;
  bool narrow = true;
  std::size_t n_gamma = 0;
  Q iota;
  Q degree;  // n_gamma/2 + iota
};

SectorData sector_data(const Invariants& inv, const GroupElement& g);

}  // namespace lgm
