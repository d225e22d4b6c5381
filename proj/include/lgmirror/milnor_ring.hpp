#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lgmirror/linalg.hpp"
#include "lgmirror/poly.hpp"
#include "lgmirror/poly_core.hpp"
#include "lgmirror/weights_group.hpp"

namespace lgm {

// Where a standard vector sits inside one atomic block of the dual ring.
struct BlockTag {
  int stratum = 0;  // chain blocks: k in the stratum decomposition
  int loop = 0;     // even loops: 1 for m^odd, 2 for m^even
  bool broad() const { return stratum > 0 || loop > 0; }
};

struct StandardVector {
  IVec m;
  std::vector<BlockTag> tags;  // one per block
  bool broad() const;
};

// Sparse coordinates in the standard basis, keyed by basis index.
using MilnorElement = std::map<std::size_t, Q>;

MilnorElement& add_to(MilnorElement& acc, const MilnorElement& x, const Q& c = Q(1));
MilnorElement scaled(const MilnorElement& x, const Q& c);

// Per-block standard vectors of the transposed atomic polynomial, in block
// coordinates.
std::vector<StandardVector> atomic_standard_basis(const AtomicBlock& b);
IVec atomic_socle(const AtomicBlock& b);
IVec atomic_complement(const AtomicBlock& b, const IVec& m, const BlockTag& tag);

// Milnor ring of the dual polynomial w^T, variables in the canonical order of w.
class MilnorRing {
 public:
  MilnorRing(const InvertiblePolynomial& w, const Invariants& inv);

  const InvertiblePolynomial& poly() const { return w_; }
  const Polynomial& dual_poly() const { return wT_; }
  const std::vector<StandardVector>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  std::optional<std::size_t> index_of(const IVec& m) const;
  std::size_t unit_index() const { return 0; }
  std::size_t socle_index() const { return socle_; }
  const QVec& weights() const { return dq_; }
  const Q& top_degree() const { return top_; }

  Q degree(const IVec& e) const { return weighted_degree(e, dq_); }
  Q degree_of(std::size_t idx) const { return degree(basis_[idx].m); }

  MilnorElement normal_form(const Polynomial& p) const;
  MilnorElement normal_form_monomial(const IVec& e) const;
  MilnorElement basis_element(std::size_t idx) const { return {{idx, Q(1)}}; }
  Polynomial to_polynomial(const MilnorElement& x) const;

  MilnorElement multiply(const MilnorElement& a, const MilnorElement& b) const;
  MilnorElement multiply_basis(std::size_t i, std::size_t j) const;

  const Polynomial& hessian() const { return hess_; }
  const Q& hessian_socle_coefficient() const { return h_; }
  // Res(soc) fixed by Res(Hess) = mu.
  const Q& socle_residue() const { return soc_res_; }

  Q residue(const MilnorElement& x) const;             // Grothendieck, anchored
  Q normalized_residue(const MilnorElement& x) const;  // soc -> 1
  Q residue_pair(const MilnorElement& a, const MilnorElement& b) const;
  Q pair(const MilnorElement& a, const MilnorElement& b) const;  // normalized
  Q pair_basis(std::size_t i, std::size_t j) const;
  QMatrix gram() const;

  // Gram entry from the closed-form residue table, without normal forms.
  Q residue_closed_form(std::size_t i, std::size_t j) const;

  IVec complement(const IVec& m) const;
  std::size_t complement_index(std::size_t idx) const;

  // Sum over graded pieces of (#monomials - rank of Jacobian span).
  std::size_t graded_dimension() const { return graded_dim_; }

 private:
  void build_normal_forms();

  InvertiblePolynomial w_;
  Polynomial wT_;
  QVec dq_;
  Q top_;
  std::vector<StandardVector> basis_;
  std::map<IVec, std::size_t> index_;
  std::size_t socle_ = 0;
  std::map<IVec, MilnorElement> nf_;
  Polynomial hess_;
  Q h_, soc_res_, mu_;
  std::size_t graded_dim_ = 0;
};

// All monomials of weighted degree <= bound, grouped by degree.
std::map<Q, std::vector<IVec>> monomials_up_to(const QVec& weights, const Q& bound);

// A monomial basis of the Milnor ring of an arbitrary quasihomogeneous
// polynomial, chosen as the non-pivot monomials of each graded piece.
std::vector<IVec> graded_monomial_basis(const Polynomial& f, const QVec& weights);

}  // namespace lgm
