#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lgmirror/rational.hpp"

namespace lgm {

using QMatrix = std::vector<QVec>;
using ZRow = std::vector<Z>;

QMatrix identity_matrix(std::size_t n);
QMatrix transpose(const QMatrix& m);
QVec mat_vec(const QMatrix& m, const QVec& v);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);

Q determinant(QMatrix m);
// Throws std::domain_error when singular.
QMatrix inverse(const QMatrix& m);

// Reduced row echelon form over Z without fractions: rows are scaled to
// primitive integer vectors, pivots are positive and every pivot column is
// zero outside its pivot row. Pivot search walks columns left to right and
// takes the first row with a nonzero entry.
struct IntEchelon {
  std::vector<ZRow> rows;        // only nonzero rows, one per pivot
  std::vector<std::size_t> pivots;  // pivot column of rows[i]
};
IntEchelon int_rref(std::vector<ZRow> rows, std::size_t ncols);

// Incremental sparse linear system over Q. Rows are kept in echelon form
// keyed by their leading column.
class SparseSystem {
 public:
  using Row = std::map<std::size_t, Q>;

  explicit SparseSystem(std::size_t nunknowns) : n_(nunknowns) {}

  // Returns false when the equation contradicts earlier ones.
  bool add(Row row, Q rhs);

  std::size_t unknowns() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }
  std::size_t equations_seen() const { return seen_; }
  std::vector<std::size_t> free_unknowns() const;

  // Defined only for unknowns not depending on free ones.
  std::vector<std::optional<Q>> solve() const;

 private:
  struct Stored {
    Row row;
    Q rhs;
  };
  std::size_t n_;
  std::map<std::size_t, Stored> pivots_;
  bool consistent_ = true;
  std::size_t seen_ = 0;
};

}  // namespace lgm
