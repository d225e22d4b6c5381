#pragma once

#include <string>
#include <vector>

#include "lgmirror/reconstruction.hpp"
#include "oracle.hpp"

namespace testing {

inline const std::vector<std::string>& small_catalog() {
  static const std::vector<std::string> c = {
      "x1^2", "x1^3", "x1^4", "x1^5",
      "x1^2*x2+x2^2", "x1^3*x2+x2^2", "x1^2*x2+x2^3", "x1^2*x2+x2^2*x3+x3^2",
      "x1^2*x2+x2^2*x1", "x1^3*x2+x2^2*x1", "x1^3*x2+x2^3*x1", "x1^2*x2+x2^2*x3+x3^2*x1",
      "x1^3+x2^3", "x1^2*x2+x2^2+x3^3", "x2^2*x1+x1^2",
  };
  return c;
}

inline oracle::Matrix matrix_of(const lgm::InvertiblePolynomial& w) {
  oracle::Matrix m;
  for (const auto& row : w.original_matrix) m.emplace_back(row.begin(), row.end());
  return m;
}

inline std::size_t index_of(const lgm::StateSpace& s, const lgm::IVec& m) {
  auto i = s.ring().index_of(m);
  if (!i) throw std::logic_error("not a standard vector");
  return *i;
}

}  // namespace testing
