#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lgmirror/poly.hpp"

namespace lgm {

// Bad user input: syntax, unsupported coefficients, non-invertible shapes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct RawMonomial {
  Z coefficient;
  Exponent exponents;
};

struct RawPolynomial {
  std::size_t nvars = 0;
  std::vector<RawMonomial> monomials;
};

// poly := term ('+' term)* ; term := factor ('*' factor)* ;
// factor := VAR ('^' INT)? ; VAR := 'x' INT. Whitespace is ignored.
RawPolynomial parse_polynomial(const std::string& text);

enum class BlockKind { Fermat, Chain, Loop };
std::string to_string(BlockKind k);

struct AtomicBlock {
  BlockKind kind;
  IVec exponents;                 // a_1..a_m in block order
  std::vector<std::size_t> vars;  // original variable index of each block position
  std::size_t offset = 0;         // first canonical position of the block
  std::size_t size() const { return exponents.size(); }
};

// Variables are renumbered into canonical order: blocks one after another,
// each laid out so that monomial i is x_i^{a_i} x_{i+1} (chain, loop) with the
// loop closing on its first variable.
struct InvertiblePolynomial {
  std::size_t n = 0;
  std::vector<IVec> matrix;             // canonical E, row i dominated by x_i
  std::vector<AtomicBlock> blocks;
  std::vector<std::size_t> perm;        // canonical position -> original index
  std::vector<std::size_t> inv_perm;    // original index -> canonical position
  std::vector<IVec> original_matrix;    // row v = monomial dominated by original x_v

  int a(std::size_t i) const { return matrix[i][i]; }
  // Canonical index j with monomial i = x_i^{a_i} x_j, or -1.
  int target(std::size_t i) const;
  std::size_t block_of(std::size_t i) const;
  bool is_atomic() const { return blocks.size() == 1; }

  Polynomial polynomial() const;       // canonical variables
  Polynomial dual_polynomial() const;  // transposed matrix, canonical variables
  std::vector<std::string> names() const;  // original names in canonical order
  std::string to_string() const;       // original variables and monomial order
};

InvertiblePolynomial validate_and_decompose(const RawPolynomial& raw);
InvertiblePolynomial parse_invertible(const std::string& text);
InvertiblePolynomial dual(const InvertiblePolynomial& w);

// The atomic polynomial of one block, with variables x1..xm in block order.
InvertiblePolynomial block_polynomial(const InvertiblePolynomial& w, std::size_t b);

InvertiblePolynomial make_fermat(int a);
InvertiblePolynomial make_chain(const IVec& a);
InvertiblePolynomial make_loop(const IVec& a);
InvertiblePolynomial make_atomic(BlockKind kind, const IVec& a);

// Canonical-order vector -> original-order vector.
template <class T>
std::vector<T> to_original(const InvertiblePolynomial& w, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[w.perm[i]] = v[i];
  return out;
}

}  // namespace lgm
