#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgmirror/rational.hpp"

namespace lgm {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial with rational coefficients. Zero
// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Q>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Q& c);
  static Polynomial monomial(const Exponent& e, const Q& c = Q(1));

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Q coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const Q& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Q& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Q& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  Polynomial derivative(std::size_t var) const;
  Polynomial pow(unsigned k) const;

  // Variables print as x<i+1> unless names are supplied.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

Polynomial determinant(std::vector<std::vector<Polynomial>> m);

Exponent add_exp(const Exponent& a, const Exponent& b);
Q weighted_degree(const Exponent& e, const QVec& weights);

}  // namespace lgm
