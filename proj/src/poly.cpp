#include "lgmirror/poly.hpp"

#include <stdexcept>

namespace lgm {

Polynomial Polynomial::constant(std::size_t nvars, const Q& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Q& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Q Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Q(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Q& c) {
  if (e.size() != n_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.n_ ? a.n_ : b.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exp(ea, eb), ca * cb);
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(n_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.empty() ? "x" + std::to_string(i + 1) : names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Q mag = abs(c);
    bool neg = c < 0;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mono.empty())
      s += lgm::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += lgm::to_string(mag) + "*" + mono;
  }
  return s;
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial();
  std::size_t nv = m[0][0].nvars();
  if (n == 1) return m[0][0];
  // Laplace expansion along the first row; sizes here stay small.
  Polynomial out(nv);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * determinant(std::move(minor));
    if (c % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Q weighted_degree(const Exponent& e, const QVec& weights) {
  Q d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
  return d;
}

}  // namespace lgm
