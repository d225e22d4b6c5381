#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library; inputs are plain exponent matrices in the original variable order.

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<long>>;

// Solves A x = b over Q by Gauss-Jordan on an augmented copy.
inline std::vector<Q> solve(const Matrix& A, const std::vector<Q>& b) {
  const std::size_t n = A.size();
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = A[i][j];
    m[i][n] = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular");
    std::swap(m[p], m[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Q> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

inline Matrix transpose(const Matrix& A) {
  Matrix t(A.size(), std::vector<long>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) t[j][i] = A[i][j];
  return t;
}

// Weights with A q = (1,...,1).
inline std::vector<Q> weights(const Matrix& A) { return solve(A, std::vector<Q>(A.size(), Q(1))); }

// Cofactor expansion; fine for n <= 4.
inline long det(const Matrix& A) {
  const std::size_t n = A.size();
  if (n == 1) return A[0][0];
  long d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(A[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * A[0][c] * det(minor);
  }
  return d;
}

inline Q milnor(const std::vector<Q>& q) {
  Q mu = 1;
  for (const auto& x : q) mu *= (1 / x - 1);
  return mu;
}

inline Q central_charge(const std::vector<Q>& q) {
  Q c = 0;
  for (const auto& x : q) c += 1 - 2 * x;
  return c;
}

inline Q frac(const Q& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - f;
}

// Diagonal symmetries: theta in (1/|det|) Z^n mod 1 with A theta integral.
inline std::set<std::vector<Q>> group(const Matrix& A) {
  const std::size_t n = A.size();
  const long d = std::labs(det(A));
  std::set<std::vector<Q>> out;
  std::vector<long> k(n, 0);
  while (true) {
    std::vector<Q> theta(n);
    for (std::size_t i = 0; i < n; ++i) {
      theta[i] = Q(k[i], d);
      theta[i].canonicalize();
    }
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      Q s = 0;
      for (std::size_t c = 0; c < n; ++c) s += A[r][c] * theta[c];
      ok = s.get_den() == 1;
    }
    if (ok) out.insert(theta);
    std::size_t i = 0;
    while (i < n && ++k[i] == d) k[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Graded dimensions of the Milnor ring from the Poincare series
// prod (1 - t^{1 - q_i}) / (1 - t^{q_i}), truncated at the top degree.
inline std::map<Q, long> poincare(const std::vector<Q>& q) {
  const Q top = central_charge(q);
  std::map<Q, long> series{{Q(0), 1}};
  auto trim = [&](std::map<Q, long>& s) {
    for (auto it = s.begin(); it != s.end();)
      it = (it->second == 0 || it->first > top) ? s.erase(it) : std::next(it);
  };
  for (const auto& w : q) {
    std::map<Q, long> next;
    for (const auto& [deg, c] : series) {
      next[deg] += c;
      next[deg + 1 - w] -= c;
    }
    trim(next);
    std::map<Q, long> geo;
    for (const auto& [deg, c] : next)
      for (Q e = deg; e <= top; e += w) geo[e] += c;
    trim(geo);
    series = geo;
  }
  return series;
}

// Fermat x^a: <x^i, x^j, x^k> = [i + j + k = a - 2].
inline Q fermat_three_point(int a, int i, int j, int k) { return i + j + k == a - 2 ? 1 : 0; }

// Closed forms for the nonconcave types (b) and (d).
inline Q type_b_T(int a1) { return Q(1) / (2 * a1 - 1); }
inline Q type_b_F(int a1) { return Q(-(a1 - 1)) / (2 * a1 - 1); }
inline Q type_d_T_prev(int a_prev) { return Q(1) / (2 * a_prev); }

}  // namespace oracle
