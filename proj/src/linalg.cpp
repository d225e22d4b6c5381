#include "lgmirror/linalg.hpp"

#include <stdexcept>

namespace lgm {

QMatrix identity_matrix(std::size_t n) {
  QMatrix m(n, QVec(n, Q(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m[0].size(), QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

QVec mat_vec(const QMatrix& m, const QVec& v) {
  QVec out(m.size(), Q(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMatrix out(n, QVec(m, Q(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Q determinant(QMatrix m) {
  std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Q f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& in) {
  std::size_t n = in.size();
  QMatrix a = in, inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Q piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

namespace {

void make_primitive(ZRow& row) {
  Z g = 0;
  for (const auto& x : row) {
    if (x != 0) g = gcd(g, x);
  }
  if (g > 1)
    for (auto& x : row) x /= g;
}

}  // namespace

IntEchelon int_rref(std::vector<ZRow> rows, std::size_t ncols) {
  IntEchelon out;
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < rows.size(); ++c) {
    std::size_t p = top;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[top]);
    ZRow& pr = rows[top];
    if (pr[c] < 0)
      for (auto& x : pr) x = -x;
    make_primitive(pr);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][c] == 0) continue;
      Z f = rows[r][c];
      Z pv = pr[c];
      for (std::size_t j = 0; j < ncols; ++j) rows[r][j] = pv * rows[r][j] - f * pr[j];
      make_primitive(rows[r]);
    }
    out.pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  out.rows = std::move(rows);
  return out;
}

bool SparseSystem::add(Row row, Q rhs) {
  ++seen_;
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0)
      it = row.erase(it);
    else
      ++it;
  }
  while (!row.empty()) {
    auto lead = row.begin();
    auto pit = pivots_.find(lead->first);
    if (pit == pivots_.end()) break;
    Q f = lead->second;  // stored rows have leading coefficient 1
    for (const auto& [col, v] : pit->second.row) {
      Q& dst = row[col];
      dst -= f * v;
      if (dst == 0) row.erase(col);
    }
    rhs -= f * pit->second.rhs;
  }
  if (row.empty()) {
    if (rhs != 0) consistent_ = false;
    return rhs == 0;
  }
  Q lead = row.begin()->second;
  for (auto& [col, v] : row) v /= lead;
  rhs /= lead;
  std::size_t key = row.begin()->first;
  pivots_.emplace(key, Stored{std::move(row), std::move(rhs)});
  return true;
}

std::vector<std::size_t> SparseSystem::free_unknowns() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (!pivots_.count(i)) out.push_back(i);
  return out;
}

std::vector<std::optional<Q>> SparseSystem::solve() const {
  std::vector<std::optional<Q>> x(n_);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Q val = it->second.rhs;
    bool known = true;
    for (const auto& [col, v] : it->second.row) {
      if (col == it->first) continue;
      if (!x[col]) {
        known = false;
        break;
      }
      val -= v * *x[col];
    }
    if (known) x[it->first] = val;
  }
  return x;
}

}  // namespace lgm
