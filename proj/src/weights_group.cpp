#include "lgmirror/weights_group.hpp"

#include <deque>
#include <stdexcept>

namespace lgm {

GroupElement group_element(QVec theta) { return GroupElement{frac(theta)}; }

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  QVec t(a.theta.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = a.theta[i] + b.theta[i];
  return group_element(std::move(t));
}

GroupElement operator-(const GroupElement& a) {
  QVec t(a.theta.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = -a.theta[i];
  return group_element(std::move(t));
}

GroupElement identity_element(std::size_t n) { return GroupElement{QVec(n, Q(0))}; }

Q chain_rho(const IVec& a, std::size_t i, std::size_t j) {
  if (j < i) return 0;
  Q r = 1;
  for (std::size_t k = i; k <= j; ++k) r /= a[k];
  return (j - i) % 2 ? Q(-r) : r;
}

Q loop_rho(const IVec& a, std::size_t i, std::size_t j) {
  std::size_t n = a.size();
  Z prod = 1;
  for (int x : a) prod *= x;
  Z den = prod + (n % 2 ? 1 : -1);  // prod + (-1)^{n+1}
  Z num = 1;
  int sign;
  if (j >= i) {
    for (std::size_t k = j + 1; k < n; ++k) num *= a[k];
    for (std::size_t k = 0; k < i; ++k) num *= a[k];
    sign = (j - i) % 2 ? -1 : 1;
  } else {
    for (std::size_t k = j + 1; k < i; ++k) num *= a[k];
    sign = (n + j - i) % 2 ? -1 : 1;
  }
  Q r(num * sign, den);
  r.canonicalize();
  return r;
}

Z block_group_order(const AtomicBlock& b) {
  Z prod = 1;
  for (int x : b.exponents) prod *= x;
  if (b.kind == BlockKind::Loop) prod += (b.size() % 2 ? 1 : -1);
  return prod;
}

namespace {

// Closed-form entries and the per-block identities; a mismatch means an
// arithmetic bug rather than bad input.
void check_block_identities(const InvertiblePolynomial& w, const QMatrix& rho, const QVec& q) {
  for (const auto& b : w.blocks) {
    std::size_t m = b.size(), o = b.offset;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Q expect;
        switch (b.kind) {
          case BlockKind::Fermat: expect = Q(1, b.exponents[0]); break;
          case BlockKind::Chain: expect = chain_rho(b.exponents, i, j); break;
          case BlockKind::Loop: expect = loop_rho(b.exponents, i, j); break;
        }
        expect.canonicalize();
        if (rho[o + i][o + j] != expect) throw std::logic_error("E^{-1} disagrees with closed form");
      }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Q prev = 0;
        if (j > 0)
          prev = rho[o + i][o + j - 1];
        else if (b.kind == BlockKind::Loop)
          prev = rho[o + i][o + m - 1];
        Q lhs = prev + b.exponents[j] * rho[o + i][o + j];
        if (lhs != (i == j ? 1 : 0)) throw std::logic_error("rho recursion fails");
      }
      Q next = 0;
      if (i + 1 < m)
        next = q[o + i + 1];
      else if (b.kind == BlockKind::Loop)
        next = q[o];
      if (b.exponents[i] * q[o + i] != 1 - next) throw std::logic_error("weight recursion fails");
    }
  }
}

}  // namespace

Invariants derive_invariants(const InvertiblePolynomial& w) {
  std::size_t n = w.n;
  QMatrix E(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) E[i][j] = w.matrix[i][j];
  Invariants inv;
  inv.rho = inverse(E);
  inv.q.assign(n, Q(0));
  inv.dual_q.assign(n, Q(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inv.q[i] += inv.rho[i][j];
      inv.dual_q[j] += inv.rho[i][j];
    }
  check_block_identities(w, inv.rho, inv.q);
  inv.milnor = 1;
  inv.dual_milnor = 1;
  inv.central_charge = 0;
  for (std::size_t i = 0; i < n; ++i) {
    inv.milnor *= 1 / inv.q[i] - 1;
    inv.dual_milnor *= 1 / inv.dual_q[i] - 1;
    inv.central_charge += 1 - 2 * inv.q[i];
  }
  inv.group_order = 1;
  for (const auto& b : w.blocks) inv.group_order *= block_group_order(b);
  inv.J = group_element(inv.q);
  QVec half(n);
  for (std::size_t i = 0; i < n; ++i) half[i] = inv.q[i] / 2;
  inv.zeta = GroupElement{half};
  return inv;
}

bool in_group(const InvertiblePolynomial& w, const GroupElement& g) {
  for (std::size_t i = 0; i < w.n; ++i) {
    Q s = 0;
    for (std::size_t j = 0; j < w.n; ++j) s += w.matrix[i][j] * g.theta[j];
    if (!is_integer(s)) return false;
  }
  return true;
}

SymmetryGroup enumerate_group(const InvertiblePolynomial& w, const Invariants& inv) {
  SymmetryGroup G;
  std::size_t n = w.n;
  for (std::size_t j = 0; j < n; ++j) {
    QVec col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = inv.rho[i][j];
    G.generators.push_back(group_element(col));
  }
  std::set<GroupElement> seen{identity_element(n)};
  std::deque<GroupElement> todo{identity_element(n)};
  while (!todo.empty()) {
    GroupElement g = todo.front();
    todo.pop_front();
    for (const auto& h : G.generators) {
      GroupElement x = g + h;
      if (seen.insert(x).second) todo.push_back(x);
    }
  }
  G.elements.assign(seen.begin(), seen.end());
  if (Z(G.elements.size()) != inv.group_order)
    throw std::logic_error("group order " + std::to_string(G.elements.size()) +
                           " disagrees with closed form " + inv.group_order.get_str());
  return G;
}

GroupElement I_map(const Invariants& inv, const IVec& m) {
  QVec t = inv.q;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j]) t[i] += m[j] * inv.rho[i][j];
  return group_element(std::move(t));
}

SectorData sector_data(const Invariants& inv, const GroupElement& g) {
  SectorData s;
  s.iota = 0;
  for (std::size_t j = 0; j < g.theta.size(); ++j) {
    if (g.theta[j] == 0) s.fixed.push_back(j);
    s.iota += g.theta[j] - inv.q[j];
  }
  s.n_gamma = s.fixed.size();
  s.narrow = s.fixed.empty();
  s.degree = Q(static_cast<long>(s.n_gamma), 2) + s.iota;
  s.degree.canonicalize();
  return s;
}

}  // namespace lgm
