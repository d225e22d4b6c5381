#include "lgmirror/milnor_ring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lgm {

bool StandardVector::broad() const {
  for (const auto& t : tags)
    if (t.broad()) return true;
  return false;
}

MilnorElement& add_to(MilnorElement& acc, const MilnorElement& x, const Q& c) {
  if (c == 0) return acc;
  for (const auto& [k, v] : x) {
    Q& dst = acc[k];
    dst += c * v;
    if (dst == 0) acc.erase(k);
  }
  return acc;
}

MilnorElement scaled(const MilnorElement& x, const Q& c) {
  MilnorElement out;
  return add_to(out, x, c);
}

std::vector<StandardVector> atomic_standard_basis(const AtomicBlock& b) {
  std::vector<StandardVector> out;
  const IVec& a = b.exponents;
  const std::size_t n = a.size();
  // Enumerate a box of exclusive upper bounds, with a fixed prefix pattern.
  auto box = [&](const IVec& bounds, const IVec& base, BlockTag tag) {
    IVec m = base;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == bounds.size()) {
        out.push_back({m, {tag}});
        return;
      }
      for (int e = 0; e < bounds[i]; ++e) {
        m[i] = e;
        rec(i + 1);
      }
      m[i] = base[i];
    };
    rec(0);
  };
  switch (b.kind) {
    case BlockKind::Fermat:
      box({a[0] - 1}, {0}, BlockTag{});
      break;
    case BlockKind::Loop: {
      std::size_t before = out.size();
      box(a, IVec(n, 0), BlockTag{});
      if (n % 2 == 0) {
        for (std::size_t k = before; k < out.size(); ++k) {
          bool odd = true, even = true;
          for (std::size_t i = 0; i < n; ++i) {
            // position i is variable x_{i+1}
            bool is_odd_var = (i % 2 == 0);
            int mo = is_odd_var ? a[i] - 1 : 0;
            int me = is_odd_var ? 0 : a[i] - 1;
            if (out[k].m[i] != mo) odd = false;
            if (out[k].m[i] != me) even = false;
          }
          if (odd) out[k].tags[0].loop = 1;
          if (even) out[k].tags[0].loop = 2;
        }
      }
      break;
    }
    case BlockKind::Chain:
      for (std::size_t k = 0; 2 * k <= n; ++k) {
        std::size_t t = n - 2 * k;  // free variables x_1..x_t
        IVec base(n, 0);
        for (std::size_t i = 0; i < k; ++i) base[n - 2 * i - 1] = a[n - 2 * i - 1] - 1;
        IVec bounds(t);
        for (std::size_t j = 0; j < t; ++j) bounds[j] = a[j] - (j + 1 == t ? 1 : 0);
        BlockTag tag;
        tag.stratum = static_cast<int>(k);
        IVec m = base;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
          if (i == t) {
            out.push_back({m, {tag}});
            return;
          }
          for (int e = 0; e < bounds[i]; ++e) {
            m[i] = e;
            rec(i + 1);
          }
          m[i] = 0;
        };
        rec(0);
      }
      break;
  }
  return out;
}

IVec atomic_socle(const AtomicBlock& b) {
  const IVec& a = b.exponents;
  IVec s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - 1;
  if (b.kind != BlockKind::Loop) s.back() = a.back() - 2;
  return s;
}

IVec atomic_complement(const AtomicBlock& b, const IVec& m, const BlockTag& tag) {
  const IVec& a = b.exponents;
  const std::size_t n = a.size();
  IVec out(n);
  if (b.kind != BlockKind::Chain) {
    IVec s = atomic_socle(b);
    for (std::size_t i = 0; i < n; ++i) out[i] = s[i] - m[i];
    return out;
  }
  // Pinned tail copied; the free part is complemented inside its own
  // stratum, whose top free variable carries the bound a_t - 1.
  std::size_t t = n - 2 * static_cast<std::size_t>(tag.stratum);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 > t)
      out[i] = m[i];
    else if (i + 1 == t)
      out[i] = a[i] - 2 - m[i];
    else
      out[i] = a[i] - 1 - m[i];
  }
  return out;
}

std::map<Q, std::vector<IVec>> monomials_up_to(const QVec& weights, const Q& bound) {
  std::map<Q, std::vector<IVec>> out;
  const std::size_t n = weights.size();
  IVec e(n, 0);
  std::function<void(std::size_t, Q)> rec = [&](std::size_t i, Q deg) {
    if (i == n) {
      out[deg].push_back(e);
      return;
    }
    for (int k = 0;; ++k) {
      Q d = deg + weights[i] * k;
      if (d > bound) break;
      e[i] = k;
      rec(i + 1, d);
    }
    e[i] = 0;
  };
  if (bound >= 0) rec(0, Q(0));
  return out;
}

namespace {

// Rows x^u * d_j f spanning the Jacobian ideal in one graded piece.
std::vector<ZRow> jacobian_rows(const std::vector<Polynomial>& jac, const QVec& weights, const Q& degree,
                                const std::map<Q, std::vector<IVec>>& by_degree,
                                const std::map<IVec, std::size_t>& column) {
  std::vector<ZRow> rows;
  for (const auto& dj : jac) {
    if (dj.is_zero()) continue;
    Q ddeg = weighted_degree(dj.terms().begin()->first, weights);
    auto it = by_degree.find(degree - ddeg);
    if (it == by_degree.end()) continue;
    for (const auto& u : it->second) {
      ZRow row(column.size(), Z(0));
      for (const auto& [e, c] : dj.terms()) {
        if (c.get_den() != 1) throw std::logic_error("non-integral Jacobian coefficient");
        row[column.at(add_exp(e, u))] += c.get_num();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Q central_charge_of(const QVec& w) {
  Q c = 0;
  for (const auto& x : w) c += 1 - 2 * x;
  return c;
}

}  // namespace

std::vector<IVec> graded_monomial_basis(const Polynomial& f, const QVec& weights) {
  const std::size_t n = weights.size();
  if (n == 0) return {IVec{}};
  Q top = central_charge_of(weights);
  auto by_degree = monomials_up_to(weights, top);
  std::vector<Polynomial> jac;
  for (std::size_t j = 0; j < n; ++j) jac.push_back(f.derivative(j));
  std::vector<IVec> basis;
  for (const auto& [d, monos] : by_degree) {
    std::map<IVec, std::size_t> column;
    for (std::size_t c = 0; c < monos.size(); ++c) column[monos[c]] = c;
    auto ech = int_rref(jacobian_rows(jac, weights, d, by_degree, column), monos.size());
    std::vector<bool> pivot(monos.size(), false);
    for (auto p : ech.pivots) pivot[p] = true;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!pivot[c]) basis.push_back(monos[c]);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

MilnorRing::MilnorRing(const InvertiblePolynomial& w, const Invariants& inv)
    : w_(w), wT_(w.dual_polynomial()), dq_(inv.dual_q) {
  const std::size_t n = w.n;
  top_ = central_charge_of(dq_);
  mu_ = inv.dual_milnor;

  // Tensor product of the per-block bases.
  std::vector<StandardVector> acc{{IVec(n, 0), {}}};
  for (const auto& b : w.blocks) {
    auto local = atomic_standard_basis(b);
    std::vector<StandardVector> next;
    for (const auto& sv : acc)
      for (const auto& lv : local) {
        StandardVector x = sv;
        for (std::size_t i = 0; i < b.size(); ++i) x.m[b.offset + i] = lv.m[i];
        x.tags.push_back(lv.tags[0]);
        next.push_back(std::move(x));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.m < y.m; });
  basis_ = std::move(acc);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].m] = i;
  if (Q(static_cast<long>(basis_.size())) != mu_)
    throw std::logic_error("standard basis size disagrees with the Milnor number");

  IVec soc(n, 0);
  for (const auto& b : w.blocks) {
    auto s = atomic_socle(b);
    for (std::size_t i = 0; i < b.size(); ++i) soc[b.offset + i] = s[i];
  }
  socle_ = index_.at(soc);

  build_normal_forms();

  std::vector<std::vector<Polynomial>> H(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H[i][j] = wT_.derivative(i).derivative(j);
  hess_ = determinant(H);
  MilnorElement nh = normal_form(hess_);
  if (nh.size() != 1 || nh.begin()->first != socle_)
    throw std::logic_error("normal form of the Hessian is not a nonzero socle multiple");
  h_ = nh.begin()->second;
  soc_res_ = mu_ / h_;
}

void MilnorRing::build_normal_forms() {
  const std::size_t n = w_.n;
  auto by_degree = monomials_up_to(dq_, top_);
  std::vector<Polynomial> jac;
  for (std::size_t j = 0; j < n; ++j) jac.push_back(wT_.derivative(j));
  graded_dim_ = 0;
  for (const auto& [d, monos] : by_degree) {
    // Columns: non-basis monomials first so that they become the pivots.
    std::vector<IVec> cols;
    std::vector<std::size_t> basis_cols;
    for (const auto& m : monos)
      if (!index_.count(m)) cols.push_back(m);
    std::size_t nonbasis = cols.size();
    for (const auto& m : monos)
      if (index_.count(m)) cols.push_back(m);
    std::map<IVec, std::size_t> column;
    for (std::size_t c = 0; c < cols.size(); ++c) column[cols[c]] = c;
    auto ech = int_rref(jacobian_rows(jac, dq_, d, by_degree, column), cols.size());
    graded_dim_ += cols.size() - ech.pivots.size();
    if (ech.pivots.size() != nonbasis)
      throw std::logic_error("standard basis does not span a graded piece");
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      std::size_t p = ech.pivots[r];
      if (p >= nonbasis) throw std::logic_error("standard basis is linearly dependent");
      const ZRow& row = ech.rows[r];
      MilnorElement nf;
      for (std::size_t c = nonbasis; c < cols.size(); ++c) {
        if (row[c] == 0) continue;
        Q v(-row[c], row[p]);
        v.canonicalize();
        nf[index_.at(cols[c])] = v;
      }
      nf_[cols[p]] = std::move(nf);
    }
    for (std::size_t c = nonbasis; c < cols.size(); ++c) nf_[cols[c]] = {{index_.at(cols[c]), Q(1)}};
  }
}

std::optional<std::size_t> MilnorRing::index_of(const IVec& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MilnorElement MilnorRing::normal_form_monomial(const IVec& e) const {
  auto it = nf_.find(e);
  if (it != nf_.end()) return it->second;
  if (degree(e) > top_) return {};
  throw std::logic_error("monomial missing from the normal form table");
}

MilnorElement MilnorRing::normal_form(const Polynomial& p) const {
  MilnorElement out;
  for (const auto& [e, c] : p.terms()) add_to(out, normal_form_monomial(e), c);
  return out;
}

Polynomial MilnorRing::to_polynomial(const MilnorElement& x) const {
  Polynomial p(w_.n);
  for (const auto& [k, c] : x) p.add_term(basis_[k].m, c);
  return p;
}

MilnorElement MilnorRing::multiply_basis(std::size_t i, std::size_t j) const {
  return normal_form_monomial(add_exp(basis_[i].m, basis_[j].m));
}

MilnorElement MilnorRing::multiply(const MilnorElement& a, const MilnorElement& b) const {
  MilnorElement out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) add_to(out, multiply_basis(i, j), ca * cb);
  return out;
}

Q MilnorRing::normalized_residue(const MilnorElement& x) const {
  auto it = x.find(socle_);
  return it == x.end() ? Q(0) : it->second;
}

Q MilnorRing::residue(const MilnorElement& x) const { return normalized_residue(x) * soc_res_; }

Q MilnorRing::residue_pair(const MilnorElement& a, const MilnorElement& b) const {
  return residue(multiply(a, b));
}

Q MilnorRing::pair(const MilnorElement& a, const MilnorElement& b) const {
  return normalized_residue(multiply(a, b));
}

Q MilnorRing::pair_basis(std::size_t i, std::size_t j) const {
  return normalized_residue(multiply_basis(i, j));
}

QMatrix MilnorRing::gram() const {
  QMatrix g(dim(), QVec(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g[i][j] = pair_basis(i, j);
  return g;
}

Q MilnorRing::residue_closed_form(std::size_t i, std::size_t j) const {
  const auto& x = basis_[i];
  const auto& y = basis_[j];
  Q out = 1;
  for (std::size_t b = 0; b < w_.blocks.size(); ++b) {
    const auto& blk = w_.blocks[b];
    const IVec& a = blk.exponents;
    const std::size_t n = a.size();
    IVec mx(x.m.begin() + blk.offset, x.m.begin() + blk.offset + n);
    IVec my(y.m.begin() + blk.offset, y.m.begin() + blk.offset + n);
    const BlockTag& tx = x.tags[b];
    const BlockTag& ty = y.tags[b];
    if (tx.loop && ty.loop) {
      // m^odd pairs with itself through the even exponents and vice versa.
      if (tx.loop != ty.loop) continue;
      Q v = 1;
      for (std::size_t k = (tx.loop == 1 ? 1 : 0); k < n; k += 2) v *= -a[k];
      out *= v;
      continue;
    }
    if (atomic_complement(blk, mx, tx) != my) return 0;
    for (int k = 0; k < tx.stratum; ++k) out *= -a[n - 2 * k - 2];
  }
  return out;
}

IVec MilnorRing::complement(const IVec& m) const {
  auto idx = index_of(m);
  if (!idx) throw std::invalid_argument("complement of a non-standard vector");
  const auto& sv = basis_[*idx];
  IVec out(m.size());
  for (std::size_t b = 0; b < w_.blocks.size(); ++b) {
    const auto& blk = w_.blocks[b];
    IVec local(m.begin() + blk.offset, m.begin() + blk.offset + blk.size());
    IVec c = atomic_complement(blk, local, sv.tags[b]);
    for (std::size_t i = 0; i < blk.size(); ++i) out[blk.offset + i] = c[i];
  }
  return out;
}

std::size_t MilnorRing::complement_index(std::size_t idx) const {
  auto c = index_of(complement(basis_[idx].m));
  if (!c) throw std::logic_error("complement is not a standard vector");
  return *c;
}

}  // namespace lgm
