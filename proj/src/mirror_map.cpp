#include "lgmirror/mirror_map.hpp"

#include <sstream>
#include <stdexcept>

namespace lgm {

namespace {

Polynomial power_term(std::size_t n, std::size_t j, int e, const Q& c) {
  IVec x(n, 0);
  x[j] = e;
  return Polynomial::monomial(x, c);
}

ChernForm block_form(const AtomicBlock& blk, const BlockTag& tag, std::size_t n) {
  ChernForm f{Polynomial::constant(n, Q(1)), {}};
  const IVec& a = blk.exponents;
  const std::size_t m = a.size();
  const std::size_t o = blk.offset;
  if (tag.stratum > 0) {
    const std::size_t k = static_cast<std::size_t>(tag.stratum);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = m - 2 * i - 2;
      f.coefficient = f.coefficient * power_term(n, o + j, a[j] - 1, Q(-a[j]));
    }
    for (std::size_t j = m - 2 * k; j < m; ++j) f.volume.push_back(o + j);
  } else if (tag.loop > 0) {
    // Super-trace of the two Koszul factorizations of an even loop.
    Polynomial odd = Polynomial::constant(n, Q(1)), odd_a = odd, even = odd, even_a = odd;
    for (std::size_t j = 0; j < m; j += 2) {
      odd = odd * power_term(n, o + j, a[j] - 1, Q(1));
      odd_a = odd_a * power_term(n, o + j, a[j] - 1, Q(-a[j]));
    }
    for (std::size_t j = 1; j < m; j += 2) {
      even = even * power_term(n, o + j, a[j] - 1, Q(1));
      even_a = even_a * power_term(n, o + j, a[j] - 1, Q(-a[j]));
    }
    f.coefficient = tag.loop == 1 ? odd - even_a : odd_a - even;
    for (std::size_t j = 0; j < m; ++j) f.volume.push_back(o + j);
  }
  return f;
}

}  // namespace

StateSpace::StateSpace(const InvertiblePolynomial& w)
    : inv_(derive_invariants(w)), ring_(w, inv_), group_(enumerate_group(w, inv_)) {
  const std::size_t n = w.n;
  for (std::size_t i = 0; i < ring_.dim(); ++i) {
    const auto& sv = ring_.basis()[i];
    SectorBasisElement e;
    e.index = i;
    e.m = sv.m;
    e.gamma = I_map(inv_, sv.m);
    e.sector = sector_data(inv_, e.gamma);
    e.broad = sv.broad();
    e.degree = ring_.degree(sv.m);
    e.form = ChernForm{Polynomial::constant(n, Q(1)), {}};
    for (std::size_t b = 0; b < w.blocks.size(); ++b) {
      ChernForm f = block_form(w.blocks[b], sv.tags[b], n);
      e.form.coefficient = e.form.coefficient * f.coefficient;
      e.form.volume.insert(e.form.volume.end(), f.volume.begin(), f.volume.end());
    }
    if (e.broad == e.sector.narrow) throw std::logic_error("broad classification disagrees with Fix(gamma)");
    if (e.form.volume != e.sector.fixed) throw std::logic_error("Chern form volume is not the fixed locus");
    elems_.push_back(std::move(e));
  }
  eta_inv_ = inverse(ring_.gram());
  const std::size_t d = dim();
  table_.assign(d, std::vector<StateElement>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      StateElement out;
      for (std::size_t k = 0; k < d; ++k) {
        Q c = three_point_basis(i, j, k);
        if (c == 0) continue;
        for (std::size_t l = 0; l < d; ++l)
          if (eta_inv_[k][l] != 0) add_to(out, basis_element(l), c * eta_inv_[k][l]);
      }
      table_[i][j] = out;
      table_[j][i] = std::move(out);
    }
}

SectorDimension StateSpace::sector_dimension(const GroupElement& g) const {
  const auto& w = poly();
  std::vector<std::size_t> fixed;
  std::vector<int> local(w.n, -1);
  for (std::size_t j = 0; j < w.n; ++j)
    if (g.theta[j] == 0) {
      local[j] = static_cast<int>(fixed.size());
      fixed.push_back(j);
    }
  const std::size_t nf = fixed.size();
  RawPolynomial raw;
  raw.nvars = nf;
  Polynomial f(nf);
  for (const auto& row : w.matrix) {
    bool inside = true;
    for (std::size_t j = 0; j < w.n; ++j)
      if (row[j] > 0 && local[j] < 0) inside = false;
    if (!inside) continue;
    IVec e(nf, 0);
    for (std::size_t j = 0; j < w.n; ++j)
      if (row[j] > 0) e[local[j]] = row[j];
    f.add_term(e, Q(1));
    raw.monomials.push_back({Z(1), e});
  }
  SectorDimension out;
  std::vector<std::string> names;
  for (auto j : fixed) names.push_back("x" + std::to_string(w.perm[j] + 1));
  out.restricted = nf == 0 ? "0" : f.to_string(names);
  if (nf > 0) {
    try {
      validate_and_decompose(raw);
    } catch (const InputError&) {
      out.invertible = false;
    }
  }
  QVec weights;
  for (auto j : fixed) weights.push_back(inv_.q[j]);
  for (const auto& u : graded_monomial_basis(f, weights)) {
    bool invariant = true;
    for (const auto& gen : group_.generators) {
      Q s = 0;
      for (std::size_t k = 0; k < nf; ++k) s += (u[k] + 1) * gen.theta[fixed[k]];
      if (!is_integer(s)) {
        invariant = false;
        break;
      }
    }
    if (invariant) ++out.dimension;
  }
  return out;
}

Q StateSpace::pairing_A(const StateElement& a, const StateElement& b) const { return ring_.pair(a, b); }

Q StateSpace::pairing_A_direct(std::size_t i, std::size_t j) const {
  const auto& w = poly();
  const auto& x = elems_[i];
  const auto& y = elems_[j];
  Q out = 1;
  for (std::size_t b = 0; b < w.blocks.size(); ++b) {
    const auto& blk = w.blocks[b];
    const IVec& a = blk.exponents;
    // Sectors pair only with their inverses.
    for (std::size_t k = blk.offset; k < blk.offset + blk.size(); ++k)
      if (!is_integer(x.gamma.theta[k] + y.gamma.theta[k])) return 0;
    const BlockTag& tx = ring_.basis()[i].tags[b];
    const BlockTag& ty = ring_.basis()[j].tags[b];
    if (tx.loop || ty.loop) {
      if (!tx.loop || !ty.loop) return 0;
      if (tx.loop != ty.loop) continue;
      // <Ch(K_odd),Ch(K_odd)> runs over even j, <Ch(K_even),Ch(K_even)> over odd j.
      for (std::size_t k = (tx.loop == 1 ? 1 : 0); k < a.size(); k += 2) out *= -a[k];
      continue;
    }
    if (tx.stratum != ty.stratum) return 0;
    if (tx.stratum == 0) continue;
    // Rank one: pin the sector, then <Ch,Ch> is the form's constant.
    ChernForm f = block_form(blk, tx, w.n);
    out *= f.coefficient.terms().begin()->second;
  }
  return out;
}

QMatrix StateSpace::gram_A() const {
  QMatrix g(dim(), QVec(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g[i][j] = pairing_A(basis_element(i), basis_element(j));
  return g;
}

QMatrix StateSpace::gram_A_direct() const {
  QMatrix g(dim(), QVec(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) g[i][j] = pairing_A_direct(i, j);
  return g;
}

Q StateSpace::three_point_basis(std::size_t i, std::size_t j, std::size_t k) const {
  const auto& B = ring_.basis();
  return ring_.normalized_residue(ring_.normal_form_monomial(add_exp(add_exp(B[i].m, B[j].m), B[k].m)));
}

Q StateSpace::three_point(const StateElement& a, const StateElement& b, const StateElement& c) const {
  Q out = 0;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b)
      for (const auto& [k, cc] : c) out += ca * cb * cc * three_point_basis(i, j, k);
  return out;
}

StateElement StateSpace::product_A(const StateElement& a, const StateElement& b) const {
  StateElement out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) add_to(out, table_[i][j], ca * cb);
  return out;
}

StateElement StateSpace::generator(std::size_t j) const {
  IVec e(poly().n, 0);
  e[j] = 1;
  return ring_.normal_form_monomial(e);
}

StateElement StateSpace::monomial(const IVec& e) const {
  StateElement out = basis_element(ring_.unit_index());
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    StateElement g = generator(j);
    for (int k = 0; k < e[j]; ++k) out = product_A(out, g);
  }
  return out;
}

std::vector<StateElement> StateSpace::jacobian_relations() const {
  std::vector<StateElement> out;
  for (std::size_t j = 0; j < poly().n; ++j) {
    StateElement r;
    const Polynomial dj = ring_.dual_poly().derivative(j);
    for (const auto& [e, c] : dj.terms()) add_to(r, monomial(e), c);
    out.push_back(std::move(r));
  }
  return out;
}

std::string describe(const StateSpace& s, const StateElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << to_string(c) << "*";
    os << "theta(";
    const auto& m = s.elements()[k].m;
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")";
  }
  return os.str();
}

std::vector<OracleCase> three_point_oracles(const StateSpace& s) {
  std::vector<OracleCase> out;
  const auto& w = s.poly();
  const auto& R = s.ring();
  const std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      out.push_back({"metric", "<1," + describe(s, s.basis_element(i)) + "," + describe(s, s.basis_element(j)) + ">",
                     s.basis_element(R.unit_index()), s.basis_element(i), s.basis_element(j),
                     s.pairing_A(s.basis_element(i), s.basis_element(j))});
  if (!w.is_atomic()) return out;

  const AtomicBlock& blk = w.blocks[0];
  const IVec& a = blk.exponents;
  const std::size_t n = a.size();
  auto unit_vec = [&](std::size_t j) {
    IVec e(n, 0);
    e[j] = 1;
    return e;
  };
  auto label = [&](const std::string& tag, std::size_t j, const IVec& m, const IVec& c) {
    std::ostringstream os;
    os << tag << " theta_" << w.perm[j] + 1 << " (";
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << m[i];
    os << ") (";
    for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
  };

  // theta_j . theta(m) = theta(m + e_j), paired against its complement.
  for (std::size_t j = 0; j < n; ++j) {
    auto gj = R.index_of(unit_vec(j));
    if (!gj) continue;
    for (std::size_t i = 0; i < d; ++i) {
      auto p = R.index_of(add_exp(R.basis()[i].m, unit_vec(j)));
      if (!p) continue;
      const BlockTag& tag = R.basis()[*p].tags[0];
      if (tag.loop) continue;
      std::size_t c = R.complement_index(*p);
      Q expected = 1;
      for (int k = 0; k < tag.stratum; ++k) expected *= -a[n - 2 * k - 2];
      out.push_back({tag.stratum ? "chain-broad" : "concave", label("", j, R.basis()[i].m, R.basis()[c].m),
                     s.basis_element(*gj), s.basis_element(i), s.basis_element(c), expected});
    }
  }

  if (blk.kind == BlockKind::Loop && n % 2 == 0) {
    IVec modd(n, 0), meven(n, 0);
    for (std::size_t j = 0; j < n; ++j) (j % 2 == 0 ? modd : meven)[j] = a[j] - 1;
    Q prod_even = 1, prod_odd = 1;  // 1-based parity
    for (std::size_t j = 0; j < n; ++j) (j % 2 == 0 ? prod_odd : prod_even) *= -a[j];
    const std::size_t io = *R.index_of(modd), ie = *R.index_of(meven);
    for (int side = 0; side < 2; ++side) {
      const IVec& top = side == 0 ? modd : meven;
      const std::size_t self = side == 0 ? io : ie, other = side == 0 ? ie : io;
      const Q self_value = side == 0 ? prod_even : prod_odd;
      for (std::size_t j = 0; j < n; ++j) {
        if (top[j] == 0) continue;
        auto gj = R.index_of(unit_vec(j));
        IVec below = top;
        --below[j];
        auto ib = R.index_of(below);
        if (!gj || !ib) continue;
        out.push_back({"loop-broad", label("", j, below, top), s.basis_element(*gj), s.basis_element(*ib),
                       s.basis_element(self), self_value});
        out.push_back({"loop-broad", label("", j, below, R.basis()[other].m), s.basis_element(*gj),
                       s.basis_element(*ib), s.basis_element(other), Q(1)});
      }
    }
  }

  // Index zero: theta_{j+1} . theta_{j+1}^{a_{j+1}-1} = -a_j theta_{j-1} theta_j^{a_j-1}.
  if (blk.kind != BlockKind::Fermat) {
    const bool loop = blk.kind == BlockKind::Loop;
    const std::size_t last = loop ? n : n - 1;
    for (std::size_t j = 0; j < last; ++j) {
      const std::size_t next = (j + 1) % n;
      IVec m(n, 0);
      m[j] = a[j] - 1;
      if (loop || j > 0) m[(j + n - 1) % n] += 1;
      auto im = R.index_of(m);
      if (!im || R.basis()[*im].broad()) continue;
      bool narrow_powers = true;
      for (int k = 1; k < a[next]; ++k) {
        IVec p(n, 0);
        p[next] = k;
        auto ip = R.index_of(p);
        if (!ip || R.basis()[*ip].broad()) narrow_powers = false;
      }
      if (!narrow_powers) continue;
      IVec p(n, 0);
      p[next] = a[next] - 1;
      std::size_t c = R.complement_index(*im);
      out.push_back({"index-zero", label("", next, p, R.basis()[c].m), s.generator(next), R.normal_form_monomial(p),
                     s.basis_element(c), Q(-a[j])});
    }
  }
  return out;
}

}  // namespace lgm
