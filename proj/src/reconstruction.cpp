#include "lgmirror/reconstruction.hpp"

#include <algorithm>
#include <functional>

namespace lgm {

Key make_key(std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  return idx;
}

KeyCombination expand(const std::vector<StateElement>& insertions) {
  KeyCombination out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, const Q&)> rec = [&](std::size_t i, const Q& c) {
    if (i == insertions.size()) {
      Q& dst = out[make_key(cur)];
      dst += c;
      if (dst == 0) out.erase(make_key(cur));
      return;
    }
    for (const auto& [k, v] : insertions[i]) {
      cur.push_back(k);
      rec(i + 1, c * v);
      cur.pop_back();
    }
  };
  rec(0, Q(1));
  return out;
}

namespace {

void add_combination(KeyCombination& acc, const KeyCombination& x, const Q& c) {
  for (const auto& [k, v] : x) {
    Q& dst = acc[k];
    dst += c * v;
    if (dst == 0) acc.erase(k);
  }
}

// Multisets of size k drawn from [lo, hi), in lexicographic order.
void for_each_multiset(std::size_t lo, std::size_t hi, std::size_t k, const std::function<void(const Key&)>& f) {
  Key cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      f(cur);
      return;
    }
    for (std::size_t i = start; i < hi; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(lo);
}

}  // namespace

KVector k_vector(const InvertiblePolynomial& w, const Invariants& inv, const IVec& ell, const IVec& P,
                 const IVec& Qv) {
  const std::size_t n = w.n;
  KVector kv{ell, P, Qv, QVec(n), QVec(n), true, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Q b = 0;
    for (std::size_t j = 0; j < n; ++j) b += inv.rho[i][j] * (ell[j] + P[j] + Qv[j] + 2);
    kv.b[i] = b;
    kv.K[i] = ell[i] - b + 1;
    if (!is_integer(b)) kv.integral = false;
  }
  kv.a.resize(n);
  for (std::size_t i = 0; i < n; ++i) kv.a[i] = w.a(i);
  return kv;
}

bool key_corollary_holds(const KVector& kv, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (!kv.integral) return fail("non-integral b");
  const std::size_t n = kv.K.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Q& Ki = kv.K[i];
    const Q& Kn = kv.K[i + 1];
    if (Ki <= 0 && Ki + Kn < 0) return fail("K_" + std::to_string(i + 1) + " <= 0 but K_i + K_{i+1} < 0");
    if (Ki == -1 && Kn == 1) {
      if (kv.ell[i] != 0 || kv.ell[i + 1] != 0) return fail("(K_i,K_{i+1}) = (-1,1) with nonzero ell");
      if (kv.P[i] + kv.Q[i] != 2 * kv.a[i] - 2) return fail("(K_i,K_{i+1}) = (-1,1) with P_i + Q_i != 2a_i - 2");
    }
  }
  const Q& Kn = kv.K[n - 1];
  if (Kn < -1 || Kn > kv.ell[n - 1]) return fail("K_n outside [-1, ell_n]");
  if (Kn == -1) {
    if (kv.ell[n - 1] != 0) return fail("K_n = -1 with ell_n != 0");
    if (kv.P[n - 1] + kv.Q[n - 1] != 2 * kv.a[n - 1] - 2) return fail("K_n = -1 with P_n + Q_n != 2a_n - 2");
  }
  return true;
}

bool loop_condition_shape(const IVec& K) {
  const std::size_t n = K.size();
  if (n == 0) return false;
  // Tokens (0) and (-1,1) freely; `special` allows one (1), (-1,2) or (-2,3).
  std::function<bool(std::size_t, std::size_t, bool)> match = [&](std::size_t i, std::size_t end, bool special) {
    if (i == end) return !special;
    if (K[i] == 0 && match(i + 1, end, special)) return true;
    if (i + 1 < end && K[i] == -1 && K[i + 1] == 1 && match(i + 2, end, special)) return true;
    if (special) {
      if (K[i] == 1 && match(i + 1, end, false)) return true;
      if (i + 1 < end && K[i] == -1 && K[i + 1] == 2 && match(i + 2, end, false)) return true;
      if (i + 1 < end && K[i] == -2 && K[i + 1] == 3 && match(i + 2, end, false)) return true;
    }
    return false;
  };
  if (K[n - 1] == 1 && match(0, n - 1, false)) return true;
  if (K[n - 1] == 0 && match(0, n - 1, true)) return true;
  return false;
}

Reconstructor::Reconstructor(const StateSpace& s) : s_(s) {
  if (!s.poly().is_atomic()) throw std::invalid_argument("reconstruction is implemented for atomic polynomials only");
  solve_four_point();
}

std::vector<IVec> Reconstructor::exponents(const Key& key) const {
  std::vector<IVec> out;
  for (auto i : key) out.push_back(s_.elements()[i].m);
  return out;
}

bool Reconstructor::key_nonvanishing(const Key& key) const { return nonvanishing(s_, exponents(key)); }

std::vector<Key> Reconstructor::keys_of_size(std::size_t k, bool nonvanishing_only) const {
  std::vector<Key> out;
  for_each_multiset(1, s_.dim(), k, [&](const Key& key) {
    if (!nonvanishing_only || key_nonvanishing(key)) out.push_back(key);
  });
  return out;
}

Q Reconstructor::value(const Key& raw) const {
  Key key = make_key(raw);
  if (key.size() < 3) throw std::invalid_argument("correlators need at least three insertions");
  if (key.size() == 3) return s_.three_point_basis(key[0], key[1], key[2]);
  if (key.front() == s_.ring().unit_index()) return 0;
  if (!key_nonvanishing(key)) return 0;
  if (key.size() == 4) {
    auto it = table4_.find(key);
    if (it == table4_.end()) throw ReductionError("four-point key left undetermined by the WDVV system", key);
    return it->second;
  }
  return reduce(key);
}

Q Reconstructor::correlator(const std::vector<StateElement>& insertions) const {
  Q out = 0;
  for (const auto& [k, c] : expand(insertions)) out += c * value(k);
  return out;
}

namespace {

std::vector<StateElement> join(std::initializer_list<StateElement> head, const std::vector<StateElement>& tail) {
  std::vector<StateElement> v(head);
  v.insert(v.end(), tail.begin(), tail.end());
  return v;
}

}  // namespace

// sum over S = S1 + S2, both nonempty, of <x,y,S1,e_mu> eta^{mu nu} <e_nu,z,u,S2>.
static Q middle_terms(const Reconstructor& r, const StateElement& x, const StateElement& y, const StateElement& z,
                      const StateElement& u, const std::vector<StateElement>& S) {
  const auto& sp = r.space();
  const std::size_t m = S.size();
  Q out = 0;
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
    std::vector<StateElement> S1, S2;
    for (std::size_t i = 0; i < m; ++i) ((mask >> i) & 1 ? S1 : S2).push_back(S[i]);
    QVec L(sp.dim()), R(sp.dim());
    for (std::size_t mu = 0; mu < sp.dim(); ++mu) {
      L[mu] = r.correlator(join({x, y, sp.basis_element(mu)}, S1));
      R[mu] = r.correlator(join({sp.basis_element(mu), z, u}, S2));
    }
    const auto& eta = sp.inverse_gram();
    for (std::size_t mu = 0; mu < sp.dim(); ++mu) {
      if (L[mu] == 0) continue;
      for (std::size_t nu = 0; nu < sp.dim(); ++nu)
        if (eta[mu][nu] != 0 && R[nu] != 0) out += L[mu] * eta[mu][nu] * R[nu];
    }
  }
  return out;
}

WdvvInstance Reconstructor::wdvv(const StateElement& a, const StateElement& b, const StateElement& c,
                                 const StateElement& d, const std::vector<StateElement>& S) const {
  WdvvInstance w;
  add_combination(w.top, expand(join({a, b, s_.product_A(c, d)}, S)), 1);
  add_combination(w.top, expand(join({s_.product_A(a, b), c, d}, S)), 1);
  add_combination(w.top, expand(join({a, c, s_.product_A(b, d)}, S)), -1);
  add_combination(w.top, expand(join({s_.product_A(a, c), b, d}, S)), -1);
  if (S.size() >= 2) w.lower = middle_terms(*this, a, b, c, d, S) - middle_terms(*this, a, c, b, d, S);
  return w;
}

KeyCombination Reconstructor::wdvv_rewrite(const StateElement& a, const StateElement& b, const StateElement& eps,
                                           const StateElement& phi, const std::vector<StateElement>& S,
                                           Q* lower) const {
  KeyCombination out;
  add_combination(out, expand(join({a, eps, s_.product_A(b, phi)}, S)), 1);
  add_combination(out, expand(join({s_.product_A(a, eps), b, phi}, S)), 1);
  add_combination(out, expand(join({s_.product_A(a, b), eps, phi}, S)), -1);
  if (lower) {
    *lower = 0;
    if (S.size() >= 2) *lower = middle_terms(*this, a, eps, b, phi, S) - middle_terms(*this, a, b, eps, phi, S);
  }
  return out;
}

Q Reconstructor::reduce(const Key& raw) const {
  Key key = make_key(raw);
  if (key.size() > max_points()) throw ReductionError("point count exceeds the cap of 6", key);
  if (key.size() <= 4) return value(key);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!active_.insert(key).second) throw ReductionError("rewrite cycle", key);
  std::optional<Q> v;
  try {
    v = rewrite_value(key);
  } catch (...) {
    active_.erase(key);
    throw;
  }
  active_.erase(key);
  if (!v) {
    auto it = solved_.find(key.size());
    if (it == solved_.end()) it = solved_.emplace(key.size(), solve_points(key.size(), nullptr)).first;
    auto hit = it->second.find(key);
    if (hit == it->second.end()) throw ReductionError("key neither rewritable nor determined by WDVV", key);
    v = hit->second;
    ++fallbacks_;
  }
  memo_.emplace(key, *v);
  return *v;
}

std::optional<Q> Reconstructor::rewrite_value(const Key& raw) const {
  Key key = make_key(raw);
  const auto& R = s_.ring();
  const std::size_t n = s_.poly().n;
  const std::size_t k = key.size();
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    Q dx = R.degree_of(key[x]), dy = R.degree_of(key[y]);
    if (dx != dy) return dx > dy;
    return key[x] > key[y];
  });

  for (std::size_t px : order) {
    const IVec& mx = R.basis()[key[px]].m;
    const Q dx = R.degree_of(key[px]);
    for (std::size_t jj = n; jj-- > 0;) {
      if (mx[jj] == 0) continue;
      IVec ej(n, 0);
      ej[jj] = 1;
      auto gj = R.index_of(ej);
      if (!gj) continue;
      IVec rest = mx;
      --rest[jj];
      const Q deps = R.degree(ej), dphi = dx - deps;
      if (dphi <= 0) continue;
      StateElement eps = s_.basis_element(*gj);
      StateElement phi = R.normal_form_monomial(rest);
      if (s_.product_A(eps, phi) != s_.basis_element(key[px])) continue;
      // a, b among the others with deg b > deg eps and deg a > deg phi, so
      // every same-size key on the right has larger sum of squared degrees.
      for (std::size_t pa : order) {
        if (pa == px || !(R.degree_of(key[pa]) > dphi)) continue;
        for (std::size_t pb : order) {
          if (pb == px || pb == pa || !(R.degree_of(key[pb]) > deps)) continue;
          std::vector<StateElement> S;
          for (std::size_t i = 0; i < k; ++i)
            if (i != px && i != pa && i != pb) S.push_back(s_.basis_element(key[i]));
          Q lower = 0;
          KeyCombination rhs =
              wdvv_rewrite(s_.basis_element(key[pa]), s_.basis_element(key[pb]), eps, phi, S, &lower);
          Q v = lower;
          for (const auto& [kk, c] : rhs) v += c * value(kk);
          return v;
        }
      }
    }
  }
  return std::nullopt;
}

void Reconstructor::solve_four_point() {
  const auto& R = s_.ring();
  const std::size_t d = s_.dim();
  const std::size_t n = s_.poly().n;
  auto unknowns = keys_of_size(4, true);
  std::map<Key, std::size_t> col;
  for (std::size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;
  SparseSystem sys(unknowns.size());
  report4_.k = 4;
  report4_.unknowns = unknowns.size();

  auto add = [&](const KeyCombination& comb, const Q& rhs) {
    SparseSystem::Row row;
    for (const auto& [key, c] : comb)
      if (auto it = col.find(key); it != col.end()) row[it->second] += c;
    sys.add(std::move(row), rhs);
  };

  const Q target = s_.invariants().central_charge + 1;
  for (std::size_t j = 0; j < n; ++j) {
    IVec ej(n, 0);
    ej[j] = 1;
    auto gj = R.index_of(ej);
    if (!gj) continue;
    StateElement eps = s_.basis_element(*gj);
    const Q de = R.degree(ej);
    for (std::size_t xi = 0; xi < d; ++xi)
      for (std::size_t g = 0; g < d; ++g)
        for (std::size_t dl = 0; dl < d; ++dl)
          for (std::size_t f = 0; f < d; ++f) {
            if (R.degree_of(xi) + R.degree_of(g) + R.degree_of(dl) + R.degree_of(f) + de != target) continue;
            auto inst = wdvv(s_.basis_element(g), s_.basis_element(dl), eps, s_.basis_element(f),
                             {s_.basis_element(xi)});
            if (!inst.top.empty()) add(inst.top, -inst.lower);
          }
  }
  for (const auto& spec : special_four_points(s_)) {
    std::vector<StateElement> ins;
    for (const auto& e : spec.insertions) ins.push_back(R.normal_form_monomial(e));
    auto comb = expand(ins);
    if (comb.empty()) {
      report4_.notes.push_back("F_" + std::to_string(s_.poly().perm[spec.index] + 1) +
                               " has a vanishing insertion; seed skipped");
      continue;
    }
    add(comb, four_point_special(s_, spec.index));
  }
  report4_.equations = sys.equations_seen();
  report4_.rank = sys.rank();
  report4_.consistent = sys.consistent();
  auto sol = sys.solve();
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (sol[i])
      table4_[unknowns[i]] = *sol[i];
    else
      report4_.undetermined.push_back(unknowns[i]);
  }
}

std::map<Key, std::optional<Q>> Reconstructor::solve_four_point_unfiltered(SolveReport* report) const {
  const auto& R = s_.ring();
  const std::size_t d = s_.dim();
  const std::size_t n = s_.poly().n;
  auto unknowns = keys_of_size(4, false);
  std::map<Key, std::size_t> col;
  for (std::size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;
  SparseSystem sys(unknowns.size());
  auto add = [&](const KeyCombination& comb, const Q& rhs) {
    SparseSystem::Row row;
    for (const auto& [key, c] : comb)
      if (auto it = col.find(key); it != col.end()) row[it->second] += c;
    sys.add(std::move(row), rhs);
  };
  for (std::size_t j = 0; j < n; ++j) {
    IVec ej(n, 0);
    ej[j] = 1;
    auto gj = R.index_of(ej);
    if (!gj) continue;
    StateElement eps = s_.basis_element(*gj);
    for (std::size_t xi = 0; xi < d; ++xi)
      for (std::size_t g = 0; g < d; ++g)
        for (std::size_t dl = 0; dl < d; ++dl)
          for (std::size_t f = 0; f < d; ++f) {
            auto inst = wdvv(s_.basis_element(g), s_.basis_element(dl), eps, s_.basis_element(f),
                             {s_.basis_element(xi)});
            if (!inst.top.empty()) add(inst.top, 0);
          }
  }
  for (const auto& spec : special_four_points(s_)) {
    std::vector<StateElement> ins;
    for (const auto& e : spec.insertions) ins.push_back(R.normal_form_monomial(e));
    auto comb = expand(ins);
    if (!comb.empty()) add(comb, four_point_special(s_, spec.index));
  }
  auto sol = sys.solve();
  std::map<Key, std::optional<Q>> out;
  for (std::size_t i = 0; i < unknowns.size(); ++i) out[unknowns[i]] = sol[i];
  if (report) {
    report->k = 4;
    report->unknowns = unknowns.size();
    report->equations = sys.equations_seen();
    report->rank = sys.rank();
    report->consistent = sys.consistent();
  }
  return out;
}

std::size_t Reconstructor::wdvv_residual_failures(std::size_t spectators, std::size_t* checked) const {
  const auto& R = s_.ring();
  const std::size_t d = s_.dim();
  const Q target = s_.invariants().central_charge + static_cast<long>(spectators);
  std::size_t bad = 0, count = 0;
  for_each_multiset(0, d, spectators, [&](const Key& S) {
    Q ds = 0;
    std::vector<StateElement> sv;
    for (auto i : S) {
      ds += R.degree_of(i);
      sv.push_back(s_.basis_element(i));
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c)
          for (std::size_t e = 0; e < d; ++e) {
            if (R.degree_of(a) + R.degree_of(b) + R.degree_of(c) + R.degree_of(e) + ds != target) continue;
            auto inst = wdvv(s_.basis_element(a), s_.basis_element(b), s_.basis_element(c), s_.basis_element(e), sv);
            Q v = inst.lower;
            for (const auto& [key, coef] : inst.top) v += coef * value(key);
            ++count;
            if (v != 0) ++bad;
          }
  });
  if (checked) *checked = count;
  return bad;
}

std::map<Key, Q> Reconstructor::solve_points(std::size_t k, SolveReport* report) const {
  if (k < 5 || k > max_points()) throw std::invalid_argument("independent solve covers 5 <= k <= 6");
  const auto& R = s_.ring();
  const std::size_t d = s_.dim();
  auto unknowns = keys_of_size(k, true);
  std::map<Key, std::size_t> col;
  for (std::size_t i = 0; i < unknowns.size(); ++i) col[unknowns[i]] = i;
  SparseSystem sys(unknowns.size());
  const std::size_t m = k - 3;
  const Q target = s_.invariants().central_charge + static_cast<long>(m);
  for_each_multiset(0, d, m, [&](const Key& S) {
    Q ds = 0;
    std::vector<StateElement> sv;
    for (auto i : S) {
      ds += R.degree_of(i);
      sv.push_back(s_.basis_element(i));
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = b; c < d; ++c)
          for (std::size_t e = 0; e < d; ++e) {
            if (R.degree_of(a) + R.degree_of(b) + R.degree_of(c) + R.degree_of(e) + ds != target) continue;
            auto inst = wdvv(s_.basis_element(a), s_.basis_element(b), s_.basis_element(c), s_.basis_element(e), sv);
            SparseSystem::Row row;
            for (const auto& [key, coef] : inst.top)
              if (auto it = col.find(key); it != col.end()) row[it->second] += coef;
            if (!row.empty() || inst.lower != 0) sys.add(std::move(row), -inst.lower);
          }
  });
  auto sol = sys.solve();
  std::map<Key, Q> out;
  SolveReport rep;
  rep.k = k;
  rep.unknowns = unknowns.size();
  rep.equations = sys.equations_seen();
  rep.rank = sys.rank();
  rep.consistent = sys.consistent();
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (sol[i])
      out[unknowns[i]] = *sol[i];
    else
      rep.undetermined.push_back(unknowns[i]);
  }
  if (report) *report = rep;
  return out;
}

std::vector<PrepotentialEntry> prepotential(const Reconstructor& r, std::size_t max_k) {
  if (max_k > r.max_points()) throw std::invalid_argument("max-k above 6 is not supported");
  std::vector<PrepotentialEntry> out;
  const std::size_t d = r.space().dim();
  for (std::size_t k = 3; k <= max_k; ++k) {
    for_each_multiset(k == 3 ? 0 : 1, d, k, [&](const Key& key) {
      if (k > 3 && !r.key_nonvanishing(key)) return;
      Q v = r.value(key);
      if (v == 0) return;
      Z denom = 1;
      for (std::size_t i = 0; i < key.size();) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        for (std::size_t f = 2; f <= j - i; ++f) denom *= static_cast<unsigned long>(f);
        i = j;
      }
      out.push_back({key, v, v / Q(denom)});
    });
  }
  return out;
}

}  // namespace lgm
