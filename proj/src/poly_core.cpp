#include "lgmirror/poly_core.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "lgmirror/linalg.hpp"

namespace lgm {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : InputError(msg + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RawPolynomial run() {
    std::vector<std::pair<std::map<std::size_t, int>, Z>> terms;
    std::size_t maxvar = 0;
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    while (true) {
      terms.push_back(term(maxvar));
      skip();
      if (at_end()) break;
      if (s_[pos_] != '+') throw ParseError(std::string("expected '+' but found '") + s_[pos_] + "'", pos_);
      ++pos_;
      skip();
    }
    // Collect like monomials.
    std::map<Exponent, Z> collected;
    for (auto& [vars, coef] : terms) {
      Exponent e(maxvar, 0);
      for (auto [v, k] : vars) e[v - 1] += k;
      collected[e] += coef;
    }
    RawPolynomial raw;
    raw.nvars = maxvar;
    for (auto& [e, c] : collected) {
      if (c == 0) continue;
      raw.monomials.push_back({c, e});
    }
    return raw;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Z integer() {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Z(s_.substr(start, pos_ - start));
  }

  std::pair<std::map<std::size_t, int>, Z> term(std::size_t& maxvar) {
    std::map<std::size_t, int> vars;
    Z coef = 1;
    bool has_var = false;
    while (true) {
      skip();
      if (at_end()) throw ParseError("expected variable", pos_);
      std::size_t fpos = pos_;
      if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        Z c = integer();
        throw ParseError("coefficient " + c.get_str() + " is not supported (only unit coefficients)", fpos);
      }
      if (s_[pos_] != 'x') throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
      ++pos_;
      Z idx = integer();
      if (idx < 1 || idx > 64) throw ParseError("variable index out of range", fpos);
      std::size_t v = idx.get_ui();
      int k = 1;
      skip();
      if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        std::size_t epos = pos_;
        Z e = integer();
        if (e > 1000) throw ParseError("exponent too large", epos);
        k = static_cast<int>(e.get_si());
      }
      vars[v] += k;
      maxvar = std::max(maxvar, v);
      has_var = true;
      skip();
      if (!at_end() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!has_var) throw ParseError("empty term", pos_);
    return {vars, coef};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RawPolynomial parse_polynomial(const std::string& text) { return Parser(text).run(); }

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Fermat: return "fermat";
    case BlockKind::Chain: return "chain";
    case BlockKind::Loop: return "loop";
  }
  return "?";
}

int InvertiblePolynomial::target(std::size_t i) const {
  for (std::size_t j = 0; j < n; ++j)
    if (j != i && matrix[i][j] != 0) return static_cast<int>(j);
  return -1;
}

std::size_t InvertiblePolynomial::block_of(std::size_t i) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (i >= blocks[b].offset && i < blocks[b].offset + blocks[b].size()) return b;
  throw std::out_of_range("variable outside every block");
}

Polynomial InvertiblePolynomial::polynomial() const {
  Polynomial p(n);
  for (std::size_t i = 0; i < n; ++i) p.add_term(matrix[i], 1);
  return p;
}

Polynomial InvertiblePolynomial::dual_polynomial() const {
  Polynomial p(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = matrix[j][i];
    p.add_term(e, 1);
  }
  return p;
}

std::vector<std::string> InvertiblePolynomial::names() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(perm[i] + 1));
  return out;
}

namespace {

std::string monomial_string(const IVec& e) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v + 1);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::string InvertiblePolynomial::to_string() const {
  std::string s;
  for (const auto& row : original_matrix) {
    if (!s.empty()) s += " + ";
    s += monomial_string(row);
  }
  return s;
}

InvertiblePolynomial validate_and_decompose(const RawPolynomial& raw) {
  const std::size_t n = raw.nvars;
  if (n == 0) throw InputError("polynomial has no variables");
  if (raw.monomials.size() != n)
    throw InputError("expected " + std::to_string(n) + " monomials for " + std::to_string(n) +
                     " variables, found " + std::to_string(raw.monomials.size()));
  std::vector<int> dominant_of(n, -1);
  std::vector<int> tgt(n, -1);
  std::vector<IVec> orig(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto& mono = raw.monomials[m];
    if (mono.coefficient != 1)
      throw InputError("monomial " + monomial_string(mono.exponents) + " has coefficient " +
                       mono.coefficient.get_str() + "; only unit coefficients are supported");
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < n; ++v)
      if (mono.exponents[v] > 0) support.push_back(v);
    int dom = -1, other = -1;
    if (support.size() == 1) {
      dom = static_cast<int>(support[0]);
      if (mono.exponents[dom] < 2)
        throw InputError("monomial " + monomial_string(mono.exponents) + " is degenerate (exponent must be at least 2)");
    } else if (support.size() == 2) {
      int e0 = mono.exponents[support[0]], e1 = mono.exponents[support[1]];
      if (e0 >= 2 && e1 == 1) {
        dom = static_cast<int>(support[0]);
        other = static_cast<int>(support[1]);
      } else if (e1 >= 2 && e0 == 1) {
        dom = static_cast<int>(support[1]);
        other = static_cast<int>(support[0]);
      } else {
        throw InputError("monomial " + monomial_string(mono.exponents) +
                         " must have the shape x_i^a*x_j with a >= 2");
      }
    } else {
      throw InputError("monomial " + monomial_string(mono.exponents) + " involves " +
                       std::to_string(support.size()) + " variables; at most two are allowed");
    }
    if (dominant_of[dom] != -1)
      throw InputError("variable x" + std::to_string(dom + 1) + " is the leading variable of two monomials");
    dominant_of[dom] = static_cast<int>(m);
    tgt[dom] = other;
    orig[dom] = mono.exponents;
  }

  // Exponent matrix must be nonsingular with positive weights.
  QMatrix E(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) E[i][j] = orig[i][j];
  if (determinant(E) == 0) throw InputError("exponent matrix is singular");
  QVec q = mat_vec(inverse(E), QVec(n, Q(1)));
  for (std::size_t i = 0; i < n; ++i)
    if (q[i] <= 0) throw InputError("weight of x" + std::to_string(i + 1) + " is not positive");

  std::vector<int> indeg(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (tgt[v] >= 0) ++indeg[tgt[v]];
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] > 1)
      throw InputError("variable x" + std::to_string(v + 1) +
                       " is attached to several monomials; component is neither a path nor a cycle");

  std::vector<std::vector<std::size_t>> comps;
  std::vector<BlockKind> kinds;
  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] != 0 || seen[v]) continue;
    std::vector<std::size_t> path;
    for (int u = static_cast<int>(v); u != -1; u = tgt[u]) {
      if (seen[u]) throw InputError("malformed component");
      seen[u] = true;
      path.push_back(u);
    }
    kinds.push_back(path.size() == 1 ? BlockKind::Fermat : BlockKind::Chain);
    comps.push_back(path);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<std::size_t> cyc;
    int u = static_cast<int>(v);
    while (u != -1 && !seen[u]) {
      seen[u] = true;
      cyc.push_back(u);
      u = tgt[u];
    }
    if (u != static_cast<int>(v)) throw InputError("component is neither a path nor a cycle");
    kinds.push_back(BlockKind::Loop);
    comps.push_back(cyc);
  }
  // Blocks ordered by their smallest original variable; loops start there too.
  std::vector<std::size_t> order(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) order[c] = c;
  auto minvar = [&](std::size_t c) { return *std::min_element(comps[c].begin(), comps[c].end()); };
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return minvar(x) < minvar(y); });

  InvertiblePolynomial w;
  w.n = n;
  w.original_matrix = orig;
  for (std::size_t c : order) {
    auto vars = comps[c];
    if (kinds[c] == BlockKind::Loop) {
      auto it = std::min_element(vars.begin(), vars.end());
      std::rotate(vars.begin(), it, vars.end());
    }
    AtomicBlock b;
    b.kind = kinds[c];
    b.vars = vars;
    b.offset = w.perm.size();
    for (auto v : vars) {
      b.exponents.push_back(orig[v][v]);
      w.perm.push_back(v);
    }
    w.blocks.push_back(b);
  }
  w.inv_perm.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) w.inv_perm[w.perm[i]] = i;
  w.matrix.assign(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.matrix[i][j] = orig[w.perm[i]][w.perm[j]];
  return w;
}

InvertiblePolynomial parse_invertible(const std::string& text) {
  return validate_and_decompose(parse_polynomial(text));
}

InvertiblePolynomial dual(const InvertiblePolynomial& w) {
  RawPolynomial raw;
  raw.nvars = w.n;
  for (std::size_t v = 0; v < w.n; ++v) {
    Exponent e(w.n);
    for (std::size_t u = 0; u < w.n; ++u) e[u] = w.original_matrix[u][v];
    raw.monomials.push_back({Z(1), e});
  }
  return validate_and_decompose(raw);
}

InvertiblePolynomial block_polynomial(const InvertiblePolynomial& w, std::size_t b) {
  const auto& blk = w.blocks.at(b);
  return make_atomic(blk.kind, blk.exponents);
}

InvertiblePolynomial make_atomic(BlockKind kind, const IVec& a) {
  std::size_t m = a.size();
  if (m == 0) throw InputError("empty block");
  if (kind == BlockKind::Fermat && m != 1) throw InputError("Fermat block takes one exponent");
  if (kind == BlockKind::Loop && m < 2) throw InputError("loop needs at least two variables");
  RawPolynomial raw;
  raw.nvars = m;
  for (std::size_t i = 0; i < m; ++i) {
    Exponent e(m, 0);
    e[i] = a[i];
    if (kind == BlockKind::Chain && i + 1 < m) e[i + 1] = 1;
    if (kind == BlockKind::Loop) e[(i + 1) % m] = 1;
    raw.monomials.push_back({Z(1), e});
  }
  return validate_and_decompose(raw);
}

InvertiblePolynomial make_fermat(int a) { return make_atomic(BlockKind::Fermat, {a}); }
InvertiblePolynomial make_chain(const IVec& a) { return make_atomic(BlockKind::Chain, a); }
InvertiblePolynomial make_loop(const IVec& a) { return make_atomic(BlockKind::Loop, a); }

}  // namespace lgm
