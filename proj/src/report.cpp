#include "lgmirror/report.hpp"

#include <iomanip>
#include <sstream>

namespace lgm {

Json rational_json(const Q& x) { return to_string(x); }

Json rational_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json integer_json(const Z& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string monomial_string(const InvertiblePolynomial& w, const IVec& m) {
  const IVec orig = to_original(w, m);
  std::string out;
  for (std::size_t v = 0; v < orig.size(); ++v) {
    if (orig[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v + 1);
    if (orig[v] > 1) out += "^" + std::to_string(orig[v]);
  }
  return out.empty() ? "1" : out;
}

std::string element_string(const StateSpace& s, const StateElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : x) {
    const std::string mon = monomial_string(s.poly(), s.elements()[idx].m);
    const Q mag = abs(c);
    std::string body = mag == 1 ? mon : to_string(mag) + (mon == "1" ? "" : "*" + mon);
    if (out.empty())
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

IVec parse_monomial(const InvertiblePolynomial& w, const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  IVec canon(w.n, 0);
  if (t == "1") return canon;
  auto raw = parse_polynomial(t);
  if (raw.monomials.size() != 1) throw InputError("insertion must be a single monomial: " + text);
  if (raw.nvars > w.n) throw InputError("insertion uses a variable outside x1..x" + std::to_string(w.n));
  const auto& e = raw.monomials[0].exponents;
  for (std::size_t v = 0; v < e.size(); ++v) canon[w.inv_perm[v]] += e[v];
  return canon;
}

namespace {

Json block_json(const InvertiblePolynomial& w, std::size_t index) {
  const AtomicBlock& b = w.blocks[index];
  Json vars = Json::array();
  for (auto v : b.vars) vars.push_back("x" + std::to_string(v + 1));
  return {{"kind", to_string(b.kind)}, {"exponents", b.exponents}, {"variables", vars},
          {"polynomial", block_polynomial(w, index).to_string()}};
}

Json group_element_json(const InvertiblePolynomial& w, const GroupElement& g) {
  return rational_json(to_original(w, g.theta));
}

Json matrix_json(const QMatrix& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(rational_json(row));
  return a;
}

Json key_json(const StateSpace& s, const Key& key) {
  Json a = Json::array();
  for (auto i : key) a.push_back(monomial_string(s.poly(), s.elements()[i].m));
  return a;
}

Json solve_json(const StateSpace& s, const SolveReport& r) {
  Json und = Json::array();
  for (const auto& k : r.undetermined) und.push_back(key_json(s, k));
  return {{"points", r.k},          {"unknowns", r.unknowns}, {"equations", r.equations},
          {"rank", r.rank},         {"consistent", r.consistent}, {"unique", r.unique()},
          {"undetermined", und},    {"notes", r.notes}};
}

}  // namespace

Json info_report(const InvertiblePolynomial& w) {
  const auto inv = derive_invariants(w);
  const auto group = enumerate_group(w, inv);
  Json blocks = Json::array();
  for (std::size_t b = 0; b < w.blocks.size(); ++b) blocks.push_back(block_json(w, b));
  Json gens = Json::array();
  for (const auto& g : group.generators) gens.push_back(group_element_json(w, g));
  return {{"polynomial", w.to_string()},
          {"exponent_matrix", w.original_matrix},
          {"blocks", blocks},
          {"weights", rational_json(to_original(w, inv.q))},
          {"dual_weights", rational_json(to_original(w, inv.dual_q))},
          {"central_charge", rational_json(inv.central_charge)},
          {"milnor", integer_json(inv.milnor.get_num())},
          {"dual_milnor", integer_json(inv.dual_milnor.get_num())},
          {"group_order", integer_json(inv.group_order)},
          {"group_generators", gens},
          {"J", group_element_json(w, inv.J)}};
}

Json dual_report(const InvertiblePolynomial& w) {
  const auto d = dual(w);
  return {{"polynomial", w.to_string()}, {"dual", d.to_string()}};
}

Json basis_report(const StateSpace& s) {
  const auto& w = s.poly();
  Json elems = Json::array();
  for (const auto& e : s.elements()) {
    Json vol = Json::array();
    for (auto v : e.form.volume) vol.push_back("x" + std::to_string(w.perm[v] + 1));
    elems.push_back({{"index", e.index},
                     {"monomial", monomial_string(w, e.m)},
                     {"exponents", to_original(w, e.m)},
                     {"degree", rational_json(e.degree)},
                     {"sector", group_element_json(w, e.gamma)},
                     {"broad", e.broad},
                     {"fixed", e.sector.n_gamma},
                     {"form", {{"coefficient", e.form.coefficient.to_string(w.names())}, {"volume", vol}}}});
  }
  Json sectors = Json::array();
  for (const auto& g : s.group().elements) {
    const auto sd = s.sector_dimension(g);
    sectors.push_back({{"sector", group_element_json(w, g)},
                       {"restricted", sd.restricted},
                       {"dimension", sd.dimension}});
  }
  return {{"polynomial", w.to_string()},
          {"dual", dual(w).to_string()},
          {"dimension", s.dim()},
          {"basis", elems},
          {"sectors", sectors}};
}

Json frobenius_report(const StateSpace& s) {
  Json table = Json::array();
  const std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const auto& p = s.product_basis(i, j);
      if (p.empty()) continue;
      table.push_back({{"left", monomial_string(s.poly(), s.elements()[i].m)},
                       {"right", monomial_string(s.poly(), s.elements()[j].m)},
                       {"product", element_string(s, p)}});
    }
  return {{"polynomial", s.poly().to_string()}, {"dimension", d}, {"products", table}};
}

Json pairing_report(const StateSpace& s) {
  Json labels = Json::array();
  for (const auto& e : s.elements()) labels.push_back(monomial_string(s.poly(), e.m));
  const QMatrix b = s.ring().gram();
  const QMatrix a = s.gram_A();
  const QMatrix ad = s.gram_A_direct();
  return {{"polynomial", s.poly().to_string()},
          {"basis", labels},
          {"B", matrix_json(b)},
          {"A", matrix_json(ad)},
          {"A_transported", matrix_json(a)},
          {"match", a == ad && a == b}};
}

Json threept_report(const StateSpace& s, const std::vector<IVec>& insertions) {
  if (insertions.size() != 3) throw InputError("threept takes exactly three insertions");
  Json ins = Json::array();
  std::vector<StateElement> el;
  for (const auto& m : insertions) {
    el.push_back(s.monomial(m));
    ins.push_back({{"monomial", monomial_string(s.poly(), m)}, {"element", element_string(s, el.back())}});
  }
  return {{"polynomial", s.poly().to_string()},
          {"insertions", ins},
          {"value", rational_json(s.three_point(el[0], el[1], el[2]))}};
}

Json fourpoint_report(const StateSpace& s) {
  const auto& w = s.poly();
  Json F = Json::array(), chiodo = Json::array(), cls = Json::array(), T = Json::array();
  for (std::size_t v = 0; v < w.n; ++v) {
    F.push_back(nullptr);
    chiodo.push_back(nullptr);
    cls.push_back(nullptr);
    T.push_back(nullptr);
  }
  bool match = true;
  for (const auto& spec : special_four_points(s)) {
    const std::size_t v = w.perm[spec.index];
    const Q f = four_point_special(s, spec.index);
    F[v] = rational_json(f);
    try {
      auto ev = four_point_via_chiodo(s, spec.index);
      chiodo[v] = rational_json(ev.value);
      cls[v] = ev.classification;
      if (!ev.T.empty()) T[v] = rational_json(to_original(w, ev.T));
      if (ev.value != f) match = false;
    } catch (const std::domain_error& e) {
      cls[v] = std::string("unclassified: ") + e.what();
      match = false;
    }
  }
  return {{"polynomial", w.to_string()}, {"F", F}, {"chiodo", chiodo}, {"classification", cls}, {"T", T},
          {"match", match}};
}

Json reconstruct_report(const Reconstructor& r, std::size_t max_k) {
  const auto& s = r.space();
  Json entries = Json::array();
  for (const auto& e : prepotential(r, max_k))
    entries.push_back({{"insertions", key_json(s, e.key)},
                       {"value", rational_json(e.value)},
                       {"coefficient", rational_json(e.scaled)}});
  return {{"polynomial", s.poly().to_string()},
          {"max_k", max_k},
          {"four_point_system", solve_json(s, r.four_point_report())},
          {"correlators", entries},
          {"solve_fallbacks", r.solve_fallbacks()}};
}

Json criterion_json(const CriterionResult& c) {
  Json checks = Json::array();
  for (const auto& ch : c.checks)
    checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"expected", ch.expected}, {"got", ch.got}});
  return {{"id", c.id},
          {"title", c.title},
          {"applicable", c.applicable},
          {"pass", c.pass()},
          {"checks", checks},
          {"notes", c.notes}};
}

bool all_pass(const std::vector<CriterionResult>& criteria) {
  for (const auto& c : criteria)
    if (c.applicable && !c.pass()) return false;
  return true;
}

Json criteria_report(const std::vector<CriterionResult>& criteria) {
  Json a = Json::array();
  for (const auto& c : criteria) a.push_back(criterion_json(c));
  return {{"criteria", a}, {"pass", all_pass(criteria)}};
}

Json error_report(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::string criteria_table(const std::vector<CriterionResult>& criteria) {
  std::ostringstream os;
  for (const auto& c : criteria) {
    const char* status = !c.applicable ? "n/a " : c.pass() ? "PASS" : "FAIL";
    os << std::setw(2) << c.id << "  " << status << "  " << c.title << "\n";
    for (const auto& ch : c.checks)
      if (!ch.pass) os << "        " << ch.name << ": expected " << ch.expected << ", got " << ch.got << "\n";
    for (const auto& n : c.notes) os << "        note: " << n << "\n";
  }
  return os.str();
}

}  // namespace lgm
