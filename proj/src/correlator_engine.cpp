#include "lgmirror/correlator_engine.hpp"

#include <stdexcept>

namespace lgm {

QVec line_bundle_degrees(const Invariants& inv, const std::vector<GroupElement>& gammas) {
  const long k = static_cast<long>(gammas.size());
  QVec out(inv.q.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (k - 2) * inv.q[j];
    for (const auto& g : gammas) out[j] -= g.theta[j];
  }
  return out;
}

bool selection_rule(const Invariants& inv, const std::vector<GroupElement>& gammas) {
  return all_integer(line_bundle_degrees(inv, gammas));
}

bool nonvanishing(const StateSpace& s, const std::vector<IVec>& insertions) {
  const auto& inv = s.invariants();
  const std::size_t n = inv.q.size();
  for (std::size_t j = 0; j < n; ++j) {
    Q x = -2 * inv.q[j];
    for (const auto& e : insertions)
      for (std::size_t i = 0; i < n; ++i)
        if (e[i]) x -= e[i] * inv.rho[j][i];
    if (!is_integer(x)) return false;
  }
  Q deg = 0;
  for (const auto& e : insertions) deg += s.ring().degree(e);
  return deg == inv.central_charge + static_cast<long>(insertions.size()) - 3;
}

std::vector<BoundaryGraph> boundary_decorations(const Invariants& inv, const std::vector<GroupElement>& gammas) {
  if (gammas.size() != 4) throw std::invalid_argument("boundary decorations need four markings");
  if (!selection_rule(inv, gammas)) throw std::invalid_argument("decoration fails the selection rule");
  std::vector<BoundaryGraph> out;
  for (std::size_t k = 1; k < 4; ++k) {
    QVec t(inv.q.size());
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = inv.q[j] - gammas[0].theta[j] - gammas[k].theta[j];
    out.push_back({k, group_element(std::move(t))});
  }
  return out;
}

Q bernoulli2(const Q& x) { return x * x - x + Q(1, 6); }

Q chiodo_T_raw(const Invariants& inv, std::size_t j, const std::vector<GroupElement>& gammas) {
  auto graphs = boundary_decorations(inv, gammas);
  Q t = bernoulli2(inv.q[j]) / 2;
  for (const auto& g : gammas) t -= bernoulli2(g.theta[j]) / 2;
  for (const auto& b : graphs) t += bernoulli2(b.plus.theta[j]) / 2;
  return t;
}

Q chiodo_T(const Invariants& inv, std::size_t j, const std::vector<GroupElement>& gammas) {
  return -chiodo_T_raw(inv, j, gammas);
}

std::vector<FourPointSpec> special_four_points(const StateSpace& s) {
  const auto& w = s.poly();
  if (!w.is_atomic()) throw std::invalid_argument("special four-point correlators need an atomic polynomial");
  const auto& blk = w.blocks[0];
  const std::size_t n = w.n;
  const IVec soc = s.ring().basis()[s.ring().socle_index()].m;
  std::vector<FourPointSpec> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (blk.kind == BlockKind::Chain && i + 1 != n) continue;
    IVec e(n, 0), third(n, 0);
    e[i] = 1;
    third[i] = w.a(i) - 2;
    if (blk.kind != BlockKind::Fermat) third[(i + n - 1) % n] += 1;
    out.push_back({i, {e, e, third, soc}});
  }
  return out;
}

Q four_point_special(const StateSpace& s, std::size_t i) { return -s.invariants().q[i]; }

namespace {

// Concave pattern: one j0 with deg L = -2, every other deg L = -1.
std::optional<std::size_t> concave_index(const QVec& degrees) {
  std::optional<std::size_t> j0;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] == -2) {
      if (j0) return std::nullopt;
      j0 = j;
    } else if (degrees[j] != -1) {
      return std::nullopt;
    }
  }
  return j0;
}

std::vector<GroupElement> decorations(const StateSpace& s, const std::vector<IVec>& insertions) {
  std::vector<GroupElement> g;
  for (const auto& e : insertions) g.push_back(I_map(s.invariants(), e));
  return g;
}

}  // namespace

int concave_sign() {
  static const int sign = [] {
    StateSpace s(make_fermat(3));
    auto spec = special_four_points(s).front();
    auto gammas = decorations(s, spec.insertions);
    auto j0 = concave_index(line_bundle_degrees(s.invariants(), gammas));
    if (!j0) throw std::logic_error("calibration correlator is not concave");
    Q ratio = four_point_special(s, 0) / chiodo_T(s.invariants(), *j0, gammas);
    if (ratio != 1 && ratio != -1) throw std::logic_error("calibration ratio is not a sign");
    return ratio == 1 ? 1 : -1;
  }();
  return sign;
}

ChiodoEvaluation four_point_via_chiodo(const StateSpace& s, std::size_t i) {
  const auto& w = s.poly();
  const auto& inv = s.invariants();
  const std::size_t n = w.n;
  FourPointSpec spec;
  bool found = false;
  for (auto& sp : special_four_points(s))
    if (sp.index == i) {
      spec = sp;
      found = true;
    }
  if (!found) throw std::invalid_argument("no special four-point correlator for this index");

  ChiodoEvaluation ev;
  ev.index = i;
  ev.gammas = decorations(s, spec.insertions);
  ev.degrees = line_bundle_degrees(inv, ev.gammas);
  for (const auto& e : spec.insertions)
    if (s.ring().normal_form_monomial(e).empty()) {
      ev.classification = "vanishing-insertion";
      ev.value = 0;
      return ev;
    }
  ev.graphs = boundary_decorations(inv, ev.gammas);
  for (std::size_t j = 0; j < n; ++j) {
    ev.T_raw.push_back(chiodo_T_raw(inv, j, ev.gammas));
    ev.T.push_back(-ev.T_raw.back());
  }

  const auto kind = w.blocks[0].kind;
  const bool nonconcave = w.a(i) == 2 && (kind == BlockKind::Loop || kind == BlockKind::Chain);
  if (nonconcave) {
    const std::size_t prev = (i + n - 1) % n;
    if (kind == BlockKind::Chain)
      ev.classification = "d";
    else if (n >= 3)
      ev.classification = "a";
    else
      ev.classification = w.a(prev) >= 3 ? "b" : "c";
    ev.value = -w.a(prev) * ev.T[prev] + ev.T[i];
    return ev;
  }
  auto j0 = concave_index(ev.degrees);
  if (!j0) throw std::domain_error("four-point correlator is neither concave nor of a tabulated nonconcave type");
  ev.classification = "concave";
  ev.value = concave_sign() * ev.T[*j0];
  return ev;
}

}  // namespace lgm
