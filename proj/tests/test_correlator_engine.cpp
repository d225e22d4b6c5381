#include <doctest.h>

#include "helpers.hpp"

using namespace lgm;

namespace {

std::vector<GroupElement> decorate(const StateSpace& s, const std::vector<IVec>& ins) {
  std::vector<GroupElement> g;
  for (const auto& e : ins) g.push_back(I_map(s.invariants(), e));
  return g;
}

FourPointSpec spec_for(const StateSpace& s, std::size_t i) {
  for (const auto& sp : special_four_points(s))
    if (sp.index == i) return sp;
  throw std::logic_error("no special four-point");
}

}  // namespace

TEST_CASE("line bundle degrees") {
  for (int a = 3; a <= 6; ++a) {
    StateSpace s(make_fermat(a));
    auto deg = line_bundle_degrees(s.invariants(), decorate(s, spec_for(s, 0).insertions));
    CHECK(deg == QVec{Q(-2)});
  }
  StateSpace c(parse_invertible("x1^2*x2+x2^2"));
  auto deg = line_bundle_degrees(c.invariants(), decorate(c, spec_for(c, 1).insertions));
  CHECK(deg == QVec{Q(-1), Q(0)});
}

TEST_CASE("nonvanishing filter") {
  StateSpace s(make_fermat(4));
  CHECK(nonvanishing(s, {{1}, {1}, {2}, {2}}));
  CHECK_FALSE(nonvanishing(s, {{1}, {1}, {1}, {2}}));
  const auto& J = s.invariants().J;
  CHECK_FALSE(selection_rule(s.invariants(), {J, J, J}));
}

TEST_CASE("boundary decorations") {
  StateSpace c(parse_invertible("x1^2*x2+x2^2"));
  auto graphs = boundary_decorations(c.invariants(), decorate(c, spec_for(c, 1).insertions));
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0].plus.theta[1] == Q(1, 2));
  CHECK(graphs[1].plus.theta[1] == 0);
  CHECK(graphs[2].plus.theta[1] == 0);

  StateSpace l(parse_invertible("x1^2*x2+x2^2*x1"));
  // Markings 1, 2, 3 are undecorated and marking 4 carries (2/3, 2/3); the plus
  // side holds marking 1, so q - theta_a - theta_b - theta_+ is integral there.
  for (std::size_t i = 0; i < 2; ++i) {
    auto g = boundary_decorations(l.invariants(), decorate(l, spec_for(l, i).insertions));
    REQUIRE(g.size() == 3);
    CHECK(g[0].plus.theta[i] == Q(1, 3));
    CHECK(g[1].plus.theta[i] == Q(1, 3));
    CHECK(g[2].plus.theta[i] == Q(2, 3));
  }

  StateSpace f(make_fermat(3));
  GroupElement t = group_element({Q(2, 3)});
  for (const auto& b : boundary_decorations(f.invariants(), {t, t, t, t})) CHECK(b.plus.theta[0] == 0);
}

TEST_CASE("Bernoulli polynomial") {
  CHECK(bernoulli2(Q(0)) == Q(1, 6));
  CHECK(bernoulli2(Q(1, 2)) == Q(-1, 12));
}

TEST_CASE("nonconcave type closed forms") {
  StateSpace c(parse_invertible("x1^2*x2+x2^2*x1"));
  for (std::size_t i = 0; i < 2; ++i) {
    auto ev = four_point_via_chiodo(c, i);
    CHECK(ev.classification == "c");
    CHECK(ev.T == QVec{Q(1, 3), Q(1, 3)});
    CHECK(ev.value == Q(-1, 3));
  }
  for (int a = 2; a <= 4; ++a) {
    StateSpace d(make_chain({a, 2}));
    auto ev = four_point_via_chiodo(d, 1);
    CHECK(ev.classification == "d");
    CHECK(ev.T[0] == oracle::type_d_T_prev(a));
    CHECK(ev.T[1] == 0);
    CHECK(ev.value == Q(-1, 2));
  }
  for (int a = 3; a <= 5; ++a) {
    StateSpace b(make_loop({a, 2}));
    auto ev = four_point_via_chiodo(b, 1);
    CHECK(ev.classification == "b");
    CHECK(ev.T == QVec{oracle::type_b_T(a), oracle::type_b_T(a)});
    CHECK(ev.value == oracle::type_b_F(a));
  }
  StateSpace a3(make_loop({2, 2, 2}));
  auto ev = four_point_via_chiodo(a3, 2);
  CHECK(ev.classification == "a");
  CHECK(ev.value == -a3.invariants().q[2]);
  CHECK(ev.value == -2 * ev.T[1] + ev.T[2]);
}

TEST_CASE("concave calibration") {
  CHECK(concave_sign() == 1);
  StateSpace f(make_fermat(3));
  auto ev = four_point_via_chiodo(f, 0);
  CHECK(ev.classification == "concave");
  CHECK(abs(ev.T[0]) == Q(1, 3));
  CHECK(ev.value == Q(-1, 3));
}

TEST_CASE("F_i equals -q_i through Chiodo classes") {
  for (const auto& text : testing::small_catalog()) {
    auto w = parse_invertible(text);
    if (!w.is_atomic() || text == "x1^2") continue;
    CAPTURE(text);
    StateSpace s(w);
    auto q = oracle::weights(testing::matrix_of(w));
    for (const auto& sp : special_four_points(s)) {
      const Q expected = -q[w.perm[sp.index]];
      CHECK(four_point_special(s, sp.index) == expected);
      CHECK(four_point_via_chiodo(s, sp.index).value == expected);
    }
  }
}

TEST_CASE("x^2 has a vanishing insertion") {
  StateSpace s(make_fermat(2));
  auto ev = four_point_via_chiodo(s, 0);
  CHECK(ev.classification == "vanishing-insertion");
  CHECK(ev.value == 0);
  CHECK(four_point_special(s, 0) == Q(-1, 2));
}

TEST_CASE("special correlators need an atomic polynomial") {
  StateSpace s(parse_invertible("x1^3+x2^3"));
  CHECK_THROWS_AS(special_four_points(s), std::invalid_argument);
}
