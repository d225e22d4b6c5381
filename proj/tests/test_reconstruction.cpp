#include <doctest.h>

#include "helpers.hpp"
#include "lgmirror/verify.hpp"

using namespace lgm;
using testing::index_of;

TEST_CASE("multilinear expansion") {
  StateElement a{{1, Q(2)}, {2, Q(1)}};
  StateElement b{{1, Q(3)}};
  auto comb = expand({a, b});
  CHECK(comb.size() == 2);
  CHECK(comb.at({1, 1}) == 6);
  CHECK(comb.at({1, 2}) == 3);
  CHECK(expand({a, StateElement{}}).empty());
}

TEST_CASE("Fermat x^4 four-point sector") {
  StateSpace s(make_fermat(4));
  Reconstructor r(s);
  CHECK(r.four_point_report().unique());
  const auto x = index_of(s, {1}), x2 = index_of(s, {2});
  CHECK(r.value({x, x, x2, x2}) == Q(-1, 4));
  std::size_t nonzero = 0;
  for (const auto& [key, v] : r.four_point_table()) nonzero += v != 0;
  CHECK(nonzero == 1);
  CHECK(r.value({x, x, x, x2}) == 0);
}

TEST_CASE("Fermat x^3 potential") {
  StateSpace s(make_fermat(3));
  Reconstructor r(s);
  const auto one = index_of(s, {0}), x = index_of(s, {1});
  CHECK(r.value({x, x, x, x}) == Q(-1, 3));
  for (const auto& e : prepotential(r, 4)) {
    if (e.key.size() == 3) CHECK(e.key == Key{one, one, x});
    if (e.key.size() == 4) CHECK(e.key == Key{x, x, x, x});
  }
  SolveReport rep;
  auto five = r.solve_points(5, &rep);
  CHECK(rep.unique());
  for (const auto& [key, v] : five) CHECK(r.reduce(key) == v);
}

TEST_CASE("chain (2,2) seed and table") {
  StateSpace s(parse_invertible("x1^2*x2+x2^2"));
  Reconstructor r(s);
  auto v = r.correlator({s.generator(1), s.generator(1), s.generator(0), s.basis_element(s.ring().socle_index())});
  CHECK(v == Q(-1, 2));
  for (const auto& [key, val] : r.four_point_table())
    if (val != 0) CHECK(r.key_nonvanishing(key));
}

TEST_CASE("WDVV residuals vanish") {
  for (const char* text : {"x1^2*x2+x2^2*x1", "x1^5", "x1^2*x2+x2^3"}) {
    CAPTURE(text);
    StateSpace s(parse_invertible(text));
    Reconstructor r(s);
    CHECK(r.four_point_report().unique());
    for (std::size_t sp : {0, 1}) {
      std::size_t checked = 0;
      CHECK(r.wdvv_residual_failures(sp, &checked) == 0);
      CHECK(checked > 0);
    }
  }
}

TEST_CASE("reduce agrees with the five-point solve") {
  for (const char* text : {"x1^5", "x1^3*x2+x2^2", "x1^2*x2+x2^2*x1", "x1^2*x2+x2^2*x3+x3^2"}) {
    CAPTURE(text);
    StateSpace s(parse_invertible(text));
    Reconstructor r(s);
    SolveReport rep;
    auto five = r.solve_points(5, &rep);
    CHECK(rep.unique());
    for (const auto& [key, v] : five) {
      CHECK(r.reduce(key) == v);
      if (auto x = r.rewrite_value(key)) CHECK(*x == v);
    }
  }
}

TEST_CASE("correlators are symmetric") {
  StateSpace s(make_fermat(5));
  Reconstructor r(s);
  const auto x = index_of(s, {1}), x2 = index_of(s, {2}), x3 = index_of(s, {3});
  std::vector<std::size_t> key{x, x2, x2, x3, x3};
  const Q v = r.value(key);
  std::sort(key.begin(), key.end());
  do {
    std::vector<StateElement> ins;
    for (auto i : key) ins.push_back(s.basis_element(i));
    CHECK(r.correlator(ins) == v);
  } while (std::next_permutation(key.begin(), key.end()));
}

TEST_CASE("point cap and atomic restriction") {
  StateSpace s(make_fermat(4));
  Reconstructor r(s);
  const auto x = index_of(s, {1});
  CHECK_THROWS_AS(r.reduce(Key(7, x)), ReductionError);
  CHECK_THROWS_AS(prepotential(r, 7), std::invalid_argument);
  StateSpace sum(parse_invertible("x1^3+x2^3"));
  CHECK_THROWS_AS(Reconstructor{sum}, std::invalid_argument);
}

TEST_CASE("K vectors") {
  auto w = parse_invertible("x1^2*x2+x2^2");
  auto inv = derive_invariants(w);
  // F_2 = <theta_2, theta_2, theta_1, soc>: ell = 2 e_2, P = e_1, Q = soc.
  auto kv = k_vector(w, inv, {0, 2}, {1, 0}, {1, 0});
  CHECK(kv.integral);
  CHECK(kv.b == QVec{Q(1), Q(2)});
  CHECK(kv.K == QVec{Q(0), Q(1)});
  CHECK(key_corollary_holds(kv));

  for (const IVec& a : {IVec{3, 2, 2}, IVec{2, 3, 2}}) {
    StateSpace s(make_chain(a));
    const IVec soc = s.ring().basis()[s.ring().socle_index()].m;
    auto k = k_vector(s.poly(), s.invariants(), {0, 0, 2}, {0, 1, 0}, soc);
    CHECK(k.b == QVec{Q(1), Q(1), Q(2)});
    CHECK(k.K == QVec{Q(0), Q(0), Q(1)});
  }

  for (int a = 3; a <= 6; ++a) {
    auto f = make_fermat(a);
    auto fi = derive_invariants(f);
    for (int ell = 0; ell <= 4; ++ell) {
      auto k = k_vector(f, fi, {ell}, {1}, {a - 2});
      CHECK(k.b[0] == Q(ell + 1 + (a - 2) + 2) / a);
    }
  }
}

TEST_CASE("loop condition shapes") {
  CHECK(loop_condition_shape({1}));
  CHECK(loop_condition_shape({0, 0, 1}));
  CHECK(loop_condition_shape({-1, 1, 1}));
  CHECK(loop_condition_shape({0, 1, 0}));
  CHECK(loop_condition_shape({-1, 2, 0}));
  CHECK(loop_condition_shape({-2, 3, 0}));
  CHECK(loop_condition_shape({0, -1, 1, 1}));
  CHECK_FALSE(loop_condition_shape({-1, 1}));
  CHECK_FALSE(loop_condition_shape({1, 1}));
  CHECK_FALSE(loop_condition_shape({1, 1, 0}));
  CHECK_FALSE(loop_condition_shape({0, 0, 0}));
  CHECK_FALSE(loop_condition_shape({2, 0}));
}

TEST_CASE("corollary rejects impossible vectors") {
  KVector kv;
  kv.ell = {0, 0};
  kv.P = {0, 0};
  kv.Q = {0, 0};
  kv.a = {2, 2};
  kv.integral = true;
  kv.K = {Q(-1), Q(0)};
  std::string why;
  CHECK_FALSE(key_corollary_holds(kv, &why));
  CHECK_FALSE(why.empty());
  kv.K = {Q(0), Q(2)};
  CHECK_FALSE(key_corollary_holds(kv));
}

TEST_CASE("K audit on small chains") {
  for (const IVec& a : {IVec{2, 2}, IVec{3, 2}, IVec{2, 3}}) {
    StateSpace s(make_chain(a));
    auto c = check_k_shapes(s);
    CHECK(c.applicable);
    CHECK(c.pass());
  }
}

TEST_CASE("prepotential coefficients divide by symmetry factors") {
  StateSpace s(make_fermat(4));
  Reconstructor r(s);
  const auto x = index_of(s, {1}), x2 = index_of(s, {2});
  for (const auto& e : prepotential(r, 5)) {
    if (e.key == Key{x, x, x2, x2}) CHECK(e.scaled == Q(-1, 16));
    if (e.key == Key{x2, x2, x2, x2, x2}) CHECK(e.scaled == Q(1, 960));
  }
}
