#include <doctest.h>

#include "helpers.hpp"

using namespace lgm;

namespace {

QVec qv(std::initializer_list<Q> l) { return QVec(l); }

}  // namespace

TEST_CASE("chain (2,2) invariants") {
  auto inv = derive_invariants(parse_invertible("x1^2*x2+x2^2"));
  CHECK(inv.q == qv({Q(1, 4), Q(1, 2)}));
  CHECK(inv.milnor == 3);
  CHECK(inv.central_charge == Q(1, 2));
  CHECK(inv.group_order == 4);
  CHECK(inv.J.theta == qv({Q(1, 4), Q(1, 2)}));
}

TEST_CASE("loop (3,3) invariants") {
  auto inv = derive_invariants(parse_invertible("x1^3*x2+x2^3*x1"));
  CHECK(inv.q == qv({Q(1, 4), Q(1, 4)}));
  CHECK(inv.group_order == 8);
  CHECK(inv.central_charge == 1);
}

TEST_CASE("Fermat invariants") {
  for (int a = 2; a <= 7; ++a) {
    auto inv = derive_invariants(make_fermat(a));
    CHECK(inv.q[0] == Q(1, a));
    CHECK(inv.group_order == a);
    CHECK(inv.milnor == a - 1);
  }
}

TEST_CASE("group elements") {
  auto w3 = make_fermat(3);
  auto g3 = enumerate_group(w3, derive_invariants(w3));
  CHECK(g3.elements.size() == 3);
  CHECK(g3.elements[1].theta == qv({Q(1, 3)}));

  auto c = parse_invertible("x1^2*x2+x2^2");
  auto gc = enumerate_group(c, derive_invariants(c));
  std::set<QVec> got;
  for (const auto& g : gc.elements) got.insert(g.theta);
  CHECK(got == std::set<QVec>{qv({0, 0}), qv({Q(1, 2), 0}), qv({Q(1, 4), Q(1, 2)}), qv({Q(3, 4), Q(1, 2)})});

  auto l = parse_invertible("x1^2*x2+x2^2*x1");
  CHECK(enumerate_group(l, derive_invariants(l)).elements.size() == 3);
}

TEST_CASE("I map and sectors on chain (2,2)") {
  auto inv = derive_invariants(parse_invertible("x1^2*x2+x2^2"));
  CHECK(I_map(inv, {0, 0}) == inv.J);
  CHECK(I_map(inv, {0, 1}).theta == qv({0, 0}));
  CHECK(I_map(inv, {1, 0}).theta == qv({Q(3, 4), Q(1, 2)}));

  auto id = sector_data(inv, identity_element(2));
  CHECK(id.fixed == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(id.narrow);
  CHECK(id.iota == Q(-3, 4));
  CHECK(id.degree == Q(1, 4));

  auto j = sector_data(inv, inv.J);
  CHECK(j.narrow);
  CHECK(j.iota == 0);
  CHECK(j.degree == 0);

  auto jinv = sector_data(inv, -inv.J);
  CHECK(jinv.narrow);
  CHECK(jinv.iota == Q(1, 2));
  CHECK(jinv.degree == inv.central_charge);
}

TEST_CASE("invariants agree with the oracle on the catalog") {
  for (const auto& text : testing::small_catalog()) {
    CAPTURE(text);
    auto w = parse_invertible(text);
    auto inv = derive_invariants(w);
    auto E = testing::matrix_of(w);
    auto q = oracle::weights(E);
    auto qT = oracle::weights(oracle::transpose(E));
    CHECK(to_original(w, inv.q) == q);
    CHECK(to_original(w, inv.dual_q) == qT);
    CHECK(inv.milnor == oracle::milnor(q));
    CHECK(inv.dual_milnor == oracle::milnor(qT));
    CHECK(inv.central_charge == oracle::central_charge(q));
    CHECK(inv.group_order == std::labs(oracle::det(E)));

    auto g = enumerate_group(w, inv);
    std::set<QVec> mine;
    for (const auto& e : g.elements) mine.insert(to_original(w, e.theta));
    std::set<QVec> theirs;
    for (const auto& t : oracle::group(E)) theirs.insert(QVec(t.begin(), t.end()));
    CHECK(mine == theirs);
    for (const auto& e : g.elements) CHECK(in_group(w, e));
  }
}

TEST_CASE("closed-form inverse entries") {
  for (const IVec& a : {IVec{2, 2}, IVec{3, 2, 2}, IVec{2, 3, 4}}) {
    auto w = make_chain(a);
    auto inv = derive_invariants(w);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) CHECK(inv.rho[i][j] == chain_rho(a, i, j));
    auto l = make_loop(a);
    auto linv = derive_invariants(l);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) CHECK(linv.rho[i][j] == loop_rho(a, i, j));
  }
}
