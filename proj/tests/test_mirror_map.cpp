#include <doctest.h>

#include "helpers.hpp"

using namespace lgm;
using testing::index_of;

TEST_CASE("chain (2,2) state space") {
  StateSpace s(parse_invertible("x1^2*x2+x2^2"));
  CHECK(s.dim() == 3);
  const auto& e = s.elements()[index_of(s, {0, 1})];
  CHECK(e.gamma == identity_element(2));
  CHECK(e.broad);
  CHECK(e.form.volume == std::vector<std::size_t>{0, 1});
  Polynomial expected(2);
  expected.add_term({1, 0}, Q(-2));
  CHECK(e.form.coefficient == expected);
  CHECK(s.sector_dimension(identity_element(2)).dimension == 1);
}

TEST_CASE("loop (2,2) identity sector has rank two") {
  StateSpace s(parse_invertible("x1^2*x2+x2^2*x1"));
  CHECK(s.dim() == 4);
  CHECK(s.group().elements.size() == 3);
  CHECK(s.sector_dimension(identity_element(2)).dimension == 2);
  std::size_t broad = 0;
  for (const auto& e : s.elements()) broad += e.broad;
  CHECK(broad == 2);
}

TEST_CASE("Fermat sectors") {
  StateSpace s(make_fermat(3));
  for (const auto& e : s.elements()) CHECK_FALSE(e.broad);
  CHECK(s.elements()[index_of(s, {0})].gamma == s.invariants().J);
  CHECK(s.elements()[index_of(s, {1})].gamma == s.invariants().J + s.invariants().J);
  CHECK(s.sector_dimension(identity_element(1)).dimension == 0);
}

TEST_CASE("the unit sector is one-dimensional") {
  for (const auto& text : testing::small_catalog()) {
    StateSpace s(parse_invertible(text));
    CHECK(s.sector_dimension(s.invariants().J).dimension == 1);
  }
}

TEST_CASE("broad pairings") {
  StateSpace loop(parse_invertible("x1^2*x2+x2^3*x3+x3^2*x4+x4^3*x1"));
  const auto& R = loop.ring();
  std::optional<std::size_t> odd, even;
  for (std::size_t i = 0; i < R.dim(); ++i) {
    if (R.basis()[i].tags[0].loop == 1) odd = i;
    if (R.basis()[i].tags[0].loop == 2) even = i;
  }
  REQUIRE(odd);
  REQUIRE(even);
  // odd variables x1,x3 carry a = 2, even ones a = 3.
  CHECK(loop.pairing_A_direct(*odd, *odd) == 9);
  CHECK(loop.pairing_A_direct(*even, *even) == 4);
  CHECK(loop.pairing_A_direct(*odd, *even) == 1);

  StateSpace chain(parse_invertible("x1^2*x2+x2^2"));
  const auto b = index_of(chain, {0, 1});
  CHECK(chain.pairing_A_direct(b, b) == -2);
  CHECK(chain.pairing_A_direct(index_of(chain, {0, 0}), chain.ring().socle_index()) == 1);
}

TEST_CASE("additive relation and generator identities") {
  for (const auto& text : testing::small_catalog()) {
    CAPTURE(text);
    StateSpace s(parse_invertible(text));
    const auto& R = s.ring();
    const std::size_t n = s.poly().n;
    for (std::size_t i = 0; i < R.dim(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        IVec m = R.basis()[i].m;
        ++m[j];
        auto k = R.index_of(m);
        IVec ej(n, 0);
        ej[j] = 1;
        if (k && R.index_of(ej)) CHECK(s.product_A(s.generator(j), s.basis_element(i)) == s.basis_element(*k));
      }
    for (const auto& rel : s.jacobian_relations()) CHECK(rel.empty());
  }
}

TEST_CASE("chain last relation") {
  for (const IVec& a : {IVec{2, 2}, IVec{3, 2}, IVec{2, 3}, IVec{2, 2, 3}}) {
    StateSpace s(make_chain(a));
    const std::size_t n = a.size();
    IVec e(n, 0);
    e[n - 2] = 1;
    e[n - 1] = a[n - 1] - 1;
    CHECK(scaled(s.monomial(e), a[n - 1]).empty());
  }
}

TEST_CASE("Fermat three-point values") {
  for (int a = 3; a <= 6; ++a) {
    StateSpace s(make_fermat(a));
    for (int i = 0; i <= a - 2; ++i)
      for (int j = 0; j <= a - 2; ++j)
        for (int k = 0; k <= a - 2; ++k)
          CHECK(s.three_point_basis(index_of(s, {i}), index_of(s, {j}), index_of(s, {k})) ==
                oracle::fermat_three_point(a, i, j, k));
  }
}

TEST_CASE("mirror map is a Frobenius algebra isomorphism on the catalog") {
  for (const auto& text : testing::small_catalog()) {
    CAPTURE(text);
    StateSpace s(parse_invertible(text));
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) CHECK(s.product_basis(i, j) == s.ring().multiply_basis(i, j));
    CHECK(s.gram_A() == s.gram_A_direct());
    for (const auto& o : three_point_oracles(s)) {
      CAPTURE(o.label);
      CHECK(s.three_point(o.a, o.b, o.c) == o.expected);
    }
    std::size_t total = 0;
    for (const auto& g : s.group().elements) total += s.sector_dimension(g).dimension;
    CHECK(Q(static_cast<long>(total)) == s.invariants().dual_milnor);
    for (const auto& e : s.elements()) CHECK(e.degree == e.sector.degree);
  }
}
