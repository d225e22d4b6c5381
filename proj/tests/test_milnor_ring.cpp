#include <doctest.h>

#include "helpers.hpp"

using namespace lgm;

namespace {

MilnorRing ring(const InvertiblePolynomial& w) { return MilnorRing(w, derive_invariants(w)); }

std::set<IVec> basis_set(const MilnorRing& R) {
  std::set<IVec> out;
  for (const auto& v : R.basis()) out.insert(v.m);
  return out;
}

MilnorElement el(const MilnorRing& R, const IVec& m, const Q& c = 1) { return {{*R.index_of(m), c}}; }

}  // namespace

TEST_CASE("standard bases") {
  MilnorRing chain = ring(parse_invertible("x1^2*x2+x2^2"));
  CHECK(basis_set(chain) == std::set<IVec>{{0, 0}, {1, 0}, {0, 1}});

  MilnorRing loop = ring(parse_invertible("x1^3*x2+x2^3*x1"));
  CHECK(loop.dim() == 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(loop.index_of({i, j}).has_value());

  MilnorRing f4 = ring(make_fermat(4));
  CHECK(basis_set(f4) == std::set<IVec>{{0}, {1}, {2}});
}

TEST_CASE("normal forms and products on chain (2,2)") {
  MilnorRing R = ring(parse_invertible("x1^2*x2+x2^2"));
  CHECK(R.normal_form_monomial({0, 2}) == el(R, {1, 0}, -2));
  CHECK(R.normal_form_monomial({1, 1}).empty());
  CHECK(R.normal_form_monomial({0, 0}) == el(R, {0, 0}));
  CHECK(R.multiply(el(R, {0, 1}), el(R, {0, 1})) == el(R, {1, 0}, -2));
  CHECK(R.multiply(el(R, {0, 0}), el(R, {0, 1})) == el(R, {0, 1}));
}

TEST_CASE("Fermat products") {
  MilnorRing R = ring(make_fermat(4));
  CHECK(R.multiply(el(R, {1}), el(R, {1})) == el(R, {2}));
  CHECK(R.multiply(el(R, {1}), el(R, {2})).empty());
}

TEST_CASE("Hessian anchor on chain (2,2)") {
  MilnorRing R = ring(parse_invertible("x1^2*x2+x2^2"));
  CHECK(R.socle_index() == *R.index_of({1, 0}));
  CHECK(R.normal_form(R.hessian()) == el(R, {1, 0}, 12));
  CHECK(R.hessian_socle_coefficient() == 12);
  CHECK(R.socle_residue() == Q(1, 4));
  CHECK(R.normalized_residue(el(R, {1, 0})) == 1);
  CHECK(R.pair(el(R, {0, 1}), el(R, {0, 1})) == -2);
}

TEST_CASE("narrow loop pairing") {
  MilnorRing R = ring(parse_invertible("x1^3*x2+x2^3*x1"));
  const IVec soc = R.basis()[R.socle_index()].m;
  for (const auto& v : R.basis()) {
    IVec comp{soc[0] - v.m[0], soc[1] - v.m[1]};
    CHECK(R.pair(el(R, v.m), el(R, comp)) == 1);
  }
}

TEST_CASE("complements") {
  MilnorRing R = ring(parse_invertible("x1^2*x2+x2^2"));
  CHECK(R.complement({1, 0}) == IVec{0, 0});
  CHECK(R.complement({0, 1}) == IVec{0, 1});

  MilnorRing L = ring(parse_invertible("x1^2*x2+x2^2*x3+x3^2*x4+x4^2*x1"));
  std::optional<IVec> odd, even;
  for (const auto& v : L.basis()) {
    if (v.tags[0].loop == 1) odd = v.m;
    if (v.tags[0].loop == 2) even = v.m;
  }
  REQUIRE(odd);
  REQUIRE(even);
  CHECK(L.complement(*odd) == *even);
  CHECK(L.complement(*even) == *odd);

  for (const auto& text : testing::small_catalog()) {
    MilnorRing M = ring(parse_invertible(text));
    CHECK(M.complement(M.basis()[M.socle_index()].m) == IVec(M.poly().n, 0));
  }
}

TEST_CASE("graded dimensions match the Poincare series") {
  for (const auto& text : testing::small_catalog()) {
    CAPTURE(text);
    auto w = parse_invertible(text);
    MilnorRing R = ring(w);
    auto qT = oracle::weights(oracle::transpose(testing::matrix_of(w)));
    std::map<Q, long> mine;
    for (std::size_t i = 0; i < R.dim(); ++i) ++mine[R.degree_of(i)];
    CHECK(mine == oracle::poincare(qT));
    CHECK(R.top_degree() == oracle::central_charge(qT));
  }
}

TEST_CASE("ring axioms on the catalog") {
  for (const auto& text : testing::small_catalog()) {
    CAPTURE(text);
    MilnorRing R = ring(parse_invertible(text));
    const std::size_t d = R.dim();
    for (std::size_t j = 0; j < R.poly().n; ++j) CHECK(R.normal_form(R.dual_poly().derivative(j)).empty());
    const QMatrix G = R.gram();
    CHECK(G == transpose(G));
    CHECK(determinant(G) != 0);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        CHECK(R.multiply_basis(a, b) == R.multiply_basis(b, a));
        for (std::size_t c = 0; c < d && d <= 9; ++c)
          CHECK(R.multiply(R.multiply_basis(a, b), R.basis_element(c)) ==
                R.multiply(R.basis_element(a), R.multiply_basis(b, c)));
      }
  }
}
