#include "spw/ncpoly.hpp"

#include "doctest.h"
#include "spw/report.hpp"

using namespace spw;

namespace {

NcPoly random_letter(const UsAlgebra& U, Rng& rng) {
  const GeneratorTable& G = U.gens();
  GenIndex g = (GenIndex)rng.below(G.size());
  int e = G.invertible(g) ? (rng.below(2) ? 1 : -1) : 1;
  return U.gen(g, e);
}

}  // namespace

TEST_CASE("inject") {
  LieAlgebra L(2);
  UsAlgebra U(L);
  const GeneratorTable& G = L.gens();

  NcPoly h1 = U.inject(LieElement::unit(G.h(1)));
  CHECK(h1.terms().size() == 1);
  CHECK(h1.terms().begin()->first == PbwMonomial::power(G.h(1), 1));

  CHECK(U.inject(LieElement()).is_zero());

  LieElement two = LieElement::unit(G.index(sum_root(1, 1)));
  two *= 2;
  two.add(G.h(2), 1);
  CHECK(U.inject(two).terms().size() == 2);
}

TEST_CASE("localization units and Ore block") {
  for (int n = 2; n <= 3; ++n) {
    LieAlgebra L(n);
    UsAlgebra U(L);
    const GeneratorTable& G = L.gens();
    for (GenIndex s = G.s_begin(); s < (GenIndex)G.size(); ++s) {
      CHECK(U.multiply(U.gen(s), U.gen(s, -1)) == U.one());
      CHECK(U.multiply(U.gen(s, -1), U.gen(s)) == U.one());
      for (GenIndex t = G.s_begin(); t < (GenIndex)G.size(); ++t)
        CHECK(U.commutator(U.gen(s, -1), U.gen(t, -1)).is_zero());
    }
  }
}

TEST_CASE("printed straightening identities") {
  LieAlgebra L(3);
  UsAlgebra U(L);

  // X_{2e_1} h_1 = (h_1 - 2) X_{2e_1}
  NcPoly lhs = U.multiply(U.gen(sum_root(1, 1)), U.gen(cartan(1)));
  NcPoly rhs = U.multiply(U.gen(cartan(1)) - rat(2) * U.one(),
                          U.gen(sum_root(1, 1)));
  CHECK(lhs == rhs);

  // X_{e_1-e_i} h_i = (h_i + 1) X_{e_1-e_i}
  for (int i = 2; i <= 3; ++i) {
    NcPoly l2 = U.multiply(U.gen(diff_root(1, i)), U.gen(cartan(i)));
    NcPoly r2 = U.multiply(U.gen(cartan(i)) + U.one(), U.gen(diff_root(1, i)));
    CHECK(l2 == r2);
  }
}

TEST_CASE("inverse passing is sound") {
  // Left-multiplying s^-1 g by s must give back g, for every Ore letter
  // and every generator.
  for (int n = 2; n <= 3; ++n) {
    LieAlgebra L(n);
    UsAlgebra U(L);
    const GeneratorTable& G = L.gens();
    for (GenIndex s = G.s_begin(); s < (GenIndex)G.size(); ++s)
      for (GenIndex g = 0; g < (GenIndex)G.size(); ++g) {
        NcPoly moved = U.multiply(U.gen(s, -1), U.gen(g));
        CHECK(U.multiply(U.gen(s), moved) == U.gen(g));
        NcPoly moved2 = U.multiply(U.gen(g), U.gen(s, -1));
        CHECK(U.multiply(moved2, U.gen(s)) == U.gen(g));
      }
  }
}

TEST_CASE("derived example: s^-1 X_{-2e_1}") {
  LieAlgebra L(2);
  UsAlgebra U(L);
  NcPoly r = U.multiply(U.gen(sum_root(1, 1), -1), U.gen(neg_sum_root(1, 1)));
  // Independent oracle: left-multiply by X_{2e_1} and compare.
  CHECK(U.multiply(U.gen(sum_root(1, 1)), r) == U.gen(neg_sum_root(1, 1)));
  // The closed form has the three expected inverse orders.
  for (const auto& [m, _] : r.terms()) {
    int e = m.exponent((GenIndex)(L.gens().size() - 1));
    CHECK(e <= -1);
    CHECK(e >= -3);
  }
}

TEST_CASE("commutator matches the Lie bracket on 200 random pairs") {
  for (int n = 2; n <= 3; ++n) {
    LieAlgebra L(n);
    UsAlgebra U(L);
    Rng rng(7 + n);
    for (int t = 0; t < 200; ++t) {
      GenIndex a = (GenIndex)rng.below(L.dim());
      GenIndex b = (GenIndex)rng.below(L.dim());
      CHECK(U.commutator(U.gen(a), U.gen(b)) == U.inject(L.bracket(a, b)));
    }
  }
  LieAlgebra L(2);
  UsAlgebra U(L);
  NcPoly p = U.multiply(U.gen(cartan(1)), U.gen(neg_sum_root(1, 2)));
  CHECK(U.commutator(p, p).is_zero());
}

TEST_CASE("confluence: associativity on 500 random triples") {
  for (int n = 2; n <= 3; ++n) {
    LieAlgebra L(n);
    UsAlgebra U(L);
    Rng rng(40 + n);
    for (int t = 0; t < 500; ++t) {
      NcPoly a = random_letter(U, rng);
      NcPoly b = random_letter(U, rng);
      NcPoly c = random_letter(U, rng);
      CHECK(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)));
    }
  }
}

TEST_CASE("PBW readback: multiplying out a normal element is the identity") {
  LieAlgebra L(2);
  UsAlgebra U(L);
  const GeneratorTable& G = L.gens();
  Rng rng(99);
  auto random_normal_monomial = [&] {
    std::vector<PbwMonomial::Factor> fs;
    GenIndex prev = 0;
    for (int i = 0; i < 3; ++i) {
      GenIndex g = (GenIndex)(prev + rng.below(G.size() - prev));
      if (g >= (GenIndex)G.size()) break;
      int e = G.invertible(g) ? (int)rng.range(-2, 2) : (int)rng.range(0, 2);
      if (e != 0) fs.push_back({g, e});
      prev = (GenIndex)(g + 1);
      if (prev >= (GenIndex)G.size()) break;
    }
    return PbwMonomial::from_sorted(fs);
  };
  for (int t = 0; t < 40; ++t) {
    // A random linear combination of normal-form monomials of degree
    // <= 3, built directly as data...
    NcPoly direct(2);
    for (int k = 0, terms = (int)rng.range(1, 4); k < terms; ++k)
      direct.add_term(random_normal_monomial(),
                      rat(rng.range(-5, 5) * 2 + 1, rng.range(1, 3)));
    // ...then multiplied out letter by letter and re-read.
    NcPoly rebuilt(2);
    for (const auto& [m, c] : direct.terms()) {
      NcPoly prod = U.one();
      for (auto& [g, e] : m.factors()) prod = U.multiply(prod, U.gen(g, e));
      prod *= c;
      rebuilt += prod;
    }
    CHECK(rebuilt == direct);
  }
}

TEST_CASE("apply_sigma") {
  LieAlgebra L(3);
  UsAlgebra U(L);
  const GeneratorTable& G = L.gens();
  const GenIndex s11 = G.index(sum_root(1, 1));

  CHECK(U.apply_sigma(U.gen(s11)) == U.gen(s11));
  CHECK(U.apply_sigma(U.one()) == U.one());
  CHECK(U.apply_sigma(U.gen(s11, -3)) == U.gen(s11, -3));

  // sigma(X_{e_1-e_i} X_{2e_1}) = (X_{e_1-e_i} + X_{2e_1}) X_{2e_1}
  for (int i = 2; i <= 3; ++i) {
    NcPoly lhs =
        U.apply_sigma(U.multiply(U.gen(diff_root(1, i)), U.gen(s11)));
    NcPoly rhs =
        U.multiply(U.gen(diff_root(1, i)) + U.gen(s11), U.gen(s11));
    CHECK(lhs == rhs);
  }

  // Multiplicative on random products of non-inverse letters.
  Rng rng(4242);
  for (int t = 0; t < 60; ++t) {
    NcPoly p = U.gen((GenIndex)rng.below(L.dim()));
    NcPoly q = U.multiply(U.gen((GenIndex)rng.below(L.dim())),
                          U.gen((GenIndex)rng.below(L.dim())));
    CHECK(U.apply_sigma(U.multiply(p, q)) ==
          U.multiply(U.apply_sigma(p), U.apply_sigma(q)));
  }

  // No inverse of sigma(X_{e_1-e_j}) exists inside U_S.
  CHECK_THROWS_AS(U.apply_sigma(U.gen(diff_root(1, 2), -1)),
                  std::invalid_argument);
}

TEST_CASE("errors") {
  LieAlgebra L2(2), L3(3);
  UsAlgebra U2(L2), U3(L3);
  CHECK_THROWS_AS(U2.multiply(U2.one(), U3.one()), std::invalid_argument);
  CHECK_THROWS_AS(U2.gen(cartan(1), -1), std::invalid_argument);

  UsAlgebra tight(L2, /*step_budget=*/3);
  CHECK_THROWS_AS(
      tight.multiply(tight.gen(sum_root(1, 1), -2),
                     tight.gen(neg_sum_root(1, 1))),
      EngineError);
}

TEST_CASE("canonical text form") {
  LieAlgebra L(2);
  UsAlgebra U(L);
  NcPoly p = U.multiply(U.gen(sum_root(1, 1)), U.gen(cartan(1)));
  p *= rat(1, 2);
  CHECK(U.to_text(p) == "1/2*h1*X(2e1) + -1*X(2e1)");
  CHECK(U.to_text(U.zero()) == "0");
}
