#include "spw/walgebra.hpp"

#include <fstream>

#include "doctest.h"
#include "spw/report.hpp"

using namespace spw;

namespace {

struct Fixture {
  LieAlgebra L;
  UsAlgebra U;
  WAlgebra W;
  explicit Fixture(int n) : L(n), U(L), W(U) {}
};

}  // namespace

TEST_CASE("label enumeration matches the centralizer dimension") {
  Fixture f2(2);
  CHECK(f2.W.labels().size() == 6);
  CHECK((int)f2.W.labels().size() == f2.L.centralizer_dim_of_e());

  Fixture f3(3);
  CHECK(f3.W.labels().size() == 15);
  CHECK((int)f3.W.labels().size() == f3.L.centralizer_dim_of_e());

  CHECK_THROWS_AS(f2.W.build_a({AKind::SumK1, 5, 0}, AVariant::Display),
                  std::invalid_argument);
}

TEST_CASE("A values: direct display forms") {
  Fixture f(3);
  auto& U = f.U;
  // A_{-e_k-e_l} is a plain product.
  NcPoly want = U.multiply(
      U.multiply(U.gen(neg_sum_root(2, 3)), U.gen(diff_root(1, 2), -1)),
      U.multiply(U.gen(diff_root(1, 3), -1), U.gen(sum_root(1, 1))));
  CHECK(f.W.a_value({AKind::NegKL, 2, 3}) == want);

  // A_{e_k+e_1} = X_{e_k+e_1} X_{e_1-e_k} X_{2e_1}^-1 - h_k
  NcPoly a21 = U.multiply(
      U.multiply(U.gen(sum_root(1, 2)), U.gen(diff_root(1, 2))),
      U.gen(sum_root(1, 1), -1));
  a21 -= U.gen(cartan(2));
  CHECK(f.W.a_value({AKind::SumK1, 2, 0}) == a21);
}

TEST_CASE("centralizer membership, full grid at n=2") {
  Fixture f(2);
  for (const ALabel& l : f.W.labels()) {
    std::string wit;
    CHECK_MESSAGE(f.W.centralizer_check(f.W.a_value(l), &wit),
                  (l.str() + " fails against " + wit));
  }
  CHECK(f.W.centralizer_check(f.U.one()));
  CHECK_FALSE(f.W.centralizer_check(f.U.gen(neg_sum_root(1, 1))));
}

TEST_CASE("the two printed forms of A_(ek-e1) agree") {
  for (int n = 2; n <= 3; ++n) {
    Fixture f(n);
    for (int k = 2; k <= n; ++k) {
      ALabel l{AKind::DiffK1, (std::uint8_t)k, 0};
      CHECK(f.W.build_a(l, AVariant::Display) ==
            f.W.build_a(l, AVariant::LemmaProof));
    }
  }
}

TEST_CASE("inversion identities at n=2") {
  Fixture f(2);
  const GeneratorTable& G = f.L.gens();
  for (GenIndex g = 0; g < (GenIndex)G.size(); ++g) {
    if (f.W.is_b_letter(g)) continue;
    CHECK_MESSAGE(f.W.inversion_identity(g), G.name(g));
  }
}

TEST_CASE("factorize basics") {
  Fixture f(2);
  auto& U = f.U;
  auto& W = f.W;
  const GeneratorTable& G = f.L.gens();

  // Pure B input is left intact.
  BSum fh = W.factorize(U.gen(cartan(1)));
  REQUIRE(fh.size() == 1);
  CHECK(fh.begin()->first.a.empty());
  CHECK(fh.begin()->second == 1);

  // A centralizer generator factorizes to a single A letter.
  BSum fa = W.factorize(W.a_value({AKind::SumK1, 2, 0}));
  REQUIRE(fa.size() == 1);
  CHECK(fa.begin()->first.b.is_unit());
  CHECK(fa.begin()->first.a ==
        std::vector<ALabel>{ALabel{AKind::SumK1, 2, 0}});

  // X_{e_k+e_1} factorizes into the two summands of the display.
  BSum fx = W.factorize(U.gen(sum_root(1, 2)));
  CHECK(fx.size() == 2);
  bool saw_a = false, saw_b = false;
  for (const auto& [w, c] : fx) {
    if (w.a.size() == 1) {
      // X_{e_1-e_k}^-1 X_{2e_1} (x) A_{e_k+e_1}
      CHECK(w.b.exponent(G.index(diff_root(1, 2))) == -1);
      CHECK(w.b.exponent(G.index(sum_root(1, 1))) == 1);
      CHECK(c == 1);
      saw_a = true;
    } else {
      CHECK(w.b.exponent(G.h(2)) == 1);
      CHECK(c == 1);
      saw_b = true;
    }
  }
  CHECK(saw_a);
  CHECK(saw_b);
}

TEST_CASE("factorize round trip on random elements") {
  Fixture f(2);
  Rng rng(515);
  const GeneratorTable& G = f.L.gens();
  for (int t = 0; t < 60; ++t) {
    NcPoly p(2);
    for (int term = 0, k = (int)rng.range(1, 2); term < k; ++term) {
      NcPoly mono = f.U.one();
      for (int i = 0, len = (int)rng.range(1, 2); i < len; ++i) {
        GenIndex g = (GenIndex)rng.below(G.size());
        mono = f.U.multiply(
            mono, f.U.gen(g, G.invertible(g) && rng.below(2) ? -1 : 1));
      }
      mono *= rat(rng.range(-5, 5) * 2 + 1, rng.range(1, 4));
      p += mono;
    }
    CHECK(f.W.expand(f.W.factorize(p)) == p);
  }
}

TEST_CASE("A-commutators close inside the centralizer") {
  Fixture f(2);
  const auto& labels = f.W.labels();
  // [A, A] = 0
  bool triv = false;
  BSum self = f.W.a_commutator_closure(labels[0], labels[0], &triv);
  CHECK(self.empty());
  CHECK(triv);

  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      bool trivial = false;
      f.W.a_commutator_closure(labels[i], labels[j], &trivial);
      CHECK_MESSAGE(trivial,
                    ("[" + labels[i].str() + "," + labels[j].str() + "]"));
      NcPoly c =
          f.U.commutator(f.W.a_value(labels[i]), f.W.a_value(labels[j]));
      CHECK(f.W.centralizer_check(c));
    }
}

TEST_CASE("PBW independence of ordered A-monomials") {
  Fixture f(2);
  CHECK(f.W.pbw_independence(0));
  CHECK(f.W.pbw_independence(1));
  CHECK(f.W.pbw_independence(2));
  CHECK(f.W.a_monomials(1).size() == 7);   // unit + 6 letters
  CHECK(f.W.a_monomials(2).size() == 28);  // + 21 ordered pairs
}

TEST_CASE("casimir") {
  Fixture f(2);
  const NcPoly& c = f.W.casimir();
  for (GenIndex g = 0; g < (GenIndex)f.L.dim(); ++g)
    CHECK(f.U.commutator(c, f.U.gen(g)).is_zero());
  CHECK(f.W.centralizer_check(c));
  // Dual-basis pairing well defined: the Gram matrix inverted without
  // throwing inside casimir(); rebuild it here and check exact rank can
  // also be read off the kernel.
  const GeneratorTable& G = f.L.gens();
  RatMatrix gram = mat_zero(f.L.dim(), f.L.dim());
  for (int a = 0; a < f.L.dim(); ++a)
    for (int b = 0; b < f.L.dim(); ++b)
      gram[a][b] =
          mat_trace(mat_mul(G.matrix((GenIndex)a), G.matrix((GenIndex)b)));
  CHECK(dense_kernel(gram).empty());
}

TEST_CASE("golden: A generator normal forms at n=2") {
  Fixture f(2);
  std::ifstream in(std::string(SPW_TEST_DATA_DIR) + "/a_generators_n2.txt");
  REQUIRE(in.good());
  std::string line;
  for (const ALabel& l : f.W.labels()) {
    REQUIRE(std::getline(in, line));
    CHECK(line == l.str() + " = " + f.U.to_text(f.W.a_value(l)));
  }
}
