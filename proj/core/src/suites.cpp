#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spw/cuspidal.hpp"
#include "spw/report.hpp"

namespace spw {

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  std::string suite;
  std::vector<CheckRecord> out;
  Clock::time_point mark = Clock::now();

  void add(const std::string& id, bool pass, const std::string& detail = "") {
    auto now = Clock::now();
    long long us =
        std::chrono::duration_cast<std::chrono::microseconds>(now - mark)
            .count();
    out.push_back({suite, id, pass, detail, us});
    mark = now;
  }
};

std::string point_str(const Point& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string rat_vec_str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

LieAlgebra make_lie(const RunConfig& cfg) {
  std::optional<BracketCorruption> corr;
  if (cfg.corrupt_bracket) {
    const int d = cfg.n * (2 * cfg.n + 1);
    const long long idx = *cfg.corrupt_bracket;
    if (idx < 0 || idx >= (long long)d * d * d)
      throw std::invalid_argument("corrupt-bracket index out of range");
    corr = BracketCorruption{(GenIndex)(idx / (d * d)),
                             (GenIndex)((idx / d) % d), (GenIndex)(idx % d),
                             Rational(1)};
  }
  return LieAlgebra(cfg.n, corr);
}

OneDimRep onedim_table(const RunConfig& cfg, const WAlgebra& w) {
  OneDimRep rep = one_dim_rep(w);
  if (cfg.corrupt_onedim) {
    const auto& labels = w.labels();
    const int idx = *cfg.corrupt_onedim;
    if (idx < 0 || idx >= (int)labels.size())
      throw std::invalid_argument("corrupt-onedim index out of range");
    rep.scalars[labels[(size_t)idx]] += 1;
  }
  return rep;
}

// Admissible weight parameters: a_i and a_i - 1/2 both non-integral.
std::vector<Rational> admissible_a(Rng& rng, int n) {
  static const std::pair<int, int> fracs[] = {{1, 3}, {2, 3}, {1, 4}, {3, 4},
                                              {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  std::vector<Rational> a;
  for (int i = 0; i < n; ++i) {
    auto [p, q] = fracs[rng.below(8)];
    a.push_back(rat(p, q) + rng.range(-1, 1));
  }
  return a;
}

// ---------------------------------------------------------------- lie --

std::vector<CheckRecord> suite_lie(const RunConfig& cfg) {
  Recorder r{"lie", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  const GeneratorTable& G = L.gens();
  const int d = L.dim();

  r.add("basis-count",
        d == cfg.n * (2 * cfg.n + 1) && (int)(d - G.s_begin()) == cfg.n,
        "dim=" + std::to_string(d));

  {
    bool ok = true;
    std::string wit;
    for (GenIndex a = 0; a < (GenIndex)d && ok; ++a)
      for (GenIndex b = 0; b < (GenIndex)d && ok; ++b)
        if (!(L.bracket(a, b) + L.bracket(b, a)).is_zero()) {
          ok = false;
          wit = "[" + G.name(a) + "," + G.name(b) + "]";
        }
    r.add("antisymmetry", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (GenIndex a = 0; a < (GenIndex)d && ok; ++a)
      for (GenIndex b = (GenIndex)(a + 1); b < (GenIndex)d && ok; ++b)
        for (GenIndex c = (GenIndex)(b + 1); c < (GenIndex)d && ok; ++c) {
          LieElement s = L.bracket(L.bracket(a, b), LieElement::unit(c));
          s += L.bracket(L.bracket(b, c), LieElement::unit(a));
          s += L.bracket(L.bracket(c, a), LieElement::unit(b));
          if (!s.is_zero()) {
            ok = false;
            wit = "(" + G.name(a) + "," + G.name(b) + "," + G.name(c) + ")";
          }
        }
    r.add("jacobi", ok, wit);
  }
  {
    // Cached table vs direct matrix commutator, re-expanded exactly.
    bool ok = true;
    std::string wit;
    for (GenIndex a = 0; a < (GenIndex)d && ok; ++a)
      for (GenIndex b = 0; b < (GenIndex)d && ok; ++b) {
        RatMatrix mc = mat_commutator(G.matrix(a), G.matrix(b));
        if (!(L.expand(mc) == L.bracket(a, b)) ||
            !mat_is_zero(mat_sub(L.matrix_of(L.bracket(a, b)), mc))) {
          ok = false;
          wit = "[" + G.name(a) + "," + G.name(b) + "]";
        }
      }
    r.add("closure", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (GenIndex a = 0; a < (GenIndex)d && ok; ++a)
      for (GenIndex b = 0; b < (GenIndex)d && ok; ++b) {
        const int expect = G.grading(a) + G.grading(b);
        for (const auto& [g, _] : L.bracket(a, b).terms())
          if (G.grading(g) != expect) {
            ok = false;
            wit = "[" + G.name(a) + "," + G.name(b) + "] leaves degree " +
                  std::to_string(expect);
          }
      }
    r.add("grading-additive", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (GenIndex s = G.s_begin(); s < (GenIndex)d && ok; ++s)
      for (GenIndex y = 0; y < (GenIndex)d && ok; ++y)
        if (!L.ad_pow(s, 3, y).is_zero()) {
          ok = false;
          wit = "(ad " + G.name(s) + ")^3 " + G.name(y);
        }
    r.add("ad-s-cubed", ok, wit);
  }
  if (!L.sigma_converged()) {
    r.add("sigma-pins", false, "ad X is not nilpotent over this table");
    r.add("sigma-bracket", false, "ad X is not nilpotent over this table");
  } else {
    {
      // sigma pinned to the two printed values.
      bool ok = true;
      const GenIndex s11 = G.index(sum_root(1, 1));
      if (!(L.sigma(s11) == LieElement::unit(s11))) ok = false;
      for (int i = 2; i <= cfg.n; ++i) {
        LieElement want = LieElement::unit(G.index(diff_root(1, i)));
        want.add(s11, 1);
        if (!(L.sigma(G.index(diff_root(1, i))) == want)) ok = false;
      }
      r.add("sigma-pins", ok);
    }
    {
      bool ok = true;
      std::string wit;
      for (GenIndex a = 0; a < (GenIndex)d && ok; ++a)
        for (GenIndex b = 0; b < (GenIndex)d && ok; ++b) {
          LieElement lhs = L.sigma(L.bracket(a, b));
          LieElement rhs = L.bracket(L.sigma(a), L.sigma(b));
          if (!(lhs == rhs)) {
            ok = false;
            wit = "(" + G.name(a) + "," + G.name(b) + ")";
          }
        }
      r.add("sigma-bracket", ok, wit);
    }
  }
  {
    bool ok = L.theta(LieElement::unit(G.index(sum_root(1, 1)))) == 1;
    for (int j = 2; j <= cfg.n; ++j)
      ok = ok && L.theta(LieElement::unit(G.index(diff_root(1, j)))) == 0;
    LieElement lin = LieElement::unit(G.index(sum_root(1, 1)));
    lin *= 3;
    lin.add(G.index(diff_root(1, 2)), 1);
    ok = ok && L.theta(lin) == 3;
    r.add("theta-values", ok);
  }
  {
    // Gram matrix of tr([x,y]e) on the degree -1 basis; the span of the
    // X_{e_1-e_i} must be isotropic.
    std::vector<GenIndex> basis;
    for (GenIndex g = 0; g < (GenIndex)d; ++g)
      if (G.grading(g) == -1) basis.push_back(g);
    const int k = (int)basis.size();
    RatMatrix gram = mat_zero(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        gram[i][j] = L.form_minus1(LieElement::unit(basis[i]),
                                   LieElement::unit(basis[j]));
    bool nondeg = true;
    try {
      mat_inverse(gram);
    } catch (const std::invalid_argument&) {
      nondeg = false;
    }
    bool skew = true, isotropic = true;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (gram[i][j] != -gram[j][i]) skew = false;
        const GeneratorId gi = G.id(basis[i]), gj = G.id(basis[j]);
        const bool lag_i = gi.kind == GenKind::Diff && gi.i == 1;
        const bool lag_j = gj.kind == GenKind::Diff && gj.i == 1;
        if (lag_i && lag_j && gram[i][j] != 0) isotropic = false;
      }
    r.add("form-minus1", nondeg && skew && isotropic,
          "dim g(-1)=" + std::to_string(k));
  }
  return r.out;
}

// ---------------------------------------------------------------- phi --

std::vector<CheckRecord> suite_phi(const RunConfig& cfg) {
  Recorder r{"phi", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WeylAlgebra W(cfg.n);
  const GeneratorTable& G = L.gens();
  const int d = L.dim();

  {
    bool ok = true;
    std::string wit;
    for (GenIndex a = 0; a < (GenIndex)d && ok; ++a)
      for (GenIndex b = 0; b < (GenIndex)d && ok; ++b) {
        WeylPoly lhs = W.phi(U, U.inject(L.bracket(a, b)));
        WeylPoly rhs = W.commutator(W.phi_gen(U, a), W.phi_gen(U, b));
        if (!(lhs == rhs)) {
          ok = false;
          wit = "(" + G.name(a) + "," + G.name(b) + ")";
        }
      }
    r.add("homomorphism-pairs", ok, wit);
  }
  {
    bool ok = true;
    for (int i = 1; i <= cfg.n && ok; ++i) {
      WeylPoly want = W.multiply(W.t_gen(i), W.d_gen(i)) + rat(1, 2) * W.one();
      ok = W.phi_gen(U, G.h(i)) == want;
    }
    ok = ok && W.phi_gen(U, G.index(sum_root(1, 2))) ==
                   W.multiply(W.t_gen(1), W.t_gen(2));
    ok = ok && W.phi_gen(U, G.index(neg_sum_root(1, 2))) ==
                   rat(-1) * W.multiply(W.d_gen(1), W.d_gen(2));
    ok = ok && W.phi_gen(U, G.index(diff_root(1, 2))) ==
                   W.multiply(W.t_gen(1), W.d_gen(2));
    r.add("pinned-images", ok);
  }
  {
    // tau is an automorphism: it preserves every Weyl relation.
    bool ok = true;
    for (int i = 1; i <= cfg.n && ok; ++i)
      for (int j = 1; j <= cfg.n && ok; ++j) {
        WeylPoly dd = W.commutator(W.tau(W.d_gen(i)), W.tau(W.d_gen(j)));
        WeylPoly tt = W.commutator(W.tau(W.t_gen(i)), W.tau(W.t_gen(j)));
        WeylPoly dt = W.commutator(W.tau(W.d_gen(i)), W.tau(W.t_gen(j)));
        WeylPoly want = i == j ? W.one() : W.zero();
        ok = dd.is_zero() && tt.is_zero() && dt == want;
      }
    ok = ok && W.tau(W.t_gen(1)) == W.t_gen(1) + W.one();
    ok = ok && W.tau(W.d_gen(1)) == W.d_gen(1);
    ok = ok && W.tau(W.d_gen(2)) == W.d_gen(2) + W.one();
    r.add("tau-automorphism", ok);
  }
  {
    // b_iso respects the defining relations of B and round-trips.
    std::vector<GenIndex> bgens;
    for (int i = 1; i <= cfg.n; ++i) bgens.push_back(G.h(i));
    for (GenIndex s = G.s_begin(); s < (GenIndex)d; ++s) bgens.push_back(s);
    bool ok = true;
    std::string wit;
    for (GenIndex x : bgens)
      for (GenIndex y : bgens) {
        WeylPoly lhs = W.b_iso(U, U.commutator(U.gen(x), U.gen(y)));
        WeylPoly rhs = W.commutator(W.b_iso(U, U.gen(x)), W.b_iso(U, U.gen(y)));
        if (!(lhs == rhs)) {
          ok = false;
          wit = "(" + G.name(x) + "," + G.name(y) + ")";
        }
      }
    r.add("biso-relations", ok, wit);

    Rng rng(cfg.seed ^ 0xb150);
    bool rt = true;
    for (int trial = 0; trial < 40 && rt; ++trial) {
      NcPoly p = U.one();
      const int len = rng.range(1, 3);
      for (int i = 0; i < len; ++i) {
        GenIndex g = bgens[rng.below(bgens.size())];
        int e = G.invertible(g) ? (rng.below(2) ? 1 : -1) : 1;
        p = U.multiply(p, U.gen(g, e));
      }
      p *= rat(rng.range(-3, 3) * 2 + 1);
      rt = W.b_iso_inv(U, W.b_iso(U, p)) == p;
    }
    r.add("biso-roundtrip", rt);

    bool sanity = W.b_iso(U, U.gen(sum_root(1, 1))) == W.d_gen(1);
    for (int i = 2; i <= cfg.n; ++i)
      sanity = sanity && W.b_iso(U, U.gen(cartan(i))) ==
                             W.multiply(W.t_gen(i), W.d_gen(i));
    r.add("biso-pins", sanity);
  }
  return r.out;
}

// -------------------------------------------------------- centralizer --

std::vector<CheckRecord> suite_centralizer(const RunConfig& cfg) {
  Recorder r{"centralizer", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WAlgebra W(U);

  r.add("count-vs-oracle",
        (int)W.labels().size() == L.centralizer_dim_of_e(),
        std::to_string(W.labels().size()) + " labels, dim sp^e = " +
            std::to_string(L.centralizer_dim_of_e()));

  for (const ALabel& l : W.labels()) {
    std::string wit;
    bool ok = W.centralizer_check(W.a_value(l), &wit);
    r.add(l.str(), ok, ok ? "" : "fails against " + wit);
  }

  {
    bool ok = true;
    for (int k = 2; k <= cfg.n; ++k) {
      ALabel l{AKind::DiffK1, (std::uint8_t)k, 0};
      NcPoly disp = W.build_a(l, AVariant::Display);
      NcPoly proof = W.build_a(l, AVariant::LemmaProof);
      std::string wit;
      if (!(disp == proof) || !W.centralizer_check(proof, &wit)) ok = false;
    }
    r.add("variant-agreement", ok,
          "display and lemma-proof forms of A(ek-e1) normal-form equally");
  }

  {
    // A negative-control partner: a raw root vector must not centralize.
    std::string wit;
    bool fails = !W.centralizer_check(U.gen(neg_sum_root(1, 1)), &wit);
    r.add("non-member-detected", fails, "X(-2e1) vs " + wit);
  }
  return r.out;
}

// ---------------------------------------------------------- inversion --

std::vector<CheckRecord> suite_inversion(const RunConfig& cfg) {
  Recorder r{"inversion", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WAlgebra W(U);
  const GeneratorTable& G = L.gens();
  for (GenIndex g = 0; g < (GenIndex)G.size(); ++g) {
    if (W.is_b_letter(g)) continue;
    r.add(G.name(g), W.inversion_identity(g));
  }
  return r.out;
}

// ---------------------------------------------------------- factorize --

std::vector<CheckRecord> suite_factorize(const RunConfig& cfg) {
  Recorder r{"factorize", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WAlgebra W(U);
  const GeneratorTable& G = L.gens();
  const int d = G.size();

  {
    // Round trip on random elements of degree <= 2, inverse letters
    // included.
    Rng rng(cfg.seed ^ 0xfac7);
    int bad = 0;
    std::string wit;
    for (int trial = 0; trial < 300; ++trial) {
      NcPoly p(cfg.n);
      const int terms = rng.range(1, 2);
      for (int t = 0; t < terms; ++t) {
        NcPoly mono = U.one();
        const int len = rng.range(1, 2);
        for (int i = 0; i < len; ++i) {
          GenIndex g = (GenIndex)rng.below(d);
          int e = 1;
          if (G.invertible(g)) e = rng.below(2) ? 1 : -1;
          mono = U.multiply(mono, U.gen(g, e));
        }
        mono *= rat(rng.range(-4, 4) * 2 + 1, rng.range(1, 3));
        p += mono;
      }
      if (!(W.expand(W.factorize(p)) == p)) {
        ++bad;
        if (wit.empty()) wit = "seed trial " + std::to_string(trial);
      }
    }
    r.add("roundtrip-300", bad == 0,
          bad ? wit : "300 random elements, exact");
  }
  {
    r.add("pure-b-left-intact",
          W.bsum_text(W.factorize(U.gen(cartan(1)))) == "1*(1*h1)");
    BSum f = W.factorize(W.a_value(W.labels().front()));
    bool single = f.size() == 1 && f.begin()->first.b.is_unit() &&
                  f.begin()->first.a.size() == 1 &&
                  f.begin()->second == 1;
    r.add("a-value-single-letter", single);
  }
  {
    // Commutators of A generators stay inside the centralizer: trivial
    // B-parts after factorization and raw centralizer membership.
    Rng rng(cfg.seed ^ 0xc105);
    const auto& labels = W.labels();
    std::vector<std::pair<ALabel, ALabel>> pairs;
    if (cfg.n == 2) {
      for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
          pairs.push_back({labels[i], labels[j]});
    } else {
      for (int t = 0; t < 10; ++t) {
        size_t i = rng.below(labels.size()), j = rng.below(labels.size());
        if (i == j) continue;
        pairs.push_back({labels[i], labels[j]});
      }
    }
    bool ok = true;
    std::string wit;
    for (const auto& [la, lb] : pairs) {
      bool trivial = false;
      W.a_commutator_closure(la, lb, &trivial);
      NcPoly c = U.commutator(W.a_value(la), W.a_value(lb));
      std::string cw;
      if (!trivial || !W.centralizer_check(c, &cw)) {
        ok = false;
        wit = "[" + la.str() + "," + lb.str() + "]";
        break;
      }
    }
    r.add("a-commutator-closure", ok, wit);
  }
  return r.out;
}

// ---------------------------------------------------------------- pbw --

std::vector<CheckRecord> suite_pbw(const RunConfig& cfg) {
  Recorder r{"pbw", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WAlgebra W(U);
  for (int deg = 0; deg <= cfg.max_degree; ++deg) {
    bool ok = W.pbw_independence(deg);
    r.add("independence-deg" + std::to_string(deg), ok,
          std::to_string(W.a_monomials(deg).size()) + " ordered A-monomials");
  }
  return r.out;
}

// ------------------------------------------------------------- onedim --

std::vector<CheckRecord> suite_onedim(const RunConfig& cfg) {
  Recorder r{"onedim", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WeylAlgebra Wy(cfg.n);
  WAlgebra W(U);
  PtauModule P(U, Wy);
  OneDimRep rep = onedim_table(cfg, W);

  const auto t1 = P.t1_inv();
  for (const ALabel& l : W.labels()) {
    PtauModule::Vec got = P.act(W.a_value(l), t1);
    PtauModule::Vec want = t1;
    for (auto& [_, c] : want) c *= rep.scalars.at(l);
    bool ok = got == want;
    std::string detail = "scalar " + rat_str(rep.scalars.at(l));
    if (!ok) {
      detail += ", action gives ";
      detail += got.size() == 1 && got.begin()->first == t1.begin()->first
                    ? rat_str(got.begin()->second)
                    : "a non-scalar vector";
    }
    r.add(l.str(), ok, detail);
  }
  return r.out;
}

// -------------------------------------------------------- qe-whittaker --

std::vector<CheckRecord> suite_qe(const RunConfig& cfg) {
  Recorder r{"qe-whittaker", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WeylAlgebra Wy(cfg.n);
  WAlgebra W(U);
  QeModule Q(U);
  const GeneratorTable& G = L.gens();
  const auto v1 = Q.vacuum();

  {
    bool ok = true;
    for (GenIndex s = G.s_begin(); s < (GenIndex)G.size(); ++s)
      ok = ok && Q.act_gen(s, v1) == v1;
    r.add("vacuum-fixed-by-ore-letters", ok);
  }
  {
    // (X_{2e_1}-1)^k h_1^m v_1 vanishes exactly when k > m.
    const GenIndex s11 = G.index(sum_root(1, 1));
    bool ok = true;
    for (int m = 0; m <= 3 && ok; ++m) {
      QeModule::Vec v = Q.act(U.pow(U.gen(cartan(1)), m), v1);
      for (int k = 1; k <= m + 1; ++k) {
        QeModule::Vec sv = Q.act_gen(s11, v);
        for (const auto& [key, c] : v) {
          auto it = sv.find(key);
          if (it != sv.end()) {
            it->second -= c;
            if (it->second == 0) sv.erase(it);
          } else {
            sv[key] = -c;
          }
        }
        v = std::move(sv);
        const bool zero = v.empty();
        if ((k > m) != zero) ok = false;
      }
    }
    r.add("unipotent-nilpotency", ok);
  }
  for (const ALabel& l : W.labels()) {
    QeModule::Vec w = Q.act(W.a_value(l), v1);
    r.add("whittaker-" + l.str(), Q.is_whittaker(w));
  }
  {
    // Module axiom under the twisted action, random low-degree vectors.
    Rng rng(cfg.seed ^ 0x9e0e);
    const int d = G.size();
    bool ok = true;
    std::string wit;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      QeModule::Vec v;
      for (int t = 0; t < 2; ++t) {
        GenIndex g1 = (GenIndex)rng.below(G.s_begin());
        GenIndex g2 = (GenIndex)rng.below(G.s_begin());
        QeModule::Vec w = Q.act_gen(g1, Q.act_gen(g2, v1));
        for (const auto& [key, c] : w) {
          auto [it, fresh] = v.emplace(key, c * rng.range(1, 3));
          if (!fresh) it->second += c;
        }
      }
      for (int pair = 0; pair < 12 && ok; ++pair) {
        GenIndex x = (GenIndex)rng.below(d), y = (GenIndex)rng.below(d);
        QeModule::Vec lhs;
        for (const auto& [g, c] : L.bracket(x, y).terms())
          for (const auto& [key, vc] : Q.act_gen(g, v)) {
            auto [it, fresh] = lhs.emplace(key, vc * c);
            if (!fresh) {
              it->second += vc * c;
              if (it->second == 0) lhs.erase(it);
            }
          }
        QeModule::Vec rhs = Q.act_gen(x, Q.act_gen(y, v));
        for (const auto& [key, c] : Q.act_gen(y, Q.act_gen(x, v))) {
          auto [it, fresh] = rhs.emplace(key, -c);
          if (!fresh) {
            it->second -= c;
            if (it->second == 0) rhs.erase(it);
          }
        }
        if (lhs != rhs) {
          ok = false;
          wit = "pair (" + G.name(x) + "," + G.name(y) + ")";
        }
      }
    }
    r.add("twisted-module-axiom", ok, wit);
  }
  {
    PtauModule P(U, Wy);
    auto win = ptau_window(cfg.n, 4, 3);
    auto wh = whittaker_vectors(P, win);
    r.add("ptau-window-wh-dim",
          wh.size() == 1,
          "dim = " + std::to_string(wh.size()));
    // Round trip of the inverse action on random window vectors.
    Rng rng(cfg.seed ^ 0x1e5e);
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      PtauModule::Vec v;
      for (int t = 0; t < 3; ++t) {
        auto key = win.basis[rng.below(win.basis.size())];
        v[key] = rat(rng.range(-3, 3) * 2 + 1);
      }
      for (GenIndex s = G.s_begin(); s < (GenIndex)G.size() && ok; ++s)
        ok = P.act_gen(s, P.act_inv(s, v)) == v;
    }
    r.add("inverse-action-roundtrip", ok);
  }
  return r.out;
}

// ----------------------------------------------------------- cuspidal --

std::vector<CheckRecord> suite_cuspidal(const RunConfig& cfg) {
  Recorder r{"cuspidal", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WAlgebra W(U);
  Rng rng(cfg.seed ^ 0xc0da);
  const std::vector<Rational> a = admissible_a(rng, cfg.n);
  const int radius = cfg.window_radius;

  GaModule Gm(L, a);
  NaModule Nm(L, a);
  const auto interior = box_points(cfg.n, radius);
  const auto even_interior = even_box_points(cfg.n, radius);

  {
    RelationReport rep = relation_report(Gm, interior);
    std::string detail = std::to_string(rep.checked) + " checks, a=" +
                         rat_vec_str(a);
    if (!rep.ok())
      detail = "violation at pair [" +
               L.gens().name(rep.violations[0].x) + "," +
               L.gens().name(rep.violations[0].y) + "] m=" +
               point_str(rep.violations[0].at);
    r.add("ga-relations", rep.ok(), detail);
  }
  {
    RelationReport rep = relation_report(Nm, even_interior);
    r.add("na-relations", rep.ok(),
          std::to_string(rep.checked) + " checks");
  }
  {
    InjectivityReport rep = injectivity_report(Gm, interior);
    r.add("ga-injectivity", rep.ok(),
          std::to_string(rep.root_vectors_checked) + " root vectors");
    InjectivityReport nrep = injectivity_report(Nm, even_interior);
    r.add("na-injectivity", nrep.ok(),
          std::to_string(nrep.root_vectors_checked) + " root vectors");
  }
  {
    // An inadmissible parameter must be flagged.
    std::vector<Rational> bad = a;
    bad[cfg.n - 1] = rat(1, 2);  // a_n - 1/2 integral
    GaModule Gbad(L, bad);
    InjectivityReport rep = injectivity_report(Gbad, interior);
    r.add("ga-inadmissible-flagged", !rep.ok(),
          std::to_string(rep.flagged.size()) + " vanishing coefficients");
  }
  {
    bool ok = true;
    std::set<std::vector<Rational>> seen;
    for (const Point& p : interior) {
      auto wt = Gm.weight(p);
      if (!seen.insert(wt).second) ok = false;
      if (weight_space(Gm, interior, wt).size() != 1) ok = false;
    }
    // A weight off the coset lattice has empty weight space.
    auto off = Gm.weight(interior.front());
    off[0] += rat(1, 2);
    ok = ok && weight_space(Gm, interior, off).empty();
    r.add("weight-spaces-dim-1", ok,
          std::to_string(interior.size()) + " window labels");
  }
  {
    r.add("support-single-coset",
          support_on_single_coset(Gm, interior) &&
              support_on_single_coset(Nm, even_interior));
  }
  {
    // Independent route: reconstruction expressions plus the
    // one-dimensional scalars must reproduce the printed coefficients.
    std::vector<Rational> ash = a;
    for (auto& x : ash) x += rat(1, 2);
    GaModule Gs(L, ash);
    OneDimRep rep = onedim_table(cfg, W);
    const GeneratorTable& G = L.gens();
    bool ok = true;
    std::string wit;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      GenIndex g = (GenIndex)rng.below(G.size());
      if (W.is_b_letter(g)) continue;
      Point m(cfg.n);
      for (int i = 0; i < cfg.n; ++i) m[i] = rng.range(-radius, radius);
      wit = ga_cross_check(Gs, W, rep, m, g);
      if (!wit.empty()) ok = false;
    }
    r.add("action-cross-check", ok, wit);
  }
  return r.out;
}

// -------------------------------------------------------- intertwiner --

std::vector<CheckRecord> suite_intertwiner(const RunConfig& cfg) {
  Recorder r{"intertwiner", {}, Clock::now()};
  LieAlgebra L = make_lie(cfg);
  UsAlgebra U(L);
  WAlgebra W(U);
  const NcPoly& cas = W.casimir();
  Rng rng(cfg.seed ^ 0x117e);

  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Rational> a = admissible_a(rng, cfg.n);
    std::vector<Rational> ash = a;
    for (auto& x : ash) x += rat(1, 2);
    GaModule Gm(L, ash);
    NaModule Nm(L, a);
    IntertwinerReport rep = intertwiner_search(Gm, Nm, cfg.window_radius);
    const Point origin(cfg.n, 0);
    const Rational cg = central_scalar(Gm, cas, origin);
    const Rational cn = central_scalar(Nm, cas, origin);
    const bool ok = rep.exists && cg == cn;
    std::string detail = "a=" + rat_vec_str(a) + ", " +
                         std::to_string(rep.edges_checked) +
                         " edges, casimir " + rat_str(cg);
    if (!rep.exists) detail += ", obstruction: " + rep.obstruction;
    if (cg != cn) detail += ", casimir mismatch " + rat_str(cn);
    r.add("a-sample-" + std::to_string(trial), ok, detail);
  }
  return r.out;
}

using SuiteFn = std::vector<CheckRecord> (*)(const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"lie", suite_lie},
      {"phi", suite_phi},
      {"centralizer", suite_centralizer},
      {"inversion", suite_inversion},
      {"factorize", suite_factorize},
      {"pbw", suite_pbw},
      {"onedim", suite_onedim},
      {"qe-whittaker", suite_qe},
      {"cuspidal", suite_cuspidal},
      {"intertwiner", suite_intertwiner},
  };
  return reg;
}

}  // namespace

std::vector<std::string> known_suites() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

Report run_suites(const RunConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 4)
    throw std::invalid_argument("rank must be in 2..4");
  if (cfg.window_radius < 2)
    throw std::invalid_argument("window radius must be >= 2");
  if (cfg.max_degree < 1)
    throw std::invalid_argument("max degree must be >= 1");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (cfg.format != "text" && cfg.format != "json")
    throw std::invalid_argument("format must be text or json");

  std::vector<std::pair<std::string, SuiteFn>> selected;
  if (cfg.suites.empty()) {
    selected = registry();
  } else {
    std::set<std::string> taken;
    for (const std::string& want : cfg.suites) {
      bool found = false;
      for (const auto& [name, fn] : registry())
        if (name == want) {
          if (taken.insert(name).second) selected.push_back({name, fn});
          found = true;
        }
      if (!found) throw std::invalid_argument("unknown suite: " + want);
    }
  }

  Report rep;
  rep.config = cfg;
  std::vector<std::vector<CheckRecord>> results(selected.size());
  std::atomic<size_t> cursor{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= selected.size()) return;
      try {
        results[i] = selected[i].second(cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::min<int>(cfg.jobs, (int)selected.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  for (auto& rs : results)
    rep.checks.insert(rep.checks.end(), rs.begin(), rs.end());
  rep.sort_canonical();
  return rep;
}

}  // namespace spw
