#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spw/lie.hpp"

namespace spw {

// A PBW normal-form monomial: generator powers sorted by the global
// generator order, exponents nonzero, negative exponents only on the
// invertible (Ore) generators.
class PbwMonomial {
 public:
  using Factor = std::pair<GenIndex, std::int32_t>;

  PbwMonomial() = default;
  static PbwMonomial power(GenIndex g, std::int32_t e) {
    PbwMonomial m;
    if (e != 0) m.f_.push_back({g, e});
    return m;
  }

  const std::vector<Factor>& factors() const { return f_; }
  bool is_unit() const { return f_.empty(); }

  // Sum of |exponents|; inverse letters count positively.
  int abs_degree() const {
    int d = 0;
    for (const auto& [_, e] : f_) d += e < 0 ? -e : e;
    return d;
  }

  std::int32_t exponent(GenIndex g) const {
    for (const auto& [h, e] : f_)
      if (h == g) return e;
    return 0;
  }

  bool operator==(const PbwMonomial&) const = default;
  bool operator<(const PbwMonomial& o) const { return f_ < o.f_; }

  // Used by the straightening engine, which guarantees order and nonzero
  // exponents before handing the factor list over.
  static PbwMonomial from_sorted(std::vector<Factor> f) {
    PbwMonomial m;
    m.f_ = std::move(f);
    return m;
  }

 private:
  std::vector<Factor> f_;
};

// Sparse element of U_S in normal form.  Two NcPolys are equal iff their
// term maps are identical; no zero coefficients are stored.
class NcPoly {
 public:
  using Terms = std::map<PbwMonomial, Rational>;

  NcPoly() : rank_(0) {}
  explicit NcPoly(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const NcPoly&) const = default;

  void add_term(const PbwMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }

  // Max abs_degree over terms (0 for the zero polynomial).
  int degree() const;

 private:
  int rank_;
  Terms terms_;
};

// The localized enveloping algebra U_S over a fixed LieAlgebra.  Products
// are straightened into PBW normal form:
//
//   g_b g_a           -> g_a g_b + [g_b, g_a]          (out-of-order letters)
//   s^-1 g            -> sum_{k=0..2} (-1)^k (ad s)^k(g) s^-(k+1)
//   g s^-1            -> sum_{k=0..2} s^-(k+1) (ad s)^k(g)
//
// The inverse-passing rules are closed forms valid because (ad s)^3 = 0
// for every Ore letter s, which makes termination manifest.  A step
// budget converts any nontermination bug into a hard error.
class UsAlgebra {
 public:
  explicit UsAlgebra(const LieAlgebra& lie,
                     std::uint64_t step_budget = 200'000'000);

  const LieAlgebra& lie() const { return *lie_; }
  const GeneratorTable& gens() const { return lie_->gens(); }
  int rank() const { return lie_->rank(); }

  NcPoly zero() const { return NcPoly(rank()); }
  NcPoly one() const {
    NcPoly p(rank());
    p.add_term(PbwMonomial(), 1);
    return p;
  }
  NcPoly gen(GenIndex g, std::int32_t e = 1) const;
  NcPoly gen(const GeneratorId& g, std::int32_t e = 1) const {
    return gen(gens().index(g), e);
  }
  NcPoly inject(const LieElement& x) const;

  NcPoly multiply(const NcPoly& p, const NcPoly& q) const;
  NcPoly commutator(const NcPoly& p, const NcPoly& q) const;
  NcPoly pow(const NcPoly& p, int k) const;  // k >= 0

  // sigma extended multiplicatively to U_S.  Defined on monomials whose
  // inverse letters are fixed by sigma (X_{2e_1}); sigma(X_{e_1-e_j}) =
  // X_{e_1-e_j} + X_{2e_1} has no inverse inside U_S, so such arguments
  // are rejected.
  NcPoly apply_sigma(const NcPoly& p) const;

  // Canonical text form: terms in monomial order, coefficients as p/q.
  std::string to_text(const NcPoly& p) const;

 private:
  const LieAlgebra* lie_;
  std::uint64_t budget_;

  struct Item {
    Rational coeff;
    std::vector<PbwMonomial::Factor> word;
    std::size_t scan_from = 0;
  };
  void check_rank(const NcPoly& p) const;
  NcPoly normalize(std::vector<Item> work) const;
};

}  // namespace spw
