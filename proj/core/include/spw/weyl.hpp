#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spw/ncpoly.hpp"

namespace spw {

// Normal-ordered monomial t^a d^b of the (localized) Weyl algebra:
// t-exponents never negative, d-exponents arbitrary (D_n^d allows
// inverse powers of the d_i).
struct WeylMonomial {
  std::vector<std::int32_t> t, d;

  bool operator==(const WeylMonomial&) const = default;
  bool operator<(const WeylMonomial& o) const {
    if (t != o.t) return t < o.t;
    return d < o.d;
  }
  bool is_unit() const {
    for (int e : t)
      if (e) return false;
    for (int e : d)
      if (e) return false;
    return true;
  }
};

class WeylPoly {
 public:
  using Terms = std::map<WeylMonomial, Rational>;

  WeylPoly() : n_(0) {}
  explicit WeylPoly(int n) : n_(n) {}

  int vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const WeylPoly&) const = default;

  void add_term(const WeylMonomial& m, const Rational& c);
  WeylPoly& operator+=(const WeylPoly& o);
  WeylPoly& operator-=(const WeylPoly& o);
  WeylPoly& operator*=(const Rational& c);
  friend WeylPoly operator+(WeylPoly a, const WeylPoly& b) { return a += b; }
  friend WeylPoly operator-(WeylPoly a, const WeylPoly& b) { return a -= b; }
  friend WeylPoly operator*(const Rational& c, WeylPoly a) { return a *= c; }

 private:
  int n_;
  Terms terms_;
};

// D_n and its localization D_n^d; also owns the maps into it:
// phi : U(sp_2n) -> D_n and the isomorphism B ~ D_n^d.
class WeylAlgebra {
 public:
  explicit WeylAlgebra(int n) : n_(n) {}

  int vars() const { return n_; }
  WeylPoly zero() const { return WeylPoly(n_); }
  WeylPoly one() const;
  WeylPoly t_gen(int i, std::int32_t e = 1) const;  // i in 1..n, e >= 0
  WeylPoly d_gen(int i, std::int32_t e = 1) const;  // any e

  WeylPoly multiply(const WeylPoly& p, const WeylPoly& q) const;
  WeylPoly commutator(const WeylPoly& p, const WeylPoly& q) const;
  WeylPoly pow(const WeylPoly& p, int k) const;

  // phi: h_i -> t_i d_i + 1/2, X_{e_i-e_j} -> t_i d_j,
  //      X_{e_i+e_j} -> t_i t_j, X_{-e_i-e_j} -> -d_i d_j.
  // Rejects monomials with inverse letters: no sp generator has an
  // invertible image, so phi does not extend to the localization.
  WeylPoly phi(const UsAlgebra& us, const NcPoly& p) const;
  WeylPoly phi_gen(const UsAlgebra& us, GenIndex g) const;

  // tau: t_i -> t_i + delta_{i1}, d_i -> d_i + 1 - delta_{i1}.
  // An automorphism of D_n; on the localization it is only defined when
  // every negative d-exponent sits on d_1 (which tau fixes).
  WeylPoly tau(const WeylPoly& p) const;

  // The isomorphism B -> D_n^d inverse to
  //   d_1 -> X_{2e_1},  t_1 -> -1/2 (h_1+...+h_n) X_{2e_1}^-1,
  //   d_i -> X_{e_1-e_i},  t_i -> h_i X_{e_1-e_i}^-1.
  // Argument must lie in B (letters among h_i and the Ore generators).
  WeylPoly b_iso(const UsAlgebra& us, const NcPoly& p) const;
  NcPoly b_iso_inv(const UsAlgebra& us, const WeylPoly& p) const;

  std::string to_text(const WeylPoly& p) const;

 private:
  int n_;
  void check(const WeylPoly& p) const;
};

}  // namespace spw
