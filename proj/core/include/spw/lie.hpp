#pragma once

#include <map>
#include <optional>
#include <string>

#include "spw/generators.hpp"

namespace spw {

// Exact linear combination of basis generators of sp(2n) at a fixed rank.
class LieElement {
 public:
  using Terms = std::map<GenIndex, Rational>;

  LieElement() = default;
  static LieElement unit(GenIndex g) {
    LieElement x;
    x.terms_[g] = 1;
    return x;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const LieElement&) const = default;

  void add(GenIndex g, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  LieElement& operator+=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
  }
  LieElement& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [_, v] : terms_) v *= c;
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }

 private:
  Terms terms_;
};

// Test hook for the negative-control suite: adds delta * g to the cached
// bracket [a, b] after the table has been computed from the matrix
// realization.  Verification suites must then report a failure.
struct BracketCorruption {
  GenIndex a, b, g;
  Rational delta;
};

// The finite data of sp(2n).  Structure constants are never hand coded:
// every bracket is computed once from the 2n x 2n matrix realization and
// cached.  All values are immutable after construction.
class LieAlgebra {
 public:
  explicit LieAlgebra(int rank,
                      std::optional<BracketCorruption> corruption = {});

  const GeneratorTable& gens() const { return gens_; }
  int rank() const { return gens_.rank(); }
  int dim() const { return gens_.size(); }

  const LieElement& bracket(GenIndex a, GenIndex b) const {
    return table_[a * dim() + b];
  }
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  RatMatrix matrix_of(const LieElement& x) const;
  // Expands a matrix known to lie in sp(2n) back into the basis; the
  // caller can certify exactness by rebuilding the matrix.
  LieElement expand(const RatMatrix& m) const;

  int grading(GenIndex g) const { return gens_.grading(g); }

  // tr([x,y] e) on the degree -1 part; throws if an argument leaves it.
  Rational form_minus1(const LieElement& x, const LieElement& y) const;

  // theta: m_n -> Q, X -> tr(X e)/2; throws when x is not in m_n.
  Rational theta(const LieElement& x) const;

  bool in_m(const LieElement& x) const;

  // sigma = exp(-ad X) with X = X_{e_2+e_1} + ... + X_{e_n+e_1}.  The
  // series is finite because ad X is nilpotent; a corrupted bracket
  // table can break nilpotency, in which case sigma_converged() turns
  // false and any sigma() call raises EngineError.
  bool sigma_converged() const { return sigma_ok_; }
  const LieElement& sigma(GenIndex g) const {
    require_sigma();
    return sigma_[g];
  }
  LieElement sigma(const LieElement& x) const;

  // (ad s)^k (y) through the cached table.
  LieElement ad_pow(GenIndex s, int k, GenIndex y) const;

  // dim of the centralizer of e in sp(2n), computed as an exact kernel
  // dimension; used as the oracle for the A-generator count.
  int centralizer_dim_of_e() const;

 private:
  GeneratorTable gens_;
  std::vector<LieElement> table_;
  std::vector<LieElement> sigma_;
  bool sigma_ok_ = true;

  void require_sigma() const {
    if (!sigma_ok_)
      throw EngineError("sigma: ad X is not nilpotent over this table");
  }
};

}  // namespace spw
