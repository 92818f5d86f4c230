#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spw/ncpoly.hpp"

namespace spw {

// Label of one generator of the centralizer C_{U_S}(B).  Index slots k, l
// run over 2..n; the degenerate families use only k.
enum class AKind : std::uint8_t {
  SumK1,   // A_{e_k+e_1}
  SumKL,   // A_{e_k+e_l},  k <= l
  DiffIJ,  // A_{e_i-e_j},  i != j   (k = i, l = j)
  DiffK1,  // A_{e_k-e_1}
  Neg11,   // A_{-2e_1}
  Neg1K,   // A_{-e_1-e_k}
  NegKL,   // A_{-e_k-e_l}, k <= l
};

struct ALabel {
  AKind kind;
  std::uint8_t k = 0, l = 0;

  bool operator==(const ALabel&) const = default;
  auto operator<=>(const ALabel&) const = default;
  std::string str() const;
};

// One summand shape of the B (x) C decomposition: a B-monomial times a
// word in A-letters.  B letters commute with A letters, so every product
// of the two kinds of symbols can be written this way.
struct BWord {
  PbwMonomial b;
  std::vector<ALabel> a;

  bool operator==(const BWord&) const = default;
  bool operator<(const BWord& o) const {
    if (!(b == o.b)) return b < o.b;
    return a < o.a;
  }
};
using BSum = std::map<BWord, Rational>;

// A_{e_k-e_1} can be written with two different sum ranges and
// placements of the I_n + 2 factor.  Both forms are implemented;
// centralizer membership is the oracle that certifies them, and the two
// normal forms are compared directly (they agree).
enum class AVariant { Display, LemmaProof };

// Generators of the centralizer C_{U_S}(B), the inversion identities
// expressing every non-B root vector through them, and the induced
// factorization U_S = B * C_{U_S}(B).
class WAlgebra {
 public:
  explicit WAlgebra(const UsAlgebra& us);

  const UsAlgebra& us() const { return *us_; }
  int rank() const { return us_->rank(); }

  const std::vector<ALabel>& labels() const { return labels_; }
  const NcPoly& a_value(const ALabel& l) const;
  NcPoly build_a(const ALabel& l, AVariant v) const;

  // h_1..h_n and the Ore letters; their inverses are appended by the
  // centralizer check itself.
  std::vector<GenIndex> b_generator_list() const;
  bool is_b_letter(GenIndex g) const {
    return us_->gens().id(g).kind == GenKind::Cartan ||
           us_->gens().invertible(g);
  }

  // True iff p commutes with every generator of B including inverses.
  // On failure *witness names the offending generator.
  bool centralizer_check(const NcPoly& p, std::string* witness = nullptr) const;

  // Eqs.-of-reconstruction check: expanding the A-letters in the stored
  // expression of X_alpha must reproduce exactly inject(X_alpha).
  bool inversion_identity(GenIndex alpha) const;

  // The fully substituted expression of a non-B generator as an element
  // of B (x) <A-words>.
  const BSum& x_expression(GenIndex alpha) const;

  BSum factorize(const NcPoly& p) const;
  NcPoly expand(const BSum& s) const;
  std::string bsum_text(const BSum& s) const;

  // Exact-rank linear independence of ordered A-monomials of total
  // degree <= max_total_degree.
  bool pbw_independence(int max_total_degree) const;
  std::vector<std::vector<ALabel>> a_monomials(int max_total_degree) const;

  // factorize(commutator(A_a, A_b)); trivial_b reports whether every
  // summand carries the identity B-monomial.
  BSum a_commutator_closure(const ALabel& a, const ALabel& b,
                            bool* trivial_b = nullptr) const;

  // Quadratic Casimir from dual bases of the trace form on the defining
  // representation; commutes with all of U_S.
  const NcPoly& casimir() const;

 private:
  const UsAlgebra* us_;
  std::vector<ALabel> labels_;
  mutable std::map<ALabel, NcPoly> a_cache_;
  mutable std::map<GenIndex, BSum> expr_cache_;
  mutable std::optional<NcPoly> casimir_;

  BSum bsum_mul(const BSum& x, const BSum& y) const;
  BSum bsum_of_b(const NcPoly& b) const;
  BSum bsum_of_a(const ALabel& l) const;
  BSum build_x_expression(GenIndex alpha) const;
};

}  // namespace spw
