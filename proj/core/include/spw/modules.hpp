#pragma once

#include <map>
#include <vector>

#include "spw/walgebra.hpp"
#include "spw/weyl.hpp"

namespace spw {

// Desk-scale model of the twisted Gelfand-Graev module Q_e^sigma.
// Vectors are stored through the PBW identification of Q_e with the span
// of words in the letters outside m_n applied to the cyclic vector v_1;
// the twisted action of u is the plain action of sigma(u), and the m_n
// suffix of every normal-formed word evaluates through theta.
class QeModule {
 public:
  using Vec = std::map<PbwMonomial, Rational>;

  explicit QeModule(const UsAlgebra& us) : us_(&us) {}

  const UsAlgebra& us() const { return *us_; }

  Vec vacuum() const { return {{PbwMonomial(), Rational(1)}}; }

  // Twisted action of a single generator (no series needed).
  Vec act_gen(GenIndex g, const Vec& v) const;

  // Inverse of the twisted action of an Ore letter: sum_k (1 - s)^k v.
  // The series is finite because s - 1 acts locally nilpotently; the
  // budget turns a bug into a hard error instead of a wrong answer.
  Vec act_inv(GenIndex s, const Vec& v, int budget = 64) const;

  // Action of a general element of U_S (inverse letters only on S).
  Vec act(const NcPoly& u, const Vec& v) const;

  bool is_whittaker(const Vec& v) const;

 private:
  const UsAlgebra* us_;
  Vec reduce(const NcPoly& p) const;  // theta-evaluates the m_n suffixes
};

// The twisted Weyl module P^tau on (C[t_1^{+-1}]/C[t_1]) (x) C[t_2..t_n]:
// sp(2n) acts through tau . phi, and any term with t_1-exponent >= 0 is
// dropped at write time (the quotient is enforced eagerly).
class PtauModule {
 public:
  using Key = std::vector<std::int32_t>;  // t-exponents; [0] <= -1, rest >= 0
  using Vec = std::map<Key, Rational>;

  PtauModule(const UsAlgebra& us, const WeylAlgebra& w);

  const UsAlgebra& us() const { return *us_; }
  int n() const { return w_->vars(); }
  Vec t1_inv() const;

  Vec apply_weyl(const WeylPoly& op, const Vec& v) const;
  Vec act_gen(GenIndex g, const Vec& v) const;
  Vec act_inv(GenIndex s, const Vec& v, int budget = 64) const;
  Vec act(const NcPoly& u, const Vec& v) const;

 private:
  const UsAlgebra* us_;
  const WeylAlgebra* w_;
  std::vector<WeylPoly> tau_phi_;  // cached per generator
};

// Scalar table of the one-dimensional C_{U_S}(B)-module V_{-1/2}.
struct OneDimRep {
  int n;
  std::map<ALabel, Rational> scalars;
};

// A_{e_k+e_1} -> -1/2,            A_{e_k+e_l} -> 1/4 - delta_{lk}/2,
// A_{e_i-e_j} -> -1/2,            A_{e_k-e_1} -> -1/4,
// A_{-e_k-e_l} -> -1,             A_{-e_1-e_k} -> -1/2 - n,
// A_{-2e_1}   -> 1/4 - n^2.
OneDimRep one_dim_rep(const WAlgebra& w);

// Finite window of P^tau closed under the actions of the Ore letters:
// t_1-exponent in [-depth, -1], other exponents in [0, width].
struct PtauWindow {
  std::vector<PtauModule::Key> basis;
  std::map<PtauModule::Key, int> index;
};
PtauWindow ptau_window(int n, int depth, int width);

// Exact joint kernel of (s - 1) over the window, one basis vector per
// kernel dimension.  Throws if the window is not closed under the
// actions of the Ore letters.
std::vector<PtauModule::Vec> whittaker_vectors(const PtauModule& mod,
                                               const PtauWindow& window);

}  // namespace spw
