#include "spw/lie.hpp"

#include <stdexcept>

namespace spw {

LieAlgebra::LieAlgebra(int rank, std::optional<BracketCorruption> corruption)
    : gens_(rank) {
  const int d = dim();
  table_.resize((size_t)d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      RatMatrix c =
          mat_commutator(gens_.matrix((GenIndex)a), gens_.matrix((GenIndex)b));
      table_[(size_t)a * d + b] = expand(c);
    }
  if (corruption) {
    table_[(size_t)corruption->a * d + corruption->b].add(corruption->g,
                                                          corruption->delta);
  }

  // sigma = exp(-ad X), truncated at nilpotency.
  LieElement big_x;
  for (int k = 2; k <= rank; ++k)
    big_x.add(gens_.index(sum_root(1, k)), 1);
  sigma_.resize(d);
  for (GenIndex g = 0; g < (GenIndex)d && sigma_ok_; ++g) {
    LieElement acc = LieElement::unit(g);
    LieElement term = acc;
    Rational fact(1);
    for (int k = 1; !term.is_zero(); ++k) {
      if (k > d) {
        sigma_ok_ = false;
        break;
      }
      LieElement next;
      for (const auto& [h, c] : term.terms()) {
        LieElement br = bracket(big_x, LieElement::unit(h));
        br *= -c;
        next += br;
      }
      term = std::move(next);
      fact *= k;
      LieElement scaled = term;
      scaled *= Rational(1) / fact;
      acc += scaled;
    }
    sigma_[g] = std::move(acc);
  }
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  LieElement out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      LieElement t = bracket(a, b);
      t *= ca * cb;
      out += t;
    }
  return out;
}

RatMatrix LieAlgebra::matrix_of(const LieElement& x) const {
  RatMatrix m = mat_zero(2 * rank(), 2 * rank());
  for (const auto& [g, c] : x.terms()) {
    const RatMatrix& gm = gens_.matrix(g);
    for (size_t i = 0; i < gm.size(); ++i)
      for (size_t j = 0; j < gm.size(); ++j)
        if (gm[i][j] != 0) m[i][j] += c * gm[i][j];
  }
  return m;
}

LieElement LieAlgebra::expand(const RatMatrix& m) const {
  // Each basis element owns a "lead" entry nobody else touches, so the
  // coefficients can be read off directly.
  const int n = rank();
  LieElement out;
  for (int i = 1; i <= n; ++i) out.add(gens_.index(cartan(i)), m[i - 1][i - 1]);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      out.add(gens_.index(diff_root(i, j)), m[i - 1][j - 1]);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational c = m[i - 1][n + j - 1];
      if (i == j) c /= 2;
      out.add(gens_.index(sum_root(i, j)), c);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational c = m[n + j - 1][i - 1];
      if (i == j) c /= 2;
      out.add(gens_.index(neg_sum_root(i, j)), c);
    }
  return out;
}

Rational LieAlgebra::form_minus1(const LieElement& x, const LieElement& y) const {
  for (const auto& [g, _] : x.terms())
    if (grading(g) != -1)
      throw std::invalid_argument("form_minus1: x is not in sp(2n)(-1)");
  for (const auto& [g, _] : y.terms())
    if (grading(g) != -1)
      throw std::invalid_argument("form_minus1: y is not in sp(2n)(-1)");
  RatMatrix br = mat_commutator(matrix_of(x), matrix_of(y));
  return mat_trace(mat_mul(br, gens_.e_matrix()));
}

bool LieAlgebra::in_m(const LieElement& x) const {
  for (const auto& [g, _] : x.terms())
    if (!gens_.in_m(g)) return false;
  return true;
}

Rational LieAlgebra::theta(const LieElement& x) const {
  if (!in_m(x)) throw std::invalid_argument("theta: argument is not in m_n");
  return mat_trace(mat_mul(matrix_of(x), gens_.e_matrix())) / 2;
}

LieElement LieAlgebra::sigma(const LieElement& x) const {
  require_sigma();
  LieElement out;
  for (const auto& [g, c] : x.terms()) {
    LieElement t = sigma_[g];
    t *= c;
    out += t;
  }
  return out;
}

LieElement LieAlgebra::ad_pow(GenIndex s, int k, GenIndex y) const {
  LieElement out = LieElement::unit(y);
  for (int i = 0; i < k; ++i) out = bracket(LieElement::unit(s), out);
  return out;
}

int LieAlgebra::centralizer_dim_of_e() const {
  // Kernel of x -> [x, e] over the basis coefficients.
  const int d = dim();
  const int m = 2 * rank();
  std::vector<SparseVec> cols(d);
  for (GenIndex g = 0; g < (GenIndex)d; ++g) {
    RatMatrix c = mat_commutator(gens_.matrix(g), gens_.e_matrix());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (c[i][j] != 0) cols[g][i * m + j] = c[i][j];
  }
  return (int)sparse_kernel(cols).size();
}

}  // namespace spw
