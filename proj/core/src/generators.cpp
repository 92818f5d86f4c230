#include "spw/generators.hpp"

#include <stdexcept>

namespace spw {

namespace {

std::string gen_name(const GeneratorId& g) {
  auto e = [](int k) { return "e" + std::to_string(k); };
  switch (g.kind) {
    case GenKind::Cartan:
      return "h" + std::to_string(g.i);
    case GenKind::Diff:
      return "X(" + e(g.i) + "-" + e(g.j) + ")";
    case GenKind::Sum:
      if (g.i == g.j) return "X(2" + e(g.i) + ")";
      return "X(" + e(g.i) + "+" + e(g.j) + ")";
    case GenKind::NegSum:
      if (g.i == g.j) return "X(-2" + e(g.i) + ")";
      return "X(-" + e(g.i) + "-" + e(g.j) + ")";
  }
  return "?";
}

}  // namespace

GeneratorTable::GeneratorTable(int rank) : n_(rank) {
  if (rank < 2) throw std::invalid_argument("GeneratorTable: rank must be >= 2");

  // Negative roots.
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j) ids_.push_back(neg_sum_root(i, j));
  for (int i = 2; i <= n_; ++i)
    for (int j = 1; j < i; ++j) ids_.push_back(diff_root(i, j));
  // Cartan.
  for (int i = 1; i <= n_; ++i) ids_.push_back(cartan(i));
  // Positive roots outside S.
  for (int i = 2; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) ids_.push_back(diff_root(i, j));
  for (int i = 1; i <= n_; ++i)
    for (int j = i; j <= n_; ++j)
      if (!(i == 1 && j == 1)) ids_.push_back(sum_root(i, j));
  // The Ore letters, X_{2e_1} rightmost.
  for (int j = 2; j <= n_; ++j) ids_.push_back(diff_root(1, j));
  ids_.push_back(sum_root(1, 1));

  if ((int)ids_.size() != n_ * (2 * n_ + 1))
    throw std::logic_error("GeneratorTable: basis enumeration is wrong");

  lookup_.assign(4 * (n_ + 1) * (n_ + 1), -1);
  const int dim = 2 * n_;
  for (GenIndex x = 0; x < ids_.size(); ++x) {
    const GeneratorId& g = ids_[x];
    lookup_[key(g)] = x;
    names_.push_back(gen_name(g));

    RatMatrix m = mat_zero(dim, dim);
    const int i = g.i, j = g.j;
    switch (g.kind) {
      case GenKind::Cartan:
        m[i - 1][i - 1] = 1;
        m[n_ + i - 1][n_ + i - 1] = -1;
        break;
      case GenKind::Diff:
        m[i - 1][j - 1] = 1;
        m[n_ + j - 1][n_ + i - 1] = -1;
        break;
      case GenKind::Sum:
        m[i - 1][n_ + j - 1] += 1;
        m[j - 1][n_ + i - 1] += 1;
        break;
      case GenKind::NegSum:
        m[n_ + j - 1][i - 1] += 1;
        m[n_ + i - 1][j - 1] += 1;
        break;
    }
    mats_.push_back(std::move(m));

    std::vector<int> r(n_, 0);
    switch (g.kind) {
      case GenKind::Cartan:
        break;
      case GenKind::Diff:
        r[i - 1] += 1;
        r[j - 1] -= 1;
        break;
      case GenKind::Sum:
        r[i - 1] += 1;
        r[j - 1] += 1;
        break;
      case GenKind::NegSum:
        r[i - 1] -= 1;
        r[j - 1] -= 1;
        break;
    }
    roots_.push_back(std::move(r));
  }

  e_mat_ = mat_zero(dim, dim);
  e_mat_[n_][0] = 1;  // e_{n+1,1}
}

int GeneratorTable::key(const GeneratorId& g) const {
  return ((int)g.kind * (n_ + 1) + g.i) * (n_ + 1) + g.j;
}

GenIndex GeneratorTable::index(const GeneratorId& g) const {
  if (g.i < 1 || g.i > n_ || g.j < 1 || g.j > n_)
    throw std::invalid_argument("generator index out of range for rank " +
                                std::to_string(n_));
  const int x = lookup_[key(g)];
  if (x < 0) throw std::invalid_argument("no such generator: " + gen_name(g));
  return (GenIndex)x;
}

}  // namespace spw
