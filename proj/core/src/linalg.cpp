#include "spw/linalg.hpp"

#include <stdexcept>

namespace spw {

Rational binomial(const Rational& x, int k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (int i = 0; i < k; ++i) num *= x - i;
  Rational den(1);
  for (int i = 2; i <= k; ++i) den *= i;
  return num / den;
}

Rational falling(const Rational& x, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= x - i;
  return out;
}

RatMatrix mat_zero(int rows, int cols) {
  return RatMatrix(rows, std::vector<Rational>(cols, Rational(0)));
}

RatMatrix mat_identity(int dim) {
  RatMatrix m = mat_zero(dim, dim);
  for (int i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  const int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
  RatMatrix out = mat_zero(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < c; ++j)
        if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] += b[i][j];
  return out;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

RatMatrix mat_scale(const RatMatrix& a, const Rational& c) {
  RatMatrix out = a;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

RatMatrix mat_transpose(const RatMatrix& a) {
  RatMatrix out = mat_zero((int)a[0].size(), (int)a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

Rational mat_trace(const RatMatrix& a) {
  Rational t(0);
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

bool mat_is_zero(const RatMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

RatMatrix mat_inverse(const RatMatrix& a) {
  const int n = (int)a.size();
  RatMatrix m = a;
  RatMatrix inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("mat_inverse: singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

// Reduces v against the pivot set (keyed by leading index); returns the
// fully reduced vector.
SparseVec reduce(SparseVec v, const std::map<int, SparseVec>& pivots) {
  while (!v.empty()) {
    const int lead = v.begin()->first;
    auto it = pivots.find(lead);
    if (it == pivots.end()) return v;
    const Rational f = v.begin()->second;  // pivots are monic
    for (const auto& [col, coef] : it->second) {
      auto jt = v.find(col);
      Rational nv = (jt == v.end() ? Rational(0) : jt->second) - f * coef;
      if (nv == 0) {
        if (jt != v.end()) v.erase(jt);
      } else {
        v[col] = nv;
      }
    }
  }
  return v;
}

void make_monic(SparseVec& v) {
  const Rational lead = v.begin()->second;
  for (auto& [_, c] : v) c /= lead;
}

}  // namespace

int sparse_rank(const std::vector<SparseVec>& rows) {
  std::map<int, SparseVec> pivots;
  int rank = 0;
  for (const auto& row : rows) {
    SparseVec r = reduce(row, pivots);
    if (r.empty()) continue;
    make_monic(r);
    pivots.emplace(r.begin()->first, std::move(r));
    ++rank;
  }
  return rank;
}

std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& cols) {
  // Column echelon with combination tracking: pivots map a leading row
  // index to (reduced column, combination of input columns producing it).
  std::map<int, std::pair<SparseVec, SparseVec>> pivots;
  std::vector<SparseVec> kernel;
  for (int j = 0; j < (int)cols.size(); ++j) {
    SparseVec v = cols[j];
    SparseVec combo{{j, Rational(1)}};
    for (;;) {
      if (v.empty()) {
        kernel.push_back(std::move(combo));
        break;
      }
      const int lead = v.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Rational f = v.begin()->second;
        for (auto& [_, c] : v) c /= f;
        for (auto& [_, c] : combo) c /= f;
        pivots.emplace(lead, std::make_pair(std::move(v), std::move(combo)));
        break;
      }
      const Rational f = v.begin()->second;
      for (const auto& [row, coef] : it->second.first) {
        Rational nv = (v.count(row) ? v[row] : Rational(0)) - f * coef;
        if (nv == 0)
          v.erase(row);
        else
          v[row] = nv;
      }
      for (const auto& [idx, coef] : it->second.second) {
        Rational nv = (combo.count(idx) ? combo[idx] : Rational(0)) - f * coef;
        if (nv == 0)
          combo.erase(idx);
        else
          combo[idx] = nv;
      }
    }
  }
  return kernel;
}

std::vector<std::vector<Rational>> dense_kernel(const RatMatrix& a) {
  const int rows = (int)a.size();
  const int cols = rows ? (int)a[0].size() : 0;
  std::vector<SparseVec> sparse_cols(cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (a[i][j] != 0) sparse_cols[j][i] = a[i][j];
  auto kern = sparse_kernel(sparse_cols);
  std::vector<std::vector<Rational>> out;
  for (const auto& k : kern) {
    std::vector<Rational> v(cols, Rational(0));
    for (const auto& [j, c] : k) v[j] = c;
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a,
                                           const std::vector<Rational>& b) {
  const int rows = (int)a.size();
  const int cols = rows ? (int)a[0].size() : 0;
  RatMatrix m = a;
  std::vector<Rational> rhs = b;
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    std::swap(rhs[p], rhs[row]);
    const Rational pv = m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] /= pv;
    rhs[row] /= pv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
      rhs[r] -= f * rhs[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (int r = 0; r < row; ++r) x[pivot_col_of_row[r]] = rhs[r];
  return x;
}

}  // namespace spw
