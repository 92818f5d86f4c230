#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spw/rational.hpp"

namespace spw {

// Dense exact matrices, row major.  Sizes here are tiny (at most a few
// hundred rows), so no effort is spent on anything clever.
using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix mat_zero(int rows, int cols);
RatMatrix mat_identity(int dim);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_scale(const RatMatrix& a, const Rational& c);
RatMatrix mat_commutator(const RatMatrix& a, const RatMatrix& b);
RatMatrix mat_transpose(const RatMatrix& a);
Rational mat_trace(const RatMatrix& a);
bool mat_is_zero(const RatMatrix& a);

// Exact inverse; throws std::invalid_argument on a singular matrix.
RatMatrix mat_inverse(const RatMatrix& a);

// Sparse rows keyed by column index.  Returns the rank over Q.
using SparseVec = std::map<int, Rational>;
int sparse_rank(const std::vector<SparseVec>& rows);

// Basis of { x : sum_j x_j col_j = 0 } for a matrix given by columns.
// Each kernel vector is returned as a SparseVec keyed by column index.
std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& cols);

// Dense kernel basis of A x = 0.
std::vector<std::vector<Rational>> dense_kernel(const RatMatrix& a);

// Solves A x = b exactly; empty optional when inconsistent.  If the system
// is underdetermined an arbitrary solution is returned.
std::optional<std::vector<Rational>> solve(const RatMatrix& a,
                                           const std::vector<Rational>& b);

}  // namespace spw
