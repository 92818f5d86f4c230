#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spw/linalg.hpp"
#include "spw/rational.hpp"

namespace spw {

// Basis labels for sp(2n), indices 1-based:
//   Cartan   h_i = e_{ii} - e_{n+i,n+i}
//   Diff     X_{e_i-e_j} = e_{i,j} - e_{n+j,n+i},     i != j
//   Sum      X_{e_i+e_j} = e_{i,n+j} + e_{j,n+i},     i <= j
//   NegSum   X_{-e_i-e_j} = e_{n+j,i} + e_{n+i,j},    i <= j
enum class GenKind : std::uint8_t { Cartan, Diff, Sum, NegSum };

struct GeneratorId {
  GenKind kind;
  std::uint8_t i = 0, j = 0;

  bool operator==(const GeneratorId&) const = default;
};

inline GeneratorId cartan(int i) {
  return {GenKind::Cartan, (std::uint8_t)i, (std::uint8_t)i};
}
inline GeneratorId diff_root(int i, int j) {
  return {GenKind::Diff, (std::uint8_t)i, (std::uint8_t)j};
}
inline GeneratorId sum_root(int i, int j) {
  if (i > j) std::swap(i, j);
  return {GenKind::Sum, (std::uint8_t)i, (std::uint8_t)j};
}
inline GeneratorId neg_sum_root(int i, int j) {
  if (i > j) std::swap(i, j);
  return {GenKind::NegSum, (std::uint8_t)i, (std::uint8_t)j};
}

// Dense index into the fixed PBW-ordered basis of one rank.
using GenIndex = std::uint16_t;

// The global PBW order (index-ascending): negative-root generators first,
// then the Cartan h_i, then positive-root generators outside S, and the
// n invertible generators X_{e_1-e_2}, ..., X_{e_1-e_n}, X_{2e_1} last.
// Keeping the Ore letters rightmost makes theta-evaluation on Q_e a
// suffix read and matches the order the localization formulas are
// written in.
class GeneratorTable {
 public:
  explicit GeneratorTable(int rank);

  int rank() const { return n_; }
  int size() const { return (int)ids_.size(); }  // n(2n+1)

  GenIndex index(const GeneratorId& g) const;
  const GeneratorId& id(GenIndex x) const { return ids_.at(x); }

  bool invertible(GenIndex x) const { return x >= s_begin(); }
  GenIndex s_begin() const { return (GenIndex)(size() - n_); }
  // Member of m_n = span{X_{e_1-e_j}, X_{2e_1}}; coincides with the
  // invertible block.
  bool in_m(GenIndex x) const { return invertible(x); }

  const std::string& name(GenIndex x) const { return names_.at(x); }
  const RatMatrix& matrix(GenIndex x) const { return mats_.at(x); }

  // Weight in the eps basis (all zero for Cartan generators).
  const std::vector<int>& root(GenIndex x) const { return roots_.at(x); }

  // ad(-h_1) eigenvalue, in {-2,...,2}; the Dynkin grading good for e.
  int grading(GenIndex x) const { return -roots_.at(x)[0]; }

  // e = e_{n+1,1} = X_{-2e_1}/2, the minimal nilpotent.
  const RatMatrix& e_matrix() const { return e_mat_; }

  GenIndex h(int i) const { return index(cartan(i)); }

 private:
  int n_;
  std::vector<GeneratorId> ids_;
  std::vector<std::string> names_;
  std::vector<RatMatrix> mats_;
  std::vector<std::vector<int>> roots_;
  std::vector<int> lookup_;  // (kind,i,j) -> dense index
  RatMatrix e_mat_;

  int key(const GeneratorId& g) const;
};

}  // namespace spw
