#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spw/modules.hpp"

namespace spw {

using Point = std::vector<std::int32_t>;

// One generator maps one basis label to one scaled basis label: every
// action formula here is of the shape X . v_p = c(p) v_{p+shift}.
struct ActTerm {
  Rational c;
  Point target;
};

// G_a(V_{-1/2}): basis X^m (x) v with X^m = X_{2e_1}^{m_1}
// X_{e_1-e_2}^{m_2} ... X_{e_1-e_n}^{m_n}, actions from the explicit
// coefficient formulas.  The module is defined for every integer m; a
// window only decides which labels a verification pass visits.
class GaModule {
 public:
  GaModule(const LieAlgebra& lie, std::vector<Rational> a);

  int n() const { return lie_->rank(); }
  const std::vector<Rational>& a() const { return a_; }
  const LieAlgebra& lie() const { return *lie_; }

  ActTerm act(GenIndex g, const Point& m) const;
  std::vector<Rational> weight(const Point& m) const;

  // Negative control: adds delta to the coefficient produced by one
  // specific generator.
  void corrupt(GenIndex g, Rational delta) { corrupt_ = {{g, delta}}; }

 private:
  const LieAlgebra* lie_;
  std::vector<Rational> a_;
  std::optional<std::pair<GenIndex, Rational>> corrupt_;
};

// N(a): basis t^b = t_1^{a_1+b_1} ... t_n^{a_n+b_n} with b in the even
// lattice B, acting through phi.
class NaModule {
 public:
  NaModule(const LieAlgebra& lie, std::vector<Rational> a);

  int n() const { return lie_->rank(); }
  const std::vector<Rational>& a() const { return a_; }
  const LieAlgebra& lie() const { return *lie_; }

  ActTerm act(GenIndex g, const Point& b) const;
  std::vector<Rational> weight(const Point& b) const;

 private:
  const LieAlgebra* lie_;
  std::vector<Rational> a_;
};

// Axis-aligned box of side 2*radius+1.  The interior of a verification
// window is a box of the requested radius; the enclosing range adds a
// margin of 4 in every direction, enough for any two composed generator
// actions (a single letter moves one coordinate by at most 2).
constexpr int kWindowMargin = 4;

std::vector<Point> box_points(int n, int radius);
// Points of the even lattice B inside the box.
std::vector<Point> even_box_points(int n, int radius);

struct RelationViolation {
  GenIndex x, y;
  Point at;
};

struct RelationReport {
  long long checked = 0;
  std::vector<RelationViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks act([x,y]) = act(x)act(y) - act(y)act(x) for all unordered
// basis pairs over every interior point, exactly.
template <typename Module>
RelationReport relation_report(const Module& mod,
                               const std::vector<Point>& interior);

struct InjectivityReport {
  // Root vectors whose action matrix on the interior has nonzero kernel,
  // with the points where the coefficient vanishes.
  std::vector<std::pair<GenIndex, Point>> flagged;
  long long root_vectors_checked = 0;
  bool ok() const { return flagged.empty(); }
};

template <typename Module>
InjectivityReport injectivity_report(const Module& mod,
                                     const std::vector<Point>& interior);

// Labels of a window have pairwise distinct weights; returns the basis
// labels of weight lambda (size <= 1 when the invariant holds).
template <typename Module>
std::vector<Point> weight_space(const Module& mod,
                                const std::vector<Point>& window,
                                const std::vector<Rational>& lambda);

// All weights of the window lie on a single coset of the even lattice.
template <typename Module>
bool support_on_single_coset(const Module& mod,
                             const std::vector<Point>& window);

// Applies a full NcPoly through the single-term generator actions
// (letters right to left); exponents must be nonnegative.
template <typename Module>
std::map<Point, Rational> act_poly(const Module& mod, const NcPoly& p,
                                   const Point& base);

// The scalar by which a central element acts at the given base point.
template <typename Module>
Rational central_scalar(const Module& mod, const NcPoly& casimir,
                        const Point& base);

struct IntertwinerReport {
  bool exists = false;
  std::string obstruction;
  long long edges_checked = 0;
  // Sample of the solved scalars c_m (point -> scalar).
  std::vector<std::pair<Point, Rational>> sample;
};

// Solves for scalars c_m with T(X^m (x) v) = c_m t^{b(m)} intertwining
// every generator action between G_{a+1/2}(V_{-1/2}) and N(a) over the
// interior box; index correspondence
//   b(m) = (2 m_1 + m_2 + ... + m_n, -m_2, ..., -m_n).
IntertwinerReport intertwiner_search(const GaModule& g, const NaModule& n,
                                     int interior_radius);

// Recomputes G_a action entries through the reconstruction expressions
// (A-letters evaluated by the one-dimensional scalar table) and compares
// with the direct formulas; returns a mismatch description or empty.
std::string ga_cross_check(const GaModule& mod, const WAlgebra& w,
                           const OneDimRep& rep, const Point& m, GenIndex g);

namespace detail {

inline void acc_point(std::map<Point, Rational>& m, const Point& p,
                      const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

inline int box_radius_of(const std::vector<Point>& interior) {
  int r = 0;
  for (const Point& p : interior)
    for (int v : p) r = std::max(r, v < 0 ? -v : v);
  return r + kWindowMargin;
}

// A single letter moves one coordinate by at most 2, so anything two
// letters reach from the interior must stay inside the enclosing box;
// leaving it means the margin reasoning is broken.
inline void check_in_box(const Point& p, int box_radius) {
  for (int v : p)
    if (v > box_radius || v < -box_radius)
      throw std::logic_error("window margin violated (engine bug)");
}

}  // namespace detail

template <typename Module>
RelationReport relation_report(const Module& mod,
                               const std::vector<Point>& interior) {
  if (interior.empty())
    throw std::invalid_argument("relation_report: empty interior");
  const LieAlgebra& L = mod.lie();
  const int d = L.dim();
  const int box = detail::box_radius_of(interior);
  RelationReport rep;
  for (GenIndex x = 0; x < (GenIndex)d; ++x)
    for (GenIndex y = (GenIndex)(x + 1); y < (GenIndex)d; ++y) {
      const LieElement& br = L.bracket(x, y);
      for (const Point& p : interior) {
        std::map<Point, Rational> lhs, rhs;
        for (const auto& [g, c] : br.terms()) {
          ActTerm t = mod.act(g, p);
          detail::check_in_box(t.target, box);
          detail::acc_point(lhs, t.target, c * t.c);
        }
        {
          ActTerm yp = mod.act(y, p);
          ActTerm xyp = mod.act(x, yp.target);
          detail::check_in_box(xyp.target, box);
          detail::acc_point(rhs, xyp.target, yp.c * xyp.c);
          ActTerm xp = mod.act(x, p);
          ActTerm yxp = mod.act(y, xp.target);
          detail::check_in_box(yxp.target, box);
          detail::acc_point(rhs, yxp.target, -xp.c * yxp.c);
        }
        ++rep.checked;
        if (lhs != rhs) rep.violations.push_back({x, y, p});
      }
    }
  return rep;
}

template <typename Module>
InjectivityReport injectivity_report(const Module& mod,
                                     const std::vector<Point>& interior) {
  if (interior.empty())
    throw std::invalid_argument("injectivity_report: empty interior");
  const LieAlgebra& L = mod.lie();
  const int box = detail::box_radius_of(interior);
  InjectivityReport rep;
  for (GenIndex g = 0; g < (GenIndex)L.dim(); ++g) {
    if (L.gens().id(g).kind == GenKind::Cartan) continue;
    ++rep.root_vectors_checked;
    std::map<Point, int> row_of;
    std::vector<SparseVec> cols;
    for (const Point& p : interior) {
      ActTerm t = mod.act(g, p);
      detail::check_in_box(t.target, box);
      SparseVec col;
      if (t.c != 0) {
        auto [it, _] = row_of.emplace(t.target, (int)row_of.size());
        col[it->second] = t.c;
      }
      cols.push_back(std::move(col));
    }
    for (const auto& k : sparse_kernel(cols))
      for (const auto& [j, _] : k)
        rep.flagged.push_back({g, interior[(size_t)j]});
  }
  return rep;
}

template <typename Module>
std::vector<Point> weight_space(const Module& mod,
                                const std::vector<Point>& window,
                                const std::vector<Rational>& lambda) {
  std::vector<Point> out;
  for (const Point& p : window)
    if (mod.weight(p) == lambda) out.push_back(p);
  return out;
}

template <typename Module>
bool support_on_single_coset(const Module& mod,
                             const std::vector<Point>& window) {
  if (window.empty()) return true;
  const auto base = mod.weight(window.front());
  for (const Point& p : window) {
    const auto wt = mod.weight(p);
    Integer parity = 0;
    for (size_t i = 0; i < wt.size(); ++i) {
      Rational d = wt[i] - base[i];
      if (denominator(d) != 1) return false;
      parity += numerator(d);
    }
    if (parity % 2 != 0) return false;
  }
  return true;
}

template <typename Module>
std::map<Point, Rational> act_poly(const Module& mod, const NcPoly& p,
                                   const Point& base) {
  std::map<Point, Rational> out;
  for (const auto& [mono, c] : p.terms()) {
    std::map<Point, Rational> cur{{base, c}};
    const auto& fs = mono.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      const auto [g, e] = *it;
      if (e < 0) throw std::invalid_argument("act_poly: inverse letter");
      for (int i = 0; i < e; ++i) {
        std::map<Point, Rational> next;
        for (const auto& [pt, cc] : cur) {
          ActTerm t = mod.act(g, pt);
          detail::acc_point(next, t.target, cc * t.c);
        }
        cur = std::move(next);
      }
    }
    for (const auto& [pt, cc] : cur) detail::acc_point(out, pt, cc);
  }
  return out;
}

template <typename Module>
Rational central_scalar(const Module& mod, const NcPoly& casimir,
                        const Point& base) {
  auto r = act_poly(mod, casimir, base);
  if (r.empty()) return Rational(0);
  if (r.size() != 1 || r.begin()->first != base)
    throw std::logic_error("central_scalar: element did not act diagonally");
  return r.begin()->second;
}

}  // namespace spw
