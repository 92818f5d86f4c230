#include "spw/cuspidal.hpp"

#include <sstream>
#include <stdexcept>

namespace spw {

namespace {

std::string point_str(const Point& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace

GaModule::GaModule(const LieAlgebra& lie, std::vector<Rational> a)
    : lie_(&lie), a_(std::move(a)) {
  if ((int)a_.size() != lie_->rank())
    throw std::invalid_argument("GaModule: parameter size mismatch");
}

std::vector<Rational> GaModule::weight(const Point& m) const {
  // h_1 -> |m| + m_1 + a_1,  h_i -> a_i - m_i.
  std::vector<Rational> w(n());
  Integer abs_m = 0;
  for (int v : m) abs_m += v;
  w[0] = a_[0] + abs_m + m[0];
  for (int i = 1; i < n(); ++i) w[i] = a_[i] - m[i];
  return w;
}

ActTerm GaModule::act(GenIndex g, const Point& m) const {
  const GeneratorId id = lie_->gens().id(g);
  Integer abs_m = 0;
  for (int v : m) abs_m += v;
  const Rational w1 = a_[0] + abs_m + m[0];  // h_1 eigenvalue
  auto ai = [&](int i) { return a_[i - 1] - m[i - 1]; };
  const Rational half = rat(1, 2);

  ActTerm t{Rational(1), m};
  switch (id.kind) {
    case GenKind::Cartan:
      t.c = id.i == 1 ? w1 : ai(id.i);
      break;
    case GenKind::Sum:
      if (id.i == 1 && id.j == 1) {  // Ore shift
        t.target[0] += 1;
      } else if (id.i == 1) {  // X_{e_k+e_1}
        const int k = id.j;
        t.c = ai(k) + half;
        t.target[k - 1] -= 1;
        t.target[0] += 1;
      } else {  // X_{e_k+e_l}, 2 <= k <= l
        const int k = id.i, l = id.j;
        t.c = (ai(l) + half) * (ai(k) + (k == l ? 1 : 0) + half);
        t.target[k - 1] -= 1;
        t.target[l - 1] -= 1;
        t.target[0] += 1;
      }
      break;
    case GenKind::Diff:
      if (id.i == 1) {  // Ore shift
        t.target[id.j - 1] += 1;
      } else if (id.j == 1) {  // X_{e_k-e_1}
        const int k = id.i;
        t.c = (ai(k) + half) * (w1 - half);
        t.target[k - 1] -= 1;
      } else {  // X_{e_i-e_j}, i, j >= 2
        t.c = ai(id.i) + half;
        t.target[id.i - 1] -= 1;
        t.target[id.j - 1] += 1;
      }
      break;
    case GenKind::NegSum:
      if (id.i == 1 && id.j == 1) {  // X_{-2e_1}
        t.c = -(rat(3, 2) - w1) * (half - w1);
        t.target[0] -= 1;
      } else if (id.i == 1) {  // X_{-e_1-e_k}
        const int k = id.j;
        t.c = half - w1;
        t.target[k - 1] += 1;
        t.target[0] -= 1;
      } else {  // X_{-e_k-e_l}
        t.c = rat(-1);
        t.target[id.i - 1] += 1;
        t.target[id.j - 1] += 1;
        t.target[0] -= 1;
      }
      break;
  }
  if (corrupt_ && corrupt_->first == g) t.c += corrupt_->second;
  return t;
}

NaModule::NaModule(const LieAlgebra& lie, std::vector<Rational> a)
    : lie_(&lie), a_(std::move(a)) {
  if ((int)a_.size() != lie_->rank())
    throw std::invalid_argument("NaModule: parameter size mismatch");
}

std::vector<Rational> NaModule::weight(const Point& b) const {
  std::vector<Rational> w(n());
  for (int i = 0; i < n(); ++i) w[i] = a_[i] + b[i] + rat(1, 2);
  return w;
}

ActTerm NaModule::act(GenIndex g, const Point& b) const {
  const GeneratorId id = lie_->gens().id(g);
  auto c = [&](int i) { return a_[i - 1] + b[i - 1]; };  // t_i exponent
  ActTerm t{Rational(1), b};
  switch (id.kind) {
    case GenKind::Cartan:  // t_i d_i + 1/2
      t.c = c(id.i) + rat(1, 2);
      break;
    case GenKind::Diff:  // t_i d_j
      t.c = c(id.j);
      t.target[id.i - 1] += 1;
      t.target[id.j - 1] -= 1;
      break;
    case GenKind::Sum:  // t_i t_j
      t.target[id.i - 1] += 1;
      t.target[id.j - 1] += 1;
      break;
    case GenKind::NegSum:  // -d_i d_j
      if (id.i == id.j) {
        t.c = -c(id.i) * (c(id.i) - 1);
        t.target[id.i - 1] -= 2;
      } else {
        t.c = -c(id.i) * c(id.j);
        t.target[id.i - 1] -= 1;
        t.target[id.j - 1] -= 1;
      }
      break;
  }
  return t;
}

std::vector<Point> box_points(int n, int radius) {
  std::vector<Point> out;
  Point p(n, -radius);
  for (;;) {
    out.push_back(p);
    int i = n - 1;
    for (; i >= 0; --i) {
      if (p[i] < radius) {
        ++p[i];
        break;
      }
      p[i] = -radius;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<Point> even_box_points(int n, int radius) {
  std::vector<Point> out;
  for (Point& p : box_points(n, radius)) {
    long long s = 0;
    for (int v : p) s += v;
    if (s % 2 == 0) out.push_back(std::move(p));
  }
  return out;
}

IntertwinerReport intertwiner_search(const GaModule& gmod, const NaModule& nmod,
                                     int interior_radius) {
  const int n = gmod.n();
  if (nmod.n() != n)
    throw std::invalid_argument("intertwiner_search: rank mismatch");
  IntertwinerReport rep;

  auto b_of = [&](const Point& m) {
    Point b(n, 0);
    long long tail = 0;
    for (int i = 1; i < n; ++i) tail += m[i];
    b[0] = (std::int32_t)(2 * m[0] + tail);
    for (int i = 1; i < n; ++i) b[i] = -m[i];
    return b;
  };

  const std::vector<Point> box = box_points(n, interior_radius);
  std::map<Point, int> idx;
  for (int i = 0; i < (int)box.size(); ++i) idx[box[i]] = i;

  // Weight match between paired labels.
  for (const Point& m : box) {
    if (gmod.weight(m) != nmod.weight(b_of(m))) {
      rep.obstruction = "weight mismatch at m=" + point_str(m);
      return rep;
    }
  }

  const LieAlgebra& L = gmod.lie();
  struct Edge {
    int from, to;
    Rational cg, cn;
  };
  std::vector<Edge> edges;
  for (GenIndex g = 0; g < (GenIndex)L.dim(); ++g) {
    if (L.gens().id(g).kind == GenKind::Cartan) continue;
    for (const Point& m : box) {
      ActTerm tg = gmod.act(g, m);
      auto it = idx.find(tg.target);
      if (it == idx.end()) continue;
      ActTerm tn = nmod.act(g, b_of(m));
      if (tn.target != b_of(tg.target)) {
        rep.obstruction = "index correspondence broken at m=" + point_str(m);
        return rep;
      }
      edges.push_back({idx[m], it->second, tg.c, tn.c});
    }
  }

  // Solve c along a spanning tree, then verify every edge.
  std::vector<std::optional<Rational>> c(box.size());
  std::vector<std::vector<int>> adj(box.size());
  for (int e = 0; e < (int)edges.size(); ++e) {
    adj[edges[e].from].push_back(e);
    adj[edges[e].to].push_back(e);
  }
  std::vector<int> stack{0};
  c[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ei : adj[v]) {
      const Edge& e = edges[ei];
      // c_to = c_from * cn / cg when traversable.
      if (!c[e.to] && c[e.from] && e.cg != 0) {
        c[e.to] = *c[e.from] * e.cn / e.cg;
        stack.push_back(e.to);
      } else if (!c[e.from] && c[e.to] && e.cn != 0) {
        c[e.from] = *c[e.to] * e.cg / e.cn;
        stack.push_back(e.from);
      }
    }
  }
  for (size_t i = 0; i < box.size(); ++i)
    if (!c[i]) {
      rep.obstruction = "window disconnected at m=" + point_str(box[i]);
      return rep;
    }
  for (const Edge& e : edges) {
    ++rep.edges_checked;
    if (e.cg * *c[e.to] != e.cn * *c[e.from]) {
      rep.obstruction = "edge inconsistency";
      return rep;
    }
  }
  rep.exists = true;
  for (size_t i = 0; i < box.size() && rep.sample.size() < 5;
       i += std::max<size_t>(1, box.size() / 5))
    rep.sample.push_back({box[i], *c[i]});
  return rep;
}

std::string ga_cross_check(const GaModule& mod, const WAlgebra& w,
                           const OneDimRep& rep, const Point& m, GenIndex g) {
  const GeneratorTable& G = w.us().gens();
  if (w.is_b_letter(g))
    return "";  // B letters act directly; nothing to cross-check
  ActTerm direct = mod.act(g, m);

  std::map<Point, Rational> route;
  for (const auto& [word, coeff] : w.x_expression(g)) {
    Rational c = coeff;
    for (const ALabel& l : word.a) c *= rep.scalars.at(l);
    // Apply the B-monomial right to left: Ore shifts first, then the
    // diagonal Cartan factors evaluated at the shifted point.
    Point pt = m;
    const auto& fs = word.b.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      const auto [bg, e] = *it;
      const GeneratorId id = G.id(bg);
      if (G.invertible(bg)) {
        if (id.kind == GenKind::Sum)
          pt[0] += e;
        else
          pt[id.j - 1] += e;
      } else {
        const Rational eig = mod.weight(pt)[id.i - 1];
        for (int r = 0; r < e; ++r) c *= eig;
      }
    }
    detail::acc_point(route, pt, c);
  }

  std::map<Point, Rational> want;
  detail::acc_point(want, direct.target, direct.c);
  if (route != want) {
    std::ostringstream os;
    os << "cross-check mismatch for " << G.name(g) << " at m=" << point_str(m);
    return os.str();
  }
  return "";
}

}  // namespace spw
