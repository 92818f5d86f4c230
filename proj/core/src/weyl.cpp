#include "spw/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace spw {

void WeylPoly::add_term(const WeylMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylPoly& WeylPoly::operator+=(const WeylPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylPoly& WeylPoly::operator-=(const WeylPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylPoly& WeylPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

void WeylAlgebra::check(const WeylPoly& p) const {
  if (p.vars() != n_)
    throw std::invalid_argument("WeylPoly size mismatch");
}

WeylPoly WeylAlgebra::one() const {
  WeylPoly p(n_);
  WeylMonomial m{std::vector<std::int32_t>(n_, 0), std::vector<std::int32_t>(n_, 0)};
  p.add_term(m, 1);
  return p;
}

WeylPoly WeylAlgebra::t_gen(int i, std::int32_t e) const {
  if (e < 0) throw std::invalid_argument("t generators are not invertible");
  WeylPoly p(n_);
  WeylMonomial m{std::vector<std::int32_t>(n_, 0), std::vector<std::int32_t>(n_, 0)};
  m.t[i - 1] = e;
  p.add_term(m, 1);
  return p;
}

WeylPoly WeylAlgebra::d_gen(int i, std::int32_t e) const {
  WeylPoly p(n_);
  WeylMonomial m{std::vector<std::int32_t>(n_, 0), std::vector<std::int32_t>(n_, 0)};
  m.d[i - 1] = e;
  p.add_term(m, 1);
  return p;
}

WeylPoly WeylAlgebra::multiply(const WeylPoly& p, const WeylPoly& q) const {
  check(p);
  check(q);
  // (t^a d^b)(t^g d^e): per coordinate,
  //   d^b t^g = sum_k k! C(b,k) C(g,k) t^{g-k} d^{b-k},
  // with the generalized binomial so negative b (localized d) works.
  WeylPoly out(n_);
  for (const auto& [m1, c1] : p.terms())
    for (const auto& [m2, c2] : q.terms()) {
      std::vector<std::pair<WeylMonomial, Rational>> acc;
      WeylMonomial base{std::vector<std::int32_t>(n_, 0),
                        std::vector<std::int32_t>(n_, 0)};
      acc.push_back({base, c1 * c2});
      for (int i = 0; i < n_; ++i) {
        const std::int32_t b = m1.d[i], g = m2.t[i];
        std::vector<std::pair<WeylMonomial, Rational>> next;
        for (std::int32_t k = 0; k <= g; ++k) {
          Rational f = binomial(Rational(b), k) * binomial(Rational(g), k);
          for (std::int32_t j = 2; j <= k; ++j) f *= j;  // k!
          if (f == 0) continue;
          for (const auto& [m, c] : acc) {
            WeylMonomial nm = m;
            nm.t[i] = m1.t[i] + g - k;
            nm.d[i] = b + m2.d[i] - k;
            next.push_back({std::move(nm), c * f});
          }
        }
        acc = std::move(next);
      }
      for (auto& [m, c] : acc) out.add_term(m, c);
    }
  return out;
}

WeylPoly WeylAlgebra::commutator(const WeylPoly& p, const WeylPoly& q) const {
  return multiply(p, q) - multiply(q, p);
}

WeylPoly WeylAlgebra::pow(const WeylPoly& p, int k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  WeylPoly out = one();
  for (int i = 0; i < k; ++i) out = multiply(out, p);
  return out;
}

WeylPoly WeylAlgebra::phi_gen(const UsAlgebra& us, GenIndex g) const {
  const GeneratorId& id = us.gens().id(g);
  switch (id.kind) {
    case GenKind::Cartan: {
      WeylPoly p = multiply(t_gen(id.i), d_gen(id.i));
      p += rat(1, 2) * one();
      return p;
    }
    case GenKind::Diff:
      return multiply(t_gen(id.i), d_gen(id.j));
    case GenKind::Sum:
      return multiply(t_gen(id.i), t_gen(id.j));
    case GenKind::NegSum:
      return rat(-1) * multiply(d_gen(id.i), d_gen(id.j));
  }
  throw std::logic_error("phi_gen: unreachable");
}

WeylPoly WeylAlgebra::phi(const UsAlgebra& us, const NcPoly& p) const {
  if (us.rank() != n_) throw std::invalid_argument("phi: rank mismatch");
  WeylPoly out(n_);
  for (const auto& [m, c] : p.terms()) {
    WeylPoly prod = one();
    for (const auto& [g, e] : m.factors()) {
      if (e < 0)
        throw std::invalid_argument(
            "phi: image of " + us.gens().name(g) +
            " is not invertible in D_n^d");
      prod = multiply(prod, pow(phi_gen(us, g), e));
    }
    prod *= c;
    out += prod;
  }
  return out;
}

WeylPoly WeylAlgebra::tau(const WeylPoly& p) const {
  check(p);
  WeylPoly out(n_);
  for (const auto& [m, c] : p.terms()) {
    WeylPoly prod = c * one();
    for (int i = 0; i < n_; ++i) {
      const std::int32_t a = m.t[i];
      if (a == 0) continue;
      if (i == 0) {
        // (t_1 + 1)^a
        WeylPoly f(n_);
        for (std::int32_t k = 0; k <= a; ++k) {
          WeylMonomial mm{std::vector<std::int32_t>(n_, 0),
                          std::vector<std::int32_t>(n_, 0)};
          mm.t[0] = k;
          f.add_term(mm, binomial(Rational(a), k));
        }
        prod = multiply(prod, f);
      } else {
        prod = multiply(prod, t_gen(i + 1, a));
      }
    }
    for (int i = 0; i < n_; ++i) {
      const std::int32_t b = m.d[i];
      if (b == 0) continue;
      if (i == 0) {
        prod = multiply(prod, d_gen(1, b));
      } else {
        if (b < 0)
          throw std::invalid_argument(
              "tau: (d_i + 1)^-1 does not exist in D_n^d");
        WeylPoly f(n_);
        for (std::int32_t k = 0; k <= b; ++k) {
          WeylMonomial mm{std::vector<std::int32_t>(n_, 0),
                          std::vector<std::int32_t>(n_, 0)};
          mm.d[i] = k;
          f.add_term(mm, binomial(Rational(b), k));
        }
        prod = multiply(prod, f);
      }
    }
    out += prod;
  }
  return out;
}

WeylPoly WeylAlgebra::b_iso(const UsAlgebra& us, const NcPoly& p) const {
  if (us.rank() != n_) throw std::invalid_argument("b_iso: rank mismatch");
  const GeneratorTable& G = us.gens();
  WeylPoly out(n_);
  for (const auto& [m, c] : p.terms()) {
    WeylPoly prod = one();
    for (const auto& [g, e] : m.factors()) {
      const GeneratorId& id = G.id(g);
      WeylPoly img(n_);
      if (id.kind == GenKind::Cartan) {
        if (id.i == 1) {
          // h_1 -> -2 t_1 d_1 - sum_{i>=2} t_i d_i
          img = rat(-2) * multiply(t_gen(1), d_gen(1));
          for (int i = 2; i <= n_; ++i) img -= multiply(t_gen(i), d_gen(i));
        } else {
          img = multiply(t_gen(id.i), d_gen(id.i));
        }
        prod = multiply(prod, pow(img, e));
      } else if (id.kind == GenKind::Sum && id.i == 1 && id.j == 1) {
        prod = multiply(prod, d_gen(1, e));
      } else if (id.kind == GenKind::Diff && id.i == 1) {
        prod = multiply(prod, d_gen(id.j, e));
      } else {
        throw std::invalid_argument("b_iso: " + G.name(g) + " is not in B");
      }
    }
    prod *= c;
    out += prod;
  }
  return out;
}

NcPoly WeylAlgebra::b_iso_inv(const UsAlgebra& us, const WeylPoly& p) const {
  if (us.rank() != n_) throw std::invalid_argument("b_iso_inv: rank mismatch");
  const GeneratorTable& G = us.gens();
  // Images of the Weyl letters inside B.
  NcPoly t1_img(n_);
  {
    LieElement In;
    for (int i = 1; i <= n_; ++i) In.add(G.index(cartan(i)), rat(-1, 2));
    t1_img = us.multiply(us.inject(In), us.gen(sum_root(1, 1), -1));
  }
  NcPoly out = us.zero();
  for (const auto& [m, c] : p.terms()) {
    NcPoly prod = us.one();
    for (int i = 0; i < n_; ++i) {
      const std::int32_t a = m.t[i];
      if (a == 0) continue;
      NcPoly img = i == 0 ? t1_img
                          : us.multiply(us.gen(cartan(i + 1)),
                                        us.gen(diff_root(1, i + 1), -1));
      prod = us.multiply(prod, us.pow(img, a));
    }
    for (int i = 0; i < n_; ++i) {
      const std::int32_t b = m.d[i];
      if (b == 0) continue;
      prod = us.multiply(prod, i == 0 ? us.gen(sum_root(1, 1), b)
                                      : us.gen(diff_root(1, i + 1), b));
    }
    prod *= c;
    out += prod;
  }
  return out;
}

std::string WeylAlgebra::to_text(const WeylPoly& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int i = 0; i < n_; ++i)
      if (m.t[i]) {
        os << "*t" << (i + 1);
        if (m.t[i] != 1) os << "^" << m.t[i];
      }
    for (int i = 0; i < n_; ++i)
      if (m.d[i]) {
        os << "*d" << (i + 1);
        if (m.d[i] != 1) os << "^" << m.d[i];
      }
  }
  return os.str();
}

}  // namespace spw
