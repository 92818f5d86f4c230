#include "spw/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace spw {

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= c;
  return *this;
}

int NcPoly::degree() const {
  int d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.abs_degree());
  return d;
}

UsAlgebra::UsAlgebra(const LieAlgebra& lie, std::uint64_t step_budget)
    : lie_(&lie), budget_(step_budget) {}

NcPoly UsAlgebra::gen(GenIndex g, std::int32_t e) const {
  if (e < 0 && !gens().invertible(g))
    throw std::invalid_argument("negative exponent on non-invertible " +
                                gens().name(g));
  NcPoly p(rank());
  p.add_term(PbwMonomial::power(g, e), 1);
  return p;
}

NcPoly UsAlgebra::inject(const LieElement& x) const {
  NcPoly p(rank());
  for (const auto& [g, c] : x.terms()) p.add_term(PbwMonomial::power(g, 1), c);
  return p;
}

void UsAlgebra::check_rank(const NcPoly& p) const {
  if (p.rank() != rank())
    throw std::invalid_argument("NcPoly rank mismatch: " +
                                std::to_string(p.rank()) + " vs " +
                                std::to_string(rank()));
}

NcPoly UsAlgebra::multiply(const NcPoly& p, const NcPoly& q) const {
  check_rank(p);
  check_rank(q);
  std::vector<Item> work;
  work.reserve(p.terms().size() * q.terms().size());
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) {
      Item it;
      it.coeff = cp * cq;
      it.word = mp.factors();
      const std::size_t cut = it.word.size();
      it.word.insert(it.word.end(), mq.factors().begin(), mq.factors().end());
      it.scan_from = cut == 0 ? 0 : cut - 1;
      work.push_back(std::move(it));
    }
  return normalize(std::move(work));
}

NcPoly UsAlgebra::normalize(std::vector<Item> work) const {
  const GeneratorTable& G = gens();
  NcPoly out(rank());
  std::uint64_t steps = 0;

  auto push = [&work](Rational coeff, std::vector<PbwMonomial::Factor> w,
                      std::size_t hint) {
    if (coeff == 0) return;
    Item it;
    it.coeff = std::move(coeff);
    it.word = std::move(w);
    it.scan_from = hint;
    work.push_back(std::move(it));
  };

  // Builds prefix + mid + suffix, dropping zero exponents in mid.
  auto splice = [](const std::vector<PbwMonomial::Factor>& w, std::size_t p,
                   std::initializer_list<PbwMonomial::Factor> mid) {
    std::vector<PbwMonomial::Factor> out;
    out.reserve(w.size() + mid.size());
    out.insert(out.end(), w.begin(), w.begin() + p);
    for (const auto& f : mid)
      if (f.second != 0) out.push_back(f);
    out.insert(out.end(), w.begin() + p + 2, w.end());
    return out;
  };

  while (!work.empty()) {
    if (++steps > budget_)
      throw EngineError("straightening budget exceeded (engine bug)");
    Item it = std::move(work.back());
    work.pop_back();

    std::size_t p = it.scan_from;
    bool defect = false;
    for (; p + 1 < it.word.size(); ++p) {
      if (it.word[p].first >= it.word[p + 1].first) {
        defect = true;
        break;
      }
    }
    if (!defect) {
      out.add_term(PbwMonomial::from_sorted(std::move(it.word)),
                   std::move(it.coeff));
      continue;
    }

    const auto [x, a] = it.word[p];
    const auto [y, b] = it.word[p + 1];
    const std::size_t hint = p == 0 ? 0 : p - 1;

    if (x == y) {
      push(std::move(it.coeff), splice(it.word, p, {{x, a + b}}), hint);
      continue;
    }

    // x > y in the generator order, both exponents nonzero.
    if (G.invertible(x) && G.invertible(y)) {
      // m_n is commutative, inverses included.
      push(std::move(it.coeff), splice(it.word, p, {{y, b}, {x, a}}), hint);
      continue;
    }

    if (a > 0 && b > 0) {
      // x y = y x + [x, y] at the block boundary.
      push(it.coeff,
           splice(it.word, p, {{x, a - 1}, {y, 1}, {x, 1}, {y, b - 1}}), hint);
      const LieElement& br = lie_->bracket(x, y);
      for (const auto& [z, c] : br.terms())
        push(it.coeff * c, splice(it.word, p, {{x, a - 1}, {z, 1}, {y, b - 1}}),
             hint);
      continue;
    }

    if (a < 0) {
      // x is an Ore letter; peel one inverse off the right of its block:
      // x^-1 y = sum_k (-1)^k (ad x)^k(y) x^-(k+1).
      Rational sign(1);
      for (int k = 0; k <= 2; ++k) {
        LieElement adk = lie_->ad_pow(x, k, y);
        for (const auto& [z, c] : adk.terms())
          push(it.coeff * sign * c,
               splice(it.word, p,
                      {{x, a + 1}, {z, 1}, {x, -(k + 1)}, {y, b - 1}}),
               hint);
        sign = -sign;
      }
      continue;
    }

    // b < 0: y is an Ore letter; peel one letter off the right of the
    // x block: g y^-1 = sum_k y^-(k+1) (ad y)^k(g).
    for (int k = 0; k <= 2; ++k) {
      LieElement adk = lie_->ad_pow(y, k, x);
      for (const auto& [z, c] : adk.terms())
        push(it.coeff * c,
             splice(it.word, p, {{x, a - 1}, {y, -(k + 1)}, {z, 1}, {y, b + 1}}),
             hint);
    }
  }
  return out;
}

NcPoly UsAlgebra::commutator(const NcPoly& p, const NcPoly& q) const {
  return multiply(p, q) - multiply(q, p);
}

NcPoly UsAlgebra::pow(const NcPoly& p, int k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  NcPoly out = one();
  for (int i = 0; i < k; ++i) out = multiply(out, p);
  return out;
}

NcPoly UsAlgebra::apply_sigma(const NcPoly& p) const {
  check_rank(p);
  NcPoly out(rank());
  for (const auto& [m, c] : p.terms()) {
    NcPoly prod = one();
    for (const auto& [g, e] : m.factors()) {
      if (e >= 0) {
        prod = multiply(prod, pow(inject(lie_->sigma(g)), e));
      } else {
        if (!(lie_->sigma(g) == LieElement::unit(g)))
          throw std::invalid_argument(
              "apply_sigma: sigma(" + gens().name(g) +
              ")^-1 does not exist in U_S");
        prod = multiply(prod, gen(g, e));
      }
    }
    prod *= c;
    out += prod;
  }
  return out;
}

std::string UsAlgebra::to_text(const NcPoly& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (const auto& [g, e] : m.factors()) {
      os << "*" << gens().name(g);
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace spw
