#include "spw/modules.hpp"

#include <stdexcept>

namespace spw {

namespace {

template <typename K>
void acc_term(std::map<K, Rational>& m, const K& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

QeModule::Vec QeModule::reduce(const NcPoly& p) const {
  const GeneratorTable& G = us_->gens();
  Vec out;
  for (const auto& [m, c] : p.terms()) {
    // The Ore letters are last in the generator order, so the m_n part
    // of a normal monomial is a suffix: theta sends X_{2e_1} to 1 and
    // X_{e_1-e_j} to 0.
    std::vector<PbwMonomial::Factor> word;
    bool killed = false;
    for (const auto& [g, e] : m.factors()) {
      if (!G.in_m(g)) {
        word.push_back({g, e});
        continue;
      }
      if (e < 0)
        throw std::logic_error("QeModule: inverse letter reached reduction");
      const GeneratorId& id = G.id(g);
      if (id.kind == GenKind::Diff) {  // theta = 0
        killed = true;
        break;
      }
      // X_{2e_1}^e evaluates to 1.
    }
    if (killed) continue;
    acc_term(out, PbwMonomial::from_sorted(std::move(word)), c);
  }
  return out;
}

QeModule::Vec QeModule::act_gen(GenIndex g, const Vec& v) const {
  const NcPoly twisted = us_->inject(us_->lie().sigma(g));
  Vec out;
  for (const auto& [w, c] : v) {
    NcPoly wp(us_->rank());
    wp.add_term(w, 1);
    Vec r = reduce(us_->multiply(twisted, wp));
    for (const auto& [k, rc] : r) acc_term(out, k, rc * c);
  }
  return out;
}

QeModule::Vec QeModule::act_inv(GenIndex s, const Vec& v, int budget) const {
  if (!us_->gens().invertible(s))
    throw std::invalid_argument("act_inv: " + us_->gens().name(s) +
                                " is not an Ore letter");
  Vec acc = v;
  Vec term = v;
  for (int k = 0; !term.empty(); ++k) {
    if (k >= budget)
      throw EngineError("QeModule: unipotent series did not terminate");
    Vec sv = act_gen(s, term);
    Vec next = term;
    for (const auto& [key, c] : sv) acc_term(next, key, -c);
    term = std::move(next);  // (1 - s)^{k+1} v
    for (const auto& [key, c] : term) acc_term(acc, key, c);
  }
  return acc;
}

QeModule::Vec QeModule::act(const NcPoly& u, const Vec& v) const {
  Vec out;
  for (const auto& [m, c] : u.terms()) {
    Vec cur = v;
    const auto& fs = m.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      const auto [g, e] = *it;
      if (e > 0) {
        for (int i = 0; i < e; ++i) cur = act_gen(g, cur);
      } else {
        for (int i = 0; i < -e; ++i) cur = act_inv(g, cur);
      }
    }
    for (const auto& [key, vc] : cur) acc_term(out, key, vc * c);
  }
  return out;
}

bool QeModule::is_whittaker(const Vec& v) const {
  if (v.empty()) return false;
  const GeneratorTable& G = us_->gens();
  for (GenIndex s = G.s_begin(); s < (GenIndex)G.size(); ++s)
    if (act_gen(s, v) != v) return false;
  return true;
}

PtauModule::PtauModule(const UsAlgebra& us, const WeylAlgebra& w)
    : us_(&us), w_(&w) {
  if (us.rank() != w.vars())
    throw std::invalid_argument("PtauModule: rank mismatch");
  const int d = us.gens().size();
  tau_phi_.reserve(d);
  for (GenIndex g = 0; g < (GenIndex)d; ++g)
    tau_phi_.push_back(w.tau(w.phi_gen(us, g)));
}

PtauModule::Vec PtauModule::t1_inv() const {
  Key k(n(), 0);
  k[0] = -1;
  return {{k, Rational(1)}};
}

PtauModule::Vec PtauModule::apply_weyl(const WeylPoly& op, const Vec& v) const {
  Vec out;
  for (const auto& [key, cv] : v)
    for (const auto& [m, cw] : op.terms()) {
      Rational coef = cv * cw;
      Key nk = key;
      for (int i = 0; i < n() && coef != 0; ++i) {
        if (m.d[i] < 0)
          throw std::logic_error("PtauModule: negative d-exponent in operator");
        coef *= falling(Rational(key[i]), m.d[i]);
        nk[i] = key[i] - m.d[i] + m.t[i];
      }
      if (coef == 0) continue;
      if (nk[0] >= 0) continue;  // quotient by C[t_1]
      acc_term(out, nk, coef);
    }
  return out;
}

PtauModule::Vec PtauModule::act_gen(GenIndex g, const Vec& v) const {
  return apply_weyl(tau_phi_[g], v);
}

PtauModule::Vec PtauModule::act_inv(GenIndex s, const Vec& v, int budget) const {
  if (!us_->gens().invertible(s))
    throw std::invalid_argument("act_inv: not an Ore letter");
  Vec acc = v;
  Vec term = v;
  for (int k = 0; !term.empty(); ++k) {
    if (k >= budget)
      throw EngineError("PtauModule: unipotent series did not terminate");
    Vec sv = act_gen(s, term);
    Vec next = term;
    for (const auto& [key, c] : sv) acc_term(next, key, -c);
    term = std::move(next);
    for (const auto& [key, c] : term) acc_term(acc, key, c);
  }
  return acc;
}

PtauModule::Vec PtauModule::act(const NcPoly& u, const Vec& v) const {
  Vec out;
  for (const auto& [m, c] : u.terms()) {
    Vec cur = v;
    const auto& fs = m.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      const auto [g, e] = *it;
      if (e > 0) {
        for (int i = 0; i < e; ++i) cur = act_gen(g, cur);
      } else {
        for (int i = 0; i < -e; ++i) cur = act_inv(g, cur);
      }
    }
    for (const auto& [key, vc] : cur) acc_term(out, key, vc * c);
  }
  return out;
}

OneDimRep one_dim_rep(const WAlgebra& w) {
  OneDimRep rep;
  rep.n = w.rank();
  const Rational nn(rep.n);
  for (const ALabel& l : w.labels()) {
    Rational v;
    switch (l.kind) {
      case AKind::SumK1:
        v = rat(-1, 2);
        break;
      case AKind::SumKL:
        v = rat(1, 4) - (l.k == l.l ? rat(1, 2) : Rational(0));
        break;
      case AKind::DiffIJ:
        v = rat(-1, 2);
        break;
      case AKind::DiffK1:
        v = rat(-1, 4);
        break;
      case AKind::Neg11:
        v = rat(1, 4) - nn * nn;
        break;
      case AKind::Neg1K:
        v = rat(-1, 2) - nn;
        break;
      case AKind::NegKL:
        v = rat(-1);
        break;
    }
    rep.scalars[l] = v;
  }
  return rep;
}

PtauWindow ptau_window(int n, int depth, int width) {
  if (depth < 1 || width < 0)
    throw std::invalid_argument("ptau_window: bad dimensions");
  PtauWindow w;
  std::vector<std::int32_t> key(n, 0);
  // Enumerate c_1 in [-depth, -1], c_i in [0, width].
  std::vector<int> caps(n, width);
  key[0] = -depth;
  for (;;) {
    w.index[key] = (int)w.basis.size();
    w.basis.push_back(key);
    int i = n - 1;
    for (; i >= 1; --i) {
      if (key[i] < caps[i]) {
        ++key[i];
        break;
      }
      key[i] = 0;
    }
    if (i >= 1) continue;
    if (key[0] < -1) {
      ++key[0];
      continue;
    }
    break;
  }
  return w;
}

std::vector<PtauModule::Vec> whittaker_vectors(const PtauModule& mod,
                                               const PtauWindow& window) {
  const int n = mod.n();
  const int nb = (int)window.basis.size();
  const GeneratorTable& G = mod.us().gens();
  // One stacked column per window vector; rows indexed by (ore letter,
  // window basis element).
  std::vector<SparseVec> cols(nb);
  for (int j = 0; j < nb; ++j) {
    PtauModule::Vec e{{window.basis[j], Rational(1)}};
    for (int s = 0; s < n; ++s) {
      PtauModule::Vec img = mod.act_gen((GenIndex)(G.s_begin() + s), e);
      PtauModule::Vec diff = img;
      acc_term(diff, window.basis[j], Rational(-1));
      for (const auto& [key, c] : diff) {
        auto it = window.index.find(key);
        if (it == window.index.end())
          throw std::invalid_argument(
              "whittaker_vectors: window not closed under the Ore actions");
        cols[j][s * nb + it->second] = c;
      }
    }
  }
  auto kern = sparse_kernel(cols);
  std::vector<PtauModule::Vec> out;
  for (const auto& k : kern) {
    PtauModule::Vec v;
    for (const auto& [j, c] : k) acc_term(v, window.basis[j], c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace spw
