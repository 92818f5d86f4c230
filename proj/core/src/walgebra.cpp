#include "spw/walgebra.hpp"

#include <stdexcept>

namespace spw {

namespace {

std::string eps(int k) { return "e" + std::to_string(k); }

}  // namespace

std::string ALabel::str() const {
  switch (kind) {
    case AKind::SumK1:
      return "A(" + eps(k) + "+" + eps(1) + ")";
    case AKind::SumKL:
      if (k == l) return "A(2" + eps(k) + ")";
      return "A(" + eps(k) + "+" + eps(l) + ")";
    case AKind::DiffIJ:
      return "A(" + eps(k) + "-" + eps(l) + ")";
    case AKind::DiffK1:
      return "A(" + eps(k) + "-" + eps(1) + ")";
    case AKind::Neg11:
      return "A(-2" + eps(1) + ")";
    case AKind::Neg1K:
      return "A(-" + eps(1) + "-" + eps(k) + ")";
    case AKind::NegKL:
      if (k == l) return "A(-2" + eps(k) + ")";
      return "A(-" + eps(k) + "-" + eps(l) + ")";
  }
  return "A(?)";
}

WAlgebra::WAlgebra(const UsAlgebra& us) : us_(&us) {
  const int n = rank();
  auto u8 = [](int v) { return (std::uint8_t)v; };
  for (int k = 2; k <= n; ++k) labels_.push_back({AKind::SumK1, u8(k), 0});
  for (int k = 2; k <= n; ++k)
    for (int l = k; l <= n; ++l) labels_.push_back({AKind::SumKL, u8(k), u8(l)});
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j)
      if (i != j) labels_.push_back({AKind::DiffIJ, u8(i), u8(j)});
  for (int k = 2; k <= n; ++k) labels_.push_back({AKind::DiffK1, u8(k), 0});
  labels_.push_back({AKind::Neg11, 0, 0});
  for (int k = 2; k <= n; ++k) labels_.push_back({AKind::Neg1K, u8(k), 0});
  for (int k = 2; k <= n; ++k)
    for (int l = k; l <= n; ++l) labels_.push_back({AKind::NegKL, u8(k), u8(l)});
}

NcPoly WAlgebra::build_a(const ALabel& a, AVariant v) const {
  const UsAlgebra& U = *us_;
  const int n = rank();
  const int k = a.k, l = a.l;
  if ((a.kind != AKind::Neg11 && (k < 2 || k > n)) ||
      ((a.kind == AKind::SumKL || a.kind == AKind::DiffIJ ||
        a.kind == AKind::NegKL) &&
       (l < 2 || l > n)))
    throw std::invalid_argument("A label index out of range: " + a.str());

  auto S1 = [&](int e) { return U.gen(sum_root(1, 1), e); };
  auto D1 = [&](int j, int e = 1) { return U.gen(diff_root(1, j), e); };
  auto H = [&](int i) { return U.gen(cartan(i)); };
  auto chain = [&](std::initializer_list<NcPoly> fs) {
    NcPoly p = U.one();
    for (const auto& f : fs) p = U.multiply(p, f);
    return p;
  };
  NcPoly In = U.zero();
  for (int i = 1; i <= n; ++i) In += H(i);

  switch (a.kind) {
    case AKind::SumK1:
      return chain({U.gen(sum_root(1, k)), D1(k), S1(-1)}) - H(k);
    case AKind::SumKL: {
      NcPoly p = chain({U.gen(sum_root(k, l)), D1(k), D1(l), S1(-1)});
      p -= chain({U.gen(sum_root(1, l)), H(k), D1(l), S1(-1)});
      p -= chain({U.gen(sum_root(1, k)), H(l), D1(k), S1(-1)});
      NcPoly hk = H(k);
      if (k == l) hk -= U.one();
      p += U.multiply(H(l), hk);
      return p;
    }
    case AKind::DiffIJ:
      return chain({U.gen(diff_root(k, l)), D1(k), D1(l, -1)}) - H(k);
    case AKind::DiffK1: {
      NcPoly p = chain({U.gen(diff_root(k, 1)), D1(k)});
      for (int j = 2; j <= n; ++j) {
        if (j == k) continue;
        p += chain({U.gen(diff_root(k, j)), H(j) - U.one(), D1(k), D1(j, -1)});
      }
      p += U.multiply(H(k), H(k) - U.one());
      const NcPoly in2 = In + rat(2) * U.one();
      if (v == AVariant::Display)
        p -= chain({U.gen(sum_root(1, k)), in2, D1(k), S1(-1)});
      else
        p -= chain({U.gen(sum_root(1, k)), D1(k), in2, S1(-1)});
      return p;
    }
    case AKind::Neg11: {
      NcPoly p = chain({U.gen(neg_sum_root(1, 1)), S1(1)});
      for (int j = 2; j <= n; ++j)
        p += rat(2) * chain({U.gen(neg_sum_root(1, j)), H(j), D1(j, -1), S1(1)});
      for (int j = 2; j <= n; ++j)
        p -= chain({U.gen(neg_sum_root(j, j)), H(j), D1(j, -2), S1(1)});
      for (int p1 = 2; p1 <= n; ++p1)
        for (int p2 = 2; p2 <= n; ++p2)
          p += chain({U.gen(neg_sum_root(p1, p2)), H(p1), H(p2), D1(p1, -1),
                      D1(p2, -1), S1(1)});
      p += U.multiply(In + rat(2 * n) * U.one(), In);
      return p;
    }
    case AKind::Neg1K: {
      NcPoly p = chain({U.gen(neg_sum_root(1, k)), D1(k, -1), S1(1)});
      for (int j = 2; j <= n; ++j)
        p += chain({U.gen(neg_sum_root(k, j)), H(j), D1(k, -1), D1(j, -1), S1(1)});
      p += In;
      return p;
    }
    case AKind::NegKL:
      return chain({U.gen(neg_sum_root(k, l)), D1(k, -1), D1(l, -1), S1(1)});
  }
  throw std::logic_error("build_a: unreachable");
}

const NcPoly& WAlgebra::a_value(const ALabel& l) const {
  auto it = a_cache_.find(l);
  if (it == a_cache_.end())
    it = a_cache_.emplace(l, build_a(l, AVariant::Display)).first;
  return it->second;
}

std::vector<GenIndex> WAlgebra::b_generator_list() const {
  std::vector<GenIndex> out;
  const GeneratorTable& G = us_->gens();
  for (int i = 1; i <= rank(); ++i) out.push_back(G.h(i));
  for (GenIndex s = G.s_begin(); s < (GenIndex)G.size(); ++s) out.push_back(s);
  return out;
}

bool WAlgebra::centralizer_check(const NcPoly& p, std::string* witness) const {
  const GeneratorTable& G = us_->gens();
  for (GenIndex g : b_generator_list()) {
    if (!us_->commutator(p, us_->gen(g)).is_zero()) {
      if (witness) *witness = G.name(g);
      return false;
    }
    if (G.invertible(g) && !us_->commutator(p, us_->gen(g, -1)).is_zero()) {
      if (witness) *witness = G.name(g) + "^-1";
      return false;
    }
  }
  return true;
}

BSum WAlgebra::bsum_of_b(const NcPoly& b) const {
  BSum out;
  for (const auto& [m, c] : b.terms()) {
    for (const auto& [g, _] : m.factors())
      if (!is_b_letter(g))
        throw std::invalid_argument("bsum_of_b: letter outside B");
    out[{m, {}}] = c;
  }
  return out;
}

BSum WAlgebra::bsum_of_a(const ALabel& l) const {
  BSum out;
  out[{PbwMonomial(), {l}}] = 1;
  return out;
}

BSum WAlgebra::bsum_mul(const BSum& x, const BSum& y) const {
  BSum out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) {
      NcPoly bx(rank()), by(rank());
      bx.add_term(wx.b, 1);
      by.add_term(wy.b, 1);
      NcPoly prod = us_->multiply(bx, by);
      std::vector<ALabel> word = wx.a;
      word.insert(word.end(), wy.a.begin(), wy.a.end());
      for (const auto& [m, c] : prod.terms()) {
        BWord key{m, word};
        auto [it, fresh] = out.emplace(std::move(key), cx * cy * c);
        if (!fresh) {
          it->second += cx * cy * c;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  return out;
}

const BSum& WAlgebra::x_expression(GenIndex alpha) const {
  auto it = expr_cache_.find(alpha);
  if (it == expr_cache_.end())
    it = expr_cache_.emplace(alpha, build_x_expression(alpha)).first;
  return it->second;
}

BSum WAlgebra::build_x_expression(GenIndex alpha) const {
  const UsAlgebra& U = *us_;
  const GeneratorTable& G = U.gens();
  const GeneratorId id = G.id(alpha);
  const int n = rank();
  if (is_b_letter(alpha))
    throw std::invalid_argument("x_expression: " + G.name(alpha) +
                                " already lies in B");

  auto S1 = [&](int e) { return U.gen(sum_root(1, 1), e); };
  auto D1 = [&](int j, int e = 1) { return U.gen(diff_root(1, j), e); };
  auto H = [&](int i) { return U.gen(cartan(i)); };
  auto chain = [&](std::initializer_list<NcPoly> fs) {
    NcPoly p = U.one();
    for (const auto& f : fs) p = U.multiply(p, f);
    return p;
  };
  auto B = [&](const NcPoly& p) { return bsum_of_b(p); };
  auto A = [&](ALabel l) { return bsum_of_a(l); };
  auto add = [](BSum& acc, const BSum& s, const Rational& c = Rational(1)) {
    for (const auto& [w, v] : s) {
      auto [it, fresh] = acc.emplace(w, v * c);
      if (!fresh) {
        it->second += v * c;
        if (it->second == 0) acc.erase(it);
      }
    }
  };
  NcPoly In = U.zero();
  for (int i = 1; i <= n; ++i) In += H(i);
  auto u8 = [](int v) { return (std::uint8_t)v; };

  BSum out;
  if (id.kind == GenKind::Sum && id.i == 1 && id.j >= 2) {
    // X_{e_k+e_1} = X_{e_1-e_k}^-1 X_{2e_1} A + h_k X_{e_1-e_k}^-1 X_{2e_1}
    const int k = id.j;
    add(out, bsum_mul(B(chain({D1(k, -1), S1(1)})), A({AKind::SumK1, u8(k), 0})));
    add(out, B(chain({H(k), D1(k, -1), S1(1)})));
  } else if (id.kind == GenKind::Sum) {
    const int k = id.i, l = id.j;
    add(out, bsum_mul(B(chain({D1(k, -1), D1(l, -1), S1(1)})),
                      A({AKind::SumKL, u8(k), u8(l)})));
    add(out, bsum_mul(x_expression(G.index(sum_root(1, l))),
                      B(chain({H(k), D1(k, -1)}))));
    add(out, bsum_mul(x_expression(G.index(sum_root(1, k))),
                      B(chain({H(l), D1(l, -1)}))));
    NcPoly hk = H(k);
    if (k == l) hk -= U.one();
    add(out, B(chain({H(l), hk, D1(k, -1), D1(l, -1), S1(1)})), rat(-1));
  } else if (id.kind == GenKind::Diff && id.j >= 2) {
    // i, j >= 2, i != j
    const int i = id.i, j = id.j;
    add(out, bsum_mul(B(chain({D1(i, -1), D1(j, 1)})),
                      A({AKind::DiffIJ, u8(i), u8(j)})));
    add(out, B(chain({H(i), D1(i, -1), D1(j, 1)})));
  } else if (id.kind == GenKind::Diff && id.j == 1) {
    const int k = id.i;
    add(out, bsum_mul(A({AKind::DiffK1, u8(k), 0}), B(D1(k, -1))));
    for (int j = 2; j <= n; ++j) {
      if (j == k) continue;
      add(out, bsum_mul(x_expression(G.index(diff_root(k, j))),
                        B(chain({H(j) - U.one(), D1(j, -1)}))),
          rat(-1));
    }
    add(out, B(chain({H(k), H(k) - U.one(), D1(k, -1)})), rat(-1));
    add(out, bsum_mul(x_expression(G.index(sum_root(1, k))),
                      B(chain({In + rat(2) * U.one(), S1(-1)}))));
  } else if (id.kind == GenKind::NegSum && id.i >= 2) {
    const int k = id.i, l = id.j;
    add(out, bsum_mul(A({AKind::NegKL, u8(k), u8(l)}),
                      B(chain({D1(k, 1), D1(l, 1), S1(-1)}))));
  } else if (id.kind == GenKind::NegSum && id.i == 1 && id.j >= 2) {
    const int k = id.j;
    add(out, bsum_mul(B(chain({D1(k, 1), S1(-1)})), A({AKind::Neg1K, u8(k), 0})));
    for (int l = 2; l <= n; ++l)
      add(out, bsum_mul(x_expression(G.index(neg_sum_root(k, l))),
                        B(chain({H(l), D1(l, -1)}))),
          rat(-1));
    add(out, B(chain({In, D1(k, 1), S1(-1)})), rat(-1));
  } else if (id.kind == GenKind::NegSum) {
    // X_{-2e_1}
    add(out, bsum_mul(A({AKind::Neg11, 0, 0}), B(S1(-1))));
    for (int k = 2; k <= n; ++k)
      add(out, bsum_mul(x_expression(G.index(neg_sum_root(1, k))),
                        B(chain({H(k), D1(k, -1)}))),
          rat(-2));
    for (int k = 2; k <= n; ++k)
      add(out, bsum_mul(x_expression(G.index(neg_sum_root(k, k))),
                        B(chain({H(k), D1(k, -2)}))));
    for (int k = 2; k <= n; ++k)
      for (int l = 2; l <= n; ++l)
        add(out, bsum_mul(x_expression(G.index(neg_sum_root(k, l))),
                          B(chain({H(k), H(l), D1(k, -1), D1(l, -1)}))),
            rat(-1));
    add(out, B(chain({In + rat(2 * n) * U.one(), In, S1(-1)})), rat(-1));
  } else {
    throw std::invalid_argument("x_expression: unsupported generator " +
                                G.name(alpha));
  }
  return out;
}

bool WAlgebra::inversion_identity(GenIndex alpha) const {
  return expand(x_expression(alpha)) == us_->gen(alpha);
}

BSum WAlgebra::factorize(const NcPoly& p) const {
  if (p.rank() != rank())
    throw std::invalid_argument("factorize: rank mismatch");
  BSum out;
  for (const auto& [m, c] : p.terms()) {
    BSum acc;
    acc[{PbwMonomial(), {}}] = 1;
    for (const auto& [g, e] : m.factors()) {
      if (is_b_letter(g)) {
        acc = bsum_mul(acc, bsum_of_b(us_->gen(g, e)));
      } else {
        for (int i = 0; i < e; ++i) acc = bsum_mul(acc, x_expression(g));
      }
    }
    for (const auto& [w, v] : acc) {
      auto [it, fresh] = out.emplace(w, v * c);
      if (!fresh) {
        it->second += v * c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

NcPoly WAlgebra::expand(const BSum& s) const {
  NcPoly out = us_->zero();
  for (const auto& [w, c] : s) {
    NcPoly b(rank());
    b.add_term(w.b, 1);
    NcPoly p = b;
    for (const ALabel& l : w.a) p = us_->multiply(p, a_value(l));
    p *= c;
    out += p;
  }
  return out;
}

std::string WAlgebra::bsum_text(const BSum& s) const {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : s) {
    if (!first) out += " + ";
    first = false;
    NcPoly b(rank());
    b.add_term(w.b, 1);
    out += rat_str(c) + "*(" + us_->to_text(b) + ")";
    for (const ALabel& l : w.a) out += "*" + l.str();
  }
  return out;
}

std::vector<std::vector<ALabel>> WAlgebra::a_monomials(int max_total_degree) const {
  std::vector<std::vector<ALabel>> out{{}};
  std::vector<std::vector<ALabel>> frontier{{}};
  for (int d = 1; d <= max_total_degree; ++d) {
    std::vector<std::vector<ALabel>> next;
    for (const auto& m : frontier) {
      for (const ALabel& l : labels_) {
        if (!m.empty() && l < m.back()) continue;  // ordered monomials only
        auto w = m;
        w.push_back(l);
        next.push_back(std::move(w));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

bool WAlgebra::pbw_independence(int max_total_degree) const {
  if (max_total_degree < 0) throw std::invalid_argument("negative degree");
  auto monos = a_monomials(max_total_degree);
  std::map<PbwMonomial, int> col_of;
  std::vector<SparseVec> rows;
  for (const auto& m : monos) {
    NcPoly v = us_->one();
    for (const ALabel& l : m) v = us_->multiply(v, a_value(l));
    SparseVec row;
    for (const auto& [mono, c] : v.terms()) {
      auto [it, _] = col_of.emplace(mono, (int)col_of.size());
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  }
  return sparse_rank(rows) == (int)rows.size();
}

BSum WAlgebra::a_commutator_closure(const ALabel& a, const ALabel& b,
                                    bool* trivial_b) const {
  NcPoly c = us_->commutator(a_value(a), a_value(b));
  // Substituting letter by letter represents c in B (x) <A-words>, but
  // two A-words equal in the centralizer need not cancel as words, so
  // the raw factorization can carry spurious B-parts.  The commutator
  // lies in C_{U_S}(B), hence expands with *rational* coefficients in
  // the ordered A-monomial basis; solve for that expansion exactly.
  for (int len = 2; len <= 4; ++len) {
    auto monos = a_monomials(len);
    std::vector<NcPoly> values;
    std::map<PbwMonomial, int> row_of;
    for (const auto& [m, _] : c.terms()) row_of.emplace(m, (int)row_of.size());
    for (const auto& mono : monos) {
      NcPoly v = us_->one();
      for (const ALabel& l : mono) v = us_->multiply(v, a_value(l));
      for (const auto& [m, _] : v.terms()) row_of.emplace(m, (int)row_of.size());
      values.push_back(std::move(v));
    }
    RatMatrix mat = mat_zero((int)row_of.size(), (int)monos.size());
    for (size_t j = 0; j < values.size(); ++j)
      for (const auto& [m, coef] : values[j].terms())
        mat[(size_t)row_of.at(m)][j] = coef;
    std::vector<Rational> rhs(row_of.size(), Rational(0));
    for (const auto& [m, coef] : c.terms()) rhs[(size_t)row_of.at(m)] = coef;
    auto sol = solve(mat, rhs);
    if (!sol) continue;
    // Certify the solution by expanding it back.
    BSum out;
    NcPoly rebuilt = us_->zero();
    for (size_t j = 0; j < monos.size(); ++j) {
      if ((*sol)[j] == 0) continue;
      out[{PbwMonomial(), monos[j]}] = (*sol)[j];
      NcPoly v = values[j];
      v *= (*sol)[j];
      rebuilt += v;
    }
    if (!(rebuilt == c)) continue;
    if (trivial_b) *trivial_b = true;
    return out;
  }
  if (trivial_b) *trivial_b = false;
  return factorize(c);
}

const NcPoly& WAlgebra::casimir() const {
  if (!casimir_) {
    const GeneratorTable& G = us_->gens();
    const int d = G.size();
    RatMatrix gram = mat_zero(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b)
        gram[a][b] = gram[b][a] =
            mat_trace(mat_mul(G.matrix((GenIndex)a), G.matrix((GenIndex)b)));
    RatMatrix inv = mat_inverse(gram);
    NcPoly c = us_->zero();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (inv[a][b] == 0) continue;
        c += inv[a][b] *
             us_->multiply(us_->gen((GenIndex)a), us_->gen((GenIndex)b));
      }
    casimir_ = std::move(c);
  }
  return *casimir_;
}

}  // namespace spw
