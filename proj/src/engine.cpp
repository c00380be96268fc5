#include "kup/engine.hpp"

#include <map>
#include <ostream>

namespace kup {

namespace {

// A sparse linear combination of basis tuples of a tensor power of A.
using Terms = std::map<std::vector<uint32_t>, Scalar>;

void add_term(Terms& t, std::vector<uint32_t> key, Scalar v) {
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), std::move(v));
  } else {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

void trace_stage(std::ostream* trace, const char* stage, const Terms& t) {
  if (trace) *trace << "stage " << stage << ": " << t.size() << " terms\n";
}

// Applies Delta_{|l|} to factor `slot` of every term, one comultiplication at
// a time with eager like-term collection. The factor is replaced by `arity`
// factors.
Terms apply_delta(const HopfAlgebraData& h, const Terms& in, size_t slot,
                  size_t arity) {
  size_t dim = h.dim();
  if (arity == 0) {
    Terms out;
    for (const auto& [key, v] : in) {
      Scalar c = v * h.eps.entry(0, key[slot]);
      if (c.is_zero()) continue;
      std::vector<uint32_t> nk(key.begin(), key.end());
      nk.erase(nk.begin() + slot);
      add_term(out, std::move(nk), std::move(c));
    }
    return out;
  }
  Terms cur = in;
  for (size_t step = 1; step < arity; ++step) {
    // Split the factor at position slot + step - 1 into two.
    size_t pos = slot + step - 1;
    Terms next;
    for (const auto& [key, v] : cur) {
      for (const auto& [p, dv] : h.delta.col(key[pos])) {
        std::vector<uint32_t> nk(key.begin(), key.end());
        nk[pos] = (uint32_t)(p / dim);
        nk.insert(nk.begin() + pos + 1, (uint32_t)(p % dim));
        add_term(next, std::move(nk), v * dv);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// Applies mu_{|u|} to the `arity` consecutive factors starting at `slot`,
// replacing them by one factor.
Terms apply_mu(const HopfAlgebraData& h, const Terms& in, size_t slot,
               size_t arity) {
  size_t dim = h.dim();
  if (arity == 0) {
    Terms out;
    for (const auto& [key, v] : in)
      for (const auto& [y, ev] : h.eta.col(0)) {
        std::vector<uint32_t> nk(key.begin(), key.end());
        nk.insert(nk.begin() + slot, (uint32_t)y);
        add_term(out, std::move(nk), v * ev);
      }
    return out;
  }
  Terms cur = in;
  for (size_t step = 1; step < arity; ++step) {
    Terms next;
    for (const auto& [key, v] : cur) {
      for (const auto& [y, mv] :
           h.mu.col((size_t)key[slot] * dim + key[slot + 1])) {
        std::vector<uint32_t> nk(key.begin(), key.end());
        nk[slot] = (uint32_t)y;
        nk.erase(nk.begin() + slot + 1);
        add_term(next, std::move(nk), v * mv);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Terms apply_antipodes(const HopfAlgebraData& h, const Terms& in,
                      const std::vector<int>& kappas) {
  Terms out;
  for (const auto& [key, v] : in) {
    // Fan out over the sparse antipode columns of every kappa = 1 position.
    Terms partial;
    partial.emplace(key, v);
    for (size_t pos = 0; pos < kappas.size(); ++pos) {
      if (kappas[pos] == 0) continue;
      Terms next;
      for (const auto& [k2, v2] : partial)
        for (const auto& [y, sv] : h.antipode.col(k2[pos])) {
          std::vector<uint32_t> nk = k2;
          nk[pos] = (uint32_t)y;
          add_term(next, std::move(nk), v2 * sv);
        }
      partial = std::move(next);
    }
    for (auto& [k2, v2] : partial) add_term(out, k2, std::move(v2));
  }
  return out;
}

// Reindexes every term by sigma (1-based low -> up positions) with the Koszul
// sign from inversion counting.
Terms apply_permutation(const HopfAlgebraData& h,
                        const std::vector<size_t>& sigma, const Terms& in) {
  const auto& ctx = *h.A.context();
  size_t n = sigma.size();
  std::vector<std::pair<size_t, size_t>> inversions;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (sigma[i] > sigma[j]) inversions.push_back({i, j});
  Terms out;
  for (const auto& [key, v] : in) {
    std::vector<uint32_t> nk(n);
    for (size_t i = 0; i < n; ++i) nk[sigma[i] - 1] = key[i];
    Scalar c = v;
    for (const auto& [i, j] : inversions)
      c *= ctx.koszul(h.A.degree(key[i]), h.A.degree(key[j]));
    add_term(out, std::move(nk), std::move(c));
  }
  return out;
}

struct Plan {
  DiagramPermutation perm;
  std::vector<size_t> lower_arities, upper_arities;
  size_t N = 0;
};

Plan make_plan(const HopfAlgebraData& h, const HeegaardDiagram& d) {
  require_involutory(h);
  validate_diagram(d);
  Plan p;
  p.perm = extract_permutation(d);
  for (const auto& c : d.lower) p.lower_arities.push_back(c.points.size());
  for (const auto& c : d.upper) p.upper_arities.push_back(c.points.size());
  p.N = p.perm.sigma.size();
  return p;
}

// The shared pipeline between the seed (after Omega) and phi.
Terms run_plan(const HopfAlgebraData& h, const Plan& p, Terms terms,
               KADOrder order, std::ostream* trace) {
  trace_stage(trace, "seed", terms);
  size_t slot = 0;
  for (size_t c = 0; c < p.lower_arities.size(); ++c) {
    terms = apply_delta(h, terms, slot, p.lower_arities[c]);
    slot += p.lower_arities[c];
  }
  trace_stage(trace, "Delta_low", terms);
  if (order == KADOrder::antipodes_low) {
    terms = apply_antipodes(h, terms, p.perm.lower_kappas);
    trace_stage(trace, "S_low", terms);
    terms = apply_permutation(h, p.perm.sigma, terms);
    trace_stage(trace, "P_sigma", terms);
  } else {
    terms = apply_permutation(h, p.perm.sigma, terms);
    trace_stage(trace, "P_sigma", terms);
    terms = apply_antipodes(h, terms, p.perm.upper_kappas);
    trace_stage(trace, "S_up", terms);
  }
  slot = 0;
  for (size_t c = 0; c < p.upper_arities.size(); ++c) {
    terms = apply_mu(h, terms, slot, p.upper_arities[c]);
    slot += 1;
  }
  trace_stage(trace, "mu_up", terms);
  return terms;
}

GradedSpace power_space(const GradedSpace& a, unsigned g) {
  GradedSpace out = a;
  for (unsigned i = 1; i < g; ++i) out = tensor(out, a);
  return out;
}

}  // namespace

GradedMorphism evaluate_KAD(const HopfAlgebraData& h, const HeegaardDiagram& d,
                            KADOrder order) {
  Plan p = make_plan(h, d);
  unsigned g = d.genus;
  size_t dim = h.dim();
  GradedSpace Ag = power_space(h.A, g);
  GradedMorphism out(Ag, Ag);
  for (size_t col = 0; col < Ag.dim(); ++col) {
    std::vector<uint32_t> key(g);
    size_t rest = col;
    for (unsigned i = g; i-- > 0;) {
      key[i] = (uint32_t)(rest % dim);
      rest /= dim;
    }
    Terms seed;
    seed.emplace(std::move(key), Scalar(1));
    Terms res = run_plan(h, p, std::move(seed), order, nullptr);
    for (const auto& [k2, v] : res) {
      size_t row = 0;
      for (unsigned i = 0; i < g; ++i) row = row * dim + k2[i];
      out.set(row, col, v);
    }
  }
  out.normalize();
  return out;
}

Scalar evaluate_upsilon(const HopfAlgebraData& h, const GoodPair& pair,
                        const HeegaardDiagram& d, KADOrder order,
                        std::ostream* trace) {
  Plan p = make_plan(h, d);
  unsigned g = d.genus;
  // Seed: Omega^{(x)g}.
  Terms terms;
  terms.emplace(std::vector<uint32_t>{}, Scalar(1));
  for (unsigned i = 0; i < g; ++i) {
    Terms next;
    for (const auto& [key, v] : terms)
      for (const auto& [y, ov] : pair.Omega.col(0)) {
        std::vector<uint32_t> nk = key;
        nk.push_back((uint32_t)y);
        add_term(next, std::move(nk), v * ov);
      }
    terms = std::move(next);
  }
  terms = run_plan(h, p, std::move(terms), order, trace);
  // phi^{(x)g}: I^{(x)g} is a line, so the result is the accumulated scalar.
  Scalar acc(0);
  for (const auto& [key, v] : terms) {
    Scalar c = v;
    for (unsigned i = 0; i < g && !c.is_zero(); ++i)
      c *= pair.phi.entry(0, key[i]);
    acc += c;
  }
  if (trace) *trace << "upsilon " << acc.str() << "\n";
  return acc;
}

unsigned gamma_exponent(const Scalar& sigma_I, const Scalar& nu) {
  if (!(sigma_I * sigma_I).is_one() || !(nu * nu).is_one())
    throw scalar_error("gamma_exponent inputs must square to 1");
  return (sigma_I.is_one() && nu.is_one()) ? 1 : 2;
}

Scalar evaluate_invariant(const HopfAlgebraData& h, const GoodPair& pair,
                          const HeegaardDiagram& d, KADOrder order,
                          std::ostream* trace) {
  Scalar u = evaluate_upsilon(h, pair, d, order, trace);
  return u.pow(gamma_exponent(pair.sigma_I, pair.nu));
}

namespace {

// Flat sparse column over a tensor power, indexed base dim(A), leftmost
// factor most significant.
using FlatCol = std::map<uint64_t, Scalar>;

void flat_add(FlatCol& c, uint64_t i, const Scalar& v) {
  auto it = c.find(i);
  if (it == c.end()) {
    c.emplace(i, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

std::vector<uint32_t> decode(uint64_t idx, size_t dim, size_t n) {
  std::vector<uint32_t> digits(n);
  for (size_t i = n; i-- > 0;) {
    digits[i] = (uint32_t)(idx % dim);
    idx /= dim;
  }
  return digits;
}

// out += coeff * (Kronecker product of the given per-factor columns).
void kron_expand(const std::vector<const SparseCol*>& cols, size_t pos,
                 uint64_t row_acc, const Scalar& coeff,
                 const std::vector<uint64_t>& strides, FlatCol& out) {
  if (pos == cols.size()) {
    flat_add(out, row_acc, coeff);
    return;
  }
  for (const auto& [r, v] : *cols[pos])
    kron_expand(cols, pos + 1, row_acc + r * strides[pos], coeff * v, strides,
                out);
}

// Applies a stage that acts as a Kronecker product of blocks. Each block maps
// in_arities[b] factors to a morphism whose columns are indexed flat.
FlatCol apply_block_stage(const FlatCol& in, size_t dim,
                          const std::vector<const GradedMorphism*>& blocks,
                          const std::vector<size_t>& in_arities,
                          const std::vector<size_t>& out_arities) {
  size_t nblocks = blocks.size();
  std::vector<uint64_t> out_strides(nblocks, 1);
  size_t total_out = 0;
  for (size_t b = 0; b < nblocks; ++b) total_out += out_arities[b];
  {
    size_t consumed = 0;
    for (size_t b = 0; b < nblocks; ++b) {
      consumed += out_arities[b];
      uint64_t s = 1;
      for (size_t k = 0; k < total_out - consumed; ++k) s *= dim;
      out_strides[b] = s;
    }
  }
  FlatCol out;
  for (const auto& [idx, v] : in) {
    size_t total_in = 0;
    for (size_t b = 0; b < nblocks; ++b) total_in += in_arities[b];
    std::vector<uint32_t> digits = decode(idx, dim, total_in);
    std::vector<const SparseCol*> cols(nblocks);
    size_t off = 0;
    for (size_t b = 0; b < nblocks; ++b) {
      uint64_t col = 0;
      for (size_t k = 0; k < in_arities[b]; ++k)
        col = col * dim + digits[off + k];
      off += in_arities[b];
      cols[b] = &blocks[b]->col(col);
    }
    kron_expand(cols, 0, 0, v, out_strides, out);
  }
  return out;
}

}  // namespace

Scalar dense_oracle(const HopfAlgebraData& h, const GoodPair& pair,
                    const HeegaardDiagram& d, unsigned long max_entries) {
  Plan p = make_plan(h, d);
  size_t dim = h.dim();
  unsigned long budget = 1;
  for (size_t i = 0; i < p.N; ++i) {
    if (budget > max_entries / (dim ? dim : 1))
      throw budget_error("dense oracle budget exceeded: dim^N too large");
    budget *= dim;
  }
  unsigned g = d.genus;

  // Seed column Omega^{(x)g} by the Kronecker rule.
  GradedMorphism idA = GradedMorphism::identity(h.A);
  FlatCol cur;
  {
    std::vector<const GradedMorphism*> blocks(g, &pair.Omega);
    std::vector<size_t> ia(g, 0), oa(g, 1);
    FlatCol one;
    one.emplace(0, Scalar(1));
    cur = apply_block_stage(one, dim, blocks, ia, oa);
  }

  // Delta_low.
  {
    std::vector<const GradedMorphism*> blocks;
    std::vector<GradedMorphism> owned;
    owned.reserve(p.lower_arities.size());
    for (size_t a : p.lower_arities) owned.push_back(delta_n(h, (unsigned)a));
    for (auto& m : owned) blocks.push_back(&m);
    std::vector<size_t> ia(p.lower_arities.size(), 1);
    cur = apply_block_stage(cur, dim, blocks, ia, p.lower_arities);
  }

  // S_low as a Kronecker product of id / S factors.
  {
    std::vector<const GradedMorphism*> blocks;
    for (int k : p.perm.lower_kappas)
      blocks.push_back(k ? &h.antipode : &idA);
    std::vector<size_t> ones(p.N, 1);
    cur = apply_block_stage(cur, dim, blocks, ones, ones);
  }

  // P_sigma as a signed permutation matrix on flat indices.
  {
    const auto& ctx = *h.A.context();
    FlatCol next;
    for (const auto& [idx, v] : cur) {
      std::vector<uint32_t> digits = decode(idx, dim, p.N);
      uint64_t out_idx = 0;
      std::vector<uint32_t> placed(p.N, 0);
      for (size_t i = 0; i < p.N; ++i) placed[p.perm.sigma[i] - 1] = digits[i];
      for (size_t i = 0; i < p.N; ++i) out_idx = out_idx * dim + placed[i];
      Scalar c = v;
      for (size_t i = 0; i < p.N; ++i)
        for (size_t j = i + 1; j < p.N; ++j)
          if (p.perm.sigma[i] > p.perm.sigma[j])
            c *= ctx.koszul(h.A.degree(digits[i]), h.A.degree(digits[j]));
      flat_add(next, out_idx, c);
    }
    cur = std::move(next);
  }

  // mu_up.
  {
    std::vector<const GradedMorphism*> blocks;
    std::vector<GradedMorphism> owned;
    owned.reserve(p.upper_arities.size());
    for (size_t a : p.upper_arities) owned.push_back(mu_n(h, (unsigned)a));
    for (auto& m : owned) blocks.push_back(&m);
    std::vector<size_t> oa(p.upper_arities.size(), 1);
    cur = apply_block_stage(cur, dim, blocks, p.upper_arities, oa);
  }

  // phi^{(x)g}.
  Scalar acc(0);
  for (const auto& [idx, v] : cur) {
    std::vector<uint32_t> digits = decode(idx, dim, g);
    Scalar c = v;
    for (unsigned i = 0; i < g && !c.is_zero(); ++i)
      c *= pair.phi.entry(0, digits[i]);
    acc += c;
  }
  return acc.pow(gamma_exponent(pair.sigma_I, pair.nu));
}

}  // namespace kup
