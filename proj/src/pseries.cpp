#include "thetarep/pseries.hpp"

#include <algorithm>

namespace thetarep {

const char* lambda_sym_name(LambdaSym s) {
  switch (s) {
    case LambdaSym::X: return "x";
    case LambdaSym::XM1: return "x-1";
    case LambdaSym::PM2: return "p-2-x";
    case LambdaSym::PM1: return "p-1-x";
  }
  return "?";
}

int eval_lambda_sym(LambdaSym s, int a, int p) {
  switch (s) {
    case LambdaSym::X: return a;
    case LambdaSym::XM1: return a - 1;
    case LambdaSym::PM2: return p - 2 - a;
    case LambdaSym::PM1: return p - 1 - a;
  }
  return 0;
}

namespace {

bool in_S(LambdaSym s) { return s == LambdaSym::PM1 || s == LambdaSym::XM1; }
bool x_type(LambdaSym s) { return s == LambdaSym::X || s == LambdaSym::XM1; }

bool adjacency_ok(LambdaSym cur, LambdaSym next) {
  if (x_type(cur)) return next == LambdaSym::X || next == LambdaSym::PM2;
  return next == LambdaSym::PM1 || next == LambdaSym::XM1;
}

}  // namespace

int LambdaTuple::subset_mask() const {
  int m = 0;
  for (size_t i = 0; i < entries.size(); ++i)
    if (in_S(entries[i])) m |= 1 << i;
  return m;
}

int LambdaTuple::level() const { return __builtin_popcount(subset_mask()); }

std::vector<int> LambdaTuple::evaluate(const std::vector<int>& a, int p) const {
  std::vector<int> w(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) w[i] = eval_lambda_sym(entries[i], a[i], p);
  return w;
}

std::vector<LambdaTuple> enumerate_lambda(int f) {
  if (f < 1) throw Error(ErrorKind::OutOfRange, "f must be >= 1");
  const LambdaSym alphabet[4] = {LambdaSym::X, LambdaSym::XM1, LambdaSym::PM2, LambdaSym::PM1};
  std::vector<LambdaTuple> out;
  std::vector<LambdaSym> cur(f, LambdaSym::X);
  std::vector<int> idx(f, 0);
  while (true) {
    for (int i = 0; i < f; ++i) cur[i] = alphabet[idx[i]];
    bool ok = true;
    for (int i = 0; i < f && ok; ++i) ok = adjacency_ok(cur[i], cur[(i + 1) % f]);
    if (ok) out.push_back(LambdaTuple{cur});
    int i = f - 1;
    while (i >= 0 && idx[i] == 3) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return out;
}

LambdaTuple lambda_for_subset(int mask, int f) {
  LambdaTuple t;
  t.entries.resize(f);
  for (int i = 0; i < f; ++i) {
    bool si = (mask >> i) & 1;
    bool sn = (mask >> ((i + 1) % f)) & 1;
    if (!si && !sn) t.entries[i] = LambdaSym::X;
    else if (!si && sn) t.entries[i] = LambdaSym::PM2;
    else if (si && !sn) t.entries[i] = LambdaSym::XM1;
    else t.entries[i] = LambdaSym::PM1;
  }
  return t;
}

namespace {

// Search the remaining twist assignments against the residual character row.
// Returns true when a unique completion exists; factors gain their twists.
bool assign_twists_by_search(const CharTable& T, std::vector<JhFactor*>& open,
                             const std::vector<CycInt>& target) {
  const long long order = T.field().q() - 1;
  double combos = 1;
  for (size_t i = 0; i < open.size(); ++i) combos *= static_cast<double>(order);
  if (combos > 200000.0) return false;

  std::vector<long long> pick(open.size(), 0), found;
  std::vector<std::vector<long long>> hits;
  while (true) {
    std::vector<CycInt> sum(target.size(), T.ring().zero());
    for (size_t i = 0; i < open.size(); ++i) {
      WeightSum w{{TensorTerm{{open[i]->weight}, pick[i]}}};
      auto row = T.weight_char_row(w);
      for (size_t c = 0; c < sum.size(); ++c) sum[c] = T.ring().add(sum[c], row[c]);
    }
    if (T.rows_equal(sum, target)) hits.push_back(pick);
    size_t i = 0;
    while (i < pick.size() && pick[i] == order - 1) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  if (hits.size() != 1) return false;
  for (size_t i = 0; i < open.size(); ++i) open[i]->twist = hits[0][i];
  return true;
}

}  // namespace

JhResult jh_factors(int p, int f, long long r, const CharTable* table,
                    bool verify_chars) {
  WeightAlgebra W(p, f);
  const long long qm1 = W.q() - 1;
  JhResult res;
  res.r = r;
  res.a = ((r % qm1) + qm1) % qm1;
  res.digits.resize(f);
  long long a = res.a;
  for (int i = 0; i < f; ++i) {
    res.digits[i] = static_cast<int>(a % p);
    a /= p;
  }
  res.generic = (res.a != 0);
  res.full_count = res.generic;
  for (int d : res.digits) res.full_count &= (d >= 1 && d <= p - 2);

  for (int mask = 0; mask < (1 << f); ++mask) {
    JhFactor fac;
    fac.mask = mask;
    fac.lambda = lambda_for_subset(mask, f);
    fac.weight = fac.lambda.evaluate(res.digits, p);
    fac.dropped = std::any_of(fac.weight.begin(), fac.weight.end(), [](int x) { return x < 0; });
    if (!fac.dropped) {
      fac.dim = 1;
      for (int x : fac.weight) fac.dim *= x + 1;
      res.dim_sum += fac.dim;
    }
    if (mask == 0) {
      fac.twist = 0;
      fac.provenance = "identity";
    } else if (f == 2 && !fac.dropped) {
      // twists of the f = 2 socle diagram
      long long a0 = res.digits[0], a1 = res.digits[1];
      if (mask == 0b01) fac.twist = ((1 + a1) * p) % qm1;
      else if (mask == 0b10) fac.twist = (1 + a0) % qm1;
      else fac.twist = res.a;
      fac.provenance = "socle-diagram";
    }
    res.factors.push_back(std::move(fac));
  }

  // character-oracle twists for the remaining factors, desk scale permitting;
  // degenerate a keeps whatever the diagram gave and skips the oracle
  bool in_cap = (W.q() * W.q() <= (1LL << 16));
  bool twists_open = false;
  for (const auto& fac : res.factors)
    if (!fac.dropped && !fac.twist) twists_open = true;
  if (in_cap && res.generic && (verify_chars || twists_open)) {
    std::optional<FieldSpec> local_field;
    std::optional<CharTable> local_table;
    if (!table) {
      local_field = FieldSpec::build(p, f);
      local_table.emplace(*local_field);
      table = &*local_table;
    }
    const CharTable& T = *table;

    std::vector<JhFactor*> open;
    for (auto& fac : res.factors)
      if (!fac.dropped && !fac.twist) open.push_back(&fac);
    if (!open.empty()) {
      auto target = T.induced_char_row(0, res.a);
      for (auto& fac : res.factors) {
        if (fac.dropped || !fac.twist) continue;
        auto row = T.weight_char_row(WeightSum{{TensorTerm{{fac.weight}, *fac.twist}}});
        for (size_t c = 0; c < target.size(); ++c)
          target[c] = T.ring().sub(target[c], row[c]);
      }
      if (assign_twists_by_search(T, open, target)) {
        for (auto* fac : open) fac->provenance = "character-oracle";
      } else {
        for (auto* fac : open) fac->provenance = "undetermined";
      }
    }
    // final verification of the whole assignment
    bool all_set = true;
    for (const auto& fac : res.factors)
      if (!fac.dropped && !fac.twist) all_set = false;
    if (all_set) {
      std::vector<CycInt> sum(T.classes().size(), T.ring().zero());
      for (const auto& fac : res.factors) {
        if (fac.dropped) continue;
        auto row = T.weight_char_row(WeightSum{{TensorTerm{{fac.weight}, *fac.twist}}});
        for (size_t c = 0; c < sum.size(); ++c) sum[c] = T.ring().add(sum[c], row[c]);
      }
      res.char_checked = true;
      res.char_ok = T.rows_equal(sum, T.induced_char_row(0, res.a));
    }
  }
  return res;
}

std::vector<std::vector<int>> socle_layers(const LambdaTuple& tau, int f) {
  const int base = tau.subset_mask();
  const int l0 = __builtin_popcount(base);
  std::vector<std::vector<int>> layers(f - l0 + 1);
  for (int mask = 0; mask < (1 << f); ++mask) {
    if ((mask & base) != base) continue;
    layers[__builtin_popcount(mask) - l0].push_back(mask);
  }
  return layers;
}

HypercubeGraph hypercube_vx(int p, int f, const std::vector<long long>& r, int m_cap) {
  if (static_cast<int>(r.size()) != f)
    throw Error(ErrorKind::DimensionMismatch, "degree tuple length");
  long long q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  for (long long x : r)
    if (x < m_cap + m_cap * q + q)
      throw Error(ErrorKind::BoundViolated,
                  "need r_i >= m + mq + q = " + std::to_string(m_cap + m_cap * q + q));

  HypercubeGraph G;
  G.f = f;
  G.labels.resize(1 << f);
  for (int mask = 0; mask < (1 << f); ++mask) {
    PSeries ps;
    ps.source = "theta-filtration-cell";
    ps.r_prime_digits.resize(f);
    for (int i = 0; i < f; ++i) {
      long long ji = (mask >> i) & 1;
      long long jn = (mask >> ((i + 1) % f)) & 1;
      if (ji) ps.S += pow_ll(p, i);
      ps.r_prime_digits[i] = r[i] - ji - p * jn;
    }
    for (int i = 0; i < f; ++i) ps.r_prime += ps.r_prime_digits[i] * pow_ll(p, i);
    G.labels[mask] = std::move(ps);
  }
  for (int u = 0; u < (1 << f); ++u)
    for (int i = 0; i < f; ++i)
      if (!(u >> i & 1)) G.edges.push_back({u, u | (1 << i)});
  return G;
}

std::vector<Diamond> conjectural_f2_grouping(int a0, int a1, int p) {
  for (int a : {a0, a1})
    if (a == 0 || a == 1 || a == p - 2 || a == p - 1)
      throw Error(ErrorKind::NonGeneric, "need a_i outside {0, 1, p-2, p-1}");
  const long long A = a0 + static_cast<long long>(p) * a1;
  std::vector<Diamond> out(4);
  out[0] = {{{p - a0, p - a1}, A},
            {{a0 - 2, p - 1 - a1}, (1 + a1) * static_cast<long long>(p) + 1},
            {{p - 1 - a0, a1 - 2}, 1 + a0 + p},
            {{a0 - 1, a1 - 1}, p + 1}};
  out[1] = {{{p - a0, p - 2 - a1}, A + p},
            {{a0 - 2, p - 3 - a1}, (2 + a1) * static_cast<long long>(p) + 1},
            {{p - 1 - a0, a1}, 1 + a0},
            {{a0 - 1, a1 + 1}, 1}};
  out[2] = {{{p - 2 - a0, p - a1}, A + 1},
            {{a0, p - 1 - a1}, (1 + a1) * static_cast<long long>(p)},
            {{p - 3 - a0, a1 - 2}, 2 + a0 + p},
            {{a0 + 1, a1 - 1}, p}};
  out[3] = {{{p - 2 - a0, p - 2 - a1}, A + p + 1},
            {{a0, p - 3 - a1}, (2 + a1) * static_cast<long long>(p)},
            {{p - 3 - a0, a1}, 2 + a0},
            {{a0 + 1, a1 + 1}, 0}};
  return out;
}

}  // namespace thetarep
