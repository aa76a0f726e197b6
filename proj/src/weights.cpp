#include "thetarep/weights.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace thetarep {

long long pow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool TensorTerm::is_zero() const {
  for (const auto& f : factors)
    for (int x : f)
      if (x < 0) return true;
  return false;
}

long long TensorTerm::dim() const {
  if (is_zero()) return 0;
  long long d = 1;
  for (const auto& f : factors)
    for (int x : f) d *= (x + 1);
  return d;
}

long long WeightSum::dim() const {
  long long d = 0;
  for (const auto& t : terms) d += t.dim();
  return d;
}

bool lucas_coprime(int p, long long n, long long k) {
  if (k < 0 || k > n) throw Error(ErrorKind::OutOfRange, "binomial index out of range");
  while (n > 0 || k > 0) {
    if (k % p > n % p) return false;
    n /= p;
    k /= p;
  }
  return true;
}

WeightAlgebra::WeightAlgebra(int p, int f) : p_(p), f_(f) {
  if (p < 2 || f < 1) throw Error(ErrorKind::OutOfRange, "bad (p, f)");
  q_ = pow_ll(p, f);
}

long long WeightAlgebra::reduce_det(long long e) const {
  long long m = q_ - 1;
  return ((e % m) + m) % m;
}

TensorTerm WeightAlgebra::canonical_term(TensorTerm t) const {
  if (t.is_zero()) return t;
  // absorb trivial all-zero factors; keep one if everything is trivial
  std::vector<std::vector<int>> kept;
  for (auto& f : t.factors) {
    bool trivial = std::all_of(f.begin(), f.end(), [](int x) { return x == 0; });
    if (!trivial) kept.push_back(std::move(f));
  }
  if (kept.empty()) kept.push_back(std::vector<int>(f_, 0));
  std::sort(kept.begin(), kept.end());
  t.factors = std::move(kept);
  return t;
}

WeightSum WeightAlgebra::normalize(std::vector<TensorTerm> terms) const {
  std::vector<TensorTerm> out;
  for (auto& t : terms) {
    if (t.is_zero()) continue;
    out.push_back(canonical_term(std::move(t)));
  }
  auto key_less = [&](const TensorTerm& a, const TensorTerm& b) {
    if (a.factors != b.factors) return a.factors < b.factors;
    return reduce_det(a.det) < reduce_det(b.det);
  };
  std::stable_sort(out.begin(), out.end(), key_less);
  return {std::move(out)};
}

bool WeightAlgebra::equal(const WeightSum& a, const WeightSum& b) const {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].factors != b.terms[i].factors) return false;
    if (reduce_det(a.terms[i].det) != reduce_det(b.terms[i].det)) return false;
  }
  return true;
}

WeightSum WeightAlgebra::split_step(const std::vector<int>& m, int block, int n_i) const {
  if (static_cast<int>(m.size()) != f_ || block < 0 || block >= f_)
    throw Error(ErrorKind::OutOfRange, "bad block index");
  if (m[block] < 1 || n_i < 1)
    throw Error(ErrorKind::PreconditionViolated, "split_step needs m_i, n_i >= 1");
  if (!lucas_coprime(p_, m[block] + n_i, m[block]))
    throw NotSplitError({block}, "p divides binomial(m_i + n_i, m_i)");

  std::vector<int> sub = m;
  sub[block] -= 1;
  std::vector<int> small(f_, 0);
  small[block] = n_i - 1;
  std::vector<int> big = m;
  big[block] += n_i;

  TensorTerm t1{{sub, small}, pow_ll(p_, block)};
  TensorTerm t2{{big}, 0};
  return normalize({t1, t2});
}

WeightSum WeightAlgebra::cg_general(const std::vector<int>& m, const std::vector<int>& n) const {
  std::vector<int> bad;
  for (int i = 0; i < f_; ++i)
    if (!lucas_coprime(p_, m[i] + n[i], n[i])) bad.push_back(i);
  if (!bad.empty()) throw NotSplitError(bad, "p divides a blockwise binomial");

  std::vector<TensorTerm> terms;
  for (int mask = 0; mask < (1 << f_); ++mask) {
    std::vector<int> first(f_), second(f_);
    long long det = 0;
    for (int i = 0; i < f_; ++i) {
      int l = (mask >> i) & 1;
      first[i] = m[i] - l + (1 - l) * n[i];
      second[i] = l * n[i] - l;
      if (l) det += pow_ll(p_, i);  // psi_p(l)
    }
    terms.push_back({{first, second}, det});
  }
  return normalize(std::move(terms));
}

WeightSum WeightAlgebra::cg_small(const std::vector<int>& m, const std::vector<int>& n) const {
  for (int i = 0; i < f_; ++i) {
    if (!(0 <= m[i] && m[i] <= n[i] && n[i] <= p_ - 1 && m[i] + n[i] <= p_ - 1))
      throw Error(ErrorKind::PreconditionViolated, "small-weight range violated at block " +
                                                       std::to_string(i));
  }
  std::vector<TensorTerm> terms;
  std::vector<int> k(f_, 0);
  while (true) {
    std::vector<int> w(f_);
    long long det = 0;
    for (int i = 0; i < f_; ++i) {
      w[i] = m[i] + n[i] - 2 * k[i];
      det += static_cast<long long>(k[i]) * pow_ll(p_, i);
    }
    terms.push_back({{w}, det});
    int i = 0;
    while (i < f_ && k[i] == m[i]) k[i++] = 0;
    if (i == f_) break;
    ++k[i];
  }
  return normalize(std::move(terms));
}

WeightSum WeightAlgebra::cg_large(const std::vector<int>& m, const std::vector<int>& n) const {
  for (int i = 0; i < f_; ++i) {
    if (!(0 <= m[i] && m[i] <= n[i] && n[i] <= p_ - 1 && p_ - 2 <= m[i] + n[i] &&
          m[i] + n[i] <= 2 * p_ - 2))
      throw Error(ErrorKind::PreconditionViolated, "large-weight range violated at block " +
                                                       std::to_string(i));
  }
  std::vector<TensorTerm> terms;
  for (int mask = 0; mask < (1 << f_); ++mask) {
    std::vector<int> first(f_), second(f_);
    long long det = 0;
    for (int i = 0; i < f_; ++i) {
      int l = (mask >> i) & 1;
      first[i] = l ? (p_ - 2 - m[i]) : (m[i] + n[i] - (p_ - 1));
      second[i] = l ? (p_ - 2 - n[i]) : (p_ - 1);
      if (l) det += static_cast<long long>(m[i] + n[i] + 2 - p_) * pow_ll(p_, i);
    }
    terms.push_back({{first, second}, det});
  }
  return normalize(std::move(terms));
}

WeightSum WeightAlgebra::cg_cross_f2(const std::vector<int>& m, const std::vector<int>& n,
                                     CrossMode mode) const {
  if (f_ != 2) throw Error(ErrorKind::PreconditionViolated, "cross rule is specific to f = 2");
  for (int i = 0; i < 2; ++i)
    if (!(0 <= m[i] && m[i] <= n[i] && n[i] <= p_ - 1))
      throw Error(ErrorKind::PreconditionViolated, "cross rule needs 0 <= m_i <= n_i <= p-1");

  const int m0 = m[0], m1 = m[1], n0 = n[0], n1 = n[1];
  std::vector<TensorTerm> terms;
  if (mode == CrossMode::LowHigh) {
    if (!(m0 + n0 <= p_ - 1 && p_ - 2 <= m1 + n1 && m1 + n1 <= 2 * p_ - 2))
      throw Error(ErrorKind::PreconditionViolated, "low-high ranges violated");
    long long hi = static_cast<long long>(p_) * (m1 + n1 + 2 - p_);
    terms.push_back({{{m0 - 1, p_ - m1 - 2}, {n0 - 1, p_ - n1 - 2}}, hi + 1});
    terms.push_back({{{m0 + n0, p_ - m1 - 2}, {0, p_ - n1 - 2}}, hi});
    terms.push_back({{{m0 - 1, m1 + n1 + 1 - p_}, {n0 - 1, p_ - 1}}, 1});
    terms.push_back({{{m0 + n0, m1 + n1 + 1 - p_}, {0, p_ - 1}}, 0});
  } else {
    if (!(p_ - 2 <= m0 + n0 && m0 + n0 <= 2 * p_ - 2 && m1 + n1 <= p_ - 1))
      throw Error(ErrorKind::PreconditionViolated, "high-low ranges violated");
    long long lo = m0 + n0 + 2 - p_;
    terms.push_back({{{p_ - m0 - 2, m1 - 1}, {p_ - n0 - 2, n1 - 1}}, lo + p_});
    terms.push_back({{{p_ - m0 - 2, m1 + n1}, {p_ - n0 - 2, 0}}, lo});
    terms.push_back({{{m0 + n0 + 1 - p_, m1 - 1}, {p_ - 1, n1 - 1}}, p_});
    terms.push_back({{{m0 + n0 + 1 - p_, m1 + n1}, {p_ - 1, 0}}, 0});
  }
  return normalize(std::move(terms));
}

Weight WeightAlgebra::tensor_projective(const std::vector<int>& m, int k) const {
  if (k < 0) throw Error(ErrorKind::OutOfRange, "k must be >= 0");
  long long pk = pow_ll(p_, k);
  std::vector<int> out(f_);
  for (int j = 0; j < f_; ++j) {
    long long v = (static_cast<long long>(m[(j + k) % f_]) + 1) * pk - 1;
    out[j] = static_cast<int>(v);
  }
  return {out, 0};
}

std::optional<WeightSum> WeightAlgebra::try_pair(const std::vector<int>& a,
                                                 const std::vector<int>& b) const {
  auto is_pk_ones = [&](const std::vector<int>& t, int& k_out) {
    int v = t[0];
    for (int x : t)
      if (x != v) return false;
    long long pk = 1;
    for (int k = 0; pk - 1 <= v; ++k, pk *= p_) {
      if (pk - 1 == v) {
        k_out = k;
        return true;
      }
    }
    return false;
  };
  // A rule must make progress; some instances of the large-weight rule are
  // tautologies (a block with n_i = p-1 reproduces the input term).
  WeightSum input = normalize({TensorTerm{{a, b}, 0}});
  auto accept = [&](WeightSum s) -> std::optional<WeightSum> {
    if (equal(s, input)) return std::nullopt;
    return s;
  };

  int k = 0;
  if (is_pk_ones(b, k)) return normalize({TensorTerm{{tensor_projective(a, k).m}, 0}});
  if (is_pk_ones(a, k)) return normalize({TensorTerm{{tensor_projective(b, k).m}, 0}});

  for (auto [x, y] : {std::pair(&a, &b), std::pair(&b, &a)}) {
    try {
      if (auto r = accept(cg_small(*x, *y))) return r;
    } catch (const Error&) {
    }
  }
  for (auto [x, y] : {std::pair(&a, &b), std::pair(&b, &a)}) {
    try {
      if (auto r = accept(cg_large(*x, *y))) return r;
    } catch (const Error&) {
    }
  }
  if (f_ == 2) {
    for (auto mode : {CrossMode::LowHigh, CrossMode::HighLow})
      for (auto [x, y] : {std::pair(&a, &b), std::pair(&b, &a)}) {
        try {
          if (auto r = accept(cg_cross_f2(*x, *y, mode))) return r;
        } catch (const Error&) {
        }
      }
  }
  try {
    if (auto r = accept(cg_general(a, b))) return r;
  } catch (const Error&) {
  }
  if (auto r = try_peel_block(a, b)) return accept(*r);
  if (auto r = try_peel_block(b, a)) return accept(*r);
  return std::nullopt;
}

// Peel one block of b: a (x) b = (a (x) b_i e_i) (x) (b - b_i e_i), rewriting
// the first factor by the single-block identity (or absorbing it when a_i = 0).
std::optional<WeightSum> WeightAlgebra::try_peel_block(const std::vector<int>& a,
                                                       const std::vector<int>& b) const {
  bool b_multi = std::count_if(b.begin(), b.end(), [](int x) { return x > 0; }) > 1;
  for (int i = 0; i < f_; ++i) {
    if (b[i] < 1) continue;
    std::vector<int> rest = b;
    rest[i] = 0;
    if (a[i] == 0) {
      if (!b_multi) continue;  // a (x) b_i e_i with a_i = 0 merges to a single weight anyway
      std::vector<int> merged = a;
      merged[i] = b[i];
      return normalize({TensorTerm{{merged, rest}, 0}});
    }
    if (!lucas_coprime(p_, a[i] + b[i], a[i])) continue;
    WeightSum split = split_step(a, i, b[i]);
    std::vector<TensorTerm> out;
    for (TensorTerm t : split.terms) {
      t.factors.push_back(rest);
      out.push_back(std::move(t));
    }
    return normalize(std::move(out));
  }
  return std::nullopt;
}

DecomposeResult WeightAlgebra::decompose(const std::vector<int>& m,
                                         const std::vector<int>& n) const {
  if (static_cast<int>(m.size()) != f_ || static_cast<int>(n.size()) != f_)
    throw Error(ErrorKind::OutOfRange, "tuple length must equal f");
  return decompose_terms({TensorTerm{{m, n}, 0}});
}

namespace {

// Memoized resolution of product terms. Total degree never increases under
// any rewrite rule, so the node space is finite; rules that merely rearrange
// a product (reflection rules can cycle) are detected and left as residuals.
struct Resolver {
  const WeightAlgebra& W;
  std::map<std::vector<std::vector<int>>, int> color;  // 0 new, 1 in progress, 2 done
  std::map<std::vector<std::vector<int>>, std::vector<TensorTerm>> memo;

  // One rewrite step on the first pair of factors any rule covers.
  std::optional<std::vector<TensorTerm>> step(const TensorTerm& t) {
    for (size_t i = 0; i < t.factors.size(); ++i)
      for (size_t j = i + 1; j < t.factors.size(); ++j) {
        auto sub = W.try_pair_public(t.factors[i], t.factors[j]);
        if (!sub) continue;
        std::vector<TensorTerm> out;
        for (TensorTerm st : sub->terms) {
          for (size_t k = 0; k < t.factors.size(); ++k)
            if (k != i && k != j) st.factors.push_back(t.factors[k]);
          out.push_back(std::move(st));
        }
        return W.normalize(std::move(out)).terms;
      }
    return std::nullopt;
  }

  // Returns terminal terms (single weights and residual products) with det
  // exponents relative to the node.
  const std::vector<TensorTerm>& resolve(const std::vector<std::vector<int>>& factors) {
    auto it = memo.find(factors);
    if (it != memo.end() && color[factors] == 2) return it->second;
    color[factors] = 1;

    std::vector<TensorTerm> out;
    auto rewritten = step(TensorTerm{factors, 0});
    if (!rewritten) {
      out.push_back(TensorTerm{factors, 0});
    } else {
      for (TensorTerm& t : *rewritten) {
        if (t.factors.size() <= 1) {
          out.push_back(std::move(t));
          continue;
        }
        int c = color.count(t.factors) ? color[t.factors] : 0;
        if (c == 1) {
          out.push_back(std::move(t));  // rewrite cycle: keep as residual
          continue;
        }
        long long det = t.det;
        for (TensorTerm sub : resolve(t.factors)) {
          sub.det += det;
          out.push_back(std::move(sub));
        }
      }
    }
    color[factors] = 2;
    return memo[factors] = std::move(out);
  }
};

}  // namespace

DecomposeResult WeightAlgebra::decompose_terms(std::vector<TensorTerm> seed) const {
  Resolver res{*this, {}, {}};
  std::vector<TensorTerm> done, residual;
  for (const TensorTerm& t : normalize(std::move(seed)).terms) {
    if (t.factors.size() <= 1) {
      done.push_back(t);
      continue;
    }
    for (TensorTerm r : res.resolve(t.factors)) {
      r.det += t.det;
      (r.factors.size() <= 1 ? done : residual).push_back(std::move(r));
    }
  }
  DecomposeResult r;
  r.decomposed = normalize(std::move(done));
  r.residual = normalize(std::move(residual)).terms;
  return r;
}

std::string WeightAlgebra::pretty(const TensorTerm& t) const {
  std::ostringstream os;
  if (t.is_zero()) return "0";
  for (size_t i = 0; i < t.factors.size(); ++i) {
    if (i) os << "(x)";
    os << "(";
    for (size_t j = 0; j < t.factors[i].size(); ++j) {
      if (j) os << ",";
      os << t.factors[i][j];
    }
    os << ")";
  }
  long long e = reduce_det(t.det);
  if (e != 0) {
    os << "(x)D";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string WeightAlgebra::pretty(const WeightSum& s) const {
  if (s.terms.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < s.terms.size(); ++i) {
    if (i) os << " (+) ";
    os << pretty(s.terms[i]);
  }
  return os.str();
}

}  // namespace thetarep
