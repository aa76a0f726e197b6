#include "thetarep/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace thetarep {

const char* class_kind_name(PRegClass::Kind k) {
  switch (k) {
    case PRegClass::Kind::Central: return "central";
    case PRegClass::Kind::Split: return "split";
    case PRegClass::Kind::Nonsplit: return "nonsplit";
  }
  return "?";
}

std::vector<PRegClass> pregular_classes(const FieldSpec& F) {
  const SmallField& K = F.fq();
  const SmallField& K2 = F.fq2();
  const long long n = F.q2() - 1;

  std::unordered_map<Elt, Elt> unembed;
  for (Elt a = 0; a < K.size(); ++a) unembed[F.embed_q2_packed(a)] = a;

  std::vector<PRegClass> out;
  // central aI
  std::vector<std::pair<long long, Elt>> units;
  for (Elt a = 1; a < K.size(); ++a) units.push_back({F.dlog_q(a), a});
  std::sort(units.begin(), units.end());
  for (auto [k, a] : units)
    out.push_back({PRegClass::Kind::Central, k, k, GroupElement{a, 0, 0, a}});

  // split diag(a, b), unordered pairs of distinct units
  for (size_t i = 0; i < units.size(); ++i)
    for (size_t j = i + 1; j < units.size(); ++j)
      out.push_back({PRegClass::Kind::Split, units[i].first, units[j].first,
                     GroupElement{units[i].second, 0, 0, units[j].second}});

  // nonsplit: eigenvalue g^k with k not a multiple of q+1, paired with its
  // q-th power; representative is the companion matrix of x^2 - Tx + N.
  const long long qp1 = F.q() + 1;
  for (long long k = 1; k < n; ++k) {
    if (k % qp1 == 0) continue;
    long long kq = (k * F.q()) % n;
    if (kq < k) continue;  // canonical member of the pair
    Elt mu = K2.pow(K2.primitive(), k);
    Elt mu_q = K2.pow(K2.primitive(), kq);
    Elt T2 = K2.add(mu, mu_q);
    Elt N2 = K2.mul(mu, mu_q);
    Elt T = unembed.at(T2);
    Elt N = unembed.at(N2);
    out.push_back({PRegClass::Kind::Nonsplit, k, kq, GroupElement{0, K.neg(N), K.from_int(1), T}});
  }
  return out;
}

CharTable::CharTable(const FieldSpec& F)
    : F_(&F), ring_(F.q2() - 1), classes_(pregular_classes(F)) {}

CycInt CharTable::weight_char(const TensorTerm& t, const PRegClass& c) const {
  if (t.is_zero()) return ring_.zero();
  const long long n = ring_.n();
  // every monomial is a simultaneous eigenvector of the semisimple class;
  // walk the eigenvalue exponents directly instead of multiplying block sums
  long long det_exp = ((c.k1 + c.k2) % n) * (((t.det % n) + n) % n) % n;

  // flatten (factor, block) positions
  std::vector<int> tops;
  std::vector<long long> step1, step2;
  for (const auto& factor : t.factors)
    for (size_t i = 0; i < factor.size(); ++i) {
      long long pi = pow_ll(F_->p(), static_cast<int>(i)) % n;
      tops.push_back(factor[i]);
      step1.push_back((c.k1 % n) * pi % n);
      step2.push_back((c.k2 % n) * pi % n);
    }

  CycInt acc = ring_.zero();
  std::vector<int> k(tops.size(), 0);
  while (true) {
    long long e = det_exp;
    for (size_t i = 0; i < k.size(); ++i)
      e = (e + step1[i] * k[i] + step2[i] * (tops[i] - k[i])) % n;
    acc = ring_.add(acc, ring_.zeta(e));
    size_t i = 0;
    while (i < k.size() && k[i] == tops[i]) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
  }
  return acc;
}

CycInt CharTable::weight_char(const WeightSum& s, const PRegClass& c) const {
  CycInt acc = ring_.zero();
  for (const auto& t : s.terms) acc = ring_.add(acc, weight_char(t, c));
  return acc;
}

CycInt CharTable::induced_char(long long S, long long r_prime, const PRegClass& c) const {
  const long long n = ring_.n();
  auto em = [&](long long x) { return ((x % n) + n) % n; };
  switch (c.kind) {
    case PRegClass::Kind::Central:
      return ring_.scale(ring_.zeta(em(r_prime + 2 * S) * c.k1 % n),
                         F_->q() + 1);
    case PRegClass::Kind::Split: {
      CycInt fixed = ring_.add(ring_.zeta(em(r_prime) * c.k1 % n),
                               ring_.zeta(em(r_prime) * c.k2 % n));
      return ring_.mul(ring_.zeta(em(S) * ((c.k1 + c.k2) % n) % n), fixed);
    }
    case PRegClass::Kind::Nonsplit:
      return ring_.zero();  // no fixed line over F_q
  }
  return ring_.zero();
}

namespace {

// Combined echelon basis of N with the denominator rows first; quotient
// coordinates come from the coefficients on the complement rows during
// forward elimination.
struct QuotientAction {
  const RepSpace* space;
  std::vector<Vec> rows;                 // pivot-scaled, forward-reduced
  std::vector<long long> row_of_pivot;   // by column; -1 absent
  std::vector<char> is_complement;
  std::vector<long long> complement_rows;

  QuotientAction(const Subspace& N, const Subspace& D) {
    space = &N.ambient();
    const SmallField& F = space->field().fq();
    const long long cols = space->dim();
    row_of_pivot.assign(cols, -1);
    auto insert = [&](const Vec& v0, bool complement) {
      Vec v = v0;
      for (long long c = 0; c < cols; ++c) {
        if (v[c] == 0) continue;
        long long r = row_of_pivot[c];
        if (r < 0) {
          // scale pivot to one and store
          Elt inv = F.inv(v[c]);
          for (long long cc = c; cc < cols; ++cc)
            v[cc] = static_cast<Entry>(F.mul(inv, v[cc]));
          row_of_pivot[c] = static_cast<long long>(rows.size());
          rows.push_back(std::move(v));
          is_complement.push_back(complement);
          if (complement) complement_rows.push_back(static_cast<long long>(rows.size()) - 1);
          return;
        }
        row_axpy(F, v.data(), rows[r].data(), v[c], c, cols);
      }
    };
    for (long long i = 0; i < D.dim(); ++i)
      insert(Vec(D.basis().row(i), D.basis().row(i) + cols), false);
    for (long long i = 0; i < N.dim(); ++i)
      insert(Vec(N.basis().row(i), N.basis().row(i) + cols), true);
  }

  long long quot_dim() const { return static_cast<long long>(complement_rows.size()); }

  // Coordinates of v modulo the denominator, in the complement basis.
  Vec coords(Vec v) const {
    const SmallField& F = space->field().fq();
    const long long cols = space->dim();
    Vec beta(quot_dim(), 0);
    std::vector<long long> comp_index(rows.size(), -1);
    for (size_t t = 0; t < complement_rows.size(); ++t) comp_index[complement_rows[t]] = t;
    for (long long c = 0; c < cols; ++c) {
      if (v[c] == 0) continue;
      long long r = row_of_pivot[c];
      if (r < 0) throw Error(ErrorKind::NotStable, "vector leaves the numerator subspace");
      if (is_complement[r]) beta[comp_index[r]] = v[c];
      row_axpy(F, v.data(), rows[r].data(), v[c], c, cols);
    }
    return beta;
  }

  // Matrix of g on the quotient with respect to the complement basis.
  Mat matrix_for(const GroupElement& g) const {
    BlockAction A(*space, g);
    Mat M(quot_dim(), quot_dim());
    for (long long j = 0; j < quot_dim(); ++j) {
      Vec img = A.apply(rows[complement_rows[j]]);
      Vec beta = coords(std::move(img));
      for (long long i = 0; i < quot_dim(); ++i) M.at(i, j) = beta[i];
    }
    return M;
  }
};

}  // namespace

std::vector<CycInt> CharTable::module_char_row(const Subspace& numerator,
                                               const Subspace& denominator) const {
  if (!numerator.contains(denominator))
    throw Error(ErrorKind::AmbientMismatch, "denominator is not inside the numerator");
  if (!is_generator_stable(numerator) || !is_generator_stable(denominator))
    throw Error(ErrorKind::NotStable, "inputs must be generator-stable");

  QuotientAction Q(numerator, denominator);
  const SmallField& K2 = F_->fq2();
  const long long n = ring_.n();
  const long long k = Q.quot_dim();

  std::vector<CycInt> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) {
    Mat Mq = Q.matrix_for(c.rep);
    // entries into F_{q^2}
    Mat M2(Mq.rows, Mq.cols);
    for (size_t t = 0; t < Mq.a.size(); ++t)
      M2.a[t] = static_cast<Entry>(F_->embed_q2_packed(Mq.a[t]));

    long long d = std::gcd(std::gcd(c.k1, c.k2), n);
    CycInt chi = ring_.zero();
    long long total = 0;
    for (long long e = 0; e < n; e += d) {
      Elt lambda = K2.pow(K2.primitive(), e);
      Mat shifted = M2;
      for (long long i = 0; i < shifted.rows; ++i)
        shifted.at(i, i) = static_cast<Entry>(K2.sub(shifted.at(i, i), lambda));
      long long mult = k - rank_of(K2, std::move(shifted));
      if (mult > 0) {
        chi = ring_.add(chi, ring_.scale(ring_.zeta(e), mult));
        total += mult;
      }
    }
    if (total != k)
      throw Error(ErrorKind::DimensionMismatch,
                  "eigenvalue multiplicities do not fill the quotient");
    out.push_back(std::move(chi));
  }
  return out;
}

CycInt CharTable::module_char(const Subspace& numerator, const Subspace& denominator,
                              const PRegClass& c) const {
  // single-class convenience; the row version amortizes the expensive setup
  std::vector<CycInt> row = module_char_row(numerator, denominator);
  for (size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].kind == c.kind && classes_[i].k1 == c.k1 && classes_[i].k2 == c.k2)
      return row[i];
  throw Error(ErrorKind::OutOfRange, "class not in the table");
}

std::vector<CycInt> CharTable::weight_char_row(const WeightSum& s) const {
  std::vector<CycInt> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(weight_char(s, c));
  return out;
}

std::vector<CycInt> CharTable::induced_char_row(long long S, long long r_prime) const {
  std::vector<CycInt> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(induced_char(S, r_prime, c));
  return out;
}

bool CharTable::rows_equal(const std::vector<CycInt>& a, const std::vector<CycInt>& b) const {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

CharTable::TwistSolution CharTable::solve_det_twist(const std::vector<int>& w,
                                                    const std::vector<CycInt>& residual) const {
  TwistSolution sol;
  for (long long e = 0; e < F_->q() - 1; ++e) {
    WeightSum s{{TensorTerm{{w}, e}}};
    if (rows_equal(weight_char_row(s), residual)) sol.matches.push_back(e);
  }
  return sol;
}

}  // namespace thetarep
