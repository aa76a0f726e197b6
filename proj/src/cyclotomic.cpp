#include "thetarep/cyclotomic.hpp"

namespace thetarep {

namespace {

using ZPoly = std::vector<long long>;

ZPoly trim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Exact division of a by b over Z; b monic. Throws if the division leaves a
// remainder, which would indicate a broken divisor chain.
ZPoly exact_div(ZPoly a, const ZPoly& b) {
  a = trim(a);
  ZPoly bb = trim(b);
  ZPoly quot(a.size() >= bb.size() ? a.size() - bb.size() + 1 : 0, 0);
  while (a.size() >= bb.size() && !a.empty()) {
    long long lead = a.back();
    size_t shift = a.size() - bb.size();
    quot[shift] = lead;
    for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= lead * bb[i];
    a = trim(a);
  }
  if (!a.empty()) throw Error(ErrorKind::OutOfRange, "non-exact cyclotomic division");
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_poly(long long n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "cyclotomic index must be >= 1");
  // build Phi_d bottom-up over the divisors of n
  std::vector<long long> divs;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<ZPoly> phis;
  for (long long d : divs) {
    ZPoly num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (size_t i = 0; i < phis.size(); ++i)
      if (d % divs[i] == 0 && divs[i] < d) num = exact_div(num, phis[i]);
    phis.push_back(std::move(num));
  }
  return phis.back();
}

CycRing::CycRing(long long n) : n_(n) {
  phi_ = cyclotomic_poly(n);
  deg_ = static_cast<long long>(phi_.size()) - 1;
  zeta_pow_.reserve(n_);
  // zeta^k by repeated multiplication with x, reducing one degree at a time
  std::vector<long long> cur(deg_, 0);
  cur[0] = 1;
  zeta_pow_.push_back({cur});
  for (long long k = 1; k < n_; ++k) {
    long long lead = cur[deg_ - 1];
    for (long long i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (lead != 0)
      for (long long i = 0; i < deg_; ++i) cur[i] -= lead * phi_[i];
    zeta_pow_.push_back({cur});
  }
}

std::vector<long long> CycRing::reduce(std::vector<long long> poly) const {
  // Phi_n is monic: subtract multiples until the degree drops below deg_.
  while (static_cast<long long>(poly.size()) > deg_) {
    long long lead = poly.back();
    size_t shift = poly.size() - phi_.size();
    if (lead != 0) {
      for (size_t i = 0; i < phi_.size(); ++i) poly[shift + i] -= lead * phi_[i];
    }
    poly.pop_back();
  }
  poly.resize(deg_, 0);
  return poly;
}

CycInt CycRing::integer(long long v) const {
  CycInt r = zero();
  r.c[0] = v;
  return r;
}

CycInt CycRing::zeta(long long k) const {
  k %= n_;
  if (k < 0) k += n_;
  return zeta_pow_[k];
}

CycInt CycRing::add(const CycInt& a, const CycInt& b) const {
  CycInt r = a;
  for (long long i = 0; i < deg_; ++i) r.c[i] += b.c[i];
  return r;
}

CycInt CycRing::sub(const CycInt& a, const CycInt& b) const {
  CycInt r = a;
  for (long long i = 0; i < deg_; ++i) r.c[i] -= b.c[i];
  return r;
}

CycInt CycRing::mul(const CycInt& a, const CycInt& b) const {
  std::vector<long long> prod(2 * deg_ - 1, 0);
  for (long long i = 0; i < deg_; ++i) {
    if (a.c[i] == 0) continue;
    for (long long j = 0; j < deg_; ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  return {reduce(std::move(prod))};
}

CycInt CycRing::scale(const CycInt& a, long long v) const {
  CycInt r = a;
  for (auto& x : r.c) x *= v;
  return r;
}

}  // namespace thetarep
