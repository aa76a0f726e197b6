#include "thetarep/gf.hpp"

#include <algorithm>
#include <sstream>

namespace thetarep {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::BoundViolated: return "BoundViolated";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::NonGeneric: return "NonGeneric";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

const char* field_tag_name(FieldTag t) {
  switch (t) {
    case FieldTag::Base: return "F_p";
    case FieldTag::Q: return "F_q";
    case FieldTag::Q2: return "F_q2";
  }
  return "?";
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomial arithmetic over F_p, coefficients low-to-high.
using Poly = std::vector<int>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(c);
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  a = poly_trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int lead = a.back();
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    a = poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

bool divides(const Poly& divisor, const Poly& poly, int p) {
  return poly_mod(poly, divisor, p).empty();
}

// Enumerate monic polynomials of the given degree in coefficient-lex order:
// (c_0, ..., c_{d-1}) compared left to right, so c_0 varies slowest.
Poly monic_by_lex_rank(int p, int degree, long long rank) {
  Poly c(degree + 1, 0);
  c[degree] = 1;
  for (int i = degree - 1; i >= 0; --i) {
    c[i] = static_cast<int>(rank % p);
    rank /= p;
  }
  return c;
}

bool poly_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  if (f[0] == 0) return false;  // divisible by x
  // Trial division by all monic polynomials of degree 1..d/2.
  for (int e = 1; 2 * e <= d; ++e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long rk = 0; rk < count; ++rk) {
      Poly g = monic_by_lex_rank(p, e, rk);
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> fs;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

std::vector<int> smallest_irreducible(int p, int degree) {
  long long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (long long rk = 0; rk < count; ++rk) {
    Poly f = monic_by_lex_rank(p, degree, rk);
    if (poly_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::OutOfRange, "no irreducible polynomial found");
}

SmallField::SmallField(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  d_ = static_cast<int>(modulus_.size()) - 1;
  long long sz = 1;
  for (int i = 0; i < d_; ++i) sz *= p_;
  size_ = static_cast<std::uint32_t>(sz);

  neg_table_.resize(size_);
  for (Elt a = 0; a < size_; ++a) {
    Elt r = 0, mult = 1;
    Elt x = a;
    for (int i = 0; i < d_; ++i) {
      int c = static_cast<int>(x % p_);
      x /= p_;
      r += static_cast<Elt>(((p_ - c) % p_)) * mult;
      mult *= p_;
    }
    neg_table_[a] = r;
  }

  if (size_ <= kTableCap) {
    add_table_.resize(static_cast<size_t>(size_) * size_);
    mul_table_.resize(static_cast<size_t>(size_) * size_);
    for (Elt a = 0; a < size_; ++a)
      for (Elt b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = add_slow(a, b);
        mul_table_[a * size_ + b] = mul_slow(a, b);
      }
  }

  // Find the multiplicative generator smallest in coefficient-lex order.
  const long long ord = static_cast<long long>(size_) - 1;
  const auto pf = prime_factors(ord);
  auto full_order = [&](Elt g) {
    if (g == 0) return false;
    for (long long ell : pf) {
      Elt t = g;
      long long e = ord / ell;
      Elt acc = from_int(1);
      while (e) {  // slow pow (tables not ready)
        if (e & 1) acc = mul_slow(acc, t);
        t = mul_slow(t, t);
        e >>= 1;
      }
      if (acc == from_int(1)) return false;
    }
    return true;
  };
  primitive_ = 0;
  {
    std::vector<int> c(d_, 0);
    bool found = false;
    while (!found) {
      Elt g = from_coeffs(c);
      if (full_order(g)) {
        primitive_ = g;
        found = true;
        break;
      }
      // advance in lex order: last coefficient varies fastest
      int i = d_ - 1;
      while (i >= 0 && c[i] == p_ - 1) c[i--] = 0;
      if (i < 0) break;
      ++c[i];
    }
    if (!found) throw Error(ErrorKind::OutOfRange, "no multiplicative generator found");
  }

  exp_table_.assign(2 * ord, 0);
  log_table_.assign(size_, -1);
  Elt cur = from_int(1);
  for (long long e = 0; e < ord; ++e) {
    exp_table_[e] = cur;
    exp_table_[e + ord] = cur;
    log_table_[cur] = e;
    cur = mul_slow(cur, primitive_);
  }
}

Elt SmallField::add_slow(Elt a, Elt b) const {
  Elt r = 0, mult = 1;
  for (int i = 0; i < d_; ++i) {
    int ca = static_cast<int>(a % p_), cb = static_cast<int>(b % p_);
    a /= p_;
    b /= p_;
    r += static_cast<Elt>((ca + cb) % p_) * mult;
    mult *= p_;
  }
  return r;
}

Elt SmallField::mul_slow(Elt a, Elt b) const {
  std::vector<int> pa = coeffs(a), pb = coeffs(b);
  Poly prod = poly_mul(poly_trim(pa), poly_trim(pb), p_);
  Poly red = poly_mod(prod, modulus_, p_);
  red.resize(d_, 0);
  return from_coeffs(red);
}

Elt SmallField::inv(Elt a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const long long ord = static_cast<long long>(size_) - 1;
  long long la = log_table_[a];
  return exp_table_[(ord - la) % ord];
}

Elt SmallField::pow(Elt a, long long k) const {
  const long long ord = static_cast<long long>(size_) - 1;
  if (a == 0) {
    if (k == 0) return from_int(1);
    if (k < 0) throw Error(ErrorKind::DivisionByZero, "0 to a negative power");
    return 0;
  }
  long long e = ((log_table_[a] * (k % ord)) % ord + ord) % ord;
  return exp_table_[e];
}

Elt SmallField::frob(Elt a, int i) const {
  if (d_ > 0) i %= d_;
  Elt r = a;
  for (int t = 0; t < i; ++t) r = pow(r, p_);
  return r;
}

long long SmallField::dlog(Elt a) const {
  if (a == 0) throw Error(ErrorKind::ZeroElement, "dlog of zero");
  return log_table_[a];
}

std::vector<int> SmallField::coeffs(Elt a) const {
  std::vector<int> c(d_, 0);
  for (int i = 0; i < d_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

Elt SmallField::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > d_) {
    for (size_t i = d_; i < c.size(); ++i)
      if (c[i] % p_ != 0) throw Error(ErrorKind::OutOfRange, "coefficient vector too long");
  }
  Elt r = 0, mult = 1;
  for (int i = 0; i < d_ && i < static_cast<int>(c.size()); ++i) {
    int v = ((c[i] % p_) + p_) % p_;
    r += static_cast<Elt>(v) * mult;
    mult *= p_;
  }
  return r;
}

Elt SmallField::from_int(long long n) const {
  long long v = ((n % p_) + p_) % p_;
  return static_cast<Elt>(v);
}

Elt SmallField::eval_fp_poly(const std::vector<int>& poly, Elt z) const {
  Elt acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = add(mul(acc, z), from_int(*it));
  }
  return acc;
}

FieldSpec FieldSpec::build(int p, int f) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (f < 1) throw Error(ErrorKind::OutOfRange, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q * q > (1LL << 16))
      throw Error(ErrorKind::FieldTooLarge,
                  "q^2 = " + std::to_string(q * q) + " exceeds the desk-scale cap 2^16");
  }

  FieldSpec F;
  F.p_ = p;
  F.f_ = f;
  F.q_ = q;
  F.q2_ = q * q;
  F.fp_ = std::make_shared<const SmallField>(p, smallest_irreducible(p, 1));
  F.fq_ = std::make_shared<const SmallField>(p, smallest_irreducible(p, f));
  F.fq2_ = std::make_shared<const SmallField>(p, smallest_irreducible(p, 2 * f));

  // Embedding F_q -> F_{q^2}: send the residue class of x to a root of
  // q_modulus in F_{q^2}; among the f roots, the one of smallest dlog.
  const SmallField& K = *F.fq2_;
  Elt root = 0;
  if (f == 1) {
    root = 0;  // modulus is x; only the constant term survives anyway
  } else {
    long long best = -1;
    for (Elt z = 1; z < K.size(); ++z) {
      if (K.eval_fp_poly(F.fq_->modulus(), z) == 0) {
        long long dl = K.dlog(z);
        if (best < 0 || dl < best) {
          best = dl;
          root = z;
        }
      }
    }
    if (best < 0) throw Error(ErrorKind::OutOfRange, "q_modulus has no root in F_{q^2}");
  }

  F.embed_q_.resize(F.fq_->size());
  for (Elt a = 0; a < F.fq_->size(); ++a) {
    std::vector<int> c = F.fq_->coeffs(a);
    Elt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
      acc = K.add(K.mul(acc, root), K.from_int(*it));
    F.embed_q_[a] = acc;
  }
  return F;
}

const SmallField& FieldSpec::layer(FieldTag t) const {
  switch (t) {
    case FieldTag::Base: return *fp_;
    case FieldTag::Q: return *fq_;
    case FieldTag::Q2: return *fq2_;
  }
  throw Error(ErrorKind::FieldMismatch, "bad field tag");
}

namespace {
void require_same(FieldElement a, FieldElement b) {
  if (a.tag != b.tag)
    throw Error(ErrorKind::FieldMismatch, std::string(field_tag_name(a.tag)) + " vs " +
                                              field_tag_name(b.tag));
}
}  // namespace

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  require_same(a, b);
  return {a.tag, layer(a.tag).add(a.v, b.v)};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const {
  require_same(a, b);
  return {a.tag, layer(a.tag).sub(a.v, b.v)};
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  require_same(a, b);
  return {a.tag, layer(a.tag).mul(a.v, b.v)};
}

FieldElement FieldSpec::inv(FieldElement a) const { return {a.tag, layer(a.tag).inv(a.v)}; }

FieldElement FieldSpec::pow(FieldElement a, long long k) const {
  return {a.tag, layer(a.tag).pow(a.v, k)};
}

FieldElement FieldSpec::frobenius(FieldElement a, int i) const {
  return {a.tag, layer(a.tag).frob(a.v, i)};
}

FieldElement FieldSpec::embed_q2(FieldElement a) const {
  switch (a.tag) {
    case FieldTag::Q2: return a;
    case FieldTag::Q: return {FieldTag::Q2, embed_q_[a.v]};
    case FieldTag::Base: return {FieldTag::Q2, embed_q_[fq_->from_int(fp_->coeffs(a.v)[0])]};
  }
  throw Error(ErrorKind::FieldMismatch, "bad field tag");
}

long long FieldSpec::dlog(FieldElement a) const {
  FieldElement e = embed_q2(a);
  if (e.v == 0) throw Error(ErrorKind::ZeroElement, "dlog of zero");
  return fq2_->dlog(e.v);
}

long long FieldSpec::dlog_q(Elt a_in_q) const {
  if (a_in_q == 0) throw Error(ErrorKind::ZeroElement, "dlog of zero");
  return fq2_->dlog(embed_q_[a_in_q]);
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " = F_" << p_ << "[x]/(";
  const auto& m = q_modulus();
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << m[i];
  }
  os << ")";
  return os.str();
}

}  // namespace thetarep
