#ifndef THETAREP_GF_HPP
#define THETAREP_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "thetarep/errors.hpp"

namespace thetarep {

/// Packed field element index: Sum c_i * p^i over the coefficient vector.
using Elt = std::uint32_t;

/// One concrete finite field F_{p^d} = F_p[x]/(modulus), elements packed as
/// integers in [0, p^d). Multiplication runs through discrete-log tables;
/// small fields additionally get full add/mul tables.
class SmallField {
public:
  SmallField(int p, std::vector<int> modulus);

  int p() const { return p_; }
  int degree() const { return d_; }
  std::uint32_t size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elt add(Elt a, Elt b) const {
    return add_table_.empty() ? add_slow(a, b) : add_table_[a * size_ + b];
  }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const { return neg_table_[a]; }
  Elt mul(Elt a, Elt b) const {
    if (!mul_table_.empty()) return mul_table_[a * size_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_table_[log_table_[a] + log_table_[b]];
  }
  Elt inv(Elt a) const;
  Elt pow(Elt a, long long k) const;
  /// p^i-th power map; i may be any non-negative integer.
  Elt frob(Elt a, int i) const;

  /// Smallest generator of the multiplicative group, in coefficient
  /// lexicographic order (c_0 compared first).
  Elt primitive() const { return primitive_; }
  /// Exponent e in [0, size-1) with primitive()^e == a. Throws on a == 0.
  long long dlog(Elt a) const;

  std::vector<int> coeffs(Elt a) const;
  Elt from_coeffs(const std::vector<int>& c) const;
  Elt from_int(long long n) const;  // image of the integer n in the prime subfield

  /// Evaluate a polynomial over F_p (coefficients low-to-high, mapped into
  /// the prime subfield) at the point z of this field.
  Elt eval_fp_poly(const std::vector<int>& poly, Elt z) const;

  /// Flat table access for elimination inner loops; null when the field is
  /// above the table cap.
  const Elt* add_flat() const { return add_table_.empty() ? nullptr : add_table_.data(); }
  const Elt* mul_row(Elt a) const {
    return mul_table_.empty() ? nullptr : mul_table_.data() + static_cast<size_t>(a) * size_;
  }

private:
  Elt add_slow(Elt a, Elt b) const;
  Elt mul_slow(Elt a, Elt b) const;

  int p_ = 0;
  int d_ = 0;
  std::uint32_t size_ = 0;
  std::vector<int> modulus_;
  std::vector<Elt> neg_table_;
  std::vector<Elt> add_table_;  // only when size
  std::vector<Elt> mul_table_;  //   is <= kTableCap
  std::vector<Elt> exp_table_;  // 2*(size-1) entries, powers of primitive_
  std::vector<long long> log_table_;
  Elt primitive_ = 0;

  static constexpr std::uint32_t kTableCap = 1024;
};

enum class FieldTag : std::uint8_t { Base, Q, Q2 };

const char* field_tag_name(FieldTag t);

/// An element of F_p, F_q or F_{q^2}, tagged with the layer it lives in.
struct FieldElement {
  FieldTag tag = FieldTag::Base;
  Elt v = 0;

  bool operator==(const FieldElement& o) const { return tag == o.tag && v == o.v; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

/// The tower F_p c F_q c F_{q^2} with fixed defining polynomials, a fixed
/// generator of F_{q^2}^x, and the fixed embedding F_q -> F_{q^2}.
/// Immutable after construction; every operation is a pure function.
class FieldSpec {
public:
  /// Deterministic construction: lexicographically smallest monic irreducible
  /// moduli of degrees f and 2f, smallest full-order generator of F_{q^2}^x,
  /// and the embedding through the modulus root of smallest discrete log.
  static FieldSpec build(int p, int f);

  int p() const { return p_; }
  int f() const { return f_; }
  long long q() const { return q_; }
  long long q2() const { return q2_; }

  const std::vector<int>& q_modulus() const { return fq_->modulus(); }
  const std::vector<int>& q2_modulus() const { return fq2_->modulus(); }
  FieldElement q2_generator() const { return {FieldTag::Q2, fq2_->primitive()}; }

  const SmallField& layer(FieldTag t) const;
  const SmallField& base() const { return *fp_; }
  const SmallField& fq() const { return *fq_; }
  const SmallField& fq2() const { return *fq2_; }

  FieldElement zero(FieldTag t) const { return {t, 0}; }
  FieldElement one(FieldTag t) const { return {t, layer(t).from_int(1)}; }
  FieldElement from_coeffs(FieldTag t, const std::vector<int>& c) const {
    return {t, layer(t).from_coeffs(c)};
  }
  std::vector<int> coeffs(FieldElement a) const { return layer(a.tag).coeffs(a.v); }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const { return {a.tag, layer(a.tag).neg(a.v)}; }
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, long long k) const;
  FieldElement frobenius(FieldElement a, int i) const;

  /// The fixed ring embedding F_q -> F_{q^2} (Base elements go through F_q).
  FieldElement embed_q2(FieldElement a) const;
  Elt embed_q2_packed(Elt a_in_q) const { return embed_q_[a_in_q]; }

  /// Discrete log in F_{q^2} with respect to q2_generator(). Lower layers are
  /// embedded first. Throws ZeroElement on zero.
  long long dlog(FieldElement a) const;
  long long dlog_q(Elt a_in_q) const;  // convenience for packed F_q values

  std::string describe() const;

private:
  FieldSpec() = default;

  int p_ = 0, f_ = 0;
  long long q_ = 0, q2_ = 0;
  std::shared_ptr<const SmallField> fp_, fq_, fq2_;
  std::vector<Elt> embed_q_;  // packed F_q index -> packed F_{q^2} index
};

bool is_prime(long long n);

/// Lexicographically smallest monic irreducible polynomial of the given
/// degree over F_p (coefficients low-to-high; c_0 compared first).
std::vector<int> smallest_irreducible(int p, int degree);

}  // namespace thetarep

#endif
