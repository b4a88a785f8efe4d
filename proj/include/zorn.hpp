#pragma once

#include "gf.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zorn {

struct NotUnimodular : std::runtime_error {
  NotUnimodular() : std::runtime_error("matrix determinant is not 1") {}
};

struct OrderBoundExceeded : std::runtime_error {
  explicit OrderBoundExceeded(uint64_t bound)
      : std::runtime_error("element order exceeds bound " +
                           std::to_string(bound)) {}
};

// Flattened coordinates (a, alpha1..3, beta1..3, b), each entry a field code.
// Lexicographic comparison of a Coords value is exactly the canonical
// comparison of the 8-tuple.
using Coords = std::array<uint32_t, 8>;

// Order of the simple quotient: q^3(q^4-1)/gcd(2,q-1), clamped to uint64 max.
uint64_t paige_loop_order(uint64_t q);

// Raw kernels on coordinate arrays. Kept inline: closure construction runs
// them billions of times.

inline Coords identity_raw(const gf::Field& f) {
  const uint32_t one = f.one_code();
  return {one, 0, 0, 0, 0, 0, 0, one};
}

inline Coords mul_raw(const gf::Field& f, const Coords& m, const Coords& n) {
  const uint32_t a = m[0], b = m[7];
  const uint32_t c = n[0], d = n[7];
  const uint32_t* al = &m[1];  // alpha
  const uint32_t* be = &m[4];  // beta
  const uint32_t* ga = &n[1];  // gamma
  const uint32_t* de = &n[4];  // delta

  auto dot = [&](const uint32_t* u, const uint32_t* v) {
    return f.add_code(
        f.add_code(f.mul_code(u[0], v[0]), f.mul_code(u[1], v[1])),
        f.mul_code(u[2], v[2]));
  };
  auto cross = [&](const uint32_t* u, const uint32_t* v, int i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    return f.sub_code(f.mul_code(u[j], v[k]), f.mul_code(u[k], v[j]));
  };

  Coords r;
  r[0] = f.add_code(f.mul_code(a, c), dot(al, de));
  for (int i = 0; i < 3; ++i) {
    // a*gamma + d*alpha - beta x delta
    r[1 + i] =
        f.sub_code(f.add_code(f.mul_code(a, ga[i]), f.mul_code(d, al[i])),
                   cross(be, de, i));
    // c*beta + b*delta + alpha x gamma
    r[4 + i] =
        f.add_code(f.add_code(f.mul_code(c, be[i]), f.mul_code(b, de[i])),
                   cross(al, ga, i));
  }
  r[7] = f.add_code(dot(be, ga), f.mul_code(b, d));
  return r;
}

inline Coords neg_raw(const gf::Field& f, const Coords& m) {
  Coords r;
  for (int i = 0; i < 8; ++i) r[i] = f.neg_code(m[i]);
  return r;
}

inline Coords adjugate_raw(const gf::Field& f, const Coords& m) {
  return {m[7],
          f.neg_code(m[1]), f.neg_code(m[2]), f.neg_code(m[3]),
          f.neg_code(m[4]), f.neg_code(m[5]), f.neg_code(m[6]),
          m[0]};
}

inline uint32_t det_raw(const gf::Field& f, const Coords& m) {
  const uint32_t dot = f.add_code(
      f.add_code(f.mul_code(m[1], m[4]), f.mul_code(m[2], m[5])),
      f.mul_code(m[3], m[6]));
  return f.sub_code(f.mul_code(m[0], m[7]), dot);
}

// Lexicographic minimum of {m, -m}.
inline Coords canonical_raw(const gf::Field& f, const Coords& m) {
  if (f.characteristic() == 2) return m;
  const Coords n = neg_raw(f, m);
  return n < m ? n : m;
}

// 2x2 vector matrix over GF(q): scalar corners, 3-vector off-diagonal parts.
class VectorMatrix {
 public:
  VectorMatrix(const gf::Field& f, const Coords& c);
  VectorMatrix(const gf::Element& a, const std::array<gf::Element, 3>& alpha,
               const std::array<gf::Element, 3>& beta, const gf::Element& b);
  static VectorMatrix identity(const gf::Field& f);

  const gf::Field& field() const { return *field_; }
  const Coords& coords() const { return c_; }
  gf::Element a() const { return field_->element(c_[0]); }
  gf::Element alpha(int i) const { return field_->element(c_[1 + i]); }
  gf::Element beta(int i) const { return field_->element(c_[4 + i]); }
  gf::Element b() const { return field_->element(c_[7]); }

  friend bool operator==(const VectorMatrix& x, const VectorMatrix& y) {
    return x.field_->same_field(*y.field_) && x.c_ == y.c_;
  }
  friend bool operator!=(const VectorMatrix& x, const VectorMatrix& y) {
    return !(x == y);
  }

 private:
  const gf::Field* field_;
  Coords c_;
};

VectorMatrix zorn_mul(const VectorMatrix& m, const VectorMatrix& n);
gf::Element det(const VectorMatrix& m);
VectorMatrix negated(const VectorMatrix& m);

// A unimodular vector matrix up to sign: the stored representative is the
// lexicographic minimum of {M, -M} (a singleton in characteristic 2).
class PaigeElement {
 public:
  static PaigeElement identity(const gf::Field& f);
  // pre: c is canonical and det(c) = 1; both are checked.
  static PaigeElement from_canonical(const gf::Field& f, const Coords& c);

  const gf::Field& field() const { return *field_; }
  const Coords& coords() const { return c_; }
  VectorMatrix rep() const { return VectorMatrix(*field_, c_); }

  friend bool operator==(const PaigeElement& x, const PaigeElement& y) {
    return x.field_->same_field(*y.field_) && x.c_ == y.c_;
  }
  friend bool operator!=(const PaigeElement& x, const PaigeElement& y) {
    return !(x == y);
  }
  friend bool operator<(const PaigeElement& x, const PaigeElement& y) {
    return x.c_ < y.c_;
  }

 private:
  PaigeElement(const gf::Field* f, const Coords& c) : field_(f), c_(c) {}
  const gf::Field* field_;
  Coords c_;
};

PaigeElement project(const VectorMatrix& m);
PaigeElement paige_mul(const PaigeElement& x, const PaigeElement& y);
PaigeElement paige_inv(const PaigeElement& x);
PaigeElement paige_pow(const PaigeElement& x, uint64_t e);
// Smallest n >= 1 with x^n = e, by repeated left-multiplication. The bound
// defaults to the loop order; exceeding it signals a bug.
uint64_t element_order(const PaigeElement& x);
uint64_t element_order(const PaigeElement& x, uint64_t bound);

}  // namespace zorn
