#include "zorn.hpp"

namespace zorn {

uint64_t paige_loop_order(uint64_t q) {
  const unsigned __int128 q2 = (unsigned __int128)q * q;
  const unsigned __int128 n =
      q2 * q * (q2 * q2 - 1) / (q % 2 == 1 ? 2 : 1);
  const unsigned __int128 max64 = ~uint64_t{0};
  return n > max64 ? ~uint64_t{0} : uint64_t(n);
}

VectorMatrix::VectorMatrix(const gf::Field& f, const Coords& c)
    : field_(&f), c_(c) {
  for (uint32_t code : c_) {
    if (code >= f.order()) throw std::out_of_range("coordinate code out of range");
  }
}

VectorMatrix::VectorMatrix(const gf::Element& a,
                           const std::array<gf::Element, 3>& alpha,
                           const std::array<gf::Element, 3>& beta,
                           const gf::Element& b)
    : field_(&a.field()) {
  auto check = [&](const gf::Element& e) {
    if (!e.field().same_field(*field_)) throw gf::FieldMismatch();
  };
  for (int i = 0; i < 3; ++i) {
    check(alpha[i]);
    check(beta[i]);
  }
  check(b);
  c_ = {a.code(),        alpha[0].code(), alpha[1].code(), alpha[2].code(),
        beta[0].code(),  beta[1].code(),  beta[2].code(),  b.code()};
}

VectorMatrix VectorMatrix::identity(const gf::Field& f) {
  return VectorMatrix(f, identity_raw(f));
}

VectorMatrix zorn_mul(const VectorMatrix& m, const VectorMatrix& n) {
  if (!m.field().same_field(n.field())) throw gf::FieldMismatch();
  return VectorMatrix(m.field(), mul_raw(m.field(), m.coords(), n.coords()));
}

gf::Element det(const VectorMatrix& m) {
  return m.field().element(det_raw(m.field(), m.coords()));
}

VectorMatrix negated(const VectorMatrix& m) {
  return VectorMatrix(m.field(), neg_raw(m.field(), m.coords()));
}

PaigeElement PaigeElement::identity(const gf::Field& f) {
  return PaigeElement(&f, canonical_raw(f, identity_raw(f)));
}

PaigeElement PaigeElement::from_canonical(const gf::Field& f, const Coords& c) {
  if (det_raw(f, c) != f.one_code()) throw NotUnimodular();
  if (canonical_raw(f, c) != c)
    throw std::invalid_argument("coordinates are not the canonical representative");
  return PaigeElement(&f, c);
}

PaigeElement project(const VectorMatrix& m) {
  const gf::Field& f = m.field();
  if (det_raw(f, m.coords()) != f.one_code()) throw NotUnimodular();
  return PaigeElement::from_canonical(f, canonical_raw(f, m.coords()));
}

PaigeElement paige_mul(const PaigeElement& x, const PaigeElement& y) {
  const gf::Field& f = x.field();
  if (!f.same_field(y.field())) throw gf::FieldMismatch();
  return PaigeElement::from_canonical(
      f, canonical_raw(f, mul_raw(f, x.coords(), y.coords())));
}

PaigeElement paige_inv(const PaigeElement& x) {
  const gf::Field& f = x.field();
  return PaigeElement::from_canonical(
      f, canonical_raw(f, adjugate_raw(f, x.coords())));
}

PaigeElement paige_pow(const PaigeElement& x, uint64_t e) {
  PaigeElement acc = PaigeElement::identity(x.field());
  for (uint64_t i = 0; i < e; ++i) acc = paige_mul(x, acc);
  return acc;
}

uint64_t element_order(const PaigeElement& x) {
  return element_order(x, paige_loop_order(x.field().order()));
}

uint64_t element_order(const PaigeElement& x, uint64_t bound) {
  const PaigeElement e = PaigeElement::identity(x.field());
  PaigeElement acc = x;
  uint64_t n = 1;
  while (acc != e) {
    acc = paige_mul(x, acc);
    if (++n > bound) throw OrderBoundExceeded(bound);
  }
  return n;
}

}  // namespace zorn
