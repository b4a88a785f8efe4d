#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gf {

struct NotPrime : std::runtime_error {
  explicit NotPrime(uint64_t n)
      : std::runtime_error("not a prime: " + std::to_string(n)) {}
};

struct DegreeTooLarge : std::runtime_error {
  DegreeTooLarge(uint64_t p, uint64_t r, uint64_t bound)
      : std::runtime_error("field order " + std::to_string(p) + "^" +
                           std::to_string(r) + " exceeds bound " +
                           std::to_string(bound)) {}
};

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("inverse of the zero field element") {}
};

struct FieldMismatch : std::runtime_error {
  FieldMismatch()
      : std::runtime_error("operands belong to different fields") {}
};

struct ZeroElement : std::runtime_error {
  ZeroElement()
      : std::runtime_error("zero element has no multiplicative order") {}
};

bool is_prime(uint64_t n);

// Splits q = p^r with p prime, r >= 1. Returns false when q is not a prime
// power (including q < 2).
bool factor_prime_power(uint64_t q, uint32_t& p_out, uint32_t& r_out);

class Field;

// One residue of GF(p^r). Value type; the owning Field must outlive it.
// `code` is the canonical integer encoding: sum of coeff(t^i) * p^(r-1-i),
// so comparing codes compares coefficient vectors low-degree-first.
class Element {
 public:
  Element() : field_(nullptr), code_(0) {}

  uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  const Field& field() const { return *field_; }
  std::vector<uint32_t> coeffs() const;  // low-to-high, length r

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

 private:
  friend class Field;
  Element(const Field* f, uint32_t code) : field_(f), code_(code) {}

  const Field* field_;
  uint32_t code_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator-(const Element& a);
Element inverse(const Element& a);
uint64_t mult_order(const Element& a);

// GF(p^r) with a deterministic model: the modulus is the lexicographically
// smallest monic irreducible polynomial of degree r (coefficients compared
// low-to-high), and the designated primitive element is the first element in
// canonical code order whose multiplicative order is p^r - 1.
class Field {
 public:
  static constexpr uint64_t kDefaultMaxOrder = uint64_t{1} << 20;
  // Full q x q arithmetic tables are built up to this order.
  static constexpr uint64_t kTableLimit = 512;

  Field(uint32_t p, uint32_t r, uint64_t max_order = kDefaultMaxOrder);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return r_; }
  uint64_t order() const { return q_; }
  // Monic, length r+1, coefficients low-to-high.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  bool same_field(const Field& o) const { return p_ == o.p_ && r_ == o.r_; }

  Element zero() const { return Element(this, 0); }
  Element one() const { return Element(this, one_code_); }
  Element primitive() const { return Element(this, primitive_code_); }
  Element element(uint32_t code) const;
  Element from_coeffs(const std::vector<uint32_t>& low_to_high) const;

  // Code-level arithmetic. Codes must be < order().
  uint32_t add_code(uint32_t a, uint32_t b) const {
    return tables_ ? add_tab_[size_t(a) * q_ + b] : add_slow(a, b);
  }
  uint32_t sub_code(uint32_t a, uint32_t b) const {
    return add_code(a, neg_code(b));
  }
  uint32_t neg_code(uint32_t a) const {
    return tables_ ? neg_tab_[a] : neg_slow(a);
  }
  uint32_t mul_code(uint32_t a, uint32_t b) const {
    return tables_ ? mul_tab_[size_t(a) * q_ + b] : mul_slow(a, b);
  }
  uint32_t inv_code(uint32_t a) const;
  uint32_t pow_code(uint32_t a, uint64_t e) const;
  uint64_t mult_order_code(uint32_t a) const;
  uint32_t one_code() const { return one_code_; }
  bool has_tables() const { return tables_; }

  std::vector<uint32_t> decode(uint32_t code) const;
  uint32_t encode(const std::vector<uint32_t>& coeffs) const;

 private:
  uint32_t add_slow(uint32_t a, uint32_t b) const;
  uint32_t neg_slow(uint32_t a) const;
  uint32_t mul_slow(uint32_t a, uint32_t b) const;
  void pick_modulus();
  void build_tables();

  uint32_t p_ = 0;
  uint32_t r_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint64_t> weight_;  // weight_[i] = p^(r-1-i)
  std::vector<uint64_t> qm1_factors_;
  uint32_t one_code_ = 0;
  uint32_t primitive_code_ = 0;
  bool tables_ = false;
  std::vector<uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

}  // namespace gf
