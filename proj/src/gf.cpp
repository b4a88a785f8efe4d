#include "gf.hpp"

#include <algorithm>

namespace gf {

namespace {

uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

uint32_t mod_neg(uint32_t a, uint32_t p) { return a ? p - a : 0; }

uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
  return uint32_t((uint64_t(a) * b) % p);
}

// Polynomials over GF(p), coefficients low-to-high.
using Poly = std::vector<uint32_t>;

// Remainder of a by a monic divisor d, deg d >= 1.
Poly poly_rem(Poly a, const Poly& d, uint32_t p) {
  const size_t deg_d = d.size() - 1;
  while (a.size() > deg_d) {
    const uint32_t lead = a.back();
    if (lead != 0) {
      const size_t shift = a.size() - 1 - deg_d;
      for (size_t j = 0; j < d.size(); ++j) {
        a[shift + j] =
            mod_add(a[shift + j], mod_mul(lead, mod_neg(d[j], p), p), p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// Trial division against every monic polynomial of degree 1..deg(m)/2.
bool is_irreducible(const Poly& m, uint32_t p) {
  const size_t r = m.size() - 1;
  for (size_t d = 1; 2 * d <= r; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      uint64_t t = idx;
      for (size_t i = 0; i < d; ++i) {
        g[i] = uint32_t(t % p);
        t /= p;
      }
      if (poly_is_zero(poly_rem(m, g, p))) return false;
    }
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool factor_prime_power(uint64_t q, uint32_t& p_out, uint32_t& r_out) {
  if (q < 2) return false;
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  uint32_t r = 0;
  uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) return false;
  p_out = uint32_t(p);
  r_out = r;
  return true;
}

Field::Field(uint32_t p, uint32_t r, uint64_t max_order) : p_(p), r_(r) {
  if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (!is_prime(p)) throw NotPrime(p);
  uint64_t q = 1;
  for (uint32_t i = 0; i < r; ++i) {
    if (q > max_order / p) throw DegreeTooLarge(p, r, max_order);
    q *= p;
  }
  q_ = q;

  weight_.resize(r_);
  weight_[r_ - 1] = 1;
  for (uint32_t i = r_ - 1; i-- > 0;) weight_[i] = weight_[i + 1] * p_;
  // The constant 1 has c_0 = 1, and c_0 carries weight p^(r-1).
  one_code_ = uint32_t(weight_[0]);

  pick_modulus();
  qm1_factors_ = prime_factors(q_ - 1);
  if (q_ <= kTableLimit) build_tables();

  primitive_code_ = 0;
  for (uint32_t c = 1; c < q_; ++c) {
    if (mult_order_code(c) == q_ - 1) {
      primitive_code_ = c;
      break;
    }
  }
}

void Field::pick_modulus() {
  if (r_ == 1) {
    modulus_ = {0, 1};  // the polynomial t
    return;
  }
  // Candidates enumerated so that the index orders (m_0, m_1, ...) by
  // low-degree-first lexicographic comparison.
  for (uint64_t idx = 0;; ++idx) {
    Poly m(r_ + 1, 0);
    m[r_] = 1;
    for (uint32_t i = 0; i < r_; ++i) m[i] = uint32_t((idx / weight_[i]) % p_);
    if (is_irreducible(m, p_)) {
      modulus_.assign(m.begin(), m.end());
      return;
    }
  }
}

std::vector<uint32_t> Field::decode(uint32_t code) const {
  std::vector<uint32_t> c(r_);
  for (uint32_t i = 0; i < r_; ++i) c[i] = uint32_t((code / weight_[i]) % p_);
  return c;
}

uint32_t Field::encode(const std::vector<uint32_t>& coeffs) const {
  if (coeffs.size() != r_)
    throw std::invalid_argument("coefficient vector must have length r");
  uint64_t code = 0;
  for (uint32_t i = 0; i < r_; ++i) {
    if (coeffs[i] >= p_)
      throw std::invalid_argument("coefficient not reduced mod p");
    code += coeffs[i] * weight_[i];
  }
  return uint32_t(code);
}

Element Field::element(uint32_t code) const {
  if (code >= q_) throw std::out_of_range("element code out of range");
  return Element(this, code);
}

Element Field::from_coeffs(const std::vector<uint32_t>& low_to_high) const {
  return Element(this, encode(low_to_high));
}

uint32_t Field::add_slow(uint32_t a, uint32_t b) const {
  uint64_t res = 0;
  for (uint32_t i = 0; i < r_; ++i) {
    const uint32_t da = uint32_t((a / weight_[i]) % p_);
    const uint32_t db = uint32_t((b / weight_[i]) % p_);
    res += uint64_t(mod_add(da, db, p_)) * weight_[i];
  }
  return uint32_t(res);
}

uint32_t Field::neg_slow(uint32_t a) const {
  uint64_t res = 0;
  for (uint32_t i = 0; i < r_; ++i) {
    const uint32_t da = uint32_t((a / weight_[i]) % p_);
    res += uint64_t(mod_neg(da, p_)) * weight_[i];
  }
  return uint32_t(res);
}

uint32_t Field::mul_slow(uint32_t a, uint32_t b) const {
  const std::vector<uint32_t> ca = decode(a);
  const std::vector<uint32_t> cb = decode(b);
  Poly prod(2 * r_ - 1, 0);
  for (uint32_t i = 0; i < r_; ++i) {
    if (ca[i] == 0) continue;
    for (uint32_t j = 0; j < r_; ++j)
      prod[i + j] = mod_add(prod[i + j], mod_mul(ca[i], cb[j], p_), p_);
  }
  if (r_ > 1) prod = poly_rem(std::move(prod), modulus_, p_);
  prod.resize(r_, 0);
  uint64_t code = 0;
  for (uint32_t i = 0; i < r_; ++i) code += uint64_t(prod[i]) * weight_[i];
  return uint32_t(code);
}

void Field::build_tables() {
  const size_t q = size_t(q_);
  neg_tab_.resize(q);
  for (size_t a = 0; a < q; ++a) neg_tab_[a] = uint16_t(neg_slow(uint32_t(a)));
  add_tab_.resize(q * q);
  mul_tab_.resize(q * q);
  for (size_t a = 0; a < q; ++a) {
    for (size_t b = 0; b < q; ++b) {
      add_tab_[a * q + b] = uint16_t(add_slow(uint32_t(a), uint32_t(b)));
      mul_tab_[a * q + b] = uint16_t(mul_slow(uint32_t(a), uint32_t(b)));
    }
  }
  tables_ = true;
  inv_tab_.resize(q);
  inv_tab_[0] = 0;
  for (size_t a = 1; a < q; ++a)
    inv_tab_[a] = uint16_t(pow_code(uint32_t(a), q_ - 2));
}

uint32_t Field::inv_code(uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  if (tables_) return inv_tab_[a];
  return pow_code(a, q_ - 2);
}

uint32_t Field::pow_code(uint32_t a, uint64_t e) const {
  uint32_t result = one_code_;
  uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul_code(result, base);
    base = mul_code(base, base);
    e >>= 1;
  }
  return result;
}

uint64_t Field::mult_order_code(uint32_t a) const {
  if (a == 0) throw ZeroElement();
  uint64_t ord = q_ - 1;
  for (uint64_t f : qm1_factors_) {
    while (ord % f == 0 && pow_code(a, ord / f) == one_code_) ord /= f;
  }
  return ord;
}

std::vector<uint32_t> Element::coeffs() const { return field_->decode(code_); }

bool operator==(const Element& a, const Element& b) {
  if (a.field_ == nullptr || b.field_ == nullptr)
    return a.field_ == b.field_ && a.code_ == b.code_;
  return a.field_->same_field(*b.field_) && a.code_ == b.code_;
}

namespace {
const Field& common_field(const Element& a, const Element& b) {
  const Field* fa = &a.field();
  const Field* fb = &b.field();
  if (fa == nullptr || fb == nullptr || !fa->same_field(*fb))
    throw FieldMismatch();
  return *fa;
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return f.element(f.add_code(a.code(), b.code()));
}

Element operator-(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return f.element(f.sub_code(a.code(), b.code()));
}

Element operator*(const Element& a, const Element& b) {
  const Field& f = common_field(a, b);
  return f.element(f.mul_code(a.code(), b.code()));
}

Element operator-(const Element& a) {
  return a.field().element(a.field().neg_code(a.code()));
}

Element inverse(const Element& a) {
  return a.field().element(a.field().inv_code(a.code()));
}

uint64_t mult_order(const Element& a) {
  return a.field().mult_order_code(a.code());
}

}  // namespace gf
