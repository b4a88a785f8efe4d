#include "cox.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cox {

namespace {

// F^k applied to w, for the fixed automorphism matrix.
std::array<uint32_t, 2> apply_f(uint32_t k, const std::array<uint32_t, 2>& w,
                                uint32_t n) {
  switch (k) {
    case 0:
      return w;
    case 1:  // F(w) = (-w1-w2, w1)
      return {uint32_t((2ull * n - w[0] - w[1]) % n), w[0]};
    default:  // F^2(w) = (w2, -w1-w2)
      return {w[1], uint32_t((2ull * n - w[0] - w[1]) % n)};
  }
}

}  // namespace

Element mul(const Element& g, const Element& h) {
  if (g.n != h.n) throw GroupMismatch();
  const std::array<uint32_t, 2> fw = apply_f(g.k, h.v, g.n);
  return Element{g.n,
                 {uint32_t((g.v[0] + fw[0]) % g.n),
                  uint32_t((g.v[1] + fw[1]) % g.n)},
                 (g.k + h.k) % 3};
}

Element inv(const Element& g) {
  const uint32_t mk = (3 - g.k) % 3;
  const std::array<uint32_t, 2> fv = apply_f(mk, g.v, g.n);
  return Element{g.n,
                 {uint32_t((g.n - fv[0]) % g.n), uint32_t((g.n - fv[1]) % g.n)},
                 mk};
}

Element pow(const Element& g, int64_t e) {
  Element base = e < 0 ? inv(g) : g;
  uint64_t m = e < 0 ? uint64_t(-e) : uint64_t(e);
  Element acc{g.n, {0, 0}, 0};
  while (m > 0) {
    if (m & 1) acc = mul(acc, base);
    base = mul(base, base);
    m >>= 1;
  }
  return acc;
}

uint64_t element_order(const Element& g) {
  const Element e{g.n, {0, 0}, 0};
  Element acc = g;
  uint64_t k = 1;
  while (!(acc == e)) {
    acc = mul(acc, g);
    ++k;
  }
  return k;
}

Group::Group(uint32_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

std::vector<Element> Group::enumerate() const {
  std::vector<Element> out;
  out.reserve(size());
  for (uint32_t v1 = 0; v1 < n_; ++v1)
    for (uint32_t v2 = 0; v2 < n_; ++v2)
      for (uint32_t k = 0; k < 3; ++k) out.push_back(Element{n_, {v1, v2}, k});
  return out;
}

uint32_t Group::code(const Element& g) const {
  if (g.n != n_) throw GroupMismatch();
  return (g.v[0] * n_ + g.v[1]) * 3 + g.k;
}

Element Group::from_code(uint32_t code) const {
  const uint32_t k = code % 3;
  const uint32_t v = code / 3;
  return Element{n_, {v / n_, v % n_}, k};
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    switch (*it) {
      case Letter::x: out.push_back(Letter::x_inv); break;
      case Letter::x_inv: out.push_back(Letter::x); break;
      case Letter::y: out.push_back(Letter::y_inv); break;
      case Letter::y_inv: out.push_back(Letter::y); break;
    }
  }
  return out;
}

Word word_pow(const Word& w, int64_t e) {
  const Word base = e < 0 ? inverse_word(w) : w;
  const uint64_t m = e < 0 ? uint64_t(-e) : uint64_t(e);
  Word out;
  out.reserve(base.size() * m);
  for (uint64_t i = 0; i < m; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_str(const Word& w) {
  std::string s;
  for (Letter l : w) {
    if (!s.empty()) s += ' ';
    switch (l) {
      case Letter::x: s += "x"; break;
      case Letter::x_inv: s += "x^-1"; break;
      case Letter::y: s += "y"; break;
      case Letter::y_inv: s += "y^-1"; break;
    }
  }
  return s.empty() ? "1" : s;
}

Element eval_word(const Group& g, const Word& w) {
  Element acc = g.identity();
  for (Letter l : w) {
    switch (l) {
      case Letter::x: acc = mul(acc, g.x()); break;
      case Letter::x_inv: acc = mul(acc, inv(g.x())); break;
      case Letter::y: acc = mul(acc, g.y()); break;
      case Letter::y_inv: acc = mul(acc, inv(g.y())); break;
    }
  }
  return acc;
}

PresentationReport verify_presentation(const Group& g) {
  PresentationReport r;
  r.n = g.n();
  const Element e = g.identity();
  const Element x = g.x();
  const Element y = g.y();

  r.relations[0] = pow(x, 3) == e;
  r.relations[1] = pow(y, 3) == e;
  r.relations[2] = pow(mul(x, y), 3) == e;
  r.relations[3] = pow(mul(inv(x), y), int64_t(g.n())) == e;
  r.relations_ok = r.relations[0] && r.relations[1] && r.relations[2] &&
                   r.relations[3];

  const std::vector<Element> all = g.enumerate();
  r.order = all.size();

  // closure of {x, y} by right multiplication
  {
    std::vector<uint8_t> seen(g.size(), 0);
    std::vector<Element> work{e};
    seen[g.code(e)] = 1;
    size_t count = 1;
    for (size_t i = 0; i < work.size(); ++i) {
      for (const Element& gen : {x, y}) {
        const Element z = mul(work[i], gen);
        if (!seen[g.code(z)]) {
          seen[g.code(z)] = 1;
          ++count;
          work.push_back(z);
        }
      }
    }
    r.generated_ok = count == g.size();
  }

  r.abelian = true;
  for (size_t i = 0; i < all.size() && r.abelian; ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!(mul(all[i], all[j]) == mul(all[j], all[i]))) {
        r.abelian = false;
        break;
      }

  std::map<uint64_t, uint64_t> census;
  uint64_t exponent = 1;
  for (const Element& a : all) {
    const uint64_t o = element_order(a);
    ++census[o];
    exponent = std::lcm(exponent, o);
  }
  r.order_census.assign(census.begin(), census.end());
  r.exponent = exponent;

  // H = <x^2 y, x y^2> must be the n^2 translations, abelian and normal.
  {
    const Element h1 = eval_word(g, Word{Letter::x, Letter::x, Letter::y});
    const Element h2 = eval_word(g, Word{Letter::x, Letter::y, Letter::y});
    std::vector<uint8_t> seen(g.size(), 0);
    std::vector<Element> work{e};
    seen[g.code(e)] = 1;
    size_t count = 1;
    for (size_t i = 0; i < work.size(); ++i) {
      for (const Element& gen : {h1, h2}) {
        const Element z = mul(work[i], gen);
        if (!seen[g.code(z)]) {
          seen[g.code(z)] = 1;
          ++count;
          work.push_back(z);
        }
      }
    }
    bool h_ok = count == uint64_t(g.n()) * g.n();
    for (const Element& a : work)
      if (a.k != 0) h_ok = false;
    // normality: conjugation by the two generators stays inside
    for (const Element& a : work) {
      for (const Element& c : {x, y}) {
        const Element conj = mul(mul(inv(c), a), c);
        if (!seen[g.code(conj)]) h_ok = false;
      }
    }
    // commuting generators (abelian since H is generated by h1, h2)
    if (!(mul(h1, h2) == mul(h2, h1))) h_ok = false;
    r.h_ok = h_ok;
  }

  return r;
}

}  // namespace cox
