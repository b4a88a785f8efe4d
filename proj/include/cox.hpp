#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cox {

struct GroupMismatch : std::runtime_error {
  GroupMismatch()
      : std::runtime_error("elements belong to models with different n") {}
};

// Element of E(n) = (C_n x C_n) x| C_3: a translation exponent vector over
// the basis a=(1,0), b=(0,1), plus a power of the automorphism f with
// f(a) = a^-1 b, f(b) = a^-1.
struct Element {
  uint32_t n = 1;
  std::array<uint32_t, 2> v{0, 0};  // reduced into [0, n)
  uint32_t k = 0;                   // reduced into [0, 3)

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) {
    return std::array<uint32_t, 3>{a.v[0], a.v[1], a.k} <
           std::array<uint32_t, 3>{b.v[0], b.v[1], b.k};
  }
};

// (v,k)(w,m) = (v + F^k w, k+m), with F = [[-1,-1],[1,0]] acting on columns.
Element mul(const Element& g, const Element& h);
Element inv(const Element& g);
Element pow(const Element& g, int64_t e);
uint64_t element_order(const Element& g);

class Group {
 public:
  explicit Group(uint32_t n);

  uint32_t n() const { return n_; }
  uint64_t size() const { return 3ull * n_ * n_; }
  Element identity() const { return Element{n_, {0, 0}, 0}; }
  Element x() const { return Element{n_, {0, 0}, 1}; }
  Element y() const { return Element{n_, {1, 0}, 1}; }
  // The matrix of f over the basis (a, b), entries in {-1, 0, 1}.
  std::array<std::array<int32_t, 2>, 2> automorphism_matrix() const {
    return {{{-1, -1}, {1, 0}}};
  }

  // All 3n^2 elements in lexicographic (v1, v2, k) order.
  std::vector<Element> enumerate() const;
  uint32_t code(const Element& g) const;
  Element from_code(uint32_t code) const;

 private:
  uint32_t n_;
};

enum class Letter : uint8_t { x, x_inv, y, y_inv };
using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
// w^e; negative exponents use the inverse word.
Word word_pow(const Word& w, int64_t e);
Word concat(const Word& a, const Word& b);
std::string word_str(const Word& w);

Element eval_word(const Group& g, const Word& w);

struct PresentationReport {
  uint32_t n = 0;
  uint64_t order = 0;
  // x^3, y^3, (xy)^3, (x^-1 y)^n
  std::array<bool, 4> relations{};
  bool relations_ok = false;
  bool generated_ok = false;  // closure of {x,y} is all of E(n)
  bool abelian = false;
  uint64_t exponent = 0;
  std::vector<std::pair<uint64_t, uint64_t>> order_census;  // (order, count)
  // H = <x^2 y, x y^2> has n^2 elements, is abelian, normal, and equals the
  // translation subgroup {(v, 0)}.
  bool h_ok = false;
  bool ok() const { return relations_ok && generated_ok && h_ok; }
};

PresentationReport verify_presentation(const Group& g);

}  // namespace cox
