#include "embed.hpp"

#include <algorithm>

namespace embed {

namespace {

using zorn::PaigeElement;

PaigeElement pair_x(const paige::Generators& g, GenPair pair) {
  return pair == GenPair::g45 ? g.g4 : g.g3;
}

PaigeElement pair_y(const paige::Generators& g, GenPair pair) {
  return pair == GenPair::g34 ? g.g4 : g.g5;
}

std::array<std::string, 2> pair_symbols(GenPair pair) {
  switch (pair) {
    case GenPair::g34: return {"g3", "g4"};
    case GenPair::g35: return {"g3", "g5"};
    default: return {"g4", "g5"};
  }
}

RelationResult check_relation(const std::string& word,
                              const PaigeElement& base, uint64_t exponent) {
  RelationResult r;
  r.word = word;
  r.exponent = exponent;
  r.order_found = element_order(base);
  r.holds = exponent % r.order_found == 0;
  return r;
}

}  // namespace

std::string pair_name(GenPair pair) {
  switch (pair) {
    case GenPair::g34: return "34";
    case GenPair::g35: return "35";
    default: return "45";
  }
}

EmbeddingReport verify_embedding(const gf::Field& f, GenPair pair,
                                 uint64_t cap) {
  const paige::Generators gens = paige::standard_generators(f);
  const PaigeElement x = pair_x(gens, pair);
  const PaigeElement y = pair_y(gens, pair);
  const uint32_t p = f.characteristic();

  EmbeddingReport rep;
  rep.q = f.order();
  rep.p = p;
  rep.pair = pair;
  rep.expected_size = 3ull * p * p;
  if (rep.expected_size > cap) throw paige::CapExceeded(rep.expected_size, cap);

  const auto [sx, sy] = pair_symbols(pair);
  const PaigeElement xy = paige_mul(x, y);
  const PaigeElement yx = paige_mul(y, x);
  const PaigeElement xinv_y = paige_mul(paige_inv(x), y);
  const PaigeElement x2y = paige_mul(paige_mul(x, x), y);

  rep.relations[0] = check_relation(sx + "^3", x, 3);
  rep.relations[1] = check_relation(sy + "^3", y, 3);
  rep.relations[2] = check_relation("(" + sx + " " + sy + ")^3", xy, 3);
  rep.relations[3] = check_relation("(" + sy + " " + sx + ")^3", yx, 3);
  rep.relations[4] =
      check_relation("(" + sx + "^-1 " + sy + ")^" + std::to_string(p),
                     xinv_y, p);
  rep.relations[5] = check_relation(
      "(" + sx + "^2 " + sy + ")^" + std::to_string(p), x2y, p);
  rep.relations_ok = std::all_of(rep.relations.begin(), rep.relations.end(),
                                 [](const RelationResult& r) { return r.holds; });

  const paige::Closure closure = paige::close(f, {x, y}, cap);
  rep.closure_size = closure.size();
  rep.size_ok = rep.closure_size == rep.expected_size;

  if (p == 3) {
    rep.membership_checked = true;
    const PaigeElement xy2 = paige_mul(paige_mul(x, y), y);
    const paige::Closure h1 = paige::close(f, {x2y, xy2}, cap);
    rep.membership_ok = !h1.contains(x);
  }

  // phi: (a^v1 b^v2 x^k) |-> (x y^2)^(-v1) (x^2 y)^(-v2) x^k evaluated on the
  // pair, using a = (x y^2)^-1 and b = (x^2 y)^-1 in E(p).
  const cox::Group model(p);
  const PaigeElement a_img = paige_inv(paige_mul(paige_mul(x, y), y));
  const PaigeElement b_img = paige_inv(x2y);

  std::vector<PaigeElement> phi;
  phi.reserve(model.size());
  std::vector<PaigeElement> a_pow{PaigeElement::identity(f)};
  for (uint32_t i = 1; i < p; ++i)
    a_pow.push_back(paige_mul(a_pow.back(), a_img));
  std::vector<PaigeElement> b_pow{PaigeElement::identity(f)};
  for (uint32_t i = 1; i < p; ++i)
    b_pow.push_back(paige_mul(b_pow.back(), b_img));
  const std::array<PaigeElement, 3> x_pow{PaigeElement::identity(f), x,
                                          paige_mul(x, x)};
  for (const cox::Element& e : model.enumerate())
    phi.push_back(
        paige_mul(paige_mul(a_pow[e.v[0]], b_pow[e.v[1]]), x_pow[e.k]));

  // bijective: pairwise distinct, inside the closure, same cardinality
  {
    std::vector<PaigeElement> images = phi;
    std::sort(images.begin(), images.end());
    const bool distinct =
        std::adjacent_find(images.begin(), images.end()) == images.end();
    bool inside = true;
    for (const PaigeElement& im : images)
      if (!closure.contains(im)) inside = false;
    rep.iso_bijective =
        distinct && inside && images.size() == closure.size();
  }

  // multiplicative on every pair of the model
  {
    bool ok = true;
    const std::vector<cox::Element> all = model.enumerate();
    for (size_t i = 0; i < all.size() && ok; ++i) {
      for (size_t j = 0; j < all.size(); ++j) {
        const uint32_t ij = model.code(mul(all[i], all[j]));
        if (!(paige_mul(phi[i], phi[j]) == phi[ij])) {
          ok = false;
          break;
        }
      }
    }
    rep.iso_multiplicative = ok;
  }

  return rep;
}

IntersectionReport pairwise_intersections(const gf::Field& f, uint64_t cap,
                                          uint64_t union_cap) {
  const paige::Generators gens = paige::standard_generators(f);

  IntersectionReport rep;
  rep.q = f.order();
  rep.loop_order = zorn::paige_loop_order(rep.q);
  if (rep.loop_order > union_cap)
    throw paige::CapExceeded(rep.loop_order, union_cap);

  const paige::Closure c34 = paige::close(f, {gens.g3, gens.g4}, cap);
  const paige::Closure c35 = paige::close(f, {gens.g3, gens.g5}, cap);
  const paige::Closure c45 = paige::close(f, {gens.g4, gens.g5}, cap);
  rep.closure_sizes = {c34.size(), c35.size(), c45.size()};

  auto intersection_size = [](const paige::Closure& a, const paige::Closure& b) {
    std::vector<zorn::PaigeElement> out;
    std::set_intersection(a.elements().begin(), a.elements().end(),
                          b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return uint64_t(out.size());
  };
  rep.intersection_sizes = {intersection_size(c34, c35),
                            intersection_size(c34, c45),
                            intersection_size(c35, c45)};

  std::vector<zorn::PaigeElement> union_gens;
  for (const paige::Closure* c : {&c34, &c35, &c45})
    union_gens.insert(union_gens.end(), c->elements().begin(),
                      c->elements().end());
  rep.union_closure_size = paige::close(f, union_gens, cap).size();
  return rep;
}

}  // namespace embed
