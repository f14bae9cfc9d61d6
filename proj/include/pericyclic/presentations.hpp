#pragma once

// Two further presentations of the epicyclic category:
//  * oriented groupoids g(m) = (Z/(m+1)) x| Z with positive cone h >= 0, and
//    their non-trivial morphisms;
//  * Kaledin's categories [n]_Lambda and non-degenerate functors between them.
// A morphism in either presentation is determined by the image f0 of object 0
// and the lengths l_j >= 0 of the images of the generating arrows j -> j+1.

#include <cstdint>
#include <string>
#include <vector>

#include "pericyclic/arc_map.hpp"

namespace peri {

/// Element (x, h) of g(m): an arrow from x to x + h.
struct GroupoidElement {
  Int ambient = 0;  // m
  Int x = 0;        // source, 0 <= x <= m
  Int h = 0;

  Int source() const { return x; }
  Int range() const;
  bool is_positive() const { return h >= 0; }
  bool is_unit() const { return h == 0; }

  friend bool operator==(const GroupoidElement&, const GroupoidElement&) = default;
};

/// Validating constructor.
GroupoidElement groupoid_element(Int ambient, Int x, Int h);

/// a o b; requires s(a) = r(b).
GroupoidElement g_compose(const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement g_inverse(const GroupoidElement& a);

/// Shared data of both presentations: src/dst are the presentation's own
/// object labels.
struct LengthData {
  Int f0 = 0;
  std::vector<Int> lengths;
  friend bool operator==(const LengthData&, const LengthData&) = default;
};

/// Morphism g(src) -> g(dst).
struct GroupoidMor {
  Int src = 0;
  Int dst = 0;
  LengthData data;

  Int degree() const;
  /// Object map x -> f0 + l_0 + ... + l_{x-1} mod (dst + 1).
  Int object_map(Int x) const;
  /// Image of an arbitrary element of g(src).
  GroupoidElement apply(const GroupoidElement& e) const;

  friend bool operator==(const GroupoidMor&, const GroupoidMor&) = default;
};

/// Throws InputError unless 0 <= f0 <= dst, lengths has src + 1 entries, all
/// non-negative, and their sum is a positive multiple of dst + 1.
GroupoidMor groupoid_mor(Int src, Int dst, Int f0, std::vector<Int> lengths);

GroupoidMor groupoid_compose(const GroupoidMor& g, const GroupoidMor& f);

ArcMap to_arc(const GroupoidMor& f);
GroupoidMor from_arc(const ArcMap& f);

/// Non-degenerate functor [src]_Lambda -> [dst]_Lambda.
struct KaledinFunctor {
  Int src = 1;
  Int dst = 1;
  LengthData data;

  Int degree() const;
  Int object_map(Int x) const;

  friend bool operator==(const KaledinFunctor&, const KaledinFunctor&) = default;
};

KaledinFunctor kaledin_functor(Int src, Int dst, Int f0, std::vector<Int> lengths);
KaledinFunctor identity_functor(Int n);

KaledinFunctor p_functor(const GroupoidMor& f);
GroupoidMor p_inverse(const KaledinFunctor& f);

KaledinFunctor compose_functor(const KaledinFunctor& g, const KaledinFunctor& f);

struct Classification {
  bool vertical = false;
  bool horizontal = false;
  bool nondegenerate = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// horizontal <=> degree 1; vertical <=> every generating arrow goes to a
/// generating arrow (all lengths 1).
Classification classify(const KaledinFunctor& f);

/// All functors [n] -> [m] of degree <= max_degree, enumerated from the
/// (f0, lengths) description independently of the arc model.
std::vector<KaledinFunctor> enumerate_functors(Int src, Int dst, Int max_degree);

std::string to_string(const GroupoidMor& f);
std::string to_string(const KaledinFunctor& f);

}  // namespace peri
