#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace peri {

/// Finite category with integer handles for objects and morphisms.
struct FiniteCategory {
  struct Morphism {
    std::string id;
    int src = 0;
    int dst = 0;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;                // object -> identity morphism
  std::vector<std::vector<int>> composition;  // [g][f] -> g o f, or -1

  int src(int f) const { return morphisms.at(static_cast<std::size_t>(f)).src; }
  int dst(int f) const { return morphisms.at(static_cast<std::size_t>(f)).dst; }
  int identity(int object) const { return identities.at(static_cast<std::size_t>(object)); }
  /// g o f; throws PreconditionError if dst(f) != src(g).
  int compose(int g, int f) const;
  int morphism_index(const std::string& id) const;
};

struct MorphismSpec {
  std::string id;
  std::string src;
  std::string dst;
};

/// Builds and validates: composition defined exactly on composable pairs,
/// associative, identities are units.  Throws InputError otherwise.
FiniteCategory make_category(std::vector<std::string> objects, const std::vector<MorphismSpec>& morphisms,
                             const std::vector<std::pair<std::string, std::string>>& identities,
                             const std::vector<std::tuple<std::string, std::string, std::string>>& composition);

FiniteCategory terminal_category();
/// One object, morphisms e, g, g^2, ..., g^{n-1}.
FiniteCategory cyclic_group_category(int n);
/// Objects 0 < 1 < ... < n-1 with one arrow i -> j for i <= j.
FiniteCategory chain_poset(int n);

}  // namespace peri
