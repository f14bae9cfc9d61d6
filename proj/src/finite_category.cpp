#include "pericyclic/finite_category.hpp"

#include <map>

#include "pericyclic/errors.hpp"

namespace peri {

int FiniteCategory::compose(int g, int f) const {
  if (dst(f) != src(g))
    throw PreconditionError("cannot compose " + morphisms[static_cast<std::size_t>(g)].id + " after " +
                            morphisms[static_cast<std::size_t>(f)].id);
  return composition[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
}

int FiniteCategory::morphism_index(const std::string& id) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].id == id) return static_cast<int>(i);
  throw InputError("unknown morphism " + id);
}

FiniteCategory make_category(std::vector<std::string> objects, const std::vector<MorphismSpec>& morphisms,
                             const std::vector<std::pair<std::string, std::string>>& identities,
                             const std::vector<std::tuple<std::string, std::string, std::string>>& composition) {
  FiniteCategory c;
  std::map<std::string, int> obj, mor;
  for (const auto& o : objects) {
    if (!obj.emplace(o, static_cast<int>(obj.size())).second) throw InputError("duplicate object " + o);
  }
  c.objects = std::move(objects);
  auto object_of = [&](const std::string& name) {
    auto it = obj.find(name);
    if (it == obj.end()) throw InputError("unknown object " + name);
    return it->second;
  };
  for (const auto& m : morphisms) {
    if (!mor.emplace(m.id, static_cast<int>(mor.size())).second) throw InputError("duplicate morphism " + m.id);
    c.morphisms.push_back({m.id, object_of(m.src), object_of(m.dst)});
  }
  auto morphism_of = [&](const std::string& name) {
    auto it = mor.find(name);
    if (it == mor.end()) throw InputError("unknown morphism " + name);
    return it->second;
  };

  c.identities.assign(c.objects.size(), -1);
  for (const auto& [o, m] : identities) {
    const int oi = object_of(o), mi = morphism_of(m);
    if (c.src(mi) != oi || c.dst(mi) != oi) throw InputError("identity " + m + " is not an endomorphism of " + o);
    c.identities[static_cast<std::size_t>(oi)] = mi;
  }
  for (std::size_t o = 0; o < c.objects.size(); ++o)
    if (c.identities[o] < 0) throw InputError("object " + c.objects[o] + " has no identity");

  const std::size_t n = c.morphisms.size();
  c.composition.assign(n, std::vector<int>(n, -1));
  for (const auto& [g, f, gf] : composition) {
    const int gi = morphism_of(g), fi = morphism_of(f), gfi = morphism_of(gf);
    if (c.dst(fi) != c.src(gi)) throw InputError("composition given for non-composable pair " + g + ", " + f);
    if (c.src(gfi) != c.src(fi) || c.dst(gfi) != c.dst(gi)) throw InputError(gf + " has the wrong endpoints");
    int& slot = c.composition[static_cast<std::size_t>(gi)][static_cast<std::size_t>(fi)];
    if (slot >= 0 && slot != gfi) throw InputError("conflicting composites for " + g + ", " + f);
    slot = gfi;
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f)
      if (c.morphisms[f].dst == c.morphisms[g].src && c.composition[g][f] < 0)
        throw InputError("missing composite " + c.morphisms[g].id + " o " + c.morphisms[f].id);

  for (std::size_t f = 0; f < n; ++f) {
    const int fi = static_cast<int>(f);
    if (c.compose(c.identity(c.dst(fi)), fi) != fi || c.compose(fi, c.identity(c.src(fi))) != fi)
      throw InputError("identities are not units for " + c.morphisms[f].id);
  }
  for (int h = 0; h < static_cast<int>(n); ++h)
    for (int g = 0; g < static_cast<int>(n); ++g) {
      if (c.dst(g) != c.src(h)) continue;
      for (int f = 0; f < static_cast<int>(n); ++f) {
        if (c.dst(f) != c.src(g)) continue;
        if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
          throw InputError("composition is not associative at (" + c.morphisms[static_cast<std::size_t>(h)].id +
                           ", " + c.morphisms[static_cast<std::size_t>(g)].id + ", " +
                           c.morphisms[static_cast<std::size_t>(f)].id + ")");
      }
    }
  return c;
}

FiniteCategory terminal_category() { return make_category({"*"}, {{"id", "*", "*"}}, {{"*", "id"}}, {{"id", "id", "id"}}); }

FiniteCategory cyclic_group_category(int n) {
  if (n < 1) throw InputError("group order must be positive");
  auto name = [](int i) { return i == 0 ? std::string("e") : i == 1 ? std::string("g") : "g^" + std::to_string(i); };
  std::vector<MorphismSpec> mors;
  std::vector<std::tuple<std::string, std::string, std::string>> comp;
  for (int i = 0; i < n; ++i) mors.push_back({name(i), "*", "*"});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) comp.emplace_back(name(i), name(j), name((i + j) % n));
  return make_category({"*"}, mors, {{"*", "e"}}, comp);
}

FiniteCategory chain_poset(int n) {
  if (n < 1) throw InputError("poset size must be positive");
  auto name = [](int i, int j) { return std::to_string(i) + "<=" + std::to_string(j); };
  std::vector<std::string> objs;
  std::vector<MorphismSpec> mors;
  std::vector<std::pair<std::string, std::string>> ids;
  std::vector<std::tuple<std::string, std::string, std::string>> comp;
  for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) {
    ids.emplace_back(std::to_string(i), name(i, i));
    for (int j = i; j < n; ++j) mors.push_back({name(i, j), std::to_string(i), std::to_string(j)});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) comp.emplace_back(name(j, k), name(i, j), name(i, k));
  return make_category(objs, mors, ids, comp);
}

}  // namespace peri
