#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pericyclic/cyclic_sets.hpp"
#include "pericyclic/errors.hpp"
#include "pericyclic/json_io.hpp"

using namespace peri;

namespace {

using G = GeneratorSpec;

bool same_tables(const TruncatedKCyclicSet& a, const TruncatedKCyclicSet& b) {
  if (a.k() != b.k() || a.top() != b.top()) return false;
  for (Int n = 0; n <= a.top(); ++n) {
    const auto &x = a.level(n), &y = b.level(n);
    if (x.labels != y.labels || x.d != y.d || x.s != y.s || x.t != y.t) return false;
  }
  return true;
}

bool is_repetition(const Label& l, Int k) {
  const std::size_t block = l.size() / static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] != l[i % block]) return false;
  return true;
}

// All degree-1 maps between periods <= p_max.
std::vector<ArcMap> degree_one_maps(Int p_max) {
  std::vector<ArcMap> out;
  for (Int n = 1; n <= p_max; ++n)
    for (Int m = 1; m <= p_max; ++m)
      for (const ArcMap& f : enumerate_hom(n, m, 1)) out.push_back(f);
  return out;
}

std::vector<PiMor> generators_from(const Beta& beta, PiObject x) {
  std::vector<PiMor> out;
  auto keep = [&](PiMor p) {
    if (beta.in_truncation(p.dst)) out.push_back(std::move(p));
  };
  const Int n = x.n, a = x.a;
  if (n >= 1)
    for (Int i = 0; i <= n; ++i) keep(cyclic_lift(generator(G::face(n, i)), a));
  for (Int i = 0; i <= n; ++i) keep(cyclic_lift(generator(G::degeneracy(n + 1, i)), a));
  keep(cyclic_lift(generator(G::cyclic(n + 1)), a));
  for (Int s = 2; s <= a; ++s)
    if (a % s == 0) {
      keep(chi(n, s, a / s));
      keep(w_morphism(n, a, s));
    }
  return out;
}

std::map<int, int> after(const std::map<int, int>& g, const std::map<int, int>& f) {
  std::map<int, int> out;
  for (const auto& [x, y] : f) out.emplace(x, g.at(y));
  return out;
}

}  // namespace

TEST_CASE("finite categories") {
  const FiniteCategory c2 = cyclic_group_category(2);
  CHECK(c2.morphisms.size() == 2);
  CHECK(c2.compose(1, 1) == 0);
  const FiniteCategory p = chain_poset(2);
  CHECK(p.morphisms.size() == 3);
  CHECK_THROWS_AS(p.compose(p.morphism_index("0<=1"), p.morphism_index("0<=1")), PreconditionError);
  CHECK_THROWS_AS(make_category({"*"}, {{"e", "*", "*"}, {"g", "*", "*"}}, {{"*", "e"}},
                                {{"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "g"}, {"g", "g", "e"}}),
                  InputError);
  CHECK_THROWS_AS(make_category({"*"}, {{"e", "*", "*"}}, {{"*", "e"}}, {}), InputError);
}

TEST_CASE("category JSON ingestion") {
  const Json j = Json::parse(R"({"objects":["*"],"morphisms":[{"id":"e","src":"*","dst":"*"},{"id":"s","src":"*","dst":"*"}],
    "identities":{"*":"e"},"composition":[["e","e","e"],["e","s","s"],["s","e","s"],["s","s","e"]]})");
  const FiniteCategory c = category_from_json(j);
  CHECK(cyclic_nerve(c, 2).size(2) == 8);
  CHECK_THROWS_AS(category_from_json(Json::parse(R"({"objects":["*"]})")), InputError);
}

TEST_CASE("nerve sizes") {
  const auto t = cyclic_nerve(terminal_category(), 4);
  const auto c2 = cyclic_nerve(cyclic_group_category(2), 4);
  const auto p = cyclic_nerve(chain_poset(2), 4);
  for (Int n = 0; n <= 4; ++n) {
    CHECK(t.size(n) == 1);
    CHECK(c2.size(n) == (std::size_t{1} << (n + 1)));
    CHECK(p.size(n) == 2);
  }
}

TEST_CASE("nerves validate") {
  for (const auto& c : {terminal_category(), cyclic_group_category(2), chain_poset(2), chain_poset(3),
                        cyclic_group_category(3)})
    CHECK(validate(cyclic_nerve(c, 4)).empty());
}

TEST_CASE("the validator reports a corrupted face") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 3);
  std::vector<CyclicLevel> levels;
  for (Int n = 0; n <= y.top(); ++n) levels.push_back(y.level(n));
  auto& entry = levels[2].d[0][3];
  entry = (entry + 1) % 2;
  const auto report = validate(TruncatedKCyclicSet(1, levels));
  REQUIRE_FALSE(report.empty());
  bool named = false;
  for (const auto& line : report) named = named || line.find("d_0") != std::string::npos;
  CHECK(named);
  levels[2].d[0][3] = 9;
  CHECK_THROWS_AS(TruncatedKCyclicSet(1, levels), InputError);
}

TEST_CASE("relations hold as identities of arc maps") {
  const auto instances = relation_instances(4, 1);
  CHECK(instances.size() > 50);
  for (const auto& rel : instances) {
    INFO(rel.name());
    CHECK(word_arc(rel.level, rel.lhs) == word_arc(rel.level, rel.rhs));
  }
}

TEST_CASE("eval_cyclic on generators and composites") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 3);
  for (Int n = 0; n <= 3; ++n) {
    ElementMap id(y.size(n));
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    CHECK(eval_cyclic(y, identity_arc(n + 1)) == id);
    CHECK(eval_cyclic(y, generator(G::cyclic(n + 1))) == y.level(n).t);
    if (n >= 1)
      for (Int i = 0; i <= n; ++i) CHECK(eval_cyclic(y, generator(G::face(n, n - i))) == y.level(n).d[i]);
  }
  const auto maps = degree_one_maps(4);
  for (const ArcMap& f : maps)
    for (const ArcMap& g : maps) {
      if (f.dst_period() != g.src_period()) continue;
      const ElementMap yf = eval_cyclic(y, f), yg = eval_cyclic(y, g), ygf = eval_cyclic(y, compose(g, f));
      for (std::size_t x = 0; x < ygf.size(); ++x) REQUIRE(ygf[x] == yf[static_cast<std::size_t>(yg[x])]);
    }
  CHECK_THROWS_AS(eval_cyclic(y, identity_arc(6)), PreconditionError);
}

TEST_CASE("subdivision") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 5);
  CHECK(same_tables(subdivide(y, 1), y));
  const auto s2 = subdivide(y, 2);
  CHECK(s2.k() == 2);
  CHECK(s2.top() == 2);
  CHECK(s2.size(0) == 4);
  CHECK(validate(s2).empty());
  const auto s3 = subdivide(y, 3);
  CHECK(s3.top() == 1);
  CHECK(validate(s3).empty());
  CHECK_THROWS_AS(subdivide(y, 7), PreconditionError);
  CHECK_THROWS_AS(subdivide(s2, 2), PreconditionError);
}

TEST_CASE("fixed points") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 5);
  const auto same = fixed_points(y);
  CHECK(same_tables(same.set, y));
  const auto f = fixed_points(subdivide(y, 2));
  CHECK(f.set.k() == 1);
  REQUIRE(f.set.size(0) == 2);
  CHECK(f.set.label(0, 0) == Label{0, 0});
  CHECK(f.set.label(0, 1) == Label{1, 1});
  CHECK(validate(f.set).empty());
}

TEST_CASE("fixed points are exactly the repetitions") {
  for (const auto& c : {cyclic_group_category(2), cyclic_group_category(3), chain_poset(2)})
    for (Int k = 2; k <= 3; ++k) {
      const auto y = cyclic_nerve(c, 4 * k - 1);
      const auto sd = subdivide(y, k);
      const auto f = fixed_points(sd);
      for (Int n = 0; n <= std::min<Int>(3, sd.top()); ++n) {
        std::set<Label> fixed, reps;
        for (int x = 0; x < static_cast<int>(f.set.size(n)); ++x) fixed.insert(f.set.label(n, x));
        for (int x = 0; x < static_cast<int>(sd.size(n)); ++x)
          if (is_repetition(sd.label(n, x), k)) reps.insert(sd.label(n, x));
        CHECK(fixed == reps);
      }
    }
}

TEST_CASE("epicyclic maps of a nerve") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 5);
  const auto f1 = fixed_points(subdivide(y, 1));
  const auto id1 = nerve_epicyclic(y, f1, 1, 2);
  for (std::size_t i = 0; i < id1.phi.size(); ++i) CHECK(id1.phi[i] == static_cast<int>(i));
  const auto f2 = fixed_points(subdivide(y, 2));
  const auto e = nerve_epicyclic(y, f2, 2, 0);
  CHECK(nerve_phi({0, 0}, 2) == Label{0});
  CHECK(nerve_phi({1, 1}, 2) == Label{1});
  CHECK(nerve_amplify({1}, 2) == Label{1, 1});
  for (Int n = 0; n <= f2.set.top(); ++n) {
    const auto m = nerve_epicyclic(y, f2, 2, n);
    for (std::size_t x = 0; x < m.p.size(); ++x) CHECK(m.phi[static_cast<std::size_t>(m.p[x])] == static_cast<int>(x));
    for (std::size_t x = 0; x < m.phi.size(); ++x) CHECK(m.p[static_cast<std::size_t>(m.phi[x])] == static_cast<int>(x));
  }
  CHECK(e.phi.size() == 2);
  CHECK_THROWS_AS(nerve_phi({0, 1}, 2), PreconditionError);
}

TEST_CASE("beta examples") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 4);
  const Beta beta = Beta::for_nerve(y);
  const auto b02 = beta.set({0, 2});
  REQUIRE(b02.size() == 2);
  CHECK(y.label(1, b02[0]) == Label{0, 0});
  CHECK(y.label(1, b02[1]) == Label{1, 1});
  const auto w = beta.map(w_morphism(0, 2, 2));
  std::set<Label> image;
  for (const auto& [x, v] : w) image.insert(y.label(0, v));
  CHECK(image == std::set<Label>{{0}, {1}});
  const auto inc = beta.map(chi(0, 2, 1));
  const auto b11 = beta.set({1, 1});
  for (const auto& [x, v] : inc) {
    CHECK(x == v);
    CHECK(std::find(b11.begin(), b11.end(), v) != b11.end());
  }
  CHECK_THROWS_AS(beta.set({2, 2}), PreconditionError);
}

TEST_CASE("beta is functorial on generator pairs") {
  for (const auto& c : {cyclic_group_category(2), chain_poset(2), terminal_category()}) {
    const auto y = cyclic_nerve(c, 5);
    const Beta beta = Beta::for_nerve(y);
    std::size_t pairs = 0;
    for (Int a = 1; a <= 6; ++a)
      for (Int n = 0; a * (n + 1) - 1 <= y.top(); ++n) {
        const PiObject x{n, a};
        CHECK(beta.map(pi_identity(x)).size() == beta.set(x).size());
        for (const PiMor& f : generators_from(beta, x))
          for (const PiMor& g : generators_from(beta, f.dst)) {
            REQUIRE(beta.map(pi_compose(g, f)) == after(beta.map(g), beta.map(f)));
            ++pairs;
          }
      }
    CHECK(pairs > 50);
  }
}

TEST_CASE("the fixed-point square commutes") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 8);
  const Beta beta = Beta::for_nerve(y);
  for (Int n = 0; n <= 2; ++n)
    for (Int q = 1; q <= 2; ++q)
      for (Int u = 1; u <= 2; ++u)
        for (Int v = 1; v <= 2; ++v) {
          if (!beta.in_truncation({n, q * u * v})) continue;
          const PiMor top = chi(n, u, q * v), left = w_morphism(n, q * u * v, q);
          const PiMor right = w_morphism(u * (n + 1) - 1, q * v, q), bottom = chi(n, u, v);
          CHECK(after(beta.map(right), beta.map(top)) == after(beta.map(bottom), beta.map(left)));
          CHECK(pi_compose(right, top) == pi_compose(bottom, left));
        }
}

TEST_CASE("epicyclic coherence phi_k sd_k(phi_r) = phi_kr") {
  const auto y = cyclic_nerve(cyclic_group_category(2), 7);
  for (Int k = 1; k <= 2; ++k)
    for (Int r = 1; r <= 2; ++r) {
      const auto fk = fixed_points(subdivide(y, k));
      const auto fkr = fixed_points(subdivide(y, k * r));
      for (Int n = 0; k * r * (n + 1) - 1 <= y.top(); ++n) {
        const auto direct = nerve_epicyclic(y, fkr, k * r, n);
        for (int x = 0; x < static_cast<int>(fkr.set.size(n)); ++x) {
          // sd_k(phi_r) at level n is phi_r at level k(n+1)-1.
          const Label mid = nerve_phi(fkr.set.label(n, x), r);
          const auto m = fk.set.find(n, mid);
          REQUIRE(m.has_value());
          const auto via = nerve_epicyclic(y, fk, k, n).phi[static_cast<std::size_t>(*m)];
          CHECK(via == direct.phi[static_cast<std::size_t>(x)]);
        }
      }
    }
}

TEST_CASE("table dumps") {
  const Json j = to_json(cyclic_nerve(cyclic_group_category(2), 2));
  CHECK(j["levels"].size() == 3);
  CHECK(j["levels"][1]["size"] == 4);
  CHECK(j["levels"][0]["t"].dump() == "[0,1]");
}
