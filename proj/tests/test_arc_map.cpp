#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "pericyclic/arc_map.hpp"
#include "pericyclic/errors.hpp"
#include "pericyclic/json_io.hpp"

using namespace peri;

namespace {

using V = std::vector<Int>;
using G = GeneratorSpec;

// Brute-force max-adjoint over a generous window, then canonicalized.
V brute_transpose(const ArcMap& f) {
  const Int m = f.dst_period();
  V out;
  for (Int y = 0; y < m; ++y) {
    Int best = -1000;
    for (Int x = -200; x <= 200; ++x)
      if (f(x) <= y) best = x;
    out.push_back(best);
  }
  return ArcMap::normalize(out, m, f.src_period(), 1).values();
}

std::vector<ArcMap> degree_one(Int n, Int m) { return enumerate_hom(n, m, 1); }

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(ArcMap::normalize({3, 4, 5}, 3, 3, 1).values() == V{0, 1, 2});
  CHECK(ArcMap::normalize({-1, 0, 1}, 3, 3, 1).values() == V{2, 3, 4});
  CHECK(ArcMap::normalize({0, 2}, 2, 3, 1).values() == V{0, 2});
  CHECK_THROWS_AS(ArcMap::normalize({2, 1}, 2, 3, 1), PreconditionError);
  CHECK_THROWS_AS(ArcMap::normalize({0, 4}, 2, 3, 1), PreconditionError);
  CHECK_THROWS_AS(ArcMap::normalize({0, 1}, 2, 3, 0), InputError);
}

TEST_CASE("generator examples") {
  CHECK(generator(G::cyclic(3)).values() == V{1, 2, 3});
  const ArcMap face = generator(G::face(2, 1));
  CHECK(face.src_period() == 2);
  CHECK(face.dst_period() == 3);
  CHECK(face.values() == V{0, 2});
  const ArcMap ip = generator(G::id_power(2, 3));
  CHECK(ip.src_period() == 6);
  CHECK(ip.degree() == 3);
  CHECK(ip.values() == V{0, 1, 2, 3, 4, 5});
  CHECK(generator(G::degeneracy(2, 0)).values() == V{0, 0, 1});
  CHECK_THROWS_AS(generator(G::face(2, 3)), InputError);
  CHECK_THROWS_AS(generator(G::degeneracy(2, 2)), InputError);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(identity_arc(3), 7) == 7);
  CHECK(evaluate(generator(G::cyclic(3)), -1) == 0);
  CHECK(evaluate(generator(G::id_power(2, 3)), 6) == 6);
}

TEST_CASE("compose examples") {
  const ArcMap c = generator(G::cyclic(3));
  CHECK(compose(c, compose(c, c)) == identity_arc(3));
  const ArcMap f6 = compose(generator(G::frobenius(2, 2)), generator(G::frobenius(2, 3)));
  CHECK(f6.degree() == 6);
  CHECK(f6.values() == V{0, 6});
  CHECK_THROWS_AS(compose(identity_arc(2), identity_arc(3)), PreconditionError);
  for (const ArcMap& f : enumerate_hom(3, 2, 2)) {
    CHECK(compose(identity_arc(2), f) == f);
    CHECK(compose(f, identity_arc(3)) == f);
  }
}

TEST_CASE("associativity and degree functoriality") {
  for (Int a = 1; a <= 3; ++a)
    for (Int b = 1; b <= 3; ++b)
      for (Int c = 1; c <= 3; ++c)
        for (const ArcMap& f : enumerate_hom(a, b, 2))
          for (const ArcMap& g : enumerate_hom(b, c, 1))
            for (const ArcMap& h : enumerate_hom(c, 2, 1)) {
              REQUIRE(compose(h, compose(g, f)) == compose(compose(h, g), f));
              REQUIRE(compose(g, f).degree() == g.degree() * f.degree());
              // Equal up to a constant multiple of the target period.
              const Int shift = compose(g, f)(0) - g(f(0));
              REQUIRE(shift % c == 0);
              for (Int x = -5; x <= 5; ++x) REQUIRE(compose(g, f)(x) - g(f(x)) == shift);
            }
}

TEST_CASE("transpose examples and properties") {
  CHECK(transpose(identity_arc(4)) == identity_arc(4));
  CHECK(transpose(generator(G::cyclic(3))).values() == V{2, 3, 4});
  const ArcMap t = transpose(generator(G::face(2, 1)));
  CHECK(t.src_period() == 3);
  CHECK(t.dst_period() == 2);
  CHECK(t.values() == V{0, 0, 1});
  CHECK_THROWS_AS(transpose(generator(G::frobenius(2, 2))), PreconditionError);
  for (Int n = 1; n <= 3; ++n)
    for (Int m = 1; m <= 3; ++m) {
      std::set<ArcMap> images;
      for (const ArcMap& f : degree_one(n, m)) {
        REQUIRE(transpose(f).values() == brute_transpose(f));
        images.insert(transpose(f));
      }
      CHECK(images.size() == degree_one(m, n).size());
    }
}

TEST_CASE("enumeration examples and counts") {
  CHECK(enumerate_hom(1, 4, 1).size() == 4);
  CHECK(enumerate_hom(2, 2, 1).size() == 6);
  CHECK(enumerate_hom(2, 2, 2).size() == 16);
  CHECK(hom_count(2, 2, 2) == 10);
  for (Int n = 1; n <= 3; ++n)
    for (Int m = 1; m <= 3; ++m) {
      const auto all = enumerate_hom(n, m, 2);
      CHECK(std::set<ArcMap>(all.begin(), all.end()).size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end(), [](const ArcMap& a, const ArcMap& b) {
        return std::pair(a.degree(), a.values()) < std::pair(b.degree(), b.values());
      }));
      // Brute-force count: all non-decreasing value lists within the window.
      std::uint64_t brute = 0;
      for (Int a = 1; a <= 2; ++a) {
        V v(static_cast<std::size_t>(n));
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
          if (pos == v.size()) {
            if (v.back() - v.front() <= m * a) ++brute;
            return;
          }
          const Int lo = pos == 0 ? 0 : v[pos - 1];
          const Int hi = pos == 0 ? m - 1 : v[0] + m * a;
          for (Int x = lo; x <= hi; ++x) {
            v[pos] = x;
            rec(pos + 1);
          }
        };
        rec(0);
      }
      CHECK(all.size() == brute);
    }
  CHECK_THROWS_AS(enumerate_hom(4, 4, 3, 100), ResourceError);
}

TEST_CASE("decompose_cyclic examples and round trip") {
  auto d = decompose_cyclic(identity_arc(3));
  CHECK(d.rotation == 0);
  CHECK(d.simplicial_word.empty());
  d = decompose_cyclic(generator(G::cyclic(3)));
  CHECK(d.rotation == 1);
  CHECK(d.simplicial_word.empty());
  d = decompose_cyclic(generator(G::face(2, 1)));
  CHECK(d.rotation == 0);
  CHECK(d.simplicial_word == std::vector<GeneratorSpec>{G::face(2, 1)});
  for (Int n = 1; n <= 4; ++n)
    for (Int m = 1; m <= 4; ++m)
      for (const ArcMap& f : degree_one(n, m)) {
        const auto dec = decompose_cyclic(f);
        CHECK(dec.rotation >= 0);
        CHECK(dec.rotation < n);
        REQUIRE(recompose(dec, n, m) == f);
      }
}

TEST_CASE("cyclic relations in the model") {
  for (Int n = 1; n <= 5; ++n)
    CHECK(power(generator(G::cyclic(n)), static_cast<unsigned>(n)) == identity_arc(n));
}

TEST_CASE("edgewise subdivision of maps") {
  const ArcMap f = subdivide_arc(generator(G::face(2, 1)), 2);
  CHECK(f.src_period() == 4);
  CHECK(f.dst_period() == 6);
  CHECK(f.values() == V{0, 2, 3, 5});
  CHECK(subdivide_arc(identity_arc(3), 3) == identity_arc(9));
  CHECK_THROWS_AS(subdivide_arc(generator(G::cyclic(2)), 2), PreconditionError);
}

TEST_CASE("arc maps serialize") {
  const ArcMap f = generator(G::face(2, 1));
  const Json j = to_json(f);
  CHECK(j.dump() == R"({"src_period":2,"dst_period":3,"degree":1,"values":[0,2]})");
  CHECK(arc_from_json(j) == f);
  CHECK(to_string(f) == "{src_period:2, dst_period:3, degree:1, values:[0,2]}");
}
