#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pericyclic/errors.hpp"
#include "pericyclic/json_io.hpp"
#include "pericyclic/points.hpp"

using namespace peri;

namespace {

Supernatural sn(const std::string& s) { return parse_supernatural(s); }

// Small sample of representable points over {2, 3, 5}.
std::vector<Supernatural> sample() {
  std::vector<Supernatural> out;
  const std::vector<Exponent> choices{0, 1, 2, Exponent::infinity()};
  for (bool def : {false, true})
    for (const auto& a : choices)
      for (const auto& b : choices)
        for (const auto& c : {Exponent(0), Exponent::infinity()})
          out.emplace_back(std::map<std::uint64_t, Exponent>{{2, a}, {3, b}, {5, c}}, def);
  return out;
}

mpq_class q(long n, long d) {
  mpq_class out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace

TEST_CASE("exponents order with infinity on top") {
  CHECK(Exponent(3) < Exponent::infinity());
  CHECK(Exponent(2) < Exponent(3));
  CHECK_THROWS_AS(Exponent(-1), InputError);
}

TEST_CASE("minimal representation") {
  const Supernatural s({{2, Exponent(0)}, {3, Exponent(2)}}, false);
  CHECK(s.exceptional().size() == 1);
  CHECK(s == sn("9"));
  CHECK(Supernatural({{2, Exponent::infinity()}}, true) == Supernatural::zhat());
  CHECK_THROWS_AS(Supernatural({{4, Exponent(1)}}, false), InputError);
}

TEST_CASE("parsing and printing") {
  CHECK(to_string(sn("3*2^inf")) == "2^inf*3");
  CHECK(to_string(sn("45")) == "3^2*5");
  CHECK(to_string(sn("1")) == "1");
  CHECK(to_string(sn("Zhat")) == "Zhat");
  CHECK(to_string(sn("Zhat(5^2)")) == "Zhat(5^2)");
  CHECK(sn("2*2") == sn("4"));
  CHECK(sn("2^inf*2") == sn("2^inf"));
  for (const auto& s : sample()) CHECK(sn(to_string(s)) == s);
  for (const char* bad : {"", "x", "4^2", "2^", "2^-1", "0", "Zhat(", "2**3"})
    CHECK_THROWS_AS(sn(bad), InputError);
}

TEST_CASE("contains examples") {
  for (const auto& s : sample()) CHECK(contains(s, 1));
  CHECK(contains(sn("2^inf"), 8));
  CHECK_FALSE(contains(sn("2^inf"), 6));
  for (int n = 1; n <= 200; ++n) CHECK(contains(Supernatural::zhat(), n));
  CHECK_FALSE(contains(sn("Zhat(5^2)"), 125));
  CHECK(contains(sn("Zhat(5^2)"), 25 * 7 * 11));
}

TEST_CASE("join examples") {
  const Supernatural s = sn("2^inf*3");
  CHECK(join(s, s) == s);
  CHECK(join(sn("2^inf"), sn("45")) == sn("2^inf*3^2*5"));
  for (const auto& a : sample())
    for (const auto& b : sample())
      for (int n : {1, 2, 12, 45, 90, 250, 360, 1125})
        CHECK(contains(join(a, b), n) == [&] {
          int m = n;
          for (std::uint64_t p : {2u, 3u, 5u}) {
            std::int64_t v = 0;
            while (m % static_cast<int>(p) == 0) {
              m /= static_cast<int>(p);
              ++v;
            }
            if (Exponent(v) > std::max(a.exponent(p), b.exponent(p))) return false;
          }
          return true;
        }());
}

TEST_CASE("flat_check examples") {
  CHECK(flat_check({1, 2, 4}));
  CHECK_FALSE(flat_check({2, 4}));
  CHECK_FALSE(flat_check({1, 2, 3}));
  CHECK(flat_check({1, 2, 3, 6}));
  CHECK_FALSE(flat_check({}));
}

TEST_CASE("contains cuts out flat sets") {
  for (const auto& s : sample()) {
    std::set<std::uint64_t> j;
    for (std::uint64_t n = 1; n <= 360; ++n)
      if (360 % n == 0 && contains(s, n)) j.insert(n);
    CHECK(flat_check(j));
  }
}

TEST_CASE("q_membership examples and the round trip") {
  CHECK(q_membership(sn("1"), 7));
  CHECK(q_membership(sn("2^inf"), q(3, 8)));
  CHECK_FALSE(q_membership(sn("1"), q(1, 2)));
  for (const auto& s : sample())
    for (int n = 1; n <= 400; ++n) REQUIRE(contains(s, n) == q_membership(s, q(1, n)));
}

TEST_CASE("point_leq") {
  const auto all = sample();
  for (const auto& s : all) CHECK(point_leq(sn("1"), s));
  CHECK(point_leq(sn("2^inf"), sn("2^inf*3^inf")));
  CHECK_FALSE(point_leq(sn("2^inf"), sn("3^inf")));
  for (const auto& a : all)
    for (const auto& b : all) {
      if (point_leq(a, b) && point_leq(b, a)) CHECK(a == b);
      for (int n : {2, 4, 6, 9, 25, 72})
        if (point_leq(a, b) && contains(a, n)) CHECK(contains(b, n));
    }
}

TEST_CASE("nhat equivalence") {
  CHECK(nhat_equivalent(sn("2^inf"), sn("3*2^inf")));
  CHECK_FALSE(nhat_equivalent(sn("2^inf"), sn("3^inf")));
  const auto all = sample();
  for (const auto& a : all) {
    CHECK(nhat_equivalent(a, a));
    for (const auto& b : all) {
      CHECK(nhat_equivalent(a, b) == nhat_equivalent(b, a));
      if (point_leq(a, b) && point_leq(b, a)) CHECK(nhat_equivalent(a, b));
    }
  }
}

TEST_CASE("rescaling matches the group oracle") {
  CHECK(rescale(sn("2^inf"), q(1, 3)) == sn("3*2^inf"));
  CHECK(rescale(sn("12"), 4) == sn("3"));
  CHECK_THROWS_AS(rescale(sn("1"), 2), PreconditionError);
  CHECK_THROWS_AS(rescale(sn("1"), 0), InputError);
  for (const auto& s : sample())
    for (const mpq_class& r : {q(1, 2), q(1, 6), q(2, 1), q(5, 3), q(4, 9)}) {
      Supernatural t;
      try {
        t = rescale(s, r);
      } catch (const PreconditionError&) {
        // Z is not inside r H: some integer leaves r H.
        bool escaped = false;
        for (int m = 1; m <= 30 && !escaped; ++m) escaped = !q_membership(s, mpq_class(m) / r);
        CHECK(escaped);
        continue;
      }
      CHECK(nhat_equivalent(s, t));
      for (int n = 1; n <= 60; ++n)
        for (int c : {1, 5, 7}) {
          const mpq_class x = q(c, n);
          CHECK(q_membership(t, x) == q_membership(s, x / r));
        }
    }
}

TEST_CASE("supernatural numbers serialize") {
  const Supernatural s = sn("Zhat(5^2)");
  const Json j = to_json(s);
  CHECK(j["default"] == "inf");
  CHECK(j["exceptional"][0]["exponent"] == "2");
  CHECK(supernatural_from_json(j) == s);
  CHECK(supernatural_from_json(to_json(sn("2^inf*3")))== sn("2^inf*3"));
}
