#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pericyclic/errors.hpp"
#include "pericyclic/json_io.hpp"
#include "pericyclic/ternary.hpp"

using namespace peri;

namespace {

TritVector tv(std::vector<int> d) { return TritVector::from_digits(d); }

// Plain integer evaluation of a+b+c, independent of sigma.
int carry_of(int a, int b, int c) {
  const int sum = a + b + c;
  const int r = ((sum % 3) + 4) % 3 - 1;
  return (sum - r) / 3;
}

// Carry s_n of the schoolbook balanced addition of two n-digit prefixes.
int numeric_carry(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s = carry_of(a[j], b[j], s);
  return s;
}

mpz_class random_bits(std::mt19937_64& rng, int bits) {
  mpz_class out = 0;
  for (int i = 0; i < bits; i += 64) {
    out <<= 64;
    out += mpz_class(std::to_string(rng()));
  }
  return (rng() & 1) ? mpz_class(-out) : out;
}

}  // namespace

TEST_CASE("trits reject values outside {-1,0,1}") {
  CHECK_THROWS_AS(Trit(2), InputError);
  CHECK_THROWS_AS(Trit(-2), InputError);
  CHECK(Trit(-1).value() == -1);
}

TEST_CASE("encode and decode examples") {
  CHECK(encode(0).to_ints().empty());
  CHECK(encode(2).to_ints() == std::vector<int>{-1, 1});
  CHECK(encode(5).to_ints() == std::vector<int>{-1, -1, 1});
  CHECK(decode(TritVector{}) == 0);
  CHECK(decode(tv({-1, 1})) == 2);
  CHECK(decode(tv({1, 0, -1, 1})) == 19);
  CHECK_THROWS_AS(tv({1, 0}), PreconditionError);
  CHECK_THROWS_AS(tv({1, 2}), InputError);
}

TEST_CASE("encode/decode round trip") {
  for (int m = -500; m <= 500; ++m) {
    const TritVector v = encode(m);
    CHECK(decode(v) == m);
    if (!v.is_zero()) CHECK(!v.digits().back().is_zero());
  }
}

TEST_CASE("triple_sum examples and the carry identity") {
  auto ts = [](int a, int b, int c) {
    auto r = triple_sum(Trit(a), Trit(b), Trit(c));
    return std::pair{r.residue.value(), r.carry.value()};
  };
  CHECK(ts(1, 1, 0) == std::pair{-1, 1});
  CHECK(ts(1, -1, 0) == std::pair{0, 0});
  CHECK(ts(1, 1, 1) == std::pair{0, 1});
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        auto [r, s] = ts(a, b, c);
        CHECK(r + 3 * s == a + b + c);
        CHECK(s == carry_of(a, b, c));
      }
}

TEST_CASE("add and mul examples") {
  CHECK(add(tv({1}), tv({1})) == tv({-1, 1}));
  CHECK(add(tv({1, 0, -1, 1}), TritVector{}) == tv({1, 0, -1, 1}));
  CHECK(mul(tv({1, -1, 1}), TritVector{}).is_zero());
  CHECK(mul(tv({-1, 1}), tv({1, 1})) == tv({-1, 0, 1}));
}

TEST_CASE("ring isomorphism on a small box and on random bignums") {
  for (int a = -60; a <= 60; ++a)
    for (int b = -60; b <= 60; ++b) {
      const TritVector p = encode(a), q = encode(b);
      const TritVector s = add(p, q);
      REQUIRE(decode(s) == a + b);
      REQUIRE(decode(mul(p, q)) == a * b);
      CHECK(s.size() <= std::max(p.size(), q.size()) + 1);
    }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const mpz_class a = random_bits(rng, 256), b = random_bits(rng, 256);
    CHECK(add(encode(a), encode(b)) == encode(a + b));
    CHECK(mul(encode(a), encode(b)) == encode(a * b));
  }
  CHECK(negate(encode(17)) == encode(-17));
}

TEST_CASE("carry locality") {
  std::vector<Trit> a(4), b(4);
  for (int code = 0; code < 6561; ++code) {
    int c = code;
    for (int j = 0; j < 4; ++j) {
      a[static_cast<std::size_t>(j)] = Trit(c % 3 - 1);
      c /= 3;
      b[static_cast<std::size_t>(j)] = Trit(c % 3 - 1);
      c /= 3;
    }
    const AddTrace tr = add_digits(a, b);
    for (std::size_t n = 1; n < 4; ++n)
      if (a[n].is_zero() && a[n - 1].is_zero() && b[n].is_zero() && b[n - 1].is_zero())
        CHECK(tr.gamma[n].is_zero());
  }
}

TEST_CASE("carry polynomials s_1 and s_2 as displayed") {
  CHECK(carry_polynomial(1).to_string() == "-a0*b0^2 - a0^2*b0");
  // Variables ordered a0, a1, b0, b1.
  const CarryPolynomial s2 = CarryPolynomial::from_terms(
      2, {{{2, 1, 2, 0}, 1}, {{2, 0, 1, 2}, 1}, {{2, 2, 1, 0}, 1}, {{2, 0, 2, 1}, 1},
          {{2, 1, 1, 1}, -1}, {{1, 2, 2, 0}, 1}, {{1, 0, 2, 2}, 1}, {{1, 1, 1, 0}, 1},
          {{1, 1, 2, 1}, -1}, {{1, 0, 1, 1}, 1}, {{0, 1, 0, 2}, -1}, {{0, 2, 0, 1}, -1}});
  CHECK(s2.terms().size() == 12);
  CHECK(carry_polynomial(2) == s2);
}

TEST_CASE("carry polynomials agree with the numeric recursion") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const CarryPolynomial p = carry_polynomial(n);
    for (const auto& [e, c] : p.terms())
      for (auto x : e) CHECK(x <= 2);
    const std::size_t total = static_cast<std::size_t>(std::pow(3, 2 * n));
    std::vector<int> ai(n), bi(n);
    std::vector<Trit> a(n), b(n);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t j = 0; j < n; ++j) {
        ai[j] = static_cast<int>(c % 3) - 1;
        c /= 3;
        bi[j] = static_cast<int>(c % 3) - 1;
        c /= 3;
        a[j] = Trit(ai[j]);
        b[j] = Trit(bi[j]);
      }
      REQUIRE(p.evaluate(a, b).value() == numeric_carry(ai, bi));
    }
  }
}

TEST_CASE("carry polynomial bounds") {
  CHECK_THROWS_AS(carry_polynomial(0), PreconditionError);
  CHECK_THROWS_AS(carry_polynomial(6), ResourceError);
  CHECK_NOTHROW(carry_polynomial(4));
}

TEST_CASE("digit vectors and polynomials serialize") {
  CHECK(to_json(encode(2)).dump() == "[-1,1]");
  CHECK(to_json(carry_polynomial(1)).dump() ==
        R"([{"exponents":[1,2],"coeff":-1},{"exponents":[2,1],"coeff":-1}])");
}
