#pragma once

// Balanced-ternary integers as polynomials in X = 3 with coefficients in the
// multiplicative monoid {-1, 0, 1}, added with the digit-level carry rule
// 1 + 1 = X - 1.  Digit vectors double as finitely supported Witt vectors over
// F_3 (balanced representatives are their own Teichmuller lifts).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace peri {

class Trit {
public:
  constexpr Trit() = default;
  /// Throws InputError unless v is -1, 0 or 1.
  explicit Trit(int v);

  constexpr int value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(Trit, Trit) = default;
  friend constexpr auto operator<=>(Trit, Trit) = default;

private:
  std::int8_t value_ = 0;
};

/// Balanced representative of m modulo 3.
int balanced_mod3(long long m);

/// sigma(a,b,c) = abc - a^2 b - a^2 c - a b^2 - a c^2 - b^2 c - b c^2 over F_3.
Trit sigma(Trit a, Trit b, Trit c);

struct TripleSum {
  Trit residue;
  Trit carry;
};

/// a + b + c = residue + carry * X, with the carry computed by sigma.
TripleSum triple_sum(Trit a, Trit b, Trit c);

/// Little-endian digit vector; digit j is the coefficient of 3^j.  Always
/// canonical (no trailing zero digits, zero is the empty vector).
class TritVector {
public:
  TritVector() = default;

  /// Throws InputError on digits outside {-1,0,1} and PreconditionError on a
  /// trailing zero.
  static TritVector from_digits(std::span<const int> digits);
  /// Trims trailing zeros instead of rejecting them.
  static TritVector trimmed(std::vector<Trit> digits);

  const std::vector<Trit>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool is_zero() const { return digits_.empty(); }
  /// Digit j, or zero past the end.
  Trit operator[](std::size_t j) const { return j < digits_.size() ? digits_[j] : Trit{}; }
  std::vector<int> to_ints() const;

  friend bool operator==(const TritVector&, const TritVector&) = default;

private:
  std::vector<Trit> digits_;
};

TritVector encode(const mpz_class& m);
mpz_class decode(const TritVector& v);

/// Full trace of the carry recursion s_0 = 0, s_{n+1} = sigma(a_n, b_n, s_n),
/// gamma_n = a_n + b_n + s_n (mod 3).  Inputs need not be canonical; the
/// output has max(|alpha|, |beta|) + 1 digits and is not trimmed.
struct AddTrace {
  std::vector<Trit> gamma;
  std::vector<Trit> carries;  // s_0 .. s_{len}
};
AddTrace add_digits(std::span<const Trit> alpha, std::span<const Trit> beta);

TritVector add(const TritVector& p, const TritVector& q);
TritVector negate(const TritVector& p);
TritVector mul(const TritVector& p, const TritVector& q);

/// Polynomial over F_3 in the 2n variables a_0..a_{n-1}, b_0..b_{n-1}, kept in
/// reduced form (every exponent at most 2, coefficients in {-1, 1}).
class CarryPolynomial {
public:
  using Exponents = std::vector<std::uint8_t>;

  explicit CarryPolynomial(std::size_t num_digits = 0) : num_digits_(num_digits) {}

  static CarryPolynomial constant(std::size_t num_digits, int c);
  static CarryPolynomial alpha(std::size_t num_digits, std::size_t j);
  static CarryPolynomial beta(std::size_t num_digits, std::size_t j);
  /// Builds from explicit terms; reduces exponents and coefficients.
  static CarryPolynomial from_terms(std::size_t num_digits,
                                    const std::vector<std::pair<Exponents, int>>& terms);

  std::size_t num_digits() const { return num_digits_; }
  std::size_t num_variables() const { return 2 * num_digits_; }
  const std::map<Exponents, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CarryPolynomial operator+(const CarryPolynomial& rhs) const;
  CarryPolynomial operator-(const CarryPolynomial& rhs) const;
  CarryPolynomial operator*(const CarryPolynomial& rhs) const;

  /// Evaluates at concrete digits; alpha and beta must have num_digits() entries.
  Trit evaluate(std::span<const Trit> alpha, std::span<const Trit> beta) const;

  /// Terms in ascending lexicographic order of exponent vectors, variables
  /// written a0..a{n-1}, b0..b{n-1}, e.g. "-a0*b0^2 - a0^2*b0".
  std::string to_string() const;

  friend bool operator==(const CarryPolynomial&, const CarryPolynomial&) = default;

private:
  void add_term(const Exponents& e, int c);

  std::size_t num_digits_;
  std::map<Exponents, int> terms_;
};

inline constexpr std::size_t kDefaultCarryBound = 5;

/// Symbolic s_n.  Throws PreconditionError for n == 0 and ResourceError when
/// n exceeds max_n.
CarryPolynomial carry_polynomial(std::size_t n, std::size_t max_n = kDefaultCarryBound);

}  // namespace peri
