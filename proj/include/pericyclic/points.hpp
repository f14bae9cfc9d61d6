#pragma once

// Points of the presheaf topos on RF, encoded as supernatural numbers
// prod p^{e_p} with finitely many exponents differing from a default of 0 or
// infinity.  A supernatural number S stands for the divisor-closed set
// J = {n : v_p(n) <= e_p for all p} and for the group H = union of (1/n)Z, n in J.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace peri {

class Exponent {
public:
  Exponent(std::int64_t value = 0);
  static Exponent infinity();

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  std::int64_t value() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

std::string to_string(const Exponent& e);

class Supernatural {
public:
  /// The trivial point 1.
  Supernatural() = default;
  /// Throws InputError on a non-prime key or a negative exponent.  Entries
  /// equal to the default are dropped.
  Supernatural(std::map<std::uint64_t, Exponent> exceptional, bool infinite_default);

  static Supernatural zhat() { return Supernatural({}, true); }
  static Supernatural from_integer(const mpz_class& n);

  bool infinite_default() const { return infinite_default_; }
  const std::map<std::uint64_t, Exponent>& exceptional() const { return exceptional_; }
  Exponent exponent(std::uint64_t p) const;

  friend bool operator==(const Supernatural&, const Supernatural&) = default;

private:
  std::map<std::uint64_t, Exponent> exceptional_;
  bool infinite_default_ = false;
};

bool is_prime(std::uint64_t n);

bool contains(const Supernatural& s, const mpz_class& n);
Supernatural join(const Supernatural& s, const Supernatural& t);
/// Divisor-closed and directed within itself.
bool flat_check(const std::set<std::uint64_t>& j);
/// q in H^J, decided on the reduced denominator.
bool q_membership(const Supernatural& s, const mpq_class& q);
bool point_leq(const Supernatural& s, const Supernatural& t);
bool nhat_equivalent(const Supernatural& s, const Supernatural& t);

/// The point whose group is q H for q > 0: exponents shift by -v_p(q).
/// Throws PreconditionError if q H does not contain Z.
Supernatural rescale(const Supernatural& s, const mpq_class& q);

/// Grammar: factors joined by '*', each an integer, `p^e` or `p^inf`; or
/// `Zhat` optionally followed by `(factors)` fixing finite exponents.
Supernatural parse_supernatural(const std::string& text);
std::string to_string(const Supernatural& s);

}  // namespace peri
