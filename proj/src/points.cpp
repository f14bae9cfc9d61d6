#include "pericyclic/points.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "pericyclic/errors.hpp"

namespace peri {

Exponent::Exponent(std::int64_t value) : value_(value) {
  if (value < 0) throw InputError("exponents must be non-negative");
}

Exponent Exponent::infinity() {
  Exponent e;
  e.infinite_ = true;
  return e;
}

std::int64_t Exponent::value() const {
  if (infinite_) throw std::logic_error("infinite exponent has no value");
  return value_;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

std::string to_string(const Exponent& e) { return e.is_infinite() ? "inf" : std::to_string(e.value()); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Supernatural::Supernatural(std::map<std::uint64_t, Exponent> exceptional, bool infinite_default)
    : infinite_default_(infinite_default) {
  const Exponent def = infinite_default ? Exponent::infinity() : Exponent(0);
  for (const auto& [p, e] : exceptional) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    if (e != def) exceptional_.emplace(p, e);
  }
}

Supernatural Supernatural::from_integer(const mpz_class& n) {
  if (n < 1) throw InputError("supernatural numbers start from positive integers");
  std::map<std::uint64_t, Exponent> ex;
  mpz_class rest = n;
  for (std::uint64_t p = 2; mpz_class(p) * p <= rest; ++p) {
    std::int64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    if (e > 0) ex.emplace(p, e);
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) throw InputError("integer has a prime factor beyond 64 bits");
    ex.emplace(rest.get_ui(), 1);
  }
  return Supernatural(std::move(ex), false);
}

Exponent Supernatural::exponent(std::uint64_t p) const {
  auto it = exceptional_.find(p);
  if (it != exceptional_.end()) return it->second;
  return infinite_default_ ? Exponent::infinity() : Exponent(0);
}

namespace {

std::int64_t valuation(mpz_class& n, std::uint64_t p) {
  std::int64_t v = 0;
  while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  return v;
}

std::set<std::uint64_t> primes_of(const Supernatural& s, const Supernatural& t) {
  std::set<std::uint64_t> out;
  for (const auto& [p, e] : s.exceptional()) out.insert(p);
  for (const auto& [p, e] : t.exceptional()) out.insert(p);
  return out;
}

}  // namespace

bool contains(const Supernatural& s, const mpz_class& n) {
  if (n < 1) throw InputError("contains needs a positive integer");
  if (n.fits_ulong_p()) {
    unsigned long rest = n.get_ui();
    for (const auto& [p, e] : s.exceptional()) {
      std::int64_t v = 0;
      while (rest % p == 0) {
        rest /= p;
        ++v;
      }
      if (!e.is_infinite() && v > e.value()) return false;
    }
    return s.infinite_default() || rest == 1;
  }
  mpz_class rest = n;
  for (const auto& [p, e] : s.exceptional()) {
    const std::int64_t v = valuation(rest, p);
    if (!e.is_infinite() && v > e.value()) return false;
  }
  // Remaining primes all carry the default exponent.
  return s.infinite_default() || rest == 1;
}

Supernatural join(const Supernatural& s, const Supernatural& t) {
  std::map<std::uint64_t, Exponent> ex;
  for (std::uint64_t p : primes_of(s, t)) ex.emplace(p, std::max(s.exponent(p), t.exponent(p)));
  return Supernatural(std::move(ex), s.infinite_default() || t.infinite_default());
}

bool flat_check(const std::set<std::uint64_t>& j) {
  if (j.empty()) return false;
  for (std::uint64_t a : j) {
    if (a == 0) return false;
    for (std::uint64_t b = 1; b <= a; ++b)
      if (a % b == 0 && !j.count(b)) return false;
  }
  for (std::uint64_t a : j)
    for (std::uint64_t b : j)
      if (std::none_of(j.begin(), j.end(), [&](std::uint64_t c) { return c % a == 0 && c % b == 0; })) return false;
  return true;
}

bool q_membership(const Supernatural& s, const mpq_class& q) {
  // Reduced denominator without copying q.
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (g == 1) return contains(s, q.get_den());
  return contains(s, mpz_class(q.get_den() / g));
}

bool point_leq(const Supernatural& s, const Supernatural& t) {
  if (s.infinite_default() && !t.infinite_default()) return false;
  for (std::uint64_t p : primes_of(s, t))
    if (s.exponent(p) > t.exponent(p)) return false;
  return true;
}

bool nhat_equivalent(const Supernatural& s, const Supernatural& t) {
  if (s.infinite_default() != t.infinite_default()) return false;
  for (std::uint64_t p : primes_of(s, t))
    if (s.exponent(p).is_infinite() != t.exponent(p).is_infinite()) return false;
  return true;
}

Supernatural rescale(const Supernatural& s, const mpq_class& q) {
  if (q <= 0) throw InputError("rescaling needs a positive rational");
  mpq_class r = q;
  r.canonicalize();
  mpz_class num = r.get_num(), den = r.get_den();
  std::map<std::uint64_t, std::int64_t> shift;  // v_p(q)
  for (auto* part : {&num, &den}) {
    const std::int64_t sign = part == &num ? 1 : -1;
    for (std::uint64_t p = 2; mpz_class(p) * p <= *part; ++p) {
      const std::int64_t v = valuation(*part, p);
      if (v > 0) shift[p] += sign * v;
    }
    if (*part > 1) {
      if (!part->fits_ulong_p()) throw InputError("rational has a prime factor beyond 64 bits");
      shift[part->get_ui()] += sign;
    }
  }
  std::map<std::uint64_t, Exponent> ex = s.exceptional();
  for (const auto& [p, v] : shift) {
    const Exponent e = s.exponent(p);
    if (e.is_infinite()) continue;
    const std::int64_t shifted = e.value() - v;
    if (shifted < 0) throw PreconditionError("q H does not contain Z");
    ex.insert_or_assign(p, Exponent(shifted));
  }
  return Supernatural(std::move(ex), s.infinite_default());
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

mpz_class parse_positive(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("malformed supernatural number: " + whole);
  mpz_class n(s);
  if (n < 1) throw InputError("factors must be positive: " + whole);
  return n;
}

// Multiplies factor exponents into `ex`.
void parse_factors(const std::string& text, const std::string& whole, std::map<std::uint64_t, Exponent>& ex) {
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = text.find('*', pos);
    const std::string factor = trim(text.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
    const std::size_t caret = factor.find('^');
    if (caret == std::string::npos) {
      const Supernatural n = Supernatural::from_integer(parse_positive(factor, whole));
      for (const auto& [p, e] : n.exceptional()) {
        Exponent& slot = ex.try_emplace(p, Exponent(0)).first->second;
        if (!slot.is_infinite()) slot = Exponent(slot.value() + e.value());
      }
    } else {
      const mpz_class p = parse_positive(trim(factor.substr(0, caret)), whole);
      if (!p.fits_ulong_p() || !is_prime(p.get_ui())) throw InputError("p^e needs a prime base: " + whole);
      const std::string e = trim(factor.substr(caret + 1));
      Exponent& slot = ex.try_emplace(p.get_ui(), Exponent(0)).first->second;
      if (e == "inf") {
        slot = Exponent::infinity();
      } else {
        if (e.empty() || !std::all_of(e.begin(), e.end(), [](unsigned char c) { return std::isdigit(c); }))
          throw InputError("malformed exponent: " + whole);
        if (!slot.is_infinite()) slot = Exponent(slot.value() + std::stoll(e));
      }
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
}

}  // namespace

Supernatural parse_supernatural(const std::string& text) {
  const std::string s = trim(text);
  std::map<std::uint64_t, Exponent> ex;
  if (s.rfind("Zhat", 0) == 0) {
    const std::string rest = trim(s.substr(4));
    if (rest.empty()) return Supernatural::zhat();
    if (rest.front() != '(' || rest.back() != ')') throw InputError("malformed supernatural number: " + text);
    parse_factors(rest.substr(1, rest.size() - 2), text, ex);
    return Supernatural(std::move(ex), true);
  }
  parse_factors(s, text, ex);
  return Supernatural(std::move(ex), false);
}

std::string to_string(const Supernatural& s) {
  std::string body;
  for (const auto& [p, e] : s.exceptional()) {
    if (!body.empty()) body += '*';
    body += std::to_string(p);
    if (e.is_infinite() || e.value() != 1) body += "^" + to_string(e);
  }
  if (s.infinite_default()) return body.empty() ? "Zhat" : "Zhat(" + body + ")";
  return body.empty() ? "1" : body;
}

}  // namespace peri
