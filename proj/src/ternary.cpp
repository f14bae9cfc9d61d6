#include "pericyclic/ternary.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "pericyclic/errors.hpp"

namespace peri {

Trit::Trit(int v) {
  if (v < -1 || v > 1) throw InputError("trit out of range: " + std::to_string(v));
  value_ = static_cast<std::int8_t>(v);
}

int balanced_mod3(long long m) {
  int r = static_cast<int>(((m % 3) + 3) % 3);
  return r == 2 ? -1 : r;
}

Trit sigma(Trit a, Trit b, Trit c) {
  const long long x = a.value(), y = b.value(), z = c.value();
  const long long s = x * y * z - x * x * y - x * x * z - x * y * y - x * z * z - y * y * z - y * z * z;
  return Trit(balanced_mod3(s));
}

TripleSum triple_sum(Trit a, Trit b, Trit c) {
  static const auto table = [] {
    std::array<TripleSum, 27> t{};
    for (int x = -1; x <= 1; ++x)
      for (int y = -1; y <= 1; ++y)
        for (int z = -1; z <= 1; ++z)
          t[static_cast<std::size_t>(9 * (x + 1) + 3 * (y + 1) + z + 1)] = {Trit(balanced_mod3(x + y + z)),
                                                                           sigma(Trit(x), Trit(y), Trit(z))};
    return t;
  }();
  return table[static_cast<std::size_t>(9 * (a.value() + 1) + 3 * (b.value() + 1) + c.value() + 1)];
}

TritVector TritVector::from_digits(std::span<const int> digits) {
  TritVector v;
  v.digits_.reserve(digits.size());
  for (int d : digits) v.digits_.emplace_back(d);
  if (!v.digits_.empty() && v.digits_.back().is_zero())
    throw PreconditionError("digit vector has a trailing zero");
  return v;
}

TritVector TritVector::trimmed(std::vector<Trit> digits) {
  while (!digits.empty() && digits.back().is_zero()) digits.pop_back();
  TritVector v;
  v.digits_ = std::move(digits);
  return v;
}

std::vector<int> TritVector::to_ints() const {
  std::vector<int> out;
  out.reserve(digits_.size());
  for (Trit t : digits_) out.push_back(t.value());
  return out;
}

TritVector encode(const mpz_class& m) {
  std::vector<Trit> digits;
  mpz_class rest = m;
  while (rest != 0) {
    int r = static_cast<int>(mpz_fdiv_ui(rest.get_mpz_t(), 3));
    if (r == 2) r = -1;
    digits.emplace_back(r);
    rest -= r;
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
  }
  return TritVector::trimmed(std::move(digits));
}

mpz_class decode(const TritVector& v) {
  mpz_class acc = 0;
  // Horner from the top digit, 39 digits at a time in machine words.
  const auto& d = v.digits();
  std::size_t top = d.size();
  while (top > 0) {
    const std::size_t len = std::min<std::size_t>(top, 39);
    long long chunk = 0, scale = 1;
    for (std::size_t j = top; j > top - len; --j) {
      chunk = chunk * 3 + d[j - 1].value();
      scale *= 3;
    }
    if (acc != 0) {
      acc *= static_cast<unsigned long>(scale);
    }
    acc += static_cast<long>(chunk);
    top -= len;
  }
  return acc;
}

AddTrace add_digits(std::span<const Trit> alpha, std::span<const Trit> beta) {
  const std::size_t len = std::max(alpha.size(), beta.size());
  AddTrace trace;
  trace.gamma.reserve(len + 1);
  trace.carries.reserve(len + 1);
  Trit carry;
  trace.carries.push_back(carry);
  for (std::size_t n = 0; n < len; ++n) {
    const Trit a = n < alpha.size() ? alpha[n] : Trit{};
    const Trit b = n < beta.size() ? beta[n] : Trit{};
    const TripleSum ts = triple_sum(a, b, carry);
    trace.gamma.push_back(ts.residue);
    carry = ts.carry;
    trace.carries.push_back(carry);
  }
  // The last carry is the coefficient of X^len.
  trace.gamma.push_back(carry);
  return trace;
}

namespace {

const Trit kNegated[3] = {Trit(1), Trit(0), Trit(-1)};

// acc += sign * X^shift * q, digit by digit with the carry rule.
void add_shifted(std::vector<Trit>& acc, std::size_t shift, const std::vector<Trit>& q, int sign) {
  Trit carry;
  std::size_t n = shift;
  for (; n < shift + q.size() || !carry.is_zero(); ++n) {
    if (n >= acc.size()) acc.resize(n + 1);
    Trit b;
    if (n < shift + q.size()) b = sign > 0 ? q[n - shift] : kNegated[q[n - shift].value() + 1];
    const TripleSum ts = triple_sum(acc[n], b, carry);
    acc[n] = ts.residue;
    carry = ts.carry;
  }
}

}  // namespace

TritVector add(const TritVector& p, const TritVector& q) {
  std::vector<Trit> acc(p.digits());
  add_shifted(acc, 0, q.digits(), 1);
  return TritVector::trimmed(std::move(acc));
}

TritVector negate(const TritVector& p) {
  std::vector<Trit> digits;
  digits.reserve(p.size());
  for (Trit t : p.digits()) digits.emplace_back(-t.value());
  return TritVector::trimmed(std::move(digits));
}

TritVector mul(const TritVector& p, const TritVector& q) {
  std::vector<Trit> acc;
  acc.reserve(p.size() + q.size() + 1);
  // Each digit a of p contributes a X^n q, with a acting as a sign.
  for (std::size_t n = 0; n < p.size(); ++n)
    if (!p[n].is_zero()) add_shifted(acc, n, q.digits(), p[n].value());
  return TritVector::trimmed(std::move(acc));
}

// ---------------------------------------------------------------------------
// CarryPolynomial

namespace {

std::uint8_t reduce_exponent(unsigned e) {
  if (e == 0) return 0;
  return (e % 2 == 1) ? 1 : 2;
}

}  // namespace

void CarryPolynomial::add_term(const Exponents& e, int c) {
  c = balanced_mod3(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = balanced_mod3(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

CarryPolynomial CarryPolynomial::constant(std::size_t num_digits, int c) {
  CarryPolynomial p(num_digits);
  p.add_term(Exponents(2 * num_digits, 0), c);
  return p;
}

CarryPolynomial CarryPolynomial::alpha(std::size_t num_digits, std::size_t j) {
  if (j >= num_digits) throw InputError("alpha index out of range");
  Exponents e(2 * num_digits, 0);
  e[j] = 1;
  CarryPolynomial p(num_digits);
  p.add_term(e, 1);
  return p;
}

CarryPolynomial CarryPolynomial::beta(std::size_t num_digits, std::size_t j) {
  if (j >= num_digits) throw InputError("beta index out of range");
  Exponents e(2 * num_digits, 0);
  e[num_digits + j] = 1;
  CarryPolynomial p(num_digits);
  p.add_term(e, 1);
  return p;
}

CarryPolynomial CarryPolynomial::from_terms(std::size_t num_digits,
                                            const std::vector<std::pair<Exponents, int>>& terms) {
  CarryPolynomial p(num_digits);
  for (const auto& [e, c] : terms) {
    if (e.size() != 2 * num_digits) throw InputError("exponent vector has wrong length");
    Exponents r(e.size());
    std::transform(e.begin(), e.end(), r.begin(), [](std::uint8_t x) { return reduce_exponent(x); });
    p.add_term(r, c);
  }
  return p;
}

CarryPolynomial CarryPolynomial::operator+(const CarryPolynomial& rhs) const {
  if (rhs.num_digits_ != num_digits_) throw InputError("variable count mismatch");
  CarryPolynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

CarryPolynomial CarryPolynomial::operator-(const CarryPolynomial& rhs) const {
  if (rhs.num_digits_ != num_digits_) throw InputError("variable count mismatch");
  CarryPolynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

CarryPolynomial CarryPolynomial::operator*(const CarryPolynomial& rhs) const {
  if (rhs.num_digits_ != num_digits_) throw InputError("variable count mismatch");
  CarryPolynomial out(num_digits_);
  Exponents e(num_variables());
  for (const auto& [el, cl] : terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v)
        e[v] = reduce_exponent(static_cast<unsigned>(el[v]) + er[v]);
      out.add_term(e, cl * cr);
    }
  }
  return out;
}

Trit CarryPolynomial::evaluate(std::span<const Trit> alpha, std::span<const Trit> beta) const {
  if (alpha.size() != num_digits_ || beta.size() != num_digits_)
    throw InputError("evaluation point has wrong length");
  long long acc = 0;
  for (const auto& [e, c] : terms_) {
    long long term = c;
    for (std::size_t v = 0; v < e.size() && term != 0; ++v) {
      const int x = v < num_digits_ ? alpha[v].value() : beta[v - num_digits_].value();
      for (std::uint8_t k = 0; k < e[v]; ++k) term *= x;
    }
    acc += term;
  }
  return Trit(balanced_mod3(acc));
}

std::string CarryPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::ostringstream mono;
    bool any = false;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (any) mono << '*';
      mono << (v < num_digits_ ? 'a' : 'b') << (v < num_digits_ ? v : v - num_digits_);
      if (e[v] == 2) mono << "^2";
      any = true;
    }
    const std::string body = any ? mono.str() : "1";
    if (first)
      os << (c < 0 ? "-" : "") << body;
    else
      os << (c < 0 ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

CarryPolynomial carry_polynomial(std::size_t n, std::size_t max_n) {
  if (n == 0) throw PreconditionError("carry_polynomial needs n >= 1");
  if (n > max_n)
    throw ResourceError("carry_polynomial(" + std::to_string(n) + ") exceeds the symbolic bound " +
                        std::to_string(max_n));
  CarryPolynomial s(n);  // s_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    const CarryPolynomial a = CarryPolynomial::alpha(n, k - 1);
    const CarryPolynomial b = CarryPolynomial::beta(n, k - 1);
    const CarryPolynomial& c = s;
    const CarryPolynomial aa = a * a, bb = b * b, cc = c * c;
    s = a * b * c - aa * b - aa * c - a * bb - a * cc - bb * c - b * cc;
  }
  return s;
}

}  // namespace peri
