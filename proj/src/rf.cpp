#include "pericyclic/rf.hpp"

#include <numeric>
#include <sstream>

#include "pericyclic/errors.hpp"

namespace peri {

RFMor rf_mor(Int src, Int dst, Int r, Int s) {
  if (src < 1 || dst < 1 || r < 1 || s < 1) throw InputError("RF entries must be positive");
  if (src != r * dst * s)
    throw InputError("f_{" + std::to_string(r) + "," + std::to_string(s) + "} is not a morphism " +
                     std::to_string(src) + " -> " + std::to_string(dst));
  return {src, dst, r, s};
}

RFMor rf_compose(const RFMor& g, const RFMor& f) {
  if (f.dst != g.src) throw PreconditionError("RF morphisms are not composable");
  return {f.src, g.dst, g.r * f.r, g.s * f.s};
}

std::vector<RFMor> rf_hom_enum(Int a, Int b) {
  if (a < 1 || b < 1) throw InputError("RF objects must be positive");
  std::vector<RFMor> out;
  if (a % b != 0) return out;
  const Int q = a / b;
  for (Int r = 1; r <= q; ++r)
    if (q % r == 0) out.push_back({a, b, r, q / r});
  return out;
}

RationalAngle::RationalAngle(Int num, Int den) {
  if (den <= 0) throw InputError("angle denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

RationalAngle from_wide(__int128 num, __int128 den) {
  num %= den;
  if (num < 0) num += den;
  __int128 a = num, b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  num /= a;
  den /= a;
  if (den > INT64_MAX) throw ResourceError("angle denominator overflows 64 bits");
  return RationalAngle(static_cast<Int>(num), static_cast<Int>(den));
}

}  // namespace

RationalAngle RationalAngle::operator+(const RationalAngle& rhs) const {
  const __int128 num = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
  return from_wide(num, static_cast<__int128>(den_) * rhs.den_);
}

RationalAngle RationalAngle::scaled(Int k) const {
  return from_wide(static_cast<__int128>(num_) * k, den_);
}

std::string to_string(const RationalAngle& a) {
  return std::to_string(a.num()) + "/" + std::to_string(a.den());
}

SRFMor srf_compose(const SRFMor& g, const SRFMor& f, CompositionLaw law) {
  const RFMor rf = rf_compose(g.rf, f.rf);
  const RationalAngle angle = law == CompositionLaw::corrected ? g.angle.scaled(f.rf.s) + f.angle
                                                               : g.angle + f.angle.scaled(g.rf.s);
  return {angle, rf};
}

MonoidElement monoid_compose(const MonoidElement& x, const MonoidElement& y) {
  return {x.angle + y.angle.scaled(x.s), x.s * y.s};
}

MonoidElement id_times_fr(const SRFMor& m) { return {m.angle, m.rf.s}; }

PiMor pi_mor(PiObject src, PiObject dst, ArcMap h, RFMor f) {
  if (src.n < 0 || dst.n < 0) throw InputError("Pi objects need n >= 0");
  if (h.src_period() != dst.n + 1 || h.dst_period() != src.n + 1)
    throw InputError("epicyclic component does not connect the given objects");
  if (f.src != src.a || f.dst != dst.a) throw InputError("RF component does not connect the given objects");
  if (f.s != h.degree())
    throw PreconditionError("Fr(f) = " + std::to_string(f.s) + " differs from Mod(h) = " + std::to_string(h.degree()));
  return {src, dst, std::move(h), f};
}

PiMor pi_identity(PiObject x) { return pi_mor(x, x, identity_arc(x.n + 1), rf_identity(x.a)); }

PiMor pi_compose(const PiMor& g, const PiMor& f) {
  if (!(f.dst == g.src)) throw PreconditionError("Pi morphisms are not composable");
  PiMor out{f.src, g.dst, compose(f.h, g.h), rf_compose(g.f, f.f)};
  // Mod and Fr are both multiplicative, so the constraint survives.
  if (out.f.s != out.h.degree()) throw std::logic_error("pi_compose broke Fr = Mod");
  return out;
}

PiMor chi(Int n, Int s, Int d) {
  if (n < 0 || s < 1 || d < 1) throw InputError("chi(n, s, d) needs n >= 0 and s, d >= 1");
  const Int m = s * (n + 1) - 1;
  return pi_mor({n, s * d}, {m, d}, generator(GeneratorSpec::id_power(n + 1, s)), rf_mor(s * d, d, 1, s));
}

PiMor w_morphism(Int n, Int a, Int r) {
  if (r < 1 || a % r != 0) throw InputError("W morphism needs r | a");
  return pi_mor({n, a}, {n, a / r}, identity_arc(n + 1), rf_mor(a, a / r, r, 1));
}

bool is_w_morphism(const PiMor& p) {
  return p.src.n == p.dst.n && p.h == identity_arc(p.src.n + 1) && p.f.s == 1;
}

PiMor cyclic_lift(const ArcMap& l, Int a) {
  if (l.degree() != 1) throw PreconditionError("cyclic_lift needs a degree-1 map");
  return pi_mor({l.dst_period() - 1, a}, {l.src_period() - 1, a}, l, rf_identity(a));
}

std::string to_string(const RFMor& f) {
  std::ostringstream os;
  os << "{src:" << f.src << ", dst:" << f.dst << ", r:" << f.r << ", s:" << f.s << "}";
  return os.str();
}

std::string to_string(const SRFMor& f) {
  std::ostringstream os;
  os << "{angle:" << to_string(f.angle) << ", src:" << f.rf.src << ", dst:" << f.rf.dst << ", r:" << f.rf.r
     << ", s:" << f.rf.s << "}";
  return os.str();
}

std::string to_string(const PiMor& p) {
  std::ostringstream os;
  os << "{src:[" << p.src.n << "," << p.src.a << "], dst:[" << p.dst.n << "," << p.dst.a << "], h:" << to_string(p.h)
     << ", f:" << to_string(p.f) << "}";
  return os.str();
}

}  // namespace peri
