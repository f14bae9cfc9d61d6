#pragma once

// The category RF (objects: positive integers, morphisms f_{r,s}: a -> b with
// a = r b s), its angular extension S'RF with exact angles in Q/Z, the monoid
// Q/Z x| N^x, and the pericyclic category Pi inside (epicyclic)^op x RF.

#include <string>
#include <vector>

#include "pericyclic/arc_map.hpp"

namespace peri {

struct RFMor {
  Int src = 1;
  Int dst = 1;
  Int r = 1;
  Int s = 1;

  Int res() const { return r; }
  Int fr() const { return s; }

  friend bool operator==(const RFMor&, const RFMor&) = default;
};

/// Throws InputError unless all entries are positive and src = r * dst * s.
RFMor rf_mor(Int src, Int dst, Int r, Int s);
inline RFMor rf_identity(Int a) { return rf_mor(a, a, 1, 1); }

RFMor rf_compose(const RFMor& g, const RFMor& f);

/// One morphism per factorization a / b = r s, ordered by r; empty unless b | a.
std::vector<RFMor> rf_hom_enum(Int a, Int b);

/// Element of Q/Z as a reduced fraction with 0 <= num < den.
class RationalAngle {
public:
  RationalAngle() = default;
  /// Reduces num/den modulo 1; throws InputError for den <= 0.
  RationalAngle(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }

  RationalAngle operator+(const RationalAngle& rhs) const;
  /// k * theta.
  RationalAngle scaled(Int k) const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

private:
  Int num_ = 0;
  Int den_ = 1;
};

std::string to_string(const RationalAngle& a);

struct SRFMor {
  RationalAngle angle;
  RFMor rf;
  friend bool operator==(const SRFMor&, const SRFMor&) = default;
};

enum class CompositionLaw {
  corrected,  // (theta, f_{r,s}) o (tau, f_{p,q}) = (q theta + tau, f_{rp,sq})
  legacy,     // (theta, f_{r,s}) o (tau, f_{p,q}) = (theta + s tau, f_{rp,sq})
};

SRFMor srf_compose(const SRFMor& g, const SRFMor& f, CompositionLaw law = CompositionLaw::corrected);

struct MonoidElement {
  RationalAngle angle;
  Int s = 1;
  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
};

/// (theta_1, s) o (theta_2, q) = (theta_1 + s theta_2, s q).
MonoidElement monoid_compose(const MonoidElement& x, const MonoidElement& y);

/// The functor Id x Fr into the opposite monoid: (theta, f_{r,s}) -> (theta, s).
MonoidElement id_times_fr(const SRFMor& m);

struct PiObject {
  Int n = 0;  // epicyclic object [n], period n + 1
  Int a = 1;  // RF object
  friend bool operator==(const PiObject&, const PiObject&) = default;
};

/// Morphism (n, a) -> (m, b) of Pi.  `h` is stored as the underlying forward
/// map E_{m+1} -> E_{n+1}; read as an arrow n -> m of the opposite category.
struct PiMor {
  PiObject src;
  PiObject dst;
  ArcMap h;
  RFMor f;
  friend bool operator==(const PiMor&, const PiMor&) = default;
};

/// Throws InputError on inconsistent endpoints and PreconditionError when
/// Fr(f) != Mod(h).
PiMor pi_mor(PiObject src, PiObject dst, ArcMap h, RFMor f);
PiMor pi_identity(PiObject x);

/// Componentwise; the opposite component composes as compose(f.h, g.h).
PiMor pi_compose(const PiMor& g, const PiMor& f);

/// chi(n, s, d) = (Id_n^{s,op}, f_{1,s}) : (n, s d) -> (s(n+1) - 1, d).
PiMor chi(Int n, Int s, Int d);

/// The localized class W: (Id, f_{r,1}) : (n, a) -> (n, a / r).
PiMor w_morphism(Int n, Int a, Int r);
bool is_w_morphism(const PiMor& p);

/// (l, f_{1,1}) : (n, a) -> (m, a) for a degree-1 map l : E_{m+1} -> E_{n+1}.
PiMor cyclic_lift(const ArcMap& l, Int a);

inline const ArcMap& project_lambda(const PiMor& p) { return p.h; }
inline const RFMor& project_pi(const PiMor& p) { return p.f; }

std::string to_string(const RFMor& f);
std::string to_string(const SRFMor& f);
std::string to_string(const PiMor& p);

}  // namespace peri
