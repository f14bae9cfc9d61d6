#pragma once

// Morphisms of the cyclic category and of its epicyclic extension, realized as
// projective classes of non-decreasing quasi-periodic maps Z -> Z:
//
//   phi(x + N) = phi(x) + M * a,      phi ~ phi + k M.
//
// Objects are indexed by their period N >= 1 (the module E_N); the usual label
// [n] corresponds to N = n + 1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace peri {

using Int = std::int64_t;

/// Floor division for signed integers, m > 0.
Int floor_div(Int x, Int m);

class ArcMap {
public:
  /// Canonicalizes raw values (shift by a multiple of dst_period so that
  /// 0 <= v_0 < dst_period).  Throws InputError on bad periods or a zero
  /// degree and PreconditionError when the values are not non-decreasing or
  /// violate v_{N-1} <= v_0 + M a.
  static ArcMap normalize(std::vector<Int> raw_values, Int src_period, Int dst_period, Int degree);

  Int src_period() const { return src_period_; }
  Int dst_period() const { return dst_period_; }
  Int degree() const { return degree_; }
  const std::vector<Int>& values() const { return values_; }

  /// phi(x) via the quasi-periodic extension.
  Int operator()(Int x) const;

  /// Values lie in [0, dst_period): an order-preserving map of finite ordinals.
  bool is_simplicial() const;

  friend bool operator==(const ArcMap&, const ArcMap&) = default;
  friend auto operator<=>(const ArcMap&, const ArcMap&) = default;

private:
  ArcMap() = default;
  Int src_period_ = 1;
  Int dst_period_ = 1;
  Int degree_ = 1;
  std::vector<Int> values_;
};

inline Int evaluate(const ArcMap& f, Int x) { return f(x); }

struct GeneratorSpec {
  enum class Kind { identity, face, degeneracy, cyclic, id_power, frobenius };
  Kind kind = Kind::identity;
  Int period = 1;  // N in the constructors below
  Int param = 0;   // face/degeneracy index, id_power s, frobenius a

  static GeneratorSpec identity(Int n) { return {Kind::identity, n, 0}; }
  /// E_N -> E_{N+1}, skipping residue i (0 <= i <= N).
  static GeneratorSpec face(Int n, Int i) { return {Kind::face, n, i}; }
  /// E_{N+1} -> E_N, hitting i twice (0 <= i < N).
  static GeneratorSpec degeneracy(Int n, Int i) { return {Kind::degeneracy, n, i}; }
  /// x -> x + 1 on E_N.
  static GeneratorSpec cyclic(Int n) { return {Kind::cyclic, n, 0}; }
  /// E_{sN} -> E_N, x -> x, degree s.
  static GeneratorSpec id_power(Int n, Int s) { return {Kind::id_power, n, s}; }
  /// E_N -> E_N, x -> a x, degree a.
  static GeneratorSpec frobenius(Int n, Int a) { return {Kind::frobenius, n, a}; }

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

std::string to_string(const GeneratorSpec& g);

ArcMap generator(const GeneratorSpec& spec);
inline ArcMap identity_arc(Int n) { return generator(GeneratorSpec::identity(n)); }

/// g o f.  Throws PreconditionError when f.dst_period != g.src_period.
ArcMap compose(const ArcMap& g, const ArcMap& f);

/// f^k for an endomorphism.
ArcMap power(const ArcMap& f, unsigned k);

/// Right Galois adjoint y -> max{x : phi(x) <= y}.  Degree-1 maps only; throws
/// PreconditionError otherwise.
ArcMap transpose(const ArcMap& f);

inline constexpr std::size_t kDefaultEnumerationBound = 5'000'000;

/// Number of canonical maps E_N -> E_M of exactly the given degree,
/// M * C(M a + N - 1, N - 1).
std::uint64_t hom_count(Int src_period, Int dst_period, Int degree);

/// Every canonical map E_N -> E_M with degree <= max_degree, ordered by
/// (degree, v_0, increments).  Throws ResourceError when the listing would
/// exceed `bound` entries.
std::vector<ArcMap> enumerate_hom(Int src_period, Int dst_period, Int max_degree,
                                  std::size_t bound = kDefaultEnumerationBound);

struct CyclicDecomposition {
  Int rotation = 0;
  /// Degeneracies then faces, in the order they are applied.
  std::vector<GeneratorSpec> simplicial_word;
};

/// f = (word composite) o cyclic(N)^rotation with 0 <= rotation < N.
CyclicDecomposition decompose_cyclic(const ArcMap& f);

/// Rebuilds the map described by a decomposition.
ArcMap recompose(const CyclicDecomposition& d, Int src_period, Int dst_period);

/// Epi-mono factorization of a simplicial map into degeneracies then faces.
std::vector<GeneratorSpec> simplicial_word(const ArcMap& f);

/// k-fold edgewise subdivision of a simplicial map [P-1] -> [Q-1]: the
/// blockwise map j P + i -> j Q + f(i), E_{kP} -> E_{kQ}.
ArcMap subdivide_arc(const ArcMap& f, Int k);

std::string to_string(const ArcMap& f);

}  // namespace peri
