#pragma once

// Truncated k-cyclic sets stored as finite tables, evaluation on arc maps,
// edgewise subdivision, C_k fixed points, cyclic nerves and the functor beta
// on the pericyclic category.
//
// Conventions.  Level n has period n + 1.  The tables correspond to arc maps
// (the set is a contravariant functor) as follows:
//   d_i at level n  <->  face(n, n - i)
//   s_i at level n  <->  degeneracy(n + 1, n - i)
//   t   at level n  <->  cyclic(n + 1)

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pericyclic/arc_map.hpp"
#include "pericyclic/finite_category.hpp"
#include "pericyclic/rf.hpp"

namespace peri {

using Label = std::vector<int>;

struct LabelHash {
  std::size_t operator()(const Label& l) const noexcept {
    std::size_t h = l.size();
    for (int v : l) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};
using LabelIndex = std::unordered_map<Label, int, LabelHash>;
/// Element map between two levels: image index per source index.
using ElementMap = std::vector<int>;

struct CyclicLevel {
  std::vector<Label> labels;        // one per element (may be empty labels)
  std::vector<std::vector<int>> d;  // d[i][x], 0 <= i <= n; empty at level 0
  std::vector<std::vector<int>> s;  // s[i][x], 0 <= i <= n; empty at the top level
  std::vector<int> t;
};

class TruncatedKCyclicSet {
public:
  /// Checks table shapes and index ranges; throws InputError.  Does not check
  /// the relations (see validate).
  TruncatedKCyclicSet(Int k, std::vector<CyclicLevel> levels);

  Int k() const { return k_; }
  Int top() const { return static_cast<Int>(levels_.size()) - 1; }
  std::size_t size(Int n) const { return level(n).t.size(); }
  const CyclicLevel& level(Int n) const { return levels_.at(static_cast<std::size_t>(n)); }

  int d(Int n, Int i, int x) const;
  int s(Int n, Int i, int x) const;
  int t(Int n, int x) const;
  const Label& label(Int n, int x) const;
  std::optional<int> find(Int n, const Label& label) const;

private:
  Int k_;
  std::vector<CyclicLevel> levels_;
  std::vector<LabelIndex> index_;
};

struct CyclicOp {
  enum class Kind { face, degeneracy, rotation };
  Kind kind;
  Int index = 0;
  friend bool operator==(const CyclicOp&, const CyclicOp&) = default;
};

/// One instance of a defining relation.  Words are listed in the order the
/// operators are applied to an element (the rightmost factor first).
struct RelationInstance {
  Int level = 0;
  std::vector<CyclicOp> lhs;
  std::vector<CyclicOp> rhs;
  std::string name() const;
};

/// Every instance of the k-cyclic relations whose both sides stay within
/// levels 0..top.
std::vector<RelationInstance> relation_instances(Int top, Int k);

/// Level reached by applying `word` from `level`, or nullopt if some step
/// leaves the truncation or uses an out-of-range index.
std::optional<Int> word_target(Int level, const std::vector<CyclicOp>& word, Int top);

/// The arc map represented by a word starting at `level` (contravariant
/// transcription of the table conventions).
ArcMap word_arc(Int level, const std::vector<CyclicOp>& word);

int apply_word(const TruncatedKCyclicSet& y, Int level, const std::vector<CyclicOp>& word, int x);

/// Empty report <=> valid.
std::vector<std::string> validate(const TruncatedKCyclicSet& y);

/// Y(f) for a degree-1 arc map f : E_P -> E_Q, a map from level Q-1 to level
/// P-1.  Requires k = 1.
ElementMap eval_cyclic(const TruncatedKCyclicSet& y, const ArcMap& f);

TruncatedKCyclicSet subdivide(const TruncatedKCyclicSet& y, Int k);

struct FixedPoints {
  TruncatedKCyclicSet set;
  std::vector<ElementMap> inclusion;  // per level, index in the k-cyclic set
};

FixedPoints fixed_points(const TruncatedKCyclicSet& z);

TruncatedKCyclicSet cyclic_nerve(const FiniteCategory& c, Int top);

/// phi_k on loop tuples: first block of a k-fold repetition.  Throws
/// PreconditionError if the tuple is not a k-fold repetition.
Label nerve_phi(const Label& tuple, Int k);
/// p_k: k-fold repetition.
Label nerve_amplify(const Label& tuple, Int k);

struct EpicyclicMaps {
  ElementMap phi;  // fixed_points(subdivide(nerve, k)) level n -> nerve level n
  ElementMap p;    // nerve level n -> fixed_points(subdivide(nerve, k)) level n
};

EpicyclicMaps nerve_epicyclic(const TruncatedKCyclicSet& nerve, const FixedPoints& fixed, Int k, Int n);

/// beta on the pericyclic category for a cyclic set Y with epicyclic maps.
/// Elements of beta(n, a) are indices of Y at level a(n+1) - 1.
class Beta {
public:
  /// phi(x, q, n): image in Y level n of the element x of Y level q(n+1) - 1.
  using Phi = std::function<int(int x, Int q, Int n)>;

  Beta(const TruncatedKCyclicSet& y, Phi phi);
  /// beta for a nerve, with phi given by nerve_phi.
  static Beta for_nerve(const TruncatedKCyclicSet& nerve);

  bool in_truncation(PiObject x) const;
  /// Sorted indices of Y at level a(n+1) - 1 fixed by t^{n+1}.
  std::vector<int> set(PiObject x) const;
  /// beta(p) as a map on Y indices, defined on set(p.src).
  std::map<int, int> map(const PiMor& p) const;

private:
  std::map<int, int> map_w(Int n, Int a, Int r) const;
  std::map<int, int> map_chi(Int n, Int s, Int d) const;
  std::map<int, int> map_cyclic(const ArcMap& l, Int b) const;
  const FixedPoints& fixed(Int b) const;

  const TruncatedKCyclicSet& y_;
  Phi phi_;
  mutable std::map<Int, FixedPoints> cache_;
};

}  // namespace peri
