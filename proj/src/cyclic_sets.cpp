#include "pericyclic/cyclic_sets.hpp"

#include <algorithm>
#include <sstream>

#include "pericyclic/errors.hpp"

namespace peri {

namespace {

std::size_t at(Int i) { return static_cast<std::size_t>(i); }

void check_table(const std::vector<int>& table, std::size_t domain, std::size_t codomain, const std::string& what) {
  if (table.size() != domain) throw InputError(what + " has " + std::to_string(table.size()) + " entries, expected " +
                                               std::to_string(domain));
  for (int v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= codomain) throw InputError(what + " has an out-of-range entry");
}

}  // namespace

TruncatedKCyclicSet::TruncatedKCyclicSet(Int k, std::vector<CyclicLevel> levels) : k_(k), levels_(std::move(levels)) {
  if (k_ < 1) throw InputError("k must be positive");
  if (levels_.empty()) throw InputError("a truncated cyclic set needs at least level 0");
  const Int top = static_cast<Int>(levels_.size()) - 1;
  for (Int n = 0; n <= top; ++n) {
    CyclicLevel& lv = levels_[at(n)];
    const std::size_t size = lv.t.size();
    const std::string where = " at level " + std::to_string(n);
    if (lv.labels.empty()) lv.labels.assign(size, Label{});
    if (lv.labels.size() != size) throw InputError("label count mismatch" + where);
    check_table(lv.t, size, size, "t" + where);
    if (static_cast<Int>(lv.d.size()) != (n == 0 ? 0 : n + 1)) throw InputError("wrong number of face tables" + where);
    for (std::size_t i = 0; i < lv.d.size(); ++i)
      check_table(lv.d[i], size, levels_[at(n - 1)].t.size(), "d_" + std::to_string(i) + where);
    if (static_cast<Int>(lv.s.size()) != (n == top ? 0 : n + 1))
      throw InputError("wrong number of degeneracy tables" + where);
    for (std::size_t i = 0; i < lv.s.size(); ++i)
      check_table(lv.s[i], size, levels_[at(n + 1)].t.size(), "s_" + std::to_string(i) + where);
  }
  index_.resize(levels_.size());
  for (std::size_t n = 0; n < levels_.size(); ++n) {
    index_[n].reserve(levels_[n].labels.size());
    for (std::size_t x = 0; x < levels_[n].labels.size(); ++x)
      if (!levels_[n].labels[x].empty()) index_[n].emplace(levels_[n].labels[x], static_cast<int>(x));
  }
}

int TruncatedKCyclicSet::d(Int n, Int i, int x) const {
  return level(n).d.at(at(i)).at(static_cast<std::size_t>(x));
}
int TruncatedKCyclicSet::s(Int n, Int i, int x) const {
  return level(n).s.at(at(i)).at(static_cast<std::size_t>(x));
}
int TruncatedKCyclicSet::t(Int n, int x) const { return level(n).t.at(static_cast<std::size_t>(x)); }
const Label& TruncatedKCyclicSet::label(Int n, int x) const {
  return level(n).labels.at(static_cast<std::size_t>(x));
}

std::optional<int> TruncatedKCyclicSet::find(Int n, const Label& label) const {
  const auto& idx = index_.at(at(n));
  auto it = idx.find(label);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::string RelationInstance::name() const {
  auto word = [](const std::vector<CyclicOp>& w) {
    if (w.empty()) return std::string("id");
    std::string out;
    for (std::size_t i = w.size(); i-- > 0;) {
      if (!out.empty()) out += ' ';
      switch (w[i].kind) {
        case CyclicOp::Kind::face: out += "d_" + std::to_string(w[i].index); break;
        case CyclicOp::Kind::degeneracy: out += "s_" + std::to_string(w[i].index); break;
        case CyclicOp::Kind::rotation: {
          std::size_t run = 1;
          while (i > 0 && w[i - 1].kind == CyclicOp::Kind::rotation) {
            --i;
            ++run;
          }
          out += run == 1 ? std::string("t") : "t^" + std::to_string(run);
          break;
        }
      }
    }
    return out;
  };
  return "level " + std::to_string(level) + ": " + word(lhs) + " = " + word(rhs);
}

std::optional<Int> word_target(Int level, const std::vector<CyclicOp>& word, Int top) {
  if (level < 0 || level > top) return std::nullopt;
  for (const auto& op : word) {
    switch (op.kind) {
      case CyclicOp::Kind::face:
        if (level < 1 || op.index < 0 || op.index > level) return std::nullopt;
        --level;
        break;
      case CyclicOp::Kind::degeneracy:
        if (level >= top || op.index < 0 || op.index > level) return std::nullopt;
        ++level;
        break;
      case CyclicOp::Kind::rotation: break;
    }
  }
  return level;
}

std::vector<RelationInstance> relation_instances(Int top, Int k) {
  using K = CyclicOp::Kind;
  const CyclicOp t{K::rotation, 0};
  auto d = [](Int i) { return CyclicOp{K::face, i}; };
  auto s = [](Int i) { return CyclicOp{K::degeneracy, i}; };
  std::vector<RelationInstance> out;
  auto add = [&](Int n, std::vector<CyclicOp> lhs, std::vector<CyclicOp> rhs) {
    if (!word_target(n, lhs, top) || !word_target(n, rhs, top)) return;
    out.push_back({n, std::move(lhs), std::move(rhs)});
  };
  for (Int n = 0; n <= top; ++n) {
    for (Int j = 0; j <= n + 1; ++j)
      for (Int i = 0; i <= n + 1; ++i) {
        if (i < j) add(n, {d(j), d(i)}, {d(i), d(j - 1)});
        if (i < j) add(n, {s(j), d(i)}, {d(i), s(j - 1)});
        if (i > j + 1) add(n, {s(j), d(i)}, {d(i - 1), s(j)});
        if (i <= j) add(n, {s(j), s(i)}, {s(i), s(j + 1)});
      }
    for (Int j = 0; j <= n; ++j) {
      add(n, {s(j), d(j)}, {});
      add(n, {s(j), d(j + 1)}, {});
    }
    for (Int i = 1; i <= n; ++i) {
      add(n, {t, d(i)}, {d(i - 1), t});
      add(n, {t, s(i)}, {s(i - 1), t});
    }
    add(n, {t, d(0)}, {d(n)});
    add(n, {t, s(0)}, {s(n), t, t});
    add(n, std::vector<CyclicOp>(at(k * (n + 1)), t), {});
  }
  return out;
}

ArcMap word_arc(Int level, const std::vector<CyclicOp>& word) {
  ArcMap acc = identity_arc(level + 1);
  for (const auto& op : word) {
    switch (op.kind) {
      case CyclicOp::Kind::face:
        acc = compose(acc, generator(GeneratorSpec::face(level, level - op.index)));
        --level;
        break;
      case CyclicOp::Kind::degeneracy:
        acc = compose(acc, generator(GeneratorSpec::degeneracy(level + 1, level - op.index)));
        ++level;
        break;
      case CyclicOp::Kind::rotation: acc = compose(acc, generator(GeneratorSpec::cyclic(level + 1))); break;
    }
  }
  return acc;
}

int apply_word(const TruncatedKCyclicSet& y, Int level, const std::vector<CyclicOp>& word, int x) {
  for (const auto& op : word) {
    switch (op.kind) {
      case CyclicOp::Kind::face: x = y.d(level--, op.index, x); break;
      case CyclicOp::Kind::degeneracy: x = y.s(level++, op.index, x); break;
      case CyclicOp::Kind::rotation: x = y.t(level, x); break;
    }
  }
  return x;
}

std::vector<std::string> validate(const TruncatedKCyclicSet& y) {
  std::vector<std::string> report;
  for (const auto& rel : relation_instances(y.top(), y.k())) {
    std::size_t failures = 0;
    int first = -1;
    for (int x = 0; x < static_cast<int>(y.size(rel.level)); ++x) {
      if (apply_word(y, rel.level, rel.lhs, x) != apply_word(y, rel.level, rel.rhs, x)) {
        if (first < 0) first = x;
        ++failures;
      }
    }
    if (failures > 0)
      report.push_back(rel.name() + " fails on " + std::to_string(failures) + " element(s), first " +
                       std::to_string(first));
  }
  return report;
}

ElementMap eval_cyclic(const TruncatedKCyclicSet& y, const ArcMap& f) {
  if (y.k() != 1) throw PreconditionError("eval_cyclic needs a cyclic set (k = 1)");
  const Int from = f.dst_period() - 1, to = f.src_period() - 1;
  if (from > y.top() || to > y.top()) throw PreconditionError("arc map leaves the truncation");
  const CyclicDecomposition dec = decompose_cyclic(f);
  std::vector<CyclicOp> word;
  for (auto it = dec.simplicial_word.rbegin(); it != dec.simplicial_word.rend(); ++it) {
    if (it->kind == GeneratorSpec::Kind::face)
      word.push_back({CyclicOp::Kind::face, it->period - it->param});
    else
      word.push_back({CyclicOp::Kind::degeneracy, it->period - 1 - it->param});
  }
  for (Int j = 0; j < dec.rotation; ++j) word.push_back({CyclicOp::Kind::rotation, 0});
  if (word_target(from, word, y.top()) != to) throw std::logic_error("eval_cyclic: word lands on the wrong level");
  ElementMap out(y.size(from));
  for (int x = 0; x < static_cast<int>(out.size()); ++x) out[static_cast<std::size_t>(x)] = apply_word(y, from, word, x);
  return out;
}

TruncatedKCyclicSet subdivide(const TruncatedKCyclicSet& y, Int k) {
  if (k < 1) throw InputError("subdivision factor must be positive");
  if (y.k() != 1) throw PreconditionError("subdivide needs a cyclic set (k = 1)");
  const Int top = (y.top() + 1) / k - 1;
  if (top < 0) throw PreconditionError("truncation too small for subdivision by " + std::to_string(k));
  std::vector<CyclicLevel> levels(at(top + 1));
  for (Int n = 0; n <= top; ++n) {
    CyclicLevel& lv = levels[at(n)];
    const Int big = k * (n + 1) - 1;
    lv.labels = y.level(big).labels;
    lv.t = y.level(big).t;
    if (n > 0)
      for (Int i = 0; i <= n; ++i)
        lv.d.push_back(eval_cyclic(y, subdivide_arc(generator(GeneratorSpec::face(n, n - i)), k)));
    if (n < top)
      for (Int i = 0; i <= n; ++i)
        lv.s.push_back(eval_cyclic(y, subdivide_arc(generator(GeneratorSpec::degeneracy(n + 1, n - i)), k)));
  }
  return TruncatedKCyclicSet(k, std::move(levels));
}

FixedPoints fixed_points(const TruncatedKCyclicSet& z) {
  const Int top = z.top();
  std::vector<ElementMap> inclusion(at(top + 1));
  std::vector<std::vector<int>> position(at(top + 1));
  for (Int n = 0; n <= top; ++n) {
    position[at(n)].assign(z.size(n), -1);
    for (int x = 0; x < static_cast<int>(z.size(n)); ++x) {
      int tx = x;
      for (Int j = 0; j <= n; ++j) tx = z.t(n, tx);
      if (tx == x) {
        position[at(n)][static_cast<std::size_t>(x)] = static_cast<int>(inclusion[at(n)].size());
        inclusion[at(n)].push_back(x);
      }
    }
  }
  auto restrict = [&](const std::vector<int>& table, Int from, Int to, const char* what) {
    std::vector<int> out;
    for (int x : inclusion[at(from)]) {
      const int v = position[at(to)][static_cast<std::size_t>(table[static_cast<std::size_t>(x)])];
      if (v < 0)
        throw PreconditionError(std::string(what) + " at level " + std::to_string(from) + " leaves the fixed points");
      out.push_back(v);
    }
    return out;
  };
  std::vector<CyclicLevel> levels(at(top + 1));
  for (Int n = 0; n <= top; ++n) {
    const CyclicLevel& src = z.level(n);
    CyclicLevel& lv = levels[at(n)];
    for (int x : inclusion[at(n)]) lv.labels.push_back(src.labels[static_cast<std::size_t>(x)]);
    lv.t = restrict(src.t, n, n, "t");
    for (const auto& table : src.d) lv.d.push_back(restrict(table, n, n - 1, "face"));
    for (const auto& table : src.s) lv.s.push_back(restrict(table, n, n + 1, "degeneracy"));
  }
  return {TruncatedKCyclicSet(1, std::move(levels)), std::move(inclusion)};
}

namespace {

void loops(const FiniteCategory& c, Label& tuple, std::size_t pos, std::vector<Label>& out) {
  const int count = static_cast<int>(c.morphisms.size());
  for (int f = 0; f < count; ++f) {
    if (pos > 0 && c.dst(f) != c.src(tuple[pos - 1])) continue;
    tuple[pos] = f;
    if (pos + 1 == tuple.size()) {
      if (c.dst(tuple[0]) == c.src(f)) out.push_back(tuple);
    } else {
      loops(c, tuple, pos + 1, out);
    }
  }
}

}  // namespace

TruncatedKCyclicSet cyclic_nerve(const FiniteCategory& c, Int top) {
  if (top < 0) throw InputError("level bound must be non-negative");
  std::vector<std::vector<Label>> tuples(at(top + 1));
  std::vector<LabelIndex> index(at(top + 1));
  for (Int n = 0; n <= top; ++n) {
    Label tuple(at(n + 1));
    loops(c, tuple, 0, tuples[at(n)]);
    index[at(n)].reserve(tuples[at(n)].size());
    for (std::size_t i = 0; i < tuples[at(n)].size(); ++i) index[at(n)].emplace(tuples[at(n)][i], static_cast<int>(i));
  }
  auto lookup = [&](Int n, const Label& l) { return index[at(n)].at(l); };

  std::vector<CyclicLevel> levels(at(top + 1));
  for (Int n = 0; n <= top; ++n) {
    CyclicLevel& lv = levels[at(n)];
    const auto& ts = tuples[at(n)];
    for (const Label& f : ts) {
      Label r(f.size());
      r[0] = f.back();
      std::copy(f.begin(), f.end() - 1, r.begin() + 1);
      lv.t.push_back(lookup(n, r));
    }
    if (n > 0) {
      lv.d.resize(at(n + 1));
      for (const Label& f : ts) {
        for (Int i = 0; i < n; ++i) {
          Label g;
          for (Int j = 0; j <= n; ++j) {
            if (j == i) g.push_back(c.compose(f[at(i)], f[at(i + 1)]));
            else if (j != i + 1) g.push_back(f[at(j)]);
          }
          lv.d[at(i)].push_back(lookup(n - 1, g));
        }
        Label g(f.begin(), f.end() - 1);
        g[0] = c.compose(f.back(), f[0]);
        lv.d[at(n)].push_back(lookup(n - 1, g));
      }
    }
    if (n < top) {
      lv.s.resize(at(n + 1));
      for (const Label& f : ts)
        for (Int j = 0; j <= n; ++j) {
          Label g = f;
          g.insert(g.begin() + static_cast<std::ptrdiff_t>(j + 1), c.identity(c.src(f[at(j)])));
          lv.s[at(j)].push_back(lookup(n + 1, g));
        }
    }
  }
  for (Int n = 0; n <= top; ++n) levels[at(n)].labels = std::move(tuples[at(n)]);
  return TruncatedKCyclicSet(1, std::move(levels));
}

Label nerve_phi(const Label& tuple, Int k) {
  if (k < 1 || tuple.size() % at(k) != 0) throw PreconditionError("tuple length is not a multiple of k");
  const std::size_t block = tuple.size() / at(k);
  for (std::size_t i = block; i < tuple.size(); ++i)
    if (tuple[i] != tuple[i - block]) throw PreconditionError("tuple is not fixed under C_k");
  return Label(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(block));
}

Label nerve_amplify(const Label& tuple, Int k) {
  if (k < 1) throw InputError("amplification factor must be positive");
  Label out;
  for (Int j = 0; j < k; ++j) out.insert(out.end(), tuple.begin(), tuple.end());
  return out;
}

EpicyclicMaps nerve_epicyclic(const TruncatedKCyclicSet& nerve, const FixedPoints& fixed, Int k, Int n) {
  if (n < 0 || n > fixed.set.top() || n > nerve.top()) throw PreconditionError("level outside the truncation");
  EpicyclicMaps out;
  for (int x = 0; x < static_cast<int>(fixed.set.size(n)); ++x) {
    auto y = nerve.find(n, nerve_phi(fixed.set.label(n, x), k));
    if (!y) throw PreconditionError("phi lands outside the nerve");
    out.phi.push_back(*y);
  }
  for (int y = 0; y < static_cast<int>(nerve.size(n)); ++y) {
    auto x = fixed.set.find(n, nerve_amplify(nerve.label(n, y), k));
    if (!x) throw PreconditionError("amplification is not a fixed point");
    out.p.push_back(*x);
  }
  return out;
}

Beta::Beta(const TruncatedKCyclicSet& y, Phi phi) : y_(y), phi_(std::move(phi)) {
  if (y.k() != 1) throw PreconditionError("beta needs a cyclic set (k = 1)");
}

Beta Beta::for_nerve(const TruncatedKCyclicSet& nerve) {
  const TruncatedKCyclicSet* y = &nerve;
  return Beta(nerve, [y](int x, Int q, Int n) {
    auto image = y->find(n, nerve_phi(y->label(q * (n + 1) - 1, x), q));
    if (!image) throw PreconditionError("phi lands outside the nerve");
    return *image;
  });
}

bool Beta::in_truncation(PiObject x) const { return x.n >= 0 && x.a >= 1 && x.a * (x.n + 1) - 1 <= y_.top(); }

std::vector<int> Beta::set(PiObject x) const {
  if (!in_truncation(x)) throw PreconditionError("object outside the truncation");
  const Int level = x.a * (x.n + 1) - 1;
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(y_.size(level)); ++e) {
    int te = e;
    for (Int j = 0; j <= x.n; ++j) te = y_.t(level, te);
    if (te == e) out.push_back(e);
  }
  return out;
}

const FixedPoints& Beta::fixed(Int b) const {
  auto it = cache_.find(b);
  if (it == cache_.end()) it = cache_.emplace(b, fixed_points(subdivide(y_, b))).first;
  return it->second;
}

std::map<int, int> Beta::map_w(Int n, Int a, Int r) const {
  const std::vector<int> target = set({n, a / r});
  std::map<int, int> out;
  for (int x : set({n, a})) {
    const int y = r == 1 ? x : phi_(x, r, (a / r) * (n + 1) - 1);
    if (!std::binary_search(target.begin(), target.end(), y)) throw PreconditionError("phi leaves beta(n, a/r)");
    out.emplace(x, y);
  }
  return out;
}

std::map<int, int> Beta::map_chi(Int n, Int s, Int d) const {
  const std::vector<int> target = set({s * (n + 1) - 1, d});
  std::map<int, int> out;
  for (int x : set({n, s * d})) {
    if (!std::binary_search(target.begin(), target.end(), x)) throw PreconditionError("chi inclusion fails");
    out.emplace(x, x);
  }
  return out;
}

std::map<int, int> Beta::map_cyclic(const ArcMap& l, Int b) const {
  const Int p = l.dst_period() - 1, m = l.src_period() - 1;
  const FixedPoints& f = fixed(b);
  const ElementMap e = eval_cyclic(f.set, l);
  const ElementMap& from = f.inclusion[at(p)];
  const ElementMap& to = f.inclusion[at(m)];
  std::map<int, int> out;
  for (std::size_t i = 0; i < from.size(); ++i) out.emplace(from[i], to[static_cast<std::size_t>(e[i])]);
  return out;
}

std::map<int, int> Beta::map(const PiMor& p) const {
  if (!in_truncation(p.src) || !in_truncation(p.dst)) throw PreconditionError("morphism outside the truncation");
  const Int n = p.src.n, m = p.dst.n, b = p.dst.a, r = p.f.r, s = p.f.s;
  // (h, f_{r,s}) = (l, f_{1,1}) o chi(n, s, b) o (Id, f_{r,1})
  const auto w = map_w(n, p.src.a, r);
  const auto c = map_chi(n, s, b);
  const ArcMap l = ArcMap::normalize(p.h.values(), m + 1, s * (n + 1), 1);
  const auto e = map_cyclic(l, b);
  std::map<int, int> out;
  for (const auto& [x, y] : w) out.emplace(x, e.at(c.at(y)));
  return out;
}

}  // namespace peri
