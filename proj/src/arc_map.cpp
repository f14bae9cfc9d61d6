#include "pericyclic/arc_map.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <sstream>

#include "pericyclic/errors.hpp"

namespace peri {

Int floor_div(Int x, Int m) {
  Int q = x / m;
  if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
  return q;
}

ArcMap ArcMap::normalize(std::vector<Int> raw_values, Int src_period, Int dst_period, Int degree) {
  if (src_period < 1 || dst_period < 1) throw InputError("periods must be positive");
  if (degree < 1) throw InputError("degree must be positive");
  if (static_cast<Int>(raw_values.size()) != src_period)
    throw InputError("expected " + std::to_string(src_period) + " values, got " +
                     std::to_string(raw_values.size()));
  if (!std::is_sorted(raw_values.begin(), raw_values.end()))
    throw PreconditionError("values are not non-decreasing");
  if (raw_values.back() - raw_values.front() > dst_period * degree)
    throw PreconditionError("values violate the quasi-periodic bound");
  const Int shift = floor_div(raw_values.front(), dst_period) * dst_period;
  for (Int& v : raw_values) v -= shift;
  ArcMap f;
  f.src_period_ = src_period;
  f.dst_period_ = dst_period;
  f.degree_ = degree;
  f.values_ = std::move(raw_values);
  return f;
}

Int ArcMap::operator()(Int x) const {
  const Int q = floor_div(x, src_period_);
  const Int r = x - q * src_period_;
  return values_[static_cast<std::size_t>(r)] + q * dst_period_ * degree_;
}

bool ArcMap::is_simplicial() const { return values_.back() < dst_period_; }

std::string to_string(const GeneratorSpec& g) {
  switch (g.kind) {
    case GeneratorSpec::Kind::identity: return "identity(" + std::to_string(g.period) + ")";
    case GeneratorSpec::Kind::face:
      return "face(" + std::to_string(g.period) + "," + std::to_string(g.param) + ")";
    case GeneratorSpec::Kind::degeneracy:
      return "degeneracy(" + std::to_string(g.period) + "," + std::to_string(g.param) + ")";
    case GeneratorSpec::Kind::cyclic: return "cyclic(" + std::to_string(g.period) + ")";
    case GeneratorSpec::Kind::id_power:
      return "id_power(" + std::to_string(g.period) + "," + std::to_string(g.param) + ")";
    case GeneratorSpec::Kind::frobenius:
      return "frobenius(" + std::to_string(g.period) + "," + std::to_string(g.param) + ")";
  }
  return "?";
}

ArcMap generator(const GeneratorSpec& spec) {
  const Int n = spec.period;
  if (n < 1) throw InputError("generator period must be positive: " + to_string(spec));
  std::vector<Int> v;
  switch (spec.kind) {
    case GeneratorSpec::Kind::identity:
      for (Int x = 0; x < n; ++x) v.push_back(x);
      return ArcMap::normalize(std::move(v), n, n, 1);
    case GeneratorSpec::Kind::face:
      if (spec.param < 0 || spec.param > n) throw InputError("face index out of range: " + to_string(spec));
      for (Int x = 0; x < n; ++x) v.push_back(x < spec.param ? x : x + 1);
      return ArcMap::normalize(std::move(v), n, n + 1, 1);
    case GeneratorSpec::Kind::degeneracy:
      if (spec.param < 0 || spec.param >= n)
        throw InputError("degeneracy index out of range: " + to_string(spec));
      for (Int x = 0; x <= n; ++x) v.push_back(x <= spec.param ? x : x - 1);
      return ArcMap::normalize(std::move(v), n + 1, n, 1);
    case GeneratorSpec::Kind::cyclic:
      for (Int x = 0; x < n; ++x) v.push_back(x + 1);
      return ArcMap::normalize(std::move(v), n, n, 1);
    case GeneratorSpec::Kind::id_power:
      if (spec.param < 1) throw InputError("id_power exponent must be positive: " + to_string(spec));
      for (Int x = 0; x < spec.param * n; ++x) v.push_back(x);
      return ArcMap::normalize(std::move(v), spec.param * n, n, spec.param);
    case GeneratorSpec::Kind::frobenius:
      if (spec.param < 1) throw InputError("frobenius degree must be positive: " + to_string(spec));
      for (Int x = 0; x < n; ++x) v.push_back(spec.param * x);
      return ArcMap::normalize(std::move(v), n, n, spec.param);
  }
  throw InputError("unknown generator kind");
}

ArcMap compose(const ArcMap& g, const ArcMap& f) {
  if (f.dst_period() != g.src_period())
    throw PreconditionError("cannot compose: f lands in E_" + std::to_string(f.dst_period()) +
                            " but g starts at E_" + std::to_string(g.src_period()));
  std::vector<Int> v;
  v.reserve(f.values().size());
  for (Int x : f.values()) v.push_back(g(x));
  return ArcMap::normalize(std::move(v), f.src_period(), g.dst_period(), f.degree() * g.degree());
}

ArcMap power(const ArcMap& f, unsigned k) {
  if (f.src_period() != f.dst_period()) throw PreconditionError("power of a non-endomorphism");
  ArcMap acc = identity_arc(f.src_period());
  for (unsigned i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

ArcMap transpose(const ArcMap& f) {
  if (f.degree() != 1) throw PreconditionError("transpose is only defined for degree 1");
  const Int n = f.src_period(), m = f.dst_period();
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(m));
  for (Int y = 0; y < m; ++y) {
    // phi(k N) = v_0 + k M <= y < phi((k + 1) N): the answer lies in [kN, (k+1)N).
    const Int k = floor_div(y - f.values().front(), m);
    Int x = k * n;
    assert(f(x) <= y);
    while (f(x + 1) <= y) ++x;
    v.push_back(x);
  }
  return ArcMap::normalize(std::move(v), m, n, 1);
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t hom_count(Int src_period, Int dst_period, Int degree) {
  if (src_period < 1 || dst_period < 1 || degree < 1) throw InputError("periods and degree must be positive");
  const auto b = binomial(static_cast<std::uint64_t>(dst_period * degree + src_period - 1),
                          static_cast<std::uint64_t>(src_period - 1));
  return b * static_cast<std::uint64_t>(dst_period);
}

namespace {

void enumerate_increments(std::vector<Int>& v, std::size_t pos, Int remaining, Int src_period,
                          Int dst_period, Int degree, std::vector<ArcMap>& out) {
  if (pos == v.size()) {
    out.push_back(ArcMap::normalize(v, src_period, dst_period, degree));
    return;
  }
  for (Int d = 0; d <= remaining; ++d) {
    v[pos] = v[pos - 1] + d;
    enumerate_increments(v, pos + 1, remaining - d, src_period, dst_period, degree, out);
  }
}

}  // namespace

std::vector<ArcMap> enumerate_hom(Int src_period, Int dst_period, Int max_degree, std::size_t bound) {
  if (src_period < 1 || dst_period < 1 || max_degree < 1)
    throw InputError("periods and max_degree must be positive");
  std::uint64_t total = 0;
  for (Int a = 1; a <= max_degree; ++a) {
    total += hom_count(src_period, dst_period, a);
    if (total > bound) throw ResourceError("hom enumeration exceeds " + std::to_string(bound) + " maps");
  }
  std::vector<ArcMap> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<Int> v(static_cast<std::size_t>(src_period));
  for (Int a = 1; a <= max_degree; ++a) {
    for (Int v0 = 0; v0 < dst_period; ++v0) {
      v[0] = v0;
      enumerate_increments(v, 1, dst_period * a, src_period, dst_period, a, out);
    }
  }
  return out;
}

std::vector<GeneratorSpec> simplicial_word(const ArcMap& f) {
  if (f.degree() != 1 || !f.is_simplicial())
    throw PreconditionError("simplicial_word needs a simplicial degree-1 map");
  std::vector<GeneratorSpec> word;
  // Epi part: merge adjacent equal values, smallest index first.
  std::vector<Int> image(f.values());
  for (std::size_t i = 0; i + 1 < image.size();) {
    if (image[i] == image[i + 1]) {
      word.push_back(GeneratorSpec::degeneracy(static_cast<Int>(image.size()) - 1, static_cast<Int>(i)));
      image.erase(image.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    } else {
      ++i;
    }
  }
  // Mono part: insert missing values in increasing order.  When y is inserted
  // every smaller value is already present, so the face skips position y.
  Int size = static_cast<Int>(image.size());
  for (Int y = 0; y < f.dst_period(); ++y) {
    if (std::binary_search(image.begin(), image.end(), y)) continue;
    word.push_back(GeneratorSpec::face(size, y));
    ++size;
  }
  return word;
}

CyclicDecomposition decompose_cyclic(const ArcMap& f) {
  if (f.degree() != 1) throw PreconditionError("decompose_cyclic needs a degree-1 map");
  const Int n = f.src_period(), m = f.dst_period();
  std::optional<CyclicDecomposition> found;
  int hits = 0;
  for (Int j = 0; j < n; ++j) {
    // simp(x) = f(x - j)
    std::vector<Int> v(static_cast<std::size_t>(n));
    for (Int x = 0; x < n; ++x) v[static_cast<std::size_t>(x)] = f(x - j);
    const ArcMap simp = ArcMap::normalize(std::move(v), n, m, 1);
    if (simp.is_simplicial()) {
      ++hits;
      if (!found) found = CyclicDecomposition{j, simplicial_word(simp)};
    }
  }
  assert(hits == 1 && "decompose_cyclic: rotation is not unique");
  if (hits != 1) throw std::logic_error("decompose_cyclic: expected exactly one rotation");
  return *found;
}

ArcMap recompose(const CyclicDecomposition& d, Int src_period, Int dst_period) {
  ArcMap acc = power(generator(GeneratorSpec::cyclic(src_period)), static_cast<unsigned>(d.rotation));
  for (const auto& g : d.simplicial_word) acc = compose(generator(g), acc);
  if (acc.dst_period() != dst_period) throw PreconditionError("decomposition lands in the wrong period");
  return acc;
}

ArcMap subdivide_arc(const ArcMap& f, Int k) {
  if (k < 1) throw InputError("subdivision factor must be positive");
  if (f.degree() != 1 || !f.is_simplicial())
    throw PreconditionError("edgewise subdivision applies to simplicial maps");
  const Int p = f.src_period(), q = f.dst_period();
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(k * p));
  for (Int j = 0; j < k; ++j)
    for (Int i = 0; i < p; ++i) v.push_back(j * q + f.values()[static_cast<std::size_t>(i)]);
  return ArcMap::normalize(std::move(v), k * p, k * q, 1);
}

std::string to_string(const ArcMap& f) {
  std::ostringstream os;
  os << "{src_period:" << f.src_period() << ", dst_period:" << f.dst_period() << ", degree:" << f.degree()
     << ", values:[";
  for (std::size_t i = 0; i < f.values().size(); ++i) os << (i ? "," : "") << f.values()[i];
  os << "]}";
  return os.str();
}

}  // namespace peri
