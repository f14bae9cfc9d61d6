#include "pericyclic/gamma.hpp"

#include <set>
#include <sstream>

#include "pericyclic/errors.hpp"

namespace peri {

int PointedSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == name) return static_cast<int>(i);
  throw InputError("unknown element " + name);
}

PointedSet pointed_set(std::vector<std::string> elements, const std::string& basepoint) {
  std::set<std::string> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second) throw InputError("duplicate element " + e);
  PointedSet x{std::move(elements), 0};
  x.basepoint = x.index_of(basepoint);
  return x;
}

PointedSet standard_pointed_set(int size) {
  if (size < 1) throw InputError("a pointed set has at least the basepoint");
  std::vector<std::string> e{"*"};
  for (int i = 1; i < size; ++i) e.push_back(std::to_string(i));
  return {std::move(e), 0};
}

PointedSet sign_set() { return {{"-1", "0", "1"}, 1}; }

PointedMap pointed_map(PointedSet src, PointedSet dst, std::vector<int> images) {
  if (static_cast<int>(images.size()) != src.size()) throw InputError("one image per element expected");
  for (int y : images)
    if (y < 0 || y >= dst.size()) throw InputError("image out of range");
  if (images[static_cast<std::size_t>(src.basepoint)] != dst.basepoint)
    throw PreconditionError("map does not send the basepoint to the basepoint");
  return {std::move(src), std::move(dst), std::move(images)};
}

PointedMap identity_map(const PointedSet& x) {
  std::vector<int> images;
  for (int i = 0; i < x.size(); ++i) images.push_back(i);
  return {x, x, std::move(images)};
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  if (!(f.dst == g.src)) throw PreconditionError("pointed maps are not composable");
  std::vector<int> images;
  for (int y : f.images) images.push_back(g.images[static_cast<std::size_t>(y)]);
  return {f.src, g.dst, std::move(images)};
}

Divisor divisor(PointedSet carrier, std::vector<mpq_class> values) {
  if (static_cast<int>(values.size()) != carrier.size()) throw InputError("one value per element expected");
  for (auto& v : values) v.canonicalize();
  if (values[static_cast<std::size_t>(carrier.basepoint)] != 0) throw InputError("divisor is nonzero at the basepoint");
  return {std::move(carrier), std::move(values)};
}

Divisor zero_divisor(const PointedSet& x) { return {x, std::vector<mpq_class>(static_cast<std::size_t>(x.size()))}; }

void pushforward(const PointedMap& f, const Divisor& d, Divisor& out) {
  if (!(f.src == d.carrier)) throw PreconditionError("divisor does not live on the source of the map");
  if (!(out.carrier == f.dst)) out.carrier = f.dst;
  out.values.resize(static_cast<std::size_t>(f.dst.size()));
  for (auto& v : out.values) v = 0;
  for (std::size_t x = 0; x < d.values.size(); ++x) {
    const int y = f.images[x];
    if (y == f.dst.basepoint || sgn(d.values[x]) == 0) continue;
    mpq_class& slot = out.values[static_cast<std::size_t>(y)];
    if (sgn(slot) == 0) slot = d.values[x];
    else slot += d.values[x];
  }
}

Divisor pushforward(const PointedMap& f, const Divisor& d) {
  Divisor out;
  pushforward(f, d, out);
  return out;
}

mpq_class l1_norm(const Divisor& d) {
  mpq_class sum;
  for (const auto& v : d.values) sum += abs(v);
  return sum;
}

bool oinfty_member(const Divisor& d) {
  // Running sum num/den left unreduced; compared against 1 at the end.
  thread_local mpz_class num, den, t;
  num = 0;
  den = 1;
  for (const auto& v : d.values) {
    if (sgn(v) == 0) continue;
    mpz_mul(num.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
    mpz_mul(t.get_mpz_t(), den.get_mpz_t(), v.get_num_mpz_t());
    mpz_abs(t.get_mpz_t(), t.get_mpz_t());
    num += t;
    den *= v.get_den();
  }
  return num <= den;
}

SmashProduct smash(const PointedSet& x, const PointedSet& y) {
  SmashProduct out;
  out.set.elements.push_back("*");
  out.pairs.emplace_back(-1, -1);
  for (int i = 0; i < x.size(); ++i) {
    if (i == x.basepoint) continue;
    for (int j = 0; j < y.size(); ++j) {
      if (j == y.basepoint) continue;
      out.set.elements.push_back("(" + x.elements[static_cast<std::size_t>(i)] + "," +
                                 y.elements[static_cast<std::size_t>(j)] + ")");
      out.pairs.emplace_back(i, j);
    }
  }
  return out;
}

Divisor divisor_smash(const Divisor& d, const Divisor& e) {
  const SmashProduct s = smash(d.carrier, e.carrier);
  Divisor out = zero_divisor(s.set);
  for (std::size_t k = 1; k < s.pairs.size(); ++k)
    out.values[k] = d.values[static_cast<std::size_t>(s.pairs[k].first)] *
                    e.values[static_cast<std::size_t>(s.pairs[k].second)];
  return out;
}

Divisor spm1_act(int sign, const Divisor& d) {
  if (sign < -1 || sign > 1) throw InputError("sign must be -1, 0 or 1");
  Divisor out = d;
  for (auto& v : out.values) v *= sign;
  return out;
}

std::string to_string(const Divisor& d) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (sgn(d.values[i]) == 0) continue;
    os << (first ? "" : ", ") << d.carrier.elements[i] << ":" << d.values[i].get_str();
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace peri
