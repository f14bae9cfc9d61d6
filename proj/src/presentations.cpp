#include "pericyclic/presentations.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "pericyclic/errors.hpp"

namespace peri {

namespace {

Int mod(Int x, Int m) { return x - floor_div(x, m) * m; }

void check_lengths(Int count, Int modulus, Int f0, const std::vector<Int>& lengths) {
  if (f0 < 0 || f0 >= modulus) throw InputError("f0 out of range");
  if (static_cast<Int>(lengths.size()) != count)
    throw InputError("expected " + std::to_string(count) + " lengths, got " + std::to_string(lengths.size()));
  Int sum = 0;
  for (Int l : lengths) {
    if (l < 0) throw InputError("lengths must be non-negative");
    sum += l;
  }
  if (sum == 0 || sum % modulus != 0)
    throw InputError("lengths must sum to a positive multiple of " + std::to_string(modulus));
}

// Length of the image under g of the path of `steps` generating arrows that
// starts at object y; negative paths walk backwards.
Int path_length(const LengthData& g, Int modulus, Int y, Int steps) {
  const Int cycle = std::accumulate(g.lengths.begin(), g.lengths.end(), Int{0});
  const Int full = floor_div(steps, modulus);
  Int total = full * cycle;
  const Int rest = steps - full * modulus;
  for (Int j = 0; j < rest; ++j) total += g.lengths[static_cast<std::size_t>(mod(y + j, modulus))];
  return total;
}

LengthData compose_data(const LengthData& g, Int g_src_mod, Int g_dst_mod, const LengthData& f,
                        Int f_dst_mod) {
  LengthData out;
  Int fx = f.f0;
  for (Int l : f.lengths) {
    out.lengths.push_back(path_length(g, g_src_mod, fx, l));
    fx = mod(fx + l, f_dst_mod);
  }
  out.f0 = mod(g.f0 + path_length(g, g_src_mod, 0, f.f0), g_dst_mod);
  return out;
}

Int object_image(const LengthData& d, Int modulus, Int x) {
  Int y = d.f0;
  for (Int j = 0; j < x; ++j) y += d.lengths[static_cast<std::size_t>(j)];
  return mod(y, modulus);
}

std::string data_string(Int src, Int dst, const LengthData& d) {
  std::ostringstream os;
  os << "{src:" << src << ", dst:" << dst << ", f0:" << d.f0 << ", lengths:[";
  for (std::size_t i = 0; i < d.lengths.size(); ++i) os << (i ? "," : "") << d.lengths[i];
  os << "]}";
  return os.str();
}

}  // namespace

Int GroupoidElement::range() const { return mod(x + h, ambient + 1); }

GroupoidElement groupoid_element(Int ambient, Int x, Int h) {
  if (ambient < 0) throw InputError("g(m) needs m >= 0");
  if (x < 0 || x > ambient) throw InputError("object out of range");
  return {ambient, x, h};
}

GroupoidElement g_compose(const GroupoidElement& a, const GroupoidElement& b) {
  if (a.ambient != b.ambient) throw PreconditionError("elements live in different groupoids");
  if (a.source() != b.range()) throw PreconditionError("s(a) != r(b)");
  return {a.ambient, b.x, a.h + b.h};
}

GroupoidElement g_inverse(const GroupoidElement& a) { return {a.ambient, a.range(), -a.h}; }

Int GroupoidMor::degree() const {
  return std::accumulate(data.lengths.begin(), data.lengths.end(), Int{0}) / (dst + 1);
}

Int GroupoidMor::object_map(Int x) const { return object_image(data, dst + 1, x); }

GroupoidElement GroupoidMor::apply(const GroupoidElement& e) const {
  if (e.ambient != src) throw PreconditionError("element is not in the source groupoid");
  return {dst, object_map(e.x), path_length(data, src + 1, e.x, e.h)};
}

GroupoidMor groupoid_mor(Int src, Int dst, Int f0, std::vector<Int> lengths) {
  if (src < 0 || dst < 0) throw InputError("g(m) needs m >= 0");
  check_lengths(src + 1, dst + 1, f0, lengths);
  return {src, dst, {f0, std::move(lengths)}};
}

GroupoidMor groupoid_compose(const GroupoidMor& g, const GroupoidMor& f) {
  if (f.dst != g.src) throw PreconditionError("groupoid morphisms are not composable");
  return {f.src, g.dst, compose_data(g.data, g.src + 1, g.dst + 1, f.data, f.dst + 1)};
}

ArcMap to_arc(const GroupoidMor& f) {
  std::vector<Int> v;
  v.reserve(f.data.lengths.size());
  Int acc = f.data.f0;
  for (Int l : f.data.lengths) {
    v.push_back(acc);
    acc += l;
  }
  return ArcMap::normalize(std::move(v), f.src + 1, f.dst + 1, f.degree());
}

GroupoidMor from_arc(const ArcMap& f) {
  const auto& v = f.values();
  std::vector<Int> lengths;
  lengths.reserve(v.size());
  for (std::size_t j = 0; j + 1 < v.size(); ++j) lengths.push_back(v[j + 1] - v[j]);
  lengths.push_back(v.front() + f.dst_period() * f.degree() - v.back());
  return groupoid_mor(f.src_period() - 1, f.dst_period() - 1, mod(v.front(), f.dst_period()), std::move(lengths));
}

Int KaledinFunctor::degree() const {
  return std::accumulate(data.lengths.begin(), data.lengths.end(), Int{0}) / dst;
}

Int KaledinFunctor::object_map(Int x) const { return object_image(data, dst, x); }

KaledinFunctor kaledin_functor(Int src, Int dst, Int f0, std::vector<Int> lengths) {
  if (src < 1 || dst < 1) throw InputError("[n] needs n >= 1");
  check_lengths(src, dst, f0, lengths);
  return {src, dst, {f0, std::move(lengths)}};
}

KaledinFunctor identity_functor(Int n) { return kaledin_functor(n, n, 0, std::vector<Int>(static_cast<std::size_t>(n), 1)); }

KaledinFunctor p_functor(const GroupoidMor& f) { return {f.src + 1, f.dst + 1, f.data}; }

GroupoidMor p_inverse(const KaledinFunctor& f) { return {f.src - 1, f.dst - 1, f.data}; }

KaledinFunctor compose_functor(const KaledinFunctor& g, const KaledinFunctor& f) {
  if (f.dst != g.src) throw PreconditionError("functors are not composable");
  return {f.src, g.dst, compose_data(g.data, g.src, g.dst, f.data, f.dst)};
}

Classification classify(const KaledinFunctor& f) {
  Classification c;
  c.nondegenerate = f.degree() >= 1;
  c.horizontal = f.degree() == 1;
  c.vertical = std::all_of(f.data.lengths.begin(), f.data.lengths.end(), [](Int l) { return l == 1; });
  return c;
}

namespace {

void compositions(std::vector<Int>& parts, std::size_t pos, Int remaining, const std::function<void()>& emit) {
  if (pos + 1 == parts.size()) {
    parts[pos] = remaining;
    emit();
    return;
  }
  for (Int l = 0; l <= remaining; ++l) {
    parts[pos] = l;
    compositions(parts, pos + 1, remaining - l, emit);
  }
}

}  // namespace

std::vector<KaledinFunctor> enumerate_functors(Int src, Int dst, Int max_degree) {
  if (src < 1 || dst < 1 || max_degree < 1) throw InputError("enumerate_functors needs positive arguments");
  std::vector<KaledinFunctor> out;
  std::vector<Int> parts(static_cast<std::size_t>(src));
  for (Int a = 1; a <= max_degree; ++a)
    for (Int f0 = 0; f0 < dst; ++f0)
      compositions(parts, 0, a * dst, [&] { out.push_back(kaledin_functor(src, dst, f0, parts)); });
  return out;
}

std::string to_string(const GroupoidMor& f) { return data_string(f.src, f.dst, f.data); }
std::string to_string(const KaledinFunctor& f) { return data_string(f.src, f.dst, f.data); }

}  // namespace peri
