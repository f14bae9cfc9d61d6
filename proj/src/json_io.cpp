#include "pericyclic/json_io.hpp"

#include <algorithm>

#include "pericyclic/errors.hpp"

namespace peri {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

// Integers may be JSON numbers or decimal strings.
mpz_class big(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw InputError("malformed integer " + j.dump());
    return out;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Json pair(Int n, Int a) { return Json::array({n, a}); }

PiObject object(const Json& j, const char* key) {
  const auto v = field<std::vector<Int>>(j, key);
  if (v.size() != 2) throw InputError(std::string("field '") + key + "' must be a pair [n, a]");
  return {v[0], v[1]};
}

}  // namespace

Json to_json(const TritVector& v) { return v.to_ints(); }

Json to_json(const CarryPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", std::vector<int>(e.begin(), e.end())}, {"coeff", c}});
  return out;
}

Json to_json(const ArcMap& f) {
  return {{"src_period", f.src_period()}, {"dst_period", f.dst_period()}, {"degree", f.degree()}, {"values", f.values()}};
}

Json to_json(const GroupoidMor& f) {
  return {{"src", f.src}, {"dst", f.dst}, {"f0", f.data.f0}, {"lengths", f.data.lengths}};
}

Json to_json(const KaledinFunctor& f) {
  return {{"src", f.src}, {"dst", f.dst}, {"f0", f.data.f0}, {"lengths", f.data.lengths}};
}

Json to_json(const RFMor& f) { return {{"src", f.src}, {"dst", f.dst}, {"r", f.r}, {"s", f.s}}; }

Json to_json(const RationalAngle& a) { return {{"num", a.num()}, {"den", a.den()}}; }

Json to_json(const SRFMor& f) {
  Json out = to_json(f.rf);
  out["angle"] = to_json(f.angle);
  return out;
}

Json to_json(const PiMor& p) {
  return {{"src", pair(p.src.n, p.src.a)}, {"dst", pair(p.dst.n, p.dst.a)}, {"h", to_json(p.h)}, {"f", to_json(p.f)}};
}

Json to_json(const TruncatedKCyclicSet& y) {
  Json levels = Json::array();
  for (Int n = 0; n <= y.top(); ++n) {
    const CyclicLevel& lv = y.level(n);
    levels.push_back({{"level", n}, {"size", lv.t.size()}, {"elements", lv.labels}, {"d", lv.d}, {"s", lv.s}, {"t", lv.t}});
  }
  return {{"k", y.k()}, {"levels", levels}};
}

Json to_json(const Divisor& d) {
  Json values = Json::array();
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (sgn(d.values[i]) == 0) continue;
    values.push_back({{"element", d.carrier.elements[i]},
                      {"num", d.values[i].get_num().get_str()},
                      {"den", d.values[i].get_den().get_str()}});
  }
  return {{"basepoint", d.carrier.elements[static_cast<std::size_t>(d.carrier.basepoint)]}, {"values", values}};
}

Json to_json(const Supernatural& s) {
  Json ex = Json::array();
  for (const auto& [p, e] : s.exceptional()) ex.push_back({{"prime", std::to_string(p)}, {"exponent", to_string(e)}});
  return {{"default", s.infinite_default() ? "inf" : "0"}, {"exceptional", ex}};
}

ArcMap arc_from_json(const Json& j) {
  return ArcMap::normalize(field<std::vector<Int>>(j, "values"), field<Int>(j, "src_period"),
                           field<Int>(j, "dst_period"), field<Int>(j, "degree"));
}

GroupoidMor groupoid_from_json(const Json& j) {
  return groupoid_mor(field<Int>(j, "src"), field<Int>(j, "dst"), field<Int>(j, "f0"),
                      field<std::vector<Int>>(j, "lengths"));
}

KaledinFunctor kaledin_from_json(const Json& j) {
  return kaledin_functor(field<Int>(j, "src"), field<Int>(j, "dst"), field<Int>(j, "f0"),
                         field<std::vector<Int>>(j, "lengths"));
}

RFMor rf_from_json(const Json& j) {
  return rf_mor(field<Int>(j, "src"), field<Int>(j, "dst"), field<Int>(j, "r"), field<Int>(j, "s"));
}

SRFMor srf_from_json(const Json& j) {
  const Json angle = field<Json>(j, "angle");
  return {RationalAngle(field<Int>(angle, "num"), field<Int>(angle, "den")), rf_from_json(j)};
}

PiMor pi_from_json(const Json& j) {
  return pi_mor(object(j, "src"), object(j, "dst"), arc_from_json(field<Json>(j, "h")), rf_from_json(field<Json>(j, "f")));
}

FiniteCategory category_from_json(const Json& j) {
  const auto objects = field<std::vector<std::string>>(j, "objects");
  std::vector<MorphismSpec> mors;
  for (const auto& m : field<Json>(j, "morphisms"))
    mors.push_back({field<std::string>(m, "id"), field<std::string>(m, "src"), field<std::string>(m, "dst")});
  std::vector<std::pair<std::string, std::string>> ids;
  const Json identities = field<Json>(j, "identities");
  if (identities.is_object()) {
    for (const auto& [o, m] : identities.items()) {
      if (!m.is_string()) throw InputError("identities must map objects to morphism ids");
      ids.emplace_back(o, m.get<std::string>());
    }
  } else if (identities.is_array()) {
    for (const auto& p : identities) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw InputError("identities entries must be [object, morphism]");
      ids.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  } else {
    throw InputError("identities must be an object or an array");
  }
  std::vector<std::tuple<std::string, std::string, std::string>> comp;
  for (const auto& c : field<Json>(j, "composition")) {
    if (!c.is_array() || c.size() != 3 || !c[0].is_string() || !c[1].is_string() || !c[2].is_string())
      throw InputError("composition entries must be [g, f, gf]");
    comp.emplace_back(c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>());
  }
  return make_category(objects, mors, ids, comp);
}

TruncatedKCyclicSet cyclic_set_from_json(const Json& j) {
  std::vector<CyclicLevel> levels;
  for (const auto& lv : field<Json>(j, "levels")) {
    CyclicLevel c;
    c.t = field<std::vector<int>>(lv, "t");
    if (lv.contains("elements")) c.labels = field<std::vector<Label>>(lv, "elements");
    else c.labels.resize(c.t.size());
    if (lv.contains("d")) c.d = field<std::vector<std::vector<int>>>(lv, "d");
    if (lv.contains("s")) c.s = field<std::vector<std::vector<int>>>(lv, "s");
    levels.push_back(std::move(c));
  }
  if (levels.empty()) throw InputError("a cyclic set needs at least one level");
  return TruncatedKCyclicSet(j.contains("k") ? field<Int>(j, "k") : 1, std::move(levels));
}

Divisor divisor_from_json(const Json& j) {
  const auto basepoint = field<std::string>(j, "basepoint");
  std::vector<std::string> elements{basepoint};
  std::vector<mpq_class> values{0};
  if (j.contains("elements")) {
    for (const auto& e : field<std::vector<std::string>>(j, "elements"))
      if (e != basepoint) {
        elements.push_back(e);
        values.emplace_back(0);
      }
  }
  for (const auto& v : field<Json>(j, "values")) {
    const auto name = field<std::string>(v, "element");
    const mpz_class den = big(field<Json>(v, "den"));
    if (den <= 0) throw InputError("denominators must be positive");
    mpq_class q(big(field<Json>(v, "num")), den);
    q.canonicalize();
    auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) {
      elements.push_back(name);
      values.push_back(q);
    } else {
      values[static_cast<std::size_t>(it - elements.begin())] += q;
    }
  }
  return divisor(pointed_set(elements, basepoint), values);
}

Supernatural supernatural_from_json(const Json& j) {
  const auto def = field<std::string>(j, "default");
  if (def != "0" && def != "inf") throw InputError("default must be \"0\" or \"inf\"");
  std::map<std::uint64_t, Exponent> ex;
  for (const auto& e : field<Json>(j, "exceptional")) {
    const mpz_class p = big(field<Json>(e, "prime"));
    if (!p.fits_ulong_p()) throw InputError("prime out of range");
    const Json exp = field<Json>(e, "exponent");
    if (exp.is_string() && exp.get<std::string>() == "inf") {
      ex.insert_or_assign(p.get_ui(), Exponent::infinity());
    } else {
      const mpz_class v = big(exp);
      if (!v.fits_slong_p() || v < 0) throw InputError("exponent out of range");
      ex.insert_or_assign(p.get_ui(), Exponent(v.get_si()));
    }
  }
  return Supernatural(std::move(ex), def == "inf");
}

}  // namespace peri
