#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "pericyclic/errors.hpp"
#include "pericyclic/json_io.hpp"

namespace peri {

namespace {

enum class Format { text, json };

struct Context {
  std::ostream& out;
  Format format = Format::text;
};

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

std::string label_text(const Label& l, const FiniteCategory* c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    os << (i ? "," : "");
    if (c) os << c->morphisms.at(static_cast<std::size_t>(l[i])).id;
    else os << l[i];
  }
  os << ")";
  return os.str();
}

mpz_class parse_integer(const std::string& s) {
  mpz_class out;
  if (s.empty() || out.set_str(s, 10) != 0) throw InputError("malformed integer '" + s + "'");
  return out;
}

Int parse_int(const std::string& s) {
  const mpz_class v = parse_integer(s);
  if (!v.fits_slong_p()) throw InputError("integer out of range '" + s + "'");
  return v.get_si();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) throw InputError("malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

// Digit lists: "[1, 0, -1]", "1,0,-1" or "1 0 -1".
std::vector<int> parse_digits(const std::string& text) {
  std::string s = text;
  for (char& ch : s)
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  std::istringstream is(s);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    const Int v = parse_int(tok);
    if (v < -1 || v > 1) throw InputError("digit " + tok + " is outside {-1, 0, 1}");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

// Inline JSON, or else a file holding JSON.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read '" + arg + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + arg + "': " + e.what());
  }
}

// name(a, b, ...) with integer arguments.
bool parse_call(const std::string& s, std::string& name, std::vector<Int>& args) {
  static const std::regex call(R"(^\s*([A-Za-z_]+)\s*\(([-0-9,\s]*)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, call)) return false;
  name = m[1];
  args.clear();
  std::string inner = m[2];
  std::replace(inner.begin(), inner.end(), ',', ' ');
  std::istringstream is(inner);
  std::string tok;
  while (is >> tok) args.push_back(parse_int(tok));
  return true;
}

void expect_args(const std::string& name, const std::vector<Int>& args, std::size_t n) {
  if (args.size() != n) throw InputError(name + " takes " + std::to_string(n) + " argument(s)");
}

ArcMap load_arc(const std::string& arg, const std::string& from) {
  std::string name;
  std::vector<Int> a;
  if (from == "arc" && parse_call(arg, name, a)) {
    using G = GeneratorSpec;
    if (name == "id" || name == "identity") return expect_args(name, a, 1), identity_arc(a[0]);
    if (name == "cyclic") return expect_args(name, a, 1), generator(G::cyclic(a[0]));
    if (name == "face") return expect_args(name, a, 2), generator(G::face(a[0], a[1]));
    if (name == "degeneracy") return expect_args(name, a, 2), generator(G::degeneracy(a[0], a[1]));
    if (name == "id_power") return expect_args(name, a, 2), generator(G::id_power(a[0], a[1]));
    if (name == "frobenius") return expect_args(name, a, 2), generator(G::frobenius(a[0], a[1]));
    throw InputError("unknown generator '" + name + "'");
  }
  const Json j = load_json(arg);
  if (from == "groupoid") return to_arc(groupoid_from_json(j));
  if (from == "kaledin") return to_arc(p_inverse(kaledin_from_json(j)));
  return arc_from_json(j);
}

PiMor load_pi(const std::string& arg) {
  std::string name;
  std::vector<Int> a;
  if (parse_call(arg, name, a)) {
    if (name == "chi") return expect_args(name, a, 3), chi(a[0], a[1], a[2]);
    if (name == "w") return expect_args(name, a, 3), w_morphism(a[0], a[1], a[2]);
    if (name == "id") return expect_args(name, a, 2), pi_identity({a[0], a[1]});
    throw InputError("unknown pericyclic generator '" + name + "'");
  }
  return pi_from_json(load_json(arg));
}

struct NerveOptions {
  std::string category;
  std::string table;
  Int levels = -1;
  Int subdivide = 1;
  bool fixed = false;
};

struct BuiltSet {
  std::optional<FiniteCategory> category;
  std::optional<TruncatedKCyclicSet> nerve;
  std::optional<TruncatedKCyclicSet> set;
};

BuiltSet build_set(const NerveOptions& o) {
  BuiltSet b;
  if (!o.table.empty()) {
    if (!o.category.empty()) throw InputError("give either --category or --table");
    b.set = cyclic_set_from_json(load_json(o.table));
    return b;
  }
  if (o.category.empty()) throw InputError("--category is required");
  if (o.levels < 0) throw InputError("--levels is required");
  if (o.subdivide < 1) throw InputError("--subdivide needs k >= 1");
  b.category = category_from_json(load_json(o.category));
  b.nerve = cyclic_nerve(*b.category, o.subdivide * (o.levels + 1) - 1);
  TruncatedKCyclicSet y = subdivide(*b.nerve, o.subdivide);
  if (o.fixed) y = fixed_points(y).set;
  b.set = std::move(y);
  return b;
}

void print_set(Context& ctx, const TruncatedKCyclicSet& y, const FiniteCategory* c) {
  if (ctx.format == Format::json) {
    ctx.out << to_json(y).dump() << "\n";
    return;
  }
  ctx.out << "k = " << y.k() << "\n";
  for (Int n = 0; n <= y.top(); ++n) {
    const CyclicLevel& lv = y.level(n);
    ctx.out << "level " << n << ": " << y.size(n) << " elements\n";
    for (std::size_t x = 0; x < lv.t.size(); ++x) {
      ctx.out << "  " << x << " " << label_text(lv.labels[x], c);
      std::vector<int> d, s;
      for (const auto& table : lv.d) d.push_back(table[x]);
      for (const auto& table : lv.s) s.push_back(table[x]);
      if (!d.empty()) ctx.out << " d=" << join_ints(d);
      if (!s.empty()) ctx.out << " s=" << join_ints(s);
      ctx.out << " t=" << lv.t[x] << "\n";
    }
  }
}

void print_bool(Context& ctx, bool b) { ctx.out << (b ? "true" : "false") << "\n"; }

template <class T>
void print_list(Context& ctx, const std::vector<T>& items) {
  if (ctx.format == Format::json) {
    Json arr = Json::array();
    for (const auto& x : items) arr.push_back(to_json(x));
    ctx.out << arr.dump() << "\n";
  } else {
    for (const auto& x : items) ctx.out << to_string(x) << "\n";
  }
}

template <class T>
void print_value(Context& ctx, const T& x) {
  ctx.out << (ctx.format == Format::json ? to_json(x).dump() : to_string(x)) << "\n";
}

void print_digits_and_value(Context& ctx, const TritVector& v) {
  if (ctx.format == Format::json) {
    ctx.out << Json{{"digits", to_json(v)}, {"value", decode(v).get_str()}}.dump() << "\n";
  } else {
    ctx.out << "digits: " << join_ints(v.to_ints()) << "\n" << "value: " << decode(v).get_str() << "\n";
  }
}

Divisor push_along(const Divisor& d, const Json& m) {
  const PointedSet dst = pointed_set(m.at("dst").get<std::vector<std::string>>(), m.at("basepoint").get<std::string>());
  std::vector<int> images(static_cast<std::size_t>(d.carrier.size()), dst.basepoint);
  for (const auto& [x, y] : m.at("images").items()) {
    const int i = d.carrier.index_of(x), j = dst.index_of(y.get<std::string>());
    if (i < 0 || j < 0) throw InputError("map mentions unknown element '" + x + "'");
    images[static_cast<std::size_t>(i)] = j;
  }
  return pushforward(pointed_map(d.carrier, dst, images), d);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with cyclic, epicyclic and pericyclic structures", "pericyclic"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  Context ctx{out};
  std::function<void()> action;
  std::vector<std::string> pos;

  // ternary
  auto* ternary = app.add_subcommand("ternary", "Balanced ternary arithmetic")->require_subcommand(1);
  std::string int_a, int_b;
  auto* t_digits = ternary->add_subcommand("digits", "Digits of an integer, least significant first");
  t_digits->add_option("n", int_a)->required();
  t_digits->callback([&] {
    action = [&] {
      const TritVector v = encode(parse_integer(int_a));
      ctx.out << (ctx.format == Format::json ? to_json(v).dump() : join_ints(v.to_ints())) << "\n";
    };
  });
  auto* t_value = ternary->add_subcommand("value", "Integer of a digit list");
  t_value->add_option("digits", pos)->required();
  t_value->callback([&] {
    action = [&] {
      std::string all;
      for (const auto& p : pos) all += p + " ";
      const TritVector v = TritVector::from_digits(parse_digits(all));
      ctx.out << (ctx.format == Format::json ? Json(decode(v).get_str()).dump() : decode(v).get_str()) << "\n";
    };
  });
  for (const char* op : {"add", "mul"}) {
    auto* sub = ternary->add_subcommand(op, std::string(op == std::string("add") ? "Sum" : "Product") + " of two integers via digits");
    sub->add_option("a", int_a)->required();
    sub->add_option("b", int_b)->required();
    const bool is_add = op == std::string("add");
    sub->callback([&, is_add] {
      action = [&, is_add] {
        const TritVector p = encode(parse_integer(int_a)), q = encode(parse_integer(int_b));
        print_digits_and_value(ctx, is_add ? add(p, q) : mul(p, q));
      };
    });
  }
  Int carry_n = 0;
  auto* t_carry = ternary->add_subcommand("carry-poly", "Reduced carry polynomial s_n over F_3");
  t_carry->add_option("n", carry_n)->required();
  t_carry->callback([&] {
    action = [&] {
      if (carry_n < 1) throw PreconditionError("carry polynomials start at n = 1");
      const CarryPolynomial p = carry_polynomial(static_cast<std::size_t>(carry_n));
      ctx.out << (ctx.format == Format::json ? to_json(p).dump() : p.to_string()) << "\n";
    };
  });

  // hom
  auto* hom = app.add_subcommand("hom", "Morphisms of the cyclic and epicyclic categories")->require_subcommand(1);
  Int src = 0, dst = 0, max_degree = 1;
  std::string from = "arc", to = "kaledin";
  auto* h_enum = hom->add_subcommand("enum", "List every morphism E_N -> E_M up to a degree");
  h_enum->add_option("N", src)->required();
  h_enum->add_option("M", dst)->required();
  h_enum->add_option("--max-degree", max_degree, "Largest degree listed")->capture_default_str();
  h_enum->callback([&] { action = [&] { print_list(ctx, enumerate_hom(src, dst, max_degree)); }; });
  auto add_from = [&](CLI::App* sub) {
    sub->add_option("--from", from, "Presentation of the inputs")->check(CLI::IsMember({"arc", "groupoid", "kaledin"}));
  };
  auto* h_compose = hom->add_subcommand("compose", "Composite of morphisms, outermost first");
  h_compose->add_option("maps", pos, "JSON, a file, or a generator like face(2,1)")->required();
  add_from(h_compose);
  h_compose->callback([&] {
    action = [&] {
      ArcMap acc = load_arc(pos.back(), from);
      for (auto it = pos.rbegin() + 1; it != pos.rend(); ++it) acc = compose(load_arc(*it, from), acc);
      print_value(ctx, acc);
    };
  });
  std::string one;
  auto* h_transpose = hom->add_subcommand("transpose", "Galois transpose of a degree-1 morphism");
  h_transpose->add_option("map", one)->required();
  add_from(h_transpose);
  h_transpose->callback([&] { action = [&] { print_value(ctx, transpose(load_arc(one, from))); }; });
  auto* h_decompose = hom->add_subcommand("decompose", "Simplicial word and rotation of a degree-1 morphism");
  h_decompose->add_option("map", one)->required();
  add_from(h_decompose);
  h_decompose->callback([&] {
    action = [&] {
      const CyclicDecomposition d = decompose_cyclic(load_arc(one, from));
      std::vector<std::string> word;
      for (const auto& g : d.simplicial_word) word.push_back(to_string(g));
      if (ctx.format == Format::json) {
        ctx.out << Json{{"rotation", d.rotation}, {"word", word}}.dump() << "\n";
      } else {
        ctx.out << "rotation: " << d.rotation << "\nword:";
        for (const auto& w : word) ctx.out << " " << w;
        ctx.out << "\n";
      }
    };
  });
  auto* h_convert = hom->add_subcommand("convert", "Translate between presentations");
  h_convert->add_option("map", one)->required();
  h_convert->add_option("--to", to)->required()->check(CLI::IsMember({"arc", "groupoid", "kaledin"}));
  add_from(h_convert);
  h_convert->callback([&] {
    action = [&] {
      const ArcMap f = load_arc(one, from);
      if (to == "arc") print_value(ctx, f);
      else if (to == "groupoid") print_value(ctx, from_arc(f));
      else print_value(ctx, p_functor(from_arc(f)));
    };
  });
  auto* h_classify = hom->add_subcommand("classify", "Vertical, horizontal and non-degenerate tests");
  h_classify->add_option("map", one)->required();
  add_from(h_classify);
  h_classify->callback([&] {
    action = [&] {
      const Classification c = classify(p_functor(from_arc(load_arc(one, from))));
      if (ctx.format == Format::json) {
        ctx.out << Json{{"vertical", c.vertical}, {"horizontal", c.horizontal}, {"nondegenerate", c.nondegenerate}}.dump()
                << "\n";
      } else {
        ctx.out << "vertical: " << std::boolalpha << c.vertical << "\nhorizontal: " << c.horizontal
                << "\nnondegenerate: " << c.nondegenerate << "\n";
      }
    };
  });

  // peri
  auto* peri = app.add_subcommand("peri", "The categories RF, S'RF and Pi")->require_subcommand(1);
  Int pa = 0, pb = 0, pc = 0;
  auto* p_rfhom = peri->add_subcommand("rf-hom", "Morphisms a -> b of RF");
  p_rfhom->add_option("a", pa)->required();
  p_rfhom->add_option("b", pb)->required();
  p_rfhom->callback([&] { action = [&] { print_list(ctx, rf_hom_enum(pa, pb)); }; });
  std::string law = "corrected";
  auto* p_srf = peri->add_subcommand("srf-compose", "Composite g o f in S'RF");
  p_srf->add_option("maps", pos, "g then f, as JSON or files")->required()->expected(2);
  p_srf->add_option("--law", law)->check(CLI::IsMember({"corrected", "legacy"}))->capture_default_str();
  p_srf->callback([&] {
    action = [&] {
      const SRFMor g = srf_from_json(load_json(pos[0])), f = srf_from_json(load_json(pos[1]));
      print_value(ctx, srf_compose(g, f, law == "legacy" ? CompositionLaw::legacy : CompositionLaw::corrected));
    };
  });
  auto* p_pi = peri->add_subcommand("pi-compose", "Composite g o f in Pi");
  p_pi->add_option("maps", pos, "g then f: JSON, files, chi(n,s,d), w(n,a,r) or id(n,a)")->required()->expected(2);
  p_pi->callback([&] {
    action = [&] {
      const PiMor gf = pi_compose(load_pi(pos[0]), load_pi(pos[1]));
      const bool fr_mod = gf.f.s == gf.h.degree();
      if (ctx.format == Format::json) {
        Json j = to_json(gf);
        j["fr_equals_mod"] = fr_mod;
        ctx.out << j.dump() << "\n";
      } else {
        ctx.out << to_string(gf) << "\nFr = Mod: " << (fr_mod ? "holds" : "fails") << "\n";
      }
    };
  });
  auto* p_chi = peri->add_subcommand("chi", "The morphism chi(n, s, d)");
  p_chi->add_option("n", pa)->required();
  p_chi->add_option("s", pb)->required();
  p_chi->add_option("d", pc)->required();
  p_chi->callback([&] { action = [&] { print_value(ctx, chi(pa, pb, pc)); }; });

  // nerve
  auto* nerve = app.add_subcommand("nerve", "Cyclic nerves of finite categories")->require_subcommand(1);
  NerveOptions nopt;
  auto add_nerve_options = [&](CLI::App* sub, bool allow_table) {
    sub->add_option("--category", nopt.category, "Category JSON file or inline JSON");
    sub->add_option("--levels", nopt.levels, "Top level of the output");
    sub->add_option("--subdivide", nopt.subdivide, "Edgewise subdivision factor k");
    sub->add_flag("--fixed", nopt.fixed, "Take C_k fixed points");
    if (allow_table) sub->add_option("--table", nopt.table, "A cyclic set as printed by build --format json");
  };
  auto* n_build = nerve->add_subcommand("build", "Level tables");
  add_nerve_options(n_build, false);
  n_build->callback([&] {
    action = [&] {
      const BuiltSet b = build_set(nopt);
      print_set(ctx, *b.set, b.category && nopt.subdivide == 1 && !nopt.fixed ? &*b.category : nullptr);
    };
  });
  auto* n_validate = nerve->add_subcommand("validate", "Check every relation");
  add_nerve_options(n_validate, true);
  int validate_code = 0;
  n_validate->callback([&] {
    action = [&] {
      const BuiltSet b = build_set(nopt);
      const auto report = validate(*b.set);
      if (ctx.format == Format::json) {
        ctx.out << Json{{"ok", report.empty()}, {"failures", report}}.dump() << "\n";
      } else if (report.empty()) {
        ctx.out << "OK\n";
      } else {
        for (const auto& line : report) ctx.out << line << "\n";
      }
      if (!report.empty()) validate_code = 3;
    };
  });
  Int bn = 0, ba = 1;
  auto* n_beta = nerve->add_subcommand("beta", "The set beta(n, a) of the nerve");
  add_nerve_options(n_beta, false);
  n_beta->add_option("n", bn)->required();
  n_beta->add_option("a", ba)->required();
  n_beta->callback([&] {
    action = [&] {
      if (nopt.subdivide != 1 || nopt.fixed) throw InputError("beta is taken on the plain nerve");
      const BuiltSet b = build_set(nopt);
      const Beta beta = Beta::for_nerve(*b.nerve);
      const PiObject x{bn, ba};
      if (bn < 0 || ba < 1) throw InputError("need n >= 0 and a >= 1");
      if (!beta.in_truncation(x)) throw PreconditionError("beta(n, a) needs level a(n+1)-1 within the truncation");
      const Int level = ba * (bn + 1) - 1;
      std::vector<std::string> labels;
      for (int e : beta.set(x)) labels.push_back(label_text(b.nerve->label(level, e), &*b.category));
      if (ctx.format == Format::json) {
        ctx.out << Json(labels).dump() << "\n";
      } else {
        for (const auto& l : labels) ctx.out << l << "\n";
      }
    };
  });

  // points
  auto* points = app.add_subcommand("points", "Points of the topos as supernatural numbers")->require_subcommand(1);
  std::string s1, s2;
  auto add_two = [&](const char* name, const char* help, const char* second) {
    auto* sub = points->add_subcommand(name, help);
    sub->add_option("S", s1)->required();
    sub->add_option(second, s2)->required();
    return sub;
  };
  add_two("equiv", "Same point of the quotient by positive rationals", "T")->callback([&] {
    action = [&] { print_bool(ctx, nhat_equivalent(parse_supernatural(s1), parse_supernatural(s2))); };
  });
  add_two("member", "Is q in the group of S", "q")->callback([&] {
    action = [&] { print_bool(ctx, q_membership(parse_supernatural(s1), parse_rational(s2))); };
  });
  add_two("contains", "Is n in the divisor set of S", "n")->callback([&] {
    action = [&] {
      const mpz_class n = parse_integer(s2);
      if (n < 1) throw InputError("n must be positive");
      print_bool(ctx, contains(parse_supernatural(s1), n));
    };
  });
  add_two("leq", "Inclusion of points", "T")->callback([&] {
    action = [&] { print_bool(ctx, point_leq(parse_supernatural(s1), parse_supernatural(s2))); };
  });
  add_two("join", "Exponentwise maximum", "T")->callback([&] {
    action = [&] { print_value(ctx, join(parse_supernatural(s1), parse_supernatural(s2))); };
  });
  add_two("rescale", "The point of q H", "q")->callback([&] {
    action = [&] { print_value(ctx, rescale(parse_supernatural(s1), parse_rational(s2))); };
  });

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Divisors on finite pointed sets")->require_subcommand(1);
  std::string div_arg, map_arg;
  auto print_divisor = [&](const Divisor& d) {
    const mpq_class n = l1_norm(d);
    if (ctx.format == Format::json) {
      Json j = to_json(d);
      j["norm"] = n.get_str();
      j["oinfty"] = oinfty_member(d);
      ctx.out << j.dump() << "\n";
    } else {
      ctx.out << to_string(d) << "\nnorm: " << n.get_str() << "\nO_infinity: " << (oinfty_member(d) ? "true" : "false")
              << "\n";
    }
  };
  auto* g_norm = gamma->add_subcommand("norm", "l1 norm and O_infinity membership");
  g_norm->add_option("divisor", div_arg)->required();
  g_norm->callback([&] { action = [&] { print_divisor(divisor_from_json(load_json(div_arg))); }; });
  auto* g_push = gamma->add_subcommand("push", "Pushforward along a pointed map");
  g_push->add_option("divisor", div_arg)->required();
  g_push->add_option("map", map_arg, R"(JSON {"dst": [...], "basepoint": "*", "images": {"x": "y"}})")->required();
  g_push->callback([&] {
    action = [&] {
      const Json m = load_json(map_arg);
      try {
        print_divisor(push_along(divisor_from_json(load_json(div_arg)), m));
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed map: ") + e.what());
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  ctx.format = format == "json" ? Format::json : Format::text;

  try {
    action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return validate_code;
}

}  // namespace peri
