#include "cubicff/cfftool.hpp"

#include <algorithm>
#include <ostream>

namespace cubicff {

namespace {

std::string modulus_str(const Field& F) {
  const Field Fp = make_field(F->p(), 1);
  return FqPoly(Fp, F->modulus()).str("t");
}

Json field_json(const Field& F) {
  return Json{{"p", F->p()}, {"n", F->n()}, {"q", F->q()}, {"modulus", modulus_str(F)}};
}

Json header(const std::string& command, const Field& F) {
  return Json{{"schema", kSchema}, {"command", command}, {"field", field_json(F)}};
}

[[noreturn]] void missing(const std::string& what) { fail(ErrorKind::ParseError, "missing " + what); }

RatFunc rat(const std::optional<std::string>& s, const Field& F, const std::string& flag) {
  if (!s) missing(flag);
  return parse_ratfunc(*s, F);
}

CanonicalKind family_kind(const std::string& family, const Field& F) {
  if (family.empty()) return F->p() == 3 ? CanonicalKind::ArtinSchreier : CanonicalKind::StandardForm;
  if (family == "standard") return CanonicalKind::StandardForm;
  if (family == "kummer") return CanonicalKind::PurelyCubic;
  if (family == "as") return CanonicalKind::ArtinSchreier;
  fail(ErrorKind::ParseError, "unknown family '" + family + "' (standard, kummer, as)");
}

bool has_raw(const CliOptions& o) { return o.e || o.f || o.g; }

Json input_json(const CliOptions& o, const Field& F) {
  if (o.a) return Json{{"family", to_string(family_kind(o.family, F))}, {"a", parse_ratfunc(*o.a, F).str()}};
  Json j;
  for (const auto& [name, v] : {std::pair{"e", o.e}, std::pair{"f", o.f}, std::pair{"g", o.g}})
    j[name] = v ? parse_ratfunc(*v, F).str() : "0";
  return j;
}

CubicInput raw_input(const CliOptions& o, const Field& F) {
  auto get = [&](const std::optional<std::string>& s) { return s ? parse_ratfunc(*s, F) : RatFunc(F); };
  return {get(o.e), get(o.f), get(o.g)};
}

// The canonical cubic named on the command line, normalizing raw coefficients.
CanonicalCubic input_cubic(const CliOptions& o, const Field& F) {
  if (o.a) {
    if (has_raw(o)) fail(ErrorKind::ParseError, "give either --a or --e/--f/--g, not both");
    return {family_kind(o.family, F), parse_ratfunc(*o.a, F), {}};
  }
  if (!has_raw(o)) missing("--a or --e/--f/--g");
  return normalize(raw_input(o, F));
}

Json canonical_json(const CanonicalCubic& c) {
  Json chain = Json::array();
  for (const auto& s : c.chain) chain.push_back(s.str());
  return Json{{"kind", to_string(c.kind)},
              {"param", c.param.str()},
              {"polynomial", ratpoly_str(c.polynomial())},
              {"chain", chain}};
}

Json closure_json(const ClosureDescriptor& d) {
  Json j{{"kind", to_string(d.kind)}, {"quadratic", ratpoly_str(d.quadratic, "Y")}};
  if (d.quadratic.size() == 3 && d.quadratic[1].is_zero() && d.quadratic[2].is_one())
    j["equation"] = "Y^2 = " + (-d.quadratic[0]).str();
  return j;
}

Json ramified_json(const std::vector<RamifiedPlace>& ram) {
  Json out = Json::array();
  for (const auto& r : ram) {
    Json j{{"place", r.place.str()}, {"degree", r.place.degree()}, {"diff_exponent", r.diff_exponent}};
    if (r.m) j["m"] = *r.m;
    out.push_back(j);
  }
  return out;
}

std::vector<Place> requested_places(const CliOptions& o, const Field& F, bool required) {
  std::vector<Place> out;
  for (const auto& s : o.places) out.push_back(parse_place(s, F));
  if (out.empty()) {
    if (required) missing("--place");
    out = places_up_to_degree(F, 1);
  }
  return out;
}

Json split_json(const CanonicalCubic& c, const Place& p) {
  const SplitResult r = splitting_type_detailed(c, p);
  const LocalDegrees d = local_degrees(r.type);
  return Json{{"place", p.str()}, {"type", to_string(r.type)}, {"rule", r.rule}, {"efr", {d.e, d.f, d.r}}};
}

Json basis_json(const IntegralBasis& b) {
  Json elems = Json::array();
  for (const auto& e : b.elems) elems.push_back(Json{{"num", {e.num[0].str(), e.num[1].str(), e.num[2].str()}}, {"den", e.den.str()}});
  Json aux = Json::object();
  for (const auto& [k, v] : b.aux) aux[k] = v.str();
  return Json{{"family", to_string(b.family)},
              {"param", b.param.str()},
              {"generator", ratpoly_str(b.gen_poly, "w")},
              {"w_over_y", b.gen_scale.str()},
              {"elements", elems},
              {"aux", aux},
              {"discriminant", basis_discriminant(b).str()},
              {"integral", basis_is_integral(b)}};
}

Json action_json(const CanonicalCubic& c) {
  const Field& F = c.field();
  switch (c.kind) {
    case CanonicalKind::StandardForm: {
      const ActionDescriptor d = galois_action(c.param);
      const CubicRing ring = d.ring();
      return Json{{"sigma", ring.str(d.sigma(), "z")},
                  {"sigma2", ring.str(d.sigma2(), "z")},
                  {"f", d.f.str()},
                  {"c2", d.c2.str()},
                  {"c1", d.c1.str()},
                  {"c0", d.c0.str()}};
    }
    case CanonicalKind::PurelyCubic: {
      auto xi = fq_cube_root_of_unity(F);
      if (!xi) fail(ErrorKind::NotGalois, "X^3 - b is Galois only when q = 1 mod 3");
      return Json{{"sigma", xi->str() + "*y"}, {"xi", xi->str()}};
    }
    case CanonicalKind::ArtinSchreier:
      return Json{{"sigma", "y+1"}};
    case CanonicalKind::Char3Separable: {
      auto as = char3_to_artin_schreier(c);
      if (!as) fail(ErrorKind::NotGalois, "X^3 + bX + b^2 is Galois only when -b is a square");
      return Json{{"model", canonical_json(*as)}, {"sigma", "y+1"}};
    }
    case CanonicalKind::Inseparable:
      break;
  }
  fail(ErrorKind::InseparableInput, "an inseparable cubic has no Galois action");
}

Json cmd_analyze(const CliOptions& o, const Field& F) {
  Json r = header("analyze", F);
  r["input"] = input_json(o, F);
  Json diag = Json::array();
  CanonicalCubic c;
  try {
    c = input_cubic(o, F);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ReducibleInput) throw;
    r["irreducible"] = false;
    diag.push_back(std::string("normalize: ") + e.what());
    r["diagnostics"] = diag;
    return r;
  }
  r["canonical"] = canonical_json(c);
  const bool irr = cubic_is_irreducible(c.polynomial());
  r["irreducible"] = irr;
  if (!irr) {
    diag.push_back("irreducible: rational root found");
    r["diagnostics"] = diag;
    return r;
  }
  const GaloisResult gr = is_galois(c);
  r["galois"] = gr.galois;
  r["closure"] = closure_json(gr.closure);
  if (!gr.galois) {
    r["diagnostics"] = diag;
    return r;
  }
  const bool constant = is_constant_extension(c);
  r["constant_extension"] = constant;
  if (!constant) {
    r["ramified"] = ramified_json(ramified_places(c));
    try {
      r["genus"] = genus(c);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisFailed) throw;
      r["genus"] = nullptr;
      diag.push_back(std::string("genus: ") + e.what());
    }
  }
  std::optional<IntegralBasis> basis;
  try {
    basis = order_basis(c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BasisUnavailable) throw;
    diag.push_back(std::string("basis: ") + e.what());
  }
  Json split = Json::array();
  for (const auto& p : requested_places(o, F, false)) {
    Json s = split_json(c, p);
    if (basis) {
      const SplitType oracle = p.is_infinity() ? split_via_order(c, p) : split_via_order(*basis, p);
      s["oracle"] = to_string(oracle);
      if (to_string(oracle) != s["type"]) diag.push_back("split: closed-form rule and order oracle disagree at " + p.str());
    }
    split.push_back(s);
  }
  r["splitting"] = split;
  r["basis"] = basis ? basis_json(*basis) : Json(nullptr);
  if (basis) diag.push_back("basis: discriminant and integrality recomputed from the trace form");
  try {
    r["action"] = action_json(c);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateA && e.kind() != ErrorKind::NotGalois) throw;
    r["action"] = nullptr;
    diag.push_back(std::string("action: ") + e.what());
  }
  r["diagnostics"] = diag;
  return r;
}

Json cmd_normalize(const CliOptions& o, const Field& F) {
  Json r = header("normalize", F);
  r["input"] = input_json(o, F);
  r["canonical"] = canonical_json(input_cubic(o, F));
  return r;
}

Json cmd_galois(const CliOptions& o, const Field& F) {
  Json r = header("galois", F);
  const CanonicalCubic c = input_cubic(o, F);
  const GaloisResult gr = is_galois(c);
  r["canonical"] = canonical_json(c);
  r["galois"] = gr.galois;
  r["closure"] = closure_json(gr.closure);
  if (gr.galois && c.kind == CanonicalKind::StandardForm) {
    try {
      const auto [A, B] = galois_witness(c.param);
      r["witness"] = Json{{"A", A.str()}, {"B", B.str()}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotGaloisShape) throw;
      r["witness"] = nullptr;
    }
  }
  return r;
}

Json cmd_irreducible(const CliOptions& o, const Field& F) {
  Json r = header("irreducible", F);
  CanonicalCubic c;
  try {
    c = input_cubic(o, F);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ReducibleInput) throw;
    r["irreducible"] = false;
    r["method"] = "rational_roots";
    return r;
  }
  r["canonical"] = canonical_json(c);
  const bool by_roots = cubic_is_irreducible(c.polynomial());
  if (c.kind == CanonicalKind::StandardForm && F->p() != 3) {
    const RatFunc& a = c.param;
    const bool degenerate = F->p() == 2 ? a.is_zero() : a * a == RatFunc::from_int(F, 4);
    std::optional<std::pair<FqPoly, FqPoly>> w;
    if (!degenerate) {
      try {
        w = galois_witness(a);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotGaloisShape) throw;
      }
    }
    if (w) {
      const bool irr = is_irreducible_standard(a);
      ensure(irr == by_roots, "norm-form cube test agrees with rational roots");
      r["irreducible"] = irr;
      r["method"] = "norm_form_cube_test";
      r["witness"] = Json{{"A", w->first.str()}, {"B", w->second.str()},
                          {"cube_test", cube_test_polynomial(w->first, w->second).str()}};
      return r;
    }
  }
  r["irreducible"] = by_roots;
  r["method"] = "rational_roots";
  return r;
}

Json cmd_construct(const CliOptions& o, const Field& F) {
  if (!o.A || !o.B) missing("--A and --B");
  const FqPoly A = parse_poly(*o.A, F), B = parse_poly(*o.B, F);
  Json r = header("construct", F);
  r["A"] = A.str();
  r["B"] = B.str();
  r["a"] = construct_galois_a(A, B).str();
  return r;
}

Json cmd_ramify(const CliOptions& o, const Field& F) {
  Json r = header("ramify", F);
  const CanonicalCubic c = input_cubic(o, F);
  r["canonical"] = canonical_json(c);
  r["ramified"] = ramified_json(ramified_places(c));
  return r;
}

Json cmd_genus(const CliOptions& o, const Field& F) {
  Json r = header("genus", F);
  const CanonicalCubic c = input_cubic(o, F);
  r["canonical"] = canonical_json(c);
  r["genus"] = genus(c);
  r["riemann_hurwitz"] = riemann_hurwitz_genus(ramified_places(c));
  return r;
}

Json cmd_split(const CliOptions& o, const Field& F) {
  Json r = header("split", F);
  const CanonicalCubic c = input_cubic(o, F);
  const auto places = requested_places(o, F, true);
  Json list = Json::array();
  for (const auto& p : places) list.push_back(split_json(c, p));
  if (list.size() == 1) {
    r["place"] = list[0]["place"];
    r["type"] = list[0]["type"];
    r["rule"] = list[0]["rule"];
  }
  r["splitting"] = list;
  return r;
}

Json cmd_valuations(const CliOptions& o, const Field& F) {
  Json r = header("valuations", F);
  const CanonicalCubic c = input_cubic(o, F);
  if (c.kind != CanonicalKind::StandardForm)
    fail(ErrorKind::NotStandardForm, "generator valuations are defined for X^3 - 3X - a");
  Json list = Json::array();
  for (const auto& p : requested_places(o, F, true)) {
    const GeneratorValuations g = generator_valuations(c.param, p);
    list.push_back(Json{{"place", p.str()}, {"v_a", valuation(c.param, p)}, {"rule", g.rule}, {"values", g.values}});
  }
  r["valuations"] = list;
  return r;
}

Json cmd_basis(const CliOptions& o, const Field& F) {
  Json r = header("basis", F);
  const CanonicalCubic c = input_cubic(o, F);
  r["canonical"] = canonical_json(c);
  r["basis"] = basis_json(order_basis(c));
  return r;
}

Json cmd_action(const CliOptions& o, const Field& F) {
  Json r = header("action", F);
  const CanonicalCubic c = input_cubic(o, F);
  r["canonical"] = canonical_json(c);
  r["action"] = action_json(c);
  return r;
}

Json cmd_equiv(const CliOptions& o, const Field& F) {
  Json r = header("equiv", F);
  const RatFunc a1 = rat(o.a1, F, "--a1"), a2 = rat(o.a2, F, "--a2");
  r["a1"] = a1.str();
  r["a2"] = a2.str();
  switch (family_kind(o.family, F)) {
    case CanonicalKind::StandardForm: {
      const auto pts = same_field_points(a1, a2);
      r["equivalent"] = !pts.empty();
      if (pts.empty()) break;
      r["phi"] = pts.front().phi.str();
      r["chi"] = pts.front().chi.str();
      Json all = Json::array();
      for (const auto& pt : pts) all.push_back(Json{{"phi", pt.phi.str()}, {"chi", pt.chi.str()}});
      r["points"] = all;
      const GeneratorTransform t = transform_generator(a1, pts.front());
      r["forward"] = t.forward.strs();
      r["inverse"] = t.inverse.strs();
      break;
    }
    case CanonicalKind::ArtinSchreier: {
      const auto s = as_same_field(a1, a2);
      r["equivalent"] = s.has_value();
      if (s) {
        r["j"] = s->first;
        r["b"] = s->second.str();
      }
      break;
    }
    case CanonicalKind::PurelyCubic: {
      const auto s = kummer_same_field(a1, a2);
      r["equivalent"] = s.has_value();
      if (s) {
        r["j"] = s->first;
        r["c"] = s->second.str();
      }
      break;
    }
    default:
      fail(ErrorKind::Internal, "unexpected family");
  }
  return r;
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> cmds{"analyze", "normalize", "galois", "irreducible", "construct", "ramify",
                                             "genus",   "split",     "basis",  "action",      "equiv",     "valuations"};
  return cmds;
}

Field field_from_options(const CliOptions& o) {
  if (o.q) {
    if (o.p || o.n || o.modulus) fail(ErrorKind::ParseError, "give either --q or --p/--n/--modulus");
    return make_field_q(*o.q);
  }
  if (!o.p) missing("--q or --p");
  const int n = o.n.value_or(1);
  if (o.modulus) return make_field(*o.p, n, parse_modulus(*o.modulus, *o.p));
  return make_field(*o.p, n);
}

Json run_command(const std::string& command, const CliOptions& o) {
  const Field F = field_from_options(o);
  if (command == "analyze") return cmd_analyze(o, F);
  if (command == "normalize") return cmd_normalize(o, F);
  if (command == "galois") return cmd_galois(o, F);
  if (command == "irreducible") return cmd_irreducible(o, F);
  if (command == "construct") return cmd_construct(o, F);
  if (command == "ramify") return cmd_ramify(o, F);
  if (command == "genus") return cmd_genus(o, F);
  if (command == "split") return cmd_split(o, F);
  if (command == "valuations") return cmd_valuations(o, F);
  if (command == "basis") return cmd_basis(o, F);
  if (command == "action") return cmd_action(o, F);
  if (command == "equiv") return cmd_equiv(o, F);
  fail(ErrorKind::ParseError, "unknown command '" + command + "'");
}

int exit_code_for(ErrorKind kind) {
  if (kind == ErrorKind::ParseError) return 2;
  if (kind == ErrorKind::Internal) return 1;
  return 3;
}

Json error_json(const std::string& command, ErrorKind kind, const std::string& message) {
  return Json{{"schema", kSchema}, {"command", command}, {"error", {{"kind", to_string(kind)}, {"message", message}}}};
}

int execute(const std::string& command, const CliOptions& o, std::ostream& out) {
  Json j;
  int code = 0;
  try {
    j = run_command(command, o);
  } catch (const Error& e) {
    j = error_json(command, e.kind(), e.what());
    code = exit_code_for(e.kind());
  }
  out << (o.pretty ? j.dump(2) : j.dump()) << '\n';
  return code;
}

}  // namespace cubicff
