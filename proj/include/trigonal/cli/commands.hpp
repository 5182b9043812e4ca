#pragma once

// Request handling for the trigonal command-line tool. A request is a JSON
// object {"cmd": ..., flags...}; the flags are the long option names with
// dashes, values as strings or JSON lists. Every response has the shape
// {"ok", "result", "errors": [{"code", "message", "guard"}]}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/cli/json_io.hpp"
#include "trigonal/cli/verify.hpp"
#include "trigonal/loci/classify.hpp"

namespace trigonal::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kInvalid = 2, kExcluded = 3, kIndeterminate = 4 };

struct Outcome {
  json response;
  int exit_code = kOk;
};

inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::NotGenusTwo:
    case Errc::DegenerateParameters:
    case Errc::PoleAtPoint:
    case Errc::JTwoZero:
    case Errc::SingularCubic:
    case Errc::CommonRoot:
    case Errc::RepeatedRoot:
    case Errc::DivisionByZero:
      return kExcluded;
    case Errc::UnsupportedSubcase:
      return kIndeterminate;
    case Errc::DataIntegrity:
    case Errc::CalibrationFailed:
      return kFailed;
    default:
      return kInvalid;
  }
}

inline json error_json(const std::string& code, const std::string& message, const std::string& guard = {}) {
  return {{"code", code}, {"message", message}, {"guard", guard.empty() ? json(nullptr) : json(guard)}};
}

inline Outcome success(json result) { return {{{"ok", true}, {"result", std::move(result)}, {"errors", json::array()}}, kOk}; }

inline Outcome failure(const Error& e, json result = nullptr) {
  return {{{"ok", false},
           {"result", std::move(result)},
           {"errors", json::array({error_json(std::string(errc_name(e.code())), e.message(), e.guard())})}},
          exit_code_for(e.code())};
}

namespace cmd {

inline FieldPtr field_of(const json& req) {
  if (!req.contains("field") || req.at("field").is_null()) return nullptr;
  return parse_field(req.at("field"));
}

inline const json& need(const json& req, const char* key) {
  if (!req.contains(key) || req.at(key).is_null()) throw Error(Errc::ParseError, std::string("missing --") + key);
  return req.at(key);
}

inline bool has(const json& req, const char* key) { return req.contains(key) && !req.at(key).is_null(); }

inline SexticForm<NF> sextic_arg(const json& req, const FieldPtr& F) {
  SexticForm<NF> f(parse_scalars(need(req, "sextic"), F, 7, "--sextic"));
  if (f.is_zero()) throw Error(Errc::ZeroForm, "the zero form has no invariants");
  return f;
}

template <class T>
json triple_json(const AbsoluteTriple<T>& i) {
  return json::array({to_json(i.i1), to_json(i.i2), to_json(i.i3)});
}

inline json igusa_json(const IgusaTuple<NF>& J) {
  return json::array({to_json(J.J2), to_json(J.J4), to_json(J.J6), to_json(J.J10)});
}

inline json sextic_json(const SexticForm<NF>& f) { return to_json(std::vector<NF>(f.a.begin(), f.a.end())); }

inline Outcome invariants(const json& req) {
  FieldPtr F = field_of(req);
  IgusaTuple<NF> J = igusa_invariants(sextic_arg(req, F));
  json r{{"J", igusa_json(J)}};
  if (J.J10.is_zero()) {
    r["genus2"] = false;
    return failure(Error(Errc::NotGenusTwo, "J10 = 0: the sextic has a repeated root", "J10=0"), r);
  }
  if (!J.J2.is_zero()) {
    r["i"] = triple_json(absolute_invariants(J));
  } else if (!J.J4.is_zero() && !J.J6.is_zero()) {
    A1A2Pair<NF> a = a_invariants(J);
    r["a"] = json::array({to_json(a.a1), to_json(a.a2)});
  }
  r["genus2"] = true;
  return success(r);
}

inline Outcome from_ab(const json& req) {
  FieldPtr F = field_of(req);
  ABPoint<NF> p{parse_scalar(need(req, "a"), F), parse_scalar(need(req, "b"), F)};
  NF delta = delta_ab(p);
  SexticForm<NF> f = sextic_from_ab(p);  // throws Delta=0
  UVPoint<NF> uv = uv_from_ab(p);
  IgusaTuple<NF> J = igusa_invariants(f);
  json d;
  json guards = json::object();
  d["a"] = to_json(p.a);
  d["b"] = to_json(p.b);
  d["u"] = to_json(uv.u);
  d["v"] = to_json(uv.v);
  d["delta"] = to_json(delta);
  d["sextic"] = sextic_json(f);
  d["J"] = igusa_json(J);
  // A field is null when the point is on one of its excluded loci; `guards`
  // names the locus.
  auto field = [&](const char* key, auto&& compute) {
    try {
      d[key] = compute();
    } catch (const Error& e) {
      d[key] = nullptr;
      guards[key] = e.guard().empty() ? std::string(errc_name(e.code())) : e.guard();
    }
  };
  field("i", [&] { return triple_json(absolute_invariants(J)); });
  // The (u, v) formulas need v != 0, v != 27 and the discriminant factor != 0.
  std::string uv_guard;
  if (uv.v.is_zero()) uv_guard = "v=0";
  else if ((uv.v - NF(Rational(27))).is_zero()) uv_guard = "v=27";
  else if (trigonal::detail::at(formulas::den_uv(), uv.u, uv.v).is_zero()) uv_guard = "Delta=0";
  auto uv_field = [&](const char* key, auto&& compute) {
    if (uv_guard.empty()) return field(key, compute);
    d[key] = nullptr;
    guards[key] = uv_guard;
  };
  uv_field("r1", [&] { return to_json(r_from_uv(uv).r1); });
  uv_field("r2", [&] { return to_json(r_from_uv(uv).r2); });
  uv_field("beta", [&] {
    UVPoint<NF> b = beta(uv);
    return json{{"u", to_json(b.u)}, {"v", to_json(b.v)}};
  });
  uv_field("j1", [&] { return to_json(j_invariants(uv).j1); });
  uv_field("j2", [&] { return to_json(j_invariants(uv).j2); });
  field("subfield_cubic", [&] {
    EllipticCubic<NF> e = subfield_cubic(p);
    return json{{"c2", to_json(e.c2)}, {"c1", to_json(e.c1)}, {"c0", to_json(e.c0)}};
  });
  d["guards"] = guards;
  return success(d);
}

inline json classification_json(const Classification& c) {
  return {{"e3", c.e3 ? json(*c.e3) : json(nullptr)},
          {"branch_case", std::string(branch_case_name(c.branch_case))},
          {"notes", c.notes},
          {"aut", c.aut},
          {"special_point", c.special_point ? json(*c.special_point) : json(nullptr)}};
}

inline Outcome classify(const json& req) {
  FieldPtr F = field_of(req);
  int given = has(req, "sextic") + has(req, "i") + has(req, "ab") + has(req, "uv");
  if (given != 1) throw Error(Errc::ParseError, "give exactly one of --sextic, --i, --ab, --uv");
  Classification c;
  if (has(req, "sextic")) {
    c = classify_e3(sextic_arg(req, F));
  } else if (has(req, "i")) {
    auto v = parse_scalars(req.at("i"), F, 3, "--i");
    c = classify_absolute(AbsoluteTriple<NF>{v[0], v[1], v[2]});
  } else if (has(req, "ab")) {
    auto v = parse_scalars(req.at("ab"), F, 2, "--ab");
    c = classify_e3(sextic_from_ab(ABPoint<NF>{v[0], v[1]}));
  } else {
    auto v = parse_scalars(req.at("uv"), F, 2, "--uv");
    c = classify_e3(sextic_from_uv(UVPoint<NF>{v[0], v[1]}));
  }
  json r = classification_json(c);
  if (!c.indeterminate()) return success(r);
  Outcome o{{{"ok", false},
             {"result", r},
             {"errors", json::array({error_json("Indeterminate", c.notes.empty() ? "e3 is not determined" : c.notes[0])})}},
            kIndeterminate};
  return o;
}

inline Outcome beta_cmd(const json& req) {
  FieldPtr F = field_of(req);
  auto v = parse_scalars(need(req, "uv"), F, 2, "--uv");
  UVPoint<NF> b = beta(UVPoint<NF>{v[0], v[1]});
  return success({{"u", to_json(b.u)}, {"v", to_json(b.v)}});
}

template <class S>
json residual_json(const LocusResidual<S>& r) {
  return {{"locus", std::string(locus_name(r.id))},
          {"value", to_json(r.value)},
          {"on_locus", r.on_locus()},
          {"sqrt6_split", r.sqrt6_split}};
}

inline Outcome locus(const json& req) {
  FieldPtr F = field_of(req);
  const std::string which = need(req, "which").get<std::string>();
  const json& pt = need(req, "point");
  std::vector<LocusResidual<NF>> rs;
  if (which == "l3") {
    auto v = parse_scalars(pt, F, 4, "--point (J2, J4, J6, J10)");
    rs.push_back(l3_residual(IgusaTuple<NF>{v[0], v[1], v[2], v[3]}));
  } else if (which == "branch") {
    auto v = parse_scalars(pt, F, 0, "--point (i1, i2[, i3])");
    if (v.size() != 2 && v.size() != 3) throw Error(Errc::ParseError, "--point: expected i1, i2 or i1, i2, i3");
    rs.push_back(branch_residual(AbsoluteTriple<NF>{v[0], v[1], v.size() == 3 ? v[2] : NF(Rational(0))}));
  } else if (which == "deg") {
    auto v = parse_scalars(pt, F, 3, "--point (i1, i2, i3)");
    rs.push_back(degenerate_residual(AbsoluteTriple<NF>{v[0], v[1], v[2]}));
  } else if (which == "ram" || which == "iso" || which == "deg-partner") {
    auto v = parse_scalars(pt, F, 2, "--point (u, v)");
    UVPoint<NF> p{v[0], v[1]};
    rs.push_back(which == "ram"   ? ramification_residual(p)
                 : which == "iso" ? iso_subfield_residual(p)
                                  : degenerate_partner_residual(p));
  } else if (which == "j2zero") {
    auto v = parse_scalars(pt, F, 2, "--point (a1, a2)");
    auto [first, second] = j2zero_residuals(A1A2Pair<NF>{v[0], v[1]});
    rs.push_back(first);
    rs.push_back(second);
  } else {
    throw Error(Errc::ParseError, "--which must be one of l3, branch, ram, iso, deg, deg-partner, j2zero");
  }
  json arr = json::array();
  bool any = false;
  for (const auto& r : rs) {
    arr.push_back(residual_json(r));
    any = any || r.on_locus();
  }
  return success({{"which", which}, {"on_locus", any}, {"residuals", arr}});
}

inline Outcome special_points_cmd(const json&) {
  json arr = json::array();
  for (const auto& p : special_points()) {
    json e{{"id", p.id}, {"kind", p.kind}, {"field", p.field ? field_json(*p.field) : json(nullptr)}};
    json uv = json::array();
    for (const auto& x : p.uv) uv.push_back(json::array({to_json(x.u), to_json(x.v)}));
    e["uv"] = uv;
    e["i"] = p.i ? triple_json(*p.i) : json(nullptr);
    e["a12"] = p.a12 ? json::array({to_json(p.a12->a1), to_json(p.a12->a2)}) : json(nullptr);
    e["e3"] = p.e3 ? json(*p.e3) : json(nullptr);
    e["aut"] = p.aut;
    e["genus2"] = p.genus2;
    e["source"] = p.source;
    e["notes"] = p.notes;
    arr.push_back(e);
  }
  return success({{"points", arr}});
}

inline Outcome verify(const json& req) {
  VerifyOptions o;
  if (has(req, "suite")) o.suite = req.at("suite").get<std::string>();
  if (o.suite != "all" && o.suite != "symbolic" && o.suite != "numeric")
    throw Error(Errc::ParseError, "--suite must be all, symbolic or numeric");
  auto integer = [&](const char* key, long long dflt) -> long long {
    if (!has(req, key)) return dflt;
    const json& j = req.at(key);
    if (j.is_number_integer()) return j.get<long long>();
    try {
      return std::stoll(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, std::string("--") + key + " must be an integer");
    }
  };
  long long samples = integer("samples", o.samples);
  if (samples < 0) throw Error(Errc::ParseError, "--samples must be >= 0");
  o.samples = static_cast<int>(samples);
  o.seed = static_cast<std::uint64_t>(integer("seed", 0));
  const bool timings = has(req, "timings") && req.at("timings").get<bool>();
  json props = json::array();
  bool all = true;
  long total = 0;
  for (const auto& p : run_verify(o)) {
    json e{{"name", p.name}, {"suite", p.suite}, {"passed", p.passed()}, {"checks", p.checks}, {"failures", p.failures}};
    if (timings) e["ms"] = static_cast<long long>(p.ms + 0.5);
    props.push_back(e);
    all = all && p.passed();
    total += p.checks;
  }
  json r{{"suite", o.suite}, {"samples", o.samples}, {"seed", o.seed}, {"passed", all}, {"checks", total},
         {"properties", props}};
  if (all) return success(r);
  return {{{"ok", false}, {"result", r}, {"errors", json::array({error_json("VerifyFailed", "some properties failed")})}},
          kFailed};
}

}  // namespace cmd

// Runs one request; never throws.
inline Outcome handle(const json& req) {
  try {
    if (!req.is_object() || !req.contains("cmd") || !req.at("cmd").is_string())
      throw Error(Errc::ParseError, "a request is an object with a string 'cmd'");
    const std::string c = req.at("cmd").get<std::string>();
    if (c == "invariants") return cmd::invariants(req);
    if (c == "from-ab") return cmd::from_ab(req);
    if (c == "classify") return cmd::classify(req);
    if (c == "beta") return cmd::beta_cmd(req);
    if (c == "locus") return cmd::locus(req);
    if (c == "special-points") return cmd::special_points_cmd(req);
    if (c == "verify") return cmd::verify(req);
    throw Error(Errc::ParseError, "unknown command '" + c + "'");
  } catch (const Error& e) {
    return failure(e);
  } catch (const json::exception& e) {
    return failure(Error(Errc::ParseError, e.what()));
  } catch (const std::exception& e) {
    Outcome o = failure(Error(Errc::PreconditionViolated, e.what()));
    o.response["errors"][0]["code"] = "Internal";
    o.exit_code = kFailed;
    return o;
  }
}

}  // namespace trigonal::cli
