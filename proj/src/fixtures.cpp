#include "ncalg/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ncalg/points.hpp"
#include "ncalg/regcheck.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError(0, path + ": " + what);
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& path, const std::string& where) {
  if (!j.is_object()) bad(path, where + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) bad(path, "unknown field '" + k + "' in " + where);
}

std::string as_string(const json& j, const std::string& path, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  bad(path, what + " must be a string");
}

std::vector<std::string> string_list(const json& j, const std::string& path, const std::string& what) {
  if (!j.is_array()) bad(path, what + " must be a list");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, path, what));
  return out;
}

Rational parse_rational(const std::string& s, const std::string& path) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    bad(path, "bad rational '" + s + "' in field.min_poly");
  }
}

}  // namespace

FieldPtr Fixture::field() const {
  if (min_poly.size() == 2) return NumberField::rationals();
  return std::make_shared<const NumberField>(min_poly, field_generator);
}

Fixture parse_fixture(const std::string& text, const std::string& path) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, path + ": " + e.what());
  }
  check_keys(j, {"format", "version", "label", "kind", "field", "generators", "relations", "parameters", "constraints",
                 "nonzero", "parts", "expectations"},
             path, "document");
  if (j.value("format", "") != kPresentationFormat) bad(path, std::string("format must be \"") + kPresentationFormat + "\"");
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != kPresentationVersion)
    bad(path, "unsupported version");
  Fixture f;
  f.path = path;
  if (!j.contains("label") || !j.contains("generators") || !j.contains("relations"))
    bad(path, "label, generators and relations are required");
  f.label = as_string(j["label"], path, "label");
  f.kind = j.contains("kind") ? as_string(j["kind"], path, "kind") : "";
  if (j.contains("field")) {
    const auto& fj = j["field"];
    check_keys(fj, {"min_poly", "generator"}, path, "field");
    if (fj.contains("min_poly")) {
      f.min_poly.clear();
      for (const auto& s : string_list(fj["min_poly"], path, "field.min_poly")) f.min_poly.push_back(parse_rational(s, path));
      if (f.min_poly.size() < 2 || f.min_poly.back() != 1) bad(path, "field.min_poly must be monic of degree >= 1");
    }
    if (fj.contains("generator")) f.field_generator = as_string(fj["generator"], path, "field.generator");
  }
  f.generators = string_list(j["generators"], path, "generators");
  f.relations = string_list(j["relations"], path, "relations");
  if (j.contains("parameters") && !j["parameters"].is_object()) bad(path, "parameters must be an object");
  if (j.contains("parameters"))
    for (const auto& [k, v] : j["parameters"].items()) f.parameters.emplace_back(k, as_string(v, path, "parameter " + k));
  if (j.contains("constraints")) f.constraints = string_list(j["constraints"], path, "constraints");
  if (j.contains("nonzero")) f.nonzero = string_list(j["nonzero"], path, "nonzero");
  if (j.contains("parts")) {
    const auto& pj = j["parts"];
    check_keys(pj, {"A", "B", "C"}, path, "parts");
    for (const auto& [role, ref] : pj.items()) {
      check_keys(ref, {"fixture", "parameters"}, path, "parts." + role);
      PartReference pr;
      pr.fixture = as_string(ref.at("fixture"), path, "parts fixture");
      if (ref.contains("parameters"))
        for (const auto& [k, v] : ref["parameters"].items()) pr.parameters[k] = as_string(v, path, "part parameter");
      f.parts[role] = pr;
    }
  }
  if (j.contains("expectations")) {
    const auto& ej = j["expectations"];
    check_keys(ej, {"hilbert", "normalizing_sequence", "compatible_count", "regular", "no_AnotC_modules"}, path,
               "expectations");
    if (ej.contains("hilbert"))
      for (const auto& x : ej["hilbert"]) {
        if (!x.is_number_integer()) bad(path, "hilbert entries must be integers");
        f.expect.hilbert.push_back(x.get<long>());
      }
    if (ej.contains("normalizing_sequence"))
      f.expect.normalizing_sequence = string_list(ej["normalizing_sequence"], path, "normalizing_sequence");
    if (ej.contains("compatible_count")) {
      const auto& c = ej["compatible_count"];
      if (c.is_string() && c.get<std::string>() == "infinite") {
        f.expect.compatible_infinite = true;
      } else if (c.is_number_integer()) {
        f.expect.compatible_count = c.get<long>();
      } else {
        bad(path, "compatible_count must be an integer or \"infinite\"");
      }
    }
    if (ej.contains("regular")) f.expect.regular = ej["regular"].get<bool>();
    if (ej.contains("no_AnotC_modules")) f.expect.no_AnotC_modules = ej["no_AnotC_modules"].get<bool>();
  }
  return f;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str(), path);
}

std::string fixture_to_json(const Fixture& f) {
  json j;
  j["format"] = kPresentationFormat;
  j["version"] = kPresentationVersion;
  j["label"] = f.label;
  if (!f.kind.empty()) j["kind"] = f.kind;
  if (f.min_poly.size() > 2) {
    json mp = json::array();
    for (const auto& c : f.min_poly) mp.push_back(c.get_str());
    j["field"] = {{"min_poly", mp}, {"generator", f.field_generator}};
  }
  j["generators"] = f.generators;
  if (!f.parameters.empty()) {
    json p = json::object();
    for (const auto& [k, v] : f.parameters) p[k] = v;
    j["parameters"] = p;
  }
  if (!f.constraints.empty()) j["constraints"] = f.constraints;
  if (!f.nonzero.empty()) j["nonzero"] = f.nonzero;
  j["relations"] = f.relations;
  if (!f.parts.empty()) {
    json parts = json::object();
    for (const auto& [role, ref] : f.parts) {
      json m = json::object();
      for (const auto& [k, v] : ref.parameters) m[k] = v;
      parts[role] = {{"fixture", ref.fixture}, {"parameters", m}};
    }
    j["parts"] = parts;
  }
  json e = json::object();
  if (!f.expect.hilbert.empty()) e["hilbert"] = f.expect.hilbert;
  if (!f.expect.normalizing_sequence.empty()) e["normalizing_sequence"] = f.expect.normalizing_sequence;
  if (f.expect.compatible_infinite) e["compatible_count"] = "infinite";
  if (f.expect.compatible_count) e["compatible_count"] = *f.expect.compatible_count;
  if (f.expect.regular) e["regular"] = *f.expect.regular;
  if (f.expect.no_AnotC_modules) e["no_AnotC_modules"] = true;
  if (!e.empty()) j["expectations"] = e;
  return j.dump(2) + "\n";
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
  std::vector<Fixture> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") out.push_back(load_fixture(entry.path().string()));
  std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.label < b.label; });
  return out;
}

const Fixture* find_fixture(const std::vector<Fixture>& set, const std::string& label) {
  for (const auto& f : set)
    if (f.label == label) return &f;
  return nullptr;
}

namespace {

void check_constraints(const std::string& label, const std::vector<std::string>& zero,
                       const std::vector<std::string>& nonzero, const FieldPtr& field, const ParameterMap& pm) {
  for (const auto& c : zero) {
    const FieldElement v = parse_scalar(c, field, pm);
    if (!v.is_zero())
      throw Error(ErrorCode::ConstraintViolated, label + ": " + c + " = 0 fails (value " + v.to_string() + ")");
  }
  for (const auto& c : nonzero) {
    const FieldElement v = parse_scalar(c, field, pm);
    if (v.is_zero()) throw Error(ErrorCode::ConstraintViolated, label + ": " + c + " != 0 fails");
  }
}

}  // namespace

ParameterMap resolve_parameters(const Fixture& f, const std::map<std::string, std::string>& overrides,
                                const FieldPtr& field_in) {
  const FieldPtr field = field_in ? field_in : f.field();
  for (const auto& [k, v] : overrides)
    if (std::none_of(f.parameters.begin(), f.parameters.end(), [&](const auto& p) { return p.first == k; }))
      throw Error(ErrorCode::InvalidArgument, f.label + " has no parameter '" + k + "'");
  ParameterMap pm;
  for (const auto& [name, literal] : f.parameters) {
    auto it = overrides.find(name);
    pm[name] = parse_scalar(it != overrides.end() ? it->second : literal, field, pm);
  }
  check_constraints(f.label, f.constraints, f.nonzero, field, pm);
  return pm;
}

AlgebraPresentation instantiate(const Fixture& f, const std::map<std::string, std::string>& overrides,
                                const FieldPtr& field_in) {
  const FieldPtr field = field_in ? field_in : f.field();
  const ParameterMap pm = resolve_parameters(f, overrides, field);
  auto ring = make_ring(f.generators, field);
  AlgebraPresentation P{ring, {}, f.label};
  for (const auto& r : f.relations) P.relations.push_back(parse_ncpoly(r, ring, pm));
  return P;
}

AlgebraPresentation instantiate_part(const Fixture& host, const std::string& role, const std::vector<Fixture>& set,
                                     const ParameterMap& host_params) {
  auto it = host.parts.find(role);
  if (it == host.parts.end()) throw Error(ErrorCode::InvalidArgument, host.label + " has no part " + role);
  const Fixture* part = find_fixture(set, it->second.fixture);
  if (!part) throw Error(ErrorCode::InvalidArgument, "unknown fixture " + it->second.fixture);
  const FieldPtr field = host_params.empty() ? host.field() : host_params.begin()->second.field();
  ParameterMap pm;
  for (const auto& [name, literal] : part->parameters) {
    auto m = it->second.parameters.find(name);
    if (m == it->second.parameters.end())
      throw Error(ErrorCode::InvalidArgument, host.label + ": part " + role + " does not assign " + name);
    pm[name] = parse_scalar(m->second, field, host_params);
  }
  check_constraints(host.label + " part " + role, part->constraints, part->nonzero, field, pm);
  std::vector<std::string> names = part->generators;
  if (role == "B")
    for (auto& n : names)
      if (n == "x3") n = "x4";
  auto ring = make_ring(names, field);
  AlgebraPresentation P{ring, {}, host.label + "." + role};
  for (std::string r : part->relations) {
    if (role == "B")
      for (std::size_t pos; (pos = r.find("x3")) != std::string::npos;) r.replace(pos, 2, "x4");
    P.relations.push_back(parse_ncpoly(r, ring, pm));
  }
  return P;
}

bool FixtureRunResult::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const ExpectationResult& r) { return r.pass; });
}

namespace {

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

template <class Fn>
void record(FixtureRunResult& out, const std::string& name, int bound, Fn&& fn) {
  ExpectationResult r{name, bound, false, ""};
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  out.results.push_back(std::move(r));
}

}  // namespace

FixtureRunResult run_fixture(const Fixture& f, const FixtureRunOptions& opts, const std::vector<Fixture>& set) {
  FixtureRunResult out;
  out.label = f.label;
  ParameterMap pm;
  std::optional<AlgebraPresentation> P;
  record(out, "instantiate", 0, [&](ExpectationResult& r) {
    pm = resolve_parameters(f);
    P = instantiate(f);
    r.pass = true;
    r.detail = std::to_string(P->generator_count()) + " generators, " + std::to_string(P->relations.size()) +
               " relations";
  });
  if (!P) return out;
  const AlgebraPresentation& D = *P;

  if (!f.expect.hilbert.empty()) {
    const int N = static_cast<int>(f.expect.hilbert.size()) - 1;
    record(out, "hilbert", N, [&](ExpectationResult& r) {
      const auto sys = complete(D.ring, D.relations, N).system;
      const auto h = hilbert_function(sys, N);
      r.pass = h.dims == f.expect.hilbert;
      r.detail = join(h.dims);
    });
  }

  for (const auto& [role, ref] : f.parts) {
    if (!find_fixture(set, ref.fixture)) continue;
    if (role == "C") {
      record(out, "implies " + ref.fixture, 3, [&](ExpectationResult& r) {
        const AlgebraPresentation Cp = instantiate_part(f, role, set, pm);
        const auto sys = complete(D.ring, D.relations, 3).system;
        r.pass = true;
        for (const auto& c : Cp.relations)
          if (!normal_form(transfer(c, D.ring), sys).is_zero()) {
            r.pass = false;
            r.detail = c.to_string() + " is not in the ideal";
          }
        if (r.pass) r.detail = "relations of " + ref.fixture + " lie in the ideal";
      });
    } else {
      record(out, "part " + role + " = " + ref.fixture, 2, [&](ExpectationResult& r) {
        const AlgebraPresentation expected = instantiate_part(f, role, set, pm);
        const auto halves = split_type_A(D);
        const AlgebraPresentation& got = role == "A" ? halves.first : halves.second;
        AlgebraPresentation moved{got.ring, {}, got.label};
        for (const auto& x : expected.relations) moved.relations.push_back(transfer(x, got.ring));
        r.pass = same_relation_span(got, moved);
        r.detail = r.pass ? "same relation span" : "relation spans differ";
      });
    }
  }

  if (f.expect.regular) {
    record(out, "regular", opts.bound, [&](ExpectationResult& r) {
      const auto v = regularity_verdict(D, opts.bound);
      r.pass = v.regular == *f.expect.regular;
      r.detail = v.summary;
    });
  }

  if (f.expect.no_AnotC_modules) {
    record(out, "no (A,notC) modules", 8, [&](ExpectationResult& r) {
      const auto orbit = classify_AnotC(D, 8);
      r.pass = orbit.empty();
      r.detail = orbit.empty() ? "(0,0,1) is off the point scheme"
                               : std::to_string(orbit.size()) + " (A,notC) points, first " + orbit[0].to_string();
    });
  }

  if (!f.expect.normalizing_sequence.empty()) {
    record(out, "normalizing sequence", opts.normal_bound, [&](ExpectationResult& r) {
      std::vector<NcPoly> seq;
      for (const auto& s : f.expect.normalizing_sequence) seq.push_back(parse_ncpoly(s, D.ring, pm));
      const auto rep = check_normalizing_sequence(D, seq, opts.normal_bound);
      r.pass = rep.enough_normal;
      r.detail = rep.enough_normal ? "quotient vanishes from degree " + std::to_string(rep.vanishes_from)
                                   : "quotient Hilbert function " + join(rep.quotient_hilbert.dims);
    });
  }

  if (opts.counts && (f.expect.compatible_count || f.expect.compatible_infinite)) {
    record(out, "compatible count", 0, [&](ExpectationResult& r) {
      const auto [A, B] = split_type_A(D);
      const auto c = compatible_pair_count(A, B);
      if (f.expect.compatible_infinite) {
        r.pass = c.infinite;
      } else if (!c.infinite) {
        const long want = *f.expect.compatible_count;
        r.pass = c.multiplicity == want || c.distinct == want;
      }
      r.detail = c.detail;
      if (f.expect.compatible_count) r.detail += " (expected " + std::to_string(*f.expect.compatible_count) + ")";
    });
  }
  return out;
}

}  // namespace ncalg
