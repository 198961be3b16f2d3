// ncalg: command-line front end over the library.
//
// Exit codes: 0 everything passed, 1 a verdict or expectation failed,
// 2 bad input or any other error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncalg/fixtures.hpp"
#include "ncalg/points.hpp"
#include "ncalg/regcheck.hpp"
#include "ncalg/rewrite.hpp"

using namespace ncalg;

namespace {

constexpr int kReportVersion = 1;

struct Common {
  int bound = 8;
  std::string field;
  std::string format = "text";
  std::string out;
  std::vector<std::string> params;
};

struct Report {
  std::ostringstream os;
  int status = 0;
};

FieldPtr field_override(const Common& c, const std::string& generator) {
  if (c.field.empty()) return nullptr;
  std::string text = c.field;
  if (std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    std::getline(in, text);
  }
  if (text.find(',') != std::string::npos) {
    std::vector<Rational> mp;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        mp.emplace_back(item);
      } catch (const std::exception&) {
        throw ParseError(0, "--field: bad rational '" + item + "'");
      }
      mp.back().canonicalize();
    }
    return std::make_shared<const NumberField>(mp, generator);
  }
  return make_root_field(text + "=0", std::nullopt, generator).field;
}

std::map<std::string, std::string> overrides(const Common& c) {
  std::map<std::string, std::string> m;
  for (const auto& p : c.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--param needs name=value, got " + p);
    m[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return m;
}

struct Loaded {
  Fixture fixture;
  ParameterMap params;
  AlgebraPresentation P;
};

Loaded load(const std::string& path, const Common& c) {
  Fixture f = load_fixture(path);
  const FieldPtr field = field_override(c, f.field_generator);
  auto ov = overrides(c);
  ParameterMap pm = resolve_parameters(f, ov, field);
  AlgebraPresentation P = instantiate(f, ov, field);
  return {std::move(f), std::move(pm), std::move(P)};
}

void header(Report& r, const std::string& command, const Common& c, const std::string& input) {
  r.os << "# ncalg report v" << kReportVersion << " " << command;
  if (!input.empty()) r.os << " " << std::filesystem::path(input).filename().string();
  r.os << " bound=" << c.bound << "\n";
}

std::string join(const std::vector<long>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string matrix_text(const DenseMatrix& m) {
  std::string s;
  for (const auto& row : m) {
    s += "  [";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + row[j].to_string();
    s += "]\n";
  }
  return s;
}

ProjectivePoint parse_point(const std::string& text, const FieldPtr& field, int n) {
  std::vector<FieldElement> coords;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) coords.push_back(parse_scalar(item, field));
  if (static_cast<int>(coords.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "point needs " + std::to_string(n) + " coordinates (x1 first)");
  return ProjectivePoint::make(std::move(coords));
}

void cmd_hilbert(Report& r, const Common& c, const std::string& path) {
  const auto L = load(path, c);
  header(r, "hilbert", c, path);
  const auto done = complete(L.P.ring, L.P.relations, c.bound);
  const auto h = hilbert_function(done.system, c.bound);
  if (c.format == "text") r.os << "series " << join(h.dims, ", ") << "\n";
  r.os << hilbert_csv(h);
}

void cmd_complete(Report& r, const Common& c, const std::string& path) {
  const auto L = load(path, c);
  header(r, "complete", c, path);
  const auto res = complete(L.P.ring, L.P.relations, c.bound);
  const auto& al = L.P.alphabet();
  if (c.format == "csv") {
    r.os << "lead,degree,new\n";
    for (const auto& rule : res.system.rules()) {
      bool fresh = false;
      for (const auto& n : res.new_rules) fresh = fresh || n.lead == rule.lead;
      r.os << rule.lead.to_string(al) << "," << rule.degree << "," << (fresh ? 1 : 0) << "\n";
    }
    return;
  }
  r.os << "rules " << res.system.rules().size() << ", new " << res.new_rules.size() << ", ambiguities "
       << res.ambiguities.size() << "\n";
  for (const auto& n : res.new_rules) r.os << "new: " << n.relation().to_string() << "\n";
  for (const auto& a : res.ambiguities)
    if (!a.resolved) r.os << "unresolved at " << a.overlap_word.to_string(al) << ": " << a.residual.to_string() << "\n";
}

void cmd_check_type_a(Report& r, const Common& c, const std::string& path) {
  const auto L = load(path, c);
  header(r, "check-type-a", c, path);
  const auto t = is_type_A_shape(L.P);
  r.os << "type A: " << (t.ok ? "yes" : "no") << "\n";
  if (!t.ok) r.os << "reason: " << t.diagnostic << "\n";
  for (std::size_t i = 0; i < t.quadratic.size(); ++i)
    r.os << "r" << i + 1 << " = " << t.quadratic[i].to_string() << "\n";
  for (std::size_t i = 0; i < t.cubic.size(); ++i) r.os << "r" << i + 7 << " = " << t.cubic[i].to_string() << "\n";
  r.os << "dim D3 = " << degree3_dimension_test(L.P) << "\n";
  if (detect_infinite_gk(L.P)) r.os << "warning: no x4^2, x4x3 or x3x4 term, infinite GK dimension\n";
  r.status = t.ok ? 0 : 1;
}

void cmd_pushout(Report& r, const Common& c, const std::vector<std::string>& paths) {
  if (paths.size() != 3) throw Error(ErrorCode::InvalidArgument, "pushout needs A, B and C files");
  const auto A = load(paths[0], c), B = load(paths[1], c), C = load(paths[2], c);
  PushoutSpec spec{A.P, B.P, C.P, C.P.alphabet().names_descending()};
  const auto res = pushout(spec);
  Fixture out;
  out.label = A.fixture.label + "+" + B.fixture.label;
  out.min_poly = res.D.field()->min_poly();
  out.field_generator = res.D.field()->generator_name();
  out.generators = res.D.alphabet().names_descending();
  for (const auto& rel : res.D.relations) out.relations.push_back(rel.to_string());
  r.os << fixture_to_json(out);
}

void cmd_solve_s(Report& r, const Common& c, const std::string& path, bool enforce) {
  const auto L = load(path, c);
  header(r, "solve-s", c, path);
  const auto s = solve_S(quadratic_part(L.P), enforce);
  r.os << "equations " << s.equations << ", unknowns " << s.unknowns << ", solution dimension " << s.basis.size()
       << "\n";
  if (!s.block_of.empty()) r.os << "block-diagonal " << (s.block_diagonal ? "yes" : "no") << "\n";
  if (s.det_ratio)
    r.os << "det(S2)/det(S1) = " << s.det_ratio->to_string() << (s.det_ratio_constant ? "" : " (not constant)")
         << "\n";
  r.os << "S =\n" << matrix_text(s.distinguished.S);
}

void cmd_check_regular(Report& r, const Common& c, const std::string& path) {
  const auto L = load(path, c);
  header(r, "check-regular", c, path);
  const auto v = regularity_verdict(L.P, c.bound);
  if (c.format == "csv") r.os << "check,bound,pass,detail\n";
  for (const auto& l : v.lines) {
    if (c.format == "csv") {
      r.os << l.name << "," << l.bound << "," << (l.pass ? 1 : 0) << ",\"" << l.detail << "\"\n";
    } else {
      r.os << (l.pass ? "pass " : l.informational ? "note " : "FAIL ") << l.name << " (bound " << l.bound << ")"
           << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
    }
  }
  if (c.format == "text") r.os << "verdict: " << v.summary << "\n";
  r.status = v.regular ? 0 : 1;
}

std::vector<std::pair<std::string, AlgebraPresentation>> three_generator_parts(const AlgebraPresentation& P) {
  if (P.generator_count() == 4) {
    auto [A, B] = split_type_A(P);
    return {{"A", A}, {"B", B}};
  }
  return {{P.label, quadratic_part(P)}};
}

void cmd_point_scheme(Report& r, const Common& c, const std::string& path) {
  const auto L = load(path, c);
  header(r, "point-scheme", c, path);
  for (const auto& [name, A] : three_generator_parts(L.P)) {
    std::vector<std::string> vars;
    for (int i = 0; i < A.generator_count(); ++i) vars.push_back("a" + std::to_string(i + 1));
    r.os << name << " on (" << A.alphabet().name(0) << ", " << A.alphabet().name(1) << ", " << A.alphabet().name(2)
         << "): det M = " << point_scheme_equation(A).to_string(vars) << "\n";
    const auto orbit = classify_AnotC(A, c.bound);
    r.os << "(" << name << ",notC) points: " << orbit.size() << "\n";
  }
}

void cmd_next_point(Report& r, const Common& c, const std::string& path, const std::string& point, int steps) {
  const auto L = load(path, c);
  header(r, "next-point", c, path);
  const int n = L.P.generator_count();
  ProjectivePoint p = parse_point(point, L.P.field(), n);
  if (n == 4) {
    // Sequences of the full system: verify the given chain e.g. e3, e4, e3.
    const auto sys = multilinearize(quadratic_part(L.P));
    const auto M = sys.right_matrix(p);
    const auto ker = dense_nullspace(M, L.P.field());
    if (ker.size() != 1) throw Error(ErrorCode::RankDeficient, "kernel of M(alpha) has dimension " + std::to_string(ker.size()));
    r.os << "0: " << p.to_string() << "\n1: " << ProjectivePoint::make(ker[0]).to_string() << "\n";
    return;
  }
  const auto A = quadratic_part(L.P);
  r.os << "0: " << p.to_string() << "\n";
  for (int k = 1; k <= steps; ++k) {
    p = next_point(A, p);
    r.os << k << ": " << p.to_string() << "\n";
  }
}

void cmd_compat_count(Report& r, const Common& c, const std::string& path, const std::string& charts) {
  const auto L = load(path, c);
  header(r, "compat-count", c, path);
  const auto [A, B] = split_type_A(L.P);
  const auto cnt = compatible_pair_count(A, B);
  if (cnt.infinite) {
    r.os << "infinite\n";
  } else {
    r.os << "multiplicity " << cnt.multiplicity << "\ndistinct " << cnt.distinct << "\n";
  }
  r.os << "detail: " << cnt.detail << "\n";
  if (charts == "list")
    for (const auto& ch : cnt.charts) {
      r.os << "chart " << ch.name << ": basis " << ch.basis_size << ", dimension " << ch.dimension;
      if (ch.multiplicity) r.os << ", multiplicity " << *ch.multiplicity;
      if (ch.distinct) r.os << ", distinct " << *ch.distinct;
      r.os << "\n";
    }
  if (L.fixture.expect.compatible_count) {
    const long want = *L.fixture.expect.compatible_count;
    r.status = !cnt.infinite && (cnt.multiplicity == want || cnt.distinct == want) ? 0 : 1;
  } else if (L.fixture.expect.compatible_infinite) {
    r.status = cnt.infinite ? 0 : 1;
  }
}

void cmd_normal_seq(Report& r, const Common& c, const std::string& path, const std::vector<std::string>& given) {
  const auto L = load(path, c);
  header(r, "normal-seq", c, path);
  const auto& texts = given.empty() ? L.fixture.expect.normalizing_sequence : given;
  if (texts.empty()) throw Error(ErrorCode::InvalidArgument, "no sequence given and none in the file");
  std::vector<NcPoly> seq;
  for (const auto& t : texts) seq.push_back(parse_ncpoly(t, L.P.ring, L.params));
  try {
    const auto rep = check_normalizing_sequence(L.P, seq, c.bound);
    for (const auto& cert : rep.certificates)
      r.os << "stage " << cert.stage << ": " << cert.element.to_string()
           << (cert.zero_in_quotient ? " (zero in quotient)" : " normal") << ", checked through degree "
           << cert.checked_through << "\n";
    r.os << "quotient hilbert " << join(rep.quotient_hilbert.dims) << "\n";
    r.os << "enough normal elements: " << (rep.enough_normal ? "yes" : "no") << "\n";
    r.status = rep.enough_normal ? 0 : 1;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotNormalAtStage) throw;
    r.os << e.what() << "\n";
    r.status = 1;
  }
}

void cmd_fixtures(Report& r, const Common& c, const std::string& dir, const std::vector<std::string>& labels,
                  bool all, bool counts) {
  auto set = load_fixture_dir(dir);
  header(r, "fixtures run", c, "");
  FixtureRunOptions opts;
  opts.bound = std::min(c.bound, 6);
  opts.normal_bound = c.bound;
  opts.counts = counts;
  if (!all && labels.empty()) throw Error(ErrorCode::InvalidArgument, "give fixture labels or --all");
  for (const auto& l : labels)
    if (!find_fixture(set, l)) throw Error(ErrorCode::InvalidArgument, "unknown fixture " + l);
  int failed = 0, run = 0;
  for (const auto& f : set) {
    if (!all && std::find(labels.begin(), labels.end(), f.label) == labels.end()) continue;
    const auto res = run_fixture(f, opts, set);
    ++run;
    if (!res.all_pass()) ++failed;
    if (c.format == "csv") {
      for (const auto& e : res.results)
        r.os << f.label << "," << e.name << "," << e.bound << "," << (e.pass ? 1 : 0) << ",\"" << e.detail << "\"\n";
      continue;
    }
    r.os << (res.all_pass() ? "PASS " : "FAIL ") << f.label << "\n";
    for (const auto& e : res.results)
      r.os << "     " << (e.pass ? "ok   " : "FAIL ") << e.name << " [bound " << e.bound << "] " << e.detail << "\n";
  }
  if (c.format == "text") r.os << run << " fixtures, " << failed << " failed\n";
  r.status = failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncalg: type A pushout algebras, regularity checks and point modules"};
  app.require_subcommand(1);
  Common c;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--bound", c.bound, "degree bound (default 8)")->check(CLI::Range(2, 64));
    sub->add_option("--field", c.field, "field override: min-poly in t, constant-first list, or a file");
    sub->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    sub->add_option("--out", c.out, "write the report here instead of stdout");
    sub->add_option("--param", c.params, "parameter override name=value (repeatable)");
  };
  std::string input;
  std::vector<std::string> inputs, seq, labels;
  std::string enforce = "on", charts = "all", point, dir = NCALG_FIXTURE_DIR;
  int steps = 3;
  bool all = false, no_counts = false;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    common(s);
    return s;
  };
  auto* hil = add("hilbert", "Hilbert function through the bound");
  hil->add_option("file", input)->required();
  auto* cmp = add("complete", "overlap completion through the bound");
  cmp->add_option("file", input)->required();
  auto* cta = add("check-type-a", "type A shape test");
  cta->add_option("file", input)->required();
  auto* po = add("pushout", "pushout of A and B over C (writes a presentation file)");
  po->add_option("files", inputs, "A, B and C files")->required()->expected(3);
  auto* ss = add("solve-s", "scalar matrix S of the potential resolution");
  ss->add_option("file", input)->required();
  ss->add_option("--enforce-blocks", enforce, "on or off")->check(CLI::IsMember({"on", "off"}));
  auto* reg = add("check-regular", "regularity verdict");
  reg->add_option("file", input)->required();
  auto* ps = add("point-scheme", "point scheme equation(s)");
  ps->add_option("file", input)->required();
  auto* np = add("next-point", "iterate the point map");
  np->add_option("file", input)->required();
  np->add_option("--point", point, "coordinates, x1 first, comma separated")->required();
  np->add_option("--steps", steps, "number of steps");
  auto* cc = add("compat-count", "count compatible pairs of point modules");
  cc->add_option("file", input)->required();
  cc->add_option("--charts", charts, "all or list")->check(CLI::IsMember({"all", "list"}));
  auto* ns = add("normal-seq", "check a normalizing sequence");
  ns->add_option("file", input)->required();
  ns->add_option("--seq", seq, "sequence elements (default: the file's expectation)");
  auto* fx = add("fixtures", "fixture runner");
  auto* fxrun = fx->add_subcommand("run", "run fixtures");
  common(fxrun);
  fx->require_subcommand(1);
  fxrun->add_option("labels", labels);
  fxrun->add_flag("--all", all, "run every fixture");
  fxrun->add_flag("--no-counts", no_counts, "skip compatible-pair counts");
  fxrun->add_option("--dir", dir, "fixture directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report r;
  try {
    if (*hil) cmd_hilbert(r, c, input);
    else if (*cmp) cmd_complete(r, c, input);
    else if (*cta) cmd_check_type_a(r, c, input);
    else if (*po) cmd_pushout(r, c, inputs);
    else if (*ss) cmd_solve_s(r, c, input, enforce == "on");
    else if (*reg) cmd_check_regular(r, c, input);
    else if (*ps) cmd_point_scheme(r, c, input);
    else if (*np) cmd_next_point(r, c, input, point, steps);
    else if (*cc) cmd_compat_count(r, c, input, charts);
    else if (*ns) cmd_normal_seq(r, c, input, seq);
    else if (*fx) cmd_fixtures(r, c, dir, labels, all, !no_counts);
  } catch (const std::exception& e) {
    std::cout << r.os.str() << std::flush;
    std::cerr << "ncalg: " << e.what() << "\n";
    return 2;
  } catch (...) {
    std::cerr << "ncalg: unknown error\n";
    return 2;
  }
  if (c.out.empty()) {
    std::cout << r.os.str();
  } else {
    std::ofstream out(c.out);
    if (!out) {
      std::cerr << "ncalg: cannot write " << c.out << "\n";
      return 2;
    }
    out << r.os.str();
  }
  return r.status;
}
