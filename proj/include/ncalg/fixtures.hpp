#pragma once

// Presentation and fixture files (JSON), parameter instantiation with exact
// constraint checks, and the fixture runner.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/algebra.hpp"
#include "ncalg/parse.hpp"

namespace ncalg {

inline constexpr const char* kPresentationFormat = "ncalg-presentation";
inline constexpr int kPresentationVersion = 1;

/// Another fixture used as a building block, with its parameters given as
/// expressions in this fixture's parameters.
struct PartReference {
  std::string fixture;
  std::map<std::string, std::string> parameters;
};

struct FixtureExpectations {
  std::vector<long> hilbert;                    // prefix from degree 0
  std::vector<std::string> normalizing_sequence;
  std::optional<long> compatible_count;
  bool compatible_infinite = false;
  std::optional<bool> regular;
  bool no_AnotC_modules = false;  // (0,0,1) is off the point scheme
};

struct Fixture {
  std::string label;
  std::string kind;  // "C", "A", "D" or "example"
  std::vector<Rational> min_poly{0, 1};
  std::string field_generator = "t";
  std::vector<std::string> generators;  // descending rank
  std::vector<std::string> relations;   // templates in the parameters
  std::vector<std::pair<std::string, std::string>> parameters;  // name -> literal, in file order
  std::vector<std::string> constraints;  // must vanish
  std::vector<std::string> nonzero;      // must not vanish
  std::map<std::string, PartReference> parts;  // "A", "B", "C"
  FixtureExpectations expect;
  std::string path;

  FieldPtr field() const;
};

/// Strict JSON loader: unknown keys, a wrong format tag or version are ParseErrors.
Fixture parse_fixture(const std::string& json_text, const std::string& path = "<string>");
Fixture load_fixture(const std::string& path);
std::string fixture_to_json(const Fixture& f);

/// Every *.json fixture in a directory, sorted by label.
std::vector<Fixture> load_fixture_dir(const std::string& dir);
const Fixture* find_fixture(const std::vector<Fixture>& set, const std::string& label);

/// Parameter values (with overrides applied) after checking every
/// constraint exactly. Throws ConstraintViolated naming the condition.
ParameterMap resolve_parameters(const Fixture& f, const std::map<std::string, std::string>& overrides = {},
                                const FieldPtr& field = nullptr);

/// The concrete presentation; `field` replaces the fixture's own field.
AlgebraPresentation instantiate(const Fixture& f, const std::map<std::string, std::string>& overrides = {},
                                const FieldPtr& field = nullptr);

/// The presentation of a part, over `host`'s field and parameters, with x3
/// renamed to x4 for a B part.
AlgebraPresentation instantiate_part(const Fixture& host, const std::string& role, const std::vector<Fixture>& set,
                                     const ParameterMap& host_params);

struct ExpectationResult {
  std::string name;
  int bound = 0;
  bool pass = false;
  std::string detail;
};

struct FixtureRunOptions {
  int bound = 6;         // Hilbert prefix, regularity verdict
  int normal_bound = 8;  // normalizing sequences
  bool counts = true;    // compatible-pair counts
};

struct FixtureRunResult {
  std::string label;
  std::vector<ExpectationResult> results;
  bool all_pass() const;
};

/// Runs every expectation the fixture carries. Failures are recorded, never thrown.
FixtureRunResult run_fixture(const Fixture& f, const FixtureRunOptions& opts, const std::vector<Fixture>& set = {});

}  // namespace ncalg
