#pragma once

#include <string>
#include <vector>

#include "ncalg/fixtures.hpp"

namespace ncalg::testing {

inline const std::vector<Fixture>& fixture_set() {
  static const std::vector<Fixture> set = load_fixture_dir(NCALG_FIXTURE_DIR);
  return set;
}

inline const Fixture& fixture(const std::string& label) {
  const Fixture* f = find_fixture(fixture_set(), label);
  if (!f) throw Error(ErrorCode::InvalidArgument, "missing fixture " + label);
  return *f;
}

inline AlgebraPresentation algebra(const std::string& label) { return instantiate(fixture(label)); }

inline std::vector<const Fixture*> fixtures_of_kind(const std::string& kind) {
  std::vector<const Fixture*> out;
  for (const auto& f : fixture_set())
    if (f.kind == kind) out.push_back(&f);
  return out;
}

inline AlgebraPresentation presentation(std::vector<std::string> names, const std::vector<std::string>& rels,
                                        FieldPtr field = NumberField::rationals()) {
  auto ring = make_ring(std::move(names), std::move(field));
  AlgebraPresentation P{ring, {}, "test"};
  for (const auto& r : rels) P.relations.push_back(parse_ncpoly(r, ring));
  return P;
}

}  // namespace ncalg::testing
