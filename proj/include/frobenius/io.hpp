#pragma once

#include <cstdint>
#include <optional>
#include <nlohmann/json.hpp>
#include <string>

#include "frobenius/category.hpp"
#include "frobenius/constructors.hpp"
#include "frobenius/orthogonal_set.hpp"
#include "frobenius/semigroup.hpp"
#include "frobenius/structure.hpp"

namespace frob {

using Json = nlohmann::ordered_json;

/// Settings echoed into every report.
struct RunInfo {
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultTol;
};

// Documents. Complex numbers are [re, im]; a bare number is read as real.
// Parse errors throw InputError naming the JSON pointer of the bad value.

/// { "dim": n, "mult": [[[c, ...] x n] x n], "tol"?: t, "label"?: s }
/// with mult[i][j][k] = <b_i b_j, b_k>.
/// `tol` overrides the document value.
HilbSemigroup semigroup_from_json(const Json& doc,
                                  std::optional<double> tol = {});
Json to_json(const HilbSemigroup& s);

/// { "dim": n, "vectors": [[c, ...], ...] }
OrthogonalSet orthogonal_set_from_json(const Json& doc,
                                      double tol = kDefaultTol);
Json to_json(const OrthogonalSet& x);

/// { "points": [...], "weights": {p: w} }
WeightSpec weights_from_json(const Json& doc);

/// { "points": [...], "basepoint": p, "weights": {p: w} }
WPointedSet pointed_set_from_json(const Json& doc);
Json to_json(const WPointedSet& x);

/// { "map": {p: q} }
PointMap point_map_from_json(const Json& doc);
Json to_json(const WSetMorphism& f);

/// { "rows": r, "cols": c, "entries": [[c, ...] x c] x r }
LinearMap linear_map_from_json(const Json& doc);
Json linear_map_to_json(const LinearMap& m);

Json to_json(const Check& c);
Json to_json(const AxiomReport& r, const RunInfo& info);
Json to_json(const StructureReport& r, const RunInfo& info);
Json to_json(const MorphismClass& c, const RunInfo& info);
Json to_json(const RoundTripReport& r, const RunInfo& info);

Json complex_to_json(Complex z);
Json vector_to_json(const CVec& v);

/// Reads and parses a file; syntax errors carry line and column.
Json read_json_file(const std::string& path);

}  // namespace frob
