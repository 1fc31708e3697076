#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "hopfcoh/cohomology.hpp"

namespace hopfcoh {

using Json = nlohmann::ordered_json;

// Algebra files:
//   {"field": "Q" | {"p": 7}, "dim": d, "basis": [...],
//    "mul": [[i, j, k, "c"], ...]      e_i e_j contains c e_k
//    "unit": [[k, "c"], ...],
//    "comul": [[i, j, k, "c"], ...]    Delta(e_i) contains c e_j (x) e_k
//    "counit": ["c", ...]              dense, length d
//    "antipode": [[i, j, "c"], ...]}   S(e_i) contains c e_j
// Every coefficient is a string so values stay exact.
HopfAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const HopfAlgebra& h);

// Bimodule files: {"algebra": "path" | {...}, "dim": m,
//    "left_action":    [[h, x, y, "c"], ...]   e_h . x contains c y
//    "right_action":   [[x, h, y, "c"], ...]   x . e_h contains c y
//    "left_coaction":  [[x, h, y, "c"], ...]   delta_L(x) contains c e_h (x) y
//    "right_coaction": [[x, y, h, "c"], ...]}  delta_R(x) contains c y (x) e_h
// or {"algebra": ..., "preset": "regular" | "under_tensor" | "bar_tensor" | "sandwich_free"}.
// "algebra" may be omitted when a default algebra is supplied.
HopfBimodule bimodule_from_json(const Json& j, const HopfAlgebraPtr& algebra);
Json bimodule_to_json(const HopfBimodule& m);

/// Resolves a bimodule file's "algebra" path relative to the file itself.
HopfAlgebraPtr load_algebra(const std::filesystem::path& file);
HopfBimodule load_bimodule(const std::filesystem::path& file, const HopfAlgebraPtr& fallback);

/// Reads and parses a JSON file; syntax errors become InputError.
Json read_json(const std::filesystem::path& file);

Json cohomology_to_json(const DoubleComplex& dc, const CohomologyResult& r);
/// Inverse of cohomology_to_json on the result part.
CohomologyResult cohomology_from_json(const Json& j, Field field);

Json sparse_vector_to_json(const SparseVector& v);
SparseVector sparse_vector_from_json(const Json& j, Field field);

}  // namespace hopfcoh
