#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cvml/distance.hpp"
#include "cvml/sampling.hpp"
#include "cvml/sequences.hpp"
#include "cvml/space.hpp"

namespace cvml {

using Json = nlohmann::ordered_json;

// Complex values serialize as a two-element array [re, im] everywhere.
Complex complex_from_json(const nlohmann::json& j);
Json complex_to_json(Complex z);

std::vector<Complex> points_from_json(const nlohmann::json& j);

// Space format: {"labels": ["a", ...], "matrix": [[[re, im], ...], ...]}.
FiniteSpace space_from_json(const nlohmann::json& j, Tolerance tol = {});
Json space_to_json(const FiniteSpace& space);

// CSV alternative: header row of labels, then n rows of n `re+imi` cells.
FiniteSpace space_from_csv(const std::string& text, Tolerance tol = {});
std::string space_to_csv(const FiniteSpace& space);
Complex parse_complex_literal(const std::string& text);  // "re+imi"

// Catalog specs: {"fn": "exp_itheta_sum", "theta": 0.785}, etc.
// user_matrix additionally carries {"space": {...}, "sites": [[re,im], ...]}.
DistanceFn distance_from_json(const nlohmann::json& j, Tolerance tol = {});
Json distance_to_json(const DistanceFn& fn);

// {"rule": "reciprocal_i", "n_max": 1024} or {"terms": [[re, im], ...]}.
SequenceSpec sequence_from_json(const nlohmann::json& j);
Json sequence_to_json(const SequenceSpec& seq);

Region region_from_json(const nlohmann::json& j);
SamplingSpec sampling_from_json(const nlohmann::json& j);

}  // namespace cvml
