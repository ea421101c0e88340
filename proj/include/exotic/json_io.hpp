#pragma once

// JSON encodings used at the command-line boundary: weights as integer arrays,
// bipartitions as {"mu": [...], "nu": [...]}, rationals as integers or "p/q"
// strings, matrices as row-major arrays of rows.

#include "exotic/bipartitions.hpp"
#include "exotic/exoticlin.hpp"
#include "exotic/weight.hpp"

#include <gmpxx.h>
#include <json.hpp>

#include <string>

namespace exotic::json_io {

using nlohmann::json;

/// Parses text; DomainError carrying the parser's byte position on failure.
json parse(const std::string& text, const std::string& what);

Weight to_weight(const json& j, const std::string& what);
json from_weight(const Weight& w);

Partition to_partition(const json& j, const std::string& what);
json from_partition(const Partition& p);
json from_bipartition(const Bipartition& b);

mpq_class to_rational(const json& j);
json from_rational(const mpq_class& q);
/// Integers that fit in int64 as numbers, larger ones as decimal strings.
json from_integer(const mpz_class& z);

RatVector to_vector(const json& j);
RatMatrix to_matrix(const json& j);
json from_vector(const RatVector& v);
json from_matrix(const RatMatrix& m);

/// {"n": N, "v": [...], "x": [[...]], "omega": optional}
ExoticPair to_pair(const json& j);
json from_pair(const ExoticPair& pair);

} // namespace exotic::json_io
