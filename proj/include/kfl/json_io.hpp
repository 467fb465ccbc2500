#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kfl/equivalence.hpp"
#include "kfl/finiteness.hpp"
#include "kfl/monodromy.hpp"
#include "kfl/r_matrix.hpp"
#include "kfl/symplectic.hpp"

namespace kfl {

using Json = nlohmann::json;

// All readers throw InvalidInput with named violations ("malformed json",
// "schema", "degree mismatch", "not a bijection", "relator", ...). Writers
// produce canonical JSON: sorted keys, compact, permutations in one-line form.

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// Accepts a one-line array or a cycle-notation string.
Permutation permutation_from_json(const Json& j, int degree);

Json cover_to_json(const MonodromyRep& rep);
/// Validated: every violation of validate() is reported at once.
MonodromyRep cover_from_json(const Json& j);

/// {"g": g, "matrix": [[...]], "target_rank": t}
Json h1_to_json(const H1Map& m);
H1Map h1_from_json(const Json& j);

/// Geometric factors are written inline, algebraic ones as {"h1": {...}}.
Json product_to_json(const ProductFibration& p);
/// String factors are cover file paths, resolved against base_dir.
ProductFibration product_from_json(const Json& j, const std::filesystem::path& base_dir);

Json parse_json_text(std::string_view text);
MonodromyRep parse_cover(const std::filesystem::path& path);
ProductFibration parse_product(const std::filesystem::path& path);

/// Canonical text of a cover file.
std::string serialize_cover(const MonodromyRep& rep);
std::string serialize_product(const ProductFibration& p);

Json to_json(const Lattice& l);
Json to_json(const FactorSummary& s);
Json to_json(const FinitenessReport& r);
Json to_json(const ClassificationVerdict& v);
Json to_json(const EquivalenceVerdict& v);
Json to_json(const FalsifyReport& r);
Json to_json(const RefinedRankReport& r);
Json to_json(const SearchOptions& o);

}  // namespace kfl
