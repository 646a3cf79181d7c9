#ifndef GHULL_SERIALIZE_HPP
#define GHULL_SERIALIZE_HPP

// JSON wire formats. ordered_json keeps key order stable so equal inputs
// serialize byte-identically, which the reproduction reports rely on.

#include <string>

#include <json.hpp>

#include "ghull/constructions.hpp"
#include "ghull/eaqec.hpp"
#include "ghull/linear_code.hpp"

namespace ghull {

using json = nlohmann::ordered_json;

// field descriptor: {"p": int, "m": int, "modulus": [c0, c1, ...]}
json field_to_json(const FiniteField& f);
FieldPtr field_from_json(const json& j);  ///< RecipeInvalid on malformed input

// matrix: {"field": ..., "rows": r, "cols": c, "entries": [[[coeffs]...]...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// code: {"field": ..., "n": n, "k": k, "generator": <matrix>}
json code_to_json(const LinearCode& c);
LinearCode code_from_json(const json& j);

json decomposition_to_json(const LinearCode& c, const HullDecomposition& d);
json distance_to_json(const DistanceReport& d);
json eaqec_to_json(const EaqecParams& p);

std::string q_label_str(const QLabel& q);  // "3^4", "9", ...

/// Family row JSON line; paper_printed/discrepancy are reproduction metadata.
json family_row_to_json(const FamilyRow& row, const json& paper_printed = nullptr,
                        const std::string& discrepancy = "");

/// CSV with the fixed column order q,n,k,d,d_lb,c,me,family,discrepancy.
std::string family_row_csv_header();
std::string family_row_to_csv(const FamilyRow& row, const std::string& discrepancy = "");

// ------------------------------------------------------------------- recipes

struct BuildOptions {
    unsigned s = 0;
    std::uint64_t distance_budget = std::uint64_t(1) << 22;
    bool strict_closure = true;
};

struct BuiltCode {
    LinearCode code;
    json recipe;                     // normalized, embeddable for replay
    std::vector<std::string> notes;  // construction warnings and facts
};

/// Dispatches {"kind": "explicit"|"cyclic"|"negacyclic"|"gabidulin"|
/// "matrix_product", ...}; RecipeInvalid carries a field-level diagnostic.
BuiltCode build_from_recipe(const json& recipe, const BuildOptions& opt);

}  // namespace ghull

#endif
