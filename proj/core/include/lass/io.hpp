#pragma once

// JSON documents: Lie algebras with representations, subalgebra and extension
// blocks, jet algebroids, page tables and verdicts.
//
// Scalars are written as strings ("3", "-1/2"); integers are accepted on input.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lass/ce.hpp"
#include "lass/extension.hpp"
#include "lass/jets.hpp"
#include "lass/spectral.hpp"

namespace lass {

using Json = nlohmann::json;

/// Malformed input. `where` is a JSON pointer to the offending value.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    [[nodiscard]] const std::string& where() const { return where_; }

private:
    std::string where_;
};

Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const std::string& where);

/// Array of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where);
/// Array of vectors, read as the columns of a dim x count matrix.
Matrix columns_from_json(const Json& j, std::size_t dim, const std::string& where);
Json columns_to_json(const Matrix& m);

/// {"dim", "basis", "brackets": [{"i","j","coeffs":{"k":"c"}}], "representation"?}
Json lie_to_json(const LieAlgebra& g, const Representation* v = nullptr);
LieAlgebra lie_from_json(const Json& j, const std::string& where = "");
/// {"dim", "matrices": [...]} for the generators of g, in order.
Json rep_to_json(const Representation& v);
Representation rep_from_json(const Json& j, std::size_t generators, const std::string& where);

Json polynomial_terms_to_json(const Polynomial& f);
/// {"fiber_dim","base_dim","order","anchor":[...],"structure_functions":[...]}
Json jet_to_json(const PolyJetAlgebroid& a);
/// Accepts the explicit form above or {"action": {lie algebra with representation}, "order"}.
PolyJetAlgebroid jet_from_json(const Json& j, const std::string& where = "");

struct Document {
    std::string name;
    std::string kind;  // "lie", "hs", "extension", "jet"
    std::string description;
    std::optional<LieAlgebra> g;
    std::optional<Representation> v;     // on g
    std::optional<Matrix> subalgebra;    // spanning columns
    std::optional<Matrix> ideal;         // extension kernel, spanning columns
    std::optional<Matrix> splitting;     // dim g x dim B
    std::optional<PolyJetAlgebroid> jet;
    std::optional<Representation> jet_module;  // on the fiber algebra
    std::vector<unsigned> orders;        // jet orders to run
    Json expected = Json::object();
};

/// Catalog entry ({"schema", "name", "kind", "payload", "expected"}) or a bare payload.
Document document_from_json(const Json& j);
Document load_document(const std::string& path);
Json payload_to_json(const Document& d);

/// Representation on g, trivial 1-dimensional if absent.
Representation module_of(const Document& d);

Json table_to_json(const PageTable& t);
PageTable table_from_json(const Json& j);
Json verdict_to_json(const Verdict& v);
Json d2_to_json(const D2Comparison& c);

}  // namespace lass
