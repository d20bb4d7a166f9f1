#ifndef JOINALG_IO_HPP
#define JOINALG_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "joinalg/algebra.hpp"
#include "joinalg/classical.hpp"
#include "joinalg/comodule.hpp"
#include "joinalg/group.hpp"
#include "joinalg/hopf.hpp"

namespace joinalg {

/// Object keys are kept sorted, so dumps are canonical.
using Json = nlohmann::json;

/// Parses a JSON file; syntax errors become MalformedInput carrying
/// "path:line:column".
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& origin = "<input>");

/// Replaces every {"file": "relative/path"} object by the parsed contents of
/// that file, resolved against `base_dir`, recursively.
Json inline_references(const Json& node, const std::filesystem::path& base_dir);

/// read_json_file followed by inline_references against the file's directory.
Json load_document(const std::filesystem::path& path);

// Decoders. `where` is a field path used in diagnostics ("/hopf/coproduct").
// All failures are MalformedInput.
Scalar scalar_from_json(const Json& j, const std::string& where);
Vector vector_from_json(const Json& j, const std::string& where);
/// Sparse {"rows", "cols", "entries": [[i, j, "p/q"], ...]} or dense rows.
Matrix matrix_from_json(const Json& j, const std::string& where);
Algebra algebra_from_json(const Json& j, const std::string& where);
FiniteGroup group_from_json(const Json& j, const std::string& where);
HopfAlgebra hopf_from_json(const Json& j, const std::string& where);
FiniteGSet gset_from_json(const Json& j, const std::string& where);
ComoduleAlgebra comodule_from_json(const Json& j, const std::string& where);

// Encoders.
Json scalar_to_json(const Scalar& x);
/// Sparse triples, rows then columns ascending.
Json matrix_to_json(const Matrix& m);
/// Sparse [[i, "p/q"], ...] with the length alongside.
Json vector_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> sparse_vector_from_json(const Json& j, const std::string& where);
Json algebra_to_json(const Algebra& a);

/// Field access with diagnostics.
const Json& require_field(const Json& obj, const std::string& key, const std::string& where);
std::size_t size_from_json(const Json& j, const std::string& where);
std::string string_from_json(const Json& j, const std::string& where);

}  // namespace joinalg

#endif  // JOINALG_IO_HPP
