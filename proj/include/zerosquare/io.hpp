#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "zerosquare/normalform.hpp"

namespace zsq {

/// Matrix JSON: {"ring": "<selector>", "rows": n, "cols": m,
/// "entries": [["..."], ...]} with entries in element text form,
/// row-major. Integer JSON numbers are accepted on input; output always
/// uses strings so arbitrary precision survives any JSON parser.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// Whitespace layout, ring "int" only: one row per line, entries
/// space-separated.
Matrix matrix_from_text(const std::string& text, const Ring& ring);

/// Accepts either format (JSON when the first non-space byte is '{').
/// `ring_hint` is required for the plain-text form and cross-checked
/// against the JSON "ring" field when present there.
Matrix parse_matrix(const std::string& src, const std::optional<Ring>& ring_hint);

/// Bracketed row layout with aligned columns, for human diffing.
std::string matrix_to_bracket_text(const Matrix& m);

/// Certificate JSON: {"n": n, "r": "...", "U": <matrix JSON>,
/// "det_unit": "...", "verified": bool}.
nlohmann::json certificate_to_json(const Matrix& t,
                                   const SimilarityCertificate& cert);
SimilarityCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace zsq
