/**
 * @file serialize.hpp
 * @brief JSON forms of fields, claims, code artifacts and search results.
 *
 * Elements are written as integer indices and fields as {p, m, modulus,
 * generator}. Artifact files carry no timestamps, so equal inputs give
 * byte-identical files.
 */
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mdssd/families.hpp"
#include "mdssd/grs.hpp"
#include "mdssd/oracle.hpp"

namespace mdssd {

using Json = nlohmann::json;

Json to_json(const Field& F);
/// Rebuilds the field and checks that the stored generator matches. Throws MalformedArtifact.
FieldPtr field_from_json(const Json& j);

Json params_to_json(const FamilyParams& params);
Json to_json(const Claim& c);
Json to_json(const VerificationReport& r, const Field& F);
Json to_json(const CodeArtifact& A, const VerificationReport& report, const Claim* claim = nullptr);
Json to_json(const SearchResult& r);

/// Parses field, kind, evaluation set, weights and matrix; the stored
/// verification block is ignored. Throws MalformedArtifact.
CodeArtifact artifact_from_json(const Json& j);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

/// 64-bit FNV-1a of the compact JSON text, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace mdssd
