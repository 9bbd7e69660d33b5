#pragma once

#include "jkinv/catalog.hpp"
#include "jkinv/semidirect.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace jkinv {

// Object keys are kept sorted, so dump() is canonical.
using Json = nlohmann::json;

// Malformed documents raise InputError. Rationals are strings "p" or "p/q";
// plain JSON integers are accepted on input.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text);
std::string dump_canonical(const Json& j);

Rat rat_from_json(const Json& j);
Json to_json(const Rat& q);
Mat mat_from_json(const Json& j, std::size_t rows, std::size_t cols);
Json to_json(const Mat& m);

Pencil pencil_from_json(const Json& j);
Json to_json(const Pencil& p);

Json to_json(const JordanMap& j);
JordanMap jordan_from_json(const Json& j);
Json to_json(const StrictInvariants& inv);
StrictInvariants invariants_from_json(const Json& j);
Json to_json(const SkewJK& jk);
SkewJK skew_jk_from_json(const Json& j);

Json to_json(const BundleSig& s);
BundleSig bundle_sig_from_json(const Json& j);
Json to_json(const SkewBundleSig& s);
SkewBundleSig skew_bundle_sig_from_json(const Json& j);

// Bracket indices are 0-based.
LieAlgebra lie_from_json(const Json& j);
Json to_json(const LieAlgebra& g);
// "algebra" is an inline object or a path relative to `base`. When `given`
// is set and "algebra" is absent, it is used; when both are present they must
// agree.
Representation rep_from_json(const Json& j, const std::filesystem::path& base, const LieAlgebra* given = nullptr);
Json to_json(const Representation& rho);

Json to_json(const SkewJKReport& r);
Json to_json(const RepJK& r);
Json to_json(const DualPrediction& p);
Json to_json(const DualTheoremReport& r);

}  // namespace jkinv
