#pragma once

#include <string>

#include "json.hpp"

#include "coxcat/core.hpp"
#include "coxcat/encode.hpp"
#include "coxcat/models.hpp"
#include "coxcat/signed.hpp"

namespace coxcat::io {

using nlohmann::json;

// Writers produce canonical forms; readers validate and throw ValidationError
// on any malformed input.

json to_json(const Block& b);
json to_json(const SetPartition& p);
json to_json(const SignedPartition& pi);
json to_json(const TypePartition& t);
json to_json(const MarkedPair& m);
json to_json(const MarkedTriple& t);
json to_json(const LatticePath& p);
json to_json(const ShiftedTableau& t);
json to_json(const Pointer& x);
json to_json(const BPair& p);
json to_json(const DPair& p);

/// {"n", "blocks"} or a bare array of blocks (n = number of elements).
SetPartition set_partition_from(const json& j);
/// {"n", "blocks"} listing every block, or a bare array (n = max |x|).
SignedPartition signed_partition_from(const json& j);
MarkedPair marked_pair_from(const json& j);
MarkedTriple marked_triple_from(const json& j);
/// {"steps": "..."} or a bare string.
LatticePath path_from(const json& j);
ShiftedTableau tableau_from(const json& j);
Pointer pointer_from(const json& j);
BPair b_pair_from(const json& j);
DPair d_pair_from(const json& j);

/// JSON text, or brace notation such as {{1,4},{2,3}}.
json parse_value(const std::string& text);

}  // namespace coxcat::io
