#include "coxcat/io.hpp"

#include <algorithm>
#include <cstdlib>

namespace coxcat::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ValidationError("bad input: " + what); }

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Block block_from(const json& j) {
  if (!j.is_array()) bad("a block must be an array of integers");
  Block b;
  for (const auto& v : j) b.push_back(as_int(v, "block element"));
  std::sort(b.begin(), b.end());
  return b;
}

std::vector<Block> blocks_from(const json& j) {
  if (!j.is_array()) bad("blocks must be an array of arrays");
  std::vector<Block> out;
  for (const auto& b : j) out.push_back(block_from(b));
  return out;
}

json blocks_json(std::span<const Block> bs) {
  json a = json::array();
  for (const auto& b : bs) a.push_back(to_json(b));
  return a;
}

}  // namespace

json to_json(const Block& b) { return json(b); }

json to_json(const SetPartition& p) { return {{"n", p.size()}, {"blocks", blocks_json(p.blocks())}}; }

json to_json(const SignedPartition& pi) { return {{"n", pi.size()}, {"blocks", blocks_json(pi.blocks())}}; }

json to_json(const TypePartition& t) { return json(t.parts()); }

json to_json(const MarkedPair& m) { return {{"sigma", to_json(m.sigma)}, {"marked", blocks_json(m.marked)}}; }

json to_json(const MarkedTriple& t) {
  json j = to_json(t.pair);
  j["epsilon"] = t.epsilon;
  return j;
}

json to_json(const LatticePath& p) { return {{"steps", p.steps}}; }

json to_json(const ShiftedTableau& t) {
  json ones = json::array();
  for (const auto& [r, c] : t.ones) ones.push_back({r, c});
  return {{"south", t.south}, {"east", t.east}, {"ones", ones}};
}

json to_json(const Pointer& x) {
  if (std::holds_alternative<std::monostate>(x)) return nullptr;
  if (const auto* e = std::get_if<Edge>(&x)) return {{"edge", {e->lo, e->hi}}};
  if (const auto* b = std::get_if<Block>(&x)) return {{"block", to_json(*b)}};
  return {{"int", std::get<int>(x)}};
}

json to_json(const BPair& p) { return {{"sigma", to_json(p.sigma)}, {"x", to_json(p.x)}}; }

json to_json(const DPair& p) { return {{"sigma", to_json(p.sigma)}, {"x", to_json(p.x)}}; }

SetPartition set_partition_from(const json& j) {
  if (j.is_array()) {
    auto bs = blocks_from(j);
    int n = 0;
    for (const auto& b : bs) n += static_cast<int>(b.size());
    return SetPartition(n, std::move(bs));
  }
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) bad("n must be nonnegative");
  return SetPartition(n, blocks_from(field(j, "blocks")));
}

SignedPartition signed_partition_from(const json& j) {
  if (j.is_array()) {
    auto bs = blocks_from(j);
    int n = 0;
    for (const auto& b : bs) {
      for (int x : b) n = std::max(n, std::abs(x));
    }
    return validate_signed(n, std::move(bs));
  }
  return validate_signed(as_int(field(j, "n"), "n"), blocks_from(field(j, "blocks")));
}

MarkedPair marked_pair_from(const json& j) {
  SetPartition sigma = set_partition_from(field(j, "sigma"));
  std::vector<Block> marked = j.contains("marked") ? blocks_from(j.at("marked")) : std::vector<Block>{};
  for (const auto& b : marked) {
    if (!sigma.contains_block(b)) bad("marked block " + to_string(b) + " is not a block of sigma");
  }
  return make_marked(std::move(sigma), std::move(marked));
}

MarkedTriple marked_triple_from(const json& j) {
  MarkedPair m = marked_pair_from(j);
  const int eps = j.contains("epsilon") ? as_int(j.at("epsilon"), "epsilon") : 0;
  if (eps < -1 || eps > 1) bad("epsilon must be -1, 0 or 1");
  return MarkedTriple{std::move(m), eps};
}

LatticePath path_from(const json& j) {
  const json& s = j.is_string() ? j : field(j, "steps");
  if (!s.is_string()) bad("steps must be a string");
  return make_path(s.get<std::string>());
}

ShiftedTableau tableau_from(const json& j) {
  auto ints = [](const json& a, const char* what) {
    if (!a.is_array()) bad(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& v : a) out.push_back(as_int(v, what));
    return out;
  };
  std::set<std::pair<int, int>> ones;
  const json& o = field(j, "ones");
  if (!o.is_array()) bad("ones must be an array of [row, col]");
  for (const auto& c : o) {
    if (!c.is_array() || c.size() != 2) bad("each 1 must be [row, col]");
    ones.insert({as_int(c[0], "row"), as_int(c[1], "col")});
  }
  return make_tableau(ints(field(j, "south"), "south"), ints(field(j, "east"), "east"), std::move(ones));
}

Pointer pointer_from(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_object() && j.size() == 1) {
    if (j.contains("edge")) {
      const json& e = j.at("edge");
      if (!e.is_array() || e.size() != 2) bad("edge must be [i, j]");
      Edge out{as_int(e[0], "edge end"), as_int(e[1], "edge end")};
      if (out.lo >= out.hi) bad("edge must have i < j");
      return out;
    }
    if (j.contains("block")) return block_from(j.at("block"));
    if (j.contains("int")) return as_int(j.at("int"), "int");
  }
  bad("x must be null, {\"edge\":[i,j]}, {\"block\":[...]} or {\"int\":k}");
}

BPair b_pair_from(const json& j) {
  return BPair{set_partition_from(field(j, "sigma")), pointer_from(j.contains("x") ? j.at("x") : json())};
}

DPair d_pair_from(const json& j) {
  return DPair{set_partition_from(field(j, "sigma")), pointer_from(j.contains("x") ? j.at("x") : json())};
}

json parse_value(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  std::string t = text;
  if (first != std::string::npos && t.compare(first, 2, "{{") == 0) {
    std::replace(t.begin(), t.end(), '{', '[');
    std::replace(t.begin(), t.end(), '}', ']');
  } else if (first != std::string::npos && t.compare(first, 2, "{}") == 0) {
    t = "[]";
  }
  try {
    return json::parse(t);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace coxcat::io
