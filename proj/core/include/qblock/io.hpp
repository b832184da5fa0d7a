#pragma once

#include <string>

#include <json.hpp>

#include "qblock/family.hpp"
#include "qblock/spnfree.hpp"

namespace qblock {

// Reports and data files use insertion-ordered JSON so serialization is
// byte-deterministic.
using json = nlohmann::ordered_json;

// {"elements": [names...], "covers": [[below, above], ...]} with index pairs.
json poset_to_json(const AbstractPoset& p);
AbstractPoset poset_from_json(const json& j);

// {"ground": [names...], "vertices": [[member names...], ...]}.
json subposet_to_json(const InducedSubposet& f);
InducedSubposet subposet_from_json(const json& j);

// Argument→image pair list for an order-preserving map out of `domain`.
json set_map_to_json(const InducedSubposet& domain, const SetMap& m);
// Argument→image pair list plus the distinguished argument set.
json embedding_to_json(const XGoodEmbedding& e);

// Nested {"kind": "leaf"|"series"|"parallel", ...}; leaves carry the source
// element's name.
json sp_tree_to_json(const SPTree& t, const AbstractPoset& source);

json family_entry_to_json(const GroundSet& ground, const FamilyEntry& entry);
json family_to_json(const BlockerFamily& family);

// Graphviz digraphs: cover edges only, minimal elements at the bottom.
std::string hasse_dot(const AbstractPoset& p);
std::string hasse_dot(const InducedSubposet& f);
std::string sp_tree_dot(const SPTree& t, const AbstractPoset& source);

// Parses a whole file; malformed content raises invalid_input naming the
// file and byte offset.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// 64-bit FNV-1a of the raw bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace qblock
