#include "qblock/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "qblock/errors.hpp"

namespace qblock {

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw invalid_input(std::string(what) + ": missing \"" + key + "\" field");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw invalid_input(std::string(what) + ": expected an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw invalid_input(std::string(what) + ": expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

json poset_to_json(const AbstractPoset& p) {
  json j;
  j["elements"] = p.elements();
  json covers = json::array();
  for (auto [below, above] : p.cover_pairs()) covers.push_back({below, above});
  j["covers"] = std::move(covers);
  return j;
}

AbstractPoset poset_from_json(const json& j) {
  const auto elements = string_list(require_field(j, "elements", "poset"), "poset elements");
  const json& covers = require_field(j, "covers", "poset");
  if (!covers.is_array()) throw invalid_input("poset covers: expected an array of index pairs");
  std::vector<std::pair<int, int>> below_above;
  below_above.reserve(covers.size());
  const int n = static_cast<int>(elements.size());
  for (const auto& pair : covers) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw invalid_input("poset covers: expected an array of index pairs");
    }
    const int below = pair[0].get<int>();
    const int above = pair[1].get<int>();
    if (below < 0 || below >= n || above < 0 || above >= n) {
      throw invalid_input("poset covers: element index out of range");
    }
    below_above.emplace_back(below, above);
  }
  return AbstractPoset::from_covers(elements, below_above);
}

json subposet_to_json(const InducedSubposet& f) {
  json j;
  j["ground"] = f.ground().labels();
  json vertices = json::array();
  for (VertexMask v : f.vertices()) vertices.push_back(f.ground().names_of(v));
  j["vertices"] = std::move(vertices);
  return j;
}

InducedSubposet subposet_from_json(const json& j) {
  GroundSet ground(string_list(require_field(j, "ground", "subposet"), "subposet ground"));
  const json& vertices = require_field(j, "vertices", "subposet");
  if (!vertices.is_array()) {
    throw invalid_input("subposet vertices: expected an array of member-name arrays");
  }
  std::vector<VertexMask> verts;
  verts.reserve(vertices.size());
  for (const auto& members : vertices) {
    verts.push_back(ground.mask_of(string_list(members, "subposet vertex")));
  }
  return InducedSubposet(std::move(ground), std::move(verts));
}

json set_map_to_json(const InducedSubposet& domain, const SetMap& m) {
  json j;
  j["target"] = domain.ground().names_of(m.y);
  json pairs = json::array();
  for (size_t i = 0; i < m.image.size(); ++i) {
    json pair;
    pair["argument"] = domain.ground().names_of(domain.vertices()[i]);
    pair["image"] = domain.ground().names_of(m.image[i]);
    pairs.push_back(std::move(pair));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

json embedding_to_json(const XGoodEmbedding& e) {
  json j;
  j["arguments_over"] = e.ground().names_of(e.x());
  json pairs = json::array();
  for (size_t i = 0; i < e.arguments().size(); ++i) {
    json pair;
    pair["argument"] = e.ground().names_of(e.arguments()[i]);
    pair["image"] = e.ground().names_of(e.image()[i]);
    pairs.push_back(std::move(pair));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

json sp_tree_to_json(const SPTree& t, const AbstractPoset& source) {
  json j;
  switch (t.kind) {
    case SPTree::Kind::kLeaf:
      j["kind"] = "leaf";
      j["element"] = source.elements()[static_cast<size_t>(t.element)];
      break;
    case SPTree::Kind::kSeries:
      j["kind"] = "series";
      j["below"] = sp_tree_to_json(*t.left, source);
      j["above"] = sp_tree_to_json(*t.right, source);
      break;
    case SPTree::Kind::kParallel:
      j["kind"] = "parallel";
      j["first"] = sp_tree_to_json(*t.left, source);
      j["second"] = sp_tree_to_json(*t.right, source);
      break;
  }
  return j;
}

json family_entry_to_json(const GroundSet& ground, const FamilyEntry& entry) {
  json j;
  json sequence = json::array();
  for (int e : entry.s.seq()) sequence.push_back(ground.label(e));
  j["sequence"] = std::move(sequence);
  json members = json::array();
  for (VertexMask v : entry.f_s.vertices()) members.push_back(ground.names_of(v));
  j["members"] = std::move(members);
  j["root"] = ground.names_of(entry.z_s);
  j["root_type"] = entry.type == RootType::kMin ? "min" : "max";
  j["kept"] = ground.names_of(entry.a_s);
  j["dropped"] = ground.names_of(entry.b_s);
  return j;
}

json family_to_json(const BlockerFamily& family) {
  json j;
  j["ground"] = family.ground().labels();
  j["blocked_set"] = family.ground().names_of(family.y());
  json entries = json::array();
  for (const auto& [key, entry] : family.entries()) {
    entries.push_back(family_entry_to_json(family.ground(), entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string hasse_dot(const AbstractPoset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(p.elements()[static_cast<size_t>(i)])
        << "\"];\n";
  }
  for (auto [below, above] : p.cover_pairs()) {
    out << "  n" << below << " -> n" << above << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const InducedSubposet& f) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  const auto& vs = f.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(f.ground().set_string(vs[i])) << "\"];\n";
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = 0; j < vs.size(); ++j) {
      if (!vs[i].proper_subset_of(vs[j])) continue;
      bool covered = true;
      for (size_t m = 0; m < vs.size() && covered; ++m) {
        if (m != i && m != j && vs[i].proper_subset_of(vs[m]) && vs[m].proper_subset_of(vs[j])) {
          covered = false;
        }
      }
      if (covered) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

int sp_tree_dot_node(const SPTree& t, const AbstractPoset& source, int& next,
                     std::ostringstream& out) {
  const int id = next++;
  switch (t.kind) {
    case SPTree::Kind::kLeaf:
      out << "  n" << id << " [shape=box,label=\""
          << dot_escape(source.elements()[static_cast<size_t>(t.element)]) << "\"];\n";
      break;
    case SPTree::Kind::kSeries:
    case SPTree::Kind::kParallel: {
      out << "  n" << id << " [shape=ellipse,label=\""
          << (t.kind == SPTree::Kind::kSeries ? "series" : "parallel") << "\"];\n";
      const int l = sp_tree_dot_node(*t.left, source, next, out);
      const int r = sp_tree_dot_node(*t.right, source, next, out);
      out << "  n" << id << " -> n" << l << ";\n  n" << id << " -> n" << r << ";\n";
      break;
    }
  }
  return id;
}

}  // namespace

std::string sp_tree_dot(const SPTree& t, const AbstractPoset& source) {
  std::ostringstream out;
  out << "digraph sptree {\n";
  int next = 0;
  sp_tree_dot_node(t, source, next, out);
  out << "}\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(path + ": parse error at byte " + std::to_string(e.byte) + ": " +
                        e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input(path + ": cannot open file for writing");
  out << content;
  if (!out) throw invalid_input(path + ": write failed");
}

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace qblock
