// Command-line front end: JSON/DOT input and output, deterministic reports,
// and the end-to-end pipeline (verify -> criticalize -> decompose ->
// construct-family -> extract-antichain -> bound report).
//
// Exit codes: 0 computed; 2 capacity cap hit or value unknown below the cap;
// 64 unparsable input; 70 a structural guarantee failed on library-produced
// data (the report names the guarantee).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qblock/blockers.hpp"
#include "qblock/errors.hpp"
#include "qblock/family.hpp"
#include "qblock/io.hpp"
#include "qblock/ramsey.hpp"
#include "qblock/selfcheck.hpp"
#include "qblock/spnfree.hpp"

namespace {

using qblock::json;

struct CommonOptions {
  std::string output;   // report path; empty = stdout
  std::string dot;      // DOT path for commands that export diagrams
  bool timings = false; // measured wall time to stderr (reports stay stable)
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qblock::invalid_input(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json file_digests(const std::vector<std::string>& paths) {
  json out = json::object();
  for (const auto& p : paths) out[p] = qblock::fnv1a_hex(slurp(p));
  return out;
}

json make_report(const std::string& command, json files, json flags, json results,
                 json assertions) {
  json report;
  report["command"] = command;
  report["inputs"]["files"] = std::move(files);
  report["inputs"]["flags"] = std::move(flags);
  report["results"] = std::move(results);
  report["assertions"] = std::move(assertions);
  report["timing"] = nullptr;
  return report;
}

void emit(const json& report, const CommonOptions& common) {
  const std::string text = report.dump(2) + "\n";
  if (common.output.empty()) {
    std::cout << text;
  } else {
    qblock::write_text_file(common.output, text);
  }
}

// --y takes comma-separated ground labels; --k takes the count of trailing
// ground elements to block.
qblock::VertexMask resolve_target(const qblock::GroundSet& ground, const std::string& y_csv,
                                  int k) {
  if (!y_csv.empty()) {
    std::vector<std::string> labels;
    std::stringstream ss(y_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) labels.push_back(item);
    }
    if (labels.empty()) throw qblock::invalid_input("--y lists no labels");
    return ground.mask_of(labels);
  }
  if (k > 0) {
    if (k > ground.size()) throw qblock::invalid_input("--k exceeds the ground size");
    qblock::VertexMask y;
    for (int i = ground.size() - k; i < ground.size(); ++i) y = y.with(i);
    return y;
  }
  throw qblock::invalid_input("pass --y with labels or --k with a count");
}

json coloring_to_json(int dimension, const qblock::Coloring& coloring) {
  json j;
  j["dimension"] = dimension;
  j["ground"] = coloring.ground().labels();
  json red = json::array();
  for (qblock::VertexMask v : coloring.red_vertices()) red.push_back(coloring.ground().names_of(v));
  j["red_vertices"] = std::move(red);
  return j;
}

json certificate_to_json(const qblock::InducedSubposet& f,
                         const qblock::BlockerCertificate& cert) {
  json j;
  j["blocker"] = cert.blocker;
  j["strategy"] =
      cert.strategy == qblock::BlockerStrategy::kHomomorphism ? "homomorphism" : "enumeration";
  j["work"] = cert.work;
  if (cert.avoiding_map.has_value()) {
    j["avoiding_map"] = qblock::set_map_to_json(f, *cert.avoiding_map);
  } else {
    j["avoiding_map"] = nullptr;
  }
  if (cert.disjoint_copy.has_value()) {
    j["disjoint_copy"] = qblock::embedding_to_json(*cert.disjoint_copy);
  } else {
    j["disjoint_copy"] = nullptr;
  }
  return j;
}

json structure_to_json(const qblock::CriticalStructureReport& r) {
  json j;
  j["parts_nonempty"] = r.parts_nonempty;
  j["size_at_least_parts"] = r.size_at_least_parts;
  j["empty_trace_antichain"] = r.empty_trace_antichain;
  j["full_trace_antichain"] = r.full_trace_antichain;
  j["connected"] = r.connected;
  j["restrictions_block"] = r.restrictions_block;
  return j;
}

json family_report_to_json(const qblock::FamilyCheckReport& r) {
  json j;
  j["entries_valid"] = r.entries_valid;
  j["child_within_parent"] = r.child_within_parent;
  j["reverse_containment"] = r.parent_within_child;  // observed, not required
  j["trace_partition"] = r.trace_partition;
  j["min_prefix_count"] = r.min_prefix_count;
  j["final_level_traces"] = r.final_level_traces;
  return j;
}

json antichain_to_json(const qblock::GroundSet& ground, const qblock::AntichainExtraction& ae) {
  json j;
  json selected = json::array();
  for (const auto& s : ae.selected) {
    json seq = json::array();
    for (int e : s.seq()) seq.push_back(ground.label(e));
    selected.push_back(std::move(seq));
  }
  j["selected_sequences"] = std::move(selected);
  json vertices = json::array();
  for (qblock::VertexMask v : ae.antichain) vertices.push_back(ground.names_of(v));
  j["antichain"] = std::move(vertices);
  j["type_class_size"] = ae.type_class_size;
  j["max_intersection_class"] = ae.max_intersection_class;
  return j;
}

// Hasse diagram of the family with the construction's root vertices marked.
std::string family_overlay_dot(const qblock::BlockerFamily& family) {
  const auto& ground = family.ground();
  const qblock::InducedSubposet& base =
      family.at(qblock::OrderedSubset{}).f_s;
  std::map<uint32_t, std::vector<std::string>> root_tags;
  for (const auto& [key, entry] : family.entries()) {
    std::string tag = "(";
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) tag += ",";
      tag += ground.label(key[i]);
    }
    tag += ")";
    root_tags[entry.z_s.bits()].push_back(tag);
  }
  std::ostringstream out;
  out << "digraph family {\n  rankdir=BT;\n  node [shape=box];\n";
  const auto& vs = base.vertices();
  auto escape = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r.push_back('\\');
      r.push_back(c);
    }
    return r;
  };
  for (size_t i = 0; i < vs.size(); ++i) {
    out << "  n" << i << " [label=\"" << escape(ground.set_string(vs[i]));
    const auto it = root_tags.find(vs[i].bits());
    if (it != root_tags.end()) {
      out << "\\nroot of";
      for (const auto& tag : it->second) out << " " << escape(tag);
      out << "\" peripheries=2];\n";
    } else {
      out << "\"];\n";
    }
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = 0; j < vs.size(); ++j) {
      if (!vs[i].proper_subset_of(vs[j])) continue;
      bool covered = true;
      for (size_t m = 0; m < vs.size() && covered; ++m) {
        if (m != i && m != j && vs[i].proper_subset_of(vs[m]) &&
            vs[m].proper_subset_of(vs[j])) {
          covered = false;
        }
      }
      if (covered) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

// Accepts either relation-matrix poset JSON ({"elements","covers"}) or a
// lattice family ({"ground","vertices"}), the latter taken as its own poset.
qblock::AbstractPoset pattern_from_file(const std::string& path) {
  const json j = qblock::read_json_file(path);
  if (j.is_object() && j.contains("elements")) return qblock::poset_from_json(j);
  if (j.is_object() && j.contains("ground")) {
    return qblock::subposet_from_json(j).as_abstract();
  }
  throw qblock::invalid_input(path + ": expected a poset or family object");
}

struct BlockerArgs {
  std::string input;
  std::string y_csv;
  int k = 0;
  std::string strategy = "homomorphism";
  std::string preference = "min";
};

qblock::RootPreference parse_preference(const std::string& p) {
  if (p == "min") return qblock::RootPreference::kPreferMin;
  if (p == "max") return qblock::RootPreference::kPreferMax;
  throw qblock::invalid_input("--root-preference must be min or max");
}

json flags_json(std::initializer_list<std::pair<const char*, json>> kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

int run_verify_blocker(const BlockerArgs& a, const CommonOptions& common) {
  const qblock::InducedSubposet f = qblock::subposet_from_json(qblock::read_json_file(a.input));
  const qblock::VertexMask y = resolve_target(f.ground(), a.y_csv, a.k);
  json results;
  json assertions = json::object();
  if (a.strategy == "both") {
    const auto hom = qblock::is_blocker(f, y, qblock::BlockerStrategy::kHomomorphism);
    const auto en = qblock::is_blocker(f, y, qblock::BlockerStrategy::kEnumeration);
    if (hom.blocker != en.blocker) {
      throw qblock::invariant_violation("strategy-agreement",
                                        "the two verification strategies disagree");
    }
    results["certificate"] = certificate_to_json(f, hom);
    results["enumeration_certificate"] = certificate_to_json(f, en);
    assertions["strategy_agreement"] = true;
  } else {
    const auto strat = a.strategy == "enumeration" ? qblock::BlockerStrategy::kEnumeration
                                                   : qblock::BlockerStrategy::kHomomorphism;
    if (a.strategy != "homomorphism" && a.strategy != "enumeration") {
      throw qblock::invalid_input("--strategy must be homomorphism, enumeration, or both");
    }
    results["certificate"] = certificate_to_json(f, qblock::is_blocker(f, y, strat));
  }
  results["blocked_set"] = f.ground().names_of(y);
  emit(make_report("verify-blocker", file_digests({a.input}),
                   flags_json({{"y", f.ground().names_of(y)},
                               {"strategy", a.strategy}}),
                   results, assertions),
       common);
  return 0;
}

int run_criticalize(const BlockerArgs& a, const CommonOptions& common) {
  const qblock::InducedSubposet f = qblock::subposet_from_json(qblock::read_json_file(a.input));
  const qblock::VertexMask y = resolve_target(f.ground(), a.y_csv, a.k);
  const qblock::InducedSubposet core = qblock::criticalize(f, y);
  if (!qblock::is_critical_blocker(core, y)) {
    throw qblock::invariant_violation("greedy-reduction",
                                      "reduced family is not a critical blocker");
  }
  const auto structure = qblock::check_critical_structure(core, y);
  json results;
  results["blocked_set"] = f.ground().names_of(y);
  results["input_size"] = f.size();
  results["core"] = qblock::subposet_to_json(core);
  results["core_size"] = core.size();
  json assertions = structure_to_json(structure);
  assertions["is_critical"] = true;
  if (!structure.ok()) {
    throw qblock::invariant_violation("critical-structure",
                                      "critical core fails the structure suite");
  }
  emit(make_report("criticalize", file_digests({a.input}),
                   flags_json({{"y", f.ground().names_of(y)}}), results, assertions),
       common);
  return 0;
}

int run_decompose(const std::string& input, const CommonOptions& common) {
  const qblock::AbstractPoset p = pattern_from_file(input);
  const auto tree = qblock::sp_decompose(p);
  const bool pattern_free = qblock::is_n_free(p);
  if (pattern_free != tree.has_value()) {
    throw qblock::invariant_violation("decomposition-equivalence",
                                      "pattern-freeness and decomposability disagree");
  }
  json results;
  results["elements"] = p.size();
  results["series_parallel"] = tree.has_value();
  json assertions = json::object();
  assertions["pattern_freeness_matches"] = true;
  if (tree.has_value()) {
    if (!qblock::poset_isomorphic(qblock::evaluate_sp_tree(*tree, p), p)) {
      throw qblock::invariant_violation("tree-evaluation",
                                        "decomposition does not rebuild the poset");
    }
    assertions["evaluation_isomorphic"] = true;
    results["tree"] = qblock::sp_tree_to_json(*tree, p);
    if (!common.dot.empty()) qblock::write_text_file(common.dot, qblock::sp_tree_dot(*tree, p));
  } else {
    results["tree"] = nullptr;
    if (!common.dot.empty()) qblock::write_text_file(common.dot, qblock::hasse_dot(p));
  }
  emit(make_report("decompose", file_digests({input}), flags_json({}), results, assertions),
       common);
  return 0;
}

int run_construct_family(const BlockerArgs& a, const CommonOptions& common) {
  const qblock::InducedSubposet f = qblock::subposet_from_json(qblock::read_json_file(a.input));
  const qblock::VertexMask y = resolve_target(f.ground(), a.y_csv, a.k);
  const qblock::BlockerFamily family = qblock::build_family(f, y, parse_preference(a.preference));
  const auto report = qblock::verify_family(family);
  if (!report.ok()) {
    throw qblock::invariant_violation("family-verification",
                                      "constructed family fails verification");
  }
  const auto extraction = qblock::extract_antichain(family);
  json results;
  results["family"] = qblock::family_to_json(family);
  results["antichain"] = antichain_to_json(f.ground(), extraction);
  emit(make_report("construct-family", file_digests({a.input}),
                   flags_json({{"y", f.ground().names_of(y)},
                               {"root_preference", a.preference}}),
                   results, family_report_to_json(report)),
       common);
  if (!common.dot.empty()) qblock::write_text_file(common.dot, family_overlay_dot(family));
  return 0;
}

int run_extract_antichain(const BlockerArgs& a, const CommonOptions& common) {
  const qblock::InducedSubposet f = qblock::subposet_from_json(qblock::read_json_file(a.input));
  const qblock::VertexMask y = resolve_target(f.ground(), a.y_csv, a.k);
  const qblock::BlockerFamily family = qblock::build_family(f, y, parse_preference(a.preference));
  const auto report = qblock::verify_family(family);
  if (!report.ok()) {
    throw qblock::invariant_violation("family-verification",
                                      "constructed family fails verification");
  }
  const auto extraction = qblock::extract_antichain(family);
  json results = antichain_to_json(f.ground(), extraction);
  results["capacity_inverse"] =
      qblock::sperner_number(static_cast<uint64_t>(extraction.antichain.size()));
  json assertions;
  assertions["pairwise_incomparable"] = true;  // enforced inside extract_antichain
  assertions["intersection_class_bound"] = extraction.max_intersection_class <= 2;
  emit(make_report("extract-antichain", file_digests({a.input}),
                   flags_json({{"y", f.ground().names_of(y)},
                               {"root_preference", a.preference}}),
                   results, assertions),
       common);
  return 0;
}

struct RamseyArgs {
  std::string pattern;
  int n = 1;
  int nmax = 4;
  int jobs = 1;
  bool symmetry = false;
};

int run_ramsey(const RamseyArgs& a, const CommonOptions& common) {
  const qblock::AbstractPoset pattern = pattern_from_file(a.pattern);
  qblock::RamseyOptions options;
  options.jobs = a.jobs;
  options.symmetry = a.symmetry;
  const qblock::RamseyResult r = qblock::ramsey_number(pattern, a.n, a.nmax, options);
  json results;
  results["n"] = a.n;
  results["value"] = r.value.has_value() ? json(*r.value) : json(nullptr);
  results["bracket_low"] = r.bracket_low;
  results["bracket_high"] = r.bracket_high.has_value() ? json(*r.bracket_high) : json(nullptr);
  results["colorings_checked"] = r.colorings_checked;
  json witnesses = json::array();
  for (const auto& [dim, coloring] : r.witnesses) witnesses.push_back(coloring_to_json(dim, coloring));
  results["witnesses"] = std::move(witnesses);
  json assertions;
  assertions["witnesses_validated"] = true;  // each re-validated during the scan
  assertions["within_bracket"] = r.value.has_value();
  assertions["monotone_rechecked"] = r.monotone_rechecked;
  emit(make_report("ramsey", file_digests({a.pattern}),
                   flags_json({{"n", a.n},
                               {"nmax", a.nmax},
                               {"jobs", a.jobs},
                               {"symmetry", a.symmetry}}),
                   results, assertions),
       common);
  return r.value.has_value() ? 0 : 2;
}

int run_mpn(const RamseyArgs& a, const CommonOptions& common) {
  const qblock::AbstractPoset pattern = pattern_from_file(a.pattern);
  const qblock::MpnResult r = qblock::compute_mpn(pattern, a.n, a.nmax);
  json results;
  results["n"] = a.n;
  results["scan_start"] = r.scan_start;
  results["value"] = r.value.has_value() ? json(*r.value) : json(nullptr);
  results["families_tested"] = r.families_tested;
  json witnesses = json::array();
  for (const auto& [dim, blocker] : r.witnesses) {
    json w;
    w["dimension"] = dim;
    w["blocker"] = qblock::subposet_to_json(blocker);
    witnesses.push_back(std::move(w));
  }
  results["witnesses"] = std::move(witnesses);
  json assertions;
  assertions["witnesses_validated"] = true;
  emit(make_report("mpn", file_digests({a.pattern}),
                   flags_json({{"n", a.n}, {"nmax", a.nmax}}), results, assertions),
       common);
  return r.value.has_value() ? 0 : 2;
}

int run_pipeline(const BlockerArgs& a, const CommonOptions& common) {
  const qblock::InducedSubposet f = qblock::subposet_from_json(qblock::read_json_file(a.input));
  const qblock::VertexMask y = resolve_target(f.ground(), a.y_csv, a.k);
  json results;
  json assertions = json::object();
  results["blocked_set"] = f.ground().names_of(y);

  const auto cert = qblock::is_blocker(f, y);
  results["verify"] = certificate_to_json(f, cert);
  if (!cert.blocker) {
    results["core"] = nullptr;
    results["series_parallel"] = nullptr;
    results["family"] = nullptr;
    results["antichain"] = nullptr;
    results["bound"] = nullptr;
    emit(make_report("pipeline", file_digests({a.input}),
                     flags_json({{"y", f.ground().names_of(y)},
                                 {"root_preference", a.preference}}),
                     results, assertions),
         common);
    return 0;
  }

  const qblock::InducedSubposet core = qblock::criticalize(f, y);
  if (!qblock::is_critical_blocker(core, y)) {
    throw qblock::invariant_violation("greedy-reduction",
                                      "reduced family is not a critical blocker");
  }
  const auto structure = qblock::check_critical_structure(core, y);
  if (!structure.ok()) {
    throw qblock::invariant_violation("critical-structure",
                                      "critical core fails the structure suite");
  }
  results["core"] = qblock::subposet_to_json(core);
  assertions["core_structure"] = structure_to_json(structure);

  const qblock::AbstractPoset core_poset = core.as_abstract();
  const auto tree = qblock::sp_decompose(core_poset);
  const bool pattern_free = qblock::is_n_free(core);
  if (pattern_free != tree.has_value()) {
    throw qblock::invariant_violation("decomposition-equivalence",
                                      "pattern-freeness and decomposability disagree");
  }
  results["series_parallel"] = tree.has_value();
  if (tree.has_value()) {
    if (!qblock::poset_isomorphic(qblock::evaluate_sp_tree(*tree, core_poset), core_poset)) {
      throw qblock::invariant_violation("tree-evaluation",
                                        "decomposition does not rebuild the poset");
    }
    results["tree"] = qblock::sp_tree_to_json(*tree, core_poset);
  } else {
    results["tree"] = nullptr;
  }

  if (!tree.has_value()) {
    // The root/family machinery needs a pattern-free core; report honestly.
    results["family"] = nullptr;
    results["antichain"] = nullptr;
    results["bound"] = nullptr;
    emit(make_report("pipeline", file_digests({a.input}),
                     flags_json({{"y", f.ground().names_of(y)},
                                 {"root_preference", a.preference}}),
                     results, assertions),
         common);
    return 0;
  }

  const qblock::BlockerFamily family =
      qblock::build_family(core, y, parse_preference(a.preference));
  const auto family_report = qblock::verify_family(family);
  if (!family_report.ok()) {
    throw qblock::invariant_violation("family-verification",
                                      "constructed family fails verification");
  }
  assertions["family"] = family_report_to_json(family_report);
  results["family"] = qblock::family_to_json(family);

  const auto extraction = qblock::extract_antichain(family);
  results["antichain"] = antichain_to_json(f.ground(), extraction);

  const auto t = static_cast<uint64_t>(extraction.antichain.size());
  const int alpha = qblock::sperner_number(t);
  json bound;
  bound["antichain_size"] = t;
  bound["alpha"] = alpha;
  bound["line"] = "N >= " + std::to_string(alpha);
  results["bound"] = std::move(bound);

  emit(make_report("pipeline", file_digests({a.input}),
                   flags_json({{"y", f.ground().names_of(y)},
                               {"root_preference", a.preference}}),
                   results, assertions),
       common);
  if (!common.dot.empty()) qblock::write_text_file(common.dot, family_overlay_dot(family));
  return 0;
}

int run_selftest(uint64_t seed, const CommonOptions& common) {
  const auto outcomes = qblock::run_all_checks(seed);
  json checks = json::array();
  bool all_passed = true;
  std::string first_failure;
  for (const auto& c : outcomes) {
    json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    checks.push_back(std::move(j));
    if (!c.passed) {
      all_passed = false;
      if (first_failure.empty()) first_failure = c.name;
    }
  }
  json results;
  results["checks"] = std::move(checks);
  results["all_passed"] = all_passed;
  json assertions;
  assertions["all_suites"] = all_passed;
  emit(make_report("selftest", json::object(), flags_json({{"seed", seed}}), results,
                   assertions),
       common);
  if (!all_passed) {
    std::cerr << "invariant violation [" << first_failure << "]: self-check suite failed\n";
    return 70;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean-lattice blocker toolkit"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--output", common.output, "write the report to this file instead of stdout");
  app.add_flag("--timings", common.timings, "print measured wall time to stderr");

  BlockerArgs verify_args;
  auto* verify = app.add_subcommand("verify-blocker", "decide whether a family blocks a set");
  verify->add_option("input", verify_args.input, "family JSON file")->required();
  auto* vy = verify->add_option("--y", verify_args.y_csv, "comma-separated blocked labels");
  verify->add_option("--k", verify_args.k, "block the last k ground elements")->excludes(vy);
  verify->add_option("--strategy", verify_args.strategy,
                     "homomorphism (default), enumeration, or both");

  BlockerArgs crit_args;
  auto* crit = app.add_subcommand("criticalize", "greedily reduce a blocker to a critical core");
  crit->add_option("input", crit_args.input, "family JSON file")->required();
  auto* cy = crit->add_option("--y", crit_args.y_csv, "comma-separated blocked labels");
  crit->add_option("--k", crit_args.k, "block the last k ground elements")->excludes(cy);

  std::string decompose_input;
  auto* dec = app.add_subcommand("decompose", "series-parallel decomposition of a poset");
  dec->add_option("input", decompose_input, "poset or family JSON file")->required();
  dec->add_option("--dot", common.dot, "write a DOT diagram to this file");

  BlockerArgs family_args;
  auto* fam = app.add_subcommand("construct-family",
                                 "recursive root family of a pattern-free critical blocker");
  fam->add_option("input", family_args.input, "family JSON file")->required();
  auto* fy = fam->add_option("--y", family_args.y_csv, "comma-separated blocked labels");
  fam->add_option("--k", family_args.k, "block the last k ground elements")->excludes(fy);
  fam->add_option("--root-preference", family_args.preference, "min (default) or max");
  fam->add_option("--dot", common.dot, "write a root-overlay DOT diagram to this file");

  BlockerArgs anti_args;
  auto* anti = app.add_subcommand("extract-antichain",
                                  "incomparable roots from the recursive family");
  anti->add_option("input", anti_args.input, "family JSON file")->required();
  auto* ay = anti->add_option("--y", anti_args.y_csv, "comma-separated blocked labels");
  anti->add_option("--k", anti_args.k, "block the last k ground elements")->excludes(ay);
  anti->add_option("--root-preference", anti_args.preference, "min (default) or max");

  RamseyArgs ramsey_args;
  auto* ram = app.add_subcommand("ramsey", "exact two-color threshold for pattern vs n-cube");
  ram->add_option("--pattern", ramsey_args.pattern, "pattern poset JSON file")->required();
  ram->add_option("--n", ramsey_args.n, "cube dimension (default 1)");
  ram->add_option("--nmax", ramsey_args.nmax, "largest host dimension to try (default 4)");
  ram->add_option("--jobs", ramsey_args.jobs, "worker threads (default 1)");
  ram->add_flag("--symmetry", ramsey_args.symmetry,
                "scan only lexicographically-minimal colorings per relabeling orbit");

  RamseyArgs mpn_args;
  auto* mpn = app.add_subcommand("mpn", "smallest dimension with no pattern-free blocker");
  mpn->add_option("--pattern", mpn_args.pattern, "pattern poset JSON file")->required();
  mpn->add_option("--n", mpn_args.n, "cube dimension (default 1)");
  mpn->add_option("--nmax", mpn_args.nmax, "largest host dimension to try (default 4)");

  BlockerArgs pipe_args;
  auto* pipe = app.add_subcommand(
      "pipeline", "verify, criticalize, decompose, build the family, extract the antichain");
  pipe->add_option("input", pipe_args.input, "family JSON file")->required();
  auto* py = pipe->add_option("--y", pipe_args.y_csv, "comma-separated blocked labels");
  pipe->add_option("--k", pipe_args.k, "block the last k ground elements")->excludes(py);
  pipe->add_option("--root-preference", pipe_args.preference, "min (default) or max");
  pipe->add_option("--dot", common.dot, "write a root-overlay DOT diagram to this file");

  uint64_t seed = 0;
  auto* self = app.add_subcommand("selftest", "run the exhaustive small-scale invariant suites");
  self->add_option("--seed", seed, "seed for the randomized cross-checks (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (verify->parsed()) {
      code = run_verify_blocker(verify_args, common);
    } else if (crit->parsed()) {
      code = run_criticalize(crit_args, common);
    } else if (dec->parsed()) {
      code = run_decompose(decompose_input, common);
    } else if (fam->parsed()) {
      code = run_construct_family(family_args, common);
    } else if (anti->parsed()) {
      code = run_extract_antichain(anti_args, common);
    } else if (ram->parsed()) {
      code = run_ramsey(ramsey_args, common);
    } else if (mpn->parsed()) {
      code = run_mpn(mpn_args, common);
    } else if (pipe->parsed()) {
      code = run_pipeline(pipe_args, common);
    } else if (self->parsed()) {
      code = run_selftest(seed, common);
    }
  } catch (const qblock::invariant_violation& e) {
    std::cerr << "invariant violation [" << e.lemma << "]: " << e.what() << "\n";
    return 70;
  } catch (const qblock::capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const qblock::invalid_input& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (common.timings) {
    const auto end = std::chrono::steady_clock::now();
    std::cerr << "timing: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count()
              << " ms\n";
  }
  return code;
}
