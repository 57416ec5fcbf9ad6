// SPDX-FileCopyrightText: (c) 2026 the dpgraph authors
// SPDX-License-Identifier: Apache-2.0
//
// dp: command-line front end for the dpgraph shared library. Talks to the
// C API only; everything below is argument handling and output formatting.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "dpgraph/dpgraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitTooLarge = 4;

int exit_code_for(dpg_status status) {
  switch (status) {
    case DPG_OK: return kExitOk;
    case DPG_ERROR_PARSE: return kExitParse;
    case DPG_ERROR_UNKNOWN_SUITE:
    case DPG_ERROR_INVALID_ARGUMENT: return kExitParse;
    case DPG_ERROR_DISCONNECTED: return kExitDisconnected;
    case DPG_ERROR_TOO_LARGE: return kExitTooLarge;
    default: return kExitViolation;
  }
}

int fail(dpg_status status) {
  std::cerr << "error: " << dpg_last_error() << " (" << dpg_status_name(status) << ")\n";
  return exit_code_for(status);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(kExitParse);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GraphHandle {
  dpg_graph* ptr = nullptr;
  ~GraphHandle() { dpg_graph_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { dpg_string_free(ptr); }
};

void print_human_analysis(const nlohmann::json& report) {
  std::cout << "graph " << report["id"].get<std::string>() << ": order "
            << report["order"].get<int>() << ", size " << report["size"].get<int>()
            << ", min degree " << report["min_degree"].get<int>() << "\n";
  std::cout << "cut vertices: " << report["cut_vertices"].dump() << "\n";
  if (report.contains("ddp")) {
    std::cout << "ddp: " << report["ddp"].dump() << "\n";
    std::cout << "distance preserving: " << (report["is_dp"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "sequentially distance preserving: "
              << (report["is_sdp"].get<bool>() ? "yes" : "no") << "\n";
    if (report.contains("sdp_ordering"))
      std::cout << "sdp ordering: " << report["sdp_ordering"].dump() << "\n";
    if (report["acyclic"].get<bool>())
      std::cout << "longest induced cycle: none (acyclic)\n";
    else
      std::cout << "longest induced cycle: " << report["longest_induced_cycle"].get<int>()
                << " " << report["induced_cycle_witness"].dump() << "\n";
  } else {
    std::cout << "(exponential stages skipped)\n";
  }
}

void print_suite_summary(const nlohmann::json& report) {
  std::cout << "suite " << report["suite"].get<std::string>() << " ("
            << report["checks"].get<std::string>() << ")\n";
  std::cout << "catalog: " << report["catalog"].get<std::string>() << ", bounds "
            << report["bounds"].dump() << ", seed " << report["seed"].get<std::uint64_t>()
            << ", threads " << report["threads"].get<int>() << "\n";
  std::cout << "counts: " << report["counts"].dump() << "\n";
  const auto violations = report["violations"].get<std::uint64_t>();
  const auto findings = report["findings"].get<std::uint64_t>();
  std::cout << "violations: " << violations << ", findings: " << findings << " ("
            << report["runtime_ms"].get<double>() << " ms)\n";
  if (violations > 0) std::cout << "violation samples: " << report["violation_samples"].dump(2) << "\n";
  if (findings > 0) std::cout << "FINDINGS: " << report["finding_samples"].dump(2) << "\n";
  if (report.contains("converse_instance"))
    std::cout << "converse instance: " << report["converse_instance"].dump() << "\n";
  if (report.contains("probe")) std::cout << "probe: " << report["probe"].dump() << "\n";
  if (report.contains("per_order")) std::cout << "per order: " << report["per_order"].dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decide and certify distance-preserving structure in small graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "edgelist";
  bool json = false;
  bool force = false;
  bool skip_dp = false;
  int min_n = 2;
  int max_n = 7;
  std::uint64_t seed = 1;
  std::string catalog;
  std::string suite_name;
  int family_k = 0;
  int family_l = 0;
  bool enumerate = false;
  std::uint64_t limit = 500;
  bool have_seed = false;

  auto* analyze = app.add_subcommand("analyze", "full report for one graph");
  analyze->add_option("input", input, "input file, or - for stdin");
  analyze->add_option("--format", format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  analyze->add_flag("--json", json, "emit the raw JSON report");
  analyze->add_flag("--skip-dp", skip_dp, "skip the exponential stages (dp profile, sdp search, chordality)");
  analyze->add_flag("--force", force, "run the exponential stages regardless of graph order");

  auto* theorems = app.add_subcommand("theorems", "run a proved-statement sweep suite");
  theorems->add_option("suite", suite_name,
                       "one of: lemma-w4s, prop-sdp, thm-4chordal, thm-kri, thm-decomp, "
                       "cor-pathjoin, thm-ckl, cor-dp-not-sdp")
      ->required();
  theorems->add_option("--min-n", min_n, "smallest order to sweep");
  theorems->add_option("--max-n", max_n, "largest order to sweep (exhaustive cap is 7)");
  theorems->add_option("--seed", seed, "seed for sampled sweeps");
  theorems->add_option("--catalog", catalog, "graph6 file replacing the exhaustive catalog");
  theorems->add_flag("--json", json, "emit the raw JSON result");

  auto* conjectures = app.add_subcommand("conjectures", "run an open-conjecture sweep suite");
  conjectures->add_option("name", suite_name, "one of: min-degree-half, nussbaum-two-thirds, dp-fraction")
      ->required();
  conjectures->add_option("--min-n", min_n, "smallest order to sweep");
  conjectures->add_option("--max-n", max_n, "largest order to sweep (exhaustive cap is 7)");
  conjectures->add_option("--seed", seed, "seed for sampled sweeps");
  conjectures->add_option("--catalog", catalog, "graph6 file replacing the exhaustive catalog");
  conjectures->add_flag("--json", json, "emit the raw JSON result");

  auto* family = app.add_subcommand("family", "generate members of a graph family");
  auto* ckl = family->add_subcommand("ckl", "cycle with window-attached extra vertices");
  ckl->add_option("--k", family_k, "cycle length")->required();
  ckl->add_option("--l", family_l, "number of attached vertices")->required();
  ckl->add_flag("--enumerate", enumerate, "emit the family in deterministic order");
  auto* ckl_seed = ckl->add_option("--seed", seed, "emit one seeded sample");
  ckl->add_option("--limit", limit, "stop enumeration after this many members");
  ckl->add_option("--format", format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  ckl->add_flag("--json", json, "emit JSON records with the attachment specs");

  auto* decompose = app.add_subcommand("decompose", "cut-vertex decomposition report");
  decompose->add_option("input", input, "input file, or - for stdin");
  decompose->add_option("--format", format, "edgelist or graph6")->check(CLI::IsMember({"edgelist", "graph6"}));
  decompose->add_flag("--json", json, "emit the raw JSON report");
  decompose->add_flag("--force", force, "run the brute-force cross-check beyond the cap");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    GraphHandle g;
    if (dpg_status s = dpg_graph_parse(read_input(input).c_str(), format.c_str(), &g.ptr)) return fail(s);
    if (!skip_dp && dpg_graph_order(g.ptr) > 16)
      std::cerr << "note: dp profile enumeration is exponential; order "
                << dpg_graph_order(g.ptr) << " may take a while\n";
    StringHandle out;
    if (dpg_status s = dpg_analyze_json(g.ptr, skip_dp, force, &out.ptr)) return fail(s);
    if (json)
      std::cout << out.ptr << "\n";
    else
      print_human_analysis(nlohmann::json::parse(out.ptr));
    return kExitOk;
  }

  if (theorems->parsed() || conjectures->parsed()) {
    StringHandle out;
    std::uint64_t violations = 0, findings = 0;
    dpg_status s;
    if (theorems->parsed())
      s = dpg_theorems_json(suite_name.c_str(), min_n, max_n, seed, 0,
                            catalog.empty() ? nullptr : catalog.c_str(), &out.ptr, &violations);
    else
      s = dpg_conjectures_json(suite_name.c_str(), min_n, max_n, seed, 0,
                               catalog.empty() ? nullptr : catalog.c_str(), &out.ptr, &violations,
                               &findings);
    if (s) return fail(s);
    if (json)
      std::cout << out.ptr << "\n";
    else
      print_suite_summary(nlohmann::json::parse(out.ptr));
    // Counterexamples to proved statements are bugs; conjecture findings are
    // reported results and leave the exit status clean.
    return violations > 0 ? kExitViolation : kExitOk;
  }

  if (ckl->parsed()) {
    have_seed = ckl_seed->count() > 0;
    if (enumerate == have_seed) {
      std::cerr << "error: pass exactly one of --enumerate or --seed\n";
      return kExitParse;
    }
    std::vector<dpg_ckl_attachment> attachments(std::max(family_l, 0));
    auto emit_member = [&](std::uint64_t index) -> int {
      GraphHandle g;
      if (dpg_status s = dpg_ckl_build(family_k, attachments.data(), attachments.size(), &g.ptr))
        return fail(s);
      StringHandle text;
      if (dpg_status s = dpg_graph_format(g.ptr, format.c_str(), &text.ptr)) return fail(s);
      if (json) {
        nlohmann::json record;
        record["index"] = index;
        record["k"] = family_k;
        record["l"] = family_l;
        auto specs = nlohmann::json::array();
        for (const auto& att : attachments)
          specs.push_back({{"window_start", att.window_start}, {"joins", att.joins}});
        record["attachments"] = specs;
        record["graph"] = text.ptr;
        std::cout << record.dump() << "\n";
      } else {
        std::cout << text.ptr;
        if (format == "graph6") std::cout << "\n";
      }
      return kExitOk;
    };
    if (enumerate) {
      std::uint64_t total = 0;
      if (dpg_status s = dpg_ckl_spec_count(family_k, family_l, &total)) return fail(s);
      const std::uint64_t stop = std::min(total, limit);
      for (std::uint64_t i = 0; i < stop; ++i) {
        if (dpg_status s = dpg_ckl_spec_at(family_k, family_l, i, attachments.data())) return fail(s);
        if (int rc = emit_member(i)) return rc;
      }
    } else {
      if (dpg_status s = dpg_ckl_sample(family_k, family_l, seed, attachments.data())) return fail(s);
      if (int rc = emit_member(0)) return rc;
    }
    return kExitOk;
  }

  if (decompose->parsed()) {
    GraphHandle g;
    if (dpg_status s = dpg_graph_parse(read_input(input).c_str(), format.c_str(), &g.ptr)) return fail(s);
    StringHandle out;
    if (dpg_status s = dpg_decompose_json(g.ptr, force, &out.ptr)) return fail(s);
    if (json) {
      std::cout << out.ptr << "\n";
    } else {
      const auto report = nlohmann::json::parse(out.ptr);
      std::cout << "graph " << report["id"].get<std::string>() << ": cut vertices "
                << report["cut_vertices"].dump() << "\n";
      std::cout << "ddp via decomposition: " << report["ddp"].dump() << "\n";
      if (report.contains("verified"))
        std::cout << "brute-force cross-check: "
                  << (report["verified"].get<bool>() ? "match" : "MISMATCH") << "\n";
    }
    return kExitOk;
  }

  return kExitParse;
}
