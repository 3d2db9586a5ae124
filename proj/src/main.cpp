#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sici/constants.hpp"
#include "sici/registry.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int cmd_list(const std::string& category) {
  auto records = sici::list_identities(category);
  if (records.empty() && !category.empty()) {
    std::cerr << "no identities match '" << category << "'\n"
              << "usage: sici list [--category X]\n";
    return 2;
  }
  std::printf("%-5s %-20s %-7s %-8s %s\n", "id", "category", "tol", "eq",
              "title");
  for (const auto* r : records)
    std::printf("%-5s %-20s %-7s %-8s %s\n", r->id.c_str(),
                sici::category_name(r->category), sici::tol_name(r->tol_class),
                r->paper_eq.c_str(), r->title.c_str());
  return 0;
}

int cmd_run(const std::string& ids_csv, const std::string& category,
            double tol_scale, const std::string& json_path,
            const std::string& csv_path, int max_parallel, bool verbose) {
  sici::Report rep;
  if (!ids_csv.empty()) {
    // Exact-id selection: validate everything up front, then aggregate the
    // per-id sub-reports the same way run_suite does.
    std::vector<std::string> ids = split_ids(ids_csv);
    for (const auto& id : ids) {
      bool known = false;
      for (const auto& r : sici::catalog())
        if (r.id == id) known = true;
      if (!known) {
        std::cerr << "unknown identity id '" << id << "'\n"
                  << "usage: sici run [--ids a,b,c | --category X]\n";
        return 2;
      }
    }
    bool first = true;
    for (const auto& id : ids) {
      sici::Report sub = sici::run_suite(id, tol_scale, max_parallel);
      if (first) {
        rep = std::move(sub);
        first = false;
        continue;
      }
      for (auto& r : sub.results)
        if (r.id == id) rep.results.push_back(std::move(r));
      // Recount below once the exact-id filter has been applied.
    }
    // run_suite treats its filter as a prefix; keep only exact matches.
    std::vector<sici::VerificationResult> kept;
    rep.pass_count = rep.fail_count = rep.questionable_fail_count = 0;
    for (auto& r : rep.results) {
      bool wanted = false;
      for (const auto& id : ids)
        if (r.id == id) wanted = true;
      if (!wanted) continue;
      if (r.pass) {
        ++rep.pass_count;
      } else {
        ++rep.fail_count;
        if (r.questionable) ++rep.questionable_fail_count;
      }
      kept.push_back(std::move(r));
    }
    rep.results = std::move(kept);
  } else {
    if (!category.empty() && sici::list_identities(category).empty()) {
      std::cerr << "no identities match '" << category << "'\n"
                << "usage: sici run [--ids a,b,c | --category X]\n";
      return 2;
    }
    rep = sici::run_suite(category, tol_scale, max_parallel);
  }

  for (const auto& r : rep.results) {
    std::printf("%-5s %-8s abs_err=%-12.3e tol=%-9.1e %s%s\n", r.id.c_str(),
                r.paper_eq.c_str(), r.abs_err, r.tol,
                r.pass ? "PASS" : "FAIL",
                (!r.pass && r.questionable) ? " (questionable)" : "");
    if (verbose) {
      std::string params;
      for (const auto& [k, v] : r.params) {
        if (!params.empty()) params += " ";
        params += k + "=" + std::to_string(v);
      }
      std::printf("      lhs=%.17g (err %.2e)  rhs=%.17g (err %.2e)  "
                  "%.1f ms  %s\n",
                  r.lhs.value, r.lhs.err, r.rhs.value, r.rhs.err, r.wall_ms,
                  params.c_str());
    }
  }
  std::printf("totals: %d pass, %d fail (%d questionable), %d skipped\n",
              rep.pass_count, rep.fail_count, rep.questionable_fail_count,
              rep.skip_count);

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << sici::report_to_json(rep);
    if (!out.good()) {
      std::cerr << "failed to write '" << json_path << "'\n";
      return 3;
    }
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    out << sici::report_to_csv(rep);
    if (!out.good()) {
      std::cerr << "failed to write '" << csv_path << "'\n";
      return 3;
    }
  }
  return (rep.fail_count - rep.questionable_fail_count) == 0 ? 0 : 1;
}

int cmd_constants() {
  std::printf("%-20s %-24s %s\n", "name", "value", "digits");
  for (const auto& e : sici::constant_table())
    std::printf("%-20s %-24.17g %d\n", e.name.c_str(), e.value, e.digits);
  int fails = 0;
  std::printf("\nself-test:\n");
  for (const auto& c : sici::verify_constants()) {
    std::printf("%-20s %-5s discrepancy=%.3e\n", c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.discrepancy);
    if (!c.pass) ++fails;
  }
  return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for sine/cosine-integral identities"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the identity catalog");
  std::string list_category;
  list->add_option("--category", list_category,
                   "Filter by category name or id prefix");

  auto* run = app.add_subcommand("run", "Run identity verifications");
  std::string ids, run_category, json_path, csv_path;
  double tol_scale = 1.0;
  int max_parallel = 1;
  bool verbose = false;
  auto* ids_opt = run->add_option("--ids", ids, "Comma-separated identity ids");
  run->add_option("--category", run_category,
                  "Filter by category name or id prefix")
      ->excludes(ids_opt);
  run->add_option("--tol-scale", tol_scale, "Tolerance multiplier")
      ->check(CLI::PositiveNumber);
  run->add_option("--json", json_path, "Write JSON report to PATH");
  run->add_option("--csv", csv_path, "Write CSV report to PATH");
  run->add_option("--max-parallel", max_parallel, "Worker cap (advisory)");
  run->add_flag("-v,--verbose", verbose, "Per-evaluation detail");

  auto* constants =
      app.add_subcommand("constants", "Print and self-test the constant table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (list->parsed()) return cmd_list(list_category);
    if (run->parsed())
      return cmd_run(ids, run_category, tol_scale, json_path, csv_path,
                     max_parallel, verbose);
    if (constants->parsed()) return cmd_constants();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
