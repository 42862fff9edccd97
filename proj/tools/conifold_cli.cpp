// SPDX-License-Identifier: Apache-2.0

// Command-line front end.  Talks to the library exclusively through the
// public C interface; all output is exact.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage or input
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conifold/conifold.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { conifold_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ReportDeleter {
  void operator()(conifold_report* r) const { conifold_report_free(r); }
};
using OwnedReport = std::unique_ptr<conifold_report, ReportDeleter>;

struct DatasetDeleter {
  void operator()(conifold_gv_dataset* d) const {
    conifold_gv_dataset_free(d);
  }
};
using OwnedDataset = std::unique_ptr<conifold_gv_dataset, DatasetDeleter>;

int fail_with_last_error() {
  std::cerr << "error: " << conifold_last_error() << "\n";
  return kExitUsage;
}

// Prints an owned string produced by the library and reports pass.
int emit(char* raw) {
  OwnedString s(raw);
  std::cout << s.get();
  return kExitPass;
}

int emit_report(conifold_report* raw, conifold_format format) {
  OwnedReport report(raw);
  char* rendered = nullptr;
  if (conifold_report_render(report.get(), format, &rendered) != CONIFOLD_OK)
    return fail_with_last_error();
  OwnedString s(rendered);
  std::cout << s.get();
  return conifold_report_passed(report.get()) ? kExitPass : kExitCheckFailed;
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact series and difference-equation checks for the "
               "all-genus conifold potential"};
  app.set_version_flag("--version", std::string(conifold_version()));
  app.require_subcommand(1);

  // Shared option state; each subcommand registers the flags it uses.
  unsigned n_index = 0;
  long order = 0;
  int genus = 6;
  int qdeg = 20;
  int kdeg = 20;
  int trunc = 0;
  std::string alpha;
  std::string input;
  std::string format_name = "table";

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };
  const auto format = [&]() {
    return format_name == "json" ? CONIFOLD_FORMAT_JSON
                                 : CONIFOLD_FORMAT_TEXT;
  };

  auto* cmd_bernoulli =
      app.add_subcommand("bernoulli", "Print the Bernoulli number B_n");
  cmd_bernoulli->add_option("--n", n_index, "Index n")->required();

  auto* cmd_polylog = app.add_subcommand(
      "polylog", "Print the polylogarithm Li_s(q) as a truncated series");
  cmd_polylog->add_option("--order", order, "Weight s")->required();
  cmd_polylog->add_option("--qdeg", qdeg, "Truncation degree in q")
      ->capture_default_str();
  add_format(cmd_polylog);

  auto* cmd_potential = app.add_subcommand(
      "potential", "Print the all-genus potential collected by q-degree");
  cmd_potential->add_option("--genus", genus, "Genus cutoff")
      ->capture_default_str();
  cmd_potential->add_option("--qdeg", qdeg, "Truncation degree in q")
      ->capture_default_str();
  add_format(cmd_potential);

  auto* cmd_sin = app.add_subcommand(
      "sin-expansion",
      "Print the Laurent expansion of 1/(2 sin(lambda/2))^2");
  trunc = 10;
  cmd_sin->add_option("--order", trunc, "Highest lambda exponent")
      ->capture_default_str();
  add_format(cmd_sin);

  auto* cmd_identity = app.add_subcommand(
      "check-identity", "Verify the Bernoulli generating identity");
  int identity_trunc = 40;
  cmd_identity->add_option("--order", identity_trunc, "Truncation order in w")
      ->capture_default_str();
  add_format(cmd_identity);

  auto* cmd_theorem = app.add_subcommand(
      "check-theorem",
      "Verify the difference equation satisfied by the potential");
  cmd_theorem->add_option("--genus", genus, "Genus cutoff")
      ->capture_default_str();
  cmd_theorem->add_option("--qdeg", qdeg, "Truncation degree in q")
      ->capture_default_str();
  add_format(cmd_theorem);

  auto* cmd_recursion = app.add_subcommand(
      "check-recursion",
      "Verify the genus recursion for every genus up to the cutoff");
  cmd_recursion->add_option("--genus", genus, "Highest genus")
      ->capture_default_str();
  cmd_recursion->add_option("--qdeg", qdeg, "Truncation degree in q")
      ->capture_default_str();
  add_format(cmd_recursion);

  auto* cmd_solve = app.add_subcommand(
      "solve-recursion",
      "Reconstruct higher-genus free energies from genus zero");
  cmd_solve->add_option("--genus", genus, "Genus cutoff")
      ->capture_default_str();
  cmd_solve->add_option("--qdeg", qdeg, "Truncation degree in q")
      ->capture_default_str();
  add_format(cmd_solve);

  auto* cmd_resum = app.add_subcommand(
      "gv-resum", "Resum genus-zero invariants per curve class");
  cmd_resum->add_option("--input", input,
                        "Dataset JSON path ('-' or empty: stdin)");
  cmd_resum->add_option("--genus", genus, "Genus cutoff")
      ->capture_default_str();
  cmd_resum->add_option("--kdeg", kdeg, "Multi-cover truncation")
      ->capture_default_str();
  add_format(cmd_resum);

  auto* cmd_gvcheck = app.add_subcommand(
      "gv-check", "Verify the multi-class difference equation");
  cmd_gvcheck->add_option("--input", input,
                          "Dataset JSON path ('-' or empty: stdin)");
  cmd_gvcheck->add_option("--alpha", alpha,
                          "Class label for the shift direction "
                          "(default: every class in turn)");
  cmd_gvcheck->add_option("--genus", genus, "Genus cutoff")
      ->capture_default_str();
  cmd_gvcheck->add_option("--kdeg", kdeg, "Multi-cover truncation")
      ->capture_default_str();
  add_format(cmd_gvcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints its own message; --help and --version land here too.
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cmd_bernoulli->parsed()) {
      char* out = nullptr;
      if (conifold_bernoulli(n_index, &out) != CONIFOLD_OK)
        return fail_with_last_error();
      OwnedString s(out);
      std::cout << s.get() << "\n";
      return kExitPass;
    }
    if (cmd_polylog->parsed()) {
      char* out = nullptr;
      if (conifold_polylog(order, qdeg, format(), &out) != CONIFOLD_OK)
        return fail_with_last_error();
      return emit(out);
    }
    if (cmd_potential->parsed()) {
      char* out = nullptr;
      if (conifold_potential(genus, qdeg, format(), &out) != CONIFOLD_OK)
        return fail_with_last_error();
      return emit(out);
    }
    if (cmd_sin->parsed()) {
      char* out = nullptr;
      if (conifold_sin_expansion(trunc, format(), &out) != CONIFOLD_OK)
        return fail_with_last_error();
      return emit(out);
    }
    if (cmd_identity->parsed()) {
      conifold_report* report = nullptr;
      if (conifold_check_identity(identity_trunc, &report) != CONIFOLD_OK)
        return fail_with_last_error();
      return emit_report(report, format());
    }
    if (cmd_theorem->parsed()) {
      conifold_report* report = nullptr;
      if (conifold_check_theorem(genus, qdeg, &report) != CONIFOLD_OK)
        return fail_with_last_error();
      return emit_report(report, format());
    }
    if (cmd_recursion->parsed()) {
      // One report per genus; stop at the first failure.
      for (int g = 1; g <= genus; ++g) {
        conifold_report* report = nullptr;
        if (conifold_check_recursion(g, qdeg, &report) != CONIFOLD_OK)
          return fail_with_last_error();
        const int rc = emit_report(report, format());
        if (rc != kExitPass) return rc;
      }
      return kExitPass;
    }
    if (cmd_solve->parsed()) {
      char* out = nullptr;
      if (conifold_solve_recursion(genus, qdeg, format(), &out) !=
          CONIFOLD_OK)
        return fail_with_last_error();
      return emit(out);
    }
    if (cmd_resum->parsed() || cmd_gvcheck->parsed()) {
      const std::string text = read_input(input);
      conifold_gv_dataset* raw = nullptr;
      if (conifold_gv_dataset_parse(text.c_str(), &raw) != CONIFOLD_OK)
        return fail_with_last_error();
      OwnedDataset dataset(raw);
      if (cmd_resum->parsed()) {
        char* out = nullptr;
        if (conifold_gv_resum(dataset.get(), genus, kdeg, format(), &out) !=
            CONIFOLD_OK)
          return fail_with_last_error();
        return emit(out);
      }
      conifold_report* report = nullptr;
      if (conifold_gv_check(dataset.get(), alpha.empty() ? nullptr
                                                         : alpha.c_str(),
                            genus, kdeg, &report) != CONIFOLD_OK)
        return fail_with_last_error();
      return emit_report(report, format());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no command\n";
  return kExitUsage;
}
