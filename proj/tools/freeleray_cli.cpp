// Command-line front end over the freeleray C API: dimension and necklace
// tables, basis fixtures, projections of vector fields, and the
// verification suite. Exit codes: 0 success, 1 a check failed, 2 usage or
// input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "freeleray.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { fl_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct FieldDeleter {
  void operator()(fl_field* f) const { fl_field_free(f); }
};
using Field = std::unique_ptr<fl_field, FieldDeleter>;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int fail_api(fl_status status) {
  std::cerr << "error: " << fl_last_error() << "\n";
  (void)status;
  return kExitUsage;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return fail_usage("cannot open output file: " + out_path);
  out << text;
  if (!out) return fail_usage("cannot write output file: " + out_path);
  return kExitOk;
}

bool parse_format(const std::string& name, fl_format* out) {
  if (name == "json") {
    *out = FL_FORMAT_JSON;
    return true;
  }
  if (name == "csv") {
    *out = FL_FORMAT_CSV;
    return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic gradients, divergence-free bases and the free Leray projection "
               "on the full Fock space"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fl_version()));

  // dims
  auto* dims = app.add_subcommand("dims", "Dimension table for degrees 0..max-degree");
  std::int32_t dims_n = 2;
  std::int64_t dims_max = 4;
  std::string dims_format = "csv";
  std::string dims_out;
  dims->add_option("--n", dims_n, "Alphabet size")->required();
  dims->add_option("--max-degree", dims_max, "Largest degree")->required();
  dims->add_option("--format", dims_format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  dims->add_option("--out", dims_out, "Write output to this file instead of stdout");

  // necklaces
  auto* neck = app.add_subcommand("necklaces", "Necklace counts for word lengths 1..max-degree");
  std::int32_t neck_n = 2;
  std::int64_t neck_max = 6;
  std::string neck_format = "csv";
  std::string neck_out;
  neck->add_option("--n", neck_n, "Alphabet size")->required();
  neck->add_option("--max-degree", neck_max, "Largest word length")->required();
  neck->add_option("--format", neck_format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  neck->add_option("--out", neck_out, "Write output to this file instead of stdout");

  // basis
  auto* basis = app.add_subcommand("basis", "Basis fixture for one degree, as JSON");
  std::int32_t basis_n = 2;
  std::int64_t basis_degree = 1;
  std::string basis_kind;
  std::string basis_mode;
  std::string basis_out;
  basis->add_option("--n", basis_n, "Alphabet size")->required();
  basis->add_option("--degree", basis_degree, "Homogeneous degree of the fields")->required();
  basis->add_option("--kind", basis_kind, "gradient, divfree, zeta or omega")
      ->required()
      ->check(CLI::IsMember({"gradient", "divfree", "zeta", "omega"}));
  basis->add_option("--mode", basis_mode,
                    "exact or float (default exact; zeta defaults to float)")
      ->check(CLI::IsMember({"exact", "float"}));
  basis->add_option("--out", basis_out, "Write output to this file instead of stdout");

  // project
  auto* project = app.add_subcommand("project", "Apply a projection to a vector field");
  std::int32_t project_n = 0;
  std::string project_in;
  std::string project_kind;
  std::string project_mode = "exact";
  std::string project_out;
  project->add_option("--n", project_n, "Alphabet size (validated against the input field)");
  project->add_option("--in", project_in, "Input field JSON file, or - for stdin")->required();
  project->add_option("--kind", project_kind, "cyclic or leray")
      ->required()
      ->check(CLI::IsMember({"cyclic", "leray"}));
  project->add_option("--mode", project_mode, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  project->add_option("--out", project_out, "Write output to this file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  bool verify_all = false;
  std::string verify_check;
  std::int32_t verify_n = 2;
  std::int64_t verify_max = 4;
  std::uint64_t verify_seed = 0;
  std::string verify_out;
  auto* all_flag = verify->add_flag("--all", verify_all, "Run every check");
  auto* check_opt = verify->add_option("--check", verify_check, "Run one named check");
  all_flag->excludes(check_opt);
  verify->add_option("--n", verify_n, "Alphabet size")->required();
  verify->add_option("--max-degree", verify_max, "Largest degree covered")->required();
  verify->add_option("--seed", verify_seed, "Seed for randomized checks");
  verify->add_option("--out", verify_out, "Write report JSON to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return kExitUsage;
  }

  if (dims->parsed()) {
    fl_format format = FL_FORMAT_CSV;
    parse_format(dims_format, &format);
    char* raw = nullptr;
    if (fl_status st = fl_dims_table(dims_n, dims_max, format, &raw); st != FL_OK)
      return fail_api(st);
    ApiString text(raw);
    return emit(text.get(), dims_out);
  }

  if (neck->parsed()) {
    fl_format format = FL_FORMAT_CSV;
    parse_format(neck_format, &format);
    char* raw = nullptr;
    if (fl_status st = fl_necklace_table(neck_n, neck_max, format, &raw); st != FL_OK)
      return fail_api(st);
    ApiString text(raw);
    return emit(text.get(), neck_out);
  }

  if (basis->parsed()) {
    fl_basis_kind kind = FL_BASIS_GRADIENT;
    if (basis_kind == "divfree") kind = FL_BASIS_DIVFREE;
    if (basis_kind == "zeta") kind = FL_BASIS_ZETA;
    if (basis_kind == "omega") kind = FL_BASIS_OMEGA;
    if (basis_mode.empty()) basis_mode = (kind == FL_BASIS_ZETA) ? "float" : "exact";
    const fl_mode mode = basis_mode == "float" ? FL_MODE_FLOAT : FL_MODE_EXACT;
    char* raw = nullptr;
    if (fl_status st = fl_basis_fixture(kind, basis_n, basis_degree, mode, &raw); st != FL_OK)
      return fail_api(st);
    ApiString text(raw);
    return emit(text.get(), basis_out);
  }

  if (project->parsed()) {
    std::string input;
    if (project_in == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      input = buf.str();
    } else {
      std::ifstream in(project_in, std::ios::binary);
      if (!in) return fail_usage("cannot open input file: " + project_in);
      std::ostringstream buf;
      buf << in.rdbuf();
      input = buf.str();
    }

    const fl_mode mode = project_mode == "float" ? FL_MODE_FLOAT : FL_MODE_EXACT;
    fl_field* parsed_raw = nullptr;
    if (fl_status st = fl_field_parse(input.c_str(), mode, &parsed_raw); st != FL_OK)
      return fail_api(st);
    Field parsed(parsed_raw);

    if (project_n > 0) {
      std::int32_t actual = 0;
      fl_field_alphabet(parsed.get(), &actual);
      if (actual != project_n)
        return fail_usage("--n " + std::to_string(project_n) +
                          " does not match the field's alphabet size " + std::to_string(actual));
    }

    const fl_projection_kind kind =
        project_kind == "cyclic" ? FL_PROJECT_CYCLIC : FL_PROJECT_LERAY;
    fl_field* result_raw = nullptr;
    if (fl_status st = fl_field_project(parsed.get(), kind, &result_raw); st != FL_OK)
      return fail_api(st);
    Field result(result_raw);

    char* raw = nullptr;
    if (fl_status st = fl_field_to_json(result.get(), &raw); st != FL_OK) return fail_api(st);
    ApiString text(raw);
    return emit(text.get(), project_out);
  }

  if (verify->parsed()) {
    if (!verify_all && verify_check.empty())
      return fail_usage("verify needs --all or --check NAME");
    char* raw = nullptr;
    int all_passed = 0;
    const char* name = verify_check.empty() ? nullptr : verify_check.c_str();
    if (fl_status st = fl_verify(verify_n, verify_max, verify_seed, name, &raw, &all_passed);
        st != FL_OK)
      return fail_api(st);
    ApiString text(raw);
    if (int code = emit(text.get(), verify_out); code != kExitOk) return code;
    return all_passed ? kExitOk : kExitCheckFailed;
  }

  return fail_usage("no subcommand given");
}
