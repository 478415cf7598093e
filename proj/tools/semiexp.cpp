// semiexp: command line front end.
//
//   semiexp <command> --input doc.json [--format json|text] [--budget N] [--seed N] [--verify]
//   semiexp --verify --input report.json
//
// With a command, --verify rechecks the report just produced; without one the
// input must itself be a report.
//
// Exit status: 0 decided (or verified), 2 undecided, 1 input or
// verification errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "semiexp/commands.hpp"
#include "semiexp/error.hpp"

namespace {

using semiexp::io::json;

json read_document(const std::string& path, const std::string& inline_json) {
  std::string text = inline_json;
  if (!path.empty()) {
    std::ifstream in;
    std::istream* src = &std::cin;
    if (path != "-") {
      in.open(path);
      if (!in) throw semiexp::Error(semiexp::ErrorCode::ParseError, "cannot open " + path);
      src = &in;
    }
    text.assign(std::istreambuf_iterator<char>(*src), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line for the diagnostic
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    throw semiexp::Error(semiexp::ErrorCode::ParseError,
                         "line " + std::to_string(line) + ": " + e.what());
  }
}

void print_text(const json& value, const std::string& prefix, std::ostream& os) {
  bool leaf = !value.is_object() || value.empty();
  if (leaf) {
    os << prefix << ": " << value.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : value.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, os);
}

void print_verification(const semiexp::VerifyOutcome& out, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << json{{"verified", out.ok()}, {"checks", out.checks}, {"failures", out.failures}}.dump(2) << '\n';
  } else {
    os << (out.ok() ? "verified" : "FAILED") << " (" << out.checks << " checks)\n";
    for (const auto& f : out.failures) os << "  " << f << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroup actions: expansivity certificates"};
  std::string command, input_path, inline_json, format = "json";
  std::size_t budget = semiexp::kDefaultEnumerationBudget;
  std::uint64_t seed = 0;
  bool        verify = false;

  app.add_option("command", command, "analyze | action | theoremb | rees | union | laurent | family")
      ->check(CLI::IsMember(semiexp::command_names()));
  app.add_option("--input", input_path, "input document (- for stdin)");
  app.add_option("--json", inline_json, "inline input document");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", budget, "enumeration budget for X_J")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized inputs (rees with \"P\": \"random\")");
  app.add_flag("--verify", verify, "recheck the certificates of a report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (input_path.empty() == inline_json.empty()) {
    std::cerr << "error: give exactly one of --input or --json\n";
    return 1;
  }
  if (!verify && command.empty()) {
    std::cerr << "error: a command is required unless --verify is given\n";
    return 1;
  }

  try {
    json doc = read_document(input_path, inline_json);
    if (verify && command.empty()) {
      auto out = semiexp::verify_report(doc);
      print_verification(out, format, std::cout);
      return out.ok() ? 0 : 1;
    }
    semiexp::CommandOptions opts{budget, seed};
    auto                    res = semiexp::run_command(command, doc, opts);
    if (format == "json") {
      std::cout << res.report.dump(2) << '\n';
    } else {
      print_text(res.report.at("result"), "", std::cout);
    }
    if (verify) {
      auto out = semiexp::verify_report(res.report);
      print_verification(out, format, std::cout);
      if (!out.ok()) return 1;
    }
    return res.status;
  } catch (const semiexp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return 1;
  }
}
