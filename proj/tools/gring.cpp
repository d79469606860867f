#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gring/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gring::InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw gring::InputError("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groupoid graded rings: validation, crossed products, separability"};
  app.set_version_flag("--version", gring::kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format = "text";
  bool no_timings = false;
  std::string output;
  app.add_option("--seed", seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  app.add_flag("--no-timings", no_timings, "Omit timings from reports");
  app.add_option("-o,--output", output, "Write the report here instead of stdout");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Schema and axiom checks");
  validate->add_option("file", path)->required();

  std::string property;
  auto* check = app.add_subcommand("check", "Run one property check");
  check->add_option("file", path)->required();
  check->add_option("--property", property, "grading | object-unital | strongly-graded | crossed-product | skew | twisted")
      ->required();

  gring::SeparabilityFlags sflags;
  auto* sep = app.add_subcommand("separability", "Separability of R over R_0");
  sep->add_option("file", path)->required();
  sep->add_flag("--construct-casimir", sflags.construct_casimir, "Build and verify a Casimir family");
  sep->add_flag("--from-casimir", sflags.from_casimir, "Derive trace solutions from a Casimir family");
  sep->add_flag("--verify-only", sflags.verify_only, "Only verify the document's casimir block");

  std::string method = "automatic";
  auto* simp = app.add_subcommand("simplicity", "Simplicity of the ring as a unital algebra");
  simp->add_option("file", path)->required();
  simp->add_option("--method", method, "automatic | trace-form | exhaustive")->capture_default_str();

  std::string name;
  std::string emit;
  bool list = false;
  auto* example = app.add_subcommand("example", "Emit a bundled definition file");
  example->add_option("name", name);
  example->add_option("--emit", emit, "Output path (stdout when absent)");
  example->add_flag("--list", list, "List example names");

  auto* report = app.add_subcommand("report", "Render a structured report");
  report->add_option("file", path)->required();

  // CLI11 parse errors are input errors.
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const gring::RunOptions opt{seed, !no_timings};
  try {
    if (example->parsed()) {
      if (list) {
        for (const auto& n : gring::example_names()) std::cout << n << "\n";
        return 0;
      }
      if (name.empty()) throw gring::InputError("example name required");
      const std::string text = gring::emit_document(gring::example_document(name));
      if (emit.empty()) {
        std::cout << text;
      } else {
        write_file(emit, text);
      }
      return 0;
    }

    gring::Report r;
    if (report->parsed()) {
      gring::Json j;
      try {
        j = gring::Json::parse(read_file(path));
      } catch (const gring::Json::parse_error& e) {
        throw gring::InputError(std::string("malformed report: ") + e.what());
      }
      r = gring::report_from_json(j);
    } else {
      const auto doc = gring::parse_document(read_file(path));
      if (validate->parsed()) {
        r = gring::cmd_validate(doc, path, opt);
      } else if (check->parsed()) {
        r = gring::cmd_check(doc, path, property, opt);
      } else if (sep->parsed()) {
        r = gring::cmd_separability(doc, path, sflags, opt);
      } else {
        r = gring::cmd_simplicity(doc, path, method, opt);
      }
    }
    const std::string text = format == "structured" ? gring::render_structured(r) : gring::render_text(r);
    if (output.empty()) {
      std::cout << text;
    } else {
      write_file(output, text);
    }
    return r.status();
  } catch (const gring::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const gring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
