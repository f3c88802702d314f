#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "scpn/error.hpp"
#include "scpn/verify.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("SCPN_JOBS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid SCPN_JOBS='" << env << "'\n";
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for supersymmetric CP^{N-1} sigma model solutions"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string checks;
  std::string format = "text";
  int jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "run identity suites on a model spec");
  verify->add_option("spec", spec_path, "model spec file")->required()->check(CLI::ExistingFile);
  verify->add_option("--checks", checks, "comma-separated suites (default: the spec's list)");
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs, "worker threads (default: $SCPN_JOBS or core count)")->check(CLI::PositiveNumber);

  std::string example_name;
  std::string out_path;
  auto* example = app.add_subcommand("example", "write a built-in model spec");
  example->add_option("name", example_name, "veronese_cp<n>, eta_cp1 or negative_control")->required();
  example->add_option("-o,--output", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*example) {
      std::string text = scpn::serialize_model_spec(scpn::emit_example(example_name));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
      }
      return 0;
    }
    std::ifstream in(spec_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    scpn::ModelSpec spec = scpn::parse_model_spec(buf.str());
    scpn::Report report = scpn::run_verify(spec, {split_commas(checks), jobs});
    std::cout << (format == "json" ? scpn::render_json(report) : scpn::render_text(report));
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
