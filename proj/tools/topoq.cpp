// topoq <command> --spec <file.json> [--out <file>] [--seed N] [--trials N] [--tol X]

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "topoq/cli.hpp"

namespace {

int usage_error(const std::string& detail) {
  std::cerr << topoq::io::Json{{"error", {{"kind", "UsageError"}, {"detail", detail}}}}.dump(2)
            << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum algorithms over finite groups, evaluated exactly"};
  std::string command;
  std::string spec_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<double> tol;

  app.add_option("command", command, "dj, gdj, grover, ggrover, hsp, irreps or verify")
      ->required();
  app.add_option("--spec", spec_path, "job spec JSON file, or - for stdin")->required();
  app.add_option("--out", out_path, "write the result here instead of stdout");
  app.add_option("--seed", seed, "seed for decomposition and sampling");
  app.add_option("--trials", trials, "samples drawn by hsp");
  app.add_option("--tol", tol, "comparison tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  if (!topoq::cli::is_command(command)) return usage_error("unknown command \"" + command + "\"");

  std::string text;
  if (spec_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) return usage_error("cannot read " + spec_path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  const auto result = topoq::cli::run_text(command, text, {seed, trials, tol});
  if (!result.err.empty()) std::cerr << result.err;
  if (!result.out.empty()) {
    if (out_path.empty()) {
      std::cout << result.out;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) return usage_error("cannot write " + out_path);
      out << result.out;
    }
  }
  return result.exit_code;
}
