#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "curvlab_cli/suites.hpp"

using namespace curvlab;
using namespace curvlab::cli;

namespace {

struct RawOptions {
  std::string m, n, p, q, holonomy, format = "json";
};

void add_common(CLI::App* sub, RunConfig& c, RawOptions& raw) {
  sub->add_option("--m", raw.m, "quaternionic or complex dimension m, a or a..b");
  sub->add_option("--n", raw.n, "real dimension n, a or a..b");
  sub->add_option("--p", raw.p, "Grassmannian p, a or a..b");
  sub->add_option("--q", raw.q, "Grassmannian q, a or a..b");
  sub->add_option("--trials", c.trials, "random trials")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "64-bit seed");
  sub->add_option("--tol", c.tol, "tolerance override")->check(CLI::PositiveNumber);
  sub->add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "output path (default stdout)");
  sub->add_option("--holonomy,--algebra", raw.holonomy, "generic, kaehler or qk");
}

void finish(RunConfig& c, const RawOptions& raw) {
  if (!raw.m.empty()) c.m = parse_range(raw.m);
  if (!raw.n.empty()) c.n = parse_range(raw.n);
  if (!raw.p.empty()) c.p = parse_range(raw.p);
  if (!raw.q.empty()) c.q = parse_range(raw.q);
  if (!raw.holonomy.empty()) {
    try {
      c.holonomy = structure_kind_from_string(raw.holonomy);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  c.format = raw.format == "csv" ? OutputFormat::csv : OutputFormat::json;
}

void write_output(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw FormatError("cannot open '" + c.out + "' for writing");
  f << text;
  if (!f) throw FormatError("failed writing '" + c.out + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvlab: algebraic curvature tensors on holonomy algebras"};
  app.require_subcommand(1);
  RunConfig c;
  RawOptions raw;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, c, raw);
  verify->add_option("--suite", c.suite, "suite name")->required();

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table of a model operator");
  add_common(spectrum, c, raw);
  spectrum->add_option("--model", c.model, "sphere, const-hol, hp, wolf or grassmann")->required();
  spectrum->add_option("--radius", c.radius, "sphere radius");
  spectrum->add_option("--scal", c.scal, "scalar curvature of const-hol");

  auto* decompose = app.add_subcommand("decompose", "decompose a tensor read from JSON");
  add_common(decompose, c, raw);
  decompose->add_option("--input", c.input, "tensor JSON file")->required();
  decompose->add_option("--criterion", c.criterion, "auto, weyl, kaehler, qk or hat=C");

  auto* sample = app.add_subcommand("sample", "randomized sweep over restricted operators");
  add_common(sample, c, raw);
  sample->add_option("--condition", c.condition, "none or two-nonnegative");
  sample->add_option("--criterion", c.criterion, "auto, weyl, kaehler, qk or hat=C");

  auto* exporter = app.add_subcommand("export", "write a model tensor as JSON");
  add_common(exporter, c, raw);
  exporter->add_option("--model", c.model, "sphere, const-hol, hp, wolf or grassmann")->required();
  exporter->add_option("--radius", c.radius, "sphere radius");
  exporter->add_option("--scal", c.scal, "scalar curvature of const-hol");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = 0;
  try {
    finish(c, raw);
    if (*exporter) {
      write_output(c, run_export(c));
    } else {
      Report report = *verify      ? run_verify(c)
                      : *spectrum  ? run_spectrum(c)
                      : *decompose ? run_decompose(c)
                                   : run_sample(c);
      write_output(c, c.format == OutputFormat::csv ? report.to_csv() : dump(report.to_json()) + "\n");
      status = report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::fprintf(stderr, "wall-clock %.3f s\n", elapsed.count());
  return status;
}
