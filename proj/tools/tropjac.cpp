#include "tropjac/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace tropjac;

namespace {

struct Raw {
  std::string curve, order, mu, mu2, cls, cls2, output, svg, csv, base_vertex, box, lengths, u, v;
  long long d = 0, slope_bound = 1, samples = 0;
  std::uint64_t seed = 0;
};

void add_options(CLI::App* sub, cli::Command c, Raw& r) {
  auto allowed = cli::allowed_options(c);
  auto has = [&](const char* n) { return std::find(allowed.begin(), allowed.end(), n) != allowed.end(); };
  if (has("curve")) sub->add_option("--curve", r.curve, "curve JSON file");
  if (has("order")) sub->add_option("--order", r.order, "order JSON file");
  if (has("mu")) sub->add_option("--mu", r.mu, "monodromy JSON file");
  if (has("mu2")) sub->add_option("--mu2", r.mu2, "second monodromy JSON file");
  if (has("class")) sub->add_option("--class", r.cls, "class JSON file");
  if (has("class2")) sub->add_option("--class2", r.cls2, "second class JSON file");
  if (has("output")) sub->add_option("--output,-o", r.output, "output JSON file");
  if (has("svg")) sub->add_option("--svg", r.svg, "write the cells as SVG");
  if (has("csv")) sub->add_option("--csv", r.csv, "write the cells as CSV (default: stdout)");
  if (has("base-vertex")) sub->add_option("--base-vertex", r.base_vertex, "vertex carrying the canonical divisor");
  if (has("box")) sub->add_option("--box", r.box, "divisor box, lo:hi per vertex, comma separated");
  if (has("lengths")) sub->add_option("--lengths", r.lengths, "real edge lengths, comma separated");
  if (has("u")) sub->add_option("--u", r.u, "functional on the ambient lattice");
  if (has("v")) sub->add_option("--v", r.v, "functional on cycles");
  if (has("d")) sub->add_option("--d", r.d, "degree");
  if (has("slope-bound")) sub->add_option("--slope-bound", r.slope_bound, "largest absolute slope");
  if (has("samples")) sub->add_option("--samples", r.samples, "sample count");
  if (has("seed")) sub->add_option("--seed", r.seed, "random seed");
}

cli::JobSpec to_job(cli::Command c, CLI::App* sub, const Raw& r) {
  cli::JobSpec j;
  j.command = c;
  auto given = [&](const char* name) {
    auto* o = sub->get_option_no_throw(name);
    return o && o->count() > 0;
  };
  auto str = [&](const char* name, const std::string& v, std::optional<std::string>& dst) {
    if (given(name)) dst = v;
  };
  str("--curve", r.curve, j.curve);
  str("--order", r.order, j.order);
  str("--mu", r.mu, j.mu);
  str("--mu2", r.mu2, j.mu2);
  str("--class", r.cls, j.cls);
  str("--class2", r.cls2, j.cls2);
  str("--output", r.output, j.output);
  str("--svg", r.svg, j.svg);
  str("--csv", r.csv, j.csv);
  str("--base-vertex", r.base_vertex, j.base_vertex);
  str("--box", r.box, j.divisor_box);
  if (given("--lengths")) j.lengths = cli::parse_list(r.lengths, "--lengths");
  if (given("--u")) j.u = cli::parse_list(r.u, "--u");
  if (given("--v")) j.v = cli::parse_list(r.v, "--v");
  if (given("--d")) j.degree = r.d;
  if (given("--slope-bound")) j.slope_bound = r.slope_bound;
  if (given("--samples")) j.samples = r.samples;
  if (given("--seed")) j.seed = r.seed;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical curves, monodromy and Jacobians with exact arithmetic"};
  app.require_subcommand(1);
  Raw raw;
  std::vector<std::pair<cli::Command, CLI::App*>> subs;
  for (const auto& [c, name] : cli::command_names()) {
    auto* sub = app.add_subcommand(name, cli::command_help(c));
    add_options(sub, c, raw);
    subs.push_back({c, sub});
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const char* log = std::getenv("TROPJAC_LOG");
  const bool verbose = log && std::string(log) == "debug";
  for (const auto& [c, sub] : subs) {
    if (!sub->parsed()) continue;
    cli::JobSpec job;
    try {
      job = to_job(c, sub, raw);
    } catch (const Error& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 1;
    }
    auto start = std::chrono::steady_clock::now();
    int status = cli::run(job, std::cout, std::cerr);
    if (verbose)
      std::cerr << "[tropjac] " << cli::command_name(c) << " finished in "
                << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s, status "
                << status << "\n";
    return status;
  }
  return 1;
}
