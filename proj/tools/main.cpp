#include "checks.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace {

using vosa::cli::Job;
using vosa::cli::RunConfig;

struct Options {
  std::string order;
  double tol = 1e-6;
  std::vector<std::string> points;
  std::string format = "json";
  bool parallel = false;
  std::vector<std::string> examples;
  std::string sector = "NS+";
  std::string action;
  int window = 2;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--order", o.order, "Truncation order in q, e.g. 6 or 7/2 (default 6 or VOSA_ORDER)");
  sub->add_option("--tol", o.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--points", o.points, "Sample points re,im or u_re,u_im,tau_re,tau_im");
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--parallel", o.parallel, "Run independent checks concurrently");
}

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  if (!o.order.empty()) {
    cfg.order = vosa::cli::parse_rational(o.order);
    if (*cfg.order <= 0) throw vosa::cli::UsageError("--order must be positive");
  }
  cfg.tol = o.tol;
  for (const auto& p : o.points) cfg.points.push_back(vosa::cli::parse_point(p));
  cfg.parallel = o.parallel;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for self-dual vertex operator superalgebras and their bulk decompositions", "vosa"};
  app.require_subcommand(1);
  Options o;

  auto* characters = app.add_subcommand("characters", "Character identities, or character series of --example");
  auto* theta = app.add_subcommand("theta", "Lattice theta series against Jacobi theta products");
  auto* glue = app.add_subcommand("glue", "Glue codes and bulk decompositions");
  auto* classify = app.add_subcommand("classify", "Arithmetic of the c = 12 classification");
  auto* modular = app.add_subcommand("modular", "Modular invariance of bulk partition vectors");
  auto* genus = app.add_subcommand("genus", "Elliptic genera");
  auto* flow = app.add_subcommand("flow", "Spectral flow symmetry of bulk decompositions");
  auto* n4 = app.add_subcommand("n4", "Small N=4 mode algebra: jacobi or lemma");
  auto* freefield = app.add_subcommand("freefield", "Free fermion realizations");
  auto* verify_all = app.add_subcommand("verify-all", "Every check with its default settings");
  for (auto* sub : {characters, theta, glue, classify, modular, genus, flow, n4, freefield, verify_all})
    add_common(sub, o);
  for (auto* sub : {characters, theta, glue, modular, genus, flow})
    sub->add_option("--example", o.examples, "Example id (repeatable), e.g. diagD:2 or D_4");
  characters->add_option("--sector", o.sector, "NS+, NS-, R+ or R-");
  n4->add_option("action", o.action, "jacobi or lemma (both when omitted)")->check(CLI::IsMember({"jacobi", "lemma"}));
  n4->add_option("--window", o.window, "Mode window for the Jacobi identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const RunConfig cfg = make_config(o);
    std::vector<Job> jobs;
    if (characters->parsed()) jobs = vosa::cli::character_jobs(cfg, o.examples, o.sector);
    if (theta->parsed()) jobs = vosa::cli::theta_jobs(cfg, o.examples);
    if (glue->parsed()) jobs = vosa::cli::glue_jobs(cfg, o.examples);
    if (classify->parsed()) jobs = vosa::cli::classify_jobs(cfg);
    if (modular->parsed()) jobs = vosa::cli::modular_jobs(cfg, o.examples);
    if (genus->parsed()) jobs = vosa::cli::genus_jobs(cfg, o.examples);
    if (flow->parsed()) jobs = vosa::cli::flow_jobs(cfg, o.examples);
    if (n4->parsed()) jobs = vosa::cli::n4_jobs(cfg, o.action, o.window);
    if (freefield->parsed()) jobs = vosa::cli::freefield_jobs(cfg);
    if (verify_all->parsed()) jobs = vosa::cli::all_jobs(cfg);

    auto reports = vosa::cli::run_jobs(jobs, cfg.parallel);
    if (o.format == "text")
      std::cout << vosa::cli::format_text(reports);
    else
      std::cout << nlohmann::json(reports).dump(2) << '\n';
    bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.value("pass", false); });
    return all_pass ? 0 : 1;
  } catch (const vosa::cli::UsageError& e) {
    std::cerr << "vosa: " << e.what() << "\n\n" << app.help();
    return 2;
  }
}
