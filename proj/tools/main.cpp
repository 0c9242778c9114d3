#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "statphase/cli/run.hpp"

namespace {

using statphase::cli::json;

struct Options {
  std::string input;
  std::string task;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples, probes, degree_cap;
  bool text = false;
  // Inline problem fields; these override the input file.
  std::optional<std::string> P, Q, w, w0, origin, at, point, S, c0;
};

void add_common(CLI::App* app, Options& o, bool with_task) {
  app->add_option("--input,-i", o.input, "problem file (JSON)");
  if (with_task) app->add_option("--task", o.task, "task to run");
  app->add_option("--seed", o.seed, "random seed (default 1)");
  app->add_option("--samples", o.samples, "generic samples for rank checks");
  app->add_option("--probes", o.probes, "perturbation probes");
  app->add_option("--degree-cap", o.degree_cap, "maximum total degree of parsed expressions");
  app->add_flag("--json", [&o](std::int64_t) { o.text = false; }, "JSON report (default)");
  app->add_flag("--text", o.text, "text report");
  app->add_option("--P", o.P, "numerator");
  app->add_option("--Q", o.Q, "denominator");
  app->add_option("--w", o.w, "dual point a/b,c/d");
  app->add_option("--direction,--w0", o.w0, "line direction a/b,c/d");
  app->add_option("--origin", o.origin, "line origin a/b,c/d");
  app->add_option("--at", o.at, "infinity, auto or lambda0");
  app->add_option("--point", o.point, "point a/b,c/d");
  app->add_option("--S", o.S, "curve S(x, y) = 0");
  app->add_option("--c0", o.c0, "fiber value(s), comma separated");
}

// Input file merged with inline flags.
json build_spec(const Options& o, const std::string& task) {
  json j = json::object();
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw statphase::Error(statphase::ErrorKind::IoError, "cli", "cannot read " + o.input);
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw statphase::Error(statphase::ErrorKind::ValidationError, "cli", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw statphase::Error(statphase::ErrorKind::ValidationError, "cli", "problem must be an object");
  }
  if (!task.empty()) j["task"] = task;
  if (o.seed) j["seed"] = *o.seed;
  if (o.samples) j["samples"] = *o.samples;
  if (o.probes) j["probes"] = *o.probes;
  if (o.degree_cap) j["degree_cap"] = *o.degree_cap;
  auto set = [&j](const char* key, const std::optional<std::string>& v) {
    if (v) j[key] = *v;
  };
  set("P", o.P);
  set("Q", o.Q);
  set("w", o.w);
  set("w0", o.w0);
  set("origin", o.origin);
  set("at", o.at);
  set("point", o.point);
  set("S", o.S);
  if (o.c0) {
    json arr = json::array();
    std::stringstream ss(*o.c0);
    for (std::string item; std::getline(ss, item, ',');) arr.push_back(item);
    j["c0"] = arr;
  }
  return j;
}

int emit(const statphase::cli::Report& r, bool text) {
  if (text) std::cout << statphase::cli::render_text(r.body);
  else std::cout << r.body.dump(2) << "\n";
  return r.exit_code;
}

int run_task(const Options& o, const std::string& task) {
  try {
    return emit(statphase::cli::run_text(build_spec(o, task).dump()), o.text);
  } catch (const statphase::Error& e) {
    statphase::cli::Report r;
    r.body["task"] = task.empty() ? json(nullptr) : json(task);
    r.body["result"] = nullptr;
    r.body["error"] = {{"kind", std::string(statphase::to_string(e.kind()))}, {"module", e.module()}, {"message", e.what()}};
    r.body["warnings"] = json::array();
    r.exit_code = statphase::cli::is_validation(e.kind()) ? 2 : 1;
    return emit(r, o.text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statphase: stationary-phase invariants of Fourier transforms of exponentials of rational functions"};
  app.require_subcommand(1);

  Options run_opts;
  auto* run = app.add_subcommand("run", "run the task named in the problem file");
  add_common(run, run_opts, true);

  Options task_opts[8];
  std::vector<std::pair<CLI::App*, std::string>> task_cmds;
  const char* help[] = {"exponential factors and ranks at a dual point",
                        "Milnor number at a point (Jacobian and Kouchnirenko)",
                        "tameness verdict by perturbation probes",
                        "critical values and special fibers",
                        "Betti number and bouquet count of one fiber",
                        "special values and multiplicities at indeterminacy points",
                        "pole orders, irregularity and Stokes directions along a line",
                        "local Newton polygon"};
  for (std::size_t i = 0; i < statphase::cli::tasks().size(); ++i) {
    const std::string& name = statphase::cli::tasks()[i];
    auto* cmd = app.add_subcommand(name, help[i]);
    add_common(cmd, task_opts[i], false);
    task_cmds.push_back({cmd, name});
  }

  std::string corpus = "tests/golden/corpus.json";
  bool golden_text = false;
  auto* golden = app.add_subcommand("golden", "run the golden corpus and compare payloads");
  golden->add_option("corpus", corpus, "corpus file");
  golden->add_flag("--text", golden_text, "text summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) return run_task(run_opts, run_opts.task);
  for (std::size_t i = 0; i < task_cmds.size(); ++i)
    if (*task_cmds[i].first) return run_task(task_opts[i], task_cmds[i].second);

  try {
    auto summary = statphase::cli::golden_file(corpus);
    json j = statphase::cli::to_json(summary);
    if (golden_text) std::cout << statphase::cli::render_text(j);
    else std::cout << j.dump(2) << "\n";
    return summary.passed() ? 0 : 3;
  } catch (const statphase::Error& e) {
    std::cout << json{{"error", {{"kind", std::string(statphase::to_string(e.kind()))}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 2;
  }
}
