#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "toricflow/cli.hpp"

namespace {

// Reads and parses a JSON document; parse failures are input errors.
bool load(const std::string& path, toricflow::Json& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "input error: cannot open " << path << "\n";
    return false;
  }
  try {
    out = toricflow::Json::parse(in);
  } catch (const toricflow::Json::parse_error& e) {
    std::cerr << "input error: " << path << ": " << e.what() << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toricflow: extend curve isomorphisms of simplicial quotient singularities"};
  app.require_subcommand(0, 1);

  std::string job_path;
  toricflow::cli::Overrides over;
  std::string task;
  std::uint64_t seed = 0;
  unsigned root_bound = 0, ext_bound = 0, max_retries = 0;
  std::string emit;
  app.add_option("--job", job_path, "job file (JSON)");
  auto* task_opt = app.add_option("--task", task, "override the job's task");
  auto* seed_opt = app.add_option("--seed", seed, "target sampler seed");
  auto* rb_opt = app.add_option("--root-bound", root_bound, "Demazure root height bound");
  auto* eb_opt = app.add_option("--ext-bound", ext_bound, "word length bound for kernel extension");
  auto* mr_opt = app.add_option("--max-retries", max_retries, "resamples per coordinate");
  auto* emit_opt = app.add_option("--emit", emit, "write the word file here");

  auto* verify = app.add_subcommand("verify", "replay a word file against a job's cone");
  std::string verify_job, verify_word;
  verify->add_option("--job", verify_job, "job file (JSON)")->required();
  verify->add_option("--word", verify_word, "word file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : toricflow::cli::kInputError;
  }

  if (*verify) {
    toricflow::Json job, word;
    if (!load(verify_job, job) || !load(verify_word, word)) return toricflow::cli::kInputError;
    return toricflow::cli::run_verify(job, word, std::cout, std::cerr);
  }

  if (job_path.empty()) {
    std::cerr << "input error: --job is required\n";
    return toricflow::cli::kInputError;
  }
  if (*task_opt) over.task = task;
  if (*seed_opt) over.seed = seed;
  if (*rb_opt) over.root_bound = root_bound;
  if (*eb_opt) over.ext_bound = ext_bound;
  if (*mr_opt) over.max_retries = max_retries;
  if (*emit_opt) over.emit = emit;

  toricflow::Json job;
  if (!load(job_path, job)) return toricflow::cli::kInputError;
  return toricflow::cli::run_job(job, over, std::cout, std::cerr);
}
