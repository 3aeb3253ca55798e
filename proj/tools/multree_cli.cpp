// multree: reduce MUL-trees to their maximally reduced form.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "multree/bench.hpp"
#include "multree/generate.hpp"
#include "multree/newick.hpp"
#include "multree/parallel.hpp"
#include "multree/report.hpp"
#include "multree/singly.hpp"
#include "multree/verify.hpp"

using namespace multree;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string path;
  bool strict = false;
  std::size_t threads = 1;
};

struct ReportOptions {
  std::string path;  // empty: no report, "-": stdout
  std::string format = "csv";
};

// Reads the collection, printing lenient-mode errors as warnings. Returns
// false after printing a hard error.
bool load(const InputOptions& in, NewickDocument& doc) {
  std::ifstream file(in.path);
  if (!file) {
    std::cerr << "multree: cannot open " << in.path << '\n';
    return false;
  }
  try {
    doc = parse_collection(file, in.strict);
  } catch (const NewickError& e) {
    std::cerr << in.path << ':' << e.line() << ':' << e.column() << ": " << e.message() << '\n';
    return false;
  }
  for (const CollectionError& e : doc.errors)
    std::cerr << in.path << ':' << e.line << ':' << e.column << ": warning: " << e.message << " (tree skipped)\n";
  return true;
}

std::vector<PipelineOutcome> run_all(const NewickDocument& doc, std::size_t threads) {
  std::vector<PipelineOutcome> out(doc.trees.size());
  parallel_for(doc.trees.size(), threads, [&](std::size_t i) { out[i] = run_pipeline(doc.trees[i]); });
  return out;
}

bool write_report(const ReportOptions& opt, const NewickDocument& doc, const std::vector<PipelineOutcome>& outcomes) {
  if (opt.path.empty()) return true;
  std::vector<ReportRow> rows;
  rows.reserve(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) rows.push_back(make_row(i, doc.line_numbers[i], outcomes[i]));
  const ReportSummary summary = summarize(rows, doc.errors.size());

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (opt.path != "-") {
    file.open(opt.path, std::ios::binary);
    if (!file) {
      std::cerr << "multree: cannot write " << opt.path << '\n';
      return false;
    }
    out = &file;
  }
  if (opt.format == "json") write_json(*out, rows, summary);
  else write_csv(*out, rows, summary);
  return bool(*out);
}

bool write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "multree: cannot write " << path << '\n';
    return false;
  }
  for (const auto& l : lines) file << l << '\n';
  return bool(file);
}

int cmd_reduce(const InputOptions& in, const ReportOptions& rep, const std::string& out_path, bool singly,
               std::string singly_path) {
  NewickDocument doc;
  if (!load(in, doc)) return kExitFailure;
  const auto outcomes = run_all(doc, in.threads);

  std::vector<std::string> mrfs, singles;
  for (const PipelineOutcome& o : outcomes) {
    mrfs.push_back(write_newick(o.mrf));
    if (singly) singles.push_back(o.singly ? write_newick(*o.singly) : ";");
  }
  if (!write_lines(out_path, mrfs)) return kExitFailure;
  if (singly) {
    if (singly_path.empty()) singly_path = out_path + ".singly";
    if (!write_lines(singly_path, singles)) return kExitFailure;
  }
  return write_report(rep, doc, outcomes) ? 0 : kExitFailure;
}

int cmd_stats(const InputOptions& in, ReportOptions rep) {
  NewickDocument doc;
  if (!load(in, doc)) return kExitFailure;
  if (rep.path.empty()) rep.path = "-";
  return write_report(rep, doc, run_all(doc, in.threads)) ? 0 : kExitFailure;
}

struct VerifyArgs {
  std::string in;
  std::size_t generate = 0;
  std::uint64_t seed = 42;
  std::size_t min_leaves = 4;
  std::size_t max_leaves = 10;
  std::size_t max_multiplicity = 3;
  std::size_t oracle_max_leaves = 12;
  std::size_t max_edits = 5;
  bool force = false;
  bool strict = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.oracle_max_leaves > 16 && !a.force) {
    std::cerr << "multree: --oracle-max-leaves above 16 needs --force\n";
    return kExitUsage;
  }
  VerifyOptions options;
  options.limits = {a.oracle_max_leaves, false};
  options.max_edits = a.max_edits;
  Verifier verifier(options);
  std::mt19937_64 rng(a.seed);

  std::vector<MulTree> trees;
  if (!a.in.empty()) {
    NewickDocument doc;
    if (!load({a.in, a.strict, 1}, doc)) return kExitFailure;
    trees = std::move(doc.trees);
  } else {
    GeneratorConfig g{a.min_leaves, a.max_leaves, a.max_multiplicity, GeneratorConfig{}.contract_probability};
    for (std::size_t i = 0; i < a.generate; ++i) trees.push_back(random_multree(rng, g));
  }

  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].leaf_count() > a.oracle_max_leaves) {
      std::cerr << "multree: tree " << i << " has " << trees[i].leaf_count() << " leaves, above the oracle limit"
                << (a.strict ? "\n" : "; skipped\n");
      if (a.strict) return kExitFailure;
    }
    for (const auto& name : verifier.check(trees[i], rng))
      std::cerr << "FAIL " << name << ": " << write_newick(trees[i]) << '\n';
  }

  std::printf("%-26s %8s %8s\n", "property", "checked", "failed");
  for (const PropertyTally& t : verifier.tallies()) std::printf("%-26s %8zu %8zu\n", t.name.c_str(), t.checked, t.failed);
  std::printf("trees checked %zu, skipped %zu\n", verifier.trees_checked(), verifier.trees_skipped());
  return verifier.all_passed() ? 0 : kExitFailure;
}

int cmd_bench(const BenchConfig& config, const std::string& out_path) {
  const auto points = run_bench(config);
  std::ostringstream text;
  write_bench_csv(text, points);
  for (std::size_t m : config.multiplicities)
    text << "# loglog_slope,multiplicity=" << m << ',' << loglog_slope(points, m) << "\r\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text.str();
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << text.str();
  return file ? 0 : kExitFailure;
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--in", in.path, "Newick collection, one tree per line")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--strict", in.strict, "Abort on the first malformed tree");
  cmd->add_option("--threads", in.threads, "Worker threads")->envname("MULTREE_THREADS")->check(CLI::Range(1, 1024));
}

void add_report(CLI::App* cmd, ReportOptions& rep, const char* help) {
  cmd->add_option("--report", rep.path, help);
  cmd->add_option("--format", rep.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduce multi-labeled trees to their maximally reduced form"};
  app.require_subcommand(1);

  InputOptions reduce_in;
  ReportOptions reduce_rep;
  std::string out_path, singly_path;
  bool singly = false;
  auto* reduce = app.add_subcommand("reduce", "Write the MRF of every tree, optionally with a report");
  add_input(reduce, reduce_in);
  reduce->add_option("--out", out_path, "Output file for the MRFs")->required();
  reduce->add_flag("--singly", singly, "Also write the singly-labeled second step");
  reduce->add_option("--singly-out", singly_path, "Output file for --singly (default: <out>.singly)");
  add_report(reduce, reduce_rep, "Report file ('-' for stdout)");

  InputOptions stats_in;
  ReportOptions stats_rep;
  auto* stats = app.add_subcommand("stats", "Report only, no tree output");
  add_input(stats, stats_in);
  add_report(stats, stats_rep, "Report file (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the reduction against the brute-force oracle");
  auto* vin = verify->add_option("--in", va.in, "Trees to check")->check(CLI::ExistingFile);
  auto* vgen = verify->add_option("--generate", va.generate, "Number of random trees to check");
  vin->excludes(vgen);
  verify->add_option("--seed", va.seed, "Generator seed");
  verify->add_option("--min-leaves", va.min_leaves, "Smallest generated tree");
  verify->add_option("--max-leaves", va.max_leaves, "Largest generated tree");
  verify->add_option("--max-multiplicity", va.max_multiplicity, "Most copies of one label");
  verify->add_option("--oracle-max-leaves", va.oracle_max_leaves, "Oracle size limit");
  verify->add_option("--max-edits", va.max_edits, "Edits per uniqueness check (0 disables)");
  verify->add_flag("--force", va.force, "Allow an oracle limit above 16");
  verify->add_flag("--strict", va.strict, "Fail on trees above the oracle limit or malformed input");

  BenchConfig bc;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Time the reduction over a size ladder");
  bench->add_option("--sizes", bc.sizes, "Leaf counts")->delimiter(',');
  bench->add_option("--multiplicities", bc.multiplicities, "Label multiplicities")->delimiter(',');
  bench->add_option("--seed", bc.seed, "Generator seed");
  bench->add_option("--trees", bc.trees, "Trees per cell");
  bench->add_option("--min-seconds", bc.min_seconds, "Least timed time per cell");
  bench->add_option("--out", bench_out, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) return cmd_reduce(reduce_in, reduce_rep, out_path, singly, singly_path);
    if (*stats) return cmd_stats(stats_in, stats_rep);
    if (*verify) {
      if (va.in.empty() && va.generate == 0) {
        std::cerr << "multree: verify needs --in or --generate\n";
        return kExitUsage;
      }
      return cmd_verify(va);
    }
    if (*bench) return cmd_bench(bc, bench_out);
  } catch (const std::exception& e) {
    std::cerr << "multree: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
