// Command-line front end: instance generation, single solves, and directory
// benchmarks with CSV output.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dkp/bench.hpp"
#include "dkp/generator.hpp"
#include "dkp/pipeline.hpp"

namespace {

struct GenerateArgs {
  std::string family = "unc";
  uint32_t groups = 100;
  uint32_t count = 1;
  uint64_t seed = 0;
  std::string out_dir = ".";
  uint32_t weight_lo = 1;
  uint32_t weight_hi = 1000;
  std::string ratio = "1/2";
};

// Accepts "N/D" or a decimal in (0,1]; decimals become exact tenth-power
// fractions so the capacity rule stays integer arithmetic.
void parse_ratio(const std::string& text, uint32_t& num, uint32_t& den) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = static_cast<uint32_t>(std::stoul(text.substr(0, slash)));
    den = static_cast<uint32_t>(std::stoul(text.substr(slash + 1)));
    return;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    num = static_cast<uint32_t>(std::stoul(text));
    den = 1;
    return;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const size_t places = text.size() - dot - 1;
  if (places > 9) throw CLI::ValidationError("--capacity-ratio", "too many decimal places");
  num = static_cast<uint32_t>(std::stoul(digits));
  den = 1;
  for (size_t i = 0; i < places; ++i) den *= 10;
}

int run_generate(const GenerateArgs& args) {
  const auto family = dkp::family_from_name(args.family);
  if (!family) {
    std::cerr << "unknown family: " << args.family << "\n";
    return 2;
  }
  dkp::GenSpec spec;
  spec.family = *family;
  spec.groups = args.groups;
  spec.weight_lo = args.weight_lo;
  spec.weight_hi = args.weight_hi;
  parse_ratio(args.ratio, spec.ratio_num, spec.ratio_den);

  for (uint32_t index = 0; index < args.count; ++index) {
    spec.seed = args.seed + index;
    const dkp::DkpInstance inst = dkp::generate(spec);
    const std::string name = std::string(dkp::family_name(spec.family)) + "_" +
                             std::to_string(spec.groups) + "_" + std::to_string(index) +
                             ".dkp";
    const std::string path = args.out_dir + "/" + name;
    const std::string comment = std::string(dkp::family_name(spec.family)) +
                                " m=" + std::to_string(spec.groups) +
                                " seed=" + std::to_string(spec.seed);
    dkp::save_instance(inst, path, comment);
    std::cout << path << "\n";
  }
  return 0;
}

struct SolveArgs {
  std::string file;
  std::string method = "red";
  bool no_solution = false;
  bool json = false;
  uint64_t mem_limit = uint64_t{2} << 30;
};

int run_solve(const SolveArgs& args) {
  const auto method = dkp::method_from_name(args.method);
  if (!method) {
    std::cerr << "unknown method: " << args.method << "\n";
    return 2;
  }
  const dkp::LoadResult loaded = dkp::load_instance(args.file);
  for (const std::string& warning : loaded.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }

  dkp::SolveOptions opts;
  opts.want_solution = !args.no_solution;
  opts.dp.memory_limit = args.mem_limit;
  const dkp::SolveReport report = dkp::solve(loaded.instance, *method, opts);
  if (args.json) {
    std::cout << dkp::report_to_json(report) << "\n";
  } else {
    std::cout << "instance  : " << args.file << " (m=" << loaded.instance.group_count()
              << ", b=" << loaded.instance.capacity << ")\n"
              << dkp::report_to_text(report);
  }
  return 0;
}

struct BenchArgs {
  std::string dir;
  std::string methods = "full,red";
  std::string csv_out;
  int repeat = 1;
  bool write_opt = false;
  unsigned jobs = 1;
  uint64_t mem_limit = uint64_t{2} << 30;
};

int run_bench(const BenchArgs& args) {
  dkp::BenchOptions opts;
  opts.methods.clear();
  std::string token;
  std::istringstream list(args.methods);
  while (std::getline(list, token, ',')) {
    const auto method = dkp::method_from_name(token);
    if (!method) {
      std::cerr << "unknown method: " << token << "\n";
      return 2;
    }
    opts.methods.push_back(*method);
  }
  if (opts.methods.empty()) {
    std::cerr << "no methods requested\n";
    return 2;
  }
  opts.repeat = args.repeat;
  opts.write_opt = args.write_opt;
  opts.jobs = args.jobs;
  opts.solve.dp.memory_limit = args.mem_limit;

  const dkp::BenchResult result = dkp::bench_directory(args.dir, opts);
  if (args.csv_out.empty() || args.csv_out == "-") {
    dkp::write_csv(std::cout, result);
  } else {
    std::ofstream out(args.csv_out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open for writing: " << args.csv_out << "\n";
      return 2;
    }
    dkp::write_csv(out, result);
    std::cout << result.rows.size() << " rows -> " << args.csv_out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discounted 0-1 knapsack toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "write instance files");
  cmd_gen->add_option("--family", gen.family, "unc|weak|strong|inv")
      ->check(CLI::IsMember({"unc", "weak", "strong", "inv"}))
      ->required();
  cmd_gen->add_option("--groups", gen.groups, "group count m")->required();
  cmd_gen->add_option("--count", gen.count, "number of instances");
  cmd_gen->add_option("--seed", gen.seed, "base seed; instance i uses seed+i");
  cmd_gen->add_option("--out", gen.out_dir, "output directory");
  cmd_gen->add_option("--weight-lo", gen.weight_lo, "weight range lower bound");
  cmd_gen->add_option("--weight-hi", gen.weight_hi, "weight range upper bound");
  cmd_gen->add_option("--capacity-ratio", gen.ratio, "capacity as a fraction of total weight");

  SolveArgs sol;
  CLI::App* cmd_solve = app.add_subcommand("solve", "solve one instance file");
  cmd_solve->add_option("file", sol.file, "instance file")->required();
  cmd_solve->add_option("--method", sol.method, "full|red|lpdom|red-lpdom|heuristic")
      ->check(CLI::IsMember({"full", "red", "lpdom", "red-lpdom", "heuristic"}));
  cmd_solve->add_flag("--no-solution", sol.no_solution, "value only, skip backtracking");
  cmd_solve->add_flag("--json", sol.json, "machine-readable output");
  cmd_solve->add_option("--mem-limit", sol.mem_limit, "DP memory limit in bytes");

  BenchArgs bench;
  CLI::App* cmd_bench = app.add_subcommand("bench", "solve a directory of instances");
  cmd_bench->add_option("dir", bench.dir, "directory of .dkp files")->required();
  cmd_bench->add_option("--methods", bench.methods, "comma-separated method list");
  cmd_bench->add_option("--csv", bench.csv_out, "CSV output path ('-' for stdout)");
  cmd_bench->add_option("--repeat", bench.repeat, "time columns are medians of R runs");
  cmd_bench->add_flag("--write-opt", bench.write_opt, "write .opt sidecars from exact runs");
  cmd_bench->add_option("--jobs", bench.jobs, "worker threads across instances");
  cmd_bench->add_option("--mem-limit", bench.mem_limit, "DP memory limit in bytes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_solve->parsed()) return run_solve(sol);
    if (cmd_bench->parsed()) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
