// Command-line front end: counts of zero-dimensional finite topologies,
// partition/codeword generation, the supporting tables and a brute-force
// verifier for tiny carriers.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerodim/oracle.hpp"
#include "zerodim/order_tables.hpp"
#include "zerodim/parallel_engine.hpp"
#include "zerodim/partition_gen.hpp"
#include "zerodim/reference_counts.hpp"
#include "zerodim/stirling.hpp"
#include "zerodim/zerodim_count.hpp"

namespace {

using namespace zerodim;

enum class Format { plain, json, csv };

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw CLI::ValidationError("--format", "expected plain, json or csv");
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// Options shared by the counting subcommands.
struct CountOptions {
  int n = 0;
  std::string algorithm = "recursive";
  std::string format = "plain";
  int depth = -1;  // -1: use the engine default for n
  unsigned threads = default_worker_count();
};

void add_count_options(CLI::App* cmd, CountOptions& opts, const char* value_name) {
  cmd->add_option("n", opts.n, value_name)->required();
  cmd->add_option("--algorithm", opts.algorithm,
                  "iterative, recursive or parallel")
      ->default_val("recursive");
  cmd->add_option("--format", opts.format, "plain, json or csv")->default_val("plain");
  cmd->add_option("--depth", opts.depth,
                  "split depth for --algorithm parallel (default min(9, n-1))");
  cmd->add_option("--threads", opts.threads,
                  "worker threads for --algorithm parallel")
      ->envname("ZERODIM_THREADS");
}

SplitConfig make_split_config(const CountOptions& opts) {
  SplitConfig cfg;
  cfg.workers = opts.threads;
  cfg.depth = opts.depth >= 0 ? opts.depth : default_split_depth(opts.n);
  if (opts.depth >= 0 && clamp_split_depth(opts.depth, opts.n) != opts.depth) {
    std::cerr << "warning: split depth " << opts.depth << " exceeds n-1; clamped to "
              << clamp_split_depth(opts.depth, opts.n) << "\n";
  }
  return cfg;
}

void print_count(const std::string& subcommand, const CountResult& result,
                 double elapsed_seconds, Format format) {
  switch (format) {
    case Format::plain:
      std::cout << to_decimal(result.value) << "\n";
      return;
    case Format::json: {
      nlohmann::ordered_json record{
          {"n", result.n},
          {"value", to_decimal(result.value)},
          {"algorithm", std::string(to_string(result.algorithm))},
          {"depth", result.depth},
          {"elapsed_seconds", elapsed_seconds},
      };
      std::cout << record.dump() << "\n";
      return;
    }
    case Format::csv:
      std::cout << "n,value,algorithm,depth,elapsed_seconds\n"
                << result.n << "," << to_decimal(result.value) << ","
                << to_string(result.algorithm) << "," << result.depth << ","
                << elapsed_seconds << "\n";
      return;
  }
  (void)subcommand;
}

CountResult compute_zdim_t0(const CountOptions& opts, const OrdStarTable& ord_star) {
  CountResult result;
  result.n = opts.n;
  result.algorithm = parse_algorithm(opts.algorithm);
  switch (result.algorithm) {
    case Algorithm::iterative:
      result.value = zdim_t0_iterative(opts.n, ord_star);
      break;
    case Algorithm::recursive:
      result.value = zdim_t0_recursive(opts.n, ord_star);
      break;
    case Algorithm::parallel: {
      SplitConfig cfg = make_split_config(opts);
      result.value = zdim_t0_parallel(opts.n, ord_star, cfg);
      result.depth = clamp_split_depth(cfg.depth, opts.n);
      break;
    }
  }
  return result;
}

int run_zdim_t0(const CountOptions& opts) {
  const OrdStarTable ord_star = derive_ord_star(load_ord_table());
  Stopwatch clock;
  const CountResult result = compute_zdim_t0(opts, ord_star);
  print_count("zdim-t0", result, clock.seconds(), parse_format(opts.format));
  return 0;
}

int run_zdim(const CountOptions& opts) {
  const OrdStarTable ord_star = derive_ord_star(load_ord_table());
  Stopwatch clock;

  // One ascending pass: ZDIM_T0(1..n) is the dominant cost and each value
  // is reused by every later summand.
  CountResult result;
  result.n = opts.n;
  result.algorithm = parse_algorithm(opts.algorithm);
  std::vector<BigCount> t0_values;
  t0_values.reserve(static_cast<std::size_t>(opts.n));
  for (int i = 1; i <= opts.n; ++i) {
    CountOptions sub = opts;
    sub.n = i;
    CountResult partial = compute_zdim_t0(sub, ord_star);
    if (i == opts.n) result.depth = partial.depth;
    t0_values.push_back(std::move(partial.value));
  }
  result.value = zdim(opts.n, t0_values, stirling_row(opts.n));

  print_count("zdim", result, clock.seconds(), parse_format(opts.format));
  return 0;
}

int run_stirling(int n, const std::string& format) {
  const StirlingRow row = stirling_row(n);
  switch (parse_format(format)) {
    case Format::plain: {
      bool first = true;
      for (const BigCount& entry : row.entries()) {
        std::cout << (first ? "" : " ") << to_decimal(entry);
        first = false;
      }
      std::cout << "\n";
      return 0;
    }
    case Format::json: {
      nlohmann::ordered_json record{{"n", n}};
      auto& entries = record["entries"] = nlohmann::ordered_json::array();
      for (const BigCount& entry : row.entries()) entries.push_back(to_decimal(entry));
      std::cout << record.dump() << "\n";
      return 0;
    }
    case Format::csv:
      std::cout << "i,value\n";
      for (int i = 1; i <= n; ++i) {
        std::cout << i << "," << to_decimal(row.entry(i)) << "\n";
      }
      return 0;
  }
  return 0;
}

void print_vector(std::span<const int> values) {
  std::fputc('(', stdout);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) std::fputc(',', stdout);
    std::printf("%d", values[k]);
  }
  std::fputs(")\n", stdout);
}

int run_partitions(int n, const std::string& emit, const std::string& algorithm) {
  const bool want_codewords = emit == "codewords";
  if (!want_codewords && emit != "dvectors") {
    throw CLI::ValidationError("--emit", "expected codewords or dvectors");
  }
  const Algorithm algo = parse_algorithm(algorithm);
  if (algo == Algorithm::parallel) {
    throw CLI::ValidationError("--algorithm", "partitions supports iterative or recursive");
  }

  if (algo == Algorithm::iterative) {
    std::vector<int> block_sizes(static_cast<std::size_t>(n) + 1, 0);
    generate_iterative(n, [&](CodewordView codeword) {
      if (want_codewords) {
        print_vector(codeword);
        return;
      }
      for (int l = 1; l <= n; ++l) block_sizes[l] = 0;
      for (const int label : codeword) ++block_sizes[label];
      print_vector(std::span<const int>(block_sizes.data() + 1, static_cast<std::size_t>(n)));
    });
    return 0;
  }

  // The recursive generator never materializes codewords.
  if (want_codewords) {
    throw CLI::ValidationError(
        "--emit", "the recursive generator tracks block sizes only; "
                  "use --algorithm iterative for codewords");
  }
  generate_recursive(n, [](const GeneratorState& state) {
    print_vector(state.block_sizes);
  });
  return 0;
}

int run_ord(bool star, const std::string& format) {
  const OrdTable ord = load_ord_table();
  std::vector<std::string> values;
  if (star) {
    const OrdStarTable ord_star = derive_ord_star(ord);
    for (int n = 1; n <= ord_star.max_n(); ++n) values.push_back(to_decimal(ord_star.value(n)));
  } else {
    for (int n = 1; n <= ord.max_n(); ++n) values.push_back(to_decimal(ord.value(n)));
  }
  switch (parse_format(format)) {
    case Format::plain:
      for (const std::string& v : values) std::cout << v << "\n";
      return 0;
    case Format::json: {
      nlohmann::ordered_json record{{"table", star ? "ord-star" : "ord"}};
      record["values"] = values;
      std::cout << record.dump() << "\n";
      return 0;
    }
    case Format::csv:
      std::cout << "n,value\n";
      for (std::size_t k = 0; k < values.size(); ++k) {
        std::cout << (k + 1) << "," << values[k] << "\n";
      }
      return 0;
  }
  return 0;
}

int run_verify(std::optional<int> max_n) {
  const OrdTable ord = load_ord_table();
  const OrdStarTable ord_star = derive_ord_star(ord);
  const int cap_t0 = std::min(max_n.value_or(5), 5);
  const int cap_arbitrary = std::min(max_n.value_or(4), 4);

  bool all_passed = true;
  auto report = [&](const std::string& check, int n, const BigCount& expected,
                    const BigCount& actual) {
    const bool ok = expected == actual;
    all_passed = all_passed && ok;
    std::printf("%-44s n=%d  expected=%-12s actual=%-12s %s\n", check.c_str(), n,
                to_decimal(expected).c_str(), to_decimal(actual).c_str(),
                ok ? "PASS" : "FAIL");
  };

  for (int n = 1; n <= cap_t0; ++n) {
    report("brute-force posets = ORD table", n, ord.value(n), oracle::count_posets(n));
  }
  for (int n = 1; n <= cap_t0; ++n) {
    report("brute-force posets w/ greatest = ORD*", n, ord_star.value(n),
           oracle::count_posets_with_greatest(n));
  }
  for (int n = 1; n <= cap_t0; ++n) {
    report("brute-force zero-dim T0 = engine", n, zdim_t0_recursive(n, ord_star),
           oracle::count_zerodim_t0(n));
  }
  for (int n = 1; n <= cap_t0; ++n) {
    report("engine zdim-t0 = published table", n, reference_zdim_t0()[n - 1],
           zdim_t0_recursive(n, ord_star));
  }

  std::vector<BigCount> t0_values;
  for (int i = 1; i <= cap_arbitrary; ++i) t0_values.push_back(zdim_t0_recursive(i, ord_star));
  for (int n = 1; n <= cap_arbitrary; ++n) {
    const BigCount engine =
        zdim(n, std::span<const BigCount>(t0_values.data(), static_cast<std::size_t>(n)),
             stirling_row(n));
    report("brute-force zero-dim = engine zdim", n, engine, oracle::count_zerodim(n));
    report("engine zdim = published table", n, reference_zdim()[n - 1], engine);
  }

  std::printf("%s\n", all_passed ? "all checks passed" : "some checks FAILED");
  return all_passed ? 0 : 1;
}

int run_bench(int n, std::vector<int> depths, int repeats, unsigned threads) {
  if (depths.empty()) depths = {0, 3, 6, 9};
  SplitConfig base;
  base.workers = threads;
  const OrdStarTable ord_star = derive_ord_star(load_ord_table());
  const BenchReport report =
      bench_depth_sweep(n, ord_star, depths, base, repeats);
  std::printf("depth,run,seconds,value\n");
  for (const BenchRow& row : report.rows) {
    std::printf("%d,%d,%.6f,%s\n", row.depth, row.run, row.seconds,
                to_decimal(row.value).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of zero-dimensional finite topological spaces"};
  app.require_subcommand(1);

  CountOptions zdim_t0_opts;
  CLI::App* zdim_t0_cmd =
      app.add_subcommand("zdim-t0", "Count zero-dimensional T0-topologies on {1..n}");
  add_count_options(zdim_t0_cmd, zdim_t0_opts, "carrier size (1..19)");

  CountOptions zdim_opts;
  CLI::App* zdim_cmd =
      app.add_subcommand("zdim", "Count zero-dimensional topologies on {1..n}");
  add_count_options(zdim_cmd, zdim_opts, "carrier size (1..19)");

  int stirling_n = 0;
  std::string stirling_format = "plain";
  CLI::App* stirling_cmd =
      app.add_subcommand("stirling", "Print row n of the Stirling triangle (second kind)");
  stirling_cmd->add_option("n", stirling_n, "row index (n >= 1)")->required();
  stirling_cmd->add_option("--format", stirling_format, "plain, json or csv")
      ->default_val("plain");

  int partitions_n = 0;
  std::string partitions_emit = "codewords";
  std::string partitions_algorithm = "iterative";
  CLI::App* partitions_cmd =
      app.add_subcommand("partitions", "Enumerate the partitions of {1..n}");
  partitions_cmd->add_option("n", partitions_n, "carrier size (n >= 1)")->required();
  partitions_cmd->add_option("--emit", partitions_emit, "codewords or dvectors")
      ->default_val("codewords");
  partitions_cmd->add_option("--algorithm", partitions_algorithm,
                             "iterative or recursive")
      ->default_val("iterative");

  bool ord_star_flag = false;
  std::string ord_format = "plain";
  CLI::App* ord_cmd = app.add_subcommand("ord", "Print the order-count tables");
  ord_cmd->add_flag("--star", ord_star_flag,
                    "print counts of orders with a greatest element (n = 1..19)");
  ord_cmd->add_option("--format", ord_format, "plain, json or csv")->default_val("plain");

  std::optional<int> verify_max_n;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check the engine against brute force and the published tables");
  verify_cmd->add_option("--max-n", verify_max_n,
                         "cap the verified carrier sizes (defaults: 5 for T0, 4 otherwise)");

  int bench_n = 0;
  std::vector<int> bench_depths;
  int bench_repeats = 1;
  unsigned bench_threads = default_worker_count();
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Depth sweep of the parallel engine, CSV on stdout");
  bench_cmd->add_option("--n", bench_n, "carrier size (1..19)")->required();
  bench_cmd->add_option("--depths", bench_depths, "split depths to sweep")
      ->delimiter(',');
  bench_cmd->add_option("--repeats", bench_repeats, "runs per depth")->default_val(1);
  bench_cmd->add_option("--threads", bench_threads, "worker threads")
      ->envname("ZERODIM_THREADS");

  CLI11_PARSE(app, argc, argv);

  try {
    if (zdim_t0_cmd->parsed()) return run_zdim_t0(zdim_t0_opts);
    if (zdim_cmd->parsed()) return run_zdim(zdim_opts);
    if (stirling_cmd->parsed()) return run_stirling(stirling_n, stirling_format);
    if (partitions_cmd->parsed()) {
      return run_partitions(partitions_n, partitions_emit, partitions_algorithm);
    }
    if (ord_cmd->parsed()) return run_ord(ord_star_flag, ord_format);
    if (verify_cmd->parsed()) return run_verify(verify_max_n);
    if (bench_cmd->parsed()) {
      return run_bench(bench_n, bench_depths, bench_repeats, bench_threads);
    }
  } catch (const CLI::Error& err) {
    return app.exit(err);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
