// Copyright 2026 The fifo-routes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fifo_routes/cli.h"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fifo_routes/gtfs.h"
#include "fifo_routes/io.h"
#include "fifo_routes/solvers.h"
#include "fifo_routes/verify.h"

namespace fifo_routes {

namespace {

std::string short_sequence(const StopSequence& seq) {
  if (seq.stops.empty()) return "<>";
  std::string s = seq.stops.front().str();
  if (seq.stops.size() > 1) s += ".." + seq.stops.back().str();
  return s + " (" + std::to_string(seq.stops.size()) + ")";
}

int cmd_ingest(const std::string& gtfs_dir, const std::string& out_file, std::ostream& out,
               std::ostream& err) {
  IngestResult result;
  try {
    result = load_gtfs(gtfs_dir);
  } catch (const IngestError& e) {
    err << "ingest: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  try {
    write_text_file(out_file, timetable_to_json(result.timetable));
  } catch (const FormatError& e) {
    err << "ingest: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  out << ingest_report_to_json(result.report);
  return exit_code::kOk;
}

int cmd_solve(const std::string& in_file, const std::string& algorithm_name,
              const std::string& out_file, const std::string& format,
              const SolveOptions& options, std::ostream& out, std::ostream& err) {
  const auto algorithm = parse_algorithm(algorithm_name);
  if (!algorithm) {
    err << "solve: unknown algorithm '" << algorithm_name << "'\n";
    return exit_code::kUsage;
  }
  Timetable timetable;
  try {
    timetable = load_timetable(in_file);
  } catch (const FormatError& e) {
    err << "solve: " << e.what() << "\n";
    return exit_code::kDataError;
  }

  RoutePartition partition;
  std::optional<AntichainCertificate> certificate;
  try {
    switch (*algorithm) {
      case Algorithm::kOptimal: {
        OptimalSolution s = solve_optimal(timetable, options);
        partition = std::move(s.partition);
        certificate = std::move(s.certificate);
        break;
      }
      case Algorithm::kGreedy: partition = solve_greedy(timetable, options); break;
      case Algorithm::kTrivial: partition = solve_trivial(timetable); break;
      case Algorithm::kBrute: partition = solve_brute(timetable, options); break;
    }
  } catch (const SolverRefusal& e) {
    err << "solve: " << e.what() << "\n";
    return exit_code::kSolverRefusal;
  }

  try {
    write_text_file(out_file, format == "csv"
                                  ? assignment_to_csv(partition)
                                  : assignment_to_json(partition, timetable,
                                                       certificate ? &*certificate : nullptr));
  } catch (const FormatError& e) {
    err << "solve: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  out << "algorithm " << to_string(partition.algorithm) << "\n"
      << "total_trips " << partition.total_trips() << "\n"
      << "total_routes " << partition.routes.size() << "\n";
  if (partition.single_event_trips > 0) {
    out << "single_event_trips " << partition.single_event_trips << "\n";
  }
  return exit_code::kOk;
}

int cmd_verify(const std::string& timetable_file, const std::string& assignment_file,
               std::ostream& out, std::ostream& err) {
  Timetable timetable;
  RouteAssignment assignment;
  try {
    timetable = load_timetable(timetable_file);
    assignment = load_assignment(assignment_file);
  } catch (const FormatError& e) {
    err << "verify: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  VerificationReport report;
  try {
    report = verify_partition(assignment.partition, timetable);
  } catch (const VerificationError& e) {
    err << "verify: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  for (const auto& v : report.violations) out << describe(v) << "\n";
  bool ok = report.valid;
  if (assignment.certificate) {
    const bool cert_ok = verify_certificate(*assignment.certificate, assignment.partition, timetable);
    if (!cert_ok) out << "certificate invalid\n";
    ok = ok && cert_ok;
  }
  out << (ok ? "valid" : "invalid") << " routes=" << assignment.partition.routes.size()
      << " groups=" << report.groups_checked << " violations=" << report.violations.size()
      << (assignment.certificate ? " certificate=checked" : "") << "\n";
  return ok ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_compare(const std::string& in_file, const SolveOptions& options, std::ostream& out,
                std::ostream& err, bool color) {
  Timetable timetable;
  try {
    timetable = load_timetable(in_file);
  } catch (const FormatError& e) {
    err << "compare: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  const ComparisonStats stats = compare_solvers(timetable, options);

  std::vector<std::string> names;
  std::size_t name_width = std::string("stop sequence").size();
  for (const auto& g : stats.groups) {
    names.push_back(short_sequence(g.sequence));
    name_width = std::max(name_width, names.back().size());
  }
  const auto row = [&](const std::string& name, auto trips, auto opt, auto greedy, auto trivial,
                       bool flag) {
    out << std::left << std::setw(static_cast<int>(name_width)) << name << std::right
        << std::setw(8) << trips << std::setw(9) << opt << std::setw(8) << greedy
        << std::setw(9) << trivial;
    if (flag) out << (color ? "  \033[33mgreedy>optimal\033[0m" : "  greedy>optimal");
    out << "\n";
  };
  row("stop sequence", "trips", "optimal", "greedy", "trivial", false);
  for (std::size_t i = 0; i < stats.groups.size(); ++i) {
    const auto& g = stats.groups[i];
    row(names[i], g.trips, g.optimal, g.greedy, g.trivial, g.greedy > g.optimal);
  }
  row("total", stats.total_trips, stats.total_optimal, stats.total_greedy, stats.total_trivial,
      false);
  out << "groups_where_greedy_suboptimal " << stats.groups_where_greedy_suboptimal << "\n\n";
  out << comparison_to_json(stats);
  return exit_code::kOk;
}

int cmd_generate(const GeneratorSpec& spec, const std::string& out_file, std::ostream& out,
                 std::ostream& err) {
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    err << "generate: " << e.what() << "\n";
    return exit_code::kUsage;
  }
  const Timetable timetable = generate_synthetic(spec);
  try {
    write_text_file(out_file, timetable_to_json(timetable));
  } catch (const FormatError& e) {
    err << "generate: " << e.what() << "\n";
    return exit_code::kDataError;
  }
  out << "trips " << timetable.trips.size() << "\n"
      << "stations " << timetable.stations.size() << "\n";
  return exit_code::kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Group transit trips into a minimal set of FIFO routes", "fifo-routes"};
  app.require_subcommand(1, 1);

  unsigned threads = 0;
  std::size_t brute_limit = kDefaultBruteLimit;
  std::string in_file, out_file, second_file;
  std::string algorithm = "optimal";
  std::string format = "json";
  GeneratorSpec spec;

  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "Worker threads (default: available parallelism)");
  };

  auto* ingest = app.add_subcommand("ingest", "Load a GTFS directory into a timetable file");
  ingest->add_option("gtfs_dir", in_file, "GTFS feed directory")->required();
  ingest->add_option("--out", out_file, "Timetable file to write")->required();

  auto* solve = app.add_subcommand("solve", "Group the trips of a timetable file into routes");
  solve->add_option("in_file", in_file, "Timetable file")->required();
  solve->add_option("--algorithm", algorithm, "optimal | greedy | trivial | brute")
      ->capture_default_str();
  solve->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  solve->add_option("--out", out_file, "Route assignment file to write")->required();
  solve->add_option("--brute-limit", brute_limit, "Largest group the brute solver accepts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_threads(solve);

  auto* verify = app.add_subcommand("verify", "Check a route assignment against a timetable");
  verify->add_option("timetable_file", in_file, "Timetable file")->required();
  verify->add_option("assignment_file", second_file, "Route assignment (JSON or CSV)")
      ->required();

  auto* compare = app.add_subcommand("compare", "Compare optimal, greedy and trivial counts");
  compare->add_option("in_file", in_file, "Timetable file")->required();
  add_threads(compare);

  auto* generate = app.add_subcommand("generate", "Write a synthetic timetable file");
  generate->add_option("--sequences", spec.num_sequences)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--trips", spec.trips_per_sequence, "Trips per stop sequence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--stops", spec.stops_per_sequence, "Stops per sequence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--headway", spec.headway_seconds, "Seconds between departures")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  generate->add_option("--jitter", spec.jitter_seconds, "Maximum per-event delay in seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  generate->add_option("--overtake-prob", spec.overtake_probability)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate->add_option("--seed", spec.rng_seed)->capture_default_str();
  generate->add_option("--out", out_file, "Timetable file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (argc > 1) err << "run with --help for usage\n";
    return exit_code::kUsage;
  }

  SolveOptions options;
  options.threads = threads;
  options.brute_limit = brute_limit;

  if (*ingest) return cmd_ingest(in_file, out_file, out, err);
  if (*solve) return cmd_solve(in_file, algorithm, out_file, format, options, out, err);
  if (*verify) return cmd_verify(in_file, second_file, out, err);
  if (*compare) return cmd_compare(in_file, options, out, err, color);
  return cmd_generate(spec, out_file, out, err);
}

}  // namespace fifo_routes
