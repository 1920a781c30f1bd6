#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "netmate/compiler.hpp"
#include "netmate/harness.hpp"
#include "netmate/serialize.hpp"
#include "netmate/solver.hpp"

using namespace netmate;

namespace {

enum Exit { kOk = 0, kUsage = 1, kRejected = 2, kDisagreement = 3 };

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write " + out_path};
  out << text;
}

StateDocument load_state(const std::string& path) {
  try {
    return parse_state_document(read_file(path));
  } catch (const SerializationError& e) {
    throw Failure{kUsage, path + ": " + e.what()};
  }
}

int cmd_compile(const std::string& instance_file, int theorem, const std::string& out) {
  CompiledScenario sc;
  try {
    const auto instance = parse_instance(read_file(instance_file));
    sc = theorem == 1 ? compile_runner_mate1(instance) : compile_corp_mate2(instance);
  } catch (const InstanceError& e) {
    throw Failure{kRejected, e.what()};
  }
  emit(serialize(StateDocument{sc.state, sc.manifest}), out);
  if (!out.empty()) {
    const auto& m = sc.manifest;
    std::cout << "theorem " << m.theorem << ": 2t=" << m.twice_target;
    if (m.theorem == 1)
      std::cout << " c=" << m.hq_break_cost << " target " << m.per_server_target;
    else
      std::cout << " threshold " << m.per_server_target;
    std::cout << ", wrote " << out << "\n";
  }
  return kOk;
}

int cmd_solve(const std::string& state_file, int mate, bool no_memo, const std::string& out) {
  const auto doc = load_state(state_file);
  SolverOptions opts;
  opts.memo = !no_memo;
  SolveResult r;
  try {
    r = mate == 1 ? solve_runner_mate1(doc.state, opts) : solve_corp_mate2(doc.state, opts);
  } catch (const SolverPreconditionError& e) {
    throw Failure{kUsage, e.what()};
  }
  if (r.winnable) {
    std::cout << (mate == 1 ? "WINNABLE" : "WINNABLE (mate in 2)") << "\n";
    std::cout << "claimed: " << to_string(r.claimed) << "\n";
    for (std::size_t i = 0; i < r.witness.size(); ++i) std::cout << "  " << i << ". " << describe(r.witness[i]) << "\n";
  } else {
    std::cout << "NOT WINNABLE\n" << r.refutation_note << "\n";
  }
  std::cout << "nodes " << r.nodes_explored << "\n";
  std::cout << "elapsed " << r.elapsed_seconds << " s\n";
  if (!out.empty()) emit(serialize(LineDocument{mate, r.claimed, r.witness}), out);
  return kOk;
}

int cmd_replay(const std::string& state_file, const std::string& line_file) {
  const auto doc = load_state(state_file);
  LineDocument line;
  try {
    line = parse_line_document(read_file(line_file));
  } catch (const SerializationError& e) {
    throw Failure{kUsage, line_file + ": " + e.what()};
  }
  const auto report = replay(doc.state, line.actions);
  std::cout << format_ledger(report);
  if (report.failed_step) return kDisagreement;
  if (line.claimed != TerminalStatus::None && report.final_state.status != line.claimed) {
    std::cout << "witness claimed " << to_string(line.claimed) << "\n";
    return kDisagreement;
  }
  return kOk;
}

int cmd_verify(int max_n, int max_value, int mate, bool no_memo, std::optional<std::uint64_t> seed) {
  CampaignOptions opts{max_n, max_value, mate, {}};
  opts.solver.memo = !no_memo;
  CampaignReport report;
  try {
    report = run_campaign(opts, [](const CampaignRow& row) { std::cout << format_campaign_row(row) << "\n"; });
  } catch (const CampaignRefused& e) {
    throw Failure{kUsage, e.what()};
  }
  bool playouts_ok = true;
  if (seed) {
    int runs = 0;
    for (const auto& row : report.rows) {
      const PartitionInstance instance(row.values);
      const auto sc = mate == 1 ? compile_runner_mate1(instance) : compile_corp_mate2(instance);
      const auto p = random_playout(sc.state, *seed + static_cast<std::uint64_t>(runs++));
      if (p.problem) {
        playouts_ok = false;
        std::cout << "playout problem on instance " << runs - 1 << ": " << *p.problem << "\n";
      }
    }
    std::cout << "random playouts: " << runs << (playouts_ok ? ", invariants held\n" : ", FAILED\n");
  }
  std::cout << report.agreements() << "/" << report.rows.size() << " agree\n";
  return report.all_agree() && playouts_ok ? kOk : kDisagreement;
}

int cmd_render(const std::string& state_file) {
  std::cout << render(load_state(state_file).state);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Netrunner mate-in-k reduction lab"};
  app.require_subcommand(1);

  std::string instance_file, state_file, line_file, out;
  int theorem = 1, mate = 1, max_n = 4, max_value = 4;
  bool no_memo = false;
  std::optional<std::uint64_t> seed;

  auto* compile = app.add_subcommand("compile", "compile a 2-Partition instance into a board state");
  compile->add_option("instance", instance_file, "instance file")->required();
  compile->add_option("--theorem,--mate", theorem, "1: Runner mate-in-1, 2: Corp mate-in-2")
      ->check(CLI::IsMember({1, 2}));
  compile->add_option("--out", out, "state file (default stdout)");

  auto* solve = app.add_subcommand("solve", "decide a mate-in-k question on a state file");
  solve->add_option("state", state_file, "state file")->required();
  solve->add_option("--mate,--theorem", mate, "1 or 2")->check(CLI::IsMember({1, 2}));
  solve->add_flag("--no-memo", no_memo, "disable the transposition table");
  solve->add_option("--out", out, "write the witness line here");

  auto* replay_cmd = app.add_subcommand("replay", "replay a line with a resource ledger");
  replay_cmd->add_option("state", state_file, "state file")->required();
  replay_cmd->add_option("line", line_file, "line file written by solve")->required();

  auto* verify = app.add_subcommand("verify", "solver against the partition oracle over all small instances");
  verify->add_option("--max-n", max_n, "largest even size")->check(CLI::PositiveNumber);
  verify->add_option("--max-value", max_value, "largest value")->check(CLI::PositiveNumber);
  verify->add_option("--mate,--theorem", mate, "1 or 2")->check(CLI::IsMember({1, 2}));
  verify->add_flag("--no-memo", no_memo, "disable the transposition table");
  verify->add_option("--seed", seed, "also run one random playout per instance from this seed");

  auto* render_cmd = app.add_subcommand("render", "draw a state file as text");
  render_cmd->add_option("state", state_file, "state file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*compile) return cmd_compile(instance_file, theorem, out);
    if (*solve) return cmd_solve(state_file, mate, no_memo, out);
    if (*replay_cmd) return cmd_replay(state_file, line_file);
    if (*verify) return cmd_verify(max_n, max_value, mate, no_memo, seed);
    if (*render_cmd) return cmd_render(state_file);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
