// rankvc: command-line front end for the compression pipeline.
//
// Exit codes: 0 ok, 1 input error, 2 fallback after a failed run,
// 3 oracle limit, 4 not equivalent.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rankvc/dimacs.hpp"
#include "rankvc/errors.hpp"
#include "rankvc/generators.hpp"
#include "rankvc/instance.hpp"
#include "rankvc/pipeline.hpp"

using namespace rankvc;

namespace {

enum Exit { kOk = 0, kInput = 1, kFallback = 2, kOracle = 3, kNotEquivalent = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write to '" + path + "' failed");
}

struct CompressArgs {
  std::string input, out, report, epsilon = "1/20", mode = "fast", vc = "exact";
  std::uint64_t k = 0, seed = 0;
  std::vector<Vertex> cover;
  bool no_shortcut = false, verify = false;
};

int run_compress(const CompressArgs& a) {
  const Graph g = parse_dimacs(read_file(a.input));
  PipelineConfig cfg;
  cfg.epsilon = parse_rational(a.epsilon);
  if (cfg.epsilon <= 0 || cfg.epsilon >= 1) throw InputError("--epsilon must lie strictly between 0 and 1");
  cfg.mode = a.mode == "faithful" ? ArithmeticMode::Faithful : ArithmeticMode::Fast;
  cfg.vc = a.vc == "matching" ? CoverChoice::MatchingApprox
           : a.vc == "provided" ? CoverChoice::Provided
                                : CoverChoice::Exact;
  if (cfg.vc == CoverChoice::Provided && a.cover.empty() && g.edge_count() > 0) {
    throw InputError("--vc provided needs --cover");
  }
  cfg.provided_cover = a.cover;
  cfg.seed = a.seed;
  cfg.shortcut = !a.no_shortcut;
  cfg.oracle_verify = a.verify;

  const auto result = compress(g, a.k, cfg);
  write_output(a.out, serialize(result.instance));
  const std::string report = result.report.to_text();
  if (!a.report.empty()) {
    write_output(a.report, report);
  } else if (!a.out.empty() && a.out != "-") {
    std::cout << report;
  }
  if (result.report.failed) {
    std::cerr << "rankvc: compression failed (" << result.report.failure << "); emitted fallback instance\n";
    return kFallback;
  }
  if (result.report.verified && !*result.report.verified) {
    std::cerr << "rankvc: oracle check found the output not equivalent\n";
    return kNotEquivalent;
  }
  return kOk;
}

int run_decide(const std::string& input, std::size_t limit) {
  const RvcInstance inst = deserialize(read_file(input));
  std::cout << (decide_bruteforce(inst, limit) ? "YES" : "NO") << '\n';
  return kOk;
}

int run_verify(const std::string& graph, std::uint64_t k, const std::string& instance, std::size_t limit) {
  const Graph g = parse_dimacs(read_file(graph));
  const RvcInstance inst = deserialize(read_file(instance));
  if (verify_equivalence(g, k, inst, limit)) {
    std::cout << "equivalent\n";
    return kOk;
  }
  std::cout << "not equivalent\n";
  return kNotEquivalent;
}

int run_gen(const std::string& model, std::size_t n, const std::string& p, std::uint64_t seed,
            const std::string& out) {
  if (model != "gnp") throw InputError("unknown model '" + model + "'");
  Rng rng = derive_stream(seed, 0);
  write_output(out, emit_dimacs(random_gnp(n, parse_rational(p), rng)));
  return kOk;
}

int run_stats(const std::string& input) {
  const RvcInstance inst = deserialize(read_file(input));
  const auto& rep = inst.pair.matroid().representation();
  std::cout << "domain=" << rep.domain().to_string() << '\n'
            << "n=" << inst.pair.graph().vertex_count() << '\n'
            << "m=" << inst.pair.graph().edge_count() << '\n'
            << "rows=" << rep.rows() << '\n'
            << "rank=" << rep.rank() << '\n'
            << "budget=" << inst.budget << '\n'
            << "max_entry_bits=" << rep.max_entry_bits() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized compression of Vertex Cover Above MM into Rank Vertex Cover"};
  app.require_subcommand(1);

  CompressArgs ca;
  auto* compress_cmd = app.add_subcommand("compress", "compress a DIMACS graph and parameter k");
  compress_cmd->add_option("--input", ca.input, "DIMACS graph")->required();
  compress_cmd->add_option("--k", ca.k, "parameter above the matching size")->required();
  compress_cmd->add_option("--epsilon", ca.epsilon, "failure probability, a/b or decimal")->capture_default_str();
  compress_cmd->add_option("--seed", ca.seed, "random seed")->required();
  compress_cmd->add_option("--mode", ca.mode)->check(CLI::IsMember({"fast", "faithful"}))->capture_default_str();
  compress_cmd->add_option("--vc", ca.vc)->check(CLI::IsMember({"exact", "matching", "provided"}))->capture_default_str();
  compress_cmd->add_option("--cover", ca.cover, "vertex cover for --vc provided")->delimiter(',');
  compress_cmd->add_option("--out", ca.out, "RVC1 output (default stdout)");
  compress_cmd->add_option("--report", ca.report, "report output");
  compress_cmd->add_flag("--no-shortcut", ca.no_shortcut, "always run the full compression");
  compress_cmd->add_flag("--verify", ca.verify, "brute-force equivalence check on small inputs");

  std::string decide_input;
  std::size_t limit = kDefaultOracleLimit;
  auto* decide_cmd = app.add_subcommand("decide", "brute-force decision of an RVC1 instance");
  decide_cmd->add_option("--input", decide_input)->required();
  decide_cmd->add_option("--oracle-limit", limit)->capture_default_str();

  std::string verify_graph, verify_instance;
  std::uint64_t verify_k = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check an instance against its source graph");
  verify_cmd->add_option("--graph", verify_graph)->required();
  verify_cmd->add_option("--k", verify_k)->required();
  verify_cmd->add_option("--instance", verify_instance)->required();
  verify_cmd->add_option("--oracle-limit", limit)->capture_default_str();

  std::string model = "gnp", gen_p, gen_out;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "emit a random graph in DIMACS form");
  gen_cmd->add_option("--model", model)->check(CLI::IsMember({"gnp"}))->capture_default_str();
  gen_cmd->add_option("--n", gen_n)->required();
  gen_cmd->add_option("--p", gen_p)->required();
  gen_cmd->add_option("--seed", gen_seed)->required();
  gen_cmd->add_option("--out", gen_out);

  std::string stats_input;
  auto* stats_cmd = app.add_subcommand("stats", "size statistics of an RVC1 instance");
  stats_cmd->add_option("--input", stats_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*compress_cmd) return run_compress(ca);
    if (*decide_cmd) return run_decide(decide_input, limit);
    if (*verify_cmd) return run_verify(verify_graph, verify_k, verify_instance, limit);
    if (*gen_cmd) return run_gen(model, gen_n, gen_p, gen_seed, gen_out);
    if (*stats_cmd) return run_stats(stats_input);
  } catch (const OracleLimitError& e) {
    std::cerr << "rankvc: " << e.what() << '\n';
    return kOracle;
  } catch (const std::exception& e) {
    std::cerr << "rankvc: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
