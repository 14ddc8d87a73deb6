#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "dynrank/errors.hpp"
#include "replay/replay.hpp"

namespace {

using namespace dynrank;

struct Flags {
    std::string log;
    std::string mode = "matrix";
    std::string primes = "product";
    std::uint64_t seed = 1;
    std::size_t trials = 8;
    std::string nfa;
    std::uint64_t prime = 0;
    bool json = false;
    bool check_invariants = false;
    bool parallel = false;
};

void add_replay_flags(CLI::App& cmd, Flags& f) {
    cmd.add_option("log", f.log, "Change log to replay ('-' for stdin)")->required();
    cmd.add_option("--mode", f.mode, "Tracker kind")
        ->check(CLI::IsMember({"matrix", "reach", "allpairs", "2sat", "rpq", "matching"}));
    cmd.add_option("--primes", f.primes, "Prime set for integer ranks")->check(CLI::IsMember({"product", "paper"}));
    cmd.add_option("--seed", f.seed, "Seed for matching weights");
    cmd.add_option("--trials", f.trials, "Independent weightings in matching mode")->check(CLI::PositiveNumber);
    cmd.add_option("--nfa", f.nfa, "Automaton file for rpq mode")->check(CLI::ExistingFile);
    cmd.add_option("--prime", f.prime, "Matrix mode: rank modulo this single prime");
    cmd.add_flag("--json", f.json, "JSON records instead of text");
    cmd.add_flag("--check-invariants", f.check_invariants, "Verify every state against the oracles after each step");
    cmd.add_flag("--parallel", f.parallel, "Fan updates out over worker threads");
}

replay::Options to_options(const Flags& f) {
    replay::Options o;
    o.mode = replay::parse_mode(f.mode);
    o.primes = f.primes == "paper" ? PrimeMode::CubeBound : PrimeMode::ProductBound;
    o.seed = f.seed;
    o.trials = f.trials;
    o.json = f.json;
    o.check_invariants = f.check_invariants;
    o.exec = f.parallel ? Execution::Parallel : Execution::Sequential;
    if (f.prime) {
        if (o.mode != replay::Mode::Matrix) throw std::invalid_argument("--prime applies to matrix mode only");
        o.single_prime = Prime(f.prime).value();
    }
    if (!f.nfa.empty()) {
        std::ifstream in(f.nfa);
        o.nfa = parse_nfa(in);
    }
    return o;
}

std::vector<replay::Op> read_log(const std::string& path) {
    if (path == "-") return replay::parse_log(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return replay::parse_log(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Replay change logs against incrementally maintained rank structures"};
    app.require_subcommand(1);

    Flags flags;
    auto* run = app.add_subcommand("run", "Replay a log and print one record per query");
    add_replay_flags(*run, flags);
    auto* bench = app.add_subcommand("bench", "Time incremental updates against recomputation");
    add_replay_flags(*bench, flags);

    replay::GenSpec gen_spec;
    std::string gen_mode = "matrix";
    auto* gen = app.add_subcommand("gen", "Write a random change log to stdout");
    gen->add_option("--mode", gen_mode, "Tracker kind")
        ->check(CLI::IsMember({"matrix", "reach", "allpairs", "2sat", "rpq", "matching"}));
    gen->add_option("--size", gen_spec.size, "Matrix side, nodes or variables")->check(CLI::PositiveNumber);
    gen->add_option("--steps", gen_spec.steps, "Number of changes");
    gen->add_option("--seed", gen_spec.seed, "Generator seed");
    gen->add_option("--bound", gen_spec.bound, "Matrix entry bound")->check(CLI::PositiveNumber);
    gen->add_option("--query-every", gen_spec.query_every, "Changes between queries (0: none)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            gen_spec.mode = replay::parse_mode(gen_mode);
            std::cout << replay::generate_log(gen_spec);
            return 0;
        }
        const replay::Options options = to_options(flags);
        const auto ops = read_log(flags.log);
        if (run->parsed()) {
            replay::run(ops, options, std::cout);
        } else {
            replay::print_report(replay::bench(ops, options), options.json, std::cout);
        }
    } catch (const InvariantError& e) {
        std::cout.flush();
        std::cerr << "dynrank: invariant violated: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cout.flush();
        std::cerr << "dynrank: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
