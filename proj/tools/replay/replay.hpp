#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynrank/modp.hpp"
#include "dynrank/nfa.hpp"
#include "dynrank/parallel.hpp"

/// Change-log replay behind the `dynrank` command-line tool.
namespace dynrank::replay {

enum class Mode { Matrix, Reach, AllPairs, TwoSat, Rpq, Matching };

/// Throws std::invalid_argument for an unknown name.
Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

/// A malformed line, or one that does not fit the declared dimensions.
class LogError : public std::runtime_error {
public:
    LogError(std::size_t line, const std::string& what);
    /// 1-based; 0 when the problem is not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct Op {
    std::size_t line = 0;
    std::string verb;
    std::vector<std::string> args;

    bool is_query() const { return !verb.empty() && verb.back() == '?'; }
    std::string text() const;
};

/// Splits a log into whitespace-separated tokens per line, dropping blank
/// lines and `#` comments. Meaning is checked later, against a mode.
std::vector<Op> parse_log(std::istream& in);

struct Options {
    Mode mode = Mode::Matrix;
    PrimeMode primes = PrimeMode::ProductBound;
    std::uint64_t seed = 1;
    std::size_t trials = 8;
    std::optional<Nfa> nfa;
    /// Matrix mode only: track the rank modulo this one prime instead of a
    /// sound prime set.
    std::optional<std::uint64_t> single_prime;
    bool json = false;
    bool check_invariants = false;
    Execution exec = Execution::Sequential;
};

/// Replays the log and writes one record per query line. Throws LogError
/// for bad input and InvariantError when a consistency check fails.
void run(const std::vector<Op>& ops, const Options& options, std::ostream& out);

struct BenchReport {
    std::size_t updates = 0;
    std::size_t queries = 0;
    /// Number of maintained mod-p states recomputed per step.
    std::size_t states = 0;
    /// Mean wall time per update / query in microseconds.
    double incremental_us = 0;
    double recompute_us = 0;
    double query_us = 0;

    /// recompute / incremental, 0 for an empty log.
    double ratio() const { return incremental_us > 0 ? recompute_us / incremental_us : 0.0; }
};

/// Times every change twice: the incremental update, then a from-scratch
/// Gaussian elimination of every maintained state.
BenchReport bench(const std::vector<Op>& ops, const Options& options);
void print_report(const BenchReport& report, bool json, std::ostream& out);

struct GenSpec {
    Mode mode = Mode::Matrix;
    /// Matrix side, node count or variable count.
    std::size_t size = 8;
    std::size_t steps = 100;
    std::uint64_t seed = 1;
    /// Matrix mode entry bound.
    std::int64_t bound = 8;
    /// Emit a query after every this many changes; 0 for none.
    std::size_t query_every = 1;
};

/// Random change log for the given mode. rpq logs use labels a and b.
std::string generate_log(const GenSpec& spec);

}  // namespace dynrank::replay
