#include "replay.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "dynrank/errors.hpp"
#include "dynrank/good_basis.hpp"
#include "dynrank/int_rank.hpp"
#include "dynrank/matching.hpp"
#include "dynrank/oracle.hpp"
#include "dynrank/reach.hpp"
#include "dynrank/rpq.hpp"
#include "dynrank/two_sat.hpp"
#include "json.hpp"

namespace dynrank::replay {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::pair<Mode, std::string_view> kModeNames[] = {
    {Mode::Matrix, "matrix"}, {Mode::Reach, "reach"}, {Mode::AllPairs, "allpairs"},
    {Mode::TwoSat, "2sat"},   {Mode::Rpq, "rpq"},     {Mode::Matching, "matching"},
};

std::string where(const Op& op) { return "line " + std::to_string(op.line) + ": "; }

std::uint64_t parse_unsigned(const Op& op, std::string_view tok) {
    std::uint64_t v = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end || tok.empty()) {
        throw LogError(op.line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return v;
}

std::int64_t parse_signed(const Op& op, std::string_view tok) {
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end || tok.empty()) {
        throw LogError(op.line, "expected an integer, got '" + std::string(tok) + "'");
    }
    return v;
}

void expect_args(const Op& op, std::size_t n) {
    if (op.args.size() != n) {
        throw LogError(op.line, "'" + op.verb + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
    }
}

std::size_t index_in(const Op& op, std::string_view tok, std::size_t limit) {
    const std::uint64_t v = parse_unsigned(op, tok);
    if (v == 0 || v > limit) {
        throw LogError(op.line, "index " + std::string(tok) + " outside 1.." + std::to_string(limit));
    }
    return static_cast<std::size_t>(v - 1);
}

std::size_t positive(const Op& op, std::size_t k) {
    const std::uint64_t v = parse_unsigned(op, op.args[k]);
    if (v == 0) throw LogError(op.line, "'" + op.verb + "' needs positive sizes");
    return static_cast<std::size_t>(v);
}

Literal literal_in(const Op& op, std::string_view tok, std::size_t variables) {
    bool negated = false;
    if (!tok.empty() && (tok.front() == '+' || tok.front() == '-')) {
        negated = tok.front() == '-';
        tok.remove_prefix(1);
    }
    return {index_in(op, tok, variables), negated};
}

struct Answer {
    std::string text;
    Json value;
};

Answer boolean(bool b) { return {b ? "true" : "false", b}; }
Answer counted(const char* label, std::size_t k) { return {std::string(label) + " " + std::to_string(k), k}; }

class Session {
public:
    Session(const Op& init, const Options& options) : options_(options) {
        if (init.verb != "init") throw LogError(init.line, "log must start with 'init'");
        guarded(init, [&] { build(init); });
    }

    void change(const Op& op) {
        guarded(op, [&] { apply(op); });
    }

    Answer query(const Op& op) const {
        Answer a;
        guarded(op, [&] { a = answer(op); });
        return a;
    }

    std::vector<const GoodBasis*> states() const {
        std::vector<const GoodBasis*> out;
        auto add_reach = [&](const ReachTracker& r) {
            for (const GoodBasis& s : r.matrix().states()) out.push_back(&s);
        };
        if (matrix_) {
            for (const GoodBasis& s : matrix_->states()) out.push_back(&s);
        }
        if (single_) out.push_back(&single_->state);
        if (reach_) add_reach(*reach_);
        if (all_) {
            for (const ReachTracker& r : all_->trackers()) add_reach(r);
        }
        if (sat_) {
            for (const ReachTracker& r : sat_->trackers()) add_reach(r);
        }
        if (rpq_) {
            for (const ReachTracker& r : rpq_->trackers()) add_reach(r);
        }
        if (match_) {
            for (const auto& s : match_->structures()) out.push_back(&s.state);
        }
        return out;
    }

    void check(const Op& op) const {
        for (const GoodBasis* s : states()) {
            const std::string modulus = " (mod " + std::to_string(s->prime().value()) + ")";
            if (!s->is_a_good()) throw InvariantError(where(op) + "maintained basis is not A-good" + modulus);
            if (s->rank() != oracle::gaussian_rank_mod_p(s->rows(), s->cols(), s->matrix(), s->prime())) {
                throw InvariantError(where(op) + "maintained rank disagrees with elimination" + modulus);
            }
        }
        if (matrix_) check_matrix(op);
        if (reach_ && reach_->reachable() !=
                          oracle::bfs_reach(reach_->nodes(), reach_->edges(), reach_->source(), reach_->target())) {
            throw InvariantError(where(op) + "reach? disagrees with BFS");
        }
        if (all_) {
            for (const ReachTracker& r : all_->trackers()) {
                if (r.reachable() != oracle::bfs_reach(all_->nodes(), all_->edges(), r.source(), r.target())) {
                    throw InvariantError(where(op) + "reach? " + std::to_string(r.source() + 1) + " " +
                                         std::to_string(r.target() + 1) + " disagrees with BFS");
                }
            }
        }
        if (sat_) {
            const std::vector<Clause> cs(sat_->clauses().begin(), sat_->clauses().end());
            if (sat_->satisfiable() != oracle::two_sat_scc(sat_->variables(), cs)) {
                throw InvariantError(where(op) + "sat? disagrees with SCC check");
            }
        }
        if (rpq_ && rpq_->matches() != oracle::rpq_product_bfs(rpq_->nodes(), rpq_->labeled_edges(), rpq_->nfa(),
                                                               rpq_source_, rpq_target_)) {
            throw InvariantError(where(op) + "match? disagrees with product-graph BFS");
        }
        if (match_ && match_->nodes() <= 20) {
            const std::size_t truth = oracle::max_matching_exhaustive(match_->nodes(), match_->edges());
            if (match_->max_matching_size() > truth) {
                throw InvariantError(where(op) + "size? exceeds the maximum matching");
            }
        }
    }

private:
    struct SinglePrime {
        GoodBasis state;
        std::int64_t bound;
    };

    template <class Fn>
    static void guarded(const Op& op, Fn fn) {
        try {
            fn();
        } catch (const std::invalid_argument& e) {
            throw LogError(op.line, e.what());
        } catch (const std::out_of_range& e) {
            throw LogError(op.line, e.what());
        }
    }

    [[noreturn]] void wrong_mode(const Op& op) const {
        throw LogError(op.line, "'" + op.verb + "' is not valid in " + std::string(to_string(options_.mode)) + " mode");
    }

    void build(const Op& op) {
        const Options& o = options_;
        switch (o.mode) {
            case Mode::Matrix: {
                expect_args(op, 3);
                rows_ = positive(op, 0);
                cols_ = positive(op, 1);
                const std::uint64_t bound = positive(op, 2);
                if (o.single_prime) {
                    single_.emplace(SinglePrime{GoodBasis(rows_, cols_, Prime(*o.single_prime)),
                                                static_cast<std::int64_t>(bound)});
                } else {
                    matrix_.emplace(rows_, cols_, bound, o.primes, o.exec);
                }
                break;
            }
            case Mode::Reach: {
                expect_args(op, 3);
                rows_ = positive(op, 0);
                reach_.emplace(rows_, index_in(op, op.args[1], rows_), index_in(op, op.args[2], rows_), o.primes,
                               o.exec);
                break;
            }
            case Mode::AllPairs:
                expect_args(op, 1);
                rows_ = positive(op, 0);
                all_.emplace(rows_, o.primes, o.exec);
                break;
            case Mode::TwoSat:
                expect_args(op, 1);
                rows_ = positive(op, 0);
                sat_.emplace(rows_, o.primes, o.exec);
                break;
            case Mode::Rpq:
                expect_args(op, 3);
                if (!o.nfa) throw LogError(op.line, "rpq mode needs --nfa");
                rows_ = positive(op, 0);
                rpq_source_ = index_in(op, op.args[1], rows_);
                rpq_target_ = index_in(op, op.args[2], rows_);
                rpq_.emplace(rows_, rpq_source_, rpq_target_, *o.nfa, o.primes, o.exec);
                break;
            case Mode::Matching:
                expect_args(op, 1);
                rows_ = positive(op, 0);
                match_.emplace(rows_, o.trials, o.seed, o.exec);
                break;
        }
    }

    void apply(const Op& op) {
        const std::string& v = op.verb;
        if (v == "init") throw LogError(op.line, "'init' may appear only once");
        if (v == "set" && (matrix_ || single_)) {
            expect_args(op, 3);
            const std::size_t i = index_in(op, op.args[0], rows_), j = index_in(op, op.args[1], cols_);
            const std::int64_t value = parse_signed(op, op.args[2]);
            if (matrix_) {
                matrix_->set_entry(i, j, value);
            } else {
                if (value > single_->bound || value < -single_->bound) {
                    throw LogError(op.line, "entry exceeds declared bound");
                }
                single_->state.set_entry(i, j, reduce_signed(value, single_->state.prime()));
            }
        } else if ((v == "insert" || v == "delete") && (reach_ || all_)) {
            expect_args(op, 2);
            const std::size_t a = index_in(op, op.args[0], rows_), b = index_in(op, op.args[1], rows_);
            if (reach_) {
                v == "insert" ? reach_->insert_edge(a, b) : reach_->delete_edge(a, b);
            } else {
                v == "insert" ? all_->insert_edge(a, b) : all_->delete_edge(a, b);
            }
        } else if ((v == "clause" || v == "declause") && sat_) {
            expect_args(op, 2);
            const Literal a = literal_in(op, op.args[0], rows_), b = literal_in(op, op.args[1], rows_);
            v == "clause" ? sat_->add_clause(a, b) : sat_->remove_clause(a, b);
        } else if ((v == "ledge" || v == "dledge") && rpq_) {
            expect_args(op, 3);
            const std::size_t a = index_in(op, op.args[0], rows_), b = index_in(op, op.args[2], rows_);
            v == "ledge" ? rpq_->insert_edge(a, op.args[1], b) : rpq_->delete_edge(a, op.args[1], b);
        } else if ((v == "edge" || v == "dedge") && match_) {
            expect_args(op, 2);
            const std::size_t a = index_in(op, op.args[0], rows_), b = index_in(op, op.args[1], rows_);
            v == "edge" ? match_->insert_edge(a, b) : match_->delete_edge(a, b);
        } else {
            wrong_mode(op);
        }
    }

    Answer answer(const Op& op) const {
        const std::string& v = op.verb;
        if (v == "rank?" && (matrix_ || single_)) {
            expect_args(op, 0);
            return counted("rank", matrix_ ? matrix_->rank() : single_->state.rank());
        }
        if (v == "reach?" && reach_) {
            if (!op.args.empty()) {
                expect_args(op, 2);
                if (index_in(op, op.args[0], rows_) != reach_->source() ||
                    index_in(op, op.args[1], rows_) != reach_->target()) {
                    throw LogError(op.line, "reach mode tracks only the pair given to init; use --mode allpairs");
                }
            }
            return boolean(reach_->reachable());
        }
        if (v == "reach?" && all_) {
            expect_args(op, 2);
            return boolean(all_->reachable(index_in(op, op.args[0], rows_), index_in(op, op.args[1], rows_)));
        }
        if (v == "sat?" && sat_) {
            expect_args(op, 0);
            return boolean(sat_->satisfiable());
        }
        if (v == "match?" && rpq_) {
            expect_args(op, 0);
            return boolean(rpq_->matches());
        }
        if (v == "size?" && match_) {
            expect_args(op, 0);
            return counted("size", match_->max_matching_size());
        }
        if (v == "pm?" && match_) {
            expect_args(op, 0);
            return boolean(match_->has_perfect_matching());
        }
        wrong_mode(op);
    }

    void check_matrix(const Op& op) const {
        oracle::DenseMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = matrix_->entry(i, j);
        std::size_t exact = 0;
        try {
            exact = oracle::gaussian_rank_exact(m);
        } catch (const std::overflow_error&) {
            return;  // too large for the int64 oracle
        }
        if (matrix_->rank() != exact) throw InvariantError(where(op) + "rank? disagrees with exact rank");
    }

    const Options& options_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t rpq_source_ = 0;
    std::size_t rpq_target_ = 0;
    std::optional<IntRankTracker> matrix_;
    std::optional<SinglePrime> single_;
    std::optional<ReachTracker> reach_;
    std::optional<AllPairsReach> all_;
    std::optional<TwoSatTracker> sat_;
    std::optional<RpqTracker> rpq_;
    std::optional<MatchingTracker> match_;
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

Mode parse_mode(std::string_view name) {
    for (const auto& [mode, text] : kModeNames) {
        if (text == name) return mode;
    }
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(Mode mode) {
    for (const auto& [m, text] : kModeNames) {
        if (m == mode) return text;
    }
    return "?";
}

LogError::LogError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string Op::text() const {
    std::string s = verb;
    for (const std::string& a : args) s += " " + a;
    return s;
}

std::vector<Op> parse_log(std::istream& in) {
    std::vector<Op> ops;
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream tokens(raw);
        Op op;
        op.line = line;
        if (!(tokens >> op.verb)) continue;
        for (std::string tok; tokens >> tok;) op.args.push_back(std::move(tok));
        ops.push_back(std::move(op));
    }
    return ops;
}

void run(const std::vector<Op>& ops, const Options& options, std::ostream& out) {
    std::optional<Session> session;
    std::size_t step = 0;
    for (const Op& op : ops) {
        if (!session) {
            session.emplace(op, options);
        } else if (op.is_query()) {
            const Answer a = session->query(op);
            if (options.json) {
                Json record;
                record["op"] = op.text();
                record["step"] = step;
                record["result"] = a.value;
                out << record.dump() << '\n';
            } else {
                out << a.text << '\n';
            }
            continue;
        } else {
            session->change(op);
            ++step;
        }
        if (options.check_invariants) session->check(op);
    }
}

BenchReport bench(const std::vector<Op>& ops, const Options& options) {
    using Clock = std::chrono::steady_clock;
    const auto micros = [](Clock::duration d) { return std::chrono::duration<double, std::micro>(d).count(); };

    BenchReport report;
    std::optional<Session> session;
    std::vector<const GoodBasis*> states;
    double incremental = 0, recompute = 0, querying = 0;
    volatile std::size_t sink = 0;
    for (const Op& op : ops) {
        if (!session) {
            session.emplace(op, options);
            states = session->states();
            report.states = states.size();
            continue;
        }
        if (op.is_query()) {
            const auto t0 = Clock::now();
            const Answer a = session->query(op);
            querying += micros(Clock::now() - t0);
            sink = sink + a.text.size();
            ++report.queries;
            continue;
        }
        const auto t0 = Clock::now();
        session->change(op);
        const auto t1 = Clock::now();
        std::size_t ranks = 0;
        for (const GoodBasis* s : states) {
            ranks += oracle::gaussian_rank_mod_p(s->rows(), s->cols(), s->matrix(), s->prime());
        }
        const auto t2 = Clock::now();
        sink = sink + ranks;
        incremental += micros(t1 - t0);
        recompute += micros(t2 - t1);
        ++report.updates;
    }
    if (report.updates) {
        report.incremental_us = incremental / static_cast<double>(report.updates);
        report.recompute_us = recompute / static_cast<double>(report.updates);
    }
    if (report.queries) report.query_us = querying / static_cast<double>(report.queries);
    return report;
}

void print_report(const BenchReport& r, bool json, std::ostream& out) {
    if (json) {
        Json j;
        j["updates"] = r.updates;
        j["queries"] = r.queries;
        j["states"] = r.states;
        j["incremental_us_per_update"] = r.incremental_us;
        j["recompute_us_per_update"] = r.recompute_us;
        j["us_per_query"] = r.query_us;
        j["ratio"] = r.ratio();
        out << j.dump() << '\n';
        return;
    }
    out << "updates " << r.updates << '\n'
        << "queries " << r.queries << '\n'
        << "states " << r.states << '\n'
        << "incremental_us_per_update " << fixed(r.incremental_us, 3) << '\n'
        << "recompute_us_per_update " << fixed(r.recompute_us, 3) << '\n'
        << "us_per_query " << fixed(r.query_us, 3) << '\n'
        << "ratio " << fixed(r.ratio(), 2) << '\n';
}

std::string generate_log(const GenSpec& spec) {
    if (spec.size == 0) throw std::invalid_argument("size must be positive");
    std::mt19937_64 rng(spec.seed);
    const std::size_t n = spec.size;
    auto pick = [&](std::size_t limit) { return static_cast<std::size_t>(rng() % limit) + 1; };
    auto distinct_pair = [&] {
        const std::size_t a = pick(n);
        std::size_t b = pick(n - 1);
        if (b >= a) ++b;
        return std::pair{a, b};
    };
    std::ostringstream log;
    log << "# generated: " << to_string(spec.mode) << " size " << n << " steps " << spec.steps << " seed "
        << spec.seed << '\n';

    std::set<std::pair<std::size_t, std::size_t>> present;
    std::set<std::tuple<std::size_t, int, std::size_t>> labeled;
    std::set<std::pair<long long, long long>> clauses;
    std::uniform_int_distribution<std::int64_t> entry(-spec.bound, spec.bound);

    switch (spec.mode) {
        case Mode::Matrix: log << "init " << n << ' ' << n << ' ' << spec.bound << '\n'; break;
        case Mode::Reach:
        case Mode::Rpq: log << "init " << n << " 1 " << n << '\n'; break;
        default: log << "init " << n << '\n'; break;
    }
    for (std::size_t step = 1; step <= spec.steps; ++step) {
        switch (spec.mode) {
            case Mode::Matrix: {
                const std::int64_t v = rng() % 3 == 0 ? 0 : entry(rng);
                log << "set " << pick(n) << ' ' << pick(n) << ' ' << v << '\n';
                break;
            }
            case Mode::Reach:
            case Mode::AllPairs:
            case Mode::Matching: {
                if (n < 2) throw std::invalid_argument("graph modes need at least two nodes");
                auto [a, b] = distinct_pair();
                if (spec.mode == Mode::Matching && a > b) std::swap(a, b);
                const bool had = !present.insert({a, b}).second;
                if (had) present.erase({a, b});
                if (spec.mode == Mode::Matching) {
                    log << (had ? "dedge " : "edge ");
                } else {
                    log << (had ? "delete " : "insert ");
                }
                log << a << ' ' << b << '\n';
                break;
            }
            case Mode::TwoSat: {
                auto lit = [&] {
                    const long long x = static_cast<long long>(pick(n));
                    return rng() % 2 ? x : -x;
                };
                long long a = lit(), b = lit();
                if (std::abs(a) > std::abs(b) || (std::abs(a) == std::abs(b) && a > b)) std::swap(a, b);
                const bool had = !clauses.insert({a, b}).second;
                if (had) clauses.erase({a, b});
                auto signed_text = [](long long l) { return (l > 0 ? "+" : "") + std::to_string(l); };
                log << (had ? "declause " : "clause ") << signed_text(a) << ' ' << signed_text(b) << '\n';
                break;
            }
            case Mode::Rpq: {
                const std::size_t a = pick(n), b = pick(n);
                const int label = static_cast<int>(rng() % 2);
                const bool had = !labeled.insert({a, label, b}).second;
                if (had) labeled.erase({a, label, b});
                log << (had ? "dledge " : "ledge ") << a << ' ' << (label ? 'b' : 'a') << ' ' << b << '\n';
                break;
            }
        }
        if (spec.query_every && step % spec.query_every == 0) {
            switch (spec.mode) {
                case Mode::Matrix: log << "rank?\n"; break;
                case Mode::Reach: log << "reach?\n"; break;
                case Mode::AllPairs: log << "reach? " << pick(n) << ' ' << pick(n) << '\n'; break;
                case Mode::TwoSat: log << "sat?\n"; break;
                case Mode::Rpq: log << "match?\n"; break;
                case Mode::Matching: log << "size?\n"; break;
            }
        }
    }
    return log.str();
}

}  // namespace dynrank::replay
