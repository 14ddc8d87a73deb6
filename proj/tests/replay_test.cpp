#include <gtest/gtest.h>

#include <sstream>

#include "replay/replay.hpp"

namespace dynrank::replay {
namespace {

std::vector<Op> ops_of(const std::string& text) {
    std::istringstream in(text);
    return parse_log(in);
}

std::string replay(const std::string& text, const Options& options) {
    std::ostringstream out;
    run(ops_of(text), options, out);
    return out.str();
}

Options with_mode(Mode m) {
    Options o;
    o.mode = m;
    return o;
}

std::size_t error_line(const std::string& text, const Options& options) {
    try {
        replay(text, options);
    } catch (const LogError& e) {
        return e.line();
    }
    return 0;
}

TEST(ParseLog, DropsCommentsAndKeepsLineNumbers) {
    const auto ops = ops_of("# header\n\ninit 3 3 8   # trailing\n  set 1 2 -3\nrank?\n");
    ASSERT_EQ(ops.size(), 3u);
    EXPECT_EQ(ops[0].line, 3u);
    EXPECT_EQ(ops[0].args, (std::vector<std::string>{"3", "3", "8"}));
    EXPECT_EQ(ops[1].line, 4u);
    EXPECT_EQ(ops[1].text(), "set 1 2 -3");
    EXPECT_TRUE(ops[2].is_query());
    EXPECT_FALSE(ops[1].is_query());
}

TEST(Modes, NamesRoundTrip) {
    for (Mode m : {Mode::Matrix, Mode::Reach, Mode::AllPairs, Mode::TwoSat, Mode::Rpq, Mode::Matching}) {
        EXPECT_EQ(parse_mode(to_string(m)), m);
    }
    EXPECT_THROW(parse_mode("dense"), std::invalid_argument);
}

TEST(Run, EmptyLogPrintsNothing) { EXPECT_EQ(replay("# nothing\n", Options{}), ""); }

TEST(Run, ErrorsCarryLineNumbers) {
    const Options matrix = with_mode(Mode::Matrix);
    EXPECT_EQ(error_line("set 1 1 1\n", matrix), 1u);
    EXPECT_EQ(error_line("init 2 2 4\ninit 2 2 4\n", matrix), 2u);
    EXPECT_EQ(error_line("init 2 2 4\n\nset 1 1 5\n", matrix), 3u);  // over the bound
    EXPECT_EQ(error_line("init 2 2 4\nset 1 x 1\n", matrix), 2u);
    EXPECT_EQ(error_line("init 2 2 4\ninsert 1 2\n", matrix), 2u);
    EXPECT_EQ(error_line("init 2 2 4\nsat?\n", matrix), 2u);
    EXPECT_EQ(error_line("init 0 2 4\n", matrix), 1u);

    EXPECT_EQ(error_line("init 3 1 2\ninsert 1 1\n", with_mode(Mode::Reach)), 2u);  // self-loop
    EXPECT_EQ(error_line("init 3 1 2\nreach? 2 3\n", with_mode(Mode::Reach)), 2u);
    EXPECT_EQ(error_line("init 3\nreach?\n", with_mode(Mode::AllPairs)), 2u);
    EXPECT_EQ(error_line("init 2\nclause +3 +1\n", with_mode(Mode::TwoSat)), 2u);
    EXPECT_EQ(error_line("init 2\nclause 0 1\n", with_mode(Mode::TwoSat)), 2u);
    EXPECT_EQ(error_line("init 3 1 2\n", with_mode(Mode::Rpq)), 1u);  // no automaton
    EXPECT_EQ(error_line("init 3\nedge 2 2\n", with_mode(Mode::Matching)), 2u);

    Options rpq = with_mode(Mode::Rpq);
    rpq.nfa = nfa_ends_with_a();
    EXPECT_EQ(error_line("init 3 1 2\nledge 1 c 2\n", rpq), 2u);
}

TEST(Run, SinglePrimeMatrixReducesEntries) {
    Options o;
    o.single_prime = 5;
    EXPECT_EQ(replay("init 2 2 8\nset 1 1 5\nrank?\nset 1 1 -4\nrank?\n", o), "rank 0\nrank 1\n");
    EXPECT_EQ(error_line("init 2 2 8\nset 1 1 9\n", o), 2u);
}

TEST(Run, JsonStepCountsChanges) {
    Options o = with_mode(Mode::AllPairs);
    o.json = true;
    EXPECT_EQ(replay("init 2\nreach? 1 2\ninsert 1 2\ndelete 2 1\nreach? 1 2\n", o),
              "{\"op\":\"reach? 1 2\",\"step\":0,\"result\":false}\n"
              "{\"op\":\"reach? 1 2\",\"step\":2,\"result\":true}\n");
}

TEST(Run, CheckedReplayOfGeneratedLogs) {
    for (Mode m : {Mode::Matrix, Mode::Reach, Mode::AllPairs, Mode::TwoSat, Mode::Rpq, Mode::Matching}) {
        Options o = with_mode(m);
        o.check_invariants = true;
        o.nfa = nfa_a_bstar_a();
        const std::string log = generate_log({m, 5, 80, 31, 4, 1});
        EXPECT_NO_THROW(replay(log, o)) << to_string(m);
    }
}

TEST(Run, ParallelOutputIsIdentical) {
    for (Mode m : {Mode::Matrix, Mode::AllPairs, Mode::TwoSat, Mode::Matching}) {
        const std::string log = generate_log({m, 6, 120, 5, 8, 1});
        Options seq = with_mode(m);
        Options par = seq;
        par.exec = Execution::Parallel;
        const std::string first = replay(log, seq);
        EXPECT_EQ(first, replay(log, seq));
        EXPECT_EQ(first, replay(log, par));
    }
}

TEST(Generate, DeterministicPerSeed) {
    const GenSpec spec{Mode::TwoSat, 4, 50, 8, 8, 5};
    EXPECT_EQ(generate_log(spec), generate_log(spec));
    GenSpec other = spec;
    other.seed = 9;
    EXPECT_NE(generate_log(spec), generate_log(other));
    EXPECT_EQ(ops_of(generate_log(spec)).size(), 1u + 50u + 10u);
}

TEST(Bench, EmptyLogIsZeroReport) {
    const BenchReport r = bench({}, Options{});
    EXPECT_EQ(r.updates, 0u);
    EXPECT_EQ(r.ratio(), 0.0);
}

TEST(Bench, CountsUpdatesAndQueries) {
    const BenchReport r = bench(ops_of(generate_log({Mode::Reach, 6, 40, 2, 8, 4})), with_mode(Mode::Reach));
    EXPECT_EQ(r.updates, 40u);
    EXPECT_EQ(r.queries, 10u);
    EXPECT_GT(r.states, 0u);
    EXPECT_GT(r.recompute_us, 0.0);
}

}  // namespace
}  // namespace dynrank::replay
