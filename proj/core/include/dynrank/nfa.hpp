#pragma once

#include <cstddef>
#include <istream>
#include <set>
#include <string>
#include <vector>

namespace dynrank {

/// Nondeterministic finite automaton without epsilon moves. States are
/// 0 .. state_count-1; symbols are arbitrary whitespace-free tokens.
struct Nfa {
    struct Transition {
        std::size_t from;
        std::string symbol;
        std::size_t to;
        friend auto operator<=>(const Transition&, const Transition&) = default;
    };

    std::size_t state_count = 0;
    std::set<std::string> alphabet;
    std::vector<Transition> transitions;
    std::size_t initial = 0;
    std::set<std::size_t> accepting;

    /// Throws std::invalid_argument when a state index is out of range or
    /// a transition symbol is missing from the alphabet.
    void validate() const;
};

/// Parses the line-oriented NFA format:
///
///     # comment
///     q a q'          one transition per line (states are non-negative integers)
///     initial q0
///     accept f1 f2 ...
///
/// States are numbered as written; state_count is one past the largest
/// state mentioned. The alphabet is the set of transition symbols.
/// Throws std::invalid_argument with the offending line number.
Nfa parse_nfa(std::istream& in);

/// (a|b)*a over {a, b}.
Nfa nfa_ends_with_a();
/// a b* a over {a, b}.
Nfa nfa_a_bstar_a();

}  // namespace dynrank
