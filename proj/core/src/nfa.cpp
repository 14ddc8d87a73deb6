#include "dynrank/nfa.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dynrank {

void Nfa::validate() const {
    if (state_count == 0) throw std::invalid_argument("nfa: no states");
    if (initial >= state_count) throw std::invalid_argument("nfa: initial state out of range");
    for (std::size_t f : accepting) {
        if (f >= state_count) throw std::invalid_argument("nfa: accepting state out of range");
    }
    for (const auto& t : transitions) {
        if (t.from >= state_count || t.to >= state_count) {
            throw std::invalid_argument("nfa: transition state out of range");
        }
        if (!alphabet.contains(t.symbol)) throw std::invalid_argument("nfa: symbol not in alphabet: " + t.symbol);
    }
}

namespace {

std::size_t parse_state(const std::string& token, std::size_t line) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != token.size() || token.empty() || token[0] == '-') {
        throw std::invalid_argument("nfa line " + std::to_string(line) + ": bad state '" + token + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

Nfa parse_nfa(std::istream& in) {
    Nfa nfa;
    bool saw_initial = false;
    std::size_t max_state = 0;
    std::string raw;
    for (std::size_t line = 1; std::getline(in, raw); ++line) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream fields(raw);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const auto err = [line](const std::string& msg) {
            return std::invalid_argument("nfa line " + std::to_string(line) + ": " + msg);
        };
        if (tok[0] == "initial") {
            if (tok.size() != 2) throw err("expected 'initial <state>'");
            nfa.initial = parse_state(tok[1], line);
            max_state = std::max(max_state, nfa.initial);
            saw_initial = true;
        } else if (tok[0] == "accept") {
            if (tok.size() < 2) throw err("expected 'accept <state>...'");
            for (std::size_t k = 1; k < tok.size(); ++k) {
                const std::size_t f = parse_state(tok[k], line);
                nfa.accepting.insert(f);
                max_state = std::max(max_state, f);
            }
        } else {
            if (tok.size() != 3) throw err("expected 'q a q2'");
            Nfa::Transition t{parse_state(tok[0], line), tok[1], parse_state(tok[2], line)};
            max_state = std::max({max_state, t.from, t.to});
            nfa.alphabet.insert(t.symbol);
            nfa.transitions.push_back(std::move(t));
        }
    }
    if (!saw_initial) throw std::invalid_argument("nfa: missing 'initial' line");
    if (nfa.accepting.empty()) throw std::invalid_argument("nfa: missing 'accept' line");
    nfa.state_count = max_state + 1;
    nfa.validate();
    return nfa;
}

Nfa nfa_ends_with_a() {
    Nfa nfa;
    nfa.state_count = 2;
    nfa.alphabet = {"a", "b"};
    nfa.transitions = {{0, "a", 0}, {0, "b", 0}, {0, "a", 1}};
    nfa.initial = 0;
    nfa.accepting = {1};
    return nfa;
}

Nfa nfa_a_bstar_a() {
    Nfa nfa;
    nfa.state_count = 3;
    nfa.alphabet = {"a", "b"};
    nfa.transitions = {{0, "a", 1}, {1, "b", 1}, {1, "a", 2}};
    nfa.initial = 0;
    nfa.accepting = {2};
    return nfa;
}

}  // namespace dynrank
