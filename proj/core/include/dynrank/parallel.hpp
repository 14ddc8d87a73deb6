#pragma once

#include <algorithm>
#include <execution>

namespace dynrank {

/// How a tracker fans one change out over its independent sub-structures
/// (primes, pairs, trials). Results never depend on the choice.
enum class Execution { Sequential, Parallel };

template <class Range, class Fn>
void for_each_independent(Execution exec, Range& range, Fn fn) {
    if (exec == Execution::Parallel && std::size(range) > 1) {
        std::for_each(std::execution::par, std::begin(range), std::end(range), fn);
    } else {
        std::for_each(std::begin(range), std::end(range), fn);
    }
}

}  // namespace dynrank
