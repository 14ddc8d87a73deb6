#include "dynrank/modp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dynrank {

namespace {

unsigned ceil_log2(std::uint64_t x) {
    unsigned bits = 0;
    while ((std::uint64_t{1} << bits) < x) ++bits;
    return bits;
}

}  // namespace

Prime::Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) {
        throw std::invalid_argument("not a prime: " + std::to_string(value));
    }
}

bool is_prime(std::uint64_t value) noexcept {
    if (value < 2) return false;
    if (value % 2 == 0) return value == 2;
    for (std::uint64_t d = 3; d <= value / d; d += 2) {
        if (value % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t k = i * i; k <= limit; k += i) composite[k] = true;
    }
    return primes;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) noexcept {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent > 0) {
        if (exponent & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("no inverse");
    // Extended Euclid on signed 128-bit to stay clear of overflow for any 64-bit p.
    __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw std::domain_error("no inverse");
    if (s0 < 0) s0 += p;
    return static_cast<std::uint64_t>(s0);
}

std::string_view to_string(PrimeMode mode) noexcept {
    switch (mode) {
        case PrimeMode::ProductBound: return "product";
        case PrimeMode::CubeBound: return "paper";
    }
    return "?";
}

unsigned determinant_bit_bound(std::uint64_t k, std::uint64_t max_abs_entry) {
    long double log_factorial = 0.0L;
    for (std::uint64_t i = 2; i <= k; ++i) log_factorial += std::log2(static_cast<long double>(i));
    const auto factorial_bits = static_cast<unsigned>(std::ceil(log_factorial - 1e-12L));
    const unsigned entry_bits = std::max(1u, ceil_log2(std::max<std::uint64_t>(max_abs_entry, 2)));
    return factorial_bits + static_cast<unsigned>(k) * entry_bits + 1;
}

std::vector<Prime> primes_exceeding_bits(unsigned bit_bound, std::uint64_t first_prime) {
    std::vector<Prime> out;
    long double bits = 0.0L;
    std::uint64_t limit = std::max<std::uint64_t>(64, 4 * first_prime);
    std::uint64_t next = first_prime;
    while (bits <= static_cast<long double>(bit_bound)) {
        for (std::uint64_t p : sieve_primes(limit)) {
            if (p < next) continue;
            out.emplace_back(p);
            bits += std::log2(static_cast<long double>(p));
            if (bits > static_cast<long double>(bit_bound)) break;
        }
        next = limit + 1;
        limit *= 2;
    }
    return out;
}

PrimeSet select_prime_set(std::uint64_t rows, std::uint64_t cols, std::uint64_t max_abs_entry,
                          PrimeMode mode) {
    if (rows == 0 || cols == 0 || max_abs_entry == 0) {
        throw std::invalid_argument("select_prime_set: dimensions and bound must be >= 1");
    }
    const std::uint64_t k = std::min(rows, cols);
    PrimeSet set;
    set.mode = mode;
    set.bit_bound = determinant_bit_bound(k, max_abs_entry);
    if (mode == PrimeMode::ProductBound) {
        set.primes = primes_exceeding_bits(set.bit_bound);
    } else {
        const std::uint64_t log_n = std::max(1u, ceil_log2(std::max<std::uint64_t>(max_abs_entry, 2)));
        const std::uint64_t base = std::max<std::uint64_t>({k, log_n, 2});
        for (std::uint64_t p : sieve_primes(base * base * base)) set.primes.emplace_back(p);
    }
    return set;
}

}  // namespace dynrank
