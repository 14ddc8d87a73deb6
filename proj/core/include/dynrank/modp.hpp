#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace dynrank {

/// A prime modulus. Construction checks primality by trial division, so a
/// `Prime` in hand is always prime.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    operator std::uint64_t() const noexcept { return value_; }

    friend bool operator==(Prime, Prime) = default;
    friend auto operator<=>(Prime, Prime) = default;

private:
    std::uint64_t value_;
};

bool is_prime(std::uint64_t value) noexcept;

/// All primes <= limit, ascending. Empty for limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

// Residue arithmetic in Z_p. Operands must already be reduced into [0, p).

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    const std::uint64_t s = a + b;
    return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    if (p <= (std::uint64_t{1} << 32)) return (a * b) % p;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) noexcept {
    return a == 0 ? 0 : p - a;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) noexcept;

/// Multiplicative inverse of a in Z_p.
/// Throws std::domain_error("no inverse") when a = 0 mod p.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/// Canonical residue of a signed integer, in [0, p).
inline std::uint64_t reduce_signed(std::int64_t value, std::uint64_t p) noexcept {
    if (value >= 0) return static_cast<std::uint64_t>(value) % p;
    const std::uint64_t r = (std::uint64_t{0} - static_cast<std::uint64_t>(value)) % p;
    return r == 0 ? 0 : p - r;
}

enum class PrimeMode {
    /// Shortest ascending prime prefix whose product exceeds 2^bit_bound.
    ProductBound,
    /// All primes <= max(k, ceil(log2 N))^3.
    CubeBound,
};

std::string_view to_string(PrimeMode mode) noexcept;

struct PrimeSet {
    std::vector<Prime> primes;
    PrimeMode mode = PrimeMode::ProductBound;
    /// Bits of the determinant bound k! * N^k, k = min(rows, cols).
    unsigned bit_bound = 0;
};

/// ceil(log2(k!)) + k * ceil(log2(max(N, 2))) + 1.
unsigned determinant_bit_bound(std::uint64_t k, std::uint64_t max_abs_entry);

/// Shortest ascending prefix of primes >= first_prime whose product
/// exceeds 2^bit_bound.
std::vector<Prime> primes_exceeding_bits(unsigned bit_bound, std::uint64_t first_prime = 2);

/// A prime set that is sound for rows x cols integer matrices with
/// |entries| <= max_abs_entry: every nonzero minor of such a matrix stays
/// nonzero modulo at least one prime of the set.
PrimeSet select_prime_set(std::uint64_t rows, std::uint64_t cols, std::uint64_t max_abs_entry,
                          PrimeMode mode = PrimeMode::ProductBound);

}  // namespace dynrank
