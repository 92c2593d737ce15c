#pragma once

// Integer primitives shared by every other header: deterministic primality,
// factorization of odd integers, exact square roots, residue classes mod 8,
// quadratic-residue tests and a plain sieve. Everything is a pure function
// of its arguments; all values fit in 64 bits.

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace triforms {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct even_input_error : std::invalid_argument {
    explicit even_input_error(const std::string& what) : std::invalid_argument(what) {}
};

struct not_prime_error : std::invalid_argument {
    explicit not_prime_error(const std::string& what) : std::invalid_argument(what) {}
};

inline u64 checked_mul(u64 x, u64 y) {
    u64 r = 0;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("u64 multiply overflow");
    return r;
}

inline u64 checked_add(u64 x, u64 y) {
    u64 r = 0;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("u64 add overflow");
    return r;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace detail {

inline bool miller_rabin_witness(u64 n, u64 a) {
    // n odd >= 3, a in [2, n-2]
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

/// Deterministic primality over the whole 64-bit range: trial division by
/// the first few primes, then strong-pseudoprime tests with a base set known
/// to be exact below 3.3e24.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!detail::miller_rabin_witness(n, a)) return false;
    }
    return true;
}

inline u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace detail {

// squares mod 64
constexpr bool maybe_square(u64 n) { return (0x202021202030213ULL >> (n & 63)) & 1; }

} // namespace detail

/// r with r*r == n, when n is a perfect square.
inline std::optional<u64> sqrt_exact(u64 n) {
    if (!detail::maybe_square(n)) return std::nullopt;
    u64 r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline u64 isqrt128(u128 n) {
    if (n == 0) return 0;
    u128 r = static_cast<u128>(sqrtl(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return static_cast<u64>(r);
}

inline std::optional<u64> sqrt_exact128(u128 n) {
    if (!detail::maybe_square(static_cast<u64>(n))) return std::nullopt;
    u64 r = isqrt128(n);
    if (u128(r) * r == n) return r;
    return std::nullopt;
}

struct factor_entry {
    u64 prime;
    u64 exponent;
    friend bool operator==(const factor_entry&, const factor_entry&) = default;
};

/// Canonical prime-power decomposition of an odd integer, ascending by prime.
/// factorize(1) has an empty factor list.
struct factorization {
    u64 n = 1;
    std::vector<factor_entry> factors;

    u64 distinct_primes() const { return factors.size(); }
    u64 exponent_sum() const {
        u64 s = 0;
        for (const auto& f : factors) s += f.exponent;
        return s;
    }
};

namespace detail {

inline u64 pollard_rho(u64 n) {
    // Brent's cycle variant; n odd composite with no factor below the trial
    // division cutoff. Deterministic: the increment c walks 1,2,3,...
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            if (power == lam) { x = y; power <<= 1; lam = 0; }
            y = step(y);
            ++lam;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(u64 n, std::vector<factor_entry>& out) {
    if (n == 1) return;
    if (is_prime(n)) { out.push_back({n, 1}); return; }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

inline factorization factorize(u64 n) {
    if (n == 0 || n % 2 == 0) throw even_input_error("factorize: input must be a positive odd integer");
    factorization f;
    f.n = n;
    u64 m = n;
    for (u64 d = 3; d * d <= m && d <= 1'000'000; d += 2) {
        if (m % d != 0) continue;
        u64 e = 0;
        while (m % d == 0) { m /= d; ++e; }
        f.factors.push_back({d, e});
    }
    if (m > 1) {
        std::vector<factor_entry> rest;
        detail::factor_into(m, rest);
        std::sort(rest.begin(), rest.end(), [](auto& a, auto& b) { return a.prime < b.prime; });
        for (const auto& fe : rest) {
            if (!f.factors.empty() && f.factors.back().prime == fe.prime)
                f.factors.back().exponent += fe.exponent;
            else
                f.factors.push_back(fe);
        }
    }
    return f;
}

/// n mod 8 for odd n >= 3, one of {1,3,5,7}.
inline unsigned mod8_class(u64 n) {
    if (n % 2 == 0) throw even_input_error("mod8_class: input must be odd");
    if (n < 3) throw std::invalid_argument("mod8_class: input must be >= 3");
    return static_cast<unsigned>(n & 7);
}

/// Euler criterion; agrees with exhaustive squaring mod p. c may be negative.
inline bool is_qr_mod_p(i64 c, u64 p) {
    if (!is_prime(p)) throw not_prime_error("is_qr_mod_p: modulus must be prime");
    if (p == 2) throw even_input_error("is_qr_mod_p: modulus must be odd");
    i64 sp = static_cast<i64>(p);
    u64 cc = static_cast<u64>(((c % sp) + sp) % sp);
    if (cc == 0) return true; // 0 = 0^2
    return pow_mod(cc, (p - 1) / 2, p) == 1;
}

/// All primes strictly below `bound`, ascending.
inline std::vector<u64> primes_below(u64 bound) {
    std::vector<u64> primes;
    if (bound <= 2) return primes;
    std::vector<std::uint8_t> composite(bound, 0);
    for (u64 i = 2; i < bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j < bound; j += i) composite[j] = 1;
    }
    return primes;
}

} // namespace triforms
