#pragma once

// Generator pairs (a, b) with a > b > 0, gcd(a, b) = 1 and opposite parity,
// the primitive right triangles they generate, and the three odd integers
// each triangle carries:
//
//   n13 = (a-b)^2 + 2b^2 = z - 2r = x + y - 4r
//   n15 = a^2 + b^2      = z      = x + y - 2r
//   n17 = (a+b)^2 - 2b^2 =          x + y
//
// The three values form an arithmetic progression with common difference 2r.

#include <numeric>
#include <optional>
#include <vector>

#include "arith.hpp"

namespace triforms {

enum class param_violation { order, not_coprime, same_parity };

inline const char* to_string(param_violation v) {
    switch (v) {
        case param_violation::order: return "order violation (need a > b > 0)";
        case param_violation::not_coprime: return "not coprime";
        case param_violation::same_parity: return "same parity";
    }
    return "?";
}

struct params_error : std::invalid_argument {
    param_violation violation;
    explicit params_error(param_violation v) : std::invalid_argument(to_string(v)), violation(v) {}
};

struct triple_params {
    u64 a = 0;
    u64 b = 0;
    friend bool operator==(const triple_params&, const triple_params&) = default;
};

/// First violated constraint, checked in the order: a > b > 0, coprimality,
/// opposite parity. Empty when the pair is a valid generator pair.
inline std::optional<param_violation> validate_params(u64 a, u64 b) {
    if (b == 0 || a <= b) return param_violation::order;
    if (std::gcd(a, b) != 1) return param_violation::not_coprime;
    if ((a & 1) == (b & 1)) return param_violation::same_parity;
    return std::nullopt;
}

inline triple_params make_params(u64 a, u64 b) {
    if (auto v = validate_params(a, b)) throw params_error(*v);
    return triple_params{a, b};
}

struct primitive_triple {
    u64 x = 0; // even leg, 2ab
    u64 y = 0; // odd leg, a^2 - b^2
    u64 z = 0; // hypotenuse, a^2 + b^2
    u64 r = 0; // inradius, b(a - b)
    friend bool operator==(const primitive_triple&, const primitive_triple&) = default;
};

struct form_values {
    u64 n13 = 0;
    u64 n15 = 0;
    u64 n17 = 0;
    friend bool operator==(const form_values&, const form_values&) = default;
};

inline u64 inradius(triple_params p) { return p.b * (p.a - p.b); }

inline primitive_triple triple_from_params(triple_params p) {
    u64 a2 = checked_mul(p.a, p.a);
    u64 b2 = checked_mul(p.b, p.b);
    return primitive_triple{checked_mul(2, checked_mul(p.a, p.b)), a2 - b2, checked_add(a2, b2),
                            inradius(p)};
}

inline form_values forms_from_params(triple_params p) {
    u64 d = p.a - p.b;
    u64 s = checked_add(p.a, p.b);
    u64 b2 = checked_mul(p.b, p.b);
    return form_values{checked_add(checked_mul(d, d), 2 * b2), checked_add(checked_mul(p.a, p.a), b2),
                       checked_mul(s, s) - 2 * b2};
}

/// Visit every valid generator pair with 2 <= a <= a_max, in (a, b) order.
template <typename Fn>
inline void for_each_params(u64 a_max, Fn&& fn) {
    for (u64 a = 2; a <= a_max; ++a) {
        // opposite parity: b steps by 2 starting opposite to a
        for (u64 b = 1 + (a & 1); b < a; b += 2) {
            if (std::gcd(a, b) == 1) fn(triple_params{a, b});
        }
    }
}

inline std::vector<triple_params> enumerate_params(u64 a_max) {
    if (a_max < 2) throw std::invalid_argument("enumerate_params: a_max must be >= 2");
    std::vector<triple_params> out;
    for_each_params(a_max, [&](triple_params p) { out.push_back(p); });
    return out;
}

inline bool check_pairwise_coprime(form_values fv) {
    return std::gcd(fv.n13, fv.n15) == 1 && std::gcd(fv.n13, fv.n17) == 1 &&
           std::gcd(fv.n15, fv.n17) == 1;
}

} // namespace triforms
