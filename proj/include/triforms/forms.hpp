#pragma once

// Representation engine for the three constrained forms
//
//   two_squares : a^2 + b^2
//   minus_two   : (a+b)^2 - 2b^2
//   plus_two    : (a-b)^2 + 2b^2
//
// with parameters restricted to generator pairs (a > b > 0, coprime,
// opposite parity). Under those restrictions each form represents exactly
// the odd integers whose prime divisors all fall in one residue class mod 8
// ({1,5}, {1,7}, {1,3} respectively), every prime of the class has a unique
// representation, and an integer with n distinct prime divisors has exactly
// 2^(n-1) representations.

#include <variant>
#include <vector>

#include "arith.hpp"
#include "triples.hpp"

namespace triforms {

enum class form_kind { two_squares, minus_two, plus_two };

inline const char* to_string(form_kind k) {
    switch (k) {
        case form_kind::two_squares: return "two-squares";
        case form_kind::minus_two: return "minus-two";
        case form_kind::plus_two: return "plus-two";
    }
    return "?";
}

struct kind_mismatch_error : std::invalid_argument {
    kind_mismatch_error() : std::invalid_argument("compose: representations must share one form kind") {}
};

struct not_in_set_error : std::invalid_argument {
    not_in_set_error() : std::invalid_argument("expected_count: integer is not in any residue set") {}
};

struct not_normalizable_error : std::invalid_argument {
    explicit not_normalizable_error(const std::string& what) : std::invalid_argument(what) {}
};

struct representation {
    form_kind kind = form_kind::two_squares;
    u64 a = 0;
    u64 b = 0;
    friend bool operator==(const representation&, const representation&) = default;
};

inline representation make_representation(form_kind kind, u64 a, u64 b) {
    if (auto v = validate_params(a, b)) throw params_error(*v);
    return representation{kind, a, b};
}

inline u64 eval(const representation& r) {
    u64 b2 = checked_mul(r.b, r.b);
    switch (r.kind) {
        case form_kind::two_squares: return checked_add(checked_mul(r.a, r.a), b2);
        case form_kind::minus_two: {
            u64 s = checked_add(r.a, r.b);
            return checked_mul(s, s) - 2 * b2; // positive: a > b forces (a+b)^2 > 2b^2
        }
        case form_kind::plus_two: {
            u64 d = r.a - r.b;
            return checked_add(checked_mul(d, d), 2 * b2);
        }
    }
    throw std::logic_error("eval: bad kind");
}

namespace detail {

inline void require_odd_ge3(u64 n, const char* who) {
    if (n % 2 == 0) throw even_input_error(std::string(who) + ": input must be odd");
    if (n < 3) throw std::invalid_argument(std::string(who) + ": input must be >= 3");
    if (n >= (u64(1) << 62)) throw std::invalid_argument(std::string(who) + ": input too large");
}

} // namespace detail

/// All constrained representations of odd N >= 3, ascending by b (b is a
/// unique key: for fixed b the value determines a). For every kind, a > b
/// forces 2b^2 < N, so b is scanned over that range and a recovered with an
/// exact square root. O(sqrt(N)) per query, integer-only.
inline std::vector<representation> represent(form_kind kind, u64 n) {
    detail::require_odd_ge3(n, "represent");
    std::vector<representation> out;
    for (u64 b = 1; 2 * b * b < n; ++b) {
        u64 b2 = b * b;
        std::optional<u64> a;
        switch (kind) {
            case form_kind::two_squares:
                if (auto r = sqrt_exact(n - b2); r && *r > b) a = *r;
                break;
            case form_kind::minus_two:
                // (a+b)^2 = N + 2b^2, and a > b means a+b > 2b
                if (auto s = sqrt_exact(n + 2 * b2); s && *s > 2 * b) a = *s - b;
                break;
            case form_kind::plus_two:
                // (a-b)^2 = N - 2b^2; N odd keeps the root nonzero
                if (auto d = sqrt_exact(n - 2 * b2)) a = *d + b;
                break;
        }
        if (a && std::gcd(*a, b) == 1) out.push_back(make_representation(kind, *a, b));
    }
    return out;
}

/// Which residue sets the factorization of N lies in. An integer all of
/// whose prime divisors are 1 mod 8 belongs to all three sets at once.
struct set_membership {
    bool s13 = false;
    bool s15 = false;
    bool s17 = false;
    u64 distinct_primes = 0;

    bool any() const { return s13 || s15 || s17; }
    bool contains(form_kind k) const {
        switch (k) {
            case form_kind::two_squares: return s15;
            case form_kind::minus_two: return s17;
            case form_kind::plus_two: return s13;
        }
        return false;
    }
};

inline set_membership classify(u64 n) {
    detail::require_odd_ge3(n, "classify");
    factorization f = factorize(n);
    set_membership m;
    m.distinct_primes = f.distinct_primes();
    m.s13 = m.s15 = m.s17 = true;
    for (const auto& fe : f.factors) {
        switch (fe.prime & 7) {
            case 1: break;
            case 3: m.s15 = m.s17 = false; break;
            case 5: m.s13 = m.s17 = false; break;
            case 7: m.s13 = m.s15 = false; break;
        }
    }
    return m;
}

/// 2^(n-1) representations for an integer with n distinct prime divisors.
inline u64 expected_count(const set_membership& m) {
    if (!m.any()) throw not_in_set_error();
    return u64(1) << (m.distinct_primes - 1);
}

/// A parameter pair before normalization: possibly negative or zero entries,
/// same coordinate convention as representation (x in the a slot, y in b).
struct raw_pair {
    i64 x = 0;
    i64 y = 0;
    friend bool operator==(const raw_pair&, const raw_pair&) = default;
};

inline i64 eval_raw(form_kind kind, raw_pair p) {
    i128 v = 0;
    switch (kind) {
        case form_kind::two_squares: v = i128(p.x) * p.x + i128(p.y) * p.y; break;
        case form_kind::minus_two: v = i128(p.x + p.y) * (p.x + p.y) - 2 * i128(p.y) * p.y; break;
        case form_kind::plus_two: v = i128(p.x - p.y) * (p.x - p.y) + 2 * i128(p.y) * p.y; break;
    }
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw std::overflow_error("eval_raw overflow");
    return static_cast<i64>(v);
}

/// The two Brahmagupta-style product candidates. Both evaluate to
/// eval(p) * eval(q); entries may be negative or zero and are normalized
/// separately.
struct compose_pairs {
    raw_pair ab; // "+" sign choice; for minus_two: (A, B) = (ac+bd, b(c+d)+d(a+b))
    raw_pair cd; // "-" sign choice; for minus_two: (C, D) = (a(c+d)+d(a-b), bc-ad)
};

inline compose_pairs compose(form_kind kind, const representation& p, const representation& q) {
    if (p.kind != kind || q.kind != kind) throw kind_mismatch_error();
    i64 a = static_cast<i64>(p.a), b = static_cast<i64>(p.b);
    i64 c = static_cast<i64>(q.a), d = static_cast<i64>(q.b);
    switch (kind) {
        case form_kind::two_squares:
            return {{a * c - b * d, a * d + b * c}, {a * c + b * d, a * d - b * c}};
        case form_kind::minus_two:
            return {{a * c + b * d, b * (c + d) + d * (a + b)},
                    {a * (c + d) + d * (a - b), b * c - a * d}};
        case form_kind::plus_two: {
            // compose in the reduced coordinates (a-b, b), then map back
            i64 u = a - b, v = b, w = c - d, x = d;
            i64 u1 = u * w - 2 * v * x, v1 = u * x + v * w;
            i64 u2 = u * w + 2 * v * x, v2 = u * x - v * w;
            return {{u1 + v1, v1}, {u2 + v2, v2}};
        }
    }
    throw std::logic_error("compose: bad kind");
}

enum class degenerate_kind { perfect_square, twice_square };

struct degenerate {
    degenerate_kind kind;
    friend bool operator==(const degenerate&, const degenerate&) = default;
};

using normalize_result = std::variant<representation, degenerate>;

/// Drive a raw pair into the constrained region a > b > 0 without changing
/// the form value: fold signs through the reduced coordinates, and for the
/// indefinite minus_two form descend with the automorph of x^2 - 2y^2,
/// (x, y) -> (3x - 4y, 3y - 2x), which strictly shrinks |y| outside the
/// region. Degenerate reports the two excluded shapes: a perfect square
/// (reduced y = 0) or twice a square (value 2y^2, impossible for odd values).
/// A pair whose orbit has a common divisor is not a proper representation
/// and raises not_normalizable_error.
inline normalize_result normalize(form_kind kind, raw_pair p) {
    i64 value = eval_raw(kind, p);

    u64 ap = 0, bp = 0; // |reduced| coordinates
    switch (kind) {
        case form_kind::two_squares:
            ap = static_cast<u64>(std::abs(p.x));
            bp = static_cast<u64>(std::abs(p.y));
            if (ap < bp) std::swap(ap, bp);
            break;
        case form_kind::minus_two:
            ap = static_cast<u64>(std::abs(p.x + p.y));
            bp = static_cast<u64>(std::abs(p.y));
            break;
        case form_kind::plus_two:
            ap = static_cast<u64>(std::abs(p.x - p.y));
            bp = static_cast<u64>(std::abs(p.y));
            break;
    }

    if (bp == 0 || (kind == form_kind::plus_two && ap == 0))
        return degenerate{kind == form_kind::plus_two && ap == 0 ? degenerate_kind::twice_square
                                                                 : degenerate_kind::perfect_square};
    if (kind == form_kind::two_squares && ap == bp) return degenerate{degenerate_kind::twice_square};
    if (kind == form_kind::minus_two && ap == 2 * bp) return degenerate{degenerate_kind::twice_square};

    if (value <= 0 || value % 2 == 0)
        throw std::invalid_argument("normalize: raw pair must evaluate to a positive odd integer");

    if (kind == form_kind::minus_two) {
        while (ap < 2 * bp) {
            i64 na = 3 * i64(ap) - 4 * i64(bp);
            i64 nb = 3 * i64(bp) - 2 * i64(ap);
            ap = static_cast<u64>(std::abs(na));
            bp = static_cast<u64>(std::abs(nb));
            if (bp == 0) return degenerate{degenerate_kind::perfect_square};
            if (ap == 2 * bp) return degenerate{degenerate_kind::twice_square};
        }
    }

    u64 a = 0, b = bp;
    switch (kind) {
        case form_kind::two_squares: a = ap; break;
        case form_kind::minus_two: a = ap - bp; break;
        case form_kind::plus_two: a = ap + bp; break;
    }
    if (std::gcd(a, b) != 1)
        throw not_normalizable_error("normalize: pair is not a proper representation");
    representation r = make_representation(kind, a, b);
    if (eval(r) != static_cast<u64>(value)) throw std::logic_error("normalize: value drifted");
    return r;
}

/// The parameter pair representing 2N under the same form: (a+b, a-b).
/// Both entries are odd and coprime; it is the unique pair with
/// first > second > 0 and gcd 1 (the constrained-parity requirement cannot
/// hold for an even value, so this is the primitive representation of 2N).
struct doubled_pair {
    u64 first = 0;
    u64 second = 0;
    friend bool operator==(const doubled_pair&, const doubled_pair&) = default;
};

inline doubled_pair double_rep(const representation& r) {
    return doubled_pair{r.a + r.b, r.a - r.b};
}

struct form_descriptor {
    form_kind kind;
    int discriminant; // of the reduced form
    int automorphs;
};

inline constexpr form_descriptor descriptor(form_kind k) {
    switch (k) {
        case form_kind::two_squares: return {k, -4, 4};
        case form_kind::minus_two: return {k, 8, 2};
        case form_kind::plus_two: return {k, -8, 2};
    }
    return {k, 0, 0};
}

} // namespace triforms
