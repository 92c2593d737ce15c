#pragma once

// Parity-segregated forms: fixing the parities of the generator pair pins
// every odd prime to a single residue class mod 8.
//
//   f3  : s^2 + 2t^2          p = 3 mod 8   (s, t odd)
//   f5  : s^2 + 4t^2          p = 5 mod 8   (s, t odd)
//   f7  : s^2 + 4st + 2t^2    p = 7 mod 8   (s, t odd)
//   f1a : s^2 + 8t^2          p = 1 mod 8   (s odd, t any)
//   f1b : s^2 + 16t^2         p = 1 mod 8   (s odd, t any)
//   f1c : s^2 + 8st + 8t^2    p = 1 mod 8   (s odd, t any)
//
// Primes 1 mod 8 are represented by all three of f1a/f1b/f1c, each uniquely;
// the other classes get exactly one form and one (s, t) pair.

#include <vector>

#include "arith.hpp"
#include "forms.hpp"
#include "triples.hpp"

namespace triforms {

enum class seg_kind { f3, f5, f7, f1a, f1b, f1c };

inline const char* to_string(seg_kind k) {
    switch (k) {
        case seg_kind::f3: return "f3";
        case seg_kind::f5: return "f5";
        case seg_kind::f7: return "f7";
        case seg_kind::f1a: return "f1a";
        case seg_kind::f1b: return "f1b";
        case seg_kind::f1c: return "f1c";
    }
    return "?";
}

struct seg_rep {
    seg_kind kind = seg_kind::f3;
    u64 s = 0;
    u64 t = 0;
    friend bool operator==(const seg_rep&, const seg_rep&) = default;
};

inline bool seg_requires_odd_t(seg_kind k) {
    return k == seg_kind::f3 || k == seg_kind::f5 || k == seg_kind::f7;
}

inline seg_rep make_seg_rep(seg_kind kind, u64 s, u64 t) {
    if (s == 0 || t == 0) throw std::invalid_argument("seg_rep: s, t must be positive");
    if (s % 2 == 0) throw std::invalid_argument("seg_rep: s must be odd");
    if (seg_requires_odd_t(kind) && t % 2 == 0) throw std::invalid_argument("seg_rep: t must be odd");
    if (std::gcd(s, t) != 1) throw std::invalid_argument("seg_rep: s, t must be coprime");
    return seg_rep{kind, s, t};
}

inline u64 seg_eval(const seg_rep& r) {
    u64 s2 = checked_mul(r.s, r.s);
    u64 t2 = checked_mul(r.t, r.t);
    u64 st = checked_mul(r.s, r.t);
    switch (r.kind) {
        case seg_kind::f3: return checked_add(s2, 2 * t2);
        case seg_kind::f5: return checked_add(s2, 4 * t2);
        case seg_kind::f7: return checked_add(checked_add(s2, 4 * st), 2 * t2);
        case seg_kind::f1a: return checked_add(s2, 8 * t2);
        case seg_kind::f1b: return checked_add(s2, 16 * t2);
        case seg_kind::f1c: return checked_add(checked_add(s2, 8 * st), 8 * t2);
    }
    throw std::logic_error("seg_eval: bad kind");
}

namespace detail {

// collect (s, t) with s^2 + coeff*t^2 = p
inline void seg_scan_plain(seg_kind kind, u64 coeff, u64 p, std::vector<seg_rep>& out) {
    for (u64 t = 1; coeff * t * t < p; ++t) {
        auto s = sqrt_exact(p - coeff * t * t);
        if (!s || *s == 0) continue;
        if (*s % 2 == 0) continue;
        if (seg_requires_odd_t(kind) && t % 2 == 0) continue;
        if (std::gcd(*s, t) != 1) continue;
        out.push_back(seg_rep{kind, *s, t});
    }
}

// collect (s, t) with s^2 + 2c*st + (c^2/2)*... the two cross-term forms:
// f7: s = sqrt(p + 2t^2) - 2t, f1c: s = sqrt(p + 8t^2) - 4t
inline void seg_scan_cross(seg_kind kind, u64 p, std::vector<seg_rep>& out) {
    const u64 q = kind == seg_kind::f7 ? 2 : 8; // completes the square: (s + q/2 * ... )
    const u64 half = kind == seg_kind::f7 ? 2 : 4;
    for (u64 t = 1; q * t * t < p; ++t) { // s > 0 requires p > q t^2
        auto root = sqrt_exact(p + q * t * t);
        if (!root || *root <= half * t) continue;
        u64 s = *root - half * t;
        if (s % 2 == 0) continue;
        if (seg_requires_odd_t(kind) && t % 2 == 0) continue;
        if (std::gcd(s, t) != 1) continue;
        out.push_back(seg_rep{kind, s, t});
    }
}

} // namespace detail

/// Representations of an odd prime by the segregated forms: one pair for
/// p = 3, 5, 7 mod 8, three pairs (f1a, f1b, f1c order) for p = 1 mod 8.
inline std::vector<seg_rep> seg_represent(u64 p) {
    if (p % 2 == 0) throw even_input_error("seg_represent: input must be odd");
    if (!is_prime(p)) throw not_prime_error("seg_represent: input must be prime");
    std::vector<seg_rep> out;
    switch (p & 7) {
        case 3: detail::seg_scan_plain(seg_kind::f3, 2, p, out); break;
        case 5: detail::seg_scan_plain(seg_kind::f5, 4, p, out); break;
        case 7: detail::seg_scan_cross(seg_kind::f7, p, out); break;
        case 1:
            detail::seg_scan_plain(seg_kind::f1a, 8, p, out);
            detail::seg_scan_plain(seg_kind::f1b, 16, p, out);
            detail::seg_scan_cross(seg_kind::f1c, p, out);
            break;
    }
    return out;
}

/// Residues of (n17, n13, n15) mod 8 predicted from the parities of the
/// generator pair alone: odd a gives n17 = n13 = 1, even a gives 7 and 3;
/// n15 is 5 when half the even member is odd, else 1.
struct residue_triplet {
    unsigned n17 = 0;
    unsigned n13 = 0;
    unsigned n15 = 0;
    friend bool operator==(const residue_triplet&, const residue_triplet&) = default;
};

inline residue_triplet residue_prediction(triple_params p) {
    residue_triplet r;
    if (p.a % 2 == 1) { r.n17 = 1; r.n13 = 1; } else { r.n17 = 7; r.n13 = 3; }
    u64 even_member = (p.a % 2 == 0) ? p.a : p.b;
    r.n15 = ((even_member / 2) % 2 == 1) ? 5 : 1;
    return r;
}

enum class residue_set { none, s1, s3, s5, s7 };

inline const char* to_string(residue_set s) {
    switch (s) {
        case residue_set::none: return "none";
        case residue_set::s1: return "S1";
        case residue_set::s3: return "S3";
        case residue_set::s5: return "S5";
        case residue_set::s7: return "S7";
    }
    return "?";
}

struct seg_membership {
    residue_set set = residue_set::none;
    unsigned predicted_residue = 0; // 0 when set == none
    u64 distinct_primes = 0;
    u64 exponent_sum = 0;
};

/// Membership of N in S1/S3/S5/S7 (every prime divisor in one class mod 8),
/// with the residue of N predicted from the exponent-sum parity rule:
/// the class residue when the exponent sum is odd, 1 when it is even.
/// The prediction is checked against N mod 8 before returning.
inline seg_membership seg_classify(u64 n) {
    detail::require_odd_ge3(n, "seg_classify");
    factorization f = factorize(n);
    seg_membership m;
    m.distinct_primes = f.distinct_primes();
    m.exponent_sum = f.exponent_sum();
    unsigned cls = static_cast<unsigned>(f.factors.front().prime & 7);
    for (const auto& fe : f.factors) {
        if ((fe.prime & 7) != cls) return m; // mixed classes
    }
    switch (cls) {
        case 1: m.set = residue_set::s1; break;
        case 3: m.set = residue_set::s3; break;
        case 5: m.set = residue_set::s5; break;
        case 7: m.set = residue_set::s7; break;
    }
    m.predicted_residue = (m.exponent_sum % 2 == 1) ? cls : 1;
    if (m.predicted_residue != (n & 7))
        throw std::logic_error("seg_classify: parity rule disagrees with n mod 8");
    return m;
}

/// The generator-pair representation behind a segregated one. For f5/f1b
/// the two-squares pair is the ordered {s, 2t} / {s, 4t}.
inline representation to_form_rep(const seg_rep& r) {
    switch (r.kind) {
        case seg_kind::f3: return make_representation(form_kind::plus_two, r.s + r.t, r.t);
        case seg_kind::f7: return make_representation(form_kind::minus_two, r.s + r.t, r.t);
        case seg_kind::f1a: return make_representation(form_kind::plus_two, r.s + 2 * r.t, 2 * r.t);
        case seg_kind::f1c: return make_representation(form_kind::minus_two, r.s + 2 * r.t, 2 * r.t);
        case seg_kind::f5:
            return make_representation(form_kind::two_squares, std::max(r.s, 2 * r.t),
                                       std::min(r.s, 2 * r.t));
        case seg_kind::f1b:
            return make_representation(form_kind::two_squares, std::max(r.s, 4 * r.t),
                                       std::min(r.s, 4 * r.t));
    }
    throw std::logic_error("to_form_rep: bad kind");
}

} // namespace triforms
