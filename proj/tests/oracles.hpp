#pragma once

// Test-only brute-force oracles. Each one recomputes a result by direct
// enumeration, independent of the search bounds and square-root inversion
// used by the library.

#include <vector>

#include "triforms/forms.hpp"
#include "triforms/genforms.hpp"
#include "triforms/segregate.hpp"

namespace oracle {

using triforms::u64;

inline bool is_prime_trial(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<triforms::representation> represent_scan(triforms::form_kind kind, u64 n) {
    using namespace triforms;
    std::vector<representation> out;
    u64 a_hi = 0;
    switch (kind) {
        case form_kind::two_squares: a_hi = isqrt(n); break;
        case form_kind::minus_two: a_hi = isqrt(n) + 2; break;          // min value (a+1)^2 - 2 at b=1
        case form_kind::plus_two: a_hi = isqrt(2 * n) + 2; break;       // min value ~ (2/3) a^2
    }
    for (u64 a = 2; a <= a_hi; ++a) {
        for (u64 b = 1; b < a; ++b) {
            if (validate_params(a, b)) continue;
            if (eval(representation{kind, a, b}) == n) out.push_back(representation{kind, a, b});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const representation& x, const representation& y) { return x.b < y.b; });
    return out;
}

inline std::vector<triforms::seg_rep> seg_scan(u64 p) {
    using namespace triforms;
    std::vector<seg_rep> out;
    const seg_kind all[] = {seg_kind::f3,  seg_kind::f5,  seg_kind::f7,
                            seg_kind::f1a, seg_kind::f1b, seg_kind::f1c};
    // every form value is >= s^2 and >= 2t^2
    for (seg_kind k : all) {
        for (u64 s = 1; s * s <= p; s += 2) {
            for (u64 t = 1; 2 * t * t <= p; ++t) {
                if (seg_requires_odd_t(k) && t % 2 == 0) continue;
                if (std::gcd(s, t) != 1) continue;
                seg_rep r{k, s, t};
                if (seg_eval(r) == p) out.push_back(r);
            }
        }
    }
    return out;
}

inline std::vector<triforms::triple_params> gf_scan(triforms::general_form f, u64 n) {
    using namespace triforms;
    std::vector<triple_params> out;
    // every value of the family is >= a, so a <= n is exhaustive
    for (u64 a = 2; a <= n; ++a) {
        for (u64 b = 1; b < a; ++b) {
            if (validate_params(a, b)) continue;
            if (gf_eval(f, triple_params{a, b}) == n) out.push_back(triple_params{a, b});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const triple_params& x, const triple_params& y) { return x.b < y.b; });
    return out;
}

inline bool is_square_mod_p_exhaustive(triforms::i64 c, u64 p) {
    u64 cc = static_cast<u64>(((c % static_cast<triforms::i64>(p)) + static_cast<triforms::i64>(p)) %
                              static_cast<triforms::i64>(p));
    for (u64 x = 0; x < p; ++x)
        if (x * x % p == cc) return true;
    return false;
}

} // namespace oracle
