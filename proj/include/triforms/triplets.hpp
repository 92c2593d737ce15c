#pragma once

// Prime triplets: triangles whose three form values n13, n15, n17 are all
// prime. The three primes are in arithmetic progression with gap 2r. With
// the single exception of (a, b) = (2, 1), a triplet needs 3 | r; triplets
// that are all 1 mod 8 need r = 0 mod 12, triplets with no member 1 mod 8
// need r = 9 mod 12.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "triples.hpp"

namespace triforms {

enum class triplet_flavor { mixed, all_one, none_one };

inline const char* to_string(triplet_flavor f) {
    switch (f) {
        case triplet_flavor::mixed: return "mixed";
        case triplet_flavor::all_one: return "all-one";
        case triplet_flavor::none_one: return "none-one";
    }
    return "?";
}

enum class flavor_filter { any, all_one, none_one };

struct triplet_record {
    triple_params params;
    u64 r = 0;
    u64 p13 = 0;
    u64 p15 = 0;
    u64 p17 = 0;
    triplet_flavor flavor = triplet_flavor::mixed;
    friend bool operator==(const triplet_record&, const triplet_record&) = default;
};

inline std::optional<triplet_record> detect(triple_params p) {
    form_values fv = forms_from_params(p);
    // cheapest first: n13 is the smallest of the three
    if (!is_prime(fv.n13) || !is_prime(fv.n15) || !is_prime(fv.n17)) return std::nullopt;
    triplet_record rec;
    rec.params = p;
    rec.r = inradius(p);
    rec.p13 = fv.n13;
    rec.p15 = fv.n15;
    rec.p17 = fv.n17;
    bool one13 = (fv.n13 & 7) == 1, one15 = (fv.n15 & 7) == 1, one17 = (fv.n17 & 7) == 1;
    if (one13 && one15 && one17)
        rec.flavor = triplet_flavor::all_one;
    else if (!one13 && !one15 && !one17)
        rec.flavor = triplet_flavor::none_one;
    else
        rec.flavor = triplet_flavor::mixed;
    return rec;
}

/// Fast necessary condition on r alone. False means the pair provably
/// cannot produce a triplet of the requested flavor; (2, 1) is the lone
/// exception to the 3 | r rule.
inline bool necessary_condition(triple_params p, flavor_filter filter = flavor_filter::any) {
    u64 r = inradius(p);
    bool first = (p.a == 2 && p.b == 1);
    switch (filter) {
        case flavor_filter::any: return first || r % 3 == 0;
        case flavor_filter::all_one: return r % 12 == 0;
        case flavor_filter::none_one: return first || r % 12 == 9;
    }
    return true;
}

inline bool matches(triplet_flavor f, flavor_filter filter) {
    switch (filter) {
        case flavor_filter::any: return true;
        case flavor_filter::all_one: return f == triplet_flavor::all_one;
        case flavor_filter::none_one: return f == triplet_flavor::none_one;
    }
    return false;
}

/// All triplets with r <= r_max matching the filter, sorted by (r, p13).
/// Since r = b(a-b) >= a - 1, scanning a <= r_max + 1 is exhaustive.
/// Workers split the a-range; the merged result is sorted, so the output
/// does not depend on the worker count.
inline std::vector<triplet_record> search(u64 r_max, flavor_filter filter = flavor_filter::any,
                                          unsigned jobs = 1) {
    if (r_max < 1) throw std::invalid_argument("search: r_max must be >= 1");
    const u64 a_hi = r_max + 1;
    if (jobs == 0) jobs = 1;

    auto scan = [&](u64 a_lo, u64 a_end, std::vector<triplet_record>& out) {
        for (u64 a = a_lo; a <= a_end; ++a) {
            for (u64 b = 1 + (a & 1); b < a; b += 2) {
                if (std::gcd(a, b) != 1) continue;
                triple_params p{a, b};
                if (inradius(p) > r_max) continue;
                if (!necessary_condition(p, filter)) continue;
                auto rec = detect(p);
                if (rec && matches(rec->flavor, filter)) out.push_back(*rec);
            }
        }
    };

    std::vector<std::vector<triplet_record>> chunks(jobs);
    if (jobs == 1 || a_hi < 64) {
        scan(2, a_hi, chunks[0]);
    } else {
        std::vector<std::thread> workers;
        u64 span = (a_hi - 1) / jobs + 1;
        for (unsigned j = 0; j < jobs; ++j) {
            u64 lo = 2 + j * span;
            u64 hi = std::min(a_hi, lo + span - 1);
            if (lo > a_hi) break;
            workers.emplace_back([&, j, lo, hi] { scan(lo, hi, chunks[j]); });
        }
        for (auto& w : workers) w.join();
    }

    std::vector<triplet_record> out;
    for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
    std::sort(out.begin(), out.end(), [](const triplet_record& x, const triplet_record& y) {
        return std::tuple(x.r, x.p13, x.params.a, x.params.b) <
               std::tuple(y.r, y.p13, y.params.a, y.params.b);
    });
    return out;
}

struct gap_stats_result {
    u64 count_mixed = 0;
    u64 count_all_one = 0;
    u64 count_none_one = 0;
    std::map<unsigned, u64> gap_mod24;          // residue of 2r mod 24 -> count
    std::map<unsigned, u64> per_decade;         // floor(log10(r)) -> count
    std::vector<std::string> violations;        // mod-24 gap rule breaches

    u64 total() const { return count_mixed + count_all_one + count_none_one; }
};

/// Per-flavor counts, the histogram of gaps 2r mod 24, counts per r-decade,
/// and any breach of the gap rules (2r = 0 mod 24 for all-one records,
/// 2r = 18 mod 24 for none-one records other than (2, 1)).
inline gap_stats_result gap_stats(const std::vector<triplet_record>& records) {
    gap_stats_result s;
    for (const auto& rec : records) {
        u64 gap = 2 * rec.r;
        s.gap_mod24[static_cast<unsigned>(gap % 24)]++;
        unsigned decade = 0;
        for (u64 v = rec.r; v >= 10; v /= 10) ++decade;
        s.per_decade[decade]++;
        bool first = (rec.params.a == 2 && rec.params.b == 1);
        switch (rec.flavor) {
            case triplet_flavor::mixed: s.count_mixed++; break;
            case triplet_flavor::all_one:
                s.count_all_one++;
                if (gap % 24 != 0)
                    s.violations.push_back("all-one gap " + std::to_string(gap) + " at a=" +
                                           std::to_string(rec.params.a) + " b=" + std::to_string(rec.params.b));
                break;
            case triplet_flavor::none_one:
                s.count_none_one++;
                if (!first && gap % 24 != 18)
                    s.violations.push_back("none-one gap " + std::to_string(gap) + " at a=" +
                                           std::to_string(rec.params.a) + " b=" + std::to_string(rec.params.b));
                break;
        }
    }
    return s;
}

} // namespace triforms
