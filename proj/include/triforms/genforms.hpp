#pragma once

// The generalized family F(a, b; k, l) = (a + l*b)^2 - k*b^2 evaluated on
// generator pairs. The fixed parameters must satisfy (l+1)^2 >= k, which
// keeps every value positive under a > b > 0.

#include <algorithm>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "triples.hpp"

namespace triforms {

struct general_form {
    u64 k = 0;
    u64 l = 0;
    friend bool operator==(const general_form&, const general_form&) = default;
};

inline general_form make_general_form(u64 k, u64 l) {
    if (k < 1 || l < 1) throw std::invalid_argument("general_form: k, l must be positive");
    if (checked_mul(l + 1, l + 1) < k)
        throw std::invalid_argument("general_form: need (l+1)^2 >= k");
    return general_form{k, l};
}

inline u64 gf_eval(general_form f, triple_params p) {
    u64 s = checked_add(p.a, checked_mul(f.l, p.b));
    u64 s2 = checked_mul(s, s);
    u64 kb2 = checked_mul(f.k, checked_mul(p.b, p.b));
    return s2 - kb2; // positive: a > b gives s >= (l+1)b + 1 and (l+1)^2 >= k
}

/// All generator pairs with F(a, b; k, l) = N, ascending by b. For fixed b
/// the value is increasing in a, so its minimum over the region is at
/// a = b + 1:
///
///   min_value(b) = ((l+1)^2 - k) b^2 + 2(l+1) b + 1
///
/// which is increasing in b; scanning b until min_value(b) > N is
/// exhaustive. In particular when (l+1)^2 = k the scan reaches
/// b = (N-1) / (2(l+1)), which such forms do need: their values factor as
/// (a-b)(a + (2l+1)b) and primes sit at a = b + 1 with b of order N.
inline std::vector<triple_params> gf_represent(general_form f, u64 n) {
    if (n % 2 == 0) throw even_input_error("gf_represent: input must be odd");
    if (n < 3) throw std::invalid_argument("gf_represent: input must be >= 3");
    const u64 c = (f.l + 1) * (f.l + 1) - f.k;
    std::vector<triple_params> out;
    for (u64 b = 1;; ++b) {
        u128 min_value = u128(c) * b * b + u128(2) * (f.l + 1) * b + 1;
        if (min_value > n) break;
        u128 target = u128(n) + u128(f.k) * b * b; // (a + l*b)^2
        auto root = sqrt_exact128(target);
        if (!root || *root <= f.l * b) continue;
        u64 a = *root - f.l * b;
        if (a <= b) continue;
        if (std::gcd(a, b) != 1 || (a & 1) == (b & 1)) continue;
        out.push_back(triple_params{a, b});
    }
    return out;
}

inline unsigned gf_residue_check(general_form f, triple_params p) {
    return static_cast<unsigned>(gf_eval(f, p) % 8);
}

struct gf_counterexample {
    u64 prime = 0;
    std::vector<triple_params> reps;
};

struct gf_report {
    general_form form;
    u64 prime_bound = 0;
    u64 primes_checked = 0;
    u64 primes_represented = 0;
    std::vector<gf_counterexample> counterexamples; // primes with >= 2 representations
};

/// Representation counts for every odd prime below the bound. A prime with
/// two or more representations is recorded, never asserted away: for the
/// forms covered by the uniqueness claims the list stays empty, and for
/// anything else it is an exploratory finding worth reporting.
inline gf_report gf_uniqueness_report(general_form f, u64 prime_bound, unsigned jobs = 1) {
    if (prime_bound < 3) throw std::invalid_argument("gf_uniqueness_report: bound must be >= 3");
    gf_report report;
    report.form = f;
    report.prime_bound = prime_bound;
    std::vector<u64> primes = primes_below(prime_bound);
    if (jobs == 0) jobs = 1;

    struct chunk_result {
        u64 represented = 0;
        std::vector<gf_counterexample> multi;
    };
    std::vector<chunk_result> results(jobs);

    auto run = [&](unsigned j) {
        for (std::size_t i = j; i < primes.size(); i += jobs) {
            u64 p = primes[i];
            if (p == 2) continue;
            auto reps = gf_represent(f, p);
            if (!reps.empty()) results[j].represented++;
            if (reps.size() >= 2) results[j].multi.push_back({p, reps});
        }
    };

    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> workers;
        for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(run, j);
        for (auto& w : workers) w.join();
    }

    report.primes_checked = primes.empty() ? 0 : primes.size() - (primes.front() == 2 ? 1 : 0);
    for (auto& cr : results) {
        report.primes_represented += cr.represented;
        report.counterexamples.insert(report.counterexamples.end(), cr.multi.begin(), cr.multi.end());
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const gf_counterexample& x, const gf_counterexample& y) { return x.prime < y.prime; });
    return report;
}

} // namespace triforms
