#pragma once

// Range sweeps behind the `sweep` subcommand and the acceptance suite.
// Each sweep re-checks one of the global claims over an exhaustive range
// and reports counterexamples instead of asserting, so a failure carries
// the witness with it.

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "forms.hpp"
#include "genforms.hpp"
#include "segregate.hpp"
#include "triples.hpp"
#include "triplets.hpp"

namespace triforms {

struct sweep_result {
    std::string name;
    u64 cases = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;

    bool pass() const { return counterexamples.empty(); }
};

namespace detail {

template <typename Fn>
inline void parallel_strided(std::size_t count, unsigned jobs, Fn&& fn) {
    // fn(job_index, item_index); results must be collected per job
    if (jobs <= 1 || count < 256) {
        for (std::size_t i = 0; i < count; ++i) fn(0, i);
        return;
    }
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
            for (std::size_t i = j; i < count; i += jobs) fn(j, i);
        });
    }
    for (auto& w : workers) w.join();
}

inline bool kind_applies(form_kind kind, unsigned residue) {
    switch (kind) {
        case form_kind::two_squares: return residue == 1 || residue == 5;
        case form_kind::minus_two: return residue == 1 || residue == 7;
        case form_kind::plus_two: return residue == 1 || residue == 3;
    }
    return false;
}

} // namespace detail

/// Every odd prime below the bound has exactly one representation when its
/// residue class matches the form and none otherwise.
inline sweep_result sweep_uniqueness(form_kind kind, u64 prime_bound, unsigned jobs = 1) {
    sweep_result res;
    res.name = std::string("uniqueness-") + to_string(kind);
    std::vector<u64> primes = primes_below(prime_bound);
    if (jobs == 0) jobs = 1;
    std::vector<std::vector<std::string>> bad(std::max(1u, jobs));
    std::atomic<u64> cases{0};
    detail::parallel_strided(primes.size(), jobs, [&](unsigned j, std::size_t i) {
        u64 p = primes[i];
        if (p == 2) return;
        auto reps = represent(kind, p);
        u64 expected = detail::kind_applies(kind, p & 7) ? 1 : 0;
        cases.fetch_add(1, std::memory_order_relaxed);
        if (reps.size() != expected)
            bad[j].push_back("p=" + std::to_string(p) + " reps=" + std::to_string(reps.size()) +
                             " expected=" + std::to_string(expected));
        for (const auto& r : reps) {
            if (eval(r) != p)
                bad[j].push_back("p=" + std::to_string(p) + " bad value at b=" + std::to_string(r.b));
        }
    });
    res.cases = cases.load();
    for (auto& v : bad) res.counterexamples.insert(res.counterexamples.end(), v.begin(), v.end());
    std::sort(res.counterexamples.begin(), res.counterexamples.end());
    return res;
}

/// seg_represent arity and validity for every odd prime below the bound:
/// one pair of the matching kind, or all of f1a/f1b/f1c once each.
inline sweep_result sweep_segregated_uniqueness(u64 prime_bound, unsigned jobs = 1) {
    sweep_result res;
    res.name = "uniqueness-segregated";
    std::vector<u64> primes = primes_below(prime_bound);
    if (jobs == 0) jobs = 1;
    std::vector<std::vector<std::string>> bad(std::max(1u, jobs));
    std::atomic<u64> cases{0};
    detail::parallel_strided(primes.size(), jobs, [&](unsigned j, std::size_t i) {
        u64 p = primes[i];
        if (p == 2) return;
        cases.fetch_add(1, std::memory_order_relaxed);
        auto reps = seg_represent(p);
        auto complain = [&](const std::string& msg) {
            bad[j].push_back("p=" + std::to_string(p) + " " + msg);
        };
        if ((p & 7) == 1) {
            if (reps.size() != 3 || reps[0].kind != seg_kind::f1a || reps[1].kind != seg_kind::f1b ||
                reps[2].kind != seg_kind::f1c) {
                complain("expected one rep per f1a/f1b/f1c, got " + std::to_string(reps.size()));
                return;
            }
        } else {
            seg_kind want = (p & 7) == 3 ? seg_kind::f3 : (p & 7) == 5 ? seg_kind::f5 : seg_kind::f7;
            if (reps.size() != 1 || reps[0].kind != want) {
                complain("expected a single rep, got " + std::to_string(reps.size()));
                return;
            }
        }
        for (const auto& r : reps) {
            if (seg_eval(r) != p) complain("rep does not evaluate back");
            try {
                make_seg_rep(r.kind, r.s, r.t);
            } catch (const std::exception& e) {
                complain(std::string("invalid rep: ") + e.what());
            }
        }
    });
    res.cases = cases.load();
    for (auto& v : bad) res.counterexamples.insert(res.counterexamples.end(), v.begin(), v.end());
    std::sort(res.counterexamples.begin(), res.counterexamples.end());
    return res;
}

/// Representation counts for every odd N below the bound: 2^(n-1) when the
/// factorization of N sits wholly in the form's residue class, 0 otherwise.
inline sweep_result sweep_count_law(form_kind kind, u64 odd_bound, unsigned jobs = 1) {
    sweep_result res;
    res.name = std::string("count-law-") + to_string(kind);
    if (jobs == 0) jobs = 1;
    std::size_t count = odd_bound <= 3 ? 0 : (odd_bound - 3 + 1) / 2; // odd N in [3, odd_bound)
    std::vector<std::vector<std::string>> bad(std::max(1u, jobs));
    std::atomic<u64> cases{0};
    detail::parallel_strided(count, jobs, [&](unsigned j, std::size_t i) {
        u64 n = 3 + 2 * static_cast<u64>(i);
        cases.fetch_add(1, std::memory_order_relaxed);
        set_membership m = classify(n);
        u64 expected = m.contains(kind) ? expected_count(m) : 0;
        auto reps = represent(kind, n);
        if (reps.size() != expected) {
            bad[j].push_back("N=" + std::to_string(n) + " reps=" + std::to_string(reps.size()) +
                             " expected=" + std::to_string(expected));
            return;
        }
        for (std::size_t t = 0; t < reps.size(); ++t) {
            if (eval(reps[t]) != n) bad[j].push_back("N=" + std::to_string(n) + " bad value");
            if (t > 0 && reps[t].b <= reps[t - 1].b)
                bad[j].push_back("N=" + std::to_string(n) + " b not increasing");
        }
    });
    res.cases = cases.load();
    for (auto& v : bad) res.counterexamples.insert(res.counterexamples.end(), v.begin(), v.end());
    std::sort(res.counterexamples.begin(), res.counterexamples.end());
    return res;
}

/// The per-triangle identities for every generator pair with a <= a_max:
/// Pythagoras, z = x + y - 2r, the placement of the three form values on
/// the triangle, the arithmetic progression with gap 2r, pairwise
/// coprimality (also against r), residue classes, and the parity-based
/// residue predictions.
inline sweep_result sweep_structural(u64 a_max, unsigned jobs = 1) {
    sweep_result res;
    res.name = "structural";
    if (jobs == 0) jobs = 1;
    std::vector<std::vector<std::string>> bad(std::max(1u, jobs));
    std::atomic<u64> cases{0};
    std::size_t span = a_max < 2 ? 0 : a_max - 1; // a in [2, a_max]
    detail::parallel_strided(span, jobs, [&](unsigned j, std::size_t i) {
        u64 a = 2 + static_cast<u64>(i);
        for (u64 b = 1 + (a & 1); b < a; b += 2) {
            if (std::gcd(a, b) != 1) continue;
            triple_params p{a, b};
            cases.fetch_add(1, std::memory_order_relaxed);
            auto bp = [&](const std::string& msg) {
                bad[j].push_back("a=" + std::to_string(a) + " b=" + std::to_string(b) + " " + msg);
            };
            primitive_triple t = triple_from_params(p);
            form_values fv = forms_from_params(p);
            if (u128(t.x) * t.x + u128(t.y) * t.y != u128(t.z) * t.z) bp("pythagoras");
            if (std::gcd(t.x, t.y) != 1) bp("legs share a factor");
            if (t.z != t.x + t.y - 2 * t.r) bp("z != x+y-2r");
            if (fv.n15 != t.z) bp("n15 != z");
            if (fv.n17 != t.x + t.y) bp("n17 != x+y");
            if (fv.n13 != t.z - 2 * t.r) bp("n13 != z-2r");
            if (fv.n15 - fv.n13 != 2 * t.r || fv.n17 - fv.n15 != 2 * t.r) bp("progression gap");
            if (!check_pairwise_coprime(fv)) bp("form values share a factor");
            if (t.r > 0 && (std::gcd(t.r, fv.n13) != 1 || std::gcd(t.r, fv.n15) != 1 ||
                            std::gcd(t.r, fv.n17) != 1))
                bp("r shares a factor with a form value");
            unsigned r13 = fv.n13 & 7, r15 = fv.n15 & 7, r17 = fv.n17 & 7;
            if (r13 != 1 && r13 != 3) bp("n13 residue");
            if (r15 != 1 && r15 != 5) bp("n15 residue");
            if (r17 != 1 && r17 != 7) bp("n17 residue");
            residue_triplet pred = residue_prediction(p);
            if (pred.n13 != r13 || pred.n15 != r15 || pred.n17 != r17) bp("residue prediction");
        }
    });
    res.cases = cases.load();
    for (auto& v : bad) res.counterexamples.insert(res.counterexamples.end(), v.begin(), v.end());
    std::sort(res.counterexamples.begin(), res.counterexamples.end());
    return res;
}

namespace detail {

inline representation random_rep(form_kind kind, std::mt19937_64& rng, u64 a_max) {
    std::uniform_int_distribution<u64> da(2, a_max);
    for (;;) {
        u64 a = da(rng);
        std::uniform_int_distribution<u64> db(1, a - 1);
        u64 b = db(rng);
        if (!validate_params(a, b)) return representation{kind, a, b};
    }
}

} // namespace detail

/// Random compose/normalize round trips for minus_two: both product
/// candidates must normalize to constrained representations of p*q
/// whenever gcd(p, q) = 1; with a shared factor one route may legitimately
/// land on an improper pair, so at least one route must survive.
inline sweep_result sweep_closure(std::size_t trials, u64 seed = 0x7261776f726b6572ULL) {
    sweep_result res;
    res.name = "closure";
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        representation rp = detail::random_rep(form_kind::minus_two, rng, 150);
        representation rq = detail::random_rep(form_kind::minus_two, rng, 150);
        if (rp == rq) { --t; continue; }
        u64 p = eval(rp), q = eval(rq), n = p * q;
        res.cases++;
        compose_pairs cand = compose(form_kind::minus_two, rp, rq);
        auto complain = [&](const std::string& msg) {
            res.counterexamples.push_back("p=" + std::to_string(p) + " q=" + std::to_string(q) + " " + msg);
        };
        if (eval_raw(form_kind::minus_two, cand.ab) != static_cast<i64>(n)) complain("ab route value");
        if (eval_raw(form_kind::minus_two, cand.cd) != static_cast<i64>(n)) complain("cd route value");
        unsigned ok = 0;
        for (raw_pair raw : {cand.ab, cand.cd}) {
            try {
                normalize_result nr = normalize(form_kind::minus_two, raw);
                if (auto* rep = std::get_if<representation>(&nr)) {
                    if (eval(*rep) != n) complain("normalized value mismatch");
                    else ++ok;
                } else if (std::gcd(p, q) == 1) {
                    complain("unexpected degenerate");
                }
            } catch (const not_normalizable_error&) {
                if (std::gcd(p, q) == 1) complain("route not normalizable");
            }
        }
        if (ok == 0) complain("no route normalized");
    }
    return res;
}

/// Scan for all pairs u > v > 0 with gcd 1 whose form value is 2n.
inline std::vector<doubled_pair> primitive_pairs_of_double(form_kind kind, u64 n) {
    std::vector<doubled_pair> found;
    u64 two_n = 2 * n;
    for (u64 v = 1; v * v < n; ++v) {
        std::optional<u64> u;
        switch (kind) {
            case form_kind::two_squares:
                if (auto s = sqrt_exact(two_n - v * v); s && *s > v) u = *s;
                break;
            case form_kind::minus_two:
                if (auto s = sqrt_exact(two_n + 2 * v * v); s && *s > 2 * v) u = *s - v;
                break;
            case form_kind::plus_two:
                if (auto s = sqrt_exact(two_n - 2 * v * v); s && *s >= 1) u = *s + v;
                break;
        }
        if (u && std::gcd(*u, v) == 1) found.push_back({*u, v});
    }
    return found;
}

/// double_rep produces an odd, coprime pair evaluating to 2N. The scan over
/// all pairs (u > v > 0, gcd 1) finds nothing else when N is a prime power:
/// the primitive pairs of 2N are the doubled representations of N, so their
/// count is 2^(n-1) and uniqueness needs n = 1. Sampling therefore draws
/// representations with prime-power values.
inline sweep_result sweep_doubling(std::size_t trials, u64 seed = 0x646f75626c696e67ULL) {
    sweep_result res;
    res.name = "doubling";
    std::mt19937_64 rng(seed);
    const form_kind kinds[3] = {form_kind::two_squares, form_kind::minus_two, form_kind::plus_two};
    for (std::size_t t = 0; t < trials; ++t) {
        form_kind kind = kinds[t % 3];
        representation r = detail::random_rep(kind, rng, 400);
        u64 n = eval(r);
        if (classify(n).distinct_primes != 1) { --t; continue; }
        res.cases++;
        doubled_pair d = double_rep(r);
        auto complain = [&](const std::string& msg) {
            res.counterexamples.push_back(std::string(to_string(kind)) + " a=" + std::to_string(r.a) +
                                          " b=" + std::to_string(r.b) + " " + msg);
        };
        if (d.first % 2 == 0 || d.second % 2 == 0) complain("entries not odd");
        if (std::gcd(d.first, d.second) != 1) complain("entries not coprime");
        if (eval_raw(kind, {static_cast<i64>(d.first), static_cast<i64>(d.second)}) !=
            static_cast<i64>(2 * n))
            complain("value is not 2N");

        auto found = primitive_pairs_of_double(kind, n);
        if (found.size() != 1 || !(found[0] == d))
            complain("scan found " + std::to_string(found.size()) + " primitive pairs");
    }
    return res;
}

struct genform_sweep_bounds {
    u64 named_bound = 100'000; // the two concrete forms plus (2, 1)
    u64 grid_bound = 10'000;   // exploratory grid k <= 32, l <= 6
};

/// Uniqueness harness for the generalized forms. The three named forms are
/// backed by stated claims and feed counterexamples; the grid is
/// exploratory and only ever appends notes.
inline sweep_result sweep_genform_uniqueness(genform_sweep_bounds bounds = {}, unsigned jobs = 1) {
    sweep_result res;
    res.name = "genform-uniqueness";
    const general_form named[] = {make_general_form(8, 3), make_general_form(32, 5),
                                  make_general_form(2, 1)};
    for (general_form f : named) {
        gf_report rep = gf_uniqueness_report(f, bounds.named_bound, jobs);
        res.cases += rep.primes_checked;
        for (const auto& ce : rep.counterexamples)
            res.counterexamples.push_back("k=" + std::to_string(f.k) + " l=" + std::to_string(f.l) +
                                          " p=" + std::to_string(ce.prime) + " has " +
                                          std::to_string(ce.reps.size()) + " representations");
        res.notes.push_back("k=" + std::to_string(f.k) + " l=" + std::to_string(f.l) + " bound=" +
                            std::to_string(bounds.named_bound) + ": represented " +
                            std::to_string(rep.primes_represented) + "/" +
                            std::to_string(rep.primes_checked) + " primes, multi=" +
                            std::to_string(rep.counterexamples.size()));
    }
    u64 grid_findings = 0;
    for (u64 l = 1; l <= 6; ++l) {
        for (u64 k = 1; k <= std::min<u64>(32, (l + 1) * (l + 1)); ++k) {
            gf_report rep = gf_uniqueness_report(make_general_form(k, l), bounds.grid_bound, jobs);
            res.cases += rep.primes_checked;
            for (const auto& ce : rep.counterexamples) {
                ++grid_findings;
                res.notes.push_back("finding: k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                    " p=" + std::to_string(ce.prime) + " has " +
                                    std::to_string(ce.reps.size()) + " representations");
            }
        }
    }
    res.notes.push_back("grid k<=32 l<=6 at bound " + std::to_string(bounds.grid_bound) +
                        ": multi-representation primes found: " + std::to_string(grid_findings));
    return res;
}

} // namespace triforms
