#pragma once

// Table and report rendering for the command-line tool. Output is
// deterministic for fixed inputs: markdown tables annotate composite values
// with their computed factorization, csv stays purely numeric with a header
// row, and json-lines carries one object per record with factorizations as
// [prime, exponent] arrays.

#include <sstream>
#include <string>
#include <vector>

#include "../../vendor/json.hpp"

#include "arith.hpp"
#include "forms.hpp"
#include "genforms.hpp"
#include "segregate.hpp"
#include "sweeps.hpp"
#include "triples.hpp"
#include "triplets.hpp"

namespace triforms {

enum class output_format { markdown, csv, jsonl };

inline std::optional<output_format> parse_format(const std::string& s) {
    if (s == "md" || s == "markdown") return output_format::markdown;
    if (s == "csv") return output_format::csv;
    if (s == "jsonl") return output_format::jsonl;
    return std::nullopt;
}

/// "51(=3·17)" for composites, the bare number for primes.
inline std::string annotate(u64 n) {
    factorization f = factorize(n);
    if (f.factors.size() == 1 && f.factors[0].exponent == 1) return std::to_string(n);
    if (f.factors.empty()) return std::to_string(n); // n == 1
    std::string s = std::to_string(n) + "(=";
    bool first = true;
    for (const auto& fe : f.factors) {
        for (u64 e = 0; e < fe.exponent; ++e) {
            if (!first) s += "·";
            s += std::to_string(fe.prime);
            first = false;
        }
    }
    return s + ")";
}

inline nlohmann::json factors_json(u64 n) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& fe : factorize(n).factors) arr.push_back({fe.prime, fe.exponent});
    return arr;
}

namespace detail {

inline std::string md_row(const std::vector<std::string>& cells) {
    std::string s = "|";
    for (const auto& c : cells) { s += " " + c + " |"; }
    return s + "\n";
}

inline std::string md_header(const std::vector<std::string>& cells) {
    std::string s = md_row(cells) + "|";
    for (std::size_t i = 0; i < cells.size(); ++i) s += "---|";
    return s + "\n";
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ",";
        s += cells[i];
    }
    return s + "\n";
}

} // namespace detail

/// One row per generator pair with a <= a_max: the triangle, the inradius
/// and the three form values.
inline std::string render_triples(u64 a_max, output_format fmt) {
    auto params = enumerate_params(a_max);
    std::string out;
    const std::vector<std::string> head = {"a", "b", "x", "y", "z", "r", "n13", "n15", "n17"};
    if (fmt == output_format::markdown) out += detail::md_header(head);
    if (fmt == output_format::csv) out += detail::csv_row(head);
    for (triple_params p : params) {
        primitive_triple t = triple_from_params(p);
        form_values fv = forms_from_params(p);
        switch (fmt) {
            case output_format::markdown:
                out += detail::md_row({std::to_string(p.a), std::to_string(p.b), std::to_string(t.x),
                                       std::to_string(t.y), std::to_string(t.z), std::to_string(t.r),
                                       annotate(fv.n13), annotate(fv.n15), annotate(fv.n17)});
                break;
            case output_format::csv:
                out += detail::csv_row({std::to_string(p.a), std::to_string(p.b), std::to_string(t.x),
                                        std::to_string(t.y), std::to_string(t.z), std::to_string(t.r),
                                        std::to_string(fv.n13), std::to_string(fv.n15),
                                        std::to_string(fv.n17)});
                break;
            case output_format::jsonl: {
                nlohmann::json j{{"a", p.a}, {"b", p.b}, {"x", t.x},   {"y", t.y},  {"z", t.z},
                                 {"r", t.r}, {"n13", fv.n13}, {"n15", fv.n15}, {"n17", fv.n17}};
                j["n13_factors"] = factors_json(fv.n13);
                j["n15_factors"] = factors_json(fv.n15);
                j["n17_factors"] = factors_json(fv.n17);
                out += j.dump() + "\n";
                break;
            }
        }
    }
    return out;
}

/// Representations of one odd integer by one of the three forms.
inline std::string render_represent(form_kind kind, u64 n, output_format fmt) {
    auto reps = represent(kind, n);
    std::string out;
    const std::vector<std::string> head = {"a", "b"};
    if (fmt == output_format::markdown) out += detail::md_header(head);
    if (fmt == output_format::csv) out += detail::csv_row(head);
    for (const auto& r : reps) {
        switch (fmt) {
            case output_format::markdown:
            case output_format::csv: {
                auto row = std::vector<std::string>{std::to_string(r.a), std::to_string(r.b)};
                out += fmt == output_format::markdown ? detail::md_row(row) : detail::csv_row(row);
                break;
            }
            case output_format::jsonl:
                out += nlohmann::json{{"kind", to_string(kind)}, {"n", n}, {"a", r.a}, {"b", r.b}}
                           .dump() +
                       "\n";
                break;
        }
    }
    return out;
}

/// Representations of one odd integer by a generalized form.
inline std::string render_gf_represent(general_form f, u64 n, output_format fmt) {
    auto reps = gf_represent(f, n);
    std::string out;
    const std::vector<std::string> head = {"a", "b"};
    if (fmt == output_format::markdown) out += detail::md_header(head);
    if (fmt == output_format::csv) out += detail::csv_row(head);
    for (const auto& r : reps) {
        switch (fmt) {
            case output_format::markdown:
            case output_format::csv: {
                auto row = std::vector<std::string>{std::to_string(r.a), std::to_string(r.b)};
                out += fmt == output_format::markdown ? detail::md_row(row) : detail::csv_row(row);
                break;
            }
            case output_format::jsonl:
                out += nlohmann::json{{"k", f.k}, {"l", f.l}, {"n", n}, {"a", r.a}, {"b", r.b}}
                           .dump() +
                       "\n";
                break;
        }
    }
    return out;
}

inline std::string seg_formula(const seg_rep& r) {
    std::string s = std::to_string(r.s), t = std::to_string(r.t);
    switch (r.kind) {
        case seg_kind::f3: return s + "^2 + 2·" + t + "^2";
        case seg_kind::f5: return s + "^2 + 4·" + t + "^2";
        case seg_kind::f7: return s + "^2 + 4·" + s + "·" + t + " + 2·" + t + "^2";
        case seg_kind::f1a: return s + "^2 + 8·" + t + "^2";
        case seg_kind::f1b: return s + "^2 + 16·" + t + "^2";
        case seg_kind::f1c: return s + "^2 + 8·" + s + "·" + t + " + 8·" + t + "^2";
    }
    return "?";
}

/// The segregated representation of every odd prime below the bound,
/// grouped by form.
inline std::string render_segregated(u64 bound, output_format fmt) {
    std::vector<u64> primes = primes_below(bound);
    std::vector<std::pair<u64, seg_rep>> rows[6];
    for (u64 p : primes) {
        if (p == 2) continue;
        for (const auto& r : seg_represent(p)) rows[static_cast<int>(r.kind)].push_back({p, r});
    }
    std::string out;
    if (fmt == output_format::csv) out += detail::csv_row({"form", "p", "s", "t"});
    for (int k = 0; k < 6; ++k) {
        seg_kind kind = static_cast<seg_kind>(k);
        if (fmt == output_format::markdown) {
            out += std::string("## ") + to_string(kind) + "\n";
            out += detail::md_header({"p", "s", "t", "decomposition"});
        }
        for (const auto& [p, r] : rows[k]) {
            switch (fmt) {
                case output_format::markdown:
                    out += detail::md_row({std::to_string(p), std::to_string(r.s), std::to_string(r.t),
                                           std::to_string(p) + " = " + seg_formula(r)});
                    break;
                case output_format::csv:
                    out += detail::csv_row({to_string(kind), std::to_string(p), std::to_string(r.s),
                                            std::to_string(r.t)});
                    break;
                case output_format::jsonl:
                    out += nlohmann::json{{"form", to_string(kind)}, {"p", p}, {"s", r.s}, {"t", r.t}}
                               .dump() +
                           "\n";
                    break;
            }
        }
        if (fmt == output_format::markdown) out += "\n";
    }
    return out;
}

/// Segregated representations of a single odd prime.
inline std::string render_seg_single(u64 p, output_format fmt) {
    auto reps = seg_represent(p);
    std::string out;
    if (fmt == output_format::markdown) out += detail::md_header({"form", "s", "t", "decomposition"});
    if (fmt == output_format::csv) out += detail::csv_row({"form", "p", "s", "t"});
    for (const auto& r : reps) {
        switch (fmt) {
            case output_format::markdown:
                out += detail::md_row({to_string(r.kind), std::to_string(r.s), std::to_string(r.t),
                                       std::to_string(p) + " = " + seg_formula(r)});
                break;
            case output_format::csv:
                out += detail::csv_row(
                    {to_string(r.kind), std::to_string(p), std::to_string(r.s), std::to_string(r.t)});
                break;
            case output_format::jsonl:
                out += nlohmann::json{{"form", to_string(r.kind)}, {"p", p}, {"s", r.s}, {"t", r.t}}
                           .dump() +
                       "\n";
                break;
        }
    }
    return out;
}

/// Triplet search results plus the gap summary.
inline std::string render_triplets(u64 r_max, flavor_filter filter, output_format fmt,
                                   unsigned jobs = 1) {
    auto records = search(r_max, filter, jobs);
    gap_stats_result stats = gap_stats(records);
    std::string out;
    const std::vector<std::string> head = {"a", "b", "r", "p13", "p15", "p17", "flavor"};
    if (fmt == output_format::markdown) out += detail::md_header(head);
    if (fmt == output_format::csv) out += detail::csv_row(head);
    for (const auto& rec : records) {
        std::vector<std::string> row = {std::to_string(rec.params.a), std::to_string(rec.params.b),
                                        std::to_string(rec.r),        std::to_string(rec.p13),
                                        std::to_string(rec.p15),      std::to_string(rec.p17),
                                        to_string(rec.flavor)};
        switch (fmt) {
            case output_format::markdown: out += detail::md_row(row); break;
            case output_format::csv: out += detail::csv_row(row); break;
            case output_format::jsonl:
                out += nlohmann::json{{"a", rec.params.a}, {"b", rec.params.b}, {"r", rec.r},
                                      {"p13", rec.p13},    {"p15", rec.p15},    {"p17", rec.p17},
                                      {"flavor", to_string(rec.flavor)}}
                           .dump() +
                       "\n";
                break;
        }
    }
    switch (fmt) {
        case output_format::markdown: {
            out += "\ngap stats:\n";
            out += "  total " + std::to_string(stats.total()) + " (mixed " +
                   std::to_string(stats.count_mixed) + ", all-one " + std::to_string(stats.count_all_one) +
                   ", none-one " + std::to_string(stats.count_none_one) + ")\n";
            out += "  gap mod 24:";
            for (const auto& [res, cnt] : stats.gap_mod24)
                out += " " + std::to_string(res) + ":" + std::to_string(cnt);
            out += "\n  per r-decade:";
            for (const auto& [dec, cnt] : stats.per_decade)
                out += " 1e" + std::to_string(dec) + ":" + std::to_string(cnt);
            out += "\n  gap-rule violations: " + std::to_string(stats.violations.size()) + "\n";
            for (const auto& v : stats.violations) out += "    " + v + "\n";
            break;
        }
        case output_format::csv: {
            out += "\n";
            out += detail::csv_row({"stat", "value"});
            out += detail::csv_row({"total", std::to_string(stats.total())});
            out += detail::csv_row({"mixed", std::to_string(stats.count_mixed)});
            out += detail::csv_row({"all-one", std::to_string(stats.count_all_one)});
            out += detail::csv_row({"none-one", std::to_string(stats.count_none_one)});
            for (const auto& [res, cnt] : stats.gap_mod24)
                out += detail::csv_row({"gap_mod24_" + std::to_string(res), std::to_string(cnt)});
            out += detail::csv_row({"violations", std::to_string(stats.violations.size())});
            break;
        }
        case output_format::jsonl: {
            nlohmann::json j{{"record", "gap-stats"},
                             {"total", stats.total()},
                             {"mixed", stats.count_mixed},
                             {"all_one", stats.count_all_one},
                             {"none_one", stats.count_none_one},
                             {"violations", stats.violations.size()}};
            nlohmann::json hist = nlohmann::json::object();
            for (const auto& [res, cnt] : stats.gap_mod24) hist[std::to_string(res)] = cnt;
            j["gap_mod24"] = hist;
            out += j.dump() + "\n";
            break;
        }
    }
    return out;
}

/// Values of (a+3b)^2 - 8b^2 and (a+5b)^2 - 32b^2 over the first `rows`
/// generator pairs.
inline std::string render_genform_table(u64 rows, output_format fmt) {
    general_form f83 = make_general_form(8, 3);
    general_form f325 = make_general_form(32, 5);
    std::vector<triple_params> params;
    for (u64 a_max = 8; params.size() < rows; a_max *= 2) params = enumerate_params(a_max);
    params.resize(rows);
    std::string out;
    const std::vector<std::string> head = {"a", "b", "(a+3b)^2-8b^2", "(a+5b)^2-32b^2"};
    if (fmt == output_format::markdown) out += detail::md_header(head);
    if (fmt == output_format::csv) out += detail::csv_row({"a", "b", "f_8_3", "f_32_5"});
    for (triple_params p : params) {
        u64 v1 = gf_eval(f83, p), v2 = gf_eval(f325, p);
        switch (fmt) {
            case output_format::markdown:
                out += detail::md_row(
                    {std::to_string(p.a), std::to_string(p.b), annotate(v1), annotate(v2)});
                break;
            case output_format::csv:
                out += detail::csv_row({std::to_string(p.a), std::to_string(p.b), std::to_string(v1),
                                        std::to_string(v2)});
                break;
            case output_format::jsonl: {
                nlohmann::json j{{"a", p.a}, {"b", p.b}, {"f_8_3", v1}, {"f_32_5", v2}};
                j["f_8_3_factors"] = factors_json(v1);
                j["f_32_5_factors"] = factors_json(v2);
                out += j.dump() + "\n";
                break;
            }
        }
    }
    return out;
}

inline std::string render_sweep(const sweep_result& res) {
    std::ostringstream out;
    out << "check: " << res.name << "\n";
    out << "cases: " << res.cases << "\n";
    for (const auto& n : res.notes) out << "note: " << n << "\n";
    out << "counterexamples: " << res.counterexamples.size() << "\n";
    std::size_t shown = std::min<std::size_t>(res.counterexamples.size(), 25);
    for (std::size_t i = 0; i < shown; ++i) out << "  " << res.counterexamples[i] << "\n";
    if (shown < res.counterexamples.size())
        out << "  ... " << res.counterexamples.size() - shown << " more\n";
    out << "result: " << (res.pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace triforms
