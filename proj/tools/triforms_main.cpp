// Command-line front end. Exit codes: 0 success, 1 a sweep found a
// counterexample, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "triforms/triforms.hpp"

namespace {

using namespace triforms;

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

std::optional<form_kind> parse_kind(const std::string& s) {
    if (s == "two-squares") return form_kind::two_squares;
    if (s == "minus-two") return form_kind::minus_two;
    if (s == "plus-two") return form_kind::plus_two;
    return std::nullopt;
}

struct sweep_entry {
    const char* name;
    u64 default_bound;
};

constexpr sweep_entry kSweeps[] = {
    {"uniqueness-two-squares", 1'000'000}, {"uniqueness-minus-two", 1'000'000},
    {"uniqueness-plus-two", 1'000'000},    {"uniqueness-segregated", 100'000},
    {"count-law-two-squares", 200'000},    {"count-law-minus-two", 200'000},
    {"count-law-plus-two", 200'000},       {"structural", 1'500},
    {"closure", 1'000},                    {"doubling", 1'000},
    {"genform-uniqueness", 100'000},
};

sweep_result run_sweep(const std::string& check, u64 bound, unsigned jobs) {
    if (check == "uniqueness-two-squares") return sweep_uniqueness(form_kind::two_squares, bound, jobs);
    if (check == "uniqueness-minus-two") return sweep_uniqueness(form_kind::minus_two, bound, jobs);
    if (check == "uniqueness-plus-two") return sweep_uniqueness(form_kind::plus_two, bound, jobs);
    if (check == "uniqueness-segregated") return sweep_segregated_uniqueness(bound, jobs);
    if (check == "count-law-two-squares") return sweep_count_law(form_kind::two_squares, bound, jobs);
    if (check == "count-law-minus-two") return sweep_count_law(form_kind::minus_two, bound, jobs);
    if (check == "count-law-plus-two") return sweep_count_law(form_kind::plus_two, bound, jobs);
    if (check == "structural") return sweep_structural(bound, jobs);
    if (check == "closure") return sweep_closure(bound);
    if (check == "doubling") return sweep_doubling(bound);
    if (check == "genform-uniqueness") return sweep_genform_uniqueness({bound, 10'000}, jobs);
    throw std::invalid_argument("unknown check: " + check);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary quadratic forms embedded in primitive Pythagorean triangles"};
    app.require_subcommand(1);

    std::string format_s = "md";
    std::string out_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_s, "md|csv|jsonl")->default_str("md");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    // triples
    u64 a_max = 7;
    auto* cmd_triples = app.add_subcommand("triples", "generator pairs, triangles and form values");
    cmd_triples->add_option("--a-max", a_max, "largest a to enumerate")->default_str("7");
    add_common(cmd_triples);

    // represent
    std::string kind_s;
    u64 rep_n = 0;
    u64 rep_bound = 100;
    u64 gf_k = 0, gf_l = 0;
    auto* cmd_represent = app.add_subcommand("represent", "representations by the constrained forms");
    cmd_represent->add_option("--kind", kind_s, "two-squares|minus-two|plus-two|segregated");
    cmd_represent->add_option("--n", rep_n, "odd integer to represent");
    cmd_represent->add_option("--bound", rep_bound, "prime bound for the segregated table")
        ->default_str("100");
    cmd_represent->add_option("--k", gf_k, "generalized form parameter k");
    cmd_represent->add_option("--l", gf_l, "generalized form parameter l");
    add_common(cmd_represent);

    // triplets
    u64 r_max = 105;
    std::string flavor_s = "all";
    auto* cmd_triplets = app.add_subcommand("triplets", "prime triplet search");
    cmd_triplets->add_option("--r-max", r_max, "largest inradius to search")->default_str("105");
    cmd_triplets->add_option("--flavor", flavor_s, "all|all-one|none-one")->default_str("all");
    cmd_triplets->add_option("--jobs", jobs, "worker threads");
    add_common(cmd_triplets);

    // genforms
    u64 rows = 20;
    auto* cmd_genforms = app.add_subcommand("genforms", "values of the two fixed generalized forms");
    cmd_genforms->add_option("--rows", rows, "number of generator pairs to list")->default_str("20");
    add_common(cmd_genforms);

    // sweep
    std::string check;
    u64 bound = 0;
    auto* cmd_sweep = app.add_subcommand("sweep", "exhaustive verification sweeps");
    cmd_sweep->add_option("--check", check, "sweep name (see list-checks)")->required();
    cmd_sweep->add_option("--bound", bound, "range bound / trial count (default per check)");
    cmd_sweep->add_option("--jobs", jobs, "worker threads");
    add_common(cmd_sweep);

    auto* cmd_list = app.add_subcommand("list-checks", "list available sweep names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto fmt = parse_format(format_s);
    if (!fmt) {
        std::cerr << "error: unknown format '" << format_s << "'\n";
        return 2;
    }

    try {
        if (cmd_triples->parsed()) {
            if (a_max < 2) {
                std::cerr << "error: --a-max must be >= 2\n";
                return 2;
            }
            return emit(render_triples(a_max, *fmt), out_path);
        }
        if (cmd_represent->parsed()) {
            bool general = cmd_represent->count("--k") || cmd_represent->count("--l");
            if (general) {
                general_form f = make_general_form(gf_k, gf_l);
                if (!cmd_represent->count("--n")) {
                    std::cerr << "error: generalized representation needs --n\n";
                    return 2;
                }
                return emit(render_gf_represent(f, rep_n, *fmt), out_path);
            }
            if (kind_s == "segregated") {
                if (cmd_represent->count("--n"))
                    return emit(render_seg_single(rep_n, *fmt), out_path);
                return emit(render_segregated(rep_bound, *fmt), out_path);
            }
            auto kind = parse_kind(kind_s);
            if (!kind) {
                std::cerr << "error: unknown kind '" << kind_s << "'\n";
                return 2;
            }
            if (!cmd_represent->count("--n")) {
                std::cerr << "error: --n is required for kind " << kind_s << "\n";
                return 2;
            }
            return emit(render_represent(*kind, rep_n, *fmt), out_path);
        }
        if (cmd_triplets->parsed()) {
            flavor_filter filter;
            if (flavor_s == "all") filter = flavor_filter::any;
            else if (flavor_s == "all-one") filter = flavor_filter::all_one;
            else if (flavor_s == "none-one") filter = flavor_filter::none_one;
            else {
                std::cerr << "error: unknown flavor '" << flavor_s << "'\n";
                return 2;
            }
            return emit(render_triplets(r_max, filter, *fmt, jobs), out_path);
        }
        if (cmd_genforms->parsed()) {
            if (rows < 1) {
                std::cerr << "error: --rows must be >= 1\n";
                return 2;
            }
            return emit(render_genform_table(rows, *fmt), out_path);
        }
        if (cmd_list->parsed()) {
            std::string text;
            for (const auto& s : kSweeps)
                text += std::string(s.name) + " (default bound " + std::to_string(s.default_bound) + ")\n";
            return emit(text, out_path);
        }
        if (cmd_sweep->parsed()) {
            u64 effective = bound;
            bool known = false;
            for (const auto& s : kSweeps) {
                if (check == s.name) {
                    known = true;
                    if (effective == 0) effective = s.default_bound;
                }
            }
            if (!known) {
                std::cerr << "error: unknown check '" << check << "'\n";
                return 2;
            }
            sweep_result res = run_sweep(check, effective, jobs);
            int rc = emit(render_sweep(res), out_path);
            if (rc != 0) return rc;
            return res.pass() ? 0 : 1;
        }
    } catch (const even_input_error& e) {
        std::cerr << "error: even input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
