#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "json.hpp"
#include "triforms/render.hpp"

using namespace triforms;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("annotate") {
    CHECK(annotate(7) == "7");
    CHECK(annotate(9) == "9(=3·3)");
    CHECK(annotate(27) == "27(=3·3·3)");
    CHECK(annotate(51) == "51(=3·17)");
    CHECK(annotate(329) == "329(=7·47)");
}

TEST_CASE("triples markdown table") {
    auto got = lines(render_triples(7, output_format::markdown));
    std::vector<std::string> expected = {
        "| a | b | x | y | z | r | n13 | n15 | n17 |",
        "|---|---|---|---|---|---|---|---|---|",
        "| 2 | 1 | 4 | 3 | 5 | 1 | 3 | 5 | 7 |",
        "| 3 | 2 | 12 | 5 | 13 | 2 | 9(=3·3) | 13 | 17 |",
        "| 4 | 1 | 8 | 15 | 17 | 3 | 11 | 17 | 23 |",
        "| 4 | 3 | 24 | 7 | 25 | 3 | 19 | 25(=5·5) | 31 |",
        "| 5 | 2 | 20 | 21 | 29 | 6 | 17 | 29 | 41 |",
        "| 5 | 4 | 40 | 9 | 41 | 4 | 33(=3·11) | 41 | 49(=7·7) |",
        "| 6 | 1 | 12 | 35 | 37 | 5 | 27(=3·3·3) | 37 | 47 |",
        "| 6 | 5 | 60 | 11 | 61 | 5 | 51(=3·17) | 61 | 71 |",
        "| 7 | 2 | 28 | 45 | 53 | 10 | 33(=3·11) | 53 | 73 |",
        "| 7 | 4 | 56 | 33 | 65 | 12 | 41 | 65(=5·13) | 89 |",
        "| 7 | 6 | 84 | 13 | 85 | 6 | 73 | 85(=5·17) | 97 |",
    };
    CHECK(got == expected);
}

TEST_CASE("triples csv") {
    CHECK(render_triples(2, output_format::csv) == "a,b,x,y,z,r,n13,n15,n17\n2,1,4,3,5,1,3,5,7\n");
}

TEST_CASE("triples jsonl round trip") {
    auto rows = lines(render_triples(7, output_format::jsonl));
    auto params = enumerate_params(7);
    REQUIRE(rows.size() == params.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::json j = nlohmann::json::parse(rows[i]);
        primitive_triple t = triple_from_params(params[i]);
        form_values fv = forms_from_params(params[i]);
        REQUIRE(j["a"].get<u64>() == params[i].a);
        REQUIRE(j["b"].get<u64>() == params[i].b);
        REQUIRE(j["x"].get<u64>() == t.x);
        REQUIRE(j["y"].get<u64>() == t.y);
        REQUIRE(j["z"].get<u64>() == t.z);
        REQUIRE(j["r"].get<u64>() == t.r);
        REQUIRE(j["n13"].get<u64>() == fv.n13);
        REQUIRE(j["n15"].get<u64>() == fv.n15);
        REQUIRE(j["n17"].get<u64>() == fv.n17);
        // factorization arrays re-multiply to the value
        u64 prod = 1;
        for (const auto& pe : j["n13_factors"]) {
            for (u64 e = 0; e < pe[1].get<u64>(); ++e) prod *= pe[0].get<u64>();
        }
        REQUIRE(prod == fv.n13);
    }
}

TEST_CASE("represent rendering") {
    auto got = lines(render_represent(form_kind::minus_two, 119, output_format::csv));
    std::vector<std::string> expected = {"a,b", "10,1", "8,5"};
    CHECK(got == expected);

    auto j = lines(render_represent(form_kind::minus_two, 119, output_format::jsonl));
    REQUIRE(j.size() == 2);
    auto first = nlohmann::json::parse(j[0]);
    CHECK(first["kind"] == "minus-two");
    CHECK(first["n"] == 119);
    CHECK(first["a"] == 10);
    CHECK(first["b"] == 1);
}

TEST_CASE("segregated rendering") {
    auto csv = render_segregated(100, output_format::csv);
    CHECK(csv.find("f3,43,5,3\n") != std::string::npos);
    CHECK(csv.find("f5,61,5,3\n") != std::string::npos);
    CHECK(csv.find("f7,23,3,1\n") != std::string::npos);
    CHECK(csv.find("f1a,17,3,1\n") != std::string::npos);
    CHECK(csv.find("f1b,97,9,1\n") != std::string::npos);
    CHECK(csv.find("f1c,89,3,2\n") != std::string::npos);

    auto md = render_segregated(100, output_format::markdown);
    CHECK(md.find("| 23 | 3 | 1 | 23 = 3^2 + 4·3·1 + 2·1^2 |") != std::string::npos);

    auto single = render_seg_single(43, output_format::csv);
    CHECK(single == "form,p,s,t\nf3,43,5,3\n");
}

TEST_CASE("triplets rendering carries records and stats") {
    auto md = render_triplets(9, flavor_filter::any, output_format::markdown);
    CHECK(md.find("| 2 | 1 | 1 | 3 | 5 | 7 | none-one |") != std::string::npos);
    CHECK(md.find("gap stats:") != std::string::npos);

    auto csv = render_triplets(9, flavor_filter::any, output_format::csv);
    CHECK(csv.find("4,1,3,11,17,23,mixed\n") != std::string::npos);
    CHECK(csv.find("total,4\n") != std::string::npos);

    auto jl = lines(render_triplets(9, flavor_filter::any, output_format::jsonl));
    REQUIRE(jl.size() == 5); // 4 records + summary
    auto summary = nlohmann::json::parse(jl.back());
    CHECK(summary["record"] == "gap-stats");
    CHECK(summary["total"] == 4);
}

TEST_CASE("genform table rendering") {
    auto md = lines(render_genform_table(20, output_format::markdown));
    REQUIRE(md.size() == 22);
    CHECK(md[2] == "| 2 | 1 | 17 | 17 |");
    CHECK(md[3] == "| 3 | 2 | 49(=7·7) | 41 |");
    // the computed factorization of 329 is 7 * 47
    CHECK(md[15] == "| 8 | 5 | 329(=7·47) | 289(=17·17) |");
}

TEST_CASE("rendering is deterministic") {
    CHECK(render_triples(7, output_format::markdown) == render_triples(7, output_format::markdown));
    CHECK(render_triplets(105, flavor_filter::any, output_format::csv, 1) ==
          render_triplets(105, flavor_filter::any, output_format::csv, 3));
}

TEST_CASE("sweep report formatting") {
    sweep_result res;
    res.name = "demo";
    res.cases = 5;
    auto text = render_sweep(res);
    CHECK(text.find("check: demo\n") != std::string::npos);
    CHECK(text.find("result: PASS\n") != std::string::npos);
    res.counterexamples.push_back("n=9");
    CHECK(render_sweep(res).find("result: FAIL\n") != std::string::npos);
}
