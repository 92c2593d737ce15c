#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct run_result {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

run_result run_cli(const std::string& args) {
    std::string cmd = std::string(TRIFORMS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("cli triples csv single row") {
    auto res = run_cli("triples --a-max 2 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "a,b,x,y,z,r,n13,n15,n17\n2,1,4,3,5,1,3,5,7\n");
}

TEST_CASE("cli triples defaults to the full small table") {
    auto res = run_cli("triples --format csv");
    CHECK(res.exit_code == 0);
    // header + 11 rows
    CHECK(std::count(res.output.begin(), res.output.end(), '\n') == 12);
}

TEST_CASE("cli triples rejects a_max below 2") {
    auto res = run_cli("triples --a-max 1");
    CHECK(res.exit_code == 2);
}

TEST_CASE("cli represent single value") {
    auto res = run_cli("represent --kind minus-two --n 119 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "a,b\n10,1\n8,5\n");
}

TEST_CASE("cli represent rejects even input") {
    auto res = run_cli("represent --kind two-squares --n 4");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("even") != std::string::npos);
}

TEST_CASE("cli represent general form") {
    auto res = run_cli("represent --k 8 --l 3 --n 161 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "a,b\n10,1\n5,4\n");
}

TEST_CASE("cli segregated table default bound") {
    auto res = run_cli("represent --kind segregated --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("f3,83,9,1\n") != std::string::npos);
    CHECK(res.output.find("f1c,97,1,3\n") != std::string::npos);
}

TEST_CASE("cli triplets") {
    auto res = run_cli("triplets --r-max 9 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("2,1,1,3,5,7,none-one\n") != std::string::npos);
    CHECK(res.output.find("10,9,9,163,181,199,none-one\n") != std::string::npos);
}

TEST_CASE("cli sweep pass and unknown check") {
    auto ok = run_cli("sweep --check structural --bound 120");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("result: PASS") != std::string::npos);

    auto bad = run_cli("sweep --check no-such-check");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("unknown check") != std::string::npos);
}

TEST_CASE("cli named sweeps pass at reduced bounds") {
    auto uniq = run_cli("sweep --check uniqueness-minus-two --bound 10000 --jobs 2");
    CHECK(uniq.exit_code == 0);
    CHECK(uniq.output.find("result: PASS") != std::string::npos);

    auto count = run_cli("sweep --check count-law-two-squares --bound 10000 --jobs 2");
    CHECK(count.exit_code == 0);
    CHECK(count.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("cli unknown flavor is a usage error") {
    auto res = run_cli("triplets --flavor sometimes");
    CHECK(res.exit_code == 2);
}

TEST_CASE("cli output is reproducible across runs and jobs") {
    auto a = run_cli("triplets --r-max 105 --format jsonl --jobs 1");
    auto b = run_cli("triplets --r-max 105 --format jsonl --jobs 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}
