#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "heatsphere/cli.hpp"

using namespace heatsphere;
using namespace heatsphere::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "heatsphere");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        result.push_back(line);
    }
    return result;
}

}  // namespace

TEST_CASE("compute emits exact records") {
    auto r = run_cli({"compute", "--n", "1", "--d", "3"});
    REQUIRE(r.code == exit_ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["num"] == "1");
    CHECK(j["value"]["den"] == "4");
    CHECK(j["value"]["pi_half"] == 1);

    r = run_cli({"compute", "--n", "0", "--d", "5"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["route"] == "weyl");
    CHECK(j["value"]["den"] == "32");

    r = run_cli({"compute", "--n", "2", "--d", "1"});
    j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["num"] == "0");
    CHECK(j["value"]["den"] == "1");
    CHECK(j["value"]["pi_half"] == 0);
}

TEST_CASE("grid order and formats agree") {
    const auto json_run = run_cli({"compute", "--n", "0..3", "--d", "2..4"});
    const auto csv_run = run_cli({"compute", "--n", "0..3", "--d", "2..4", "--format", "csv"});
    REQUIRE(json_run.code == exit_ok);
    REQUIRE(csv_run.code == exit_ok);
    const auto jl = lines(json_run.out);
    const auto cl = lines(csv_run.out);
    REQUIRE(jl.size() == 12);
    REQUIRE(cl.size() == 13);
    CHECK(cl[0] == csv_header);
    for (std::size_t i = 0; i < jl.size(); ++i) {
        const auto from_json = record_from_json(nlohmann::json::parse(jl[i]));
        const auto from_csv = record_from_csv(cl[i + 1]);
        CHECK(from_json.n == static_cast<long>(i / 3));
        CHECK(from_json.d == static_cast<long>(2 + i % 3));
        CHECK(from_json.value == from_csv.value);
        CHECK(from_json.route == from_csv.route);
        CHECK(*from_json.float_value == *from_csv.float_value);
        CHECK(from_json.value == heat_invariant(from_json.n, from_json.d).value);
    }
}

TEST_CASE("record round trip") {
    for (long n = 0; n <= 6; ++n) {
        for (long d = 1; d <= 8; ++d) {
            const auto rec = make_record(heat_invariant(n, d));
            const auto back = record_from_json(nlohmann::json::parse(to_json(rec).dump()));
            CHECK(back.value == rec.value);
            CHECK(back.omega_used == rec.omega_used);
            CHECK(record_from_csv(to_csv_row(rec)).value == rec.value);
            CHECK(*rec.float_value == rec.value.to_double());
        }
    }
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(R"({"n":1})")), std::invalid_argument);
    CHECK_THROWS_AS(record_from_csv("1,2,3"), std::invalid_argument);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({"compute", "--n", "2", "--d", "3", "--omega", "3"}).code == exit_usage);
    CHECK(run_cli({"compute", "--n", "x", "--d", "3"}).code == exit_usage);
    CHECK(run_cli({"compute", "--d", "3"}).code == exit_usage);
    CHECK(run_cli({"compute", "--n", "1", "--d", "4", "--formula", "odd"}).code == exit_usage);
    CHECK(run_cli({"compute", "--n", "1", "--d", "4", "--format", "xml"}).code == exit_usage);
    CHECK(run_cli({"verify", "nonsense"}).code == exit_usage);
    CHECK(run_cli({"asympt", "--d", "3"}).code == exit_usage);
    CHECK(run_cli({"frobnicate"}).code == exit_usage);
    CHECK(run_cli({}).code == exit_usage);
    CHECK(parse_range("2..5").hi == 5);
    CHECK(parse_range("7").lo == 7);
    CHECK_THROWS_AS(parse_range("5..2"), std::invalid_argument);
}

TEST_CASE("verify subcommand") {
    CHECK(run_cli({"verify", "s1", "--n", "1..4"}).code == exit_ok);
    CHECK(run_cli({"verify", "sharpness"}).code == exit_ok);
    CHECK(run_cli({"verify", "crosscheck", "--d", "2..8", "--n", "1..6"}).code == exit_ok);
    CHECK(run_cli({"verify", "bernoulli-link", "--t-max", "6"}).code == exit_ok);
    const auto bad = run_cli({"verify", "s1", "--n", "1", "--omega-offset", "-1"});
    CHECK(bad.code == exit_failure);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    const auto js = run_cli({"verify", "s3", "--format", "json"});
    CHECK(nlohmann::json::parse(js.out)["passed"] == true);
}

TEST_CASE("asympt subcommand") {
    auto r = run_cli({"asympt", "--d", "3", "--n-terms", "3", "--t0", "0.05"});
    CHECK(r.code == exit_ok);
    CHECK(nlohmann::json::parse(r.out)["relative_deviation"].get<double>() < 0.2);
    r = run_cli({"asympt", "--d", "2", "--n-terms", "4", "--t0", "0.05"});
    CHECK(r.code == exit_ok);
    r = run_cli({"asympt", "--d", "1", "--n-terms", "2", "--t0", "0.1"});
    CHECK(r.code == exit_ok);
    CHECK(nlohmann::json::parse(r.out)["status"] == "beyond-all-orders");
    r = run_cli({"asympt", "--d", "3", "--n-terms", "3", "--max-dev", "0.001"});
    CHECK(r.code == exit_failure);

    setenv("HEATSPHERE_MAX_K", "5", 1);
    CHECK(run_cli({"asympt", "--d", "3", "--n-terms", "3"}).code == exit_failure);
    setenv("HEATSPHERE_MAX_K", "abc", 1);
    CHECK(run_cli({"asympt", "--d", "3", "--n-terms", "3"}).code == exit_usage);
    unsetenv("HEATSPHERE_MAX_K");
}
