#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "bergman/cli.hpp"
#include "bergman/io.hpp"
#include "bergman/primes.hpp"

using namespace bergman;
using bergman::io::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, std::map<std::string, std::string> env = {})
{
    args.insert(args.begin(), "bergman");
    std::ostringstream out;
    std::ostringstream err;
    const EnvLookup lookup = [env](const std::string& key) -> std::optional<std::string> {
        const auto it = env.find(key);
        if (it == env.end()) {
            return std::nullopt;
        }
        return it->second;
    };
    const int code = cli::dispatch(args, out, err, lookup);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> fields(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string cell; std::getline(in, cell, ',');) {
        out.push_back(cell);
    }
    return out;
}

} // namespace

TEST_CASE("dispatch examples")
{
    const Result norm = run({"primes", "norm", "--limit", "10"});
    CHECK(norm.code == cli::kOk);
    const Json j = Json::parse(norm.out);
    CHECK(j["pi_coeff"] == Json::parse("[7,8]"));
    CHECK(j["float"].get<double>() == doctest::Approx(2.748893571891069));
    CHECK(norm.err.empty());

    const Result geo = run({"decompose", "geometric", "--pk", "3", "--degree", "8"});
    CHECK(geo.code == cli::kOk);
    CHECK(Json::parse(geo.out)["coverage"] == "exact");

    const Result series = run({"norm", "--series", "1@0,1@1", "--radius", "1"});
    CHECK(series.code == cli::kOk);
    CHECK(Json::parse(series.out)["pi_coeff"] == Json::parse("[3,2]"));
}

TEST_CASE("reports re-parse into the originating values")
{
    const Json norm = Json::parse(run({"primes", "norm", "--limit", "1000"}).out);
    CHECK(io::decode_pi(norm) == prime_norm_partial(1000));

    const Json inner = Json::parse(run({"inner", "--f", "i@1,2@3", "--g", "1@1,1/3@3", "--radius", "3/2"}).out);
    const SparseSeries f = io::parse_series("i@1,2@3");
    const SparseSeries g = io::parse_series("1@1,1/3@3");
    CHECK(io::decode_pi(inner) == inner_product(f, g, Disc(make_rational(3, 2))));

    const Json bertrand = Json::parse(run({"primes", "bertrand", "--n", "50"}).out);
    CHECK(io::decode_pi(bertrand) == bertrand_witness(50).value);
    CHECK(bertrand["prime_exists"] == true);

    const Json twins = Json::parse(run({"primes", "twins", "--limit", "7"}).out);
    CHECK(io::decode_pi(twins) == PiRational(make_rational(5, 12)));

    const Json euler = Json::parse(run({"primes", "euler", "--pk", "7"}).out);
    CHECK(io::decode_rational(euler["product"]) == make_rational(15, 4));
}

TEST_CASE("float rendering does not touch exact fields or exit codes")
{
    const Result a = run({"--float-digits", "3", "primes", "norm", "--limit", "100"});
    const Result b = run({"--float-digits", "17", "primes", "norm", "--limit", "100"});
    CHECK(a.code == b.code);
    Json ja = Json::parse(a.out);
    Json jb = Json::parse(b.out);
    CHECK(ja["float"].get<double>() == doctest::Approx(4.63).epsilon(1e-3));
    ja.erase("float");
    jb.erase("float");
    ja["reciprocal_sum"].erase("float");
    jb["reciprocal_sum"].erase("float");
    CHECK(ja == jb);
}

TEST_CASE("exit codes")
{
    SUBCASE("usage errors")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {},
                 {"frobnicate"},
                 {"primes", "norm"},
                 {"primes", "norm", "--limit", "ten"},
                 {"norm", "--series", "1@x", "--radius", "1"},
                 {"norm", "--series", "1@0", "--radius", "0"},
                 {"fta-cert", "--poly", "0,1,1"},
                 {"fta-cert", "--poly", "1,1"},
                 {"fta-cert", "--poly", "1,0,1", "--grid", "4x4"},
                 {"primes", "classify", "--n", "1", "--pk", "3"},
                 {"primes", "euler", "--pk", "4"},
                 {"--float-digits", "0", "primes", "norm", "--limit", "10"},
                 {"--float-digits", "31", "primes", "norm", "--limit", "10"},
                 {"decompose", "rough", "--pk", "3", "--degree", "20", "--p2-limit", "10"},
                 {"sweep", "twins", "1-10"},
             }) {
            const Result r = run(args);
            INFO((args.empty() ? std::string() : args.front()));
            CHECK(r.code == cli::kUsageError);
            CHECK(r.out.empty());
            if (!r.err.empty()) {
                const Json e = Json::parse(lines(r.err).front());
                CHECK(e.contains("error"));
                CHECK(e.contains("reason"));
            }
        }
    }
    SUBCASE("failed hypothesis")
    {
        const Result r = run({"decompose", "tail-bound", "--pk", "11", "--p2-limit", "10000"});
        CHECK(r.code == cli::kHypothesisFailed);
        CHECK(r.out.empty());
        CHECK(Json::parse(r.err)["error"] == "hypothesis");
    }
    SUBCASE("hypothesis holds")
    {
        const Result r = run({"decompose", "tail-bound", "--pk", "11", "--p2-limit", "30"});
        CHECK(r.code == cli::kOk);
        CHECK(Json::parse(r.out)["holds"] == true);
    }
}

TEST_CASE("sweeps")
{
    SUBCASE("log-spaced prime norms are monotone")
    {
        const Result r = run({"sweep", "primes-norm", "10..1000", "--points", "3"});
        CHECK(r.code == cli::kOk);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0] == "parameter,numerator,denominator,float");
        double previous = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto cells = fields(rows[i]);
            REQUIRE(cells.size() == 4);
            const double value = std::stod(cells[3]);
            CHECK(value > previous);
            previous = value;
            const Rational exact{Integer(cells[1]), Integer(cells[2])};
            CHECK(PiRational(exact) == prime_norm_partial(std::stoull(cells[0])));
        }
    }
    SUBCASE("bertrand column all true")
    {
        const Result r = run({"sweep", "bertrand", "1..100"});
        CHECK(r.code == cli::kOk);
        const auto rows = lines(r.out);
        REQUIRE(rows.size() == 101);
        CHECK(rows[0] == "parameter,numerator,denominator,float,prime_exists");
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(fields(rows[i]).back() == "true");
        }
    }
    SUBCASE("empty range is header only")
    {
        const Result r = run({"sweep", "twins", "10..5"});
        CHECK(r.code == cli::kOk);
        CHECK(lines(r.out) == std::vector<std::string>{"parameter,numerator,denominator,float"});
    }
    SUBCASE("JSON sweep")
    {
        const Result r = run({"--format", "json", "sweep", "euler", "2..7"});
        CHECK(r.code == cli::kOk);
        const Json j = Json::parse(r.out);
        REQUIRE(j.is_array());
        CHECK(j.size() == 4); // non-prime cutoffs are skipped
        CHECK(j.back()["numerator"] == 15);
    }
}

TEST_CASE("CSV report output")
{
    const Result r = run({"--format", "csv", "primes", "norm", "--limit", "10"});
    CHECK(r.code == cli::kOk);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    const auto header = fields(rows[0]);
    const auto values = fields(rows[1]);
    REQUIRE(header.size() == values.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "pi_coeff") {
            CHECK(values[i] == "7/8");
        }
    }
}

TEST_CASE("config file and environment overrides")
{
    const auto path = std::filesystem::temp_directory_path() / "bergman_test.conf";
    {
        std::ofstream cfg(path);
        cfg << "# defaults\n"
            << "default_grid = 16x16\n"
            << "output_format = csv\n"
            << "float_digits = 4\n";
    }
    const Result from_file = run({"--config", path.string(), "fta-cert", "--poly", "-1,0,1"});
    CHECK(from_file.code == cli::kOk);
    CHECK(from_file.out.find("16x16") != std::string::npos);
    CHECK(lines(from_file.out).size() == 2); // CSV header + row

    // Environment beats the file, flags beat the environment.
    const Result from_env = run({"--config", path.string(), "fta-cert", "--poly", "-1,0,1"},
                                {{"BERGMAN_DEFAULT_GRID", "24x24"}, {"BERGMAN_OUTPUT_FORMAT", "json"}});
    CHECK(from_env.code == cli::kOk);
    CHECK(Json::parse(from_env.out)["grid"] == "24x24");

    const Result from_flag = run({"--config", path.string(), "fta-cert", "--poly", "-1,0,1", "--grid", "32x32"},
                                 {{"BERGMAN_OUTPUT_FORMAT", "json"}});
    CHECK(Json::parse(from_flag.out)["grid"] == "32x32");

    CHECK(run({"primes", "norm", "--limit", "10"}, {{"BERGMAN_FLOAT_DIGITS", "0"}}).code == cli::kUsageError);
    CHECK(run({"primes", "norm", "--limit", "10"}, {{"BERGMAN_DEFAULT_GRID", "4x512"}}).code == cli::kUsageError);
    CHECK(run({"--config", "/nonexistent/bergman.conf", "primes", "norm", "--limit", "10"}).code ==
          cli::kUsageError);

    {
        std::ofstream cfg(path);
        cfg << "no_such_key = 1\n";
    }
    CHECK(run({"--config", path.string(), "primes", "norm", "--limit", "10"}).code == cli::kUsageError);
    std::filesystem::remove(path);
}

TEST_CASE("sieve cache is written and reused")
{
    const auto path = std::filesystem::temp_directory_path() / "bergman_test_sieve_cache.txt";
    std::filesystem::remove(path);
    const std::map<std::string, std::string> env{{"BERGMAN_SIEVE_CACHE_PATH", path.string()}};
    const Result first = run({"primes", "norm", "--limit", "500"}, env);
    CHECK(first.code == cli::kOk);
    CHECK(std::filesystem::exists(path));
    CHECK(load_prime_set(path).limit() >= 500);
    const Result second = run({"primes", "norm", "--limit", "500"}, env);
    CHECK(second.out == first.out);
    std::filesystem::remove(path);
}

TEST_CASE("RunConfig validation")
{
    RunConfig c;
    c.validate();
    c.set("float_digits", "30");
    c.validate();
    CHECK_THROWS_AS(c.set("float_digits", "x"), std::invalid_argument);
    c.float_digits = 31;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.float_digits = 10;
    c.default_grid = QuadratureGrid{8, 7};
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    CHECK(parse_output_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}
