#include "primechain/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using primechain::cli::dispatch;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("pratt")
    {
        const Result r = run({"pratt", "--prime", "7"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["p"] == 7);
        CHECK(j["f"] == 4);
        CHECK(j["H"] == 3);
        CHECK(j["g"] == 2);
        CHECK(j["config"]["command"] == "pratt");
    }

    TEST_CASE("hist csv sums to pi(1e5)")
    {
        const Result r = run({"hist", "--limit", "100000", "--stat", "H", "--format", "csv"});
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::getline(in, line);
        CHECK(line.rfind("# config ", 0) == 0);
        std::getline(in, line);
        CHECK(line == "stat,value,count");
        unsigned long total = 0;
        while (std::getline(in, line)) {
            CHECK(line.rfind("H,", 0) == 0);
            total += std::stoul(line.substr(line.rfind(',') + 1));
        }
        CHECK(total == 9592);
    }

    TEST_CASE("output file and plot script")
    {
        const std::string data = "cli_test_hist.csv";
        const std::string plot = "cli_test_hist.gp";
        const Result r = run({"hist", "--limit", "1000", "--format", "csv", "-o", data, "--plot", plot});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream d(data), p(plot);
        CHECK(d.good());
        std::stringstream ps;
        ps << p.rdbuf();
        CHECK(ps.str().find(data) != std::string::npos);
        std::remove(data.c_str());
        std::remove(plot.c_str());
    }

    TEST_CASE("json keys are sorted and config is embedded")
    {
        const Result r = run({"singular", "--links", "2", "--pcut", "10000"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["k"] == 2);
        CHECK(j["config"]["links"] == std::vector<int>{2});
        CHECK(r.out.find("\"cutoff\"") < r.out.find("\"k\""));
        CHECK(r.out.find("\"tail_high\"") < r.out.find("\"value\""));
    }

    TEST_CASE("other commands")
    {
        CHECK(nlohmann::json::parse(run({"dickman", "--u", "2"}).out)["rho"] == doctest::Approx(0.3068528194));
        const auto sb = nlohmann::json::parse(run({"sift-bound", "--x", "1000", "--y", "3"}).out);
        CHECK(sb["r"] == 6);
        CHECK(sb.contains("s*"));
        CHECK(sb["R"].get<double>() < 1);
        const auto ch = nlohmann::json::parse(run({"chains", "--prime", "7", "--x", "10", "--list"}).out);
        CHECK(ch["total"] == 4);
        CHECK(ch["chains"].size() == 4);
    }

    TEST_CASE("usage errors exit 2")
    {
        CHECK(run({}).code == 2);
        CHECK(run({"pratt"}).code == 2);
        CHECK(run({"pratt", "--prime", "7", "--bogus"}).code == 2);
        CHECK(run({"pratt", "--prime", "seven"}).code == 2);
        CHECK(run({"hist", "--limit", "1"}).code == 2);
        CHECK(run({"brw", "median-bn", "--n", "5", "--reps", "10"}).code == 2);
        CHECK(run({"brw"}).code == 2);
        CHECK(run({"dickman", "--u", "25"}).code == 2);
        CHECK(run({"verify", "--suite", "nothing"}).code == 2);
        CHECK(run({"--help"}).code == 0);
    }

    TEST_CASE("library errors exit 1 with error json")
    {
        const Result r = run({"pratt", "--prime", "9"});
        CHECK(r.code == 1);
        const auto j = nlohmann::json::parse(r.err);
        CHECK(j["error"]["kind"] == "domain");
        const Result c = run({"chains", "--prime", "2", "--x", "1000000", "--max-chains", "10"});
        CHECK(c.code == 1);
        CHECK(nlohmann::json::parse(c.err)["error"]["kind"] == "capacity");
        const Result m = run({"brw", "median-bn", "--n", "5", "--reps", "100", "--cap", "1"});
        CHECK(m.code == 1);
    }

    TEST_CASE("determinism across runs and threads")
    {
        const std::vector<std::vector<std::string>> cmds{
            {"brw", "run", "--n", "3", "--cap", "3", "--reps", "1000", "--seed", "42", "--t", "1,2,3"},
            {"brw", "median-bn", "--n", "8", "--reps", "2000", "--seed", "42"},
            {"brw", "median-bn", "--n", "30", "--reps", "2000", "--seed", "42"},
            {"brw", "tails", "--n", "6", "--reps", "1000", "--seed", "42", "--format", "csv"},
            {"brw", "teps", "--eps", "0.05", "--reps", "500", "--seed", "42"},
            {"brw", "rde", "--pop", "1000", "--iters", "5", "--seed", "42"},
        };
        for (const auto& c : cmds) {
            auto a1 = c, a8 = c;
            a1.insert(a1.end(), {"--threads", "1"});
            a8.insert(a8.end(), {"--threads", "8"});
            const Result x = run(a1), y = run(a1), z = run(a8);
            REQUIRE(x.code == 0);
            CHECK(x.out == y.out);
            CHECK(x.out == z.out);
        }
        CHECK(run({"brw", "rde", "--pop", "1000", "--iters", "5", "--seed", "1"}).out !=
              run({"brw", "rde", "--pop", "1000", "--iters", "5", "--seed", "2"}).out);
    }

    TEST_CASE("thread count from the environment")
    {
        setenv(primechain::cli::kThreadsEnv, "3", 1);
        const Result a = run({"brw", "run", "--n", "2", "--cap", "2", "--reps", "300"});
        unsetenv(primechain::cli::kThreadsEnv);
        const Result b = run({"brw", "run", "--n", "2", "--cap", "2", "--reps", "300"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}
