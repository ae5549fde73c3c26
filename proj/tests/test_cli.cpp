#include "weyltasep/cli.hpp"
#include "weyltasep/markov.hpp"
#include "weyltasep/models.hpp"
#include "weyltasep/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

using namespace wt;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "weyltasep");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell.
Run run_binary(const std::string& args, const std::string& env = "")
{
    const char* path = std::getenv("WEYLTASEP_CLI");
    REQUIRE(path != nullptr);
    std::string cmd = env + " \"" + path + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::string trim(std::string s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == ' '))
        s.pop_back();
    return s;
}

} // namespace

TEST_CASE("documented invocations")
{
    Run a = run_binary("limdir --kind D --n 4 --method closed");
    CHECK(a.code == 0);
    CHECK(trim(a.out) == "0, 5/58, 19/116, 1/4");

    Run b = run_binary("verify --suite identities --k-max 10");
    CHECK(b.code == 0);
    CHECK(b.out.find("FAIL") == std::string::npos);

    Run c = run_binary("partition --model b --n 4 --n0 1");
    CHECK(c.code == 0);
    CHECK(trim(c.out) == "56");

    Run d = run_binary("verify --suite tables");
    CHECK(d.code == 0);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run_binary("").code == 2);
    CHECK(run_binary("frobnicate").code == 2);
    CHECK(run_binary("limdir --kind Q --n 3").code == 2);
    CHECK(run_binary("partition --model b --n 4").code == 2);
    CHECK(run_binary("verify --suite nope").code == 2);
    CHECK(run_binary("stationary --model multi --kind B --n 3 --method magic").code == 2);
    CHECK(run_binary("--help").code == 0);
}

TEST_CASE("seed comes from the environment unless given")
{
    auto seed_of = [](const Run& r) { return Json::parse(r.out)["seed"].get<std::uint64_t>(); };
    CHECK(seed_of(run_binary("--format json partition --model d --n 4 --n0 2", "WEYLTASEP_SEED=99")) == 99);
    CHECK(seed_of(run_binary("--format json --seed 5 partition --model d --n 4 --n0 2", "WEYLTASEP_SEED=99")) == 5);
}

TEST_CASE("JSON output round-trips")
{
    Run r = run({"--format", "json", "stationary", "--model", "multi", "--kind", "B", "--n", "3"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["version"] == kVersion);
    CHECK(j["parameters"]["kind"] == "B");
    CHECK(j["parameters"]["n"] == 3);
    Dist got = dist_from_json(j["result"]["states"]);
    Dist want = exact_stationary(build_multi(WeylKind::B, 3));
    CHECK(got.states == want.states);
    CHECK(got.p == want.p);
    CHECK(Json::parse(j.dump()) == j);

    Run t = run({"--format", "json", "stationary", "--model", "dstar", "--n", "3", "--n0", "1", "--alpha-star", "0",
                 "--beta-star", "0"});
    REQUIRE(t.code == 0);
    Dist ds = dist_from_json(Json::parse(t.out)["result"]["states"]);
    CHECK(ds[State{kStar, 0, kStar}] == 1);
}

TEST_CASE("serialization helpers")
{
    CHECK(rational_json(Rational(3, 4)) == "3/4");
    CHECK(rational_json(Rational(-2)) == "-2");
    Json d = rational_json(Rational(1, 3), 4);
    CHECK(d["value"] == "1/3");
    CHECK(d["decimal"] == "0.3333");
    CHECK(rational_from_json(d) == Rational(1, 3));
    CHECK(rational_from_json(Json("5/10")) == Rational(1, 2));

    State s{kStar, -1, 0, kStar};
    Json js = state_json(s);
    CHECK(js.dump() == R"(["*",-1,0,"*"])");
    CHECK(state_from_json(js) == s);

    std::ostringstream csv;
    write_csv_row(csv, {"a", "b,c", "say \"hi\""});
    CHECK(csv.str() == "a,\"b,c\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("output formats")
{
    Run dec = run({"--decimal", "3", "partition", "--model", "semiperm", "--n", "3", "--n0", "1", "--alpha", "1/2",
                   "--beta", "1/2"});
    CHECK(dec.code == 0);
    CHECK(dec.out.find("(") != std::string::npos);

    Run csv = run({"--format", "csv", "limdir", "--kind", "C", "--table"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("3,5/58,19/116,1/4") != std::string::npos);

    Run tab = run({"corr", "--table"});
    CHECK(tab.code == 0);
    CHECK(tab.out.find("19/448") != std::string::npos);
    CHECK(tab.out.find("3/56") != std::string::npos);
    CHECK(tab.out.find("13/224") != std::string::npos);

    Run conj = run({"corr", "--kind", "B", "--n", "4", "--method", "closed"});
    CHECK(conj.code == 0);
    CHECK(conj.out.find("conjecture") != std::string::npos);

    Run sums = run({"--format", "json", "corr", "--kind", "D", "--n", "4", "--sums", "--method", "closed"});
    CHECK(sums.code == 0);
    CHECK(Json::parse(sums.out)["result"]["sums"].size() == 8);

    Run pair = run({"corr", "--kind", "B", "--n", "3", "--n0", "1", "--method", "closed"});
    CHECK(pair.code == 0);

    Run walk = run({"--format", "json", "walk", "--kind", "B", "--n", "2", "--steps", "20000", "--trials", "2"});
    CHECK(walk.code == 0);
    Json w = Json::parse(walk.out);
    CHECK(w["result"]["trials"].size() == 2);
    CHECK(w["result"].contains("cosine_vs_closed_form"));
    CHECK(w["result"].contains("acceptance_rate"));

    Run mc = run({"stationary", "--model", "two-species", "--kind", "B", "--n", "3", "--n0", "1", "--method", "mc",
                  "--steps", "2000"});
    CHECK(mc.code == 0);

    Run lam = run({"limdir", "--kind", "B", "--n", "3", "--method", "exact", "--normalize"});
    CHECK(lam.code == 0);
    CHECK(trim(lam.out) == "1/9, 1/3, 5/9");
}
