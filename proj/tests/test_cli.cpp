#include "badic/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("badic");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = badic::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate emits the exact point CSV") {
    auto r = run_cli({"generate", "--base", "2", "--n", "1", "--pattern", "I"});
    CHECK(r.code == 0);
    CHECK(r.out == "x_num,y_num,den\n0,0,2\n1,1,2\n");
}

TEST_CASE("eval prints the exact rational") {
    auto r = run_cli({"eval", "--base", "2", "--n", "1", "--pattern", "I", "--x", "1/2", "--y", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/4\n");
    auto zero = run_cli({"eval", "--base", "2", "--n", "1", "--pattern", "I", "--x", "1", "--y", "1"});
    CHECK(zero.out == "0/1\n");
}

TEST_CASE("l2 reports parseval, warnock and the exact field") {
    auto r = run_cli({"l2", "--base", "2", "--n", "1", "--pattern", "I", "--exact"});
    CHECK(r.code == 0);
    CHECK(r.out.find("exact=91/576\n") != std::string::npos);
    CHECK(r.out.find("parseval=") != std::string::npos);
    CHECK(r.out.find("warnock=") != std::string::npos);
    CHECK(r.out.find("diff=") != std::string::npos);
}

TEST_CASE("coeff methods agree through the JSON surface") {
    std::vector<std::string> base = {"coeff", "--base", "2", "--n", "2", "--pattern", "IR",
                                     "--j1", "1", "--j2", "0", "--m1", "0", "--m2", "0",
                                     "--l1", "1", "--l2", "1"};
    auto fast = run_cli([&] { auto v = base; v.push_back("--method"); v.push_back("fast"); return v; }());
    auto oracle = run_cli([&] { auto v = base; v.push_back("--method"); v.push_back("oracle"); return v; }());
    CHECK(fast.code == 0);
    CHECK(oracle.code == 0);
    auto field = [](const std::string& s, const std::string& key) {
        auto pos = s.find("\"" + key + "\":");
        REQUIRE(pos != std::string::npos);
        pos += key.size() + 3;
        return std::stod(s.substr(pos));
    };
    CHECK(std::abs(field(fast.out, "re") - field(oracle.out, "re")) < 1e-12);
    CHECK(std::abs(field(fast.out, "im") - field(oracle.out, "im")) < 1e-12);
    CHECK(fast.out.find("\"regime\":\"Critical\"") != std::string::npos);

    auto exact = run_cli([&] { auto v = base; v.push_back("--exact"); return v; }());
    CHECK(exact.out.find("\"num_vec\":[") != std::string::npos);
    CHECK(exact.out.find("\"den_vec\":[") != std::string::npos);
}

TEST_CASE("coeffs-table enumerates all indices deterministically") {
    std::vector<std::string> args = {"coeffs-table", "--base", "2", "--n", "2",
                                     "--pattern", "II", "--jmax", "1"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // byte-identical reruns
    // per axis: 1 (level -1) + 1 (j=0) + 2 (j=1) = 4 indices, 16 lines
    long long lines = std::count(a.out.begin(), a.out.end(), '\n');
    CHECK(lines == 16);
    CHECK(a.out.find("\"regime\":\"Corner\"") != std::string::npos);
}

TEST_CASE("norm and scaling surfaces") {
    auto r = run_cli({"norm", "--base", "2", "--n", "3", "--pattern", "IRI", "--p", "2", "--q", "2",
                      "--r", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out.find("norm=") != std::string::npos);
    CHECK(r.out.find("tail_bound=") != std::string::npos);

    auto s = run_cli({"scaling", "--base", "2", "--nmin", "4", "--nmax", "6", "--p", "2", "--q", "2",
                      "--r", "0", "--pattern-rule", "balanced"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("n,N,norm,reference,ratio\n", 0) == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4);
}

TEST_CASE("integrate emits the error series") {
    auto r = run_cli({"integrate", "--f", "one", "--nmin", "2", "--nmax", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,N,estimate,exact,error\n", 0) == 0);
    // the constant integrand is exact at every n
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) CHECK(line.substr(line.rfind(',') + 1) == "0");
}

TEST_CASE("flag validation failures exit with code 2") {
    CHECK(run_cli({"generate", "--base", "2", "--pattern", "I"}).code == 2);       // missing --n
    CHECK(run_cli({"generate", "--base", "77", "--n", "1", "--pattern", "I"}).code == 2);
    CHECK(run_cli({"generate", "--base", "2", "--n", "3", "--pattern", "I"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"coeff", "--base", "2", "--n", "1", "--pattern", "I", "--j1", "0", "--j2", "0",
                   "--l1", "9"}).code == 2);
    CHECK(run_cli({"eval", "--base", "2", "--n", "1", "--pattern", "I", "--x", "3/2", "--y", "0"})
              .code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
