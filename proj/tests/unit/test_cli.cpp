#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "eigenprime/cli.hpp"

using namespace eigenprime::cli;

namespace {

struct Result {
    int status = 0;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "eigenprime");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    const ParseOutcome parsed = parse_args(static_cast<int>(argv.size()), argv.data(), 1);
    if (!parsed.config) return {parsed.exit_code, "", parsed.message};
    std::ostringstream out, err;
    const int status = run(*parsed.config, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("count") {
    const auto r = invoke({"count", "--n", "10", "--what", "surface"});
    CHECK(r.status == 0);
    CHECK(r.out == "{\"N\":10,\"xs\":4,\"ys\":5}\n");
    const auto both = invoke({"count", "--n", "50", "--method", "both"});
    CHECK(both.status == 0);
    CHECK(both.out.find("\"agree\":true") != std::string::npos);
}

TEST_CASE("large integers become strings") {
    const auto r = invoke({"count", "--n", "300000", "--what", "box"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"y_plus\":\"") != std::string::npos);
}

TEST_CASE("constants") {
    const auto r = invoke({"constants"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"three_zeta3\":3.60617") != std::string::npos);
    const auto csv = invoke({"constants", "--format", "csv"});
    CHECK(csv.out.rfind("name,value\n", 0) == 0);
}

TEST_CASE("sweep csv schema") {
    const auto r = invoke({"sweep", "--ns", "1,10,100", "--what", "box", "--format", "csv"});
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string header, first;
    std::getline(lines, header);
    std::getline(lines, first);
    CHECK(header == "N,x_plus,y_plus,xs,ys,p_plus,p_s,ratio,p_plus_logN,p_s_logN");
    CHECK(first == "1,0,1,0,1,0,0,,0,0");
    CHECK(r.out.find('\r') == std::string::npos);
    const auto with_plane = invoke({"sweep", "--from", "10", "--to", "1000", "--factor", "10", "--format", "csv"});
    CHECK(with_plane.out.rfind("N,x_plus,y_plus,xs,ys,p_plus,p_s,ratio,p_plus_logN,p_s_logN,xa,ya,plane_ratio\n", 0) ==
          0);
    CHECK(std::count(with_plane.out.begin(), with_plane.out.end(), '\n') == 4);
}

TEST_CASE("sweep json is an array") {
    const auto r = invoke({"sweep", "--ns", "10"});
    CHECK(r.status == 0);
    CHECK(r.out.front() == '[');
}

TEST_CASE("verify") {
    const auto r = invoke({"verify", "--max-n", "40"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"pass\":false") == std::string::npos);
    CHECK(invoke({"verify", "--max-n", "301"}).status == 2);
}

TEST_CASE("regions") {
    const auto r = invoke({"regions", "--m", "10", "--k1", "1", "--k2", "-1", "--mod3", "--method", "both"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"total\":16,\"mod3_distinct\":12,\"mod3_equal\":4") != std::string::npos);
    CHECK(r.out.find("\"agree\":true") != std::string::npos);
    const auto box = invoke({"regions", "--m", "4", "--p", "2"});
    CHECK(box.out.find("\"count\":8") != std::string::npos);
    CHECK(invoke({"regions", "--m", "4", "--p", "4"}).status == 2);
    CHECK(invoke({"regions", "--m", "10", "--k1", "1/0", "--k2", "-1"}).status == 2);
    CHECK(invoke({"regions", "--m", "10", "--k1", "1", "--k2", "2"}).status == 2);
}

TEST_CASE("classify enumerate charpoly") {
    const auto c = invoke({"classify", "--triple", "3,7,8"});
    CHECK(c.out == "{\"z0\":3,\"z1\":7,\"z2\":8,\"delta\":4,\"m\":2,\"n\":1}\n");
    CHECK(invoke({"classify", "--triple", "5,0,6"}).status == 2);
    CHECK(invoke({"classify", "--triple", "5,6"}).status == 2);
    const auto e = invoke({"enumerate", "--n", "10", "--format", "csv"});
    CHECK(e.out == "delta,m,n,z0,z1,z2\n0,,,1,1,1\n1,2,1,8,7,5\n2,2,1,5,7,8\n3,2,1,8,7,3\n4,2,1,3,7,8\n");
    const auto p = invoke({"charpoly"});
    CHECK(p.out.find("\"c02\":-1.0") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"count"}).status == 2);
    CHECK(invoke({"count", "--n", "0"}).status == 2);
    CHECK(invoke({"count", "--n", "10", "--method", "slow"}).status == 2);
    CHECK(invoke({"count", "--n", "10", "--threads", "0"}).status == 2);
    CHECK(invoke({"sweep", "--ns", "10,5"}).status == 2);
    CHECK(invoke({"sweep", "--ns", "10", "--from", "1"}).status == 2);
    CHECK(invoke({"count", "--n", "20000000", "--what", "box"}).status == 2);
    CHECK(invoke({"bogus"}).status == 2);
}

TEST_CASE("output files are reproducible") {
    const std::string a = "eigenprime_cli_test_a.csv", b = "eigenprime_cli_test_b.csv";
    CHECK(invoke({"sweep", "--ns", "10,1000,50000", "--threads", "3", "--format", "csv", "--out", a}).status == 0);
    CHECK(invoke({"sweep", "--ns", "10,1000,50000", "--threads", "3", "--format", "csv", "--out", b}).status == 0);
    const std::string first = slurp(a);
    CHECK_FALSE(first.empty());
    CHECK(first == slurp(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}
