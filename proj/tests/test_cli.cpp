#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "normeq/cli.hpp"
#include "normeq/matrix_io.hpp"

using namespace normeq;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "normeq");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (fs::temp_directory_path() / ("normeq_cli_" + name)).string();
}

std::string write(const std::string& name, const std::string& text)
{
    const std::string path = temp_path(name);
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string ex_real = R"({"field":"real","rows":2,"cols":2,"data":[[1,1],[-1,1]]})";
const std::string ex_complex = R"({"field":"complex","rows":2,"cols":2,"data":[[[1,0],[1,0]],[[-1,0],[1,0]]]})";

} // namespace

TEST_CASE("norm")
{
    const std::string f = write("ex_real.json", ex_real);
    Run r = cli({"norm", f, "inf", "1"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.rfind("2 exact-enumeration\n", 0) == 0);

    r = cli({"norm", f, "2", "2", "--json"});
    REQUIRE(r.code == exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("value").get<double>() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(j.at("certainty") == "exact-closed-form");

    const std::string c = write("ex_complex.json", ex_complex);
    r = cli({"norm", c, "inf", "1"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("lower-bound-estimate") != std::string::npos);
    CHECK(r.out.find("seed 0") != std::string::npos);
    CHECK(cli({"norm", c, "inf", "1", "--exact-only"}).code == exit_not_exact);
}

TEST_CASE("argument errors")
{
    const std::string f = write("ex_real.json", ex_real);
    CHECK(cli({"norm", f, "0.5", "2"}).code == exit_invalid);
    CHECK(cli({"norm", f, "2"}).code == exit_invalid);
    CHECK(cli({"norm", temp_path("missing.json"), "2", "2"}).code == exit_invalid);
    CHECK(cli({"bogus"}).code == exit_invalid);
    CHECK(cli({"check", f, "2", "2"}).code == exit_invalid);
    CHECK(cli({"check", f, "2", "2", "--class", "E_12"}).code == exit_invalid);
    const std::string bad = write("bad.json", R"({"field":"real","rows":2,"cols":2,"data":[1]})");
    CHECK(cli({"verify", bad}).code == exit_invalid);
    CHECK(cli({"--help"}).code == exit_ok);
}

TEST_CASE("check")
{
    const std::string c = write("ex_complex.json", ex_complex);
    const std::string f = write("ex_real.json", ex_real);
    Run r = cli({"check", c, "2", "2", "--class", "E_inf1"});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("yes") != std::string::npos);
    CHECK(cli({"check", f, "2", "2", "--class", "E_inf1"}).code == exit_no);

    r = cli({"check", c, "2", "2", "--rs", "inf,1", "--json"});
    CHECK(r.code == exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("member") == "yes");

    // boundary point r = p
    r = cli({"check", f, "2", "2", "--rs", "2,1"});
    CHECK(r.out.find("boundary") != std::string::npos);

    const std::string diag = write("diag.json", R"({"field":"real","rows":2,"cols":2,"data":[[3,0],[0,1]]})");
    CHECK(cli({"check", diag, "2", "2", "--class", "E_1inf"}).code == exit_ok);
    CHECK(cli({"check", diag, "2", "2", "--class", "E_11"}).code == exit_no);
}

TEST_CASE("sweep")
{
    const std::string f = write("ex_real.json", ex_real);
    const std::string out1 = temp_path("sweep1.csv");
    const std::string out2 = temp_path("sweep2.csv");
    REQUIRE(cli({"sweep", f, "2", "2", "--r-grid", "1,2,inf", "--s-grid", "1,2,inf", "-o", out1}).code == exit_ok);
    REQUIRE(cli({"sweep", f, "2", "2", "--r-grid", "1,2,inf", "--s-grid", "1,2,inf", "--out", out2}).code == exit_ok);
    const std::string csv = slurp(out1);
    CHECK(csv == slurp(out2));
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "r,s,norm_rs,factor,bound,ratio,certainty");
    int rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 9);
    CHECK(csv.find("\n1,1,") < csv.find("\n1,2,"));
    CHECK(cli({"sweep", f, "2", "2", "--r-grid", "1", "--s-grid", "1", "-o", "/nonexistent/dir/x.csv"}).code
          == exit_invalid);
}

TEST_CASE("generate")
{
    Run r = cli({"generate", "--kind", "hadamard", "--m", "4"});
    REQUIRE(r.code == exit_ok);
    const Matrix h = parse_matrix_json(r.out);
    CHECK(h.rows() == 4);
    CHECK(r.err.find("yes") != std::string::npos);

    r = cli({"generate", "--kind", "dft", "--m", "3"});
    CHECK(r.code == exit_ok);
    CHECK_FALSE(parse_matrix_json(r.out).is_real());

    const std::string out = temp_path("single.json");
    r = cli({"generate", "--kind", "single", "--m", "3", "--n", "3", "--i", "1", "--j", "1", "--rho", "2", "--p", "3",
             "--q", "2", "-o", out});
    CHECK(r.code == exit_ok);
    const Matrix s = read_matrix_file(out);
    CHECK(s(1, 1) == Scalar{2, 0});

    r = cli({"generate", "--kind", "tensor", "--c", "[[1,0],[0,1]]", "--b", "[1,-1]", "--field", "complex"});
    CHECK(r.code == exit_ok);

    r = cli({"generate", "--kind", "svd", "--class", "E_inf1", "--m", "3", "--n", "2", "--sigma", "2,1", "--seed",
             "5"});
    CHECK(r.code == exit_ok);
    const Matrix g = parse_matrix_json(r.out);
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 3);

    CHECK(cli({"generate", "--kind", "hadamard", "--m", "3"}).code == exit_invalid);
    CHECK(cli({"generate", "--kind", "svd", "--class", "E_11", "--m", "2", "--sigma", "1,2"}).code == exit_invalid);
    CHECK(cli({"generate", "--kind", "mystery"}).code == exit_invalid);
}

TEST_CASE("verify")
{
    const std::string f = write("ex_real.json", ex_real);
    Run r = cli({"verify", f});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    // a corrupted norm value must trip the battery
    r = cli({"verify", f, "--assert-norm", "2,2,3"});
    CHECK(r.code == exit_verify_failed);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("installed binary")
{
    const char* bin = std::getenv("NORMEQ_CLI");
    if (!bin)
        return;
    const std::string f = write("ex_real.json", ex_real);
    const std::string out = temp_path("bin_out.txt");
    const std::string base = std::string("\"") + bin + "\" ";
    const auto status = [&](const std::string& args) {
        const int raw = std::system((base + args + " > \"" + out + "\" 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status("norm \"" + f + "\" inf 1") == 0);
    CHECK(slurp(out).rfind("2 exact-enumeration", 0) == 0);
    CHECK(status("check \"" + f + "\" 2 2 --class E_inf1") == 3);
    CHECK(status("norm \"" + f + "\" nope 1") == 1);
}
