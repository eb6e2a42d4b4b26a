#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LATEXT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int raw = pclose(pipe);
    return {WEXITSTATUS(raw), out};
}

std::string tmp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("farey series F_5") {
    auto r = run("farey series --n 5");
    CHECK(r.status == 0);
    CHECK(r.out == "0/1\n1/5\n1/4\n1/3\n2/5\n1/2\n3/5\n2/3\n3/4\n4/5\n1/1\n");
}

TEST_CASE("check-primitive reports the minor gcd") {
    auto path = tmp_file("diag22.txt", "2 2\n2 0\n0 2\n");
    auto r = run("check-primitive --matrix " + path);
    CHECK(r.status == 0);
    CHECK(r.out == "primitive=false gcd=4\n");

    auto p2 = tmp_file("e1.txt", "2 1\n1\n0\n");
    auto r2 = run("check-primitive --matrix " + p2);
    CHECK(r2.status == 0);
    CHECK(r2.out == "primitive=true\n");
}

TEST_CASE("sweep CSV for the first unit vector") {
    auto path = tmp_file("e1_sweep.txt", "2 1\n1\n0\n");
    auto r = run("sweep --matrix " + path + " --t-list 10,20");
    CHECK(r.status == 0);
    CHECK(r.out.find("T,count,lower,upper,asym_num,asym_den,ratio,fitted_exponent\n") == 0);
    CHECK(r.out.find("10,42,34,46,40,1,") != std::string::npos);
    CHECK(r.out.find("20,82,74,86,80,1,") != std::string::npos);
}

TEST_CASE("sweep CSV is byte-identical across thread counts") {
    auto path = tmp_file("e1_threads.txt", "2 1\n1\n0\n");
    auto r1 = run("sweep --matrix " + path + " --t-list 15,30,60");
    auto r4 = run("sweep --matrix " + path + " --t-list 15,30,60 --threads 4");
    CHECK(r1.status == 0);
    CHECK(r4.status == 0);
    CHECK(r1.out == r4.out);
}

TEST_CASE("slice-count count and enumerate modes") {
    auto r = run("slice-count --coeffs 2,3 --b 1 --t 4");
    CHECK(r.status == 0);
    CHECK(r.out.find("count=3\n") == 0);
    CHECK(r.out.find("lower=") != std::string::npos);
    CHECK(r.out.find("upper=") != std::string::npos);

    auto e = run("slice-count --coeffs 2,3 --b 1 --t 4 --enumerate");
    CHECK(e.status == 0);
    CHECK(e.out == "-4 3\n-1 1\n2 -1\n");

    auto small = run("slice-count --coeffs 2,3 --b 100 --t 1");
    CHECK(small.status == 0);
    CHECK(small.out.find("lower=undefined") != std::string::npos);
}

TEST_CASE("count-ext matches the sweep counts") {
    auto path = tmp_file("e1_ce.txt", "2 1\n1\n0\n");
    auto r = run("count-ext --matrix " + path + " --t 10");
    CHECK(r.status == 0);
    CHECK(r.out.find("count=42\n") == 0);

    auto e = run("count-ext --matrix " + path + " --t 1 --enumerate");
    CHECK(e.status == 0);
    CHECK(e.out == "-1 -1\n-1 1\n0 -1\n0 1\n1 -1\n1 1\n");
}

TEST_CASE("count-primext for a deficient collection") {
    auto path = tmp_file("e1_z3.txt", "3 1\n1\n0\n0\n");
    auto r = run("count-primext --matrix " + path + " --t 1");
    CHECK(r.status == 0);
    CHECK(r.out == "count=24\n");
}

TEST_CASE("lattice count-ext agrees with the ambient count on the identity") {
    auto u = tmp_file("id2.txt", "2 2\n1 0\n0 1\n");
    auto a = tmp_file("e1_lat.txt", "2 1\n1\n0\n");
    auto r = run("lattice count-ext --basis " + u + " --matrix " + a + " --t 10");
    CHECK(r.status == 0);
    CHECK(r.out == "count=42\n");
}

TEST_CASE("complete-basis emits a matrix in the file format") {
    auto path = tmp_file("v235.txt", "3 1\n2\n3\n5\n");
    auto r = run("complete-basis --matrix " + path);
    CHECK(r.status == 0);
    CHECK(r.out.find("3 3\n") == 0);
}

TEST_CASE("farey neighbors of 1/2 in F_7") {
    auto r = run("farey neighbors --frac 1/2 --n 7");
    CHECK(r.status == 0);
    CHECK(r.out == "left=3/7 right=4/7\n");

    auto end = run("farey neighbors --frac 0/1 --n 5");
    CHECK(end.status == 0);
    CHECK(end.out == "left=none right=1/5\n");
}

TEST_CASE("farey approx in both kinds") {
    std::string cf = "0,1,1,1,1,1,1,1,1,1,1,1,1,1";
    auto r = run("farey approx --cf " + cf + " --n 8");
    CHECK(r.status == 0);
    CHECK(r.out == "0/1\n1/1\n1/2\n2/3\n3/5\n5/8\n");

    auto d = run("farey approx --cf " + cf + " --n 2 --kind dirichlet");
    CHECK(d.status == 0);
    CHECK(d.out == "0/1\n1/1\n1/2\n");
}

TEST_CASE("farey density CSV") {
    std::string cf = "0,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1";
    auto r = run("farey density --cf " + cf + " --n-list 10,100");
    CHECK(r.status == 0);
    CHECK(r.out.find("n,count,ratio\n") == 0);
    CHECK(r.out.find("10,6,0.600000\n") != std::string::npos);
    CHECK(r.out.find("100,11,0.110000\n") != std::string::npos);
}

TEST_CASE("mlform eval and rep") {
    auto f = tmp_file("form.txt", "3 2\n1 2 : 1\n1 3 : 2\n2 3 : 3\n");
    auto r = run("mlform eval --form " + f + " --point 7,1,0");
    CHECK(r.status == 0);
    CHECK(r.out == "value=7\n");

    auto g = tmp_file("form235.txt", "3 2\n1 2 : 2\n1 3 : 3\n2 3 : 5\n");
    auto miss = run("mlform rep --form " + g + " --b 1 --k 2 --cap 100000");
    CHECK(miss.status == 0);
    CHECK(miss.out == "found=false definitive=true bound=100000\n");

    auto hit = run("mlform rep --form " + g + " --b 1 --k 3 --cap 100000");
    CHECK(hit.status == 0);
    CHECK(hit.out.find("found=true definitive=true") == 0);
    CHECK(hit.out.find("z=") != std::string::npos);
}

TEST_CASE("exit codes: domain 1, guard 2, parse 64") {
    auto sq = tmp_file("sq.txt", "2 2\n1 0\n0 1\n");
    auto dom = run("count-ext --matrix " + sq + " --t 5");
    CHECK(dom.status == 1);

    auto a = tmp_file("lat34.txt", "2 1\n3\n4\n");
    auto guard = run("lattice count-ext --basis " + sq + " --matrix " + a + " --t 1000000");
    CHECK(guard.status == 2);

    auto parse = run("definitely-not-a-subcommand");
    CHECK(parse.status == 64);

    auto missing = run("count-ext --t 5");
    CHECK(missing.status == 64);

    auto badt = run("slice-count --coeffs 2,3 --b 0 --t -1");
    CHECK(badt.status == 1);
}

TEST_CASE("LATEXT_THREADS env is honored") {
    auto path = tmp_file("e1_env.txt", "2 1\n1\n0\n");
    std::string cmd = std::string("LATEXT_THREADS=3 ") + LATEXT_BIN + " count-ext --matrix " +
                      path + " --t 10 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(out.find("count=42\n") == 0);
}
