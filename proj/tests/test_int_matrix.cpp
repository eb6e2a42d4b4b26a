#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "latext/int_matrix.hpp"

using namespace latext;

TEST_CASE("parse and format round trip") {
    std::string text = "2 3\n1 -2 3\n0 5 -6\n";
    IntMatrix m = parse_matrix(text);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.at(0, 1) == -2);
    CHECK(m.at(1, 2) == -6);
    CHECK(format_matrix(m) == text);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3\n"), Error);
    CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n3 4 5\n"), Error);
    CHECK_THROWS_AS(parse_matrix("1 1\nx\n"), Error);
    CHECK_THROWS_AS(parse_matrix(""), Error);
    CHECK_THROWS_AS(parse_matrix("0 3\n"), Error);
}

TEST_CASE("multiply against hand result") {
    IntMatrix a = parse_matrix("2 2\n1 2\n3 4\n");
    IntMatrix b = parse_matrix("2 2\n5 6\n7 8\n");
    IntMatrix c = a.mul(b);
    CHECK(c.at(0, 0) == 19);
    CHECK(c.at(0, 1) == 22);
    CHECK(c.at(1, 0) == 43);
    CHECK(c.at(1, 1) == 50);
}

TEST_CASE("select_cols and select_rows use 1-based indices") {
    IntMatrix m = parse_matrix("3 3\n1 2 3\n4 5 6\n7 8 9\n");
    IntMatrix s = m.select_cols({1, 3});
    CHECK(s.cols() == 2);
    CHECK(s.at(1, 1) == 6);
    IntMatrix r = m.select_rows({2});
    CHECK(r.rows() == 1);
    CHECK(r.at(0, 0) == 4);
}

TEST_CASE("index subsets enumerate in lexicographic order") {
    auto subs = index_subsets(4, 2);
    REQUIRE(subs.size() == 6);
    CHECK(subs.front().idx == std::vector<int>{1, 2});
    CHECK(subs[1].idx == std::vector<int>{1, 3});
    CHECK(subs.back().idx == std::vector<int>{3, 4});
    CHECK(binomial(4, 2) == 6);
    CHECK(subs.front().complement(4).idx == std::vector<int>{3, 4});
    CHECK(subs.front().sum() == 3);
}

TEST_CASE("subset constructor validates") {
    CHECK_THROWS_AS(IndexSubset({2, 1}), Error);
    CHECK_THROWS_AS(IndexSubset({1, 1}), Error);
    CHECK_THROWS_AS(IndexSubset({0}), Error);
}
