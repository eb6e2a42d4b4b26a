#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latext/multilinear.hpp"

using namespace latext;

namespace {

std::mt19937_64 rng(0x3117ULL);

MultilinearForm form_from(int n, int d, const std::vector<long>& cs) {
    auto subs = index_subsets(n, d);
    REQUIRE(subs.size() == cs.size());
    std::map<IndexSubset, Int> m;
    for (size_t i = 0; i < subs.size(); ++i) m.emplace(subs[i], Int(cs[i]));
    return MultilinearForm(n, d, std::move(m));
}

// x1x2 + 2x1x3 + 3x2x3
MultilinearForm sample_form() { return form_from(3, 2, {1, 2, 3}); }

// 2x1x2 + 3x1x3 + 5x2x3
MultilinearForm coprime_form() { return form_from(3, 2, {2, 3, 5}); }

std::vector<Int> pt(const std::vector<long>& v) {
    std::vector<Int> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

MultilinearForm random_form(int n, int d) {
    auto subs = index_subsets(n, d);
    for (;;) {
        std::map<IndexSubset, Int> m;
        Int g = 0;
        for (const auto& s : subs) {
            Int c = (long)(rng() % 19) - 9;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            m.emplace(s, c);
        }
        if (g != 1) continue;
        return MultilinearForm(n, d, std::move(m));
    }
}

}  // namespace

TEST_CASE("form validation") {
    CHECK_THROWS_AS(form_from(3, 2, {2, 4, 6}), DomainError);  // gcd 2
    CHECK_THROWS_AS(form_from(2, 2, {1}), DimensionError);     // d == n
    CHECK_THROWS_AS(MultilinearForm(3, 2, {}), DomainError);   // incomplete
}

TEST_CASE("evaluation") {
    auto f = sample_form();
    CHECK(evaluate(f, pt({7, 1, 0})) == 7);
    CHECK(evaluate(f, pt({0, 0, 0})) == 0);
    CHECK(evaluate(form_from(3, 2, {1, 1, 1}), pt({1, 1, 1})) == 3);
    CHECK_THROWS_AS(evaluate(f, pt({1, 2})), DimensionError);
}

TEST_CASE("evaluation is multilinear") {
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + (int)(rng() % 3);
        int d = 1 + (int)(rng() % (n - 1));
        auto f = random_form(n, d);
        std::vector<Int> a(n);
        for (auto& x : a) x = (long)(rng() % 11) - 5;
        int i = (int)(rng() % n);
        Int s = (long)(rng() % 9) - 4, t = (long)(rng() % 9) - 4;
        auto at = [&](const Int& v) {
            auto b = a;
            b[i] = v;
            return evaluate(f, b);
        };
        CHECK(at(s + t) == at(s) + at(t) - at(0));
    }
}

TEST_CASE("file format round trip") {
    auto f = sample_form();
    std::string text = format_mlform(f);
    CHECK(text == "3 2\n1 2 : 1\n1 3 : 2\n2 3 : 3\n");
    auto g = parse_mlform(text);
    CHECK(g.n == 3);
    CHECK(g.d == 2);
    CHECK(g.coeffs == f.coeffs);
    CHECK(g.norm == 3);
}

TEST_CASE("malformed form files are rejected") {
    CHECK_THROWS_AS(parse_mlform(""), Error);
    CHECK_THROWS_AS(parse_mlform("3\n"), Error);
    CHECK_THROWS_AS(parse_mlform("3 2\n1 2 : 1\n"), Error);                          // truncated
    CHECK_THROWS_AS(parse_mlform("3 2\n1 3 : 2\n1 2 : 1\n2 3 : 3\n"), Error);        // out of order
    CHECK_THROWS_AS(parse_mlform("3 2\n1 2 : 1\n1 3 : 2\n2 3 : 3\nx\n"), Error);     // trailing
    CHECK_THROWS_AS(parse_mlform("3 2\n1 2 : one\n1 3 : 2\n2 3 : 3\n"), Error);      // bad coeff
    CHECK_THROWS_AS(parse_mlform("3 2\n1 2 1\n1 3 : 2\n2 3 : 3\n"), Error);          // no colon
    CHECK_THROWS_AS(parse_mlform("3 2\n1 2 : 2\n1 3 : 4\n2 3 : 6\n"), DomainError);  // gcd 2
}

TEST_CASE("nu values") {
    CHECK(nu(1) == 2);
    CHECK(nu(2) == 5);
    CHECK(nu(3) == 16);
    CHECK_THROWS_AS(nu(0), DomainError);
}

TEST_CASE("sparse vector bookkeeping") {
    SparseVector v(pt({7, 1, 0}), 2);
    CHECK(v.support() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(SparseVector(pt({1, 1, 1}), 2), DomainError);
}

TEST_CASE("unit coefficient construction") {
    auto v = unit_coeff_representation(sample_form(), 7);
    CHECK(v.entries == pt({7, 1, 0}));
    CHECK(v.sparsity == 2);

    auto w = unit_coeff_representation(form_from(3, 2, {-1, 5, 0}), 4);
    CHECK(evaluate(form_from(3, 2, {-1, 5, 0}), w.entries) == 4);
    CHECK(w.support() == std::vector<int>{1, 2});
    CHECK(w.entries == pt({-4, 1, 0}));

    auto z = unit_coeff_representation(sample_form(), 0);
    CHECK(evaluate(sample_form(), z.entries) == 0);
    CHECK(z.entries == pt({0, 1, 0}));

    CHECK_THROWS_AS(unit_coeff_representation(coprime_form(), 1), DomainError);
}

TEST_CASE("unit coefficient construction across random forms") {
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + (int)(rng() % 3);
        int d = 1 + (int)(rng() % (n - 1));
        auto f = random_form(n, d);
        bool has_unit = false;
        for (const auto& [s, c] : f.coeffs) has_unit = has_unit || abs_int(c) == 1;
        if (!has_unit) continue;
        Int b = (long)(rng() % 101) - 50;
        auto v = unit_coeff_representation(f, b);
        CHECK(evaluate(f, v.entries) == b);
        CHECK(v.support().size() <= (size_t)d);
    }
}

TEST_CASE("two-sparse search fails definitively for the pairwise coprime form") {
    for (long b : {1L, -1L, 7L}) {
        auto r = sparse_search(coprime_form(), b, 2, 100000);
        CHECK(!r.found);
        CHECK(r.definitive);
    }
    CHECK(pairwise_coprime_nonunit(coprime_form()));
    CHECK(!pairwise_coprime_nonunit(sample_form()));
    CHECK(!pairwise_coprime_nonunit(form_from(3, 2, {0, 2, 3})));
    CHECK(!pairwise_coprime_nonunit(form_from(3, 2, {2, 4, 5})));
}

TEST_CASE("three-sparse search succeeds for the pairwise coprime form") {
    for (long b : {1L, -1L, 7L}) {
        auto r = sparse_search(coprime_form(), b, 3, 100000);
        REQUIRE(r.found);
        CHECK(r.definitive);
        CHECK(evaluate(coprime_form(), r.witness->entries) == b);
        CHECK(r.witness->support().size() <= 3);
    }
    auto r1 = sparse_search(coprime_form(), 1, 3, 100000);
    Int sup = 0;
    for (const auto& v : r1.witness->entries) sup = std::max(sup, abs_int(v));
    CHECK(sup == 5);  // smallest shell holding a witness
    auto r2 = sparse_search(coprime_form(), 1, 3, 100000);
    CHECK(r1.witness->entries == r2.witness->entries);
}

TEST_CASE("search honours the cap and reports non-definitive misses") {
    auto r = sparse_search(coprime_form(), 1, 3, 3);
    CHECK(!r.found);
    CHECK(!r.definitive);
    CHECK(r.bound == 3);
}

TEST_CASE("search handles zero targets and unit delegates") {
    auto r0 = sparse_search(coprime_form(), 0, 2, 10);
    REQUIRE(r0.found);
    CHECK(r0.witness->support().empty());

    auto f = sample_form();
    auto r = sparse_search(f, 12, 2, 100000);
    REQUIRE(r.found);
    CHECK(evaluate(f, r.witness->entries) == 12);
    CHECK(r.witness->support().size() <= 2);

    CHECK_THROWS_AS(sparse_search(f, 1, 0, 10), DomainError);
    CHECK_THROWS_AS(sparse_search(f, 1, 4, 10), DomainError);
}

TEST_CASE("search runs on forms with zero coefficients") {
    auto f = form_from(3, 2, {0, 2, 3});
    auto r = sparse_search(f, 6, 2, 1000);
    REQUIRE(r.found);
    CHECK(evaluate(f, r.witness->entries) == 6);
    // the {1,2} section is identically zero, so nothing represents 5 two-sparsely
    // except through the other coefficients
    auto r5 = sparse_search(f, 5, 2, 1000);
    CHECK(!r5.found);
}

TEST_CASE("annihilation counts") {
    CHECK(annihilation_count(4, 2, 3) == 3);
    CHECK(annihilation_count(4, 2, 4) == 0);
    CHECK(annihilation_count(5, 2, 2) == 9);
    CHECK(binomial(2, 2) == 1);
    CHECK_THROWS_AS(annihilation_count(4, 4, 2), DimensionError);
    CHECK_THROWS_AS(annihilation_count(4, 2, 5), DomainError);
}

TEST_CASE("zeroing outside a support kills the predicted monomial count") {
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + (int)(rng() % 4);
        int d = 1 + (int)(rng() % 3);
        if (d >= n) continue;
        int k = (int)(rng() % (n + 1));
        auto subs = index_subsets(n, d);
        long survive = 0;
        std::vector<bool> in(n + 1, false);
        auto ks = index_subsets(n, std::max(k, 0));
        const auto& pick = ks[rng() % ks.size()];
        for (int i : pick.idx) in[i] = true;
        for (const auto& s : subs) {
            bool alive = true;
            for (int i : s.idx) alive = alive && in[i];
            if (alive) ++survive;
        }
        CHECK(annihilation_count(n, d, k) == Int((long)subs.size() - survive));
    }
}
