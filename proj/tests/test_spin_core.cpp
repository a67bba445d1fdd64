#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.hpp"
#include "spinlab/spin_core.hpp"

using namespace spinlab;

static Hypergraph single_edge(int k) {
    Hypergraph h(k);
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = i;
    h.add_edge(e);
    return h;
}

TEST_CASE("configuration weight") {
    auto nae = fn_nae(3);
    auto h = single_edge(3);
    CHECK(weight(nae, h, 0b010) == 1);  // one spin-1 vertex
    CHECK(weight(nae, h, 0b000) == 0);
    Hypergraph h2(4);
    h2.add_edge({0, 1, 2});
    h2.add_edge({1, 2, 3});
    CHECK(weight(fn_weak_is(3), h2, 0b1111) == 0);
    CHECK_THROWS_AS(weight(fn_nae(4), h, 0), ArityMismatch);
}

TEST_CASE("partition function on small instances") {
    CHECK(partition_function(fn_weak_is(3), single_edge(3)) == 7);
    CHECK(partition_function(fn_nae(3), single_edge(3)) == 6);
    Hypergraph fig1(4);
    fig1.add_edge({0, 2, 3});
    fig1.add_edge({1, 2, 3});
    CHECK(partition_function(fn_nae(3), fig1) == 10);
    Hypergraph empty(5);
    CHECK(partition_function(fn_nae(3), empty) == 32);
}

TEST_CASE("enumeration cap") {
    Hypergraph big(20);
    big.add_edge({0, 1, 2});
    EnumOptions o;
    o.cap = 10;
    CHECK_THROWS_AS(partition_function(fn_nae(3), big, o), CapExceeded);
    o.cap = 20;
    CHECK(partition_function(fn_nae(3), big, o) == Rat(6) * rat_pow(Rat(2), 17));
}

TEST_CASE("marginals") {
    Hypergraph fig1(4);
    fig1.add_edge({0, 2, 3});
    fig1.add_edge({1, 2, 3});
    auto t = marginal(fn_nae(3), fig1, {0, 1});
    CHECK(t.at(0b00) == Rat(3, 10));
    CHECK(t.at(0b01) == Rat(2, 10));
    CHECK(t.at(0b10) == Rat(2, 10));
    CHECK(t.at(0b11) == Rat(3, 10));

    AdmissibleCollection pin_last;
    pin_last.pin0 = {2};
    auto u = marginal(fn_weak_is(3), single_edge(3), {0, 1}, pin_last);
    for (unsigned tau = 0; tau < 4; ++tau) CHECK(u.at(tau) == Rat(1, 4));

    // Self-dual single-vertex marginal is exactly 1/2.
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        auto f = random_self_dual_fn(rng, 3);
        auto h = random_hypergraph(rng, 6, 3, 4);
        if (partition_function(f, h) == 0) continue;
        auto m = marginal(f, h, {0});
        CHECK(m.at(0) == Rat(1, 2));
        CHECK(m.at(1) == Rat(1, 2));
    }
}

TEST_CASE("conditioning overlap and admissibility") {
    auto nae = fn_nae(3);
    auto h = single_edge(3);
    AdmissibleCollection all0;
    all0.pin0 = {0, 1, 2};
    CHECK_FALSE(is_admissible(nae, h, all0));
    CHECK(is_admissible(fn_weak_is(3), h, all0));
    AdmissibleCollection eq3;
    eq3.eq_blocks = {{0, 1, 2}};
    CHECK(is_admissible(fn_eq(3), h, eq3));
    CHECK_THROWS_AS(marginal(nae, h, {0}, all0), NotAdmissible);

    // Overlapping subject and conditioning: pinned outcomes get probability 0.
    AdmissibleCollection pin0v;
    pin0v.pin0 = {0};
    auto m = marginal(nae, h, {0, 1}, pin0v);
    CHECK(m.at(0b01) == 0);
    CHECK(m.at(0b11) == 0);
    CHECK(m.at(0b00) + m.at(0b10) == 1);
}

TEST_CASE("disjointness and block validation") {
    AdmissibleCollection bad;
    bad.pin0 = {0};
    bad.pin1 = {0};
    CHECK_THROWS_AS(bad.validate(3), PreconditionViolated);
    AdmissibleCollection singleton;
    singleton.eq_blocks = {{1}};
    CHECK_THROWS_AS(singleton.validate(3), PreconditionViolated);
}

TEST_CASE("easy partition closed forms") {
    Hypergraph h10(10);
    h10.add_edge({0, 1, 2});
    CHECK(easy_partition(fn_one(3), h10) == 1024);
    CHECK(easy_partition(fn_even(3), single_edge(3)) == 4);
    Hypergraph fig1(4);
    fig1.add_edge({0, 2, 3});
    fig1.add_edge({1, 2, 3});
    CHECK(easy_partition(fn_eq(3), fig1) == 2);
    CHECK(easy_partition(fn_zero(3), fig1) == 0);
    CHECK(easy_partition(fn_all_zero(3), h10) == 128);  // 7 isolated vertices
    CHECK_THROWS_AS(easy_partition(fn_nae(3), fig1), NotEasy);
}

TEST_CASE("easy partition matches brute force") {
    std::mt19937 rng(11);
    auto fns = {fn_zero(3), fn_one(3), fn_all_zero(3), fn_all_one(3),
                fn_eq(3),   fn_even(3), fn_odd(3)};
    for (int it = 0; it < 30; ++it) {
        auto h = random_hypergraph(rng, 8, 3, 5);
        for (const auto& f : fns) CHECK(easy_partition(f, h) == partition_function(f, h));
    }
}

TEST_CASE("complement symmetry of self-dual marginal tables") {
    std::mt19937 rng(13);
    for (int it = 0; it < 25; ++it) {
        auto f = random_self_dual_fn(rng, 4);
        auto h = random_hypergraph(rng, 7, 4, 4);
        if (partition_function(f, h) == 0) continue;
        auto m = marginal(f, h, {0, 1, 2});
        for (unsigned tau = 0; tau < 8; ++tau) CHECK(m.at(tau) == m.at(7 - tau));
    }
}

TEST_CASE("marginal monotone consistency") {
    std::mt19937 rng(17);
    for (int it = 0; it < 20; ++it) {
        auto f = random_rational_fn(rng, 3);
        auto h = random_hypergraph(rng, 6, 3, 4);
        if (partition_function(f, h) == 0) continue;
        auto small = marginal(f, h, {1, 3});
        auto large = marginal(f, h, {1, 3, 4});
        // subject sorted {1,3,4}: bit 2 is vertex 4
        for (unsigned tau = 0; tau < 4; ++tau)
            CHECK(small.at(tau) == large.at(tau) + large.at(tau | 4));
    }
}

TEST_CASE("shard determinism") {
    std::mt19937 rng(19);
    for (int it = 0; it < 10; ++it) {
        auto f = random_rational_fn(rng, 3);
        auto h = random_hypergraph(rng, 8, 3, 5);
        EnumOptions one, three, seven;
        three.shards = 3;
        seven.shards = 7;
        auto a = conditional_sums(f, h, {}, {0, 1}, one);
        auto b = conditional_sums(f, h, {}, {0, 1}, three);
        auto c = conditional_sums(f, h, {}, {0, 1}, seven);
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("complete hypergraph and set semantics") {
    auto k53 = complete_hypergraph(5, 3);
    CHECK(k53.edges.size() == 10);
    CHECK(k53.max_degree() == 6);
    Hypergraph h(4);
    h.add_edge({2, 0, 1});
    h.add_edge({0, 1, 2});
    CHECK(h.edges.size() == 1);
    CHECK_THROWS_AS(h.add_edge({0, 1, 1}), PreconditionViolated);
    CHECK_THROWS_AS(h.add_edge({0, 1, 4}), PreconditionViolated);
}
