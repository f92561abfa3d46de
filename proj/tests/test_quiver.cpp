#include <doctest.h>

#include "oracles.hpp"
#include "qmut/canonical.hpp"
#include "qmut/explorer.hpp"
#include "qmut/families.hpp"
#include "qmut/quiver.hpp"

using namespace qmut;

TEST_CASE("mutation of the one-arrow quiver reverses it") {
    WeightedQuiver q(2);
    q.set_arrows(0, 1, 1);
    WeightedQuiver m = mutate(q, 0);
    CHECK(m.arrows(1, 0) == 1);
    CHECK(mutate(m, 0) == q);
}

TEST_CASE("mutation is an involution across the T_{(2,2,2),(1,1,1)} class") {
    Budget b;
    auto g = enumerate_mutation_class(build_tnw(parse_signature("T:2,2,2/1,1,1")), b);
    for (const auto& rep : g.reps)
        for (int k = 0; k < rep.n; ++k) CHECK(mutate(mutate(rep, k), k) == rep);
}

TEST_CASE("mutating a frozen node fails") {
    WeightedQuiver q(2);
    q.frozen[1] = 1;
    q.set_arrows(0, 1, 1);
    CHECK_THROWS_AS(mutate(q, 1), usage_error);
}

TEST_CASE("A_{2,1} single mutations fall into the two known classes") {
    // Q1: the 3-cycle with one double arrow (the T form)
    WeightedQuiver q1 = build_tnw(parse_signature("T:2/1"));
    std::vector<std::string> keys;
    keys.push_back(canonicalize(q1).encoding);
    keys.push_back(canonicalize(build_dynkin("A_{2,1}")).encoding);
    for (int k = 0; k < 3; ++k) {
        std::string enc = canonicalize(mutate(q1, k)).encoding;
        CHECK(std::find(keys.begin(), keys.end(), enc) != keys.end());
    }
}

TEST_CASE("quiver-level and matrix-level mutation agree") {
    SUBCASE("over a BFS of the T_{(3,3),(1,1)} class") {
        Budget b;
        auto g = enumerate_mutation_class(build_tnw(parse_signature("T:3,3/1,1")), b);
        for (const auto& rep : g.reps)
            for (int k = 0; k < rep.n; ++k) {
                ExchangeMatrix direct = exchange_matrix(mutate(rep, k));
                ExchangeMatrix via = mutate_matrix(exchange_matrix(rep), k);
                CHECK(direct.eps == via.eps);
                CHECK(quiver_of_matrix(via) == mutate(rep, k));
            }
    }
    SUBCASE("at a single T_{(2),(1)} seed") {
        WeightedQuiver q = build_tnw(parse_signature("T:2/1"));
        CHECK(exchange_matrix(mutate(q, 0)).eps == mutate_matrix(exchange_matrix(q), 0).eps);
    }
    SUBCASE("sign flip example") {
        WeightedQuiver q(2);
        q.set_arrows(0, 1, 1);
        ExchangeMatrix m = mutate_matrix(exchange_matrix(q), 0);
        CHECK(m.at(0, 1) == -1);
        CHECK(m.at(1, 0) == 1);
    }
}

TEST_CASE("exchange matrices are skew-symmetrizable along random walks") {
    std::mt19937 rng(12345);
    WeightedQuiver q = build_tnw(parse_signature("T:3,2/2,1"));
    for (int step = 0; step < 100; ++step) {
        q = mutate(q, oracle::random_mutable(q, rng));
        CHECK(is_skew_symmetrizable(exchange_matrix(q)));
    }
}

TEST_CASE("weighted B2-style exchange matrix") {
    WeightedQuiver q(2);
    q.weight[1] = 2;
    q.set_arrows(0, 1, 1);
    ExchangeMatrix m = exchange_matrix(q);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(1, 0) == -1);
    // weight-1 quivers have eps = e
    WeightedQuiver p(3);
    p.set_arrows(0, 1, 2);
    p.set_arrows(2, 1, 1);
    ExchangeMatrix mp = exchange_matrix(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(mp.at(i, j) == p.arrows(i, j));
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(99);
    WeightedQuiver q = oracle::random_quiver(8, rng);
    CanonicalForm base = canonicalize(q);
    for (int t = 0; t < 200; ++t) {
        Perm p = oracle::random_perm(8, rng);
        CHECK(canonicalize(apply_perm(q, p)).encoding == base.encoding);
    }
}

TEST_CASE("the two A_{2,1} classes have distinct canonical encodings") {
    WeightedQuiver q1 = build_tnw(parse_signature("T:2/1"));
    WeightedQuiver q2 = build_dynkin("A_{2,1}");
    CHECK(canonicalize(q1).encoding != canonicalize(q2).encoding);
}

TEST_CASE("canonical equality agrees with the all-permutations oracle") {
    Budget b;
    auto g = enumerate_mutation_class(build_tnw(parse_signature("T:2,2/1,2")), b);
    REQUIRE(g.size() >= 2);
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t c = a; c < g.size(); ++c) {
            if (g.reps[a].n > 7) continue;
            bool canon_eq = g.keys[a] == g.keys[c];
            bool oracle_eq = oracle::brute_force_isomorphism(g.reps[a], g.reps[c]).has_value();
            CHECK(canon_eq == oracle_eq);
        }
    // relabelings of one representative against another
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        const WeightedQuiver& rep = g.reps[t % g.size()];
        WeightedQuiver shuffled = apply_perm(rep, oracle::random_perm(rep.n, rng));
        CHECK(find_isomorphism(rep, shuffled).has_value());
        CHECK(oracle::brute_force_isomorphism(rep, shuffled).has_value());
    }
}

TEST_CASE("find_isomorphism") {
    WeightedQuiver q(2);
    q.set_arrows(0, 1, 1);
    SUBCASE("self isomorphism exists") {
        auto p = find_isomorphism(q, q);
        REQUIRE(p.has_value());
        CHECK(is_isomorphism(q, q, *p));
    }
    SUBCASE("mutated one-arrow quiver needs the swap") {
        auto p = find_isomorphism(q, mutate(q, 0));
        REQUIRE(p.has_value());
        CHECK((*p)[0] == 1);
        CHECK((*p)[1] == 0);
    }
    SUBCASE("weight mismatch has no isomorphism") {
        WeightedQuiver r = q;
        r.weight[0] = 2;
        CHECK(!find_isomorphism(q, r).has_value());
    }
}

TEST_CASE("automorphism group sizes") {
    CHECK(automorphism_group(build_tnw(parse_signature("T:2,2,2,2/1,1,1,1"))).size() == 24);
    CHECK(automorphism_group(build_tnw(parse_signature("T:3,3,2/1,1,1"))).size() == 2);
    CHECK(automorphism_group(build_tnw(parse_signature("T:4,3,2/1,1,1"))).size() == 1);
}

TEST_CASE("text quiver format") {
    SUBCASE("round trip") {
        std::mt19937 rng(3);
        for (int t = 0; t < 25; ++t) {
            WeightedQuiver q = oracle::random_quiver(6, rng);
            ParsedQuiver back = quiver_from_text(quiver_to_text(q));
            CHECK(back.q == q);
        }
    }
    SUBCASE("frame comment survives") {
        WeightedQuiver q(1);
        ParsedQuiver p = quiver_from_text(quiver_to_text(q, "principal"));
        CHECK(p.frame_kind == "principal");
    }
    SUBCASE("rejects self loops") {
        CHECK_THROWS_AS(quiver_from_text("quiver 2\nnode 0 weight 1\nnode 1 weight 1\n"
                                         "arrow 0 0 1\n"),
                        parse_error);
    }
    SUBCASE("rejects duplicate arrow pairs") {
        CHECK_THROWS_AS(quiver_from_text("quiver 2\nnode 0 weight 1\nnode 1 weight 1\n"
                                         "arrow 0 1 1\narrow 1 0 1\n"),
                        parse_error);
    }
    SUBCASE("rejects nonpositive multiplicity") {
        CHECK_THROWS_AS(quiver_from_text("quiver 2\nnode 0 weight 1\nnode 1 weight 1\n"
                                         "arrow 0 1 0\n"),
                        parse_error);
    }
    SUBCASE("frozen-frozen arrows are discarded") {
        ParsedQuiver p = quiver_from_text(
            "quiver 3\nnode 0 weight 1\nnode 1 weight 2 frozen\nnode 2 weight 1 frozen\n"
            "arrow 1 2 3\narrow 0 1 1\n");
        CHECK(p.q.arrows(1, 2) == 0);
        CHECK(p.q.arrows(0, 1) == 1);
    }
}
