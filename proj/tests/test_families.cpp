#include <doctest.h>

#include "qmut/canonical.hpp"
#include "qmut/counting.hpp"
#include "qmut/explorer.hpp"
#include "qmut/families.hpp"

using namespace qmut;

TEST_CASE("T quiver construction") {
    SUBCASE("no tails gives the double edge") {
        WeightedQuiver q = build_tnw(parse_signature("T:"));
        CHECK(q.n == 2);
        CHECK(q.arrows(1, 0) == 2);
    }
    SUBCASE("rank formula") {
        for (const char* s : {"T:2/1", "T:5,3,2/1,1,1", "T:4,2/2,1", "T:2,2,2,2/1,1,1,1"}) {
            TnwSignature sig = parse_signature(s);
            int expect = 2;
            for (int ni : sig.n) expect += ni - 1;
            CHECK(build_tnw(sig).n == expect);
            CHECK(sig.rank() == expect);
        }
    }
    SUBCASE("the D~4 class contains the star Dynkin orientation") {
        Budget b;
        auto g1 = enumerate_mutation_class(build_tnw(parse_signature("T:2,2,2/1,1,1")), b);
        auto g2 = enumerate_mutation_class(build_dynkin("aff:D_4"), b);
        CHECK(g1.keys == g2.keys);
    }
}

TEST_CASE("BC quiver construction") {
    SUBCASE("chi of the BC catalog") {
        TnwSignature s22;
        s22.bc = true;
        s22.n = {2, 2};
        CHECK(chi(s22) == 0);
        TnwSignature s2;
        s2.bc = true;
        s2.n = {2};
        CHECK(chi(s2) == Rat(1, 2));
    }
    SUBCASE("mutation class contains the triangle-with-chain quiver") {
        Budget b;
        for (int n : {2, 3}) {
            TnwSignature s;
            s.bc = true;
            s.n = {n};
            auto g1 = enumerate_mutation_class(build_tbc(s.n), b);
            auto g2 = enumerate_mutation_class(build_dynkin("BCaff_" + std::to_string(n)), b);
            CHECK(g1.keys == g2.keys);
        }
    }
}

TEST_CASE("chi values") {
    CHECK(chi(parse_signature("T:2,2,2/1,1,1")) == Rat(1, 2));
    CHECK(chi(parse_signature("T:6,3,2/1,1,1")) == 0);
    CHECK(chi(parse_signature("T:2/4")) == 0);
    CHECK(chi(parse_signature("T:7,3,2/1,1,1")) < 0);
    // chi is preserved by splitting a weight-w tail into w weight-1 tails
    CHECK(chi(parse_signature("T:3,2/1,2")) == chi(parse_signature("T:3,2,2/1,1,1")));
    CHECK(chi(parse_signature("T:2/3")) == chi(parse_signature("T:2,2,2/1,1,1")));
}

TEST_CASE("classification against the catalogs") {
    CHECK(classify(parse_signature("T:5,3,2/1,1,1")).str() == "affine E~_8");
    CHECK(classify(parse_signature("T:4,4,2/1,1,1")).str() == "doubly-extended E7^(1,1)");
    CHECK(classify(parse_signature("T:2/1")).str() == "affine A_{2,1}");
    CHECK(classify(parse_signature("T:3,3,3/1,1,1")).str() == "doubly-extended E6^(1,1)");
    CHECK(classify(parse_signature("T:9,9/1,1")).str() == "affine A_{9,9}");
    CHECK(classify(parse_signature("T:7,3,2/1,1,1")).family == Family::infinite_mutation);
    CHECK(classify(parse_signature("TBC:3")).str() == "affine BC~(4)_3");
    CHECK(classify(parse_signature("TBC:2,2")).str() == "doubly-extended BC2^(4,2)");
    CHECK(classify(parse_signature("T:4,2/2,1")).str() == "doubly-extended F4^(2,1)");
    CHECK(classify(parse_signature("T:3,2/2,1")).str() == "affine F~_4");
    CHECK(classify(parse_signature("T:2,2/1,2")).str() == "affine B~_3");
}

TEST_CASE("catalog completeness: every chi >= 0 signature classifies") {
    // exhaustive over n_i <= 12, m <= 6, w_i <= 4 using chi >= 0 pruning
    std::vector<std::pair<int, int>> tail_options;
    for (int n = 2; n <= 12; ++n)
        for (int w = 1; w <= 4; ++w) tail_options.push_back({n, w});
    long long tested = 0;
    // tails chosen in nondecreasing option order to enumerate multisets
    std::function<void(size_t, TnwSignature&, Rat)> rec = [&](size_t from, TnwSignature& sig,
                                                              Rat acc) {
        if (acc >= 0 && sig.tails() > 0) {
            ++tested;
            CHECK_NOTHROW(classify(sig));
            if (chi(sig) > 0) CHECK(!classify(sig).name.empty());
        }
        if (sig.tails() >= 6) return;
        for (size_t o = from; o < tail_options.size(); ++o) {
            auto [n, w] = tail_options[o];
            Rat term = Rat(w) * (Rat(1, n) - 1);
            if (acc + term < 0) continue;  // chi only decreases as tails grow
            sig.n.push_back(n);
            sig.w.push_back(w);
            rec(o, sig, acc + term);
            sig.n.pop_back();
            sig.w.pop_back();
        }
    };
    TnwSignature sig;
    Rat acc = 2;
    rec(0, sig, acc);
    CHECK(tested > 100);
    // BC variants
    for (int n = 2; n <= 12; ++n) {
        TnwSignature s;
        s.bc = true;
        s.n = {n};
        CHECK_NOTHROW(classify(s));
    }
    TnwSignature s22;
    s22.bc = true;
    s22.n = {2, 2};
    CHECK_NOTHROW(classify(s22));
}

TEST_CASE("special framing") {
    SUBCASE("counts for T_{(2),(1)}") {
        FramedQuiver fq = build_special_framing(parse_signature("T:2/1"));
        CHECK(fq.n == 3);
        CHECK(fq.frozen_count() == 2);
        Budget b;
        ExchangeComplex ec = enumerate_exchange(fq, b);
        CHECK(ec.size() == 4);  // = the affine cluster count of A_{2,1}
        CHECK(Rat(4) == affine_cluster_count(parse_signature("T:2/1")));
    }
    SUBCASE("frozen labels as specified") {
        FramedQuiver fq = build_special_framing(parse_signature("T:3,2/1,2"));
        // f_1 is weight 1 with N_1 -> f_1 -> N_inf
        int f1 = fq.n;
        CHECK(fq.full.weight[f1] == 1);
        CHECK(fq.full.arrows(0, f1) == 1);
        CHECK(fq.full.arrows(f1, 1) == 1);
    }
}

TEST_CASE("Dynkin quiver constructions") {
    CHECK(build_dynkin("A_2").arrows(0, 1) == 1);
    SUBCASE("A_{2,1} is acyclic and mutation-equivalent to T_{(2),(1)}") {
        WeightedQuiver q = build_dynkin("A_{2,1}");
        Budget b;
        auto g1 = enumerate_mutation_class(q, b);
        auto g2 = enumerate_mutation_class(build_tnw(parse_signature("T:2/1")), b);
        CHECK(g1.keys == g2.keys);
        CHECK(g1.size() == 2);
    }
    SUBCASE("affine G2 weights") {
        WeightedQuiver q = build_dynkin("aff:G_2");
        REQUIRE(q.n == 3);
        std::multiset<int> w(q.weight.begin(), q.weight.end());
        CHECK(w == std::multiset<int>{1, 1, 3});
    }
    SUBCASE("affine classes match their T quivers") {
        Budget b;
        for (auto [name, sig] : std::vector<std::pair<std::string, std::string>>{
                 {"aff:D_5", "T:3,2,2/1,1,1"},
                 {"aff:C_3", "T:3/2"},
                 {"aff:B_3", "T:2,2/1,2"},
                 {"aff:F_4", "T:3,2/2,1"},
                 {"aff:G_2", "T:2/3"},
                 {"aff:E_6", "T:3,3,2/1,1,1"}}) {
            auto g1 = enumerate_mutation_class(build_dynkin(name), b);
            auto g2 = enumerate_mutation_class(build_tnw(parse_signature(sig)), b);
            CHECK_MESSAGE(g1.keys == g2.keys, name);
        }
    }
}

TEST_CASE("folding") {
    SUBCASE("pairing the tails of T_{(2,2),(1,1)} gives T_{(2),(2)}") {
        WeightedQuiver q = build_tnw(parse_signature("T:2,2/1,1"));
        WeightedQuiver f = fold(q, {{0}, {1}, {2, 3}});
        CHECK(find_isomorphism(f, build_tnw(parse_signature("T:2/2"))).has_value());
    }
    SUBCASE("folding all three tails of T_{(2,2,2),(1,1,1)} gives T_{(2),(3)}") {
        WeightedQuiver q = build_tnw(parse_signature("T:2,2,2/1,1,1"));
        WeightedQuiver f = fold(q, {{0}, {1}, {2, 3, 4}});
        CHECK(find_isomorphism(f, build_tnw(parse_signature("T:2/3"))).has_value());
    }
    SUBCASE("groups with internal arrows are rejected") {
        WeightedQuiver q = build_tnw(parse_signature("T:3/1"));
        CHECK_THROWS_AS(fold(q, {{0, 2}, {1}, {3}}), invalid_folding_error);
    }
    SUBCASE("group mutation commutes with fold on the tested foldings") {
        WeightedQuiver q = build_tnw(parse_signature("T:3,3/1,1"));
        std::vector<std::vector<int>> groups{{0}, {1}, {2, 4}, {3, 5}};
        WeightedQuiver folded = fold(q, groups);
        CHECK(find_isomorphism(folded, build_tnw(parse_signature("T:3/2"))).has_value());
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            WeightedQuiver lhs = mutate(folded, int(gi));
            WeightedQuiver rhs = fold(group_mutate(q, groups[gi]), groups);
            CHECK(lhs == rhs);
        }
        // one more layer deep
        WeightedQuiver q2 = group_mutate(q, groups[2]);
        WeightedQuiver f2 = mutate(folded, 2);
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            CHECK(mutate(f2, int(gi)) == fold(group_mutate(q2, groups[gi]), groups));
        }
    }
}

TEST_CASE("signature parsing and names") {
    CHECK(parse_signature("T:4,3,2/1,1,1").rank() == 8);
    CHECK(parse_signature("TBC:2,2").bc);
    CHECK_THROWS_AS(parse_signature("T:1/1"), parse_error);
    CHECK_THROWS_AS(parse_signature("X:2"), parse_error);
    CHECK(signature_of_name("aff:D_4")->str() == "T:2,2,2/1,1,1");
    CHECK(signature_of_name("A_{4,2}")->str() == "T:4,2/1,1");
    CHECK(signature_of_name("A_{3,1}")->str() == "T:3/1");
    CHECK(signature_of_name("dbl:E_8")->str() == "T:6,3,2/1,1,1");
    CHECK(!signature_of_name("nonsense").has_value());
}
