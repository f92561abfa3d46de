#include <doctest.h>

#include "qmut/canonical.hpp"
#include "qmut/counting.hpp"
#include "qmut/explorer.hpp"
#include "qmut/tables.hpp"

using namespace qmut;

TEST_CASE("the A_{2,1} mutation graph") {
    Budget b;
    MutationClassGraph g = enumerate_mutation_class(build_dynkin("A_{2,1}"), b);
    REQUIRE(g.size() == 2);
    CHECK(g.status == ExploreStatus::complete);
    // directed: out-degree 3, two loops and one crossing edge per class
    for (size_t c = 0; c < 2; ++c) {
        int loops = 0, cross = 0;
        for (int k = 0; k < 3; ++k)
            (g.target[c][k] == int(c) ? loops : cross) += 1;
        CHECK(loops == 2);
        CHECK(cross == 1);
    }
    // undirected: one loop per class plus one connecting edge
    int loops = 0, cross = 0;
    for (const auto& ue : g.undirected) (ue.loop() ? loops : cross) += 1;
    CHECK(loops == 2);
    CHECK(cross == 1);
}

TEST_CASE("D4^(1,1) has four quiver isomorphism classes") {
    Budget b;
    auto g = enumerate_mutation_class(build_tnw(parse_signature("T:2,2,2,2/1,1,1,1")), b);
    CHECK(g.size() == 4);
}

TEST_CASE("generators of the modular group") {
    Budget b;
    SUBCASE("A_{2,1}: the two loop elements generate, path length within 2d+1") {
        MutationClassGraph g = enumerate_mutation_class(build_dynkin("A_{2,1}"), b);
        GeneratorSet gs = modular_group_generators(g);
        CHECK(gs.generators.size() == 2);
        for (const auto& e : gs.generators)
            CHECK(int(e.path.steps.size()) <= 2 * gs.tree_diameter + 1);
    }
    SUBCASE("T_{(2),(1)}: generated subgroup contains tau and gamma") {
        TnwSignature sig = parse_signature("T:2/1");
        MutationClassGraph g = enumerate_mutation_class(build_tnw(sig), b);
        GeneratorSet gs = modular_group_generators(g);
        REQUIRE(!gs.generators.empty());
        std::vector<GroupElement> targets{twist(sig, 0), gamma_element(sig)};
        for (const auto& target : targets) {
            // bounded word search over the generators
            std::vector<GroupElement> words{identity_element(g.seed)};
            std::vector<GroupElement> alphabet;
            for (const auto& e : gs.generators) {
                alphabet.push_back(e);
                alphabet.push_back(inverse(e));
            }
            bool found = false;
            for (size_t h = 0; h < words.size() && !found && words.size() < 2000; ++h) {
                if (elements_equal(words[h], target)) {
                    found = true;
                    break;
                }
                if (words[h].path.steps.size() > 8) continue;
                for (const auto& a : alphabet) words.push_back(compose(words[h], a, false));
            }
            CHECK(found);
        }
    }
}

TEST_CASE("exchange enumeration") {
    Budget b;
    SUBCASE("A_2 principal framing is the pentagon") {
        ExchangeComplex ec = enumerate_exchange(frame_principal(build_dynkin("A_2")), b);
        CHECK(ec.size() == 5);
        CHECK(ec.variable_count == 5);
        for (size_t v = 0; v < 5; ++v)
            for (int k = 0; k < 2; ++k) CHECK(ec.adj[v][k] >= 0);
    }
    SUBCASE("special framings reproduce the affine cluster counts") {
        for (const char* s : {"T:2/1", "T:2/2", "T:2/3", "T:3/2"}) {
            TnwSignature sig = parse_signature(s);
            ExchangeComplex ec = enumerate_exchange(build_special_framing(sig), b);
            CHECK(Rat(Int(ec.size())) == affine_cluster_count(sig));
        }
    }
    SUBCASE("serial and parallel enumerations agree") {
        FramedQuiver fq = build_special_framing(parse_signature("T:2,2,2/1,1,1"));
        ExchangeComplex par = enumerate_exchange(fq, b);
        ExchangeComplex ser = enumerate_exchange_serial(fq, b);
        CHECK(par.keys == ser.keys);
        CHECK(par.adj == ser.adj);
        CHECK(par.slot_var == ser.slot_var);
        CHECK(par.variable_count == ser.variable_count);
        MutationClassGraph gp = enumerate_mutation_class(fq.full, b);
        MutationClassGraph gsr = enumerate_mutation_class_serial(fq.full, b);
        CHECK(gp.keys == gsr.keys);
        CHECK(gp.target == gsr.target);
    }
    SUBCASE("vertex degree equals the rank and gluing yields Euler characteristic 2") {
        ExchangeComplex ec = enumerate_exchange(build_special_framing(parse_signature("T:2/2")), b);
        CHECK(ec.size() == 6);
        CHECK(ec.variable_count == 5);
        Int edges = count_faces(ec, ec.n - 1);
        CHECK(Int(ec.size()) - edges + ec.variable_count == 2);
    }
    SUBCASE("budget truncation is reported") {
        Budget tiny;
        tiny.max_vertices = 2;
        ExchangeComplex ec = enumerate_exchange(frame_principal(build_dynkin("A_3")), tiny);
        CHECK(ec.status == ExploreStatus::truncated);
        CHECK_THROWS_AS(count_faces(ec, 1), usage_error);
        Budget shallow;
        shallow.max_depth = 2;
        ExchangeComplex ec2 = enumerate_exchange(frame_principal(build_dynkin("A_3")), shallow);
        CHECK(ec2.status == ExploreStatus::truncated);
    }
}

TEST_CASE("graph export format") {
    Budget b;
    MutationClassGraph g = enumerate_mutation_class(build_dynkin("A_{2,1}"), b);
    std::string text = export_graph(g);
    CHECK(text.find("vertex 0 ") == 0);
    CHECK(text.find("edge 0 ") != std::string::npos);
    ExchangeComplex ec = enumerate_exchange(frame_principal(build_dynkin("A_2")), b);
    std::string text2 = export_graph(ec);
    CHECK(text2.find("vertex 4") != std::string::npos);
}

TEST_CASE("classify_subalgebra") {
    Budget b;
    SUBCASE("freezing a D~4 tail node leaves an affine factor") {
        WeightedQuiver q = build_tnw(parse_signature("T:2,2,2/1,1,1"));
        LabelProduct lp = classify_subalgebra(q, {2}, b);
        REQUIRE(lp.factors.size() == 1);
        CHECK(lp.factors[0].family == Family::affine);
        CHECK(lp.str() == "A_{2,2}");
    }
    SUBCASE("freezing the end of a length-4 tail of E7^(1,1) gives E~_7") {
        TnwSignature sig = *signature_of_name("dbl:E_7");
        TnwLayout lay = tnw_layout(sig);
        LabelProduct lp = classify_subalgebra(build_tnw(sig), {lay.tail[0].back()}, b);
        CHECK(lp.str() == "E~_7");
    }
    SUBCASE("freezing a middle node splits off a finite chain") {
        TnwSignature sig = *signature_of_name("dbl:E_7");
        TnwLayout lay = tnw_layout(sig);
        LabelProduct lp = classify_subalgebra(build_tnw(sig), {lay.tail[0][1]}, b);
        CHECK(lp.str() == "A_1 x D~_6");
    }
    SUBCASE("freezing everything leaves the empty product") {
        WeightedQuiver q = build_dynkin("A_3");
        LabelProduct lp = classify_subalgebra(q, {0, 1, 2}, b);
        CHECK(lp.factors.empty());
        CHECK(lp.str() == "A_0");
    }
    SUBCASE("recognizers handle trees, cycles, and weighted pairs") {
        CHECK(recognize_component(build_dynkin("D_4"), b)->name == "D_4");
        CHECK(recognize_component(build_dynkin("F_4"), b)->name == "F_4");
        CHECK(recognize_component(build_dynkin("A_{3,2}"), b)->name == "A_{3,2}");
        CHECK(recognize_component(build_dynkin("aff:C_2"), b)->name == "C~_2");
        WeightedQuiver pair(2);
        pair.weight = {2, 2};
        pair.set_arrows(0, 1, 1);
        CHECK(recognize_component(pair, b)->name == "A_2");  // weights scale out
    }
}

TEST_CASE("double edge reachability") {
    Budget b;
    SUBCASE("a finite type class has no double edges at all") {
        auto table = double_edge_reachability(build_dynkin("A_3"), b);
        for (const auto& row : table)
            for (const auto& entry : row) CHECK(!entry.ok);
    }
    SUBCASE("on the bare double edge both nodes fail, since both lie on it") {
        auto table = double_edge_reachability(build_tnw(parse_signature("T:")), b);
        REQUIRE(table.size() == 1);
        CHECK(!table[0][0].ok);
        CHECK(!table[0][1].ok);
    }
    SUBCASE("D4^(1,1): every class and node reaches a double edge off the node") {
        WeightedQuiver q = build_tnw(parse_signature("T:2,2,2,2/1,1,1,1"));
        auto table = double_edge_reachability(q, b);
        MutationClassGraph g = enumerate_mutation_class(q, b);
        REQUIRE(table.size() == 4);
        for (size_t c = 0; c < table.size(); ++c)
            for (int v = 0; v < 6; ++v) {
                CHECK(table[c][v].ok);
                CHECK(verify_reach_entry(g.reps[c], v, table[c][v]));
            }
    }
}

TEST_CASE("face vectors from small complexes") {
    Budget b;
    FaceVectorProvider provider;
    SUBCASE("A_1") {
        FaceVector fv = provider.get("A_1");
        CHECK(fv.by_dim == std::vector<Int>{2, 1});
    }
    SUBCASE("A_{2,1}: 4 clusters, 6 edges, 4 variables (an Euler sphere)") {
        FaceVector fv = provider.get("A_{2,1}");
        CHECK(fv.by_dim == std::vector<Int>{4, 6, 4, 1});
    }
    SUBCASE("products") {
        FaceVector fv = product(provider.get("A_1"), provider.get("A_1"));
        CHECK(fv.by_dim == std::vector<Int>{4, 4, 1});  // the square
    }
}
