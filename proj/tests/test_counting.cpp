#include <doctest.h>

#include "qmut/counting.hpp"
#include "qmut/explorer.hpp"
#include "qmut/tables.hpp"

using namespace qmut;

TEST_CASE("catalan and binomials against independent oracles") {
    CHECK(catalan(0) == 1);
    // recurrence oracle C_n = sum C_i C_{n-1-i}
    std::vector<Int> c{1};
    for (int n = 1; n <= 12; ++n) {
        Int s = 0;
        for (int i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
        c.push_back(s);
        CHECK(catalan(n) == s);
    }
    CHECK(catalan(5) == 42);
    // factorial oracle for the middle binomial
    auto fact = [](int k) {
        Int f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (int i = 0; i <= 10; ++i)
        CHECK(middle_binom(i) == fact(2 * i) / (fact(i) * fact(i)));
    CHECK(middle_binom(4) == 70);
    CHECK(binom(7, 3) == 35);
    CHECK(binom(3, 5) == 0);
}

TEST_CASE("affine variable counts") {
    CHECK(affine_variable_count(parse_signature("T:2,2,2/1,1,1")) == 16);
    CHECK(affine_variable_count(parse_signature("T:2/1")) == 4);
    CHECK(affine_variable_count(parse_signature("T:2/1"), 2) == 6);
    CHECK_THROWS_AS(affine_variable_count(parse_signature("T:6,3,2/1,1,1")), usage_error);
}

TEST_CASE("affine cluster counts") {
    CHECK(affine_cluster_count(parse_signature("T:2,2,2/1,1,1")) == 108);
    for (int p = 1; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) {
            TnwSignature sig;
            if (p == 1 && q == 1) continue;
            if (q == 1) sig = parse_signature("T:" + std::to_string(p) + "/1");
            else if (p == 1) sig = parse_signature("T:" + std::to_string(q) + "/1");
            else sig = parse_signature("T:" + std::to_string(p) + "," + std::to_string(q) + "/1,1");
            Rat expect = Rat(Int(p) * q, Int(2) * (p + q)) *
                         Rat(middle_binom(p) * middle_binom(q));
            CHECK(affine_cluster_count(sig) == expect);
        }
    CHECK(affine_cluster_count(parse_signature("T:4,3,2/1,1,1")) == 25200);
    CHECK(affine_cluster_count(parse_signature("T:3,3,2/1,1,1")) == 3600);
}

TEST_CASE("A_{p,q}: closed form, recurrence, and enumeration agree") {
    CHECK(apq_closed(2, 1) == 4);
    CHECK(apq_recurrence(2, 1) == 4);
    CHECK(apq_closed(4, 4) == 4900);
    CHECK(apq_closed(2, 4) * finite_cluster_count("A_2") == 1400);
    for (int p = 1; p <= 10; ++p)
        for (int q = 1; q <= p; ++q) CHECK(apq_closed(p, q) == apq_recurrence(p, q));
    // brute-force oracle data: special-framing enumeration for p + q <= 7
    Budget b;
    for (int p = 2; p <= 5; ++p)
        for (int q = 1; q <= p && p + q <= 7; ++q) {
            TnwSignature sig;
            sig.n = q == 1 ? std::vector<int>{p} : std::vector<int>{p, q};
            sig.w = std::vector<int>(sig.n.size(), 1);
            ExchangeComplex ec = enumerate_exchange(build_special_framing(sig), b);
            CHECK(Int(ec.size()) == apq_recurrence(p, q));
        }
}

TEST_CASE("D-hat counts: closed form, recurrence, finite base") {
    CHECK(dn_closed(4) == 108);
    CHECK(dn_closed(6) == 2520);
    CHECK(dn_closed(6) * finite_cluster_count("A_1") == 5040);
    CHECK(finite_d(3) == 14);
    CHECK(finite_d(3) == finite_cluster_count("A_3"));
    for (int n = 3; n <= 12; ++n) CHECK(dn_closed(n) == dn_recurrence(n));
}

TEST_CASE("finite cluster counts verified by exchange enumeration") {
    Budget b;
    auto enumerated = [&](const std::string& label) {
        ExchangeComplex ec = enumerate_exchange(frame_principal(build_dynkin(label)), b);
        return Int(ec.size());
    };
    CHECK(finite_cluster_count("A_2") == 5);
    CHECK(enumerated("A_2") == 5);
    CHECK(finite_cluster_count("A_3") == 14);
    CHECK(enumerated("A_3") == 14);
    CHECK(finite_cluster_count("D_4") == 50);
    CHECK(enumerated("D_4") == 50);
    CHECK(finite_cluster_count("B_2") == 6);
    CHECK(enumerated("B_2") == 6);
    CHECK(finite_cluster_count("B_3") == 20);
    CHECK(enumerated("B_3") == 20);
    CHECK(enumerated("C_3") == 20);
    CHECK(finite_cluster_count("G_2") == 8);
    CHECK(enumerated("G_2") == 8);
    CHECK(finite_cluster_count("F_4") == 105);
    CHECK(enumerated("F_4") == 105);
    CHECK(finite_cluster_count("E_6") == 833);
    CHECK(enumerated("E_6") == 833);
}

TEST_CASE("facet recursion") {
    FaceVectorProvider provider;
    SUBCASE("empty decompositions are rejected") {
        CHECK_THROWS_AS(facet_recursion(3, {}), inconsistent_decomposition_error);
    }
    SUBCASE("A_{2,1} from its corank-1 decomposition") {
        // derive the decomposition from the enumerated quotient complex
        Budget b;
        TnwSignature sig = parse_signature("T:2/1");
        ExchangeComplex ec = enumerate_exchange(build_special_framing(sig), b);
        std::map<std::string, int> decomposition;
        std::map<std::string, LabelProduct> products;
        std::vector<char> seen(ec.variable_count, 0);
        for (size_t v = 0; v < ec.size(); ++v)
            for (int k = 0; k < ec.n; ++k) {
                if (seen[ec.slot_var[v][k]]) continue;
                seen[ec.slot_var[v][k]] = 1;
                FramedQuiver fq;
                fq.full = ec.reps[v];
                fq.n = ec.n;
                LabelProduct lp = classify_subalgebra(fq.base(), {k}, b);
                decomposition[lp.str()] += 1;
                products[lp.str()] = lp;
            }
        // 4 variables: two affine nodes (A_{1,1}) and two finite ones (A_2)
        CHECK(decomposition["A_{1,1}"] == 2);
        CHECK(decomposition["A_2"] == 2);
        std::vector<std::pair<FaceVector, Int>> parts;
        for (auto& [label, mult] : decomposition)
            parts.push_back({provider.get_product(products[label]), Int(mult)});
        FaceVector fv = facet_recursion(3, parts);
        CHECK(fv.by_dim[0] == 4);  // clusters, matches apq_closed(2,1)
        CHECK(fv.by_dim[0] == apq_closed(2, 1));
        CHECK(fv.by_dim == provider.get("A_{2,1}").by_dim);
    }
}

TEST_CASE("doubly extended counts") {
    SUBCASE("E7^(1,1) coset count from its stated inputs") {
        TnwSignature sig = *signature_of_name("dbl:E_7");
        std::vector<std::vector<Rat>> counts{
            {Rat(1400), Rat(5040), Rat(25200)},  // tail 1: positions i_2, i_3, i_4
            {Rat(1400), Rat(5040), Rat(25200)},
            {Rat(4900)}};
        Rat coset = doubly_extended_coset_count(sig, counts);
        CHECK(coset == Rat(21910, 3));
        CHECK(coset * 24 == 175280);
    }
    SUBCASE("D4^(1,1) with every tail input 108") {
        TnwSignature sig = *signature_of_name("dbl:D_4");
        std::vector<std::vector<Rat>> counts(4, std::vector<Rat>{Rat(108)});
        CHECK(doubly_extended_coset_count(sig, counts) == 72);
    }
    SUBCASE("variable counts") {
        CHECK(doubly_extended_variable_count(*signature_of_name("dbl:D_4"), true) == 8);
        CHECK(doubly_extended_variable_count(*signature_of_name("dbl:E_8"), true) ==
              Rat(38, 3));
        CHECK(doubly_extended_variable_count(*signature_of_name("dbl:G_2(1,1)"), false) == 2);
    }
}

TEST_CASE("series identities") {
    for (const std::string& id : series_identity_ids())
        CHECK_MESSAGE(series_identity_check(id, 30), id);
    for (int q = 1; q <= 4; ++q)
        CHECK(series_identity_check("apq-lemma-q" + std::to_string(q), 20));
    CHECK_THROWS_AS(series_identity_check("no-such-identity", 10), usage_error);
}

TEST_CASE("series arithmetic basics") {
    SeriesPoly b = series_middle_binom(12);
    SeriesPoly c = series_catalan(12);
    // B = 1 + 2xB + 2x^2 B' style checks are covered by the identities; here
    // just division round trip
    SeriesPoly q = b.div(series_sqrt_one_minus_4x(12));
    SeriesPoly back = q.mul(series_sqrt_one_minus_4x(12));
    CHECK(back == b);
    CHECK(c.at(5) == 42);
}

TEST_CASE("label cluster counts for products") {
    LabelProduct lp;
    lp.factors.push_back({Family::affine, "D~_6"});
    lp.factors.push_back({Family::finite, "A_1"});
    CHECK(label_product_cluster_count(lp) == 5040);
}
