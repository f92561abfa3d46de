#include "qmut/tables.hpp"

#include <algorithm>
#include <sstream>

#include "qmut/canonical.hpp"

namespace qmut {

namespace {
std::string rstr(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}
}  // namespace

FaceVector face_vector_of_complex(const ExchangeComplex& ec) {
    FaceVector fv;
    fv.rank = ec.n;
    fv.by_dim.assign(ec.n + 1, 0);
    fv.by_dim[ec.n] = 1;
    for (int k = 0; k < ec.n; ++k) fv.by_dim[k] = count_faces(ec, ec.n - k);
    return fv;
}

const FaceVector& FaceVectorProvider::get(const std::string& label) {
    auto it = cache_.find(label);
    if (it != cache_.end()) return it->second;
    FaceVector fv;
    if (label == "A_0") {
        fv = face_vector_point();
    } else if (auto sig = signature_of_name(label)) {
        if (sig->bc) throw usage_error("no special framing for BC label " + label);
        Budget b;
        ExchangeComplex ec = enumerate_exchange(build_special_framing(*sig), b);
        if (ec.status != ExploreStatus::complete)
            throw usage_error("face vector enumeration truncated for " + label);
        fv = face_vector_of_complex(ec);
    } else {
        Budget b;
        ExchangeComplex ec = enumerate_exchange(frame_principal(build_dynkin(label)), b);
        if (ec.status != ExploreStatus::complete)
            throw usage_error("face vector enumeration truncated for " + label);
        fv = face_vector_of_complex(ec);
    }
    return cache_.emplace(label, std::move(fv)).first->second;
}

FaceVector FaceVectorProvider::get_product(const LabelProduct& lp) {
    if (lp.unknown) throw usage_error("face vector of an unrecognized product");
    FaceVector fv = face_vector_point();
    for (const TypeLabel& t : lp.factors) fv = product(fv, get(t.name));
    return fv;
}

Rat label_product_cluster_count(const LabelProduct& lp) {
    if (lp.unknown) throw usage_error("cluster count of an unrecognized product");
    Rat r = 1;
    int affine_factors = 0;
    for (const TypeLabel& t : lp.factors) {
        if (t.family == Family::affine) ++affine_factors;
        r *= label_cluster_count(t.name);
    }
    if (affine_factors > 1)
        throw usage_error("cluster count: more than one affine factor");
    return r;
}

const std::vector<DblTypeData>& dbl_type_data() {
    static std::vector<DblTypeData> data = [] {
        std::vector<DblTypeData> d;
        auto sig_of = [](const std::string& nm) { return *signature_of_name(nm); };
        auto add = [&](std::string name, const char* sig_name, std::vector<Int> groups, bool wsd,
                       Rat coset, std::vector<Int> quot, std::vector<Int> codim, bool cc,
                       bool cd) {
            DblTypeData t;
            t.name = std::move(name);
            if (sig_name) {
                t.sig = sig_of(sig_name);
                t.has_sig = true;
            }
            t.group_orders = std::move(groups);
            t.weighted_self_dual = wsd;
            t.coset_expected = coset;
            t.quotient_expected = std::move(quot);
            t.codim_expected = std::move(codim);
            t.compute_clusters = cc;
            t.compute_codim = cd;
            d.push_back(std::move(t));
        };
        add("A1^(1,1)", nullptr, {1}, false, 1, {1}, {}, false, false);
        add("D4^(1,1)", "dbl:D_4", {6}, false, 72, {432}, {24, 192, 768, 1464, 1296, 432}, true,
            true);
        add("E6^(1,1)", "dbl:E_6", {12}, false, 1575, {18900},
            {72, 1422, 11772, 47466, 102816, 122472, 75600, 18900}, true, false);
        add("E7^(1,1)", "dbl:E_7", {24}, false, Rat(21910, 3), {175280},
            {156, 4776, 53504, 288840, 857760, 1478400, 1474080, 788760, 175280}, true, false);
        add("E8^(1,1)", "dbl:E_8", {6, 18, 24}, false, 34105, {204630, 613890, 818520}, {},
            true, false);
        add("BC1^(4,1)", "dbl:BC_1(4,1)", {2}, true, 1, {2}, {3, 3, 2}, false, false);
        add("B2^(2,1)", "dbl:B_2(2,1)", {2}, true, 12, {24}, {16, 40, 48, 24}, true, true);
        add("BC2^(4,2)", "dbl:BC_2(4,2)", {2}, true, 12, {24}, {16, 40, 48, 24}, false, false);
        add("B3^(1,1)", "dbl:B_3(1,1)", {6}, false, 18, {108}, {18, 96, 244, 270, 108}, true,
            true);
        add("F4^(1,1)", "dbl:F_4(1,1)", {12}, false, 105, {1260},
            {48, 516, 2196, 4248, 3780, 1260}, true, true);
        add("F4^(2,1)", "dbl:F_4(2,1)", {8}, true, 348, {2784},
            {112, 1152, 4864, 9392, 8352, 2784}, false, false);
        add("G2^(1,1)", "dbl:G_2(1,1)", {6}, false, 4, {24}, {12, 36, 48, 24}, true, true);
        add("G2^(3,1)", "dbl:G_2(3,1)", {3}, true, 21, {63}, {36, 99, 126, 63}, false, false);
        return d;
    }();
    return data;
}

DblDecomposition dbl_decomposition(const TnwSignature& sig, const Int& group_order, bool d2) {
    DblDecomposition dec;
    WeightedQuiver q = build_signature(sig);
    TnwLayout lay = tnw_layout(sig);
    int n1 = 0, w1 = 1;
    for (int i = 0; i < sig.tails(); ++i) {
        int wi = sig.bc ? 1 : sig.w[i];
        if (sig.n[i] > n1 || (sig.n[i] == n1 && wi < w1)) {
            n1 = sig.n[i];
            w1 = wi;
        }
    }
    Budget b;
    b.max_vertices = 100000;
    for (int i = 0; i < sig.tails(); ++i) {
        std::vector<LabelProduct> labels;
        for (int node : lay.tail[i]) {
            LabelProduct lp = classify_subalgebra(q, {node}, b);
            if (lp.unknown) dec.complete = false;
            if (group_order > 0) {
                // multiplicity of this variable orbit among the corank-1 faces
                Rat mult = Rat(sig.n[i]) * Rat(w1, n1) * Rat(group_order) * (d2 ? 2 : 1);
                if (!is_integer(mult))
                    throw inconsistent_decomposition_error("non-integral multiplicity");
                dec.parts.push_back({lp, to_int(mult)});
            }
            labels.push_back(std::move(lp));
        }
        dec.tail_labels.push_back(std::move(labels));
    }
    return dec;
}

// --- tables --------------------------------------------------------------------

TableResult table_d4aff() {
    TableResult res;
    std::ostringstream os;
    TnwSignature sig = parse_signature("T:2,2,2/1,1,1");
    Budget b;
    ExchangeComplex ec = enumerate_exchange(build_special_framing(sig), b);
    FaceVector enumerated = face_vector_of_complex(ec);

    // corank-1 decomposition from the variables of the complex itself
    std::vector<int> seen_var(ec.variable_count, -1);
    std::map<std::string, int> decomposition;
    std::vector<std::pair<FaceVector, Int>> parts;
    FaceVectorProvider provider;
    std::map<std::string, LabelProduct> by_label;
    for (size_t v = 0; v < ec.size(); ++v)
        for (int k = 0; k < ec.n; ++k) {
            int var = ec.slot_var[v][k];
            if (seen_var[var] >= 0) continue;
            seen_var[var] = 1;
            FramedQuiver state;
            state.full = ec.reps[v];
            state.n = ec.n;
            LabelProduct lp = classify_subalgebra(state.base(), {k}, b);
            decomposition[lp.str()] += 1;
            by_label[lp.str()] = lp;
        }
    for (auto& [label, mult] : decomposition)
        parts.push_back({provider.get_product(by_label[label]), Int(mult)});
    FaceVector recursed = facet_recursion(5, parts);

    const Int expected[5] = {16, 96, 244, 270, 108};
    os << "corank\texpected\tenumerated\trecursion\tstatus\n";
    for (int k = 1; k <= 5; ++k) {
        Int en = enumerated.by_dim[5 - k];
        Int rc = recursed.by_dim[5 - k];
        bool ok = en == expected[k - 1] && rc == expected[k - 1];
        if (!ok) ++res.mismatches;
        os << k << "\t" << expected[k - 1] << "\t" << en << "\t" << rc << "\t"
           << (ok ? "=" : "!=") << "\n";
    }
    os << "# corank-1 decomposition:";
    for (auto& [label, mult] : decomposition) os << " " << mult << "x[" << label << "]";
    os << "\n";
    res.tsv = os.str();
    return res;
}

TableResult table_affine_groups(int max_param) {
    TableResult res;
    std::ostringstream os;
    os << "type\tsignature\tquotient\tfactors\taut\ttotal\texpected\tstatus\n";
    for (const CatalogEntry& e : affine_catalog(max_param)) {
        AbstractTwistGroup G(e.sig);
        auto q = G.quotient_by_gamma();
        Int aut = Int(automorphism_group(build_signature(e.sig)).size());
        Int total = q.order * aut;
        // expected quotient-column order of the group table, where stated
        Int expected = -1;
        const auto& nm = e.name;
        auto num_pair = [&]() {
            size_t c = nm.find(','), o = nm.find('{');
            return std::pair<int, int>{std::stoi(nm.substr(o + 1, c - o - 1)),
                                       std::stoi(nm.substr(c + 1, nm.find('}') - c - 1))};
        };
        if (nm == "A_{1,1}") {
            expected = -1;  // not listed separately
        } else if (nm.rfind("A_{", 0) == 0) {
            auto [p, qq] = num_pair();
            expected = Int(p) * qq * (p == qq ? 2 : 1);
        } else if (nm == "D~_4") {
            expected = 48;
        } else if (nm.rfind("D~_", 0) == 0) {
            expected = 8 * (std::stoi(nm.substr(3)) - 2);
        } else if (nm == "E~_6") {
            expected = 36;
        } else if (nm == "E~_7") {
            expected = 24;
        } else if (nm == "E~_8") {
            expected = 30;
        } else if (nm.rfind("C~_", 0) == 0) {
            expected = std::stoi(nm.substr(3));
        } else if (nm.rfind("B~_", 0) == 0) {
            expected = 2 * (std::stoi(nm.substr(3)) - 1);
        } else if (nm == "F~_4") {
            expected = 6;
        } else if (nm == "G~_2") {
            expected = 2;
        } else if (nm.rfind("BC~(4)_", 0) == 0) {
            expected = std::stoi(nm.substr(7));
        }
        std::string status = ".";
        if (expected >= 0) {
            status = (total == expected) ? "=" : "!=";
            if (total != expected) ++res.mismatches;
        }
        os << nm << "\t" << e.sig.str() << "\t" << q.order << "\t";
        for (size_t i = 0; i < q.invariant_factors.size(); ++i)
            os << (i ? "x" : "") << q.invariant_factors[i];
        if (q.invariant_factors.empty()) os << "1";
        os << "\t" << aut << "\t" << total << "\t";
        if (expected >= 0) os << expected;
        else os << ".";
        os << "\t" << status << "\n";
    }
    res.tsv = os.str();
    return res;
}

TableResult table_dbl_clusters() {
    TableResult res;
    std::ostringstream os;
    os << "type\tcoset\texpected_coset\tgroups\tquotients\texpected_quotients\tstatus\n";
    Budget b;
    for (const DblTypeData& t : dbl_type_data()) {
        os << t.name << "\t";
        if (!t.compute_clusters || !t.has_sig) {
            os << ".\t" << rstr(t.coset_expected) << "\t";
            for (size_t i = 0; i < t.group_orders.size(); ++i)
                os << (i ? ";" : "") << t.group_orders[i];
            os << "\t.\t";
            for (size_t i = 0; i < t.quotient_expected.size(); ++i)
                os << (i ? ";" : "") << t.quotient_expected[i];
            os << "\t.\n";
            continue;
        }
        DblDecomposition dec = dbl_decomposition(t.sig, 0, false);  // labels only
        std::vector<std::vector<Rat>> tail_counts;
        for (const auto& labels : dec.tail_labels) {
            std::vector<Rat> counts;
            for (const auto& lp : labels) counts.push_back(label_product_cluster_count(lp));
            tail_counts.push_back(std::move(counts));
        }
        Rat coset = doubly_extended_coset_count(t.sig, tail_counts) *
                    (t.weighted_self_dual ? 2 : 1);
        bool ok = coset == t.coset_expected;
        std::vector<Int> quotients;
        for (size_t i = 0; i < t.group_orders.size(); ++i) {
            Rat qv = coset * t.group_orders[i];
            if (!is_integer(qv)) {
                ok = false;
                break;
            }
            quotients.push_back(to_int(qv));
        }
        ok = ok && quotients == t.quotient_expected;
        if (!ok) ++res.mismatches;
        os << rstr(coset) << "\t" << rstr(t.coset_expected) << "\t";
        for (size_t i = 0; i < t.group_orders.size(); ++i)
            os << (i ? ";" : "") << t.group_orders[i];
        os << "\t";
        for (size_t i = 0; i < quotients.size(); ++i) os << (i ? ";" : "") << quotients[i];
        os << "\t";
        for (size_t i = 0; i < t.quotient_expected.size(); ++i)
            os << (i ? ";" : "") << t.quotient_expected[i];
        os << "\t" << (ok ? "=" : "!=") << "\n";
    }
    os << "# erratum: the E7^(1,1) tail input uses E~_7 = 25200 (= 24*35*10*3); the previously "
          "tabulated value 252,000 is a misprint - the coset total 65730/9 = 21910/3 forces "
          "25,200.\n";
    res.tsv = os.str();
    return res;
}

TableResult table_dbl_codim() {
    TableResult res;
    std::ostringstream os;
    os << "type\tcodim_counts\texpected\tstatus\n";
    FaceVectorProvider provider;
    for (const DblTypeData& t : dbl_type_data()) {
        os << t.name << "\t";
        auto emit_expected = [&] {
            for (size_t i = 0; i < t.codim_expected.size(); ++i)
                os << (i ? ";" : "") << t.codim_expected[i];
            if (t.codim_expected.empty()) os << ".";
        };
        if (!t.compute_codim || !t.has_sig) {
            os << ".\t";
            emit_expected();
            os << "\t.\n";
            continue;
        }
        DblDecomposition dec = dbl_decomposition(t.sig, t.group_orders[0],
                                                 t.weighted_self_dual);
        std::vector<std::pair<FaceVector, Int>> parts;
        for (const auto& [lp, mult] : dec.parts) parts.push_back({provider.get_product(lp), mult});
        int rank = t.sig.rank();
        FaceVector fv = facet_recursion(rank, parts);
        bool ok = int(t.codim_expected.size()) == rank;
        for (int k = 1; k <= rank; ++k) {
            os << (k > 1 ? ";" : "") << fv.by_dim[rank - k];
            if (ok && fv.by_dim[rank - k] != t.codim_expected[k - 1]) ok = false;
        }
        os << "\t";
        emit_expected();
        if (!ok) ++res.mismatches;
        os << "\t" << (ok ? "=" : "!=") << "\n";
    }
    res.tsv = os.str();
    return res;
}

TableResult table_apq(int max_pq) {
    TableResult res;
    std::ostringstream os;
    os << "p\tq\tclosed\trecurrence\tstatus\n";
    for (int p = 1; p <= max_pq; ++p)
        for (int q = 1; q <= p; ++q) {
            Int c = apq_closed(p, q), r = apq_recurrence(p, q);
            if (c != r) ++res.mismatches;
            os << p << "\t" << q << "\t" << c << "\t" << r << "\t" << (c == r ? "=" : "!=")
               << "\n";
        }
    res.tsv = os.str();
    return res;
}

TableResult table_dn(int max_n) {
    TableResult res;
    std::ostringstream os;
    os << "n\tclosed\trecurrence\tstatus\n";
    for (int n = 3; n <= max_n; ++n) {
        Int c = dn_closed(n), r = dn_recurrence(n);
        if (c != r) ++res.mismatches;
        os << n << "\t" << c << "\t" << r << "\t" << (c == r ? "=" : "!=") << "\n";
    }
    res.tsv = os.str();
    return res;
}

TableResult table_series(int order) {
    TableResult res;
    std::ostringstream os;
    os << "identity\torder\tstatus\n";
    for (const std::string& id : series_identity_ids()) {
        bool ok = series_identity_check(id, order);
        if (!ok) ++res.mismatches;
        os << id << "\t" << order << "\t" << (ok ? "=" : "!=") << "\n";
    }
    res.tsv = os.str();
    return res;
}

}  // namespace qmut
