// qmut: weighted-quiver mutation toolkit command line.
//
//   qmut classify <name-or-signature>
//   qmut explore <seed> [--framing none|principal|special] [options]
//   qmut count <table> [--max N] [--order N] [options]
//   qmut group <signature> <word-file> [options]
//
// Exit codes: 0 success, 1 table mismatch, 2 usage/parse error, 3 budget
// truncation.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qmut/canonical.hpp"
#include "qmut/counting.hpp"
#include "qmut/explorer.hpp"
#include "qmut/families.hpp"
#include "qmut/framing.hpp"
#include "qmut/mcg.hpp"
#include "qmut/quiver.hpp"
#include "qmut/tables.hpp"

using namespace qmut;

namespace {

struct Options {
    size_t budget_vertices = 1000000;
    int budget_depth = std::numeric_limits<int>::max();
    std::string out;
    std::string format = "text";
    int jobs = 0;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw usage_error("cannot open output file " + opt.out);
    f << text;
}

TnwSignature signature_argument(const std::string& arg) {
    if (arg.rfind("T:", 0) == 0 || arg.rfind("TBC:", 0) == 0) return parse_signature(arg);
    if (auto sig = signature_of_name(arg)) return *sig;
    throw parse_error("not a signature or named type: " + arg);
}

WeightedQuiver seed_argument(const std::string& arg) {
    if (arg.rfind("@", 0) == 0) {
        std::ifstream f(arg.substr(1));
        if (!f) throw parse_error("cannot read quiver file " + arg.substr(1));
        std::stringstream ss;
        ss << f.rdbuf();
        return quiver_from_text(ss.str()).q;
    }
    if (arg.rfind("T:", 0) == 0 || arg.rfind("TBC:", 0) == 0)
        return build_signature(parse_signature(arg));
    try {
        return build_dynkin(arg);
    } catch (const usage_error&) {
    }
    if (auto sig = signature_of_name(arg)) return build_signature(*sig);
    throw parse_error("not a quiver seed: " + arg);
}

int cmd_classify(const std::string& arg) {
    TnwSignature sig = signature_argument(arg);
    std::cout << classify(sig).str() << "\n";
    return 0;
}

int cmd_explore(const std::string& seed, const std::string& framing, const Options& opt) {
    Budget budget{opt.budget_vertices, opt.budget_depth};
    std::ostringstream os;
    ExploreStatus status;
    if (framing == "none") {
        MutationClassGraph g = enumerate_mutation_class(seed_argument(seed), budget);
        status = g.status;
        os << export_graph(g);
        os << "# classes " << g.size() << "\n";
    } else {
        FramedQuiver fq;
        if (framing == "principal") {
            fq = frame_principal(seed_argument(seed));
        } else if (framing == "special") {
            fq = build_special_framing(signature_argument(seed));
        } else {
            throw parse_error("unknown framing " + framing);
        }
        ExchangeComplex ec = enumerate_exchange(fq, budget);
        status = ec.status;
        os << export_graph(ec);
        os << "# vertices " << ec.size() << "\n";
        os << "# variables " << ec.variable_count << "\n";
        if (ec.status == ExploreStatus::complete) {
            os << "# faces";
            for (const Int& f : face_vector(ec)) os << " " << f;
            os << "\n";
        }
    }
    if (status == ExploreStatus::truncated) os << "TRUNCATED\n";
    write_output(opt, os.str());
    return status == ExploreStatus::truncated ? 3 : 0;
}

int cmd_count(const std::string& target, int max_param, int order, const Options& opt) {
    TableResult res;
    if (target == "d4aff") res = table_d4aff();
    else if (target == "affine-groups") res = table_affine_groups(max_param);
    else if (target == "dbl-clusters") res = table_dbl_clusters();
    else if (target == "dbl-codim") res = table_dbl_codim();
    else if (target == "apq") res = table_apq(max_param);
    else if (target == "dn") res = table_dn(max_param > 3 ? max_param : 12);
    else if (target == "series") res = table_series(order);
    else throw parse_error("unknown count table " + target);
    write_output(opt, res.tsv);
    return res.mismatches > 0 ? 1 : 0;
}

int cmd_group(const std::string& sig_arg, const std::string& file, const Options& opt) {
    TnwSignature sig = signature_argument(sig_arg);
    std::ifstream f(file);
    if (!f) throw parse_error("cannot read word file " + file);
    std::stringstream ss;
    ss << f.rdbuf();
    std::ostringstream os;
    for (const RelationWord& w : parse_word_file(ss.str())) {
        GroupElement g = evaluate_word(sig, w.tokens);
        os << w.text << "\t" << (is_trivial(g) ? "TRIVIAL" : "NONTRIVIAL") << "\n";
    }
    write_output(opt, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted quiver mutation toolkit"};
    app.require_subcommand(1);
    Options opt;

    std::string classify_arg;
    auto* c_classify = app.add_subcommand("classify", "classify a T-signature or named type");
    c_classify->add_option("name", classify_arg, "signature (T:2,2/1,1) or name")->required();

    std::string explore_seed, framing = "none";
    auto* c_explore = app.add_subcommand("explore", "enumerate a mutation class or exchange graph");
    c_explore->add_option("seed", explore_seed, "catalog name, T-signature, or @file")->required();
    c_explore->add_option("--framing", framing, "none | principal | special");

    std::string count_target;
    int max_param = 6, order = 30;
    auto* c_count = app.add_subcommand("count", "emit a counting table");
    c_count->add_option("table", count_target,
                        "d4aff | affine-groups | dbl-clusters | dbl-codim | apq | dn | series")
        ->required();
    c_count->add_option("--max", max_param, "parameter bound for apq/dn/affine-groups");
    c_count->add_option("--order", order, "series truncation order");

    std::string group_sig, word_file;
    auto* c_group = app.add_subcommand("group", "verify relation words over a signature");
    c_group->add_option("signature", group_sig, "T-signature or named type")->required();
    c_group->add_option("words", word_file, "word file (one relation per line)")->required();

    for (auto* sc : {c_explore, c_count, c_group}) {
        sc->add_option("--budget-vertices", opt.budget_vertices, "enumeration vertex budget");
        sc->add_option("--budget-depth", opt.budget_depth, "enumeration depth budget");
        sc->add_option("--format", opt.format, "text | tsv");
        sc->add_option("--out", opt.out, "output path (default stdout)");
        sc->add_option("--jobs", opt.jobs, "worker threads (0 = default)");
    }

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
#endif

    try {
        if (c_classify->parsed()) return cmd_classify(classify_arg);
        if (c_explore->parsed()) return cmd_explore(explore_seed, framing, opt);
        if (c_count->parsed()) return cmd_count(count_target, max_param, order, opt);
        if (c_group->parsed()) return cmd_group(group_sig, word_file, opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
