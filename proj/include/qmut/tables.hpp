// Report emitters reproducing the headline count tables, with =/!=/. cell
// annotations, plus the shared machinery: face vectors from enumerated
// complexes, per-label face-vector provider, and the doubly extended
// corank-1 decompositions derived from classify_subalgebra.
#pragma once

#include <map>
#include <string>

#include "qmut/counting.hpp"
#include "qmut/explorer.hpp"

namespace qmut {

FaceVector face_vector_of_complex(const ExchangeComplex& ec);

// Face vectors per type label, via enumeration: special framing for affine
// labels, principal framing of the Dynkin quiver for finite ones. Cached.
class FaceVectorProvider {
  public:
    const FaceVector& get(const std::string& label);
    FaceVector get_product(const LabelProduct& lp);

  private:
    std::map<std::string, FaceVector> cache_;
};

// Cluster count of a product label up to gamma (at most one affine factor).
Rat label_product_cluster_count(const LabelProduct& lp);

struct DblTypeData {
    std::string name;
    bool has_sig = false;
    TnwSignature sig;
    std::vector<Int> group_orders;  // |(Gamma/N̄)/N|; three choices for E8
    bool weighted_self_dual = false;  // dual quiver distinct -> the d = 2 cases
    Rat coset_expected;               // clusters per coset (0 = none listed)
    std::vector<Int> quotient_expected;
    std::vector<Int> codim_expected;  // codim 1..rank ("" rows stay empty)
    bool compute_clusters = false;
    bool compute_codim = false;
};
const std::vector<DblTypeData>& dbl_type_data();

struct DblDecomposition {
    // one entry per tail node position: subalgebra label and multiplicity
    std::vector<std::pair<LabelProduct, Int>> parts;
    std::vector<std::vector<LabelProduct>> tail_labels;  // [tail][position]
    bool complete = true;
};
DblDecomposition dbl_decomposition(const TnwSignature& sig, const Int& group_order, bool d2);

struct TableResult {
    std::string tsv;
    int mismatches = 0;
};

TableResult table_d4aff();
TableResult table_affine_groups(int max_param);
TableResult table_dbl_clusters();
TableResult table_dbl_codim();
TableResult table_apq(int max_pq);
TableResult table_dn(int max_n);
TableResult table_series(int order);

}  // namespace qmut
