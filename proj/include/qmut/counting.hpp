// Exact counting: Catalan / middle-binomial machinery, truncated integer
// power series and the generating-function identities, affine variable and
// cluster counts, the A_{p,q} and D-hat recurrences, finite-type base
// counts, the facet recursion, and doubly extended coset counting.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmut/exact.hpp"
#include "qmut/families.hpp"

namespace qmut {

struct inconsistent_decomposition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int binom(long long n, long long k);
Int catalan(long long i);
Int middle_binom(long long i);

// Truncated power series with exact integer coefficients.
struct SeriesPoly {
    std::vector<Int> c;  // c[i] = coefficient of x^i; size = order + 1

    explicit SeriesPoly(int order = 0) : c(size_t(order) + 1, 0) {}
    int order() const { return int(c.size()) - 1; }
    Int at(int i) const { return i >= 0 && i < int(c.size()) ? c[i] : Int(0); }

    SeriesPoly add(const SeriesPoly& o) const;
    SeriesPoly sub(const SeriesPoly& o) const;
    SeriesPoly mul(const SeriesPoly& o) const;
    SeriesPoly div(const SeriesPoly& o) const;  // o must have unit constant term
    SeriesPoly shift(int k) const;              // multiply by x^k
    SeriesPoly scale(const Int& s) const;
    bool operator==(const SeriesPoly& o) const { return c == o.c; }
};

SeriesPoly series_one(int order);
SeriesPoly series_catalan(int order);                     // C(x)
SeriesPoly series_catalan_truncated(int k, int order);    // C_{|_k_|}(x)
SeriesPoly series_middle_binom(int order);                // B(x) = (1-4x)^{-1/2}
SeriesPoly series_sqrt_one_minus_4x(int order);           // 1 - 2xC(x)
SeriesPoly series_finite_d(int order);                    // D(x) = 3xB - 2xC + 1
SeriesPoly series_dhat(int order);                        // sum 9(i-2)B_{i-2} x^i

// Identity ids: sqrt, binomial-inverse, derivative-binomial, apq-lemma-q<k>,
// aq-functional-q<k>, dhat-functional, dhat-closed, d-series.
std::vector<std::string> series_identity_ids();
bool series_identity_check(const std::string& id, int order);

// counts -----------------------------------------------------------------

// Distinct cluster variables up to <gamma^ell>: sum (n_i-1) n_i + ell n / chi.
Rat affine_variable_count(const TnwSignature& sig, long long ell = 1);
// Distinct clusters up to <gamma>: (2/chi) prod binom(2 n_i - 1, n_i).
Rat affine_cluster_count(const TnwSignature& sig);

Int apq_closed(int p, int q);
Int apq_recurrence(int p, int q);
Int dn_closed(int n);       // 9(n-2) binom(2(n-2), n-2), n >= 3
Int dn_recurrence(int n);
Int finite_d(int n);        // (3n-2)/n binom(2(n-1), n-1), D_0 = 1

// Labels: A_0, A_n, B_n, C_n, D_n, E_6..8, F_4, G_2.
Int finite_cluster_count(const std::string& label);
// Cluster count for any recognized finite or affine label ("D~_6", "A_{4,2}",
// "B_2", ...). Throws on unknown labels.
Rat label_cluster_count(const std::string& label);

// face vectors --------------------------------------------------------------

// by_dim[k] = number of dimension-k faces, k = 0..rank; by_dim[rank] = 1
// (the whole polytope), by_dim[0] = clusters.
struct FaceVector {
    int rank = 0;
    std::vector<Int> by_dim;
};
FaceVector face_vector_point();
FaceVector product(const FaceVector& a, const FaceVector& b);
// C_k(A) = 1/(n-k) sum over corank-1 parts of C_k(B); exact division or throw.
FaceVector facet_recursion(int rank, const std::vector<std::pair<FaceVector, Int>>& corank1);

// doubly extended counts ------------------------------------------------------

// (1/n) sum_i n_i sum_j C_{i_j} (w_1/n_1); tail_counts[i][j] = clusters of the
// affine subalgebra frozen at tail node i_{j+2}, up to gamma.
Rat doubly_extended_coset_count(const TnwSignature& sig,
                                const std::vector<std::vector<Rat>>& tail_counts);
// d (w_1/n_1) sum (n_i - 1) n_i with d = 2 iff self_dual.
Rat doubly_extended_variable_count(const TnwSignature& sig, bool self_dual);

}  // namespace qmut
