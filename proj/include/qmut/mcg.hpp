// Cluster modular group calculus: mutation paths paired with quiver
// relabelings, composition / inversion / triviality, the named elements
// tau_i, gamma, r, delta, relation verification, and the abstract twist
// group Gamma_tau inside Z x prod Z_{n_i}.
#pragma once

#include <string>
#include <vector>

#include "qmut/exact.hpp"
#include "qmut/families.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

struct MutationPath {
    std::vector<int> steps;
};

// (P, sigma): sigma is a quiver isomorphism base -> P(base), i.e. node i of
// the base plays the role of node sigma[i] after the path.
struct GroupElement {
    WeightedQuiver base;
    MutationPath path;
    Perm sigma;
};

WeightedQuiver apply_path(const WeightedQuiver& q, const std::vector<int>& path);

// Validates sigma against the replayed path unless validate = false.
GroupElement make_element(const WeightedQuiver& base, std::vector<int> path, Perm sigma,
                          bool validate = true);
GroupElement identity_element(const WeightedQuiver& base);
bool is_identity_candidate(const GroupElement& g);  // empty path, identity sigma

// (P,sigma)·(R,tau) = (P · sigma(R), sigma∘tau)
GroupElement compose(const GroupElement& g, const GroupElement& h, bool validate = true);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long long k);

// True iff sigma extended by the identity on frozen nodes is a frozen
// isomorphism from the principal framing to its image under the path.
bool is_trivial(const GroupElement& g);
bool elements_equal(const GroupElement& g, const GroupElement& h);  // is_trivial(g·h^{-1})

// Named elements on build_signature(sig). tail is 0-based.
GroupElement twist(const TnwSignature& sig, int tail);
GroupElement gamma_element(const TnwSignature& sig);
GroupElement reddening_element(const TnwSignature& sig);
// delta = (s^k, id) with s the source-sink path on the T' subquiver and
// k = w_1 / (chi' * n_1); requires chi = 0, non-BC.
GroupElement source_sink_and_delta(const TnwSignature& sig);
int delta_repeat_count(const TnwSignature& sig);
std::vector<int> source_sink_path(const TnwSignature& sig);
// Path-free element from a quiver automorphism.
GroupElement automorphism_element(const WeightedQuiver& base, const Perm& sigma);
// Automorphism permuting whole tails; tails must share (n_i, w_i).
GroupElement tail_permutation_element(const TnwSignature& sig, const Perm& tail_perm);

// word = product of (element, exponent); true iff the product is trivial.
bool verify_relation(const std::vector<std::pair<GroupElement, long long>>& word);

// --- abstract twist group -------------------------------------------------

struct AbstractTwistElement {
    long long z = 0;                 // first coordinate
    std::vector<long long> residues; // residues[i] in Z_{n_i}
};

struct AbstractTwistGroup {
    std::vector<long long> n, w;  // BC: w_i = 1 in the relations tau^n = gamma
    long long ell = 1;            // prod n_i
    bool bc = false;

    explicit AbstractTwistGroup(const TnwSignature& sig);
    AbstractTwistElement gamma() const;
    AbstractTwistElement tau(int i) const;
    AbstractTwistElement element(long long gamma_pow, const std::vector<long long>& twist_pows) const;
    AbstractTwistElement reddening() const;  // (chi*ell, 1, ..., 1)
    bool member(const AbstractTwistElement& e) const;
    // order of the coset of e in Gamma_tau / <gamma>
    long long order_mod_gamma(const AbstractTwistElement& e) const;
    // |Gamma_tau / <gamma>| with its invariant factor decomposition
    struct QuotientInfo {
        Int order;
        std::vector<Int> invariant_factors;  // d_1 | d_2 | ...
    };
    QuotientInfo quotient_by_gamma() const;
    Int torsion_order() const;  // |Gamma_tau^o| = kernel of the Z-projection
};

// --- word files -------------------------------------------------------------

struct WordToken {
    std::string gen;  // "tau<i>" (1-based), "gamma", "delta", "r", "aut:(...)"
    long long exp = 1;
};
struct RelationWord {
    std::string text;
    std::vector<WordToken> tokens;
};
std::vector<RelationWord> parse_word_file(const std::string& text);
GroupElement evaluate_word(const TnwSignature& sig, const std::vector<WordToken>& tokens);

}  // namespace qmut
