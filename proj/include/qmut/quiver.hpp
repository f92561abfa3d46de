// Weighted quivers: signed arrow matrices with node weights and frozen flags,
// mutation at a node, skew-symmetrizable exchange matrices, text serialization.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmut {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct malformed_weight_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_folding_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct sign_coherence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// perm[i] = image of node i
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose_perm(const Perm& outer, const Perm& inner);  // i -> outer[inner[i]]
Perm invert_perm(const Perm& p);

// Node ids are dense and 0-based; mutable nodes occupy the low range,
// frozen nodes the high range. Arrows between two frozen nodes are
// discarded on construction and never reappear under mutation.
struct WeightedQuiver {
    int n = 0;
    std::vector<int> weight;      // >= 1 per node
    std::vector<char> frozen;     // flag per node
    std::vector<int> e;           // e[i*n+j] = #arrows i->j minus #arrows j->i

    WeightedQuiver() = default;
    explicit WeightedQuiver(int nodes)
        : n(nodes), weight(nodes, 1), frozen(nodes, 0), e(size_t(nodes) * nodes, 0) {}

    int arrows(int i, int j) const { return e[size_t(i) * n + j]; }
    // Sets the signed multiplicity of the pair (i,j); m > 0 means i->j.
    void set_arrows(int i, int j, int m) {
        if (i == j) throw usage_error("self loop");
        e[size_t(i) * n + j] = m;
        e[size_t(j) * n + i] = -m;
    }
    void add_arrows(int i, int j, int m) {
        e[size_t(i) * n + j] += m;
        e[size_t(j) * n + i] -= m;
    }
    bool is_mutable(int k) const { return k >= 0 && k < n && !frozen[k]; }
    int mutable_count() const {
        int c = 0;
        for (int i = 0; i < n; ++i) c += frozen[i] ? 0 : 1;
        return c;
    }
    void check_invariants() const;  // throws on violated structural invariants
    void drop_frozen_frozen_arrows();
    bool operator==(const WeightedQuiver& o) const {
        return n == o.n && weight == o.weight && frozen == o.frozen && e == o.e;
    }
};

WeightedQuiver mutate(const WeightedQuiver& q, int k);

// r[p[i]] takes node i's weight/frozen flag; r.e[p[i]][p[j]] = q.e[i][j].
WeightedQuiver apply_perm(const WeightedQuiver& q, const Perm& p);
// True iff p is a weight-, direction- and frozen-status-preserving map with
// apply_perm(a, p) == b.
bool is_isomorphism(const WeightedQuiver& a, const WeightedQuiver& b, const Perm& p);

struct ExchangeMatrix {
    int n = 0;
    std::vector<long long> eps;   // eps[i*n+j] = e[i][j] * w[j] / gcd(w[i], w[j])
    std::vector<int> sym;         // symmetrizer diagonal D_i = w_i
    std::vector<char> frozen;

    long long at(int i, int j) const { return eps[size_t(i) * n + j]; }
};

ExchangeMatrix exchange_matrix(const WeightedQuiver& q);
ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k);
// Exact integer check that eps * D^{-1} is skew-symmetric.
bool is_skew_symmetrizable(const ExchangeMatrix& m);
// Recovers the arrow matrix from eps (divides columns by weights; exact).
WeightedQuiver quiver_of_matrix(const ExchangeMatrix& m);

// Text format: optional '# frame <kind>' comments, then
//   quiver <node_count>
//   node <id> weight <w> [frozen]
//   arrow <i> <j> <multiplicity>      (multiplicity > 0 means i->j)
struct ParsedQuiver {
    WeightedQuiver q;
    std::string frame_kind;  // empty when absent
};
std::string quiver_to_text(const WeightedQuiver& q, const std::string& frame_kind = "");
ParsedQuiver quiver_from_text(const std::string& text);

}  // namespace qmut
