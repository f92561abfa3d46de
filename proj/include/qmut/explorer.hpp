// Exhaustive enumeration: quiver mutation classes up to isomorphism,
// framed exchange complexes up to frozen isomorphism with union-find
// variable gluing, modular-group generator extraction, face counting,
// subalgebra classification and double-edge reachability.
//
// The frontier expansion (mutate + canonicalize per state) is data-parallel;
// enumerate_* run it under OpenMP with a serial merge, and *_serial are
// independent reference implementations used by the tests and benchmarks.
#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qmut/canonical.hpp"
#include "qmut/exact.hpp"
#include "qmut/families.hpp"
#include "qmut/framing.hpp"
#include "qmut/mcg.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

struct Budget {
    size_t max_vertices = 1000000;
    int max_depth = std::numeric_limits<int>::max();
};

enum class ExploreStatus { complete, truncated };

struct MutationClassGraph {
    WeightedQuiver seed;
    int rank = 0;
    std::vector<WeightedQuiver> reps;       // labeled as first discovered
    std::vector<std::string> keys;          // canonical encodings (plain isomorphism)
    std::vector<uint64_t> hashes;
    std::vector<std::vector<int>> paths;    // mutation path seed -> rep
    std::vector<std::vector<int>> target;       // [class][node] -> class
    std::vector<std::vector<int>> target_node;  // [class][node] -> node image in the target rep
    ExploreStatus status = ExploreStatus::complete;

    struct UndirectedEdge {
        int c1, k1, c2, k2;    // the paired directed edges (c2,k2) may equal (c1,k1)
        bool loop() const { return c1 == c2; }
    };
    std::vector<UndirectedEdge> undirected;
    size_t size() const { return reps.size(); }
};

MutationClassGraph enumerate_mutation_class(const WeightedQuiver& seed, const Budget& budget);
MutationClassGraph enumerate_mutation_class_serial(const WeightedQuiver& seed, const Budget& budget);

struct GeneratorSet {
    std::vector<GroupElement> generators;
    int tree_diameter = 0;
};
GeneratorSet modular_group_generators(const MutationClassGraph& g);

struct ExchangeComplex {
    int n = 0;  // rank (mutable nodes)
    FramedQuiver seed;
    std::vector<WeightedQuiver> reps;   // full framed quivers
    std::vector<std::string> keys;      // canonical encodings, frozen pinned
    std::vector<std::vector<int>> adj;      // [v][k] -> vertex
    std::vector<std::vector<Perm>> edge_rho;  // [v][k] = slot map into adj[v][k]
    std::vector<std::vector<int>> slot_var;   // [v][k] -> variable id
    int variable_count = 0;
    ExploreStatus status = ExploreStatus::complete;
    size_t size() const { return reps.size(); }
};

ExchangeComplex enumerate_exchange(const FramedQuiver& seed, const Budget& budget);
ExchangeComplex enumerate_exchange_serial(const FramedQuiver& seed, const Budget& budget);

// Number of distinct codimension-k faces. A face is a size-k collection of
// mutually compatible variables; concretely, (vertex, k-slot-subset) pairs
// are identified along mutations at slots outside the subset (the star of a
// face is connected), and faces are the equivalence classes. codim 1 gives
// the variables, codim n the clusters.
Int count_faces(const ExchangeComplex& ec, int codim);
std::vector<Int> face_vector(const ExchangeComplex& ec);  // index k-1 = codim k

std::string export_graph(const MutationClassGraph& g);
std::string export_graph(const ExchangeComplex& ec);

// --- subalgebra classification ---------------------------------------------

struct LabelProduct {
    std::vector<TypeLabel> factors;  // sorted by name
    bool unknown = false;            // some component not recognized in budget
    std::string str() const;         // "D~_6 x A_1", empty product -> "A_0"
};

LabelProduct classify_subalgebra(const WeightedQuiver& q, const std::vector<int>& frozen_set,
                                 const Budget& budget);
// Recognize a single connected quiver's mutation class (helper, exposed for
// tests): tries T / T^BC / weighted tree / cycle patterns over class reps.
std::optional<TypeLabel> recognize_component(const WeightedQuiver& comp, const Budget& budget);

// --- double edge reachability ------------------------------------------------

struct ReachEntry {
    bool ok = false;
    std::vector<int> path;  // avoids the node; endpoint has a double edge off it
};
// [class][node] over the classes of enumerate_mutation_class(q).
std::vector<std::vector<ReachEntry>> double_edge_reachability(const WeightedQuiver& q,
                                                              const Budget& budget);
bool verify_reach_entry(const WeightedQuiver& rep, int node, const ReachEntry& entry);

}  // namespace qmut
