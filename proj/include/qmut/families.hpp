// T_{n,w} and T^BC quiver constructors, the chi invariant and type
// classification against the affine / doubly extended catalogs, the special
// framing T^f, Dynkin-diagram quivers, and quiver folding.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmut/exact.hpp"
#include "qmut/framing.hpp"
#include "qmut/quiver.hpp"

namespace qmut {

struct TnwSignature {
    std::vector<int> n;  // tail lengths, each >= 2
    std::vector<int> w;  // tail weights, each >= 1; empty when bc
    bool bc = false;

    void validate() const;
    int rank() const;  // node count of the built quiver
    int tails() const { return int(n.size()); }
    bool operator==(const TnwSignature& o) const { return n == o.n && w == o.w && bc == o.bc; }
    std::string str() const;  // "T:2,2/1,1" or "TBC:2"
};

// Node layout of build_tnw / build_tbc: node 0 = N1 (weight-1 center for
// T; the weight-1 middle node for BC), node 1 = Ninf (the double-arrow apex
// for T; the weight-4 middle node for BC), then tail nodes i_2..i_* tail by
// tail in signature order.
struct TnwLayout {
    int n1 = 0;
    int ninf = 1;
    std::vector<std::vector<int>> tail;  // tail[i][j] = node id of i_{j+2}
};
TnwLayout tnw_layout(const TnwSignature& sig);

WeightedQuiver build_tnw(const TnwSignature& sig);
WeightedQuiver build_tbc(const std::vector<int>& n);
WeightedQuiver build_signature(const TnwSignature& sig);  // dispatches on bc

Rat chi(const TnwSignature& sig);

enum class Family { finite, affine, doubly_extended, infinite_mutation };
std::string family_name(Family f);

struct TypeLabel {
    Family family = Family::infinite_mutation;
    std::string name;  // empty iff infinite-mutation (or unrecognized)
    std::string str() const;
};

TypeLabel classify(const TnwSignature& sig);

FramedQuiver build_special_framing(const TnwSignature& sig);

// Catalog names: A_n, B_n, C_n, D_n, E_6|7|8, F_4, G_2, A_{p,q},
// aff:X_n (X in B,C,D,E,F,G), BCaff_n.
WeightedQuiver build_dynkin(const std::string& name);

// groups: disjoint cover of the nodes; no internal arrows allowed. Folded
// node weight = group size times the common node weight of the group.
WeightedQuiver fold(const WeightedQuiver& q, const std::vector<std::vector<int>>& groups);
// Mutates each node of the group in sequence; valid when the group has no
// internal arrows (the mutations then commute).
WeightedQuiver group_mutate(const WeightedQuiver& q, const std::vector<int>& group);

// Signature parsing for the CLI: "T:2,2/1,1", "TBC:2,2".
TnwSignature parse_signature(const std::string& text);
// Signature of a named affine / doubly extended type ("aff:D_4", "A_{2,1}",
// "dbl:E_6", "dbl:B_2(2,1)", "BCaff_3", ...), when the type has one.
std::optional<TnwSignature> signature_of_name(const std::string& name);

struct CatalogEntry {
    std::string name;
    TnwSignature sig;
};
// All affine signatures with every parameter (p, q or n subscript) <= max_param.
std::vector<CatalogEntry> affine_catalog(int max_param);
// The complete chi = 0 catalog (T-signatures; A1^(1,1) has none).
std::vector<CatalogEntry> doubly_extended_catalog();

}  // namespace qmut
