// Canonical labeling of weighted quivers by partition refinement plus
// backtracking over the residual symmetry. Two quivers are isomorphic iff
// their canonical byte encodings are equal. Frozen nodes can be pinned
// pointwise (each its own cell), which yields the frozen-isomorphism relation.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmut/quiver.hpp"

namespace qmut {

struct CanonicalForm {
    WeightedQuiver canonical_quiver;
    Perm relabeling;       // input id -> canonical id
    std::string encoding;  // canonical byte encoding
    uint64_t hash = 0;     // FNV-1a of the encoding
};

uint64_t fnv1a(const std::string& bytes);

CanonicalForm canonicalize(const WeightedQuiver& q, bool pin_frozen = false);

// Complete automorphism group (as permutations), from the same search.
// pin_frozen restricts to automorphisms fixing every frozen node.
std::vector<Perm> automorphism_group(const WeightedQuiver& q, bool pin_frozen = false);

// Weight/direction/frozen-preserving relabeling a -> b, or absent.
std::optional<Perm> find_isomorphism(const WeightedQuiver& a, const WeightedQuiver& b);
// Same, but frozen nodes must map identically (requires equal frozen layout).
std::optional<Perm> find_isomorphism_pinned(const WeightedQuiver& a, const WeightedQuiver& b);

}  // namespace qmut
