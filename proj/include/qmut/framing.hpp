// Framed (ice) quivers: principal framing, coframe, c-vectors and node
// colors, frozen isomorphism, reddening-sequence verification.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmut/quiver.hpp"

namespace qmut {

enum class FrameKind { principal, coframe, special, custom };

std::string frame_kind_name(FrameKind k);

struct FramedQuiver {
    WeightedQuiver full;  // mutable nodes 0..n-1, frozen nodes n..n+f-1
    int n = 0;            // mutable count
    FrameKind kind = FrameKind::custom;

    int frozen_count() const { return full.n - n; }
    WeightedQuiver base() const;  // the mutable subquiver
};

FramedQuiver frame_principal(const WeightedQuiver& q);
FramedQuiver frame_coframe(const WeightedQuiver& q);
FramedQuiver mutate(const FramedQuiver& fq, int k);
FramedQuiver apply_path(const FramedQuiver& fq, const std::vector<int>& path);

// Row i = the arrow multiplicities from mutable node i into the frozen block.
// At the initial principal framing this matrix is the identity.
struct CMatrix {
    int n = 0, f = 0;
    std::vector<int> c;  // row-major, n x f
    int at(int i, int j) const { return c[size_t(i) * f + j]; }
    bool operator==(const CMatrix& o) const { return n == o.n && f == o.f && c == o.c; }
};

CMatrix c_vectors(const FramedQuiver& fq);

enum class NodeColor { green, red };
// Throws sign_coherence_error on a mixed-sign or zero row.
NodeColor node_color(const FramedQuiver& fq, int k);
bool all_red(const FramedQuiver& fq);
bool all_green(const FramedQuiver& fq);

// Mutable relabeling extending the identity on frozen nodes, or absent.
// The returned permutation has full length (identity on the frozen range).
std::optional<Perm> frozen_isomorphic(const FramedQuiver& a, const FramedQuiver& b);

// True iff applying the path to the principal framing of q yields an all-red
// quiver frozen-isomorphic to the coframe.
bool verify_reddening(const WeightedQuiver& q, const std::vector<int>& path);

}  // namespace qmut
