#include "qmut/framing.hpp"

#include "qmut/canonical.hpp"

namespace qmut {

std::string frame_kind_name(FrameKind k) {
    switch (k) {
        case FrameKind::principal: return "principal";
        case FrameKind::coframe: return "coframe";
        case FrameKind::special: return "special";
        default: return "custom";
    }
}

WeightedQuiver FramedQuiver::base() const {
    WeightedQuiver b(n);
    for (int i = 0; i < n; ++i) b.weight[i] = full.weight[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.e[size_t(i) * n + j] = full.arrows(i, j);
    return b;
}

namespace {

FramedQuiver frame_with_direction(const WeightedQuiver& q, bool to_frozen, FrameKind kind) {
    for (int i = 0; i < q.n; ++i)
        if (q.frozen[i]) throw usage_error("framing: input already has frozen nodes");
    FramedQuiver fq;
    fq.n = q.n;
    fq.kind = kind;
    fq.full = WeightedQuiver(2 * q.n);
    for (int i = 0; i < q.n; ++i) {
        fq.full.weight[i] = q.weight[i];
        fq.full.weight[q.n + i] = q.weight[i];
        fq.full.frozen[q.n + i] = 1;
    }
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) fq.full.e[size_t(i) * fq.full.n + j] = q.arrows(i, j);
    for (int i = 0; i < q.n; ++i) {
        if (to_frozen)
            fq.full.set_arrows(i, q.n + i, 1);
        else
            fq.full.set_arrows(q.n + i, i, 1);
    }
    return fq;
}

}  // namespace

FramedQuiver frame_principal(const WeightedQuiver& q) {
    return frame_with_direction(q, true, FrameKind::principal);
}

FramedQuiver frame_coframe(const WeightedQuiver& q) {
    return frame_with_direction(q, false, FrameKind::coframe);
}

FramedQuiver mutate(const FramedQuiver& fq, int k) {
    if (k < 0 || k >= fq.n) throw usage_error("framed mutate: node not mutable");
    FramedQuiver r = fq;
    r.full = mutate(fq.full, k);
    return r;
}

FramedQuiver apply_path(const FramedQuiver& fq, const std::vector<int>& path) {
    FramedQuiver r = fq;
    for (int k : path) r = mutate(r, k);
    return r;
}

CMatrix c_vectors(const FramedQuiver& fq) {
    CMatrix m;
    m.n = fq.n;
    m.f = fq.frozen_count();
    m.c.resize(size_t(m.n) * m.f);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.f; ++j) m.c[size_t(i) * m.f + j] = fq.full.arrows(i, fq.n + j);
    return m;
}

NodeColor node_color(const FramedQuiver& fq, int k) {
    if (k < 0 || k >= fq.n) throw usage_error("node_color: node not mutable");
    bool pos = false, neg = false;
    for (int j = 0; j < fq.frozen_count(); ++j) {
        int v = fq.full.arrows(k, fq.n + j);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
    }
    if (pos == neg)  // mixed signs, or an all-zero c-vector
        throw sign_coherence_error("node_color: c-vector is not single-signed");
    return pos ? NodeColor::green : NodeColor::red;
}

bool all_red(const FramedQuiver& fq) {
    for (int k = 0; k < fq.n; ++k)
        if (node_color(fq, k) != NodeColor::red) return false;
    return true;
}

bool all_green(const FramedQuiver& fq) {
    for (int k = 0; k < fq.n; ++k)
        if (node_color(fq, k) != NodeColor::green) return false;
    return true;
}

std::optional<Perm> frozen_isomorphic(const FramedQuiver& a, const FramedQuiver& b) {
    if (a.n != b.n || a.full.n != b.full.n) throw usage_error("frozen_isomorphic: shape mismatch");
    for (int j = a.n; j < a.full.n; ++j)
        if (a.full.weight[j] != b.full.weight[j])
            throw usage_error("frozen_isomorphic: frozen labels differ");
    return find_isomorphism_pinned(a.full, b.full);
}

bool verify_reddening(const WeightedQuiver& q, const std::vector<int>& path) {
    if (q.n == 0) return false;
    FramedQuiver hat = frame_principal(q);
    FramedQuiver end = hat;
    for (int k : path) {
        if (k < 0 || k >= end.n || end.full.frozen[k]) return false;
        end = mutate(end, k);
    }
    for (int k = 0; k < end.n; ++k) {
        bool has_neg = false, has_pos = false;
        for (int j = 0; j < end.frozen_count(); ++j) {
            int v = end.full.arrows(k, end.n + j);
            if (v > 0) has_pos = true;
            if (v < 0) has_neg = true;
        }
        if (has_pos || !has_neg) return false;  // not red
    }
    FramedQuiver check = frame_coframe(q);
    return frozen_isomorphic(check, end).has_value();
}

}  // namespace qmut
