#include "qmut/canonical.hpp"

#include <algorithm>
#include <cstring>

namespace qmut {

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

using Partition = std::vector<std::vector<int>>;

// Splits every cell by the multiset of arrow values into every cell until
// stable. Subcell order inside a split is by signature, so the refined
// partition is independent of the input labeling.
void refine(const WeightedQuiver& q, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        next.reserve(part.size());
        for (const auto& cell : part) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            // signature of v = concatenation over cells of sorted arrow values
            std::vector<std::pair<std::vector<int>, int>> sigs;
            sigs.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(part.size() * 4);
                for (const auto& c2 : part) {
                    std::vector<int> vals;
                    vals.reserve(c2.size());
                    for (int u : c2) vals.push_back(q.arrows(v, u));
                    std::sort(vals.begin(), vals.end());
                    sig.push_back(int(0x40000000));  // cell separator
                    sig.insert(sig.end(), vals.begin(), vals.end());
                }
                sigs.emplace_back(std::move(sig), v);
            }
            std::stable_sort(sigs.begin(), sigs.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            size_t i = 0;
            while (i < sigs.size()) {
                size_t j = i;
                while (j < sigs.size() && sigs[j].first == sigs[i].first) ++j;
                std::vector<int> sub;
                for (size_t t = i; t < j; ++t) sub.push_back(sigs[t].second);
                std::sort(sub.begin(), sub.end());
                if (sub.size() != cell.size()) changed = true;
                next.push_back(std::move(sub));
                i = j;
            }
        }
        part.swap(next);
    }
}

std::string encode_labeled(const WeightedQuiver& q, const Perm& label) {
    // label: node -> position
    std::string out;
    out.reserve(2 + size_t(q.n) * 2 + size_t(q.n) * q.n * 2);
    out.push_back(char(q.n & 0xff));
    out.push_back(char((q.n >> 8) & 0xff));
    Perm inv = invert_perm(label);
    for (int p = 0; p < q.n; ++p) {
        int v = inv[p];
        out.push_back(char(q.weight[v] & 0xff));
        out.push_back(char(q.frozen[v] ? 1 : 0));
    }
    for (int p = 0; p < q.n; ++p)
        for (int r = 0; r < q.n; ++r) {
            int val = q.arrows(inv[p], inv[r]);
            out.push_back(char(val & 0xff));
            out.push_back(char((val >> 8) & 0xff));
        }
    return out;
}

struct Search {
    const WeightedQuiver& q;
    bool collect_auts;
    std::string best;
    Perm best_label;
    bool have_best = false;
    std::vector<Perm> auts;

    explicit Search(const WeightedQuiver& quiver, bool collect)
        : q(quiver), collect_auts(collect) {}

    void leaf(const Partition& part) {
        Perm label(q.n);
        for (size_t p = 0; p < part.size(); ++p) label[part[p][0]] = int(p);
        std::string enc = encode_labeled(q, label);
        if (!have_best || enc < best) {
            if (collect_auts && have_best && enc < best) auts.clear();
            best = std::move(enc);
            best_label = label;
            have_best = true;
            if (collect_auts) auts.push_back(identity_perm(q.n));
        } else if (collect_auts && enc == best) {
            // apply label then best_label^{-1}: an automorphism of q
            auts.push_back(compose_perm(invert_perm(best_label), label));
        }
    }

    void descend(Partition part) {
        refine(q, part);
        int target = -1;
        for (size_t c = 0; c < part.size(); ++c)
            if (part[c].size() > 1) {
                target = int(c);
                break;
            }
        if (target < 0) {
            leaf(part);
            return;
        }
        for (int v : part[target]) {
            Partition next;
            next.reserve(part.size() + 1);
            for (size_t c = 0; c < part.size(); ++c) {
                if (int(c) == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int u : part[c])
                        if (u != v) rest.push_back(u);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(part[c]);
                }
            }
            descend(std::move(next));
        }
    }
};

Partition initial_partition(const WeightedQuiver& q, bool pin_frozen) {
    Partition part;
    // mutable cells grouped by weight, ascending
    std::vector<std::pair<int, int>> muts;  // (weight, id)
    int max_w = 0;
    for (int i = 0; i < q.n; ++i)
        if (!q.frozen[i]) {
            muts.push_back({q.weight[i], i});
            max_w = std::max(max_w, q.weight[i]);
        }
    std::sort(muts.begin(), muts.end());
    size_t i = 0;
    while (i < muts.size()) {
        size_t j = i;
        std::vector<int> cell;
        while (j < muts.size() && muts[j].first == muts[i].first) cell.push_back(muts[j++].second);
        part.push_back(std::move(cell));
        i = j;
    }
    if (pin_frozen) {
        for (int v = 0; v < q.n; ++v)
            if (q.frozen[v]) part.push_back({v});
    } else {
        std::vector<std::pair<int, int>> froz;
        for (int v = 0; v < q.n; ++v)
            if (q.frozen[v]) froz.push_back({q.weight[v], v});
        std::sort(froz.begin(), froz.end());
        i = 0;
        while (i < froz.size()) {
            size_t j = i;
            std::vector<int> cell;
            while (j < froz.size() && froz[j].first == froz[i].first)
                cell.push_back(froz[j++].second);
            part.push_back(std::move(cell));
            i = j;
        }
    }
    return part;
}

}  // namespace

CanonicalForm canonicalize(const WeightedQuiver& q, bool pin_frozen) {
    Search s(q, false);
    s.descend(initial_partition(q, pin_frozen));
    CanonicalForm cf;
    cf.relabeling = s.best_label;
    cf.encoding = std::move(s.best);
    cf.hash = fnv1a(cf.encoding);
    cf.canonical_quiver = apply_perm(q, cf.relabeling);
    return cf;
}

std::vector<Perm> automorphism_group(const WeightedQuiver& q, bool pin_frozen) {
    Search s(q, true);
    s.descend(initial_partition(q, pin_frozen));
    // dedup (distinct leaves can repeat a permutation only if something is off,
    // but keep the result a set regardless)
    std::sort(s.auts.begin(), s.auts.end());
    s.auts.erase(std::unique(s.auts.begin(), s.auts.end()), s.auts.end());
    return s.auts;
}

std::optional<Perm> find_isomorphism(const WeightedQuiver& a, const WeightedQuiver& b) {
    if (a.n != b.n) return std::nullopt;
    CanonicalForm ca = canonicalize(a, false), cb = canonicalize(b, false);
    if (ca.encoding != cb.encoding) return std::nullopt;
    Perm p = compose_perm(invert_perm(cb.relabeling), ca.relabeling);
    if (!is_isomorphism(a, b, p)) return std::nullopt;
    return p;
}

std::optional<Perm> find_isomorphism_pinned(const WeightedQuiver& a, const WeightedQuiver& b) {
    if (a.n != b.n) return std::nullopt;
    for (int i = 0; i < a.n; ++i) {
        if (a.frozen[i] != b.frozen[i]) return std::nullopt;
        if (a.frozen[i] && a.weight[i] != b.weight[i]) return std::nullopt;
    }
    CanonicalForm ca = canonicalize(a, true), cb = canonicalize(b, true);
    if (ca.encoding != cb.encoding) return std::nullopt;
    Perm p = compose_perm(invert_perm(cb.relabeling), ca.relabeling);
    if (!is_isomorphism(a, b, p)) return std::nullopt;
    return p;
}

}  // namespace qmut
