#include "qmut/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qmut {

void TnwSignature::validate() const {
    if (bc) {
        if (!w.empty()) throw usage_error("signature: BC variant carries no weights");
        if (n.empty()) throw usage_error("signature: BC variant needs at least one tail");
    } else if (n.size() != w.size()) {
        throw usage_error("signature: tail length/weight vectors differ in size");
    }
    for (int ni : n)
        if (ni < 2) throw usage_error("signature: tail lengths must be >= 2");
    for (int wi : w)
        if (wi < 1) throw usage_error("signature: tail weights must be >= 1");
}

int TnwSignature::rank() const {
    int r = 2;
    for (int ni : n) r += ni - 1;
    return r;
}

std::string TnwSignature::str() const {
    std::ostringstream os;
    os << (bc ? "TBC:" : "T:");
    for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
    if (!bc) {
        os << "/";
        for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    }
    return os.str();
}

TnwLayout tnw_layout(const TnwSignature& sig) {
    sig.validate();
    TnwLayout lay;
    int next = 2;
    for (size_t i = 0; i < sig.n.size(); ++i) {
        int len = sig.n[i] - 1;
        std::vector<int> t(len);
        for (int a = 0; a < len; ++a) t[a] = next++;
        lay.tail.push_back(std::move(t));
    }
    return lay;
}

WeightedQuiver build_tnw(const TnwSignature& sig) {
    sig.validate();
    if (sig.bc) throw usage_error("build_tnw: BC signature; use build_tbc");
    TnwLayout lay = tnw_layout(sig);
    WeightedQuiver q(sig.rank());
    q.weight[lay.n1] = 1;
    q.weight[lay.ninf] = 1;
    q.set_arrows(lay.ninf, lay.n1, 2);
    for (size_t i = 0; i < lay.tail.size(); ++i) {
        const auto& t = lay.tail[i];
        for (int node : t) q.weight[node] = sig.w[i];
        if (t.empty()) continue;
        q.set_arrows(lay.n1, t[0], 1);
        q.set_arrows(t[0], lay.ninf, 1);
        // source-sink tails: arrows run from odd-index nodes i_3, i_5, ...
        // into even-index ones (i_2 is a sink of the tail)
        for (size_t a = 0; a + 1 < t.size(); ++a) {
            if (a % 2 == 0)
                q.set_arrows(t[a + 1], t[a], 1);
            else
                q.set_arrows(t[a], t[a + 1], 1);
        }
    }
    q.check_invariants();
    return q;
}

WeightedQuiver build_tbc(const std::vector<int>& n) {
    TnwSignature sig;
    sig.n = n;
    sig.bc = true;
    sig.validate();
    TnwLayout lay = tnw_layout(sig);
    WeightedQuiver q(sig.rank());
    q.weight[lay.n1] = 1;
    q.weight[lay.ninf] = 4;
    q.set_arrows(lay.ninf, lay.n1, 1);
    for (const auto& t : lay.tail) {
        for (int node : t) q.weight[node] = 2;
        q.set_arrows(lay.n1, t[0], 1);
        q.set_arrows(t[0], lay.ninf, 1);
        // source-sink tails as in build_tnw (the boundary node is a sink)
        for (size_t a = 0; a + 1 < t.size(); ++a) {
            if (a % 2 == 0)
                q.set_arrows(t[a + 1], t[a], 1);
            else
                q.set_arrows(t[a], t[a + 1], 1);
        }
    }
    q.check_invariants();
    return q;
}

WeightedQuiver build_signature(const TnwSignature& sig) {
    return sig.bc ? build_tbc(sig.n) : build_tnw(sig);
}

Rat chi(const TnwSignature& sig) {
    sig.validate();
    Rat c = sig.bc ? Rat(1) : Rat(2);
    for (size_t i = 0; i < sig.n.size(); ++i) {
        Rat wi = sig.bc ? Rat(1) : Rat(sig.w[i]);
        c += wi * (Rat(1, sig.n[i]) - 1);
    }
    return c;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::finite: return "finite";
        case Family::affine: return "affine";
        case Family::doubly_extended: return "doubly-extended";
        default: return "infinite-mutation";
    }
}

std::string TypeLabel::str() const {
    if (name.empty()) return family_name(family);
    return family_name(family) + " " + name;
}

namespace {

// tails as (length, weight), sorted by length descending then weight ascending
std::vector<std::pair<int, int>> normal_tails(const TnwSignature& sig) {
    std::vector<std::pair<int, int>> t;
    for (size_t i = 0; i < sig.n.size(); ++i) t.push_back({sig.n[i], sig.bc ? 0 : sig.w[i]});
    std::sort(t.begin(), t.end(), [](auto a, auto b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    return t;
}

std::string subscripted(const std::string& base, int n) {
    return base + "_" + std::to_string(n);
}

}  // namespace

TypeLabel classify(const TnwSignature& sig) {
    sig.validate();
    Rat c = chi(sig);
    auto t = normal_tails(sig);
    int m = int(t.size());
    if (c < 0) return {Family::infinite_mutation, ""};

    if (sig.bc) {
        if (c > 0) {
            if (m == 1) return {Family::affine, "BC~(4)_" + std::to_string(t[0].first)};
        } else if (m == 2 && t[0] == std::make_pair(2, 0) && t[1] == std::make_pair(2, 0)) {
            return {Family::doubly_extended, "BC2^(4,2)"};
        }
        throw std::logic_error("classify: BC signature outside the catalog");
    }

    if (c > 0) {
        if (m == 0) return {Family::affine, "A_{1,1}"};
        if (m == 1) {
            auto [n1, w1] = t[0];
            if (w1 == 1) return {Family::affine, "A_{" + std::to_string(n1) + ",1}"};
            if (w1 == 2) return {Family::affine, subscripted("C~", n1)};
            if (w1 == 3 && n1 == 2) return {Family::affine, "G~_2"};
        }
        if (m == 2) {
            if (t[0].second == 1 && t[1].second == 1)
                return {Family::affine,
                        "A_{" + std::to_string(t[0].first) + "," + std::to_string(t[1].first) + "}"};
            if (t[1] == std::make_pair(2, 2) && t[0].second == 1)
                return {Family::affine, subscripted("B~", t[0].first + 1)};
            if (t[0] == std::make_pair(3, 2) && t[1] == std::make_pair(2, 1))
                return {Family::affine, "F~_4"};
        }
        if (m == 3 && t[1] == std::make_pair(2, 1) && t[2] == std::make_pair(2, 1) &&
            t[0].second == 1)
            return {Family::affine, subscripted("D~", t[0].first + 2)};
        if (m == 3 && t[0].second == 1 && t[1].second == 1 && t[2] == std::make_pair(2, 1)) {
            if (t[0].first == 3 && t[1].first == 3) return {Family::affine, "E~_6"};
            if (t[0].first == 4 && t[1].first == 3) return {Family::affine, "E~_7"};
            if (t[0].first == 5 && t[1].first == 3) return {Family::affine, "E~_8"};
        }
        throw std::logic_error("classify: chi>0 signature outside the catalog: " + sig.str());
    }

    // chi == 0
    using TV = std::vector<std::pair<int, int>>;
    static const std::vector<std::pair<TV, std::string>> dbl = {
        {{{2, 1}, {2, 1}, {2, 1}, {2, 1}}, "D4^(1,1)"},
        {{{3, 1}, {3, 1}, {3, 1}}, "E6^(1,1)"},
        {{{4, 1}, {4, 1}, {2, 1}}, "E7^(1,1)"},
        {{{6, 1}, {3, 1}, {2, 1}}, "E8^(1,1)"},
        {{{2, 4}}, "BC1^(4,1)"},
        {{{2, 2}, {2, 2}}, "B2^(2,1)"},
        {{{2, 1}, {2, 1}, {2, 2}}, "B3^(1,1)"},
        {{{3, 1}, {3, 2}}, "F4^(1,1)"},
        {{{4, 2}, {2, 1}}, "F4^(2,1)"},
        {{{2, 1}, {2, 3}}, "G2^(1,1)"},
        {{{3, 3}}, "G2^(3,1)"},
    };
    for (const auto& [tails, name] : dbl)
        if (t == tails) return {Family::doubly_extended, name};
    throw std::logic_error("classify: chi=0 signature outside the catalog: " + sig.str());
}

FramedQuiver build_special_framing(const TnwSignature& sig) {
    sig.validate();
    if (sig.bc) throw usage_error("build_special_framing: defined for non-BC signatures");
    WeightedQuiver mut = build_tnw(sig);
    TnwLayout lay = tnw_layout(sig);
    int n = mut.n;
    int f = n - 1;  // one frozen node per tail vertex plus f_1
    FramedQuiver fq;
    fq.n = n;
    fq.kind = FrameKind::special;
    fq.full = WeightedQuiver(n + f);
    for (int i = 0; i < n; ++i) fq.full.weight[i] = mut.weight[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fq.full.e[size_t(i) * fq.full.n + j] = mut.arrows(i, j);
    int next = n;
    int f1 = next++;
    fq.full.weight[f1] = 1;
    fq.full.frozen[f1] = 1;
    fq.full.set_arrows(lay.n1, f1, 1);
    fq.full.set_arrows(f1, lay.ninf, 1);
    for (size_t i = 0; i < lay.tail.size(); ++i)
        for (int node : lay.tail[i]) {
            int fz = next++;
            fq.full.weight[fz] = sig.w[i];
            fq.full.frozen[fz] = 1;
            fq.full.set_arrows(node, fz, 1);
        }
    fq.full.check_invariants();
    return fq;
}

namespace {

// Orients every edge of a tree from even BFS depth to odd depth, so each
// vertex is a source or a sink.
WeightedQuiver source_sink_tree(int n, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<int>& weights) {
    WeightedQuiver q(n);
    q.weight = weights;
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> depth(n, -1);
    std::vector<int> bfs{0};
    depth[0] = 0;
    for (size_t h = 0; h < bfs.size(); ++h)
        for (int u : adj[bfs[h]])
            if (depth[u] < 0) {
                depth[u] = depth[bfs[h]] + 1;
                bfs.push_back(u);
            }
    for (auto [a, b] : edges) {
        if (depth[a] % 2 == 0)
            q.set_arrows(a, b, 1);
        else
            q.set_arrows(b, a, 1);
    }
    return q;
}

std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return e;
}

}  // namespace

WeightedQuiver build_dynkin(const std::string& name) {
    auto starts_with = [&](const std::string& p) { return name.rfind(p, 0) == 0; };
    auto tail_int = [&](size_t from) {
        return std::stoi(name.substr(from));
    };

    if (starts_with("A_{")) {
        // A_{p,q}: p arrows with the cycle, q against
        size_t comma = name.find(',');
        size_t close = name.find('}');
        if (comma == std::string::npos || close == std::string::npos)
            throw usage_error("build_dynkin: bad A_{p,q} name");
        int p = std::stoi(name.substr(3, comma - 3));
        int q = std::stoi(name.substr(comma + 1, close - comma - 1));
        if (p < q) std::swap(p, q);
        int m = p + q;
        if (m < 3 || q < 0) throw usage_error("build_dynkin: bad A_{p,q} parameters");
        WeightedQuiver qv(m);
        for (int i = 0; i < m; ++i) {
            int a = i, b = (i + 1) % m;
            if (i < p)
                qv.set_arrows(a, b, 1);
            else
                qv.set_arrows(b, a, 1);
        }
        return qv;
    }
    if (starts_with("A_")) {
        int n = tail_int(2);
        if (n < 1) throw usage_error("build_dynkin: A_n needs n >= 1");
        return source_sink_tree(n, path_edges(n), std::vector<int>(n, 1));
    }
    if (starts_with("B_")) {
        int n = tail_int(2);
        if (n < 2) throw usage_error("build_dynkin: B_n needs n >= 2");
        std::vector<int> w(n, 1);
        w[0] = 2;
        return source_sink_tree(n, path_edges(n), w);
    }
    if (starts_with("C_")) {
        int n = tail_int(2);
        if (n < 2) throw usage_error("build_dynkin: C_n needs n >= 2");
        std::vector<int> w(n, 2);
        w[0] = 1;
        return source_sink_tree(n, path_edges(n), w);
    }
    if (starts_with("D_")) {
        int n = tail_int(2);
        if (n < 3) throw usage_error("build_dynkin: D_n needs n >= 3");
        std::vector<std::pair<int, int>> e{{0, 2}, {1, 2}};
        for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1});
        return source_sink_tree(n, e, std::vector<int>(n, 1));
    }
    if (starts_with("E_")) {
        int n = tail_int(2);
        if (n < 6 || n > 8) throw usage_error("build_dynkin: E_n needs n in 6..8");
        std::vector<std::pair<int, int>> e = path_edges(n - 1);
        e.push_back({2, n - 1});
        return source_sink_tree(n, e, std::vector<int>(n, 1));
    }
    if (name == "F_4") return source_sink_tree(4, path_edges(4), {1, 1, 2, 2});
    if (name == "G_2") return source_sink_tree(2, path_edges(2), {1, 3});

    if (starts_with("aff:")) {
        std::string base = name.substr(4);
        if (base.rfind("D_", 0) == 0) {
            int n = std::stoi(base.substr(2));
            if (n < 4) throw usage_error("build_dynkin: aff:D_n needs n >= 4");
            std::vector<std::pair<int, int>> e{{0, 2}, {1, 2}};
            for (int i = 2; i < n - 2; ++i) e.push_back({i, i + 1});
            e.push_back({n - 2, n - 1});
            e.push_back({n - 2, n});
            return source_sink_tree(n + 1, e, std::vector<int>(n + 1, 1));
        }
        if (base.rfind("B_", 0) == 0) {
            int n = std::stoi(base.substr(2));
            if (n < 3) throw usage_error("build_dynkin: aff:B_n needs n >= 3");
            std::vector<std::pair<int, int>> e = path_edges(n - 1);
            e.push_back({n - 2, n - 1});
            e.push_back({n - 2, n});
            std::vector<int> w(n + 1, 1);
            w[0] = 2;
            return source_sink_tree(n + 1, e, w);
        }
        if (base.rfind("C_", 0) == 0) {
            int n = std::stoi(base.substr(2));
            if (n < 2) throw usage_error("build_dynkin: aff:C_n needs n >= 2");
            std::vector<int> w(n + 1, 2);
            w[0] = w[n] = 1;
            return source_sink_tree(n + 1, path_edges(n + 1), w);
        }
        if (base == "E_6") {
            std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
            return source_sink_tree(7, e, std::vector<int>(7, 1));
        }
        if (base == "E_7") {
            std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {0, 4},
                                               {4, 5}, {5, 6}, {0, 7}};
            return source_sink_tree(8, e, std::vector<int>(8, 1));
        }
        if (base == "E_8") {
            std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                               {4, 5}, {0, 6}, {6, 7}, {0, 8}};
            return source_sink_tree(9, e, std::vector<int>(9, 1));
        }
        if (base == "F_4") return source_sink_tree(5, path_edges(5), {1, 1, 1, 2, 2});
        if (base == "G_2") return source_sink_tree(3, path_edges(3), {1, 1, 3});
        throw usage_error("build_dynkin: unknown affine name " + name);
    }

    if (starts_with("BCaff_")) {
        int n = tail_int(6);
        if (n < 2) throw usage_error("build_dynkin: BCaff_n needs n >= 2");
        // weight-4 triangle with a weight-2 chain (n-1 chain nodes, rank n+1)
        WeightedQuiver q(n + 1);
        q.weight[0] = 4;
        q.weight[1] = 1;
        for (int i = 0; i + 1 < n; ++i) q.weight[2 + i] = 2;
        q.set_arrows(0, 1, 1);
        q.set_arrows(1, 2, 1);
        q.set_arrows(2, 0, 1);
        // chain hangs off the triangle's weight-2 node, source-sink
        for (int a = 0; a + 2 < n; ++a) {
            if (a % 2 == 0)
                q.set_arrows(3 + a, 2 + a, 1);
            else
                q.set_arrows(2 + a, 3 + a, 1);
        }
        return q;
    }
    throw usage_error("build_dynkin: unknown name " + name);
}

WeightedQuiver fold(const WeightedQuiver& q, const std::vector<std::vector<int>>& groups) {
    std::vector<int> owner(q.n, -1);
    for (size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) throw invalid_folding_error("fold: empty group");
        for (int v : groups[g]) {
            if (v < 0 || v >= q.n || owner[v] >= 0)
                throw invalid_folding_error("fold: groups are not a disjoint cover");
            owner[v] = int(g);
        }
    }
    for (int v = 0; v < q.n; ++v)
        if (owner[v] < 0) throw invalid_folding_error("fold: groups are not a cover");
    for (const auto& grp : groups) {
        int w0 = q.weight[grp[0]];
        char fz = q.frozen[grp[0]];
        for (int v : grp) {
            if (q.weight[v] != w0) throw invalid_folding_error("fold: mixed weights in a group");
            if (q.frozen[v] != fz) throw invalid_folding_error("fold: mixed frozen flags");
        }
        for (int a : grp)
            for (int b : grp)
                if (q.arrows(a, b) != 0)
                    throw invalid_folding_error("fold: arrows inside a group");
    }
    int m = int(groups.size());
    WeightedQuiver r(m);
    for (int g = 0; g < m; ++g) {
        r.weight[g] = int(groups[g].size()) * q.weight[groups[g][0]];
        r.frozen[g] = q.frozen[groups[g][0]];
    }
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) {
            if (g == h) continue;
            long long total = 0;
            for (int a : groups[g])
                for (int b : groups[h])
                    if (q.arrows(a, b) > 0) total += q.arrows(a, b);
            if (total == 0) continue;
            long long den = std::max(groups[g].size(), groups[h].size());
            if (total % den != 0)
                throw invalid_folding_error("fold: arrow count not divisible by group size");
            r.e[size_t(g) * m + h] += int(total / den);
            r.e[size_t(h) * m + g] -= int(total / den);
        }
    r.drop_frozen_frozen_arrows();
    r.check_invariants();
    return r;
}

WeightedQuiver group_mutate(const WeightedQuiver& q, const std::vector<int>& group) {
    for (int a : group)
        for (int b : group)
            if (a != b && q.arrows(a, b) != 0)
                throw invalid_folding_error("group_mutate: arrows inside the group");
    WeightedQuiver r = q;
    for (int k : group) r = mutate(r, k);
    return r;
}

TnwSignature parse_signature(const std::string& text) {
    TnwSignature sig;
    std::string body;
    if (text.rfind("TBC:", 0) == 0) {
        sig.bc = true;
        body = text.substr(4);
    } else if (text.rfind("T:", 0) == 0) {
        body = text.substr(2);
    } else {
        throw parse_error("signature must start with T: or TBC:");
    }
    auto parse_list = [](const std::string& s) {
        std::vector<int> out;
        std::istringstream is(s);
        std::string item;
        while (std::getline(is, item, ','))
            if (!item.empty()) out.push_back(std::stoi(item));
        return out;
    };
    if (sig.bc) {
        sig.n = parse_list(body);
    } else {
        size_t slash = body.find('/');
        if (slash == std::string::npos) {
            sig.n = parse_list(body);
            sig.w.assign(sig.n.size(), 1);
        } else {
            sig.n = parse_list(body.substr(0, slash));
            sig.w = parse_list(body.substr(slash + 1));
        }
    }
    try {
        sig.validate();
    } catch (const usage_error& e) {
        throw parse_error(e.what());
    }
    return sig;
}

std::optional<TnwSignature> signature_of_name(const std::string& name) {
    auto mk = [](std::vector<int> n, std::vector<int> w) {
        TnwSignature s;
        s.n = std::move(n);
        s.w = std::move(w);
        return s;
    };
    if (name == "A_{1,1}") return mk({}, {});
    if (name.rfind("A_{", 0) == 0) {
        size_t comma = name.find(','), close = name.find('}');
        if (comma == std::string::npos || close == std::string::npos) return std::nullopt;
        int p = std::stoi(name.substr(3, comma - 3));
        int q = std::stoi(name.substr(comma + 1, close - comma - 1));
        if (p < q) std::swap(p, q);
        if (q == 0) return std::nullopt;
        if (q == 1 && p == 1) return mk({}, {});
        if (q == 1) return mk({p}, {1});
        return mk({p, q}, {1, 1});
    }
    auto num_after = [&](size_t k) { return std::stoi(name.substr(k)); };
    if (name.rfind("aff:D_", 0) == 0 || name.rfind("D~_", 0) == 0) {
        int n = num_after(name[0] == 'a' ? 6 : 3);
        return mk({n - 2, 2, 2}, {1, 1, 1});
    }
    if (name.rfind("aff:B_", 0) == 0 || name.rfind("B~_", 0) == 0) {
        int n = num_after(name[0] == 'a' ? 6 : 3);
        return mk({n - 1, 2}, {1, 2});
    }
    if (name.rfind("aff:C_", 0) == 0) return mk({num_after(6)}, {2});
    if (name.rfind("C~_", 0) == 0) return mk({num_after(3)}, {2});
    if (name == "aff:E_6" || name == "E~_6") return mk({3, 3, 2}, {1, 1, 1});
    if (name == "aff:E_7" || name == "E~_7") return mk({4, 3, 2}, {1, 1, 1});
    if (name == "aff:E_8" || name == "E~_8") return mk({5, 3, 2}, {1, 1, 1});
    if (name == "aff:F_4" || name == "F~_4") return mk({3, 2}, {2, 1});
    if (name == "aff:G_2" || name == "G~_2") return mk({2}, {3});
    if (name.rfind("BCaff_", 0) == 0 || name.rfind("BC~(4)_", 0) == 0) {
        TnwSignature s;
        s.bc = true;
        s.n = {num_after(name[2] == 'a' ? 6 : 7)};
        return s;
    }
    if (name.rfind("dbl:", 0) == 0) {
        std::string b = name.substr(4);
        if (b == "D_4") return mk({2, 2, 2, 2}, {1, 1, 1, 1});
        if (b == "E_6") return mk({3, 3, 3}, {1, 1, 1});
        if (b == "E_7") return mk({4, 4, 2}, {1, 1, 1});
        if (b == "E_8") return mk({6, 3, 2}, {1, 1, 1});
        if (b == "B_2(2,1)") return mk({2, 2}, {2, 2});
        if (b == "B_3(1,1)") return mk({2, 2, 2}, {1, 1, 2});
        if (b == "F_4(1,1)") return mk({3, 3}, {1, 2});
        if (b == "F_4(2,1)") return mk({4, 2}, {2, 1});
        if (b == "G_2(1,1)") return mk({2, 2}, {1, 3});
        if (b == "G_2(3,1)") return mk({3}, {3});
        if (b == "BC_1(4,1)") return mk({2}, {4});
        if (b == "BC_2(4,2)") {
            TnwSignature s;
            s.bc = true;
            s.n = {2, 2};
            return s;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<CatalogEntry> affine_catalog(int max_param) {
    std::vector<CatalogEntry> out;
    auto mk = [](std::vector<int> n, std::vector<int> w) {
        TnwSignature s;
        s.n = std::move(n);
        s.w = std::move(w);
        return s;
    };
    out.push_back({"A_{1,1}", mk({}, {})});
    for (int p = 2; p <= max_param; ++p)
        out.push_back({"A_{" + std::to_string(p) + ",1}", mk({p}, {1})});
    for (int p = 2; p <= max_param; ++p)
        for (int q = 2; q <= p; ++q)
            out.push_back({"A_{" + std::to_string(p) + "," + std::to_string(q) + "}",
                           mk({p, q}, {1, 1})});
    for (int n = 4; n <= max_param; ++n)
        out.push_back({"D~_" + std::to_string(n), mk({n - 2, 2, 2}, {1, 1, 1})});
    if (max_param >= 6) out.push_back({"E~_6", mk({3, 3, 2}, {1, 1, 1})});
    if (max_param >= 7) out.push_back({"E~_7", mk({4, 3, 2}, {1, 1, 1})});
    if (max_param >= 8) out.push_back({"E~_8", mk({5, 3, 2}, {1, 1, 1})});
    for (int n = 2; n <= max_param; ++n)
        out.push_back({"C~_" + std::to_string(n), mk({n}, {2})});
    for (int n = 3; n <= max_param; ++n)
        out.push_back({"B~_" + std::to_string(n), mk({n - 1, 2}, {1, 2})});
    if (max_param >= 4) out.push_back({"F~_4", mk({3, 2}, {2, 1})});
    out.push_back({"G~_2", mk({2}, {3})});
    for (int n = 2; n <= max_param; ++n) {
        TnwSignature s;
        s.bc = true;
        s.n = {n};
        out.push_back({"BC~(4)_" + std::to_string(n), s});
    }
    return out;
}

std::vector<CatalogEntry> doubly_extended_catalog() {
    std::vector<CatalogEntry> out;
    auto mk = [](std::vector<int> n, std::vector<int> w) {
        TnwSignature s;
        s.n = std::move(n);
        s.w = std::move(w);
        return s;
    };
    out.push_back({"D4^(1,1)", mk({2, 2, 2, 2}, {1, 1, 1, 1})});
    out.push_back({"E6^(1,1)", mk({3, 3, 3}, {1, 1, 1})});
    out.push_back({"E7^(1,1)", mk({4, 4, 2}, {1, 1, 1})});
    out.push_back({"E8^(1,1)", mk({6, 3, 2}, {1, 1, 1})});
    out.push_back({"BC1^(4,1)", mk({2}, {4})});
    out.push_back({"B2^(2,1)", mk({2, 2}, {2, 2})});
    {
        TnwSignature s;
        s.bc = true;
        s.n = {2, 2};
        out.push_back({"BC2^(4,2)", s});
    }
    out.push_back({"B3^(1,1)", mk({2, 2, 2}, {1, 1, 2})});
    out.push_back({"F4^(1,1)", mk({3, 3}, {1, 2})});
    out.push_back({"F4^(2,1)", mk({4, 2}, {2, 1})});
    out.push_back({"G2^(1,1)", mk({2, 2}, {1, 3})});
    out.push_back({"G2^(3,1)", mk({3}, {3})});
    return out;
}

}  // namespace qmut
