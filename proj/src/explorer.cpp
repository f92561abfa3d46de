#include "qmut/explorer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmut {

namespace {

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(int(parent.size()));
        return int(parent.size()) - 1;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

// Renumbers vertices so ids are ordered by canonical key (deterministic
// across worker counts); index 0 keeps the seed's class.
template <typename Graph>
std::vector<int> key_order_permutation(const Graph& g) {
    std::vector<int> order(g.keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.keys[a] < g.keys[b]; });
    std::vector<int> newid(order.size());
    for (size_t i = 0; i < order.size(); ++i) newid[order[i]] = int(i);
    return newid;
}

}  // namespace

// --- mutation class enumeration ----------------------------------------------

namespace {

struct ClassExpansion {
    std::string key;
    CanonicalForm cf;
    WeightedQuiver child;
};

MutationClassGraph finish_class_graph(MutationClassGraph g) {
    std::vector<int> newid = key_order_permutation(g);
    MutationClassGraph r;
    r.seed = g.seed;
    r.rank = g.rank;
    r.status = g.status;
    size_t m = g.size();
    r.reps.resize(m);
    r.keys.resize(m);
    r.hashes.resize(m);
    r.paths.resize(m);
    r.target.resize(m);
    r.target_node.resize(m);
    for (size_t i = 0; i < m; ++i) {
        int ni = newid[i];
        r.reps[ni] = g.reps[i];
        r.keys[ni] = g.keys[i];
        r.hashes[ni] = g.hashes[i];
        r.paths[ni] = g.paths[i];
        r.target[ni] = g.target[i];
        r.target_node[ni] = g.target_node[i];
        for (int& t : r.target[ni]) t = t >= 0 ? newid[t] : t;
    }
    if (r.status == ExploreStatus::complete) {
        // pair directed edges with their inverses into undirected edges
        int rank = r.rank;
        UnionFind uf;
        for (size_t e = 0; e < m * rank; ++e) uf.add();
        auto eid = [&](int c, int k) { return c * rank + k; };
        for (size_t c = 0; c < m; ++c)
            for (int k = 0; k < rank; ++k)
                if (r.target[c][k] >= 0)
                    uf.unite(eid(int(c), k), eid(r.target[c][k], r.target_node[c][k]));
        std::map<int, std::vector<std::pair<int, int>>> orbits;
        for (size_t c = 0; c < m; ++c)
            for (int k = 0; k < rank; ++k)
                if (r.target[c][k] >= 0)
                    orbits[uf.find(eid(int(c), k))].push_back({int(c), k});
        for (auto& [root, members] : orbits) {
            MutationClassGraph::UndirectedEdge ue;
            ue.c1 = members[0].first;
            ue.k1 = members[0].second;
            ue.c2 = r.target[ue.c1][ue.k1];
            ue.k2 = r.target_node[ue.c1][ue.k1];
            r.undirected.push_back(ue);
        }
    }
    return r;
}

MutationClassGraph enumerate_class_impl(const WeightedQuiver& seed, const Budget& budget,
                                        bool parallel) {
    MutationClassGraph g;
    g.seed = seed;
    g.rank = seed.mutable_count();
    std::unordered_map<std::string, int> index;
    std::vector<int> depth;
    std::vector<Perm> relab;  // rep -> canonical labeling, per vertex

    CanonicalForm cf0 = canonicalize(seed, false);
    g.reps.push_back(seed);
    g.keys.push_back(cf0.encoding);
    g.hashes.push_back(cf0.hash);
    g.paths.push_back({});
    relab.push_back(cf0.relabeling);
    depth.push_back(0);
    index[cf0.encoding] = 0;

    std::vector<int> mutable_nodes;
    for (int i = 0; i < seed.n; ++i)
        if (!seed.frozen[i]) mutable_nodes.push_back(i);
    int rank = int(mutable_nodes.size());

    std::vector<int> layer{0};
    while (!layer.empty()) {
        if (depth[layer[0]] >= budget.max_depth) {
            g.status = ExploreStatus::truncated;
            break;
        }
        std::vector<ClassExpansion> exp(layer.size() * rank);
        auto expand = [&](size_t idx) {
            int v = layer[idx / rank];
            int k = mutable_nodes[idx % rank];
            WeightedQuiver child = mutate(g.reps[v], k);
            CanonicalForm cf = canonicalize(child, false);
            exp[idx].key = cf.encoding;
            exp[idx].cf = std::move(cf);
            exp[idx].child = std::move(child);
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (long long idx = 0; idx < (long long)exp.size(); ++idx) expand(size_t(idx));
        } else {
            for (size_t idx = 0; idx < exp.size(); ++idx) expand(idx);
        }
        std::vector<int> next;
        for (size_t idx = 0; idx < exp.size(); ++idx) {
            int v = layer[idx / rank];
            int k = mutable_nodes[idx % rank];
            auto it = index.find(exp[idx].key);
            int tv;
            if (it == index.end()) {
                if (g.size() >= budget.max_vertices) {
                    g.status = ExploreStatus::truncated;
                    continue;
                }
                tv = int(g.size());
                index[exp[idx].key] = tv;
                g.reps.push_back(exp[idx].child);
                g.keys.push_back(exp[idx].key);
                g.hashes.push_back(exp[idx].cf.hash);
                std::vector<int> p = g.paths[v];
                p.push_back(k);
                g.paths.push_back(std::move(p));
                relab.push_back(exp[idx].cf.relabeling);
                depth.push_back(depth[v] + 1);
                next.push_back(tv);
            } else {
                tv = it->second;
            }
            if (g.target.size() < g.size()) g.target.resize(g.size());
            if (g.target_node.size() < g.size()) g.target_node.resize(g.size());
            if (g.target[v].empty()) {
                g.target[v].assign(seed.n, -1);
                g.target_node[v].assign(seed.n, -1);
            }
            // image of k inside the target representative
            Perm rho = compose_perm(invert_perm(relab[tv]), exp[idx].cf.relabeling);
            g.target[v][k] = tv;
            g.target_node[v][k] = rho[k];
        }
        layer.swap(next);
        if (g.status == ExploreStatus::truncated) break;
    }
    g.target.resize(g.size());
    g.target_node.resize(g.size());
    for (size_t c = 0; c < g.size(); ++c)
        if (g.target[c].empty()) {
            g.target[c].assign(seed.n, -1);
            g.target_node[c].assign(seed.n, -1);
        }
    // defensive: every mutable direction of a complete graph must be linked
    if (g.status == ExploreStatus::complete)
        for (size_t c = 0; c < g.size(); ++c)
            for (int k : mutable_nodes)
                if (g.target[c][k] < 0) {
                    WeightedQuiver child = mutate(g.reps[c], k);
                    CanonicalForm cf = canonicalize(child, false);
                    auto it = index.find(cf.encoding);
                    if (it == index.end()) throw std::logic_error("class graph not closed");
                    g.target[c][k] = it->second;
                    g.target_node[c][k] =
                        compose_perm(invert_perm(relab[it->second]), cf.relabeling)[k];
                }
    return finish_class_graph(std::move(g));
}

}  // namespace

MutationClassGraph enumerate_mutation_class(const WeightedQuiver& seed, const Budget& budget) {
    return enumerate_class_impl(seed, budget, true);
}

MutationClassGraph enumerate_mutation_class_serial(const WeightedQuiver& seed,
                                                   const Budget& budget) {
    return enumerate_class_impl(seed, budget, false);
}

// --- generators ----------------------------------------------------------------

GeneratorSet modular_group_generators(const MutationClassGraph& g) {
    if (g.status != ExploreStatus::complete)
        throw usage_error("modular_group_generators: graph is truncated");
    size_t m = g.size();
    // spanning tree over classes (BFS from the seed's class)
    int seed_class = -1;
    {
        CanonicalForm cf = canonicalize(g.seed, false);
        for (size_t c = 0; c < m; ++c)
            if (g.keys[c] == cf.encoding) seed_class = int(c);
    }
    std::vector<int> parent(m, -2);
    std::vector<std::pair<int, int>> parent_edge(m, {-1, -1});
    std::deque<int> bfs{seed_class};
    parent[seed_class] = -1;
    std::set<std::pair<int, int>> tree_directed;
    while (!bfs.empty()) {
        int c = bfs.front();
        bfs.pop_front();
        std::vector<int> mutable_nodes;
        for (int k = 0; k < g.seed.n; ++k)
            if (!g.seed.frozen[k]) mutable_nodes.push_back(k);
        for (int k : mutable_nodes) {
            int t = g.target[c][k];
            if (t >= 0 && parent[t] == -2) {
                parent[t] = c;
                parent_edge[t] = {c, k};
                tree_directed.insert({c, k});
                tree_directed.insert({t, g.target_node[c][k]});
                bfs.push_back(t);
            }
        }
    }
    // tree diameter (classes as vertices)
    std::vector<std::vector<int>> tadj(m);
    for (size_t c = 0; c < m; ++c)
        if (parent[c] >= 0) {
            tadj[c].push_back(parent[c]);
            tadj[parent[c]].push_back(int(c));
        }
    auto far = [&](int start) {
        std::vector<int> dist(m, -1);
        dist[start] = 0;
        std::deque<int> q{start};
        std::pair<int, int> best{0, start};
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            if (dist[c] > best.first) best = {dist[c], c};
            for (int t : tadj[c])
                if (dist[t] < 0) {
                    dist[t] = dist[c] + 1;
                    q.push_back(t);
                }
        }
        return best;
    };
    auto [d1, far1] = far(seed_class);
    auto [diam, far2] = far(far1);
    (void)d1;
    (void)far2;

    auto element_for = [&](int c, int k, const Perm& psi, int cprime) {
        // path: seed -> rep_c, mutate k, then the reverse of seed -> rep_{c'}
        // translated through psi : rep_{c'} -> mu_k(rep_c)
        std::vector<int> path = g.paths[c];
        if (k >= 0) path.push_back(k);
        std::vector<int> back(g.paths[cprime].rbegin(), g.paths[cprime].rend());
        for (int s : back) path.push_back(psi[s]);
        WeightedQuiver end = apply_path(g.seed, path);
        auto sigma = find_isomorphism(g.seed, end);
        if (!sigma) throw std::logic_error("generator path does not close");
        return make_element(g.seed, std::move(path), *sigma, true);
    };

    GeneratorSet out;
    out.tree_diameter = diam;
    // one generator per undirected edge not in the spanning tree
    for (const auto& ue : g.undirected) {
        bool in_tree = tree_directed.count({ue.c1, ue.k1}) || tree_directed.count({ue.c2, ue.k2});
        if (in_tree) continue;
        int c = ue.c1, k = ue.k1, cp = g.target[c][k];
        WeightedQuiver M = mutate(g.reps[c], k);
        CanonicalForm cfM = canonicalize(M, false);
        CanonicalForm cfr = canonicalize(g.reps[cp], false);
        Perm psi = compose_perm(invert_perm(cfM.relabeling), cfr.relabeling);
        out.generators.push_back(element_for(c, k, psi, cp));
    }
    // plus the automorphisms of every representative
    for (size_t c = 0; c < m; ++c) {
        for (const Perm& a : automorphism_group(g.reps[c], false)) {
            if (a == identity_perm(g.reps[c].n)) continue;
            out.generators.push_back(element_for(int(c), -1, a, int(c)));
        }
    }
    return out;
}

// --- exchange enumeration -------------------------------------------------------

namespace {

struct ExchExpansion {
    std::string key;
    CanonicalForm cf;
    WeightedQuiver child;
};

ExchangeComplex finish_exchange(ExchangeComplex ec, UnionFind& uf) {
    // collapse slot ids to dense variable ids
    std::map<int, int> var_id;
    for (size_t v = 0; v < ec.size(); ++v)
        for (int k = 0; k < ec.n; ++k) {
            int root = uf.find(int(v) * ec.n + k);
            auto [it, fresh] = var_id.insert({root, int(var_id.size())});
            ec.slot_var[v][k] = it->second;
        }
    ec.variable_count = int(var_id.size());
    // renumber vertices by canonical key
    std::vector<int> newid = key_order_permutation(ec);
    ExchangeComplex r;
    r.n = ec.n;
    r.seed = ec.seed;
    r.status = ec.status;
    r.variable_count = ec.variable_count;
    size_t m = ec.size();
    r.reps.resize(m);
    r.keys.resize(m);
    r.adj.resize(m);
    r.edge_rho.resize(m);
    r.slot_var.resize(m);
    for (size_t i = 0; i < m; ++i) {
        int ni = newid[i];
        r.reps[ni] = ec.reps[i];
        r.keys[ni] = ec.keys[i];
        r.adj[ni] = ec.adj[i];
        r.edge_rho[ni] = ec.edge_rho[i];
        r.slot_var[ni] = ec.slot_var[i];
        for (int& t : r.adj[ni]) t = t >= 0 ? newid[t] : t;
    }
    return r;
}

ExchangeComplex enumerate_exchange_impl(const FramedQuiver& seed, const Budget& budget,
                                        bool parallel) {
    ExchangeComplex ec;
    ec.n = seed.n;
    ec.seed = seed;
    int n = seed.n;
    std::unordered_map<std::string, int> index;
    std::vector<int> depth;
    std::vector<Perm> relab;
    UnionFind uf;

    CanonicalForm cf0 = canonicalize(seed.full, true);
    ec.reps.push_back(seed.full);
    ec.keys.push_back(cf0.encoding);
    ec.adj.push_back(std::vector<int>(n, -1));
    ec.edge_rho.push_back(std::vector<Perm>(n));
    ec.slot_var.push_back(std::vector<int>(n, -1));
    relab.push_back(cf0.relabeling);
    for (int k = 0; k < n; ++k) uf.add();
    depth.push_back(0);
    index[cf0.encoding] = 0;

    std::vector<int> layer{0};
    while (!layer.empty()) {
        if (depth[layer[0]] >= budget.max_depth) {
            ec.status = ExploreStatus::truncated;
            break;
        }
        std::vector<ExchExpansion> exp(layer.size() * n);
        auto expand = [&](size_t idx) {
            int v = layer[idx / n];
            int k = int(idx % n);
            WeightedQuiver child = mutate(ec.reps[v], k);
            CanonicalForm cf = canonicalize(child, true);
            exp[idx].key = cf.encoding;
            exp[idx].cf = std::move(cf);
            exp[idx].child = std::move(child);
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (long long idx = 0; idx < (long long)exp.size(); ++idx) expand(size_t(idx));
        } else {
            for (size_t idx = 0; idx < exp.size(); ++idx) expand(idx);
        }
        std::vector<int> next;
        for (size_t idx = 0; idx < exp.size(); ++idx) {
            int v = layer[idx / n];
            int k = int(idx % n);
            if (ec.adj[v][k] >= 0) continue;  // already linked from the other side
            auto it = index.find(exp[idx].key);
            int tv;
            Perm rho;
            if (it == index.end()) {
                if (ec.size() >= budget.max_vertices) {
                    ec.status = ExploreStatus::truncated;
                    continue;
                }
                tv = int(ec.size());
                index[exp[idx].key] = tv;
                ec.reps.push_back(exp[idx].child);
                ec.keys.push_back(exp[idx].key);
                ec.adj.push_back(std::vector<int>(n, -1));
                ec.edge_rho.push_back(std::vector<Perm>(n));
                ec.slot_var.push_back(std::vector<int>(n, -1));
                relab.push_back(exp[idx].cf.relabeling);
                for (int s = 0; s < n; ++s) uf.add();
                depth.push_back(depth[v] + 1);
                next.push_back(tv);
                rho = identity_perm(ec.reps[v].n);  // child stored as-is
            } else {
                tv = it->second;
                rho = compose_perm(invert_perm(relab[tv]), exp[idx].cf.relabeling);
            }
            Perm slot_rho(rho.begin(), rho.begin() + n);
            ec.adj[v][k] = tv;
            ec.edge_rho[v][k] = slot_rho;
            int kimg = rho[k];
            if (ec.adj[tv][kimg] < 0) {
                ec.adj[tv][kimg] = v;
                Perm inv = invert_perm(slot_rho);
                ec.edge_rho[tv][kimg] = inv;
            }
            // unmutated slots glue
            for (int p = 0; p < n; ++p)
                if (p != k) uf.unite(v * n + p, tv * n + rho[p]);
        }
        layer.swap(next);
        if (ec.status == ExploreStatus::truncated) break;
    }
    if (ec.status == ExploreStatus::complete)
        for (size_t v = 0; v < ec.size(); ++v)
            for (int k = 0; k < n; ++k)
                if (ec.adj[v][k] < 0) {
                    WeightedQuiver child = mutate(ec.reps[v], k);
                    CanonicalForm cf = canonicalize(child, true);
                    auto it = index.find(cf.encoding);
                    if (it == index.end()) throw std::logic_error("exchange graph not closed");
                    int tv = it->second;
                    Perm rho = compose_perm(invert_perm(relab[tv]), cf.relabeling);
                    ec.adj[v][k] = tv;
                    ec.edge_rho[v][k] = Perm(rho.begin(), rho.begin() + n);
                    for (int p = 0; p < n; ++p)
                        if (p != k) uf.unite(int(v) * n + p, tv * n + rho[p]);
                }
    return finish_exchange(std::move(ec), uf);
}

}  // namespace

ExchangeComplex enumerate_exchange(const FramedQuiver& seed, const Budget& budget) {
    return enumerate_exchange_impl(seed, budget, true);
}

ExchangeComplex enumerate_exchange_serial(const FramedQuiver& seed, const Budget& budget) {
    return enumerate_exchange_impl(seed, budget, false);
}

namespace {

// colex rank of a strictly increasing subset
size_t subset_rank(const std::vector<int>& s) {
    size_t r = 0;
    auto choose = [](long long n, long long k) {
        if (k < 0 || k > n) return 0LL;
        long long v = 1;
        for (long long i = 1; i <= k; ++i) v = v * (n - k + i) / i;
        return v;
    };
    for (size_t i = 0; i < s.size(); ++i) r += size_t(choose(s[i], (long long)i + 1));
    return r;
}

}  // namespace

Int count_faces(const ExchangeComplex& ec, int codim) {
    if (ec.status != ExploreStatus::complete)
        throw usage_error("count_faces: the complex is incomplete");
    if (codim < 0 || codim > ec.n) throw usage_error("count_faces: bad codimension");
    if (codim == 0) return 1;
    int n = ec.n;
    // enumerate the k-subsets of slots once
    std::vector<std::vector<int>> subsets;
    {
        std::vector<int> idx(codim);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            subsets.push_back(idx);
            int i = codim - 1;
            while (i >= 0 && idx[i] == n - codim + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < codim; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    size_t per = subsets.size();
    std::vector<size_t> rank_of(per);
    for (size_t si = 0; si < per; ++si) rank_of[si] = subset_rank(subsets[si]);
    UnionFind uf;
    for (size_t t = 0; t < ec.size() * per; ++t) uf.add();
    // identify (v, S) with (v', rho(S)) along every edge mutating a slot
    // outside S
    std::vector<int> image(codim);
    for (size_t v = 0; v < ec.size(); ++v)
        for (size_t si = 0; si < per; ++si) {
            const std::vector<int>& s = subsets[si];
            for (int k = 0; k < n; ++k) {
                if (std::find(s.begin(), s.end(), k) != s.end()) continue;
                int tv = ec.adj[v][k];
                if (tv < 0) continue;
                const Perm& rho = ec.edge_rho[v][k];
                for (int i = 0; i < codim; ++i) image[i] = rho[s[i]];
                std::sort(image.begin(), image.end());
                uf.unite(int(v * per + rank_of[si]), int(tv * per + subset_rank(image)));
            }
        }
    std::set<int> roots;
    for (size_t t = 0; t < ec.size() * per; ++t) roots.insert(uf.find(int(t)));
    return Int(roots.size());
}

std::vector<Int> face_vector(const ExchangeComplex& ec) {
    std::vector<Int> out;
    for (int k = 1; k <= ec.n; ++k) out.push_back(count_faces(ec, k));
    return out;
}

std::string export_graph(const MutationClassGraph& g) {
    std::ostringstream os;
    char hex[17];
    for (size_t c = 0; c < g.size(); ++c) {
        snprintf(hex, sizeof hex, "%016llx", (unsigned long long)g.hashes[c]);
        os << "vertex " << c << " " << hex << "\n";
    }
    for (size_t c = 0; c < g.size(); ++c)
        for (int k = 0; k < g.seed.n; ++k)
            if (!g.target[c].empty() && g.target[c][k] >= 0)
                os << "edge " << c << " " << k << " " << g.target[c][k] << "\n";
    return os.str();
}

std::string export_graph(const ExchangeComplex& ec) {
    std::ostringstream os;
    char hex[17];
    for (size_t v = 0; v < ec.size(); ++v) {
        snprintf(hex, sizeof hex, "%016llx", (unsigned long long)fnv1a(ec.keys[v]));
        os << "vertex " << v << " " << hex << "\n";
    }
    for (size_t v = 0; v < ec.size(); ++v)
        for (int k = 0; k < ec.n; ++k)
            if (ec.adj[v][k] >= 0) os << "edge " << v << " " << k << " " << ec.adj[v][k] << "\n";
    return os.str();
}

// --- subalgebra classification ----------------------------------------------

namespace {

std::vector<std::vector<int>> components_of(const WeightedQuiver& q) {
    std::vector<int> comp(q.n, -1);
    int nc = 0;
    for (int i = 0; i < q.n; ++i) {
        if (comp[i] >= 0) continue;
        std::deque<int> bfs{i};
        comp[i] = nc;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int u = 0; u < q.n; ++u)
                if (comp[u] < 0 && q.arrows(v, u) != 0) {
                    comp[u] = nc;
                    bfs.push_back(u);
                }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int i = 0; i < q.n; ++i) out[comp[i]].push_back(i);
    return out;
}

WeightedQuiver induced(const WeightedQuiver& q, const std::vector<int>& nodes) {
    WeightedQuiver r(int(nodes.size()));
    for (size_t i = 0; i < nodes.size(); ++i) {
        r.weight[i] = q.weight[nodes[i]];
        r.frozen[i] = 0;
    }
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j)
            r.e[i * nodes.size() + j] = q.arrows(nodes[i], nodes[j]);
    return r;
}

// exchange dynamics are invariant under scaling all weights uniformly
void normalize_weights(WeightedQuiver& q) {
    int g = 0;
    for (int w : q.weight) g = std::gcd(g, w);
    if (g > 1)
        for (int& w : q.weight) w /= g;
}

std::optional<TnwSignature> match_tnw(const WeightedQuiver& q) {
    // A_{1,1}: the bare double edge
    std::vector<std::pair<int, int>> doubles;
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            int a = q.arrows(i, j);
            if (a > 2 || a < -2) return std::nullopt;
            if (a == 2) doubles.push_back({i, j});
        }
    if (doubles.size() != 1) return std::nullopt;
    auto [u, v] = doubles[0];  // u = N_inf, v = N_1
    if (q.weight[u] != q.weight[v]) return std::nullopt;
    TnwSignature sig;
    for (int x = 0; x < q.n; ++x) {
        if (x == u || x == v) continue;
        if (q.arrows(v, x) == 1) {
            // walk the tail away from the middle
            if (q.arrows(x, u) != 1) return std::nullopt;
            int len = 1, wt = q.weight[x];
            int prev = -1, cur = x;
            while (true) {
                int nxt = -1;
                for (int y = 0; y < q.n; ++y) {
                    if (y == u || y == v || y == prev || y == cur) continue;
                    if (q.arrows(cur, y) != 0) {
                        if (nxt >= 0) return std::nullopt;
                        nxt = y;
                    }
                }
                if (nxt < 0) break;
                if (q.weight[nxt] != wt) return std::nullopt;
                prev = cur;
                cur = nxt;
                ++len;
            }
            sig.n.push_back(len + 1);
            sig.w.push_back(wt / q.weight[v]);
        }
    }
    std::vector<size_t> order(sig.n.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (sig.n[a] != sig.n[b]) return sig.n[a] > sig.n[b];
        return sig.w[a] < sig.w[b];
    });
    TnwSignature sorted;
    for (size_t i : order) {
        sorted.n.push_back(sig.n[i]);
        sorted.w.push_back(sig.w[i]);
    }
    try {
        sorted.validate();
        WeightedQuiver built = build_tnw(sorted);
        normalize_weights(built);
        WeightedQuiver qq = q;
        normalize_weights(qq);
        if (find_isomorphism(qq, built)) return sorted;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

std::optional<std::vector<int>> match_tbc(const WeightedQuiver& q) {
    int u = -1, v = -1;  // weight-4, weight-1 middles
    for (int i = 0; i < q.n; ++i) {
        if (q.weight[i] == 4) {
            if (u >= 0) return std::nullopt;
            u = i;
        } else if (q.weight[i] == 1) {
            if (v >= 0) return std::nullopt;
            v = i;
        } else if (q.weight[i] != 2) {
            return std::nullopt;
        }
    }
    if (u < 0 || v < 0 || q.arrows(u, v) != 1) return std::nullopt;
    std::vector<int> tails;
    for (int x = 0; x < q.n; ++x) {
        if (x == u || x == v) continue;
        if (q.arrows(v, x) == 1) {
            if (q.arrows(x, u) != 1) return std::nullopt;
            int len = 1, prev = -1, cur = x;
            while (true) {
                int nxt = -1;
                for (int y = 0; y < q.n; ++y) {
                    if (y == u || y == v || y == prev || y == cur) continue;
                    if (q.arrows(cur, y) != 0) {
                        if (nxt >= 0) return std::nullopt;
                        nxt = y;
                    }
                }
                if (nxt < 0) break;
                prev = cur;
                cur = nxt;
                ++len;
            }
            tails.push_back(len);
        }
    }
    std::sort(tails.rbegin(), tails.rend());
    if (tails.empty() || tails.back() < 2) return std::nullopt;
    try {
        if (find_isomorphism(q, build_tbc(tails))) return tails;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

// AHU-style canonical string for a weighted tree given by an undirected
// simple quiver
std::string tree_code(const WeightedQuiver& q) {
    int n = q.n;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.arrows(i, j) > 0) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    // canonical rooted code, minimized over root choices (n small)
    std::string best;
    for (int root = 0; root < n; ++root) {
        std::vector<std::string> code(n);
        std::vector<int> order(n, -1), parent(n, -1);
        std::vector<int> stack{root};
        std::vector<int> post;
        parent[root] = root;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            post.push_back(x);
            for (int y : adj[x])
                if (parent[y] < 0) {
                    parent[y] = x;
                    stack.push_back(y);
                }
        }
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            int x = *it;
            std::vector<std::string> kids;
            for (int y : adj[x])
                if (y != parent[x] || (x == root && false)) {
                    if (parent[y] == x) kids.push_back(code[y]);
                }
            std::sort(kids.begin(), kids.end());
            std::string c = "(" + std::to_string(q.weight[x]) + ":";
            for (auto& kd : kids) c += kd;
            c += ")";
            code[x] = c;
        }
        if (best.empty() || code[root] < best) best = code[root];
    }
    return best;
}

bool is_simple_tree(const WeightedQuiver& q) {
    int edges = 0;
    for (int i = 0; i < q.n; ++i)
        for (int j = i + 1; j < q.n; ++j) {
            int a = std::abs(q.arrows(i, j));
            if (a > 1) return false;
            edges += a;
        }
    if (edges != q.n - 1) return false;
    return components_of(q).size() == 1;
}

std::optional<TypeLabel> match_tree(const WeightedQuiver& q0) {
    WeightedQuiver q = q0;
    normalize_weights(q);
    if (!is_simple_tree(q)) return std::nullopt;
    std::string code = tree_code(q);
    int n = q.n;
    auto try_cat = [&](const std::string& name, Family fam,
                       const std::string& display) -> std::optional<TypeLabel> {
        try {
            WeightedQuiver cand = build_dynkin(name);
            normalize_weights(cand);
            if (cand.n == n && tree_code(cand) == code) return TypeLabel{fam, display};
        } catch (const std::exception&) {
        }
        return std::nullopt;
    };
    std::string sn = std::to_string(n);
    if (auto r = try_cat("A_" + sn, Family::finite, "A_" + sn)) return r;
    if (n >= 2)
        if (auto r = try_cat("B_" + sn, Family::finite, "B_" + sn)) return r;
    if (n >= 3)
        if (auto r = try_cat("C_" + sn, Family::finite, "C_" + sn)) return r;
    if (n == 2)
        if (auto r = try_cat("G_2", Family::finite, "G_2")) return r;
    if (n >= 4)
        if (auto r = try_cat("D_" + sn, Family::finite, "D_" + sn)) return r;
    if (n >= 6 && n <= 8)
        if (auto r = try_cat("E_" + sn, Family::finite, "E_" + sn)) return r;
    if (n == 4)
        if (auto r = try_cat("F_4", Family::finite, "F_4")) return r;
    std::string sm = std::to_string(n - 1);
    if (n >= 5)
        if (auto r = try_cat("aff:D_" + sm, Family::affine, "D~_" + sm)) return r;
    if (n >= 4)
        if (auto r = try_cat("aff:B_" + sm, Family::affine, "B~_" + sm)) return r;
    if (n >= 3)
        if (auto r = try_cat("aff:C_" + sm, Family::affine, "C~_" + sm)) return r;
    if (n == 7)
        if (auto r = try_cat("aff:E_6", Family::affine, "E~_6")) return r;
    if (n == 8)
        if (auto r = try_cat("aff:E_7", Family::affine, "E~_7")) return r;
    if (n == 9)
        if (auto r = try_cat("aff:E_8", Family::affine, "E~_8")) return r;
    if (n == 5)
        if (auto r = try_cat("aff:F_4", Family::affine, "F~_4")) return r;
    if (n == 3)
        if (auto r = try_cat("aff:G_2", Family::affine, "G~_2")) return r;
    return std::nullopt;
}

std::optional<TypeLabel> match_cycle(const WeightedQuiver& q0) {
    WeightedQuiver q = q0;
    normalize_weights(q);
    if (q.n < 3) return std::nullopt;
    for (int i = 0; i < q.n; ++i)
        if (q.weight[i] != 1) return std::nullopt;
    int fwd = 0, bwd = 0, total = 0;
    for (int i = 0; i < q.n; ++i) {
        int deg = 0;
        for (int j = 0; j < q.n; ++j) {
            int a = std::abs(q.arrows(i, j));
            if (a > 1) return std::nullopt;
            deg += a;
        }
        if (deg != 2) return std::nullopt;
        total += deg;
    }
    if (total != 2 * q.n || components_of(q).size() != 1) return std::nullopt;
    // walk the cycle and count orientations
    int prev = 0, cur = -1;
    for (int j = 0; j < q.n; ++j)
        if (q.arrows(0, j) != 0) {
            cur = j;
            break;
        }
    if (q.arrows(prev, cur) > 0) ++fwd;
    else ++bwd;
    int steps = 1;
    while (cur != 0) {
        int nxt = -1;
        for (int j = 0; j < q.n; ++j)
            if (j != prev && q.arrows(cur, j) != 0) {
                nxt = j;
                break;
            }
        if (q.arrows(cur, nxt) > 0) ++fwd;
        else ++bwd;
        prev = cur;
        cur = nxt;
        ++steps;
        if (steps > q.n) return std::nullopt;
    }
    int p = std::max(fwd, bwd), r = std::min(fwd, bwd);
    if (r == 0) {
        // the cyclically oriented cycle sits in the finite D_p class (A_3 for p=3)
        if (p == 3) return TypeLabel{Family::finite, "A_3"};
        return TypeLabel{Family::finite, "D_" + std::to_string(p)};
    }
    return TypeLabel{Family::affine, "A_{" + std::to_string(p) + "," + std::to_string(r) + "}"};
}

std::optional<TypeLabel> match_quiver(const WeightedQuiver& q) {
    if (q.n == 1) return TypeLabel{Family::finite, "A_1"};
    if (q.n == 2) {
        WeightedQuiver qq = q;
        normalize_weights(qq);
        int a = std::abs(qq.arrows(0, 1));
        int w0 = std::min(qq.weight[0], qq.weight[1]);
        int w1 = std::max(qq.weight[0], qq.weight[1]);
        if (a == 1 && w0 == 1 && w1 == 1) return TypeLabel{Family::finite, "A_2"};
        if (a == 1 && w0 == 1 && w1 == 2) return TypeLabel{Family::finite, "B_2"};
        if (a == 1 && w0 == 1 && w1 == 3) return TypeLabel{Family::finite, "G_2"};
        if (a == 2 && w0 == 1 && w1 == 1) return TypeLabel{Family::affine, "A_{1,1}"};
        return std::nullopt;
    }
    if (auto r = match_tnw(q)) return classify(*r);
    if (auto r = match_tbc(q)) {
        TnwSignature sig;
        sig.bc = true;
        sig.n = *r;
        return classify(sig);
    }
    if (auto r = match_tree(q)) return r;
    if (auto r = match_cycle(q)) return r;
    return std::nullopt;
}

}  // namespace

std::optional<TypeLabel> recognize_component(const WeightedQuiver& comp, const Budget& budget) {
    if (auto r = match_quiver(comp)) return r;
    MutationClassGraph g = enumerate_mutation_class(comp, budget);
    for (const auto& rep : g.reps)
        if (auto r = match_quiver(rep)) return r;
    return std::nullopt;
}

std::string LabelProduct::str() const {
    if (unknown) return "unknown";
    if (factors.empty()) return "A_0";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " x ";
        s += factors[i].name;
    }
    return s;
}

LabelProduct classify_subalgebra(const WeightedQuiver& q, const std::vector<int>& frozen_set,
                                 const Budget& budget) {
    std::vector<char> drop(q.n, 0);
    for (int v : frozen_set) {
        if (v < 0 || v >= q.n) throw usage_error("classify_subalgebra: node out of range");
        drop[v] = 1;
    }
    std::vector<int> keep;
    for (int i = 0; i < q.n; ++i)
        if (!drop[i] && !q.frozen[i]) keep.push_back(i);
    WeightedQuiver sub = induced(q, keep);
    LabelProduct out;
    for (const auto& comp : components_of(sub)) {
        WeightedQuiver c = induced(sub, comp);
        auto label = recognize_component(c, budget);
        if (!label) {
            out.unknown = true;
            continue;
        }
        out.factors.push_back(*label);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const TypeLabel& a, const TypeLabel& b) { return a.name < b.name; });
    return out;
}

// --- double edge reachability ---------------------------------------------------

namespace {

bool has_double_edge_off(const WeightedQuiver& q, int avoid) {
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            if (i != avoid && j != avoid && q.arrows(i, j) >= 2) return true;
    return false;
}

std::string raw_key(const WeightedQuiver& q) {
    return std::string(reinterpret_cast<const char*>(q.e.data()), q.e.size() * sizeof(int));
}

}  // namespace

bool verify_reach_entry(const WeightedQuiver& rep, int node, const ReachEntry& entry) {
    if (!entry.ok) return false;
    WeightedQuiver cur = rep;
    for (int k : entry.path) {
        if (k == node) return false;
        cur = mutate(cur, k);
    }
    return has_double_edge_off(cur, node);
}

std::vector<std::vector<ReachEntry>> double_edge_reachability(const WeightedQuiver& q,
                                                              const Budget& budget) {
    MutationClassGraph g = enumerate_mutation_class(q, budget);
    if (g.status != ExploreStatus::complete)
        throw usage_error("double_edge_reachability: class enumeration truncated");
    std::vector<std::vector<ReachEntry>> table(g.size());
    for (size_t c = 0; c < g.size(); ++c) {
        table[c].resize(q.n);
        for (int v = 0; v < q.n; ++v) {
            if (q.frozen[v]) continue;
            // BFS over labeled quivers avoiding mutation at v
            std::unordered_map<std::string, int> seen;
            std::vector<WeightedQuiver> states{g.reps[c]};
            std::vector<int> parent{-1}, via{-1};
            seen[raw_key(g.reps[c])] = 0;
            bool found = false;
            for (size_t h = 0; h < states.size() && !found; ++h) {
                if (has_double_edge_off(states[h], v)) {
                    std::vector<int> path;
                    for (int x = int(h); x > 0; x = parent[x]) path.push_back(via[x]);
                    std::reverse(path.begin(), path.end());
                    table[c][v] = {true, path};
                    found = true;
                    break;
                }
                if (states.size() > budget.max_vertices) break;
                for (int k = 0; k < q.n; ++k) {
                    if (k == v || states[h].frozen[k]) continue;
                    WeightedQuiver child = mutate(states[h], k);
                    std::string key = raw_key(child);
                    if (seen.insert({key, int(states.size())}).second) {
                        states.push_back(std::move(child));
                        parent.push_back(int(h));
                        via.push_back(k);
                    }
                }
            }
        }
    }
    return table;
}

}  // namespace qmut
