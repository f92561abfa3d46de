#include "qmut/mcg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qmut/canonical.hpp"
#include "qmut/framing.hpp"

namespace qmut {

WeightedQuiver apply_path(const WeightedQuiver& q, const std::vector<int>& path) {
    WeightedQuiver r = q;
    for (int k : path) r = mutate(r, k);
    return r;
}

GroupElement make_element(const WeightedQuiver& base, std::vector<int> path, Perm sigma,
                          bool validate) {
    GroupElement g;
    g.base = base;
    g.path.steps = std::move(path);
    g.sigma = std::move(sigma);
    if (validate) {
        WeightedQuiver end = apply_path(base, g.path.steps);
        if (!is_isomorphism(base, end, g.sigma))
            throw usage_error("group element: sigma is not an isomorphism to the path image");
    }
    return g;
}

GroupElement identity_element(const WeightedQuiver& base) {
    return make_element(base, {}, identity_perm(base.n), false);
}

bool is_identity_candidate(const GroupElement& g) {
    return g.path.steps.empty() && g.sigma == identity_perm(g.base.n);
}

GroupElement compose(const GroupElement& g, const GroupElement& h, bool validate) {
    if (!(g.base == h.base)) throw usage_error("compose: base quivers differ");
    GroupElement r;
    r.base = g.base;
    r.path.steps = g.path.steps;
    for (int k : h.path.steps) r.path.steps.push_back(g.sigma[k]);
    r.sigma = compose_perm(g.sigma, h.sigma);
    if (validate) {
        WeightedQuiver end = apply_path(r.base, r.path.steps);
        if (!is_isomorphism(r.base, end, r.sigma))
            throw usage_error("compose: produced an invalid element");
    }
    return r;
}

GroupElement inverse(const GroupElement& g) {
    Perm inv = invert_perm(g.sigma);
    std::vector<int> path(g.path.steps.rbegin(), g.path.steps.rend());
    for (int& k : path) k = inv[k];
    return make_element(g.base, std::move(path), std::move(inv), false);
}

GroupElement power(const GroupElement& g, long long k) {
    if (k < 0) return power(inverse(g), -k);
    GroupElement acc = identity_element(g.base);
    for (long long i = 0; i < k; ++i) acc = compose(acc, g, false);
    return acc;
}

bool is_trivial(const GroupElement& g) {
    const WeightedQuiver& q = g.base;
    FramedQuiver hat = frame_principal(q);
    FramedQuiver end = hat;
    for (int k : g.path.steps) {
        if (k < 0 || k >= q.n) return false;
        end = mutate(end, k);
    }
    // sigma extended by the identity on the frozen block
    for (int i = 0; i < q.n; ++i) {
        if (q.weight[i] != end.full.weight[g.sigma[i]]) return false;
        for (int j = 0; j < q.n; ++j)
            if (hat.full.arrows(i, j) != end.full.arrows(g.sigma[i], g.sigma[j])) return false;
        for (int f = q.n; f < hat.full.n; ++f)
            if (hat.full.arrows(i, f) != end.full.arrows(g.sigma[i], f)) return false;
    }
    return true;
}

bool elements_equal(const GroupElement& g, const GroupElement& h) {
    return is_trivial(compose(g, inverse(h), false));
}

namespace {

// odd/even tail positions j >= 3 (tail[a] holds i_{a+2}, so j odd <=> a odd)
void append_odd_even(const std::vector<int>& tail, std::vector<int>& path) {
    for (size_t a = 1; a < tail.size(); a += 2) path.push_back(tail[a]);
    for (size_t a = 2; a < tail.size(); a += 2) path.push_back(tail[a]);
}

GroupElement element_with_cycle_fallback(const WeightedQuiver& base, std::vector<int> path,
                                         const std::vector<int>& cycle) {
    // cycle = (a b c ...): try a->b->c->...->a, then the inverse direction.
    Perm sigma = identity_perm(base.n);
    for (size_t i = 0; i < cycle.size(); ++i) sigma[cycle[i]] = cycle[(i + 1) % cycle.size()];
    WeightedQuiver end = apply_path(base, path);
    if (is_isomorphism(base, end, sigma)) return make_element(base, std::move(path), sigma, false);
    sigma = identity_perm(base.n);
    for (size_t i = 0; i < cycle.size(); ++i) sigma[cycle[(i + 1) % cycle.size()]] = cycle[i];
    if (is_isomorphism(base, end, sigma)) return make_element(base, std::move(path), sigma, false);
    throw usage_error("twist: stated relabeling is not an isomorphism");
}

}  // namespace

GroupElement twist(const TnwSignature& sig, int tail) {
    sig.validate();
    if (tail < 0 || tail >= sig.tails()) throw usage_error("twist: tail index out of range");
    int wi = sig.bc ? 2 : sig.w[tail];
    if (!sig.bc && wi >= 4) throw usage_error("twist: no twist exists for tails of weight >= 4");
    WeightedQuiver base = build_signature(sig);
    TnwLayout lay = tnw_layout(sig);
    const auto& t = lay.tail[tail];
    std::vector<int> path;
    append_odd_even(t, path);
    int i2 = t[0];
    if (wi == 1) {
        path.insert(path.end(), {i2, lay.ninf, lay.n1});
        return element_with_cycle_fallback(base, std::move(path), {i2, lay.ninf, lay.n1});
    }
    if (wi == 2) {
        path.insert(path.end(), {i2, lay.ninf, lay.n1, i2, lay.n1});
    } else {  // wi == 3
        path.insert(path.end(), {i2, lay.ninf, lay.n1, i2, lay.ninf, i2, lay.n1});
    }
    return make_element(base, std::move(path), identity_perm(base.n), true);
}

GroupElement gamma_element(const TnwSignature& sig) {
    sig.validate();
    WeightedQuiver base = build_signature(sig);
    TnwLayout lay = tnw_layout(sig);
    if (sig.bc) {
        // mutation at the weight-4 node, then the weight-1 node
        return make_element(base, {lay.ninf, lay.n1}, identity_perm(base.n), true);
    }
    Perm sigma = identity_perm(base.n);
    std::swap(sigma[lay.n1], sigma[lay.ninf]);
    return make_element(base, {lay.ninf}, std::move(sigma), true);
}

GroupElement reddening_element(const TnwSignature& sig) {
    sig.validate();
    GroupElement g = gamma_element(sig);
    GroupElement acc = sig.bc ? g : compose(g, g, false);
    for (int i = 0; i < sig.tails(); ++i) {
        acc = compose(acc, twist(sig, i), false);
        acc = compose(acc, power(inverse(g), sig.bc ? 1 : sig.w[i]), false);
    }
    // revalidate the assembled element
    return make_element(acc.base, acc.path.steps, acc.sigma, true);
}

std::vector<int> source_sink_path(const TnwSignature& sig) {
    if (sig.bc) throw usage_error("source_sink_path: defined for non-BC signatures");
    TnwLayout lay = tnw_layout(sig);
    std::vector<int> s{lay.n1};
    for (const auto& t : lay.tail)
        for (size_t a = 1; a < t.size(); a += 2) s.push_back(t[a]);  // odd tail nodes (sources)
    for (const auto& t : lay.tail)
        for (size_t a = 2; a < t.size(); a += 2) s.push_back(t[a]);  // interior sinks
    for (const auto& t : lay.tail) s.push_back(t[0]);                // boundary sinks
    return s;
}

int delta_repeat_count(const TnwSignature& sig) {
    if (chi(sig) != 0) throw usage_error("delta: requires chi = 0");
    if (sig.bc) throw usage_error("delta: defined for non-BC signatures");
    // tail 1 = longest tail, minimal weight among the longest
    int best = 0;
    for (int i = 1; i < sig.tails(); ++i) {
        if (sig.n[i] > sig.n[best] || (sig.n[i] == sig.n[best] && sig.w[i] < sig.w[best]))
            best = i;
    }
    TnwSignature shortened = sig;
    shortened.n[best] -= 1;
    if (shortened.n[best] < 2) {
        shortened.n.erase(shortened.n.begin() + best);
        shortened.w.erase(shortened.w.begin() + best);
    }
    Rat k = Rat(sig.w[best]) / (chi(shortened) * sig.n[best]);
    if (!is_integer(k) || k <= 0) throw usage_error("delta: repeat count is not a positive integer");
    return int(to_int(k));
}

GroupElement source_sink_and_delta(const TnwSignature& sig) {
    int reps = delta_repeat_count(sig);
    WeightedQuiver base = build_signature(sig);
    std::vector<int> s = source_sink_path(sig);
    std::vector<int> path;
    for (int r = 0; r < reps; ++r) path.insert(path.end(), s.begin(), s.end());
    WeightedQuiver end = apply_path(base, path);
    Perm sigma = identity_perm(base.n);
    if (!is_isomorphism(base, end, sigma)) {
        auto found = find_isomorphism(base, end);
        if (!found) throw usage_error("delta: path does not return to an isomorphic quiver");
        sigma = *found;
    }
    return make_element(base, std::move(path), std::move(sigma), false);
}

GroupElement automorphism_element(const WeightedQuiver& base, const Perm& sigma) {
    return make_element(base, {}, sigma, true);
}

GroupElement tail_permutation_element(const TnwSignature& sig, const Perm& tail_perm) {
    sig.validate();
    if (int(tail_perm.size()) != sig.tails())
        throw usage_error("tail permutation: wrong size");
    WeightedQuiver base = build_signature(sig);
    TnwLayout lay = tnw_layout(sig);
    Perm sigma = identity_perm(base.n);
    for (int i = 0; i < sig.tails(); ++i) {
        int j = tail_perm[i];
        if (lay.tail[i].size() != lay.tail[j].size() || (!sig.bc && sig.w[i] != sig.w[j]))
            throw usage_error("tail permutation: tails differ in length or weight");
        for (size_t a = 0; a < lay.tail[i].size(); ++a) sigma[lay.tail[i][a]] = lay.tail[j][a];
    }
    return automorphism_element(base, sigma);
}

bool verify_relation(const std::vector<std::pair<GroupElement, long long>>& word) {
    if (word.empty()) return true;
    GroupElement acc = identity_element(word[0].first.base);
    for (const auto& [g, e] : word) acc = compose(acc, power(g, e), false);
    return is_trivial(acc);
}

// --- abstract twist group ---------------------------------------------------

AbstractTwistGroup::AbstractTwistGroup(const TnwSignature& sig) {
    sig.validate();
    bc = sig.bc;
    for (size_t i = 0; i < sig.n.size(); ++i) {
        n.push_back(sig.n[i]);
        w.push_back(sig.bc ? 1 : sig.w[i]);
    }
    ell = 1;
    for (long long ni : n) ell *= ni;
}

AbstractTwistElement AbstractTwistGroup::gamma() const {
    return {ell, std::vector<long long>(n.size(), 0)};
}

AbstractTwistElement AbstractTwistGroup::tau(int i) const {
    AbstractTwistElement e{w[i] * ell / n[i], std::vector<long long>(n.size(), 0)};
    e.residues[i] = 1;
    return e;
}

AbstractTwistElement AbstractTwistGroup::element(long long gamma_pow,
                                                 const std::vector<long long>& twist_pows) const {
    AbstractTwistElement e{gamma_pow * ell, std::vector<long long>(n.size(), 0)};
    for (size_t i = 0; i < n.size(); ++i) {
        e.z += twist_pows[i] * w[i] * ell / n[i];
        e.residues[i] = ((twist_pows[i] % n[i]) + n[i]) % n[i];
    }
    return e;
}

AbstractTwistElement AbstractTwistGroup::reddening() const {
    // r = gamma^2 prod_i tau_i gamma^{-w_i}   (BC: gamma prod_i tau_i gamma^{-1})
    std::vector<long long> ones(n.size(), 1);
    long long gp = bc ? 1 : 2;
    for (long long wi : w) gp -= wi;
    return element(gp, ones);
}

bool AbstractTwistGroup::member(const AbstractTwistElement& e) const {
    // e = a0*gamma + sum a_i*tau_i with a_i = residues[i] (mod n_i); the Z
    // component then has to differ from sum residues[i] w_i ell/n_i by a
    // multiple of gcd(ell, {w_i ell}) = ell.
    long long base = 0;
    for (size_t i = 0; i < n.size(); ++i) base += e.residues[i] * w[i] * ell / n[i];
    long long g = ell;
    for (size_t i = 0; i < n.size(); ++i) g = std::gcd(g, w[i] * ell);
    return (e.z - base) % g == 0;
}

long long AbstractTwistGroup::order_mod_gamma(const AbstractTwistElement& e) const {
    // smallest k >= 1 with k*e in <gamma> = {(t*ell, 0, ..., 0)}: the residue
    // conditions n_i | k r_i and the Z condition ell | k z are independent.
    long long k = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        long long r = ((e.residues[i] % n[i]) + n[i]) % n[i];
        if (r != 0) k = std::lcm(k, n[i] / std::gcd(n[i], r));
    }
    long long z = ((e.z % ell) + ell) % ell;
    if (z != 0) k = std::lcm(k, ell / std::gcd(ell, z));
    return k;
}

namespace {

// Smith normal form of a small integer matrix (in-place, long long).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<long long> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // find a pivot
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows && pr == rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = t + 1; i < rows; ++i)
                while (a[i][t] != 0) {
                    long long q = a[t][t] == 0 ? 0 : a[i][t] / a[t][t];
                    for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) {
                        std::swap(a[i], a[t]);
                        again = true;
                    }
                }
            for (size_t j = t + 1; j < cols; ++j)
                while (a[t][j] != 0) {
                    long long q = a[t][t] == 0 ? 0 : a[t][j] / a[t][t];
                    for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) {
                        for (size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][t]);
                        again = true;
                    }
                }
        }
        diag.push_back(std::abs(a[t][t]));
        ++t;
    }
    // normalize divisibility d1 | d2 | ...
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            long long g = std::gcd(diag[i], diag[j]);
            long long l = g == 0 ? 0 : diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

}  // namespace

AbstractTwistGroup::QuotientInfo AbstractTwistGroup::quotient_by_gamma() const {
    // Gamma_tau = <gamma, tau_1..tau_m | n_i tau_i = w_i gamma> (the kernel of
    // Z^{m+1} -> Z x prod Z_{n_i} is spanned by n_i e_i - w_i e_0), so the
    // quotient by gamma is the cokernel of the relation rows below.
    size_t m = n.size();
    std::vector<std::vector<long long>> rel;
    {
        std::vector<long long> r(m + 1, 0);
        r[0] = 1;  // gamma = 0
        rel.push_back(std::move(r));
    }
    for (size_t i = 0; i < m; ++i) {
        std::vector<long long> r(m + 1, 0);
        r[0] = -w[i];
        r[1 + i] = n[i];
        rel.push_back(std::move(r));
    }
    std::vector<long long> d = smith_diagonal(rel);
    QuotientInfo info;
    info.order = 1;
    if (d.size() < m + 1) throw std::logic_error("quotient_by_gamma: infinite quotient");
    for (long long v : d) {
        info.order *= v;
        if (v > 1) info.invariant_factors.push_back(Int(v));
    }
    return info;
}

Int AbstractTwistGroup::torsion_order() const {
    // |Gamma_tau^o|: elements with Z-component zero. Gamma_tau ≅ Z^{m+1}/K;
    // the torsion part has order |Gamma_tau/<gamma'>| ... compute directly:
    // solutions (a_1..a_m mod n_i, a_0) of a_0*ell + sum a_i w_i ell/n_i = 0.
    // Count residue tuples (a_i mod n_i) for which sum a_i w_i ell / n_i ≡ 0
    // (mod ell); each such tuple gives exactly one torsion element.
    size_t m = n.size();
    if (m == 0) return 1;
    // iterate over all residue combinations (products are small here)
    Int count = 0;
    std::vector<long long> a(m, 0);
    while (true) {
        long long s = 0;
        for (size_t i = 0; i < m; ++i) s = (s + a[i] * (w[i] * ell / n[i])) % ell;
        if (s % ell == 0) ++count;
        size_t i = 0;
        while (i < m) {
            if (++a[i] < n[i]) break;
            a[i] = 0;
            ++i;
        }
        if (i == m) break;
    }
    return count;
}

// --- word files -------------------------------------------------------------

std::vector<RelationWord> parse_word_file(const std::string& text) {
    std::vector<RelationWord> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        RelationWord w;
        w.text = line;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            WordToken t;
            size_t caret = tok.find('^');
            if (caret == std::string::npos) {
                t.gen = tok;
                t.exp = 1;
            } else {
                t.gen = tok.substr(0, caret);
                t.exp = std::stoll(tok.substr(caret + 1));
            }
            w.tokens.push_back(std::move(t));
        }
        if (!w.tokens.empty()) out.push_back(std::move(w));
    }
    return out;
}

GroupElement evaluate_word(const TnwSignature& sig, const std::vector<WordToken>& tokens) {
    WeightedQuiver base = build_signature(sig);
    GroupElement acc = identity_element(base);
    for (const auto& t : tokens) {
        GroupElement g = identity_element(base);
        if (t.gen == "gamma") {
            g = gamma_element(sig);
        } else if (t.gen == "delta") {
            g = source_sink_and_delta(sig);
        } else if (t.gen == "r") {
            g = reddening_element(sig);
        } else if (t.gen.rfind("tau", 0) == 0) {
            int i = std::stoi(t.gen.substr(3));
            g = twist(sig, i - 1);
        } else if (t.gen.rfind("aut:", 0) == 0) {
            // cycles of 1-based tail indices, e.g. aut:(2,3) or aut:(1,2,3)(4,5)
            Perm tp(sig.tails());
            std::iota(tp.begin(), tp.end(), 0);
            std::string cyc = t.gen.substr(4);
            size_t pos = 0;
            while ((pos = cyc.find('(', pos)) != std::string::npos) {
                size_t close = cyc.find(')', pos);
                if (close == std::string::npos) throw parse_error("aut: unbalanced cycle");
                std::istringstream cs(cyc.substr(pos + 1, close - pos - 1));
                std::vector<int> cycle;
                std::string item;
                while (std::getline(cs, item, ','))
                    if (!item.empty()) cycle.push_back(std::stoi(item) - 1);
                for (size_t i = 0; i < cycle.size(); ++i)
                    tp[cycle[i]] = cycle[(i + 1) % cycle.size()];
                pos = close + 1;
            }
            g = tail_permutation_element(sig, tp);
        } else {
            throw parse_error("unknown word token '" + t.gen + "'");
        }
        acc = compose(acc, power(g, t.exp), false);
    }
    return acc;
}

}  // namespace qmut
