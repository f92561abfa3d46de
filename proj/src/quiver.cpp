#include "qmut/quiver.hpp"

#include <map>
#include <set>
#include <sstream>

namespace qmut {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm compose_perm(const Perm& outer, const Perm& inner) {
    Perm r(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
    return r;
}

Perm invert_perm(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
    return r;
}

void WeightedQuiver::check_invariants() const {
    if (int(weight.size()) != n || int(frozen.size()) != n || e.size() != size_t(n) * n)
        throw usage_error("quiver: inconsistent sizes");
    bool seen_frozen = false;
    for (int i = 0; i < n; ++i) {
        if (weight[i] < 1) throw malformed_weight_error("quiver: node weight < 1");
        if (frozen[i]) seen_frozen = true;
        else if (seen_frozen) throw usage_error("quiver: mutable node after frozen node");
    }
    for (int i = 0; i < n; ++i) {
        if (arrows(i, i) != 0) throw usage_error("quiver: self loop");
        for (int j = 0; j < n; ++j) {
            if (arrows(i, j) != -arrows(j, i)) throw usage_error("quiver: not skew");
            if (frozen[i] && frozen[j] && arrows(i, j) != 0)
                throw usage_error("quiver: frozen-frozen arrow");
        }
    }
}

void WeightedQuiver::drop_frozen_frozen_arrows() {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (frozen[i] && frozen[j]) e[size_t(i) * n + j] = 0;
}

namespace {
long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}
}  // namespace

WeightedQuiver mutate(const WeightedQuiver& q, int k) {
    if (k < 0 || k >= q.n) throw usage_error("mutate: node out of range");
    if (q.frozen[k]) throw usage_error("mutate: node is frozen");
    WeightedQuiver r = q;
    // Composite step. In exchange-matrix terms (eps_ij = e_ij w_j / gcd(w_i,w_j))
    // the standard rule adds |eps_ik| eps_kj for a positive bundle pair; pulled
    // back to arrow counts that is
    //   delta e_ij = e_ik e_kj w_k gcd(w_i,w_j) / (gcd(w_i,w_k) gcd(w_k,w_j)),
    // an integer for every weight pattern. A 2-cycle between i and j cancels
    // automatically in the signed matrix.
    for (int i = 0; i < q.n; ++i) {
        if (i == k || q.arrows(i, k) <= 0) continue;
        for (int j = 0; j < q.n; ++j) {
            if (j == k || j == i || q.arrows(k, j) <= 0) continue;
            if (q.frozen[i] && q.frozen[j]) continue;
            long long num = (long long)q.arrows(i, k) * q.arrows(k, j) * q.weight[k] *
                            gcd_ll(q.weight[i], q.weight[j]);
            long long den = gcd_ll(q.weight[i], q.weight[k]) * gcd_ll(q.weight[k], q.weight[j]);
            if (num % den != 0)
                throw malformed_weight_error("mutate: non-integer arrow count");
            r.add_arrows(i, j, int(num / den));
        }
    }
    // Reverse every arrow incident to k.
    for (int i = 0; i < q.n; ++i) {
        r.e[size_t(k) * q.n + i] = -q.arrows(k, i);
        r.e[size_t(i) * q.n + k] = -q.arrows(i, k);
    }
    return r;
}

WeightedQuiver apply_perm(const WeightedQuiver& q, const Perm& p) {
    if (int(p.size()) != q.n) throw usage_error("apply_perm: size mismatch");
    WeightedQuiver r(q.n);
    for (int i = 0; i < q.n; ++i) {
        r.weight[p[i]] = q.weight[i];
        r.frozen[p[i]] = q.frozen[i];
    }
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            r.e[size_t(p[i]) * q.n + p[j]] = q.arrows(i, j);
    return r;
}

bool is_isomorphism(const WeightedQuiver& a, const WeightedQuiver& b, const Perm& p) {
    if (a.n != b.n || int(p.size()) != a.n) return false;
    std::vector<char> hit(a.n, 0);
    for (int i = 0; i < a.n; ++i) {
        if (p[i] < 0 || p[i] >= a.n || hit[p[i]]) return false;
        hit[p[i]] = 1;
        if (a.weight[i] != b.weight[p[i]] || a.frozen[i] != b.frozen[p[i]]) return false;
    }
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            if (a.arrows(i, j) != b.arrows(p[i], p[j])) return false;
    return true;
}

ExchangeMatrix exchange_matrix(const WeightedQuiver& q) {
    ExchangeMatrix m;
    m.n = q.n;
    m.eps.assign(size_t(q.n) * q.n, 0);
    m.sym.assign(q.weight.begin(), q.weight.end());
    m.frozen.assign(q.frozen.begin(), q.frozen.end());
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            m.eps[size_t(i) * q.n + j] = (long long)q.arrows(i, j) * q.weight[j] /
                                         gcd_ll(q.weight[i], q.weight[j]);
    return m;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, int k) {
    if (k < 0 || k >= m.n) throw usage_error("mutate_matrix: node out of range");
    if (m.frozen[k]) throw usage_error("mutate_matrix: node is frozen");
    ExchangeMatrix r = m;
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            if (i == k || j == k) {
                r.eps[size_t(i) * m.n + j] = -m.at(i, j);
            } else {
                long long a = m.at(i, k), b = m.at(k, j);
                long long num = std::abs(a) * b + a * std::abs(b);
                r.eps[size_t(i) * m.n + j] = m.at(i, j) + num / 2;
            }
        }
    }
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (r.frozen[i] && r.frozen[j]) r.eps[size_t(i) * m.n + j] = 0;
    return r;
}

bool is_skew_symmetrizable(const ExchangeMatrix& m) {
    // eps_ij / D_j == -eps_ji / D_i, cross-multiplied to stay exact.
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) * (long long)m.sym[i] != -m.at(j, i) * (long long)m.sym[j])
                return false;
    return true;
}

WeightedQuiver quiver_of_matrix(const ExchangeMatrix& m) {
    WeightedQuiver q(m.n);
    for (int i = 0; i < m.n; ++i) {
        q.weight[i] = m.sym[i];
        q.frozen[i] = m.frozen[i];
    }
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            long long v = m.at(i, j) * gcd_ll(m.sym[i], m.sym[j]);
            if (v % m.sym[j] != 0) throw malformed_weight_error("matrix entry not divisible by weight");
            q.e[size_t(i) * m.n + j] = int(v / m.sym[j]);
        }
    q.check_invariants();
    return q;
}

std::string quiver_to_text(const WeightedQuiver& q, const std::string& frame_kind) {
    std::ostringstream os;
    if (!frame_kind.empty()) os << "# frame " << frame_kind << "\n";
    os << "quiver " << q.n << "\n";
    for (int i = 0; i < q.n; ++i) {
        os << "node " << i << " weight " << q.weight[i];
        if (q.frozen[i]) os << " frozen";
        os << "\n";
    }
    for (int i = 0; i < q.n; ++i)
        for (int j = i + 1; j < q.n; ++j) {
            int m = q.arrows(i, j);
            if (m > 0) os << "arrow " << i << " " << j << " " << m << "\n";
            else if (m < 0) os << "arrow " << j << " " << i << " " << -m << "\n";
        }
    return os.str();
}

ParsedQuiver quiver_from_text(const std::string& text) {
    ParsedQuiver out;
    std::istringstream is(text);
    std::string line;
    int n = -1;
    std::set<int> nodes_seen;
    std::set<std::pair<int, int>> pairs_seen;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            if (key == "frame") ls >> out.frame_kind;
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        auto fail = [&](const std::string& msg) {
            throw parse_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "quiver") {
            if (n >= 0) fail("duplicate quiver header");
            if (!(ls >> n) || n < 0) fail("bad node count");
            out.q = WeightedQuiver(n);
        } else if (tok == "node") {
            if (n < 0) fail("node before quiver header");
            int id, w;
            std::string kw;
            if (!(ls >> id >> kw >> w) || kw != "weight") fail("bad node line");
            if (id < 0 || id >= n) fail("node id out of range");
            if (!nodes_seen.insert(id).second) fail("duplicate node id");
            if (w < 1) fail("node weight < 1");
            out.q.weight[id] = w;
            std::string flag;
            if (ls >> flag) {
                if (flag != "frozen") fail("unexpected token after weight");
                out.q.frozen[id] = 1;
            }
        } else if (tok == "arrow") {
            if (n < 0) fail("arrow before quiver header");
            int i, j, m;
            if (!(ls >> i >> j >> m)) fail("bad arrow line");
            if (i < 0 || i >= n || j < 0 || j >= n) fail("arrow endpoint out of range");
            if (i == j) fail("self loop");
            if (m <= 0) fail("arrow multiplicity must be positive");
            if (!pairs_seen.insert({std::min(i, j), std::max(i, j)}).second)
                fail("duplicate arrow pair");
            if (out.q.frozen[i] && out.q.frozen[j]) continue;  // discarded
            out.q.set_arrows(i, j, m);
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (n < 0) throw parse_error("missing quiver header");
    if (int(nodes_seen.size()) != n) throw parse_error("missing node lines");
    out.q.drop_frozen_frozen_arrows();
    out.q.check_invariants();
    return out;
}

}  // namespace qmut
