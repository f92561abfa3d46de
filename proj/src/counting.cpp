#include "qmut/counting.hpp"

#include <algorithm>

namespace qmut {

Int binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Int catalan(long long i) {
    if (i < 0) throw usage_error("catalan: negative index");
    return binom(2 * i, i) / (i + 1);
}

Int middle_binom(long long i) {
    if (i < 0) throw usage_error("middle_binom: negative index");
    return binom(2 * i, i);
}

SeriesPoly SeriesPoly::add(const SeriesPoly& o) const {
    SeriesPoly r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c[i] = at(i) + o.at(i);
    return r;
}

SeriesPoly SeriesPoly::sub(const SeriesPoly& o) const {
    SeriesPoly r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c[i] = at(i) - o.at(i);
    return r;
}

SeriesPoly SeriesPoly::mul(const SeriesPoly& o) const {
    SeriesPoly r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i)
        for (int j = 0; i + j <= r.order(); ++j) r.c[i + j] += c[i] * o.at(j);
    return r;
}

SeriesPoly SeriesPoly::div(const SeriesPoly& o) const {
    if (o.at(0) != 1 && o.at(0) != -1)
        throw usage_error("series division needs a unit constant term");
    SeriesPoly r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) {
        Int acc = at(i);
        for (int j = 1; j <= i; ++j) acc -= o.at(j) * r.c[i - j];
        r.c[i] = acc / o.at(0);
    }
    return r;
}

SeriesPoly SeriesPoly::shift(int k) const {
    SeriesPoly r(order());
    for (int i = 0; i + k <= r.order(); ++i)
        if (i + k >= 0) r.c[i + k] = at(i);
    return r;
}

SeriesPoly SeriesPoly::scale(const Int& s) const {
    SeriesPoly r = *this;
    for (auto& v : r.c) v *= s;
    return r;
}

SeriesPoly series_one(int order) {
    SeriesPoly s(order);
    s.c[0] = 1;
    return s;
}

SeriesPoly series_catalan(int order) {
    SeriesPoly s(order);
    for (int i = 0; i <= order; ++i) s.c[i] = catalan(i);
    return s;
}

SeriesPoly series_catalan_truncated(int k, int order) {
    SeriesPoly s(order);
    for (int i = 0; i < k && i <= order; ++i) s.c[i] = catalan(i);
    return s;
}

SeriesPoly series_middle_binom(int order) {
    SeriesPoly s(order);
    for (int i = 0; i <= order; ++i) s.c[i] = middle_binom(i);
    return s;
}

SeriesPoly series_sqrt_one_minus_4x(int order) {
    // 1 - 2xC(x)
    return series_one(order).sub(series_catalan(order).shift(1).scale(2));
}

SeriesPoly series_finite_d(int order) {
    SeriesPoly s(order);
    for (int i = 0; i <= order; ++i) s.c[i] = finite_d(i);
    return s;
}

SeriesPoly series_dhat(int order) {
    SeriesPoly s(order);
    for (int i = 3; i <= order; ++i) s.c[i] = Int(9) * (i - 2) * middle_binom(i - 2);
    return s;
}

std::vector<std::string> series_identity_ids() {
    std::vector<std::string> ids{"sqrt", "binomial-inverse", "derivative-binomial",
                                 "dhat-functional", "dhat-closed", "d-series"};
    for (int q = 1; q <= 4; ++q) ids.push_back("apq-lemma-q" + std::to_string(q));
    for (int q = 1; q <= 4; ++q) ids.push_back("aq-functional-q" + std::to_string(q));
    return ids;
}

bool series_identity_check(const std::string& id, int order) {
    int N = order;
    SeriesPoly C = series_catalan(N), B = series_middle_binom(N);
    SeriesPoly sq = series_sqrt_one_minus_4x(N);
    if (id == "sqrt") {
        SeriesPoly lhs = sq.mul(sq);
        SeriesPoly rhs(N);
        rhs.c[0] = 1;
        if (N >= 1) rhs.c[1] = -4;
        return lhs == rhs;
    }
    if (id == "binomial-inverse") return sq.mul(B) == series_one(N);
    if (id == "derivative-binomial") {
        // 2(1-4x)^{-3/2} = sum_{i>=1} i binom(2i,i) x^{i-1}
        SeriesPoly lhs = B.mul(B).mul(B).scale(2);
        SeriesPoly rhs(N);
        for (int i = 1; i <= N + 1; ++i)
            if (i - 1 <= N) rhs.c[i - 1] = Int(i) * middle_binom(i);
        return lhs == rhs;
    }
    if (id.rfind("apq-lemma-q", 0) == 0) {
        int q = std::stoi(id.substr(11));
        SeriesPoly lhs =
            C.sub(series_catalan_truncated(q, N)).shift(1).scale(2).div(sq);
        SeriesPoly rhs(N);
        for (int i = 1; i + q <= N; ++i) {
            Rat v = Rat(i, i + q) * Rat(middle_binom(i) * middle_binom(q));
            if (!is_integer(v)) return false;
            rhs.c[i + q] = to_int(v);
        }
        return lhs == rhs;
    }
    if (id.rfind("aq-functional-q", 0) == 0) {
        int q = std::stoi(id.substr(15));
        // A_q(x) = sum_{p>=1} A_{p,q} x^{p+q} from the closed form
        SeriesPoly Aq(N);
        for (int p = 1; p + q <= N; ++p) Aq.c[p + q] = apq_closed(p, q);
        SeriesPoly rhs = C.shift(1).scale(2).mul(Aq).add(
            C.sub(series_catalan_truncated(q, N)).shift(1).scale(q));
        return Aq == rhs;
    }
    if (id == "dhat-functional") {
        SeriesPoly Dh = series_dhat(N), D = series_finite_d(N);
        SeriesPoly two_x(N);
        if (N >= 1) two_x.c[1] = 2;
        SeriesPoly rhs = C.shift(1).scale(2).mul(Dh).add(
            D.mul(D).sub(series_one(N)).sub(two_x).shift(1).scale(2));
        return Dh == rhs;
    }
    if (id == "dhat-closed") {
        SeriesPoly lhs = B.mul(B).mul(B).shift(3).scale(18);
        return lhs == series_dhat(N);
    }
    if (id == "d-series") {
        SeriesPoly rhs = B.shift(1).scale(3).sub(C.shift(1).scale(2)).add(series_one(N));
        return series_finite_d(N) == rhs;
    }
    throw usage_error("unknown series identity '" + id + "'");
}

// counts -----------------------------------------------------------------------

Rat affine_variable_count(const TnwSignature& sig, long long ell) {
    Rat x = chi(sig);
    if (x <= 0) throw usage_error("affine_variable_count: requires chi > 0");
    Rat vars = 0;
    for (int ni : sig.n) vars += Rat((ni - 1)) * ni;
    return vars + Rat(ell) * sig.rank() / x;
}

Rat affine_cluster_count(const TnwSignature& sig) {
    Rat x = chi(sig);
    if (x <= 0) throw usage_error("affine_cluster_count: requires chi > 0");
    Rat r = Rat(2) / x;
    for (int ni : sig.n) r *= Rat(binom(2 * ni - 1, ni));
    return r;
}

Int apq_closed(int p, int q) {
    if (p < 1 || q < 1) throw usage_error("apq: p,q >= 1");
    Rat v = Rat(Int(p) * q, Int(2) * (p + q)) * Rat(middle_binom(p) * middle_binom(q));
    return to_int(v);
}

Int apq_recurrence(int p, int q) {
    if (p < 1 || q < 1) throw usage_error("apq: p,q >= 1");
    if (p < q) std::swap(p, q);
    // A_{p+1,q} = 2 sum_{i=0}^{p-1} C_i A_{p-i,q} + q C_{p+q}, seeded from
    // A_{1,1} = 1 and the p<->q symmetry for the row bases A_{1,q}.
    std::vector<std::vector<Int>> A(q + 1, std::vector<Int>(p + 1, 0));
    for (int row = 1; row <= q; ++row) {
        if (row == 1)
            A[1][1] = 1;
        else
            A[row][1] = A[1][row];  // A_{1,row} = A_{row,1}
        for (int pp = 1; pp < (row == q ? p : std::max(p, q)); ++pp) {
            if (pp + 1 > p) break;
            Int s = 0;
            for (int i = 0; i <= pp - 1; ++i) s += catalan(i) * A[row][pp - i];
            A[row][pp + 1] = 2 * s + Int(row) * catalan(pp + row);
        }
    }
    return A[q][p];
}

Int finite_d(int n) {
    if (n < 0) throw usage_error("finite_d: negative");
    if (n == 0) return 1;
    Rat v = Rat(3 * n - 2, n) * Rat(binom(2 * (n - 1), n - 1));
    return to_int(v);
}

Int dn_closed(int n) {
    if (n < 3) throw usage_error("dn_closed: n >= 3");
    return Int(9) * (n - 2) * middle_binom(n - 2);
}

Int dn_recurrence(int n) {
    if (n < 3) throw usage_error("dn_recurrence: n >= 3");
    // Dhat_{m+1} = 2 sum_{i=0}^{m-3} C_i Dhat_{m-i} + 2 sum_{j=0}^{m} D_j D_{m-j};
    // the first sum is empty at m = 2, which seeds Dhat_3 = 18.
    std::vector<Int> dh(n + 1, 0);
    for (int m = 2; m < n; ++m) {
        Int s = 0;
        for (int i = 0; i <= m - 3; ++i) s += catalan(i) * dh[m - i];
        Int t = 0;
        for (int j = 0; j <= m; ++j) t += finite_d(j) * finite_d(m - j);
        dh[m + 1] = 2 * s + 2 * t;
    }
    return dh[n];
}

Int finite_cluster_count(const std::string& label) {
    if (label == "A_0") return 1;
    if (label == "E_6") return 833;
    if (label == "E_7") return 4160;
    if (label == "E_8") return 25080;
    if (label == "F_4") return 105;
    if (label == "G_2") return 8;
    auto num = [&](size_t k) { return std::stoi(label.substr(k)); };
    if (label.rfind("A_", 0) == 0) return catalan(num(2) + 1);
    if (label.rfind("B_", 0) == 0 || label.rfind("C_", 0) == 0) return middle_binom(num(2));
    if (label.rfind("D_", 0) == 0) return finite_d(num(2));
    throw usage_error("finite_cluster_count: unknown label " + label);
}

Rat label_cluster_count(const std::string& label) {
    if (auto sig = signature_of_name(label)) return affine_cluster_count(*sig);
    return Rat(finite_cluster_count(label));
}

// face vectors --------------------------------------------------------------------

FaceVector face_vector_point() { return {0, {Int(1)}}; }

FaceVector product(const FaceVector& a, const FaceVector& b) {
    FaceVector r;
    r.rank = a.rank + b.rank;
    r.by_dim.assign(r.rank + 1, 0);
    for (int i = 0; i <= a.rank; ++i)
        for (int j = 0; j <= b.rank; ++j) r.by_dim[i + j] += a.by_dim[i] * b.by_dim[j];
    return r;
}

FaceVector facet_recursion(int rank, const std::vector<std::pair<FaceVector, Int>>& corank1) {
    if (rank < 1) throw inconsistent_decomposition_error("facet_recursion: rank must be >= 1");
    if (corank1.empty())
        throw inconsistent_decomposition_error("facet_recursion: empty decomposition");
    FaceVector r;
    r.rank = rank;
    r.by_dim.assign(rank + 1, 0);
    r.by_dim[rank] = 1;
    for (int k = 0; k < rank; ++k) {
        Int s = 0;
        for (const auto& [b, mult] : corank1) {
            if (b.rank != rank - 1)
                throw inconsistent_decomposition_error("facet_recursion: part of wrong rank");
            s += mult * b.by_dim[k];
        }
        if (s % (rank - k) != 0)
            throw inconsistent_decomposition_error("facet_recursion: non-integral face count");
        r.by_dim[k] = s / (rank - k);
    }
    return r;
}

// doubly extended -------------------------------------------------------------------

namespace {
std::pair<int, int> leading_tail(const TnwSignature& sig) {
    // longest tail, minimal weight among the longest
    int best = 0;
    for (int i = 1; i < sig.tails(); ++i)
        if (sig.n[i] > sig.n[best] ||
            (sig.n[i] == sig.n[best] && !sig.bc && sig.w[i] < sig.w[best]))
            best = i;
    return {sig.n[best], sig.bc ? 1 : sig.w[best]};
}
}  // namespace

Rat doubly_extended_coset_count(const TnwSignature& sig,
                                const std::vector<std::vector<Rat>>& tail_counts) {
    if (chi(sig) != 0) throw usage_error("doubly_extended_coset_count: requires chi = 0");
    if (int(tail_counts.size()) != sig.tails())
        throw usage_error("doubly_extended_coset_count: wrong tail count data");
    auto [n1, w1] = leading_tail(sig);
    Rat total = 0;
    for (int i = 0; i < sig.tails(); ++i) {
        int positions = sig.n[i] - 1;
        if (int(tail_counts[i].size()) != positions)
            throw usage_error("doubly_extended_coset_count: wrong node count data");
        Rat s = 0;
        for (const Rat& c : tail_counts[i]) s += c;
        total += Rat(sig.n[i]) * s;
    }
    return total * Rat(w1, n1) / sig.rank();
}

Rat doubly_extended_variable_count(const TnwSignature& sig, bool self_dual) {
    if (chi(sig) != 0) throw usage_error("doubly_extended_variable_count: requires chi = 0");
    auto [n1, w1] = leading_tail(sig);
    Rat vars = 0;
    for (int ni : sig.n) vars += Rat(ni - 1) * ni;
    return Rat(self_dual ? 2 : 1) * Rat(w1, n1) * vars;
}

}  // namespace qmut
