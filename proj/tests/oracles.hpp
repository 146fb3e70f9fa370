#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "crystal/chamber.hpp"
#include "crystal/partition.hpp"
#include "crystal/series.hpp"

namespace oracle {

using poly = std::map<std::vector<int>, mpz_class>;  // exponent vector → coefficient

inline poly to_poly(const crystal::TruncatedSeries& s) {
    poly p;
    for (const auto& t : s.terms()) p[t.exp] = t.coef;
    return p;
}

inline crystal::TruncatedSeries from_poly(const poly& p, int nv, int D) {
    crystal::TruncatedSeries s(nv, D);
    for (const auto& [e, c] : p) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg <= D) s.add_term(e, c);
    }
    return s;
}

inline poly mul(const poly& a, const poly& b, int D) {
    poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            int deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] = ea[i] + eb[i];
            if (deg > D) continue;
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

/// Number of plane partitions of each size ≤ D, by filling rows
/// (each row a partition, dominated entrywise by the row above).
inline std::vector<long> plane_partition_counts(int D) {
    std::vector<long> count(static_cast<std::size_t>(D + 1), 0);
    std::function<void(const std::vector<int>&, int)> rows = [&](const std::vector<int>& above, int used) {
        ++count[static_cast<std::size_t>(used)];
        // Next row: non-increasing, entrywise ≤ above, non-empty.
        std::vector<int> cur;
        std::function<void(std::size_t, int)> fill = [&](std::size_t j, int total) {
            if (!cur.empty()) rows(cur, total);
            if (j >= above.size()) return;
            const int cap = std::min(above[j], cur.empty() ? above[j] : cur.back());
            for (int v = 1; v <= cap && total + v <= D; ++v) {
                cur.push_back(v);
                fill(j + 1, total + v);
                cur.pop_back();
            }
        };
        fill(0, used);
    };
    // First row: any partition; model it as a row under an unbounded one.
    rows(std::vector<int>(static_cast<std::size_t>(D), D), 0);
    return count;
}

/// All partitions with size ≤ n via brute-force filtering of tuples.
inline std::vector<std::vector<int>> all_partitions_naive(int n) {
    std::vector<std::vector<int>> out{{}};
    std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cur, int left) {
        for (int p = 1; p <= left; ++p) {
            if (!cur.empty() && p > cur.back()) break;
            cur.push_back(p);
            out.push_back(cur);
            grow(cur, left - p);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    grow(cur, n);
    return out;
}

inline bool plus_naive(const std::vector<int>& l, const std::vector<int>& m) {
    const std::size_t n = std::max(l.size(), m.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int a = i < l.size() ? l[i] : 0, b = i < m.size() ? m[i] : 0;
        if (a - b != 0 && a - b != 1) return false;
    }
    return true;
}

inline std::vector<int> transpose_naive(const std::vector<int>& l) {
    std::vector<int> t;
    for (int i = 1; !l.empty() && i <= l[0]; ++i)
        t.push_back(static_cast<int>(std::count_if(l.begin(), l.end(), [i](int x) { return x >= i; })));
    return t;
}

inline bool minus_naive(const std::vector<int>& l, const std::vector<int>& m) {
    return plus_naive(transpose_naive(l), transpose_naive(m));
}

/// Generalized plane partitions by trying every partition of size ≤ B at
/// every slice of [-T, T], rules evaluated straight from θ. Weight via the
/// chamber weights; keeps total degree ≤ D.
inline poly configurations_naive(const crystal::ChamberSpec& spec, int D, int B, int T, bool transposed = false,
                                 int max_rows = -1) {
    const int L = spec.L();
    auto parts = all_partitions_naive(B);
    if (max_rows >= 0)
        parts.erase(std::remove_if(parts.begin(), parts.end(),
                                   [max_rows](const auto& p) { return static_cast<int>(p.size()) > max_rows; }),
                    parts.end());
    std::vector<crystal::WeightMonomial> w;
    for (int i = 0; i < L; ++i) w.push_back(crystal::chamber_weight(spec, i));
    // state: (partition index, boxes per residue) → count
    std::map<std::pair<std::size_t, std::vector<int>>, mpz_class> cur, next;
    cur[{0, std::vector<int>(static_cast<std::size_t>(L), 0)}] = 1;
    for (int i = -T; i < T; ++i) {
        const int t = spec.theta_inverse(2 * i + 1);
        bool plus = spec.sigma(t) == 1;
        if (transposed) plus = !plus;
        const bool asc = t < 0;
        next.clear();
        for (const auto& [key, c] : cur) {
            const auto& lam = parts[key.first];
            int used = 0;
            for (int x : key.second) used += x;
            for (std::size_t m = 0; m < parts.size(); ++m) {
                const auto& mu = parts[m];
                int s = 0;
                for (int x : mu) s += x;
                if (used + s > B) continue;
                if (i + 1 == T && !mu.empty()) continue;
                const bool ok = asc ? (plus ? plus_naive(mu, lam) : minus_naive(mu, lam))
                                    : (plus ? plus_naive(lam, mu) : minus_naive(lam, mu));
                if (!ok) continue;
                auto counts = key.second;
                counts[static_cast<std::size_t>(((i + 1) % L + L) % L)] += s;
                next[{m, counts}] += c;
            }
        }
        std::swap(cur, next);
    }
    poly z;
    for (const auto& [key, c] : cur) {
        std::vector<int> e(static_cast<std::size_t>(L), 0);
        for (int r = 0; r < L; ++r)
            for (int j = 0; j < L; ++j)
                e[static_cast<std::size_t>(j)] += key.second[static_cast<std::size_t>(r)] *
                                                  w[static_cast<std::size_t>(r)].exponents[static_cast<std::size_t>(j)];
        int deg = 0;
        for (int x : e) deg += x;
        if (deg <= D) z[e] += c;
    }
    return z;
}

/// Cofactor expansion along the first row.
inline crystal::TruncatedSeries cofactor_det(const std::vector<std::vector<crystal::TruncatedSeries>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    crystal::TruncatedSeries total(m[0][0].num_vars(), m[0][0].cutoff());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<crystal::TruncatedSeries>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<crystal::TruncatedSeries> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const auto term = m[0][j] * cofactor_det(minor);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

/// Expand ∏ (1 + c_i z^{s_i}) / ∏ (1 − d_i z^{t_i}) naively in a
/// (z-exponent, q-exponents) dictionary. Denominators by geometric series.
struct laurent_factor {
    std::vector<int> q;  // q-exponent of the monomial
    long coef;           // ±1
    int z;               // z-power
    bool denominator;
};

inline std::map<int, poly> expand_symbol(const std::vector<laurent_factor>& factors, int nv, int D) {
    std::map<int, poly> f;
    f[0][std::vector<int>(static_cast<std::size_t>(nv), 0)] = 1;
    for (const auto& fac : factors) {
        int deg = 0;
        for (int x : fac.q) deg += x;
        // terms: (coef·q^e z^s)^j for j = 0.. (j ≤ 1 for numerators)
        std::vector<std::pair<int, poly>> terms;
        const int jmax = fac.denominator ? (deg == 0 ? 0 : D / deg) : 1;
        for (int j = 0; j <= jmax; ++j) {
            std::vector<int> e(fac.q.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = fac.q[i] * j;
            mpz_class c = 1;
            for (int k = 0; k < j; ++k) c *= fac.coef;
            terms.push_back({fac.z * j, poly{{e, c}}});
        }
        std::map<int, poly> g;
        for (const auto& [zn, p] : f)
            for (const auto& [zs, t] : terms) {
                auto prod = mul(p, t, D);
                for (const auto& [e, c] : prod) g[zn + zs][e] += c;
            }
        for (auto& [zn, p] : g)
            for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
        f = std::move(g);
    }
    return f;
}

} // namespace oracle
