#include "crystal/partition.hpp"

#include <algorithm>
#include <numeric>

#include "crystal/error.hpp"

namespace crystal {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw invalid_argument("partition parts must be non-increasing");
    }
    // A zero followed by zeros only was stripped above; an interior zero
    // would have tripped the ordering check.
    size_ = std::accumulate(parts.begin(), parts.end(), 0);
    parts_ = std::move(parts);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(trusted_tag, std::vector<int> parts)
    : parts_(std::move(parts)) {
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    // λᵗ_i = #{ j : λ_j ≥ i }
    std::vector<int> t(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++t[i];
    return Partition(trusted_tag{}, std::move(t));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool interlace_plus(const Partition& lambda, const Partition& mu) noexcept {
    const auto n = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
    for (std::size_t i = 0; i < n; ++i) {
        const int d = lambda[i] - mu[i];
        if (d != 0 && d != 1) return false;
    }
    return true;
}

bool interlace_minus(const Partition& lambda, const Partition& mu) noexcept {
    const auto n = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] < mu[i]) return false;
        if (mu[i] < lambda[i + 1]) return false;
    }
    return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int max_size) {
    if (max_size < 0) throw invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = partitions_of(n);
        std::move(level.begin(), level.end(), std::back_inserter(out));
    }
    return out;
}

namespace {

// Row-by-row generators. `cur` holds the rows of μ chosen so far.

void vstrip_add(const Partition& lam, std::size_t row, int budget, int max_rows,
                std::vector<int>& cur, std::vector<Partition>& out) {
    const std::size_t len = static_cast<std::size_t>(lam.length());
    if (row >= len) {
        // Rows past λ may each gain one box while the previous row is ≥ 1.
        std::vector<int> ext = cur;
        out.emplace_back(ext);
        std::size_t r = row;
        int b = budget;
        while (b > 0 && (max_rows < 0 || static_cast<int>(r) < max_rows) &&
               (r == 0 || ext[r - 1] >= 1)) {
            ext.push_back(1);
            --b;
            ++r;
            out.emplace_back(ext);
        }
        return;
    }
    const int base = lam[row];
    for (int add = 0; add <= 1; ++add) {
        const int v = base + add;
        if (add > budget) break;
        if (row > 0 && v > cur[row - 1]) break;
        cur.push_back(v);
        vstrip_add(lam, row + 1, budget - add, max_rows, cur, out);
        cur.pop_back();
    }
}

void vstrip_remove(const Partition& lam, std::size_t row, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (row >= static_cast<std::size_t>(lam.length())) {
        std::vector<int> v = cur;
        while (!v.empty() && v.back() == 0) v.pop_back();
        out.emplace_back(std::move(v));
        return;
    }
    for (int rem = 0; rem <= 1; ++rem) {
        const int v = lam[row] - rem;
        // μ must stay non-increasing: v ≤ μ_{row-1}. Removing from an earlier
        // row can only make this tighter, so check against cur.
        if (row > 0 && v > cur[row - 1]) continue;
        cur.push_back(v);
        vstrip_remove(lam, row + 1, cur, out);
        cur.pop_back();
    }
}

void hstrip_add(const Partition& lam, std::size_t row, int budget, int max_rows,
                std::vector<int>& cur, std::vector<Partition>& out) {
    // μ_{row} ∈ [λ_row, λ_{row-1}] (μ_0 unbounded above), one extra row allowed.
    const std::size_t len = static_cast<std::size_t>(lam.length());
    if (row > len) {
        out.emplace_back(cur);
        return;
    }
    const int lo = lam[row];
    const int hi = row == 0 ? lo + budget : std::min(lam[row - 1], lo + budget);
    for (int v = lo; v <= hi; ++v) {
        if (v > 0 && max_rows >= 0 && static_cast<int>(row) >= max_rows) break;
        if (v == 0) {
            // Nothing further can be non-zero.
            out.emplace_back(cur);
            continue;
        }
        cur.push_back(v);
        hstrip_add(lam, row + 1, budget - (v - lo), max_rows, cur, out);
        cur.pop_back();
    }
}

void hstrip_remove(const Partition& lam, std::size_t row, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    // μ_row ∈ [λ_{row+1}, λ_row].
    const std::size_t len = static_cast<std::size_t>(lam.length());
    if (row >= len) {
        out.emplace_back(cur);
        return;
    }
    const int lo = lam[row + 1];
    const int hi = lam[row];
    for (int v = lo; v <= hi; ++v) {
        if (v == 0) {
            out.emplace_back(cur);
            continue;
        }
        cur.push_back(v);
        hstrip_remove(lam, row + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> add_vertical_strips(const Partition& lambda, int max_added, int max_rows) {
    std::vector<Partition> out;
    if (max_added < 0) return out;
    std::vector<int> cur;
    vstrip_add(lambda, 0, max_added, max_rows, cur, out);
    return out;
}

std::vector<Partition> remove_vertical_strips(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    vstrip_remove(lambda, 0, cur, out);
    return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& lambda, int max_added, int max_rows) {
    std::vector<Partition> out;
    if (max_added < 0) return out;
    std::vector<int> cur;
    hstrip_add(lambda, 0, max_added, max_rows, cur, out);
    return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    hstrip_remove(lambda, 0, cur, out);
    return out;
}

std::size_t partition_hash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace crystal
