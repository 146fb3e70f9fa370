#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crystal {

/// Integer partition stored as its positive parts, non-increasing.
/// Trailing zeros are implicit: operator[] returns 0 past the last part.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros (they are dropped); throws invalid_argument on
    /// negative or increasing entries.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }

    int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }

    Partition transpose() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    struct trusted_tag {};
    Partition(trusted_tag, std::vector<int> parts);

    std::vector<int> parts_;
    int size_ = 0;

};

inline int size(const Partition& p) noexcept { return p.size(); }
inline Partition transpose(const Partition& p) { return p.transpose(); }

/// λ ≻⁺ μ : λ_i − μ_i ∈ {0, 1} for every row.
bool interlace_plus(const Partition& lambda, const Partition& mu) noexcept;

/// λ ≻⁻ μ : λ_1 ≥ μ_1 ≥ λ_2 ≥ μ_2 ≥ ...
bool interlace_minus(const Partition& lambda, const Partition& mu) noexcept;

/// All partitions of exactly n, lexicographically descending.
std::vector<Partition> partitions_of(int n);

/// All partitions with size ≤ max_size ordered by (size, lexicographic descending).
std::vector<Partition> enumerate_partitions(int max_size);

// Strip moves used by the evolution engines. `max_added` bounds |μ| − |λ|;
// `max_rows` (if ≥ 0) bounds the length of the result.
std::vector<Partition> add_vertical_strips(const Partition& lambda, int max_added, int max_rows = -1);
std::vector<Partition> remove_vertical_strips(const Partition& lambda);
std::vector<Partition> add_horizontal_strips(const Partition& lambda, int max_added, int max_rows = -1);
std::vector<Partition> remove_horizontal_strips(const Partition& lambda);

struct partition_hash {
    std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace crystal

template <>
struct std::hash<crystal::Partition> : crystal::partition_hash {};
