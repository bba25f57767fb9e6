#ifndef VECON_VSET_HPP
#define VECON_VSET_HPP

// Vertex sets are sorted, duplicate-free vectors of ids; every helper below
// assumes and preserves that form.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace vecon {

using vertex_set = std::vector<int>;

inline vertex_set normalized(vertex_set v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool is_normalized(std::span<const int> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

inline bool set_contains(std::span<const int> v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

inline vertex_set set_union(std::span<const int> a, std::span<const int> b) {
    vertex_set out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline vertex_set set_intersection(std::span<const int> a, std::span<const int> b) {
    vertex_set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline vertex_set set_difference(std::span<const int> a, std::span<const int> b) {
    vertex_set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(std::span<const int> a, std::span<const int> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline vertex_set set_insert(vertex_set v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
    return v;
}

inline vertex_set set_erase(vertex_set v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
    return v;
}

// Bitmask helpers for exhaustive desk-scale loops (n <= 64).
inline std::uint64_t mask_of(std::span<const int> v) {
    std::uint64_t m = 0;
    for (int x : v) m |= std::uint64_t{1} << x;
    return m;
}

inline vertex_set set_from_mask(std::uint64_t m) {
    vertex_set out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

} // namespace vecon

#endif
