#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chern {

/// Weakly decreasing tuple of positive integers. The empty partition (weight 0)
/// denotes the constant monomial.
using Partition = std::vector<int>;

inline int weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline bool is_valid_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

/// Canonical order within a fixed weight: reverse-lexicographic on part
/// tuples, largest first part first. For n=4 this yields
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline bool canonical_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

/// Total order across weights: by weight, then canonical within a weight.
/// Used as the map comparator for polynomial terms.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = weight(a), wb = weight(b);
        if (wa != wb) return wa < wb;
        return canonical_less(a, b);
    }
};

namespace detail {
inline void partitions_rec(int n, int max_part, Partition& prefix,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(n - k, k, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace detail

/// All partitions of n, each exactly once, in canonical order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: negative n");
    std::vector<Partition> out;
    Partition prefix;
    detail::partitions_rec(n, n, prefix, out);
    if (n == 0) out = {Partition{}};
    return out;
}

/// Number of partitions of n.
inline std::size_t partition_count(int n) { return partitions_of(n).size(); }

/// Position of p in partitions_of(n). Throws std::domain_error if
/// weight(p) != n.
inline std::size_t index_of(const Partition& p, int n) {
    if (weight(p) != n)
        throw std::domain_error("index_of: partition weight does not match n");
    auto all = partitions_of(n);
    auto it = std::find(all.begin(), all.end(), p);
    if (it == all.end())
        throw std::domain_error("index_of: not a valid partition");
    return static_cast<std::size_t>(it - all.begin());
}

/// Monomial name in the c_i alphabet, e.g. (2,1,1) -> "c1^2*c2".
/// Factors are printed smallest index first to match the usual c1^a*c2^b style.
inline std::string monomial_name(const Partition& p) {
    if (p.empty()) return "1";
    std::string s;
    // p is weakly decreasing; walk from the back for ascending indices.
    for (auto it = p.rbegin(); it != p.rend();) {
        int part = *it;
        int mult = 0;
        while (it != p.rend() && *it == part) {
            ++mult;
            ++it;
        }
        if (!s.empty()) s += "*";
        s += "c" + std::to_string(part);
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s;
}

}  // namespace chern
