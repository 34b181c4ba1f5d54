#ifndef CIST_ORACLE_HPP
#define CIST_ORACLE_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "cist/partition.hpp"

namespace cist {

struct OracleResult {
    bool found = false;
    CistPartition partition;          // meaningful iff found
    std::uint64_t partitions_checked = 0;
};

namespace detail {

// Bitmask validity check mirroring is_cist_partition, specialized for n <= 25.
// v2_mask selects V2; vertex 0 is pinned to V1.
class MaskOracle {
public:
    explicit MaskOracle(const Graph& g) : n_(g.vertex_count()), nbr_(static_cast<size_t>(n_)) {
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) nbr_[static_cast<size_t>(v)] |= bit(w);
    }

    bool valid(std::uint32_t v2_mask) const {
        const std::uint32_t all = n_ == 32 ? ~0u : (1u << n_) - 1;
        const std::uint32_t v1_mask = all & ~v2_mask;
        if (!connected_within(v1_mask) || !connected_within(v2_mask)) return false;

        // Cross components: edges restricted to V1 x V2; every component must
        // carry at least as many edges as vertices (i.e. contain a cycle).
        std::uint32_t todo = all;
        while (todo) {
            int s = lowest(todo);
            std::uint32_t comp = bit(s);
            std::uint32_t frontier = comp;
            while (frontier) {
                int w = lowest(frontier);
                frontier &= frontier - 1;
                std::uint32_t other = (v2_mask & bit(w)) ? v1_mask : v2_mask;
                std::uint32_t add = nbr_[static_cast<size_t>(w)] & other & ~comp;
                comp |= add;
                frontier |= add;
            }
            std::uint64_t deg_sum = 0;
            int verts = 0;
            for (std::uint32_t m = comp; m;) {
                int w = lowest(m);
                m &= m - 1;
                ++verts;
                std::uint32_t other = (v2_mask & bit(w)) ? v1_mask : v2_mask;
                deg_sum += popcount(nbr_[static_cast<size_t>(w)] & other);
            }
            if (deg_sum / 2 < static_cast<std::uint64_t>(verts)) return false;
            todo &= ~comp;
        }
        return true;
    }

private:
    static std::uint32_t bit(int v) { return 1u << v; }
    static int lowest(std::uint32_t m) { return __builtin_ctz(m); }
    static int popcount(std::uint32_t m) { return __builtin_popcount(m); }

    bool connected_within(std::uint32_t mask) const {
        if (mask == 0) return false;
        std::uint32_t comp = bit(lowest(mask));
        std::uint32_t frontier = comp;
        while (frontier) {
            int w = lowest(frontier);
            frontier &= frontier - 1;
            std::uint32_t add = nbr_[static_cast<size_t>(w)] & mask & ~comp;
            comp |= add;
            frontier |= add;
        }
        return comp == mask;
    }

    int n_;
    std::vector<std::uint32_t> nbr_;
};

}  // namespace detail

// Exhaustive search for a 2-CIST-partition.  Vertex 0 is pinned to V1 and
// candidate V2 masks are scanned in increasing order, so the first hit is the
// lexicographically least partition.  With jobs > 1 the scan is chunked
// across threads and reduced by minimum mask, which leaves the result
// identical to the sequential scan.
inline OracleResult oracle_2cist_partition(const Graph& g, int jobs = 1) {
    const int n = g.vertex_count();
    if (n > 25) throw TooLarge("oracle capped at 25 vertices, got " + std::to_string(n));

    OracleResult res;
    if (n < 2) {
        res.partitions_checked = 0;
        return res;
    }
    const std::uint64_t total = (1ull << (n - 1)) - 1;
    detail::MaskOracle oracle(g);

    std::uint64_t best = 0;  // 0 = none found
    if (jobs <= 1 || total < (1u << 14)) {
        for (std::uint64_t m = 1; m <= total; ++m) {
            if (oracle.valid(static_cast<std::uint32_t>(m) << 1)) {
                best = m;
                break;
            }
        }
    } else {
        const std::uint64_t chunk = 1u << 13;
        std::atomic<std::uint64_t> next{1};
        std::atomic<std::uint64_t> found{0};
        auto worker = [&] {
            for (;;) {
                std::uint64_t lo = next.fetch_add(chunk);
                if (lo > total) return;
                std::uint64_t cur = found.load();
                if (cur != 0 && lo >= cur) return;
                std::uint64_t hi = std::min(total, lo + chunk - 1);
                for (std::uint64_t m = lo; m <= hi; ++m) {
                    if (oracle.valid(static_cast<std::uint32_t>(m) << 1)) {
                        std::uint64_t prev = found.load();
                        while ((prev == 0 || m < prev) &&
                               !found.compare_exchange_weak(prev, m)) {
                        }
                        return;
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        best = found.load();
    }

    if (best == 0) {
        res.found = false;
        res.partitions_checked = total;
        return res;
    }
    res.found = true;
    res.partitions_checked = best;  // masks 1..best were scanned
    std::vector<int> v1{0}, v2;
    for (int v = 1; v < n; ++v)
        ((best >> (v - 1)) & 1 ? v2 : v1).push_back(v);
    res.partition.v1 = VertexSet::from_sorted(std::move(v1));
    res.partition.v2 = VertexSet::from_sorted(std::move(v2));
    return res;
}

}  // namespace cist

#endif
