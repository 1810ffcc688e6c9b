#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mucode/errors.hpp"

namespace mucode {

/// Adjacency rows packed into 64-bit limbs, for exact maximum-clique search.
class CompatGraph {
  public:
    explicit CompatGraph(std::size_t n) : n_(n), limbs_((n + 63) / 64), rows_(n * limbs_, 0) {}

    std::size_t size() const { return n_; }

    void add_edge(std::size_t a, std::size_t b) {
        set(a, b);
        set(b, a);
    }

    bool adjacent(std::size_t a, std::size_t b) const {
        return (rows_[a * limbs_ + b / 64] >> (b % 64)) & 1ULL;
    }

    const std::uint64_t* row(std::size_t a) const { return rows_.data() + a * limbs_; }
    std::size_t limbs() const { return limbs_; }

  private:
    void set(std::size_t a, std::size_t b) { rows_[a * limbs_ + b / 64] |= 1ULL << (b % 64); }

    std::size_t n_, limbs_;
    std::vector<std::uint64_t> rows_;
};

/// Exact maximum clique by branch and bound over vertices in index order,
/// include-branch first. The first maximum-size clique discovered is the
/// lexicographically least one, and pruning never discards a clique larger
/// than the incumbent, so the returned witness is the lexicographically
/// least maximum clique regardless of how much was pruned.
inline std::vector<std::size_t> max_clique(const CompatGraph& g,
                                           std::size_t node_budget = 50'000'000) {
    const std::size_t n = g.size();
    const std::size_t L = g.limbs();
    std::vector<std::size_t> best, current;
    std::vector<std::uint64_t> cand(L, 0);
    for (std::size_t v = 0; v < n; ++v) cand[v / 64] |= 1ULL << (v % 64);
    std::size_t nodes = 0;

    auto popcount_all = [L](const std::uint64_t* m) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < L; ++i) c += static_cast<std::size_t>(__builtin_popcountll(m[i]));
        return c;
    };

    // Recursive lambda over (first candidate index, candidate mask).
    auto rec = [&](auto&& self, std::size_t from, std::vector<std::uint64_t>& mask) -> void {
        if (++nodes > node_budget) throw capacity_error("max_clique: node budget exceeded");
        if (current.size() + popcount_all(mask.data()) <= best.size()) return;
        for (std::size_t v = from; v < n; ++v) {
            if (!((mask[v / 64] >> (v % 64)) & 1ULL)) continue;
            if (current.size() + popcount_all(mask.data()) <= best.size()) return;
            // include v
            std::vector<std::uint64_t> next(L);
            const std::uint64_t* rv = g.row(v);
            for (std::size_t i = 0; i < L; ++i) next[i] = mask[i] & rv[i];
            // restrict to vertices after v
            for (std::size_t i = 0; i < L; ++i) {
                if (i < v / 64)
                    next[i] = 0;
                else if (i == v / 64)
                    next[i] &= ~((v % 64 == 63) ? ~0ULL : ((1ULL << ((v % 64) + 1)) - 1));
            }
            current.push_back(v);
            if (current.size() > best.size()) best = current;
            self(self, v + 1, next);
            current.pop_back();
            mask[v / 64] &= ~(1ULL << (v % 64));  // exclude v for later branches
        }
    };
    rec(rec, 0, cand);
    return best;
}

}  // namespace mucode
