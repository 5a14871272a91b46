#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "algpath/matrix.hpp"
#include "algpath/semiring.hpp"

namespace algpath {

/// Extended real: a finite weight or the Unreachable sentinel. Unreachable
/// is absorbing for addition and the identity for min/max combination; it
/// is never a large finite stand-in, so sums cannot overflow into nonsense.
class distance {
public:
    constexpr distance() noexcept : value_(infinity()) {}
    explicit constexpr distance(double w) noexcept : value_(w) {}

    static constexpr distance unreachable() noexcept { return distance{}; }

    constexpr bool is_unreachable() const noexcept {
        return value_ == infinity();
    }
    /// Finite weight; only meaningful when not unreachable.
    constexpr double value() const noexcept { return value_; }

    friend constexpr distance operator+(distance a, distance b) noexcept {
        if (a.is_unreachable() || b.is_unreachable()) return unreachable();
        return distance{a.value_ + b.value_};
    }
    friend constexpr bool operator==(distance a, distance b) noexcept {
        return a.value_ == b.value_;
    }

private:
    static constexpr double infinity() {
        return std::numeric_limits<double>::infinity();
    }
    double value_;
};

using distance_matrix = square_matrix<distance>;

/// Tropical (min, +) algebra over extended reals; closure yields shortest
/// distances.
struct min_plus_semiring {
    distance combine(distance a, distance b) const {
        if (a.is_unreachable()) return b;
        if (b.is_unreachable()) return a;
        return b.value() < a.value() ? b : a;
    }
    distance extend(distance a, distance b) const { return a + b; }
    distance zero() const { return distance::unreachable(); }
    bool is_zero(distance a) const { return a.is_unreachable(); }
};

/// (max, +) variant for longest paths in acyclic digraphs.
struct max_plus_semiring {
    distance combine(distance a, distance b) const {
        if (a.is_unreachable()) return b;
        if (b.is_unreachable()) return a;
        return b.value() > a.value() ? b : a;
    }
    distance extend(distance a, distance b) const { return a + b; }
    distance zero() const { return distance::unreachable(); }
    bool is_zero(distance a) const { return a.is_unreachable(); }
};

/// Next-hop bookkeeping: cell (i,j) names the vertex after i on a shortest
/// (or longest) i->j path, absent when j is unreachable from i or i == j.
using successor_matrix = square_matrix<std::optional<std::uint32_t>>;

struct apsp_result {
    distance_matrix dist;
    successor_matrix next;
};

/// All-pairs shortest distances plus next-hop matrix.
///
/// Expects a fresh distance matrix: zero diagonal, arc weights elsewhere,
/// Unreachable where no arc exists. Negative weights are accepted; a
/// negative cycle leaves a negative diagonal cell and raises
/// errc::negative_cycle, since distances are undefined in that case.
/// The successor is replaced only on strict improvement, so ties keep the
/// first (lowest-k) shortest path found.
apsp_result floyd_warshall(const distance_matrix& d0);

/// One shortest i->j path as a vertex sequence (i first, j last).
/// Returns {i} when i == j and an empty sequence when j is unreachable.
std::vector<std::uint32_t> reconstruct_path(const successor_matrix& next,
                                            std::uint32_t i, std::uint32_t j);

/// Longest-path distances for an acyclic digraph via the (max, +) algebra.
/// Raises errc::cyclic_input when the digraph has a directed cycle.
distance_matrix longest_paths_dag(const distance_matrix& d0);

/// Longest-path variant with next-hop bookkeeping, for path reconstruction.
apsp_result longest_paths_dag_routes(const distance_matrix& d0);

}  // namespace algpath
