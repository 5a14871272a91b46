#include "algpath/shortest_paths.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "algpath/acyclic.hpp"
#include "algpath/errors.hpp"

namespace algpath {

namespace {

// Distance plus first hop, so the generic kernel can carry path bookkeeping
// alongside the tropical algebra. The hop plays no part in comparisons;
// combine keeps the incumbent on ties, which pins the first (lowest-k)
// shortest path.
struct route {
    distance d;
    std::int32_t next = -1;
};

template <bool Maximize>
struct route_semiring {
    route combine(const route& a, const route& b) const {
        if (a.d.is_unreachable()) return b;
        if (b.d.is_unreachable()) return a;
        const bool better =
            Maximize ? b.d.value() > a.d.value() : b.d.value() < a.d.value();
        return better ? b : a;
    }
    route extend(const route& a, const route& b) const {
        if (a.d.is_unreachable() || b.d.is_unreachable()) return zero();
        return route{a.d + b.d, a.next};
    }
    route zero() const { return route{}; }
    bool is_zero(const route& r) const { return r.d.is_unreachable(); }
};

template <bool Maximize>
apsp_result route_closure(const distance_matrix& d0) {
    const std::size_t n = d0.size();
    square_matrix<route> w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const distance d = d0(i, j);
            if (d.is_unreachable()) continue;
            w(i, j) = route{d, i == j ? -1 : static_cast<std::int32_t>(j)};
        }

    closure_in_place(w, route_semiring<Maximize>{});

    apsp_result out{distance_matrix(n), successor_matrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const route& r = w(i, j);
            out.dist(i, j) = r.d;
            if (!r.d.is_unreachable() && i != j && r.next >= 0)
                out.next(i, j) = static_cast<std::uint32_t>(r.next);
        }
    return out;
}

void require_acyclic(const distance_matrix& d0) {
    const bool cyclic =
        has_directed_cycle(d0.size(), [&](std::size_t i, std::size_t j) {
            return i != j && !d0(i, j).is_unreachable();
        });
    if (cyclic)
        throw error(errc::cyclic_input,
                    "digraph has a directed cycle; longest path is undefined");
}

}  // namespace

apsp_result floyd_warshall(const distance_matrix& d0) {
    apsp_result out = route_closure<false>(d0);
    for (std::size_t i = 0; i < out.dist.size(); ++i) {
        const distance d = out.dist(i, i);
        if (!d.is_unreachable() && d.value() < 0)
            throw error(errc::negative_cycle,
                        "negative cycle through vertex " + std::to_string(i));
    }
    return out;
}

std::vector<std::uint32_t> reconstruct_path(const successor_matrix& next,
                                            std::uint32_t i, std::uint32_t j) {
    if (i >= next.size() || j >= next.size())
        throw std::out_of_range("reconstruct_path: vertex out of range");
    if (i == j) return {i};
    if (!next(i, j)) return {};

    std::vector<std::uint32_t> path{i};
    std::uint32_t at = i;
    while (at != j) {
        const auto& hop = next(at, j);
        if (!hop || path.size() > next.size())
            throw std::logic_error("successor matrix does not lead to target");
        at = *hop;
        path.push_back(at);
    }
    return path;
}

distance_matrix longest_paths_dag(const distance_matrix& d0) {
    require_acyclic(d0);
    distance_matrix d = d0;
    closure_in_place(d, max_plus_semiring{});
    return d;
}

apsp_result longest_paths_dag_routes(const distance_matrix& d0) {
    require_acyclic(d0);
    return route_closure<true>(d0);
}

}  // namespace algpath
