#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "algpath/matrix.hpp"
#include "algpath/relations.hpp"

namespace algpath {

/// A simple directed path written as its vertex sequence, length >= 2.
/// std::set orders cells lexicographically by index sequence, which is the
/// canonical serialization order.
using vertex_string = std::vector<std::uint32_t>;
using path_set = std::set<vertex_string>;
using path_set_matrix = square_matrix<path_set>;

/// Concatenation under the vertex-disjointness filter:
///
///   { a . tail(b) | a in p, b in q, vertices(a) and vertices(tail(b)) disjoint }
///
/// where tail drops b's first vertex (the junction vertex, already the last
/// vertex of a). Intended for cell sets p at (i,k) and q at (k,j).
path_set trimmed_product(const path_set& p, const path_set& q);

/// Guards against the factorial worst case of exhaustive enumeration.
/// A cell exceeding max_paths_per_cell raises errc::path_limit_exceeded.
struct enum_limits {
    std::size_t max_paths_per_cell = 100000;
};

/// String-set algebra: combine = set union, extend = trimmed_product,
/// zero = the empty set. The enumeration skips updates with an empty
/// factor; the zero laws make that a pure optimization.
struct path_set_semiring {
    explicit path_set_semiring(enum_limits limits = {}) : limits_(limits) {}

    path_set combine(const path_set& a, const path_set& b) const;
    path_set extend(const path_set& a, const path_set& b) const {
        return trimmed_product(a, b);
    }
    path_set zero() const { return {}; }
    bool is_zero(const path_set& a) const { return a.empty(); }

private:
    enum_limits limits_;
};

/// All simple directed paths (>= 2 vertices) between every vertex pair of
/// a digraph, possibly cyclic. Cell (i,j) of the result holds exactly the
/// simple i->j paths; diagonal cells stay empty. Self-loops are rejected
/// (errc::self_loop): their length-2 strings would repeat a vertex.
path_set_matrix enumerate_paths(const relation_matrix& a,
                                enum_limits limits = {});

}  // namespace algpath
