#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "algpath/matrix.hpp"
#include "algpath/relations.hpp"

namespace algpath {

/// Path counts are exact arbitrary-precision integers: dense DAGs reach
/// 2^(n-2) paths between extreme vertices, past 64 bits near n = 66.
using big_int = boost::multiprecision::cpp_int;
using count_matrix = square_matrix<big_int>;

/// Counting algebra: combine = integer +, extend = integer *, zero = 0.
/// combine is not idempotent, so this instance has no closure fixpoint;
/// it is sound exactly on acyclic inputs, where every path is assembled
/// once.
struct counting_semiring {
    big_int combine(const big_int& a, const big_int& b) const { return a + b; }
    big_int extend(const big_int& a, const big_int& b) const { return a * b; }
    big_int zero() const { return 0; }
    bool is_zero(const big_int& a) const { return a.is_zero(); }
};

/// Number of distinct directed paths (length >= 1) between every vertex
/// pair of an acyclic digraph. Raises errc::cyclic_input when the
/// adjacency matrix has a directed cycle, where counts would diverge.
count_matrix count_paths(const relation_matrix& a);

}  // namespace algpath
