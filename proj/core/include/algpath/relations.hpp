#pragma once

#include <cstdint>

#include "algpath/matrix.hpp"
#include "algpath/semiring.hpp"

namespace algpath {

/// Relation matrix of a binary relation on n elements: cell (i,j) is 1 iff
/// element i relates to element j. Cells are full bytes holding 0 or 1.
using relation_matrix = square_matrix<std::uint8_t>;

/// Boolean algebra: combine = or, extend = and, zero = 0.
struct boolean_semiring {
    std::uint8_t combine(std::uint8_t a, std::uint8_t b) const {
        return a | b;
    }
    std::uint8_t extend(std::uint8_t a, std::uint8_t b) const { return a & b; }
    std::uint8_t zero() const { return 0; }
    bool is_zero(std::uint8_t a) const { return a == 0; }
};

/// Transitive closure of a relation: result cell (i,j) is 1 iff a directed
/// path of length >= 1 leads from i to j in the relation digraph. The
/// diagonal is not forced; the closure is transitive, not reflexive.
relation_matrix transitive_closure(relation_matrix a);

/// Independent oracle: boolean sum of boolean matrix powers A^1..A^n.
/// Does not touch the closure kernel.
relation_matrix closure_by_powers(const relation_matrix& a);

}  // namespace algpath
