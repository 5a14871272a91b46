#pragma once

#include <concepts>
#include <cstddef>

#include "algpath/matrix.hpp"

namespace algpath {

/// Contract for the algebra the closure kernel is generic over.
///
/// An instance supplies:
///   combine(a, b)  -- path-choice operation; associative and commutative.
///                     Must satisfy combine(x, zero()) == x.
///   extend(a, b)   -- path-concatenation operation; associative.
///                     zero() is absorbing: extend(zero(), x) == extend(x, zero()) == zero().
///   zero()         -- the "absent" sentinel (no edge / no path).
///   is_zero(x)     -- true exactly for values equal to zero(); lets the
///                     kernel skip updates whose contribution is zero().
///
/// combine is additionally idempotent for every instance whose closure is a
/// fixpoint (boolean, tropical, string sets, letter sets). The counting
/// instance uses plain integer addition, which is not idempotent; its
/// results are meaningful only on acyclic inputs, where the kernel visits
/// each path exactly once and never needs the fixpoint property.
///
/// Instances must be pure value transformations: combine/extend may not
/// observe iteration state or perform I/O.
template <typename S, typename T>
concept closure_semiring = requires(const S s, const T a, const T b) {
    { s.combine(a, b) } -> std::convertible_to<T>;
    { s.extend(a, b) } -> std::convertible_to<T>;
    { s.zero() } -> std::convertible_to<T>;
    { s.is_zero(a) } -> std::convertible_to<bool>;
};

/// The generic Warshall-style closure kernel.
///
/// Runs the k-outer / i / j triple loop, updating cells in place:
///
///   w[i][j] = combine(w[i][j], extend(w[i][k], w[k][j]))
///
/// Iteration k reads row k and column k as already updated within the same
/// iteration. Updates where either factor is zero() are skipped; by the
/// zero laws they contribute combine(w[i][j], zero()) == w[i][j].
///
/// Deterministic for deterministic semirings; no I/O, no state beyond the
/// matrix cells themselves.
template <typename T, closure_semiring<T> S>
square_matrix<T>& closure_in_place(square_matrix<T>& w, const S& s) {
    const std::size_t n = w.size();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (s.is_zero(w(i, k))) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (s.is_zero(w(k, j))) continue;
                w(i, j) = s.combine(w(i, j), s.extend(w(i, k), w(k, j)));
            }
        }
    }
    return w;
}

}  // namespace algpath
