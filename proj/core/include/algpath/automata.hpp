#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algpath/matrix.hpp"

namespace algpath {

/// Nondeterministic transition relation of a finite automaton. States and
/// letters keep their declared order; transitions are kept as sorted state
/// indices per (state, letter), absent entries meaning the empty set.
/// Initial/final states play no role here.
struct transition_table {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    // moves[state][letter] -> sorted target state indices
    std::vector<std::vector<std::vector<std::uint32_t>>> moves;

    std::optional<std::uint32_t> state_index(std::string_view name) const;
    std::optional<std::uint32_t> letter_index(std::string_view name) const;
};

/// Builds an empty table, validating shape: nonempty state list, nonempty
/// alphabet of at most 64 letters (cells are bitmasks over the alphabet).
transition_table make_transition_table(std::vector<std::string> states,
                                       std::vector<std::string> alphabet);

/// Adds q to delta(p, letter); duplicates are fine.
void add_transition(transition_table& t, std::uint32_t p, std::uint32_t letter,
                    std::uint32_t q);

/// Letter subsets per state pair, as bitmasks over the alphabet ordering.
struct letter_set_matrix {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    square_matrix<std::uint64_t> cells;

    /// Cell contents as lexicographically sorted letter names.
    std::vector<std::string> letters(std::size_t p, std::size_t q) const;
};

/// Lattice algebra on letter sets: combine = union, extend = intersection,
/// zero = the empty set.
struct letter_set_semiring {
    std::uint64_t combine(std::uint64_t a, std::uint64_t b) const {
        return a | b;
    }
    std::uint64_t extend(std::uint64_t a, std::uint64_t b) const {
        return a & b;
    }
    std::uint64_t zero() const { return 0; }
    bool is_zero(std::uint64_t a) const { return a == 0; }
};

/// One-step matrix: cell (p,q) collects the letters with a direct p -> q
/// transition.
letter_set_matrix letter_matrix(const transition_table& t);

/// Closure: letter a lands in cell (p,q) iff some path p -> ... -> q of
/// length >= 1 uses arcs all labeled a, i.e. reading a^k for some k >= 1
/// can take the automaton from p to q.
letter_set_matrix letter_power_closure(const transition_table& t);

/// Independent oracle: per-letter breadth-first reachability from p over
/// only that letter's transitions. Returns the letters reaching q in >= 1
/// steps, lexicographically sorted. Raises errc::unknown_state.
std::vector<std::string> oracle_letter_reachability(const transition_table& t,
                                                    std::string_view p,
                                                    std::string_view q);

}  // namespace algpath
