#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "algpath/path_count.hpp"
#include "algpath/path_enum.hpp"
#include "algpath/relations.hpp"

namespace algpath {

/// Allowed index gaps for scattered subwords of a length-n word: a subset
/// of {1, ..., n-1}. Empty means only single letters qualify.
using gap_set = std::set<unsigned>;

/// Parses "2,3,4" into a gap set; the empty string yields the empty set.
/// Raises errc::parse_error on malformed tokens. Range validity against a
/// concrete n is checked separately by the operations below.
gap_set parse_gaps(std::string_view text);

/// The gap digraph for (n, M): arc i -> j iff j - i is in M. All arcs go
/// forward, so the digraph is acyclic by construction.
/// Raises errc::invalid_gap when some gap lies outside 1..n-1.
relation_matrix build_m_graph(std::size_t n, const gap_set& m);

struct complexity_report {
    std::size_t n = 0;
    gap_set gaps;
    big_int k;        // number of gap-respecting subwords, length >= 1
    count_matrix w;   // nontrivial subword counts per index pair
    count_matrix r;   // w plus the identity; k is the sum of r's cells
};

/// Subword complexity of a length-n rainbow word under gap set M, computed
/// from exact path counts on the gap digraph. Independent of the letters.
complexity_report m_complexity(std::size_t n, const gap_set& m);

/// Per-index-pair sets of nontrivial (length >= 2) gap-respecting subwords
/// of a rainbow word, cells sorted lexicographically.
/// Raises errc::not_rainbow on a repeated letter.
square_matrix<std::vector<std::string>> m_subword_matrix(
    std::string_view word, const gap_set& m, enum_limits limits = {});

/// Union of all m_subword_matrix cells; with include_singletons, the n
/// single letters join the set and the total size equals m_complexity().k.
std::set<std::string> enumerate_m_subwords(std::string_view word,
                                           const gap_set& m,
                                           bool include_singletons,
                                           enum_limits limits = {});

}  // namespace algpath
