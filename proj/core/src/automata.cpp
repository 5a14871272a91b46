#include "algpath/automata.hpp"

#include <algorithm>
#include <deque>

#include "algpath/errors.hpp"
#include "algpath/semiring.hpp"

namespace algpath {

std::optional<std::uint32_t> transition_table::state_index(
    std::string_view name) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

std::optional<std::uint32_t> transition_table::letter_index(
    std::string_view name) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

transition_table make_transition_table(std::vector<std::string> states,
                                       std::vector<std::string> alphabet) {
    if (states.empty())
        throw error(errc::parse_error, "automaton needs at least one state");
    if (alphabet.empty())
        throw error(errc::parse_error, "automaton needs at least one letter");
    if (alphabet.size() > 64)
        throw error(errc::alphabet_too_large,
                    "alphabet has " + std::to_string(alphabet.size()) +
                        " letters; at most 64 supported");
    transition_table t;
    t.states = std::move(states);
    t.alphabet = std::move(alphabet);
    t.moves.assign(t.states.size(),
                   std::vector<std::vector<std::uint32_t>>(t.alphabet.size()));
    return t;
}

void add_transition(transition_table& t, std::uint32_t p, std::uint32_t letter,
                    std::uint32_t q) {
    auto& targets = t.moves.at(p).at(letter);
    if (q >= t.states.size())
        throw error(errc::unknown_state,
                    "transition target index out of range");
    const auto at = std::lower_bound(targets.begin(), targets.end(), q);
    if (at == targets.end() || *at != q) targets.insert(at, q);
}

std::vector<std::string> letter_set_matrix::letters(std::size_t p,
                                                    std::size_t q) const {
    std::vector<std::string> out;
    const std::uint64_t mask = cells(p, q);
    for (std::size_t a = 0; a < alphabet.size(); ++a)
        if (mask & (std::uint64_t{1} << a)) out.push_back(alphabet[a]);
    std::sort(out.begin(), out.end());
    return out;
}

letter_set_matrix letter_matrix(const transition_table& t) {
    const std::size_t n = t.states.size();
    letter_set_matrix m{t.states, t.alphabet, square_matrix<std::uint64_t>(n, 0)};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t a = 0; a < t.alphabet.size(); ++a)
            for (std::uint32_t q : t.moves[p][a])
                m.cells(p, q) |= std::uint64_t{1} << a;
    return m;
}

letter_set_matrix letter_power_closure(const transition_table& t) {
    letter_set_matrix m = letter_matrix(t);
    closure_in_place(m.cells, letter_set_semiring{});
    return m;
}

std::vector<std::string> oracle_letter_reachability(const transition_table& t,
                                                    std::string_view p,
                                                    std::string_view q) {
    const auto from = t.state_index(p);
    const auto to = t.state_index(q);
    if (!from)
        throw error(errc::unknown_state, "unknown state '" + std::string(p) + "'");
    if (!to)
        throw error(errc::unknown_state, "unknown state '" + std::string(q) + "'");

    std::vector<std::string> letters;
    for (std::size_t a = 0; a < t.alphabet.size(); ++a) {
        std::vector<bool> reached(t.states.size(), false);
        std::deque<std::uint32_t> queue;
        // Seed with one-step successors so q counts only at >= 1 steps.
        for (std::uint32_t s : t.moves[*from][a])
            if (!reached[s]) {
                reached[s] = true;
                queue.push_back(s);
            }
        while (!queue.empty()) {
            const std::uint32_t s = queue.front();
            queue.pop_front();
            for (std::uint32_t nxt : t.moves[s][a])
                if (!reached[nxt]) {
                    reached[nxt] = true;
                    queue.push_back(nxt);
                }
        }
        if (reached[*to]) letters.push_back(t.alphabet[a]);
    }
    std::sort(letters.begin(), letters.end());
    return letters;
}

}  // namespace algpath
