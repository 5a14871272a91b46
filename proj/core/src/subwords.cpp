#include "algpath/subwords.hpp"

#include <algorithm>
#include <charconv>

#include "algpath/errors.hpp"

namespace algpath {

namespace {

void check_rainbow(std::string_view word) {
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] == word[j])
                throw error(errc::not_rainbow,
                            std::string("letter '") + word[i] +
                                "' repeats; the word is not rainbow");
}

void check_gaps(std::size_t n, const gap_set& m) {
    for (unsigned g : m)
        if (g < 1 || g > n - 1)
            throw error(errc::invalid_gap,
                        "gap " + std::to_string(g) + " outside 1.." +
                            std::to_string(n - 1));
}

}  // namespace

gap_set parse_gaps(std::string_view text) {
    gap_set gaps;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        unsigned value = 0;
        const auto [end, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} ||
            end != token.data() + token.size())
            throw error(errc::parse_error,
                        "bad gap '" + std::string(token) + "'");
        gaps.insert(value);
        pos = comma + 1;
    }
    return gaps;
}

relation_matrix build_m_graph(std::size_t n, const gap_set& m) {
    if (n == 0) throw error(errc::invalid_gap, "word length must be >= 1");
    check_gaps(n, m);
    relation_matrix a(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned g : m)
            if (i + g < n) a(i, i + g) = 1;
    return a;
}

complexity_report m_complexity(std::size_t n, const gap_set& m) {
    count_matrix w = count_paths(build_m_graph(n, m));
    count_matrix r = w;
    big_int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        r(i, i) += 1;
        for (std::size_t j = 0; j < n; ++j) total += r(i, j);
    }
    return {n, m, std::move(total), std::move(w), std::move(r)};
}

square_matrix<std::vector<std::string>> m_subword_matrix(std::string_view word,
                                                         const gap_set& m,
                                                         enum_limits limits) {
    check_rainbow(word);
    const std::size_t n = word.size();
    const path_set_matrix paths =
        enumerate_paths(build_m_graph(n, m), limits);

    square_matrix<std::vector<std::string>> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto& cell = out(i, j);
            for (const vertex_string& p : paths(i, j)) {
                std::string s;
                s.reserve(p.size());
                for (std::uint32_t v : p) s.push_back(word[v]);
                cell.push_back(std::move(s));
            }
            std::sort(cell.begin(), cell.end());
        }
    return out;
}

std::set<std::string> enumerate_m_subwords(std::string_view word,
                                           const gap_set& m,
                                           bool include_singletons,
                                           enum_limits limits) {
    const auto matrix = m_subword_matrix(word, m, limits);
    std::set<std::string> subwords;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j)
            subwords.insert(matrix(i, j).begin(), matrix(i, j).end());
    if (include_singletons)
        for (char c : word) subwords.insert(std::string(1, c));
    return subwords;
}

}  // namespace algpath
