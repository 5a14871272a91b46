#include "algpath/path_enum.hpp"

#include <algorithm>

#include "algpath/errors.hpp"
#include "algpath/semiring.hpp"

namespace algpath {

path_set trimmed_product(const path_set& p, const path_set& q) {
    path_set out;
    for (const vertex_string& a : p) {
        for (const vertex_string& b : q) {
            if (b.size() < 2) continue;
            const bool disjoint =
                std::none_of(b.begin() + 1, b.end(), [&](std::uint32_t v) {
                    return std::find(a.begin(), a.end(), v) != a.end();
                });
            if (!disjoint) continue;
            vertex_string joined = a;
            joined.insert(joined.end(), b.begin() + 1, b.end());
            out.insert(std::move(joined));
        }
    }
    return out;
}

path_set path_set_semiring::combine(const path_set& a,
                                    const path_set& b) const {
    path_set out = a;
    out.insert(b.begin(), b.end());
    if (out.size() > limits_.max_paths_per_cell)
        throw error(errc::path_limit_exceeded,
                    "a cell exceeds " +
                        std::to_string(limits_.max_paths_per_cell) +
                        " paths; raise the limit or shrink the input");
    return out;
}

path_set_matrix enumerate_paths(const relation_matrix& a, enum_limits limits) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (a(i, i))
            throw error(errc::self_loop,
                        "self-loop at vertex " + std::to_string(i) +
                            "; simple-path enumeration forbids them");

    path_set_matrix w(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j))
                w(i, j).insert(vertex_string{static_cast<std::uint32_t>(i),
                                             static_cast<std::uint32_t>(j)});

    closure_in_place(w, path_set_semiring{limits});
    return w;
}

}  // namespace algpath
