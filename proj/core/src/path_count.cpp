#include "algpath/path_count.hpp"

#include "algpath/acyclic.hpp"
#include "algpath/errors.hpp"
#include "algpath/semiring.hpp"

namespace algpath {

count_matrix count_paths(const relation_matrix& a) {
    const std::size_t n = a.size();
    if (has_directed_cycle(n, [&](std::size_t i, std::size_t j) {
            return a(i, j) != 0;
        }))
        throw error(errc::cyclic_input,
                    "digraph has a directed cycle; path counts diverge");

    count_matrix w(n, big_int{0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j)) w(i, j) = 1;

    closure_in_place(w, counting_semiring{});
    return w;
}

}  // namespace algpath
