#include "algpath/relations.hpp"

namespace algpath {

relation_matrix transitive_closure(relation_matrix a) {
    closure_in_place(a, boolean_semiring{});
    return a;
}

namespace {

relation_matrix bool_multiply(const relation_matrix& a,
                              const relation_matrix& b) {
    const std::size_t n = a.size();
    relation_matrix c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (!a(i, k)) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b(k, j)) c(i, j) = 1;
        }
    return c;
}

}  // namespace

relation_matrix closure_by_powers(const relation_matrix& a) {
    const std::size_t n = a.size();
    relation_matrix sum(n, 0);
    relation_matrix power = a;
    for (std::size_t step = 1; step <= n; ++step) {
        if (step > 1) power = bool_multiply(power, a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (power(i, j)) sum(i, j) = 1;
    }
    return sum;
}

}  // namespace algpath
