#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace algpath {

/// Depth-first back-edge detection. `arc(i, j)` reports whether the digraph
/// has an arc i -> j. Iterative to keep deep graphs off the call stack.
template <typename ArcPred>
bool has_directed_cycle(std::size_t n, ArcPred&& arc) {
    enum class mark : std::uint8_t { unseen, active, done };
    std::vector<mark> state(n, mark::unseen);
    // Stack frames: (vertex, next candidate successor).
    std::vector<std::pair<std::size_t, std::size_t>> stack;

    for (std::size_t root = 0; root < n; ++root) {
        if (state[root] != mark::unseen) continue;
        state[root] = mark::active;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            // Reference into the stack; invalidated by emplace_back below,
            // hence the immediate `continue` after descending.
            auto& [v, next] = stack.back();
            bool descended = false;
            while (next < n) {
                const std::size_t u = next++;
                if (!arc(v, u)) continue;
                if (state[u] == mark::active) return true;
                if (state[u] == mark::unseen) {
                    state[u] = mark::active;
                    stack.emplace_back(u, 0);
                    descended = true;
                    break;
                }
            }
            if (descended) continue;
            state[v] = mark::done;
            stack.pop_back();
        }
    }
    return false;
}

}  // namespace algpath
