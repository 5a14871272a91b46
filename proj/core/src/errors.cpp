#include "algpath/errors.hpp"

namespace algpath {

std::string_view errc_name(errc c) noexcept {
    switch (c) {
        case errc::parse_error: return "ParseError";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::unknown_vertex: return "UnknownVertex";
        case errc::self_loop: return "SelfLoop";
        case errc::cyclic_input: return "CyclicInput";
        case errc::negative_cycle: return "NegativeCycle";
        case errc::invalid_gap: return "InvalidGap";
        case errc::not_rainbow: return "NotRainbow";
        case errc::unknown_state: return "UnknownState";
        case errc::unknown_letter: return "UnknownLetter";
        case errc::alphabet_too_large: return "AlphabetTooLarge";
        case errc::too_many_vertices: return "TooManyVertices";
        case errc::path_limit_exceeded: return "PathLimitExceeded";
        case errc::input_too_large: return "InputTooLarge";
    }
    return "Error";
}

}  // namespace algpath
