#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algpath {

/// Error kinds raised by the library. The CLI maps each kind to a stable
/// name on stderr and exit code 1.
enum class errc {
    parse_error,
    duplicate_edge,
    unknown_vertex,
    self_loop,
    cyclic_input,
    negative_cycle,
    invalid_gap,
    not_rainbow,
    unknown_state,
    unknown_letter,
    alphabet_too_large,
    too_many_vertices,
    path_limit_exceeded,
    input_too_large,
};

std::string_view errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc c, const std::string& message)
        : std::runtime_error(message), code_(c) {}

    errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

}  // namespace algpath
