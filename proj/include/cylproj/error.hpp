#pragma once

#include <stdexcept>
#include <string>

namespace cylproj {

enum class Errc {
    syntax_error,
    duplicate_name,
    unknown_name,
    invalid_rational,
    target_dimension_occupied,
    unknown_atom,
    bound_exceeded,
    cell_limit_exceeded,
    term_limit_exceeded,
    unsupported,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, int line = -1, int column = -1)
        : std::runtime_error(std::move(message)), code(code), line(line), column(column) {}

    Errc code;
    int line;    // 1-based; -1 when not tied to parsed text
    int column;  // 1-based; -1 when not tied to parsed text
};

/// Cap on enumerated grid cells (refinement products). Read once from
/// CYLPROJ_MAX_CELLS; defaults to 4,000,000.
std::size_t max_cells();

}  // namespace cylproj
