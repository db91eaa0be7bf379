#include "cylproj/error.hpp"

#include <cstdlib>

namespace cylproj {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::syntax_error: return "SyntaxError";
        case Errc::duplicate_name: return "DuplicateName";
        case Errc::unknown_name: return "UnknownName";
        case Errc::invalid_rational: return "InvalidRational";
        case Errc::target_dimension_occupied: return "TargetDimensionOccupied";
        case Errc::unknown_atom: return "UnknownAtom";
        case Errc::bound_exceeded: return "BoundExceeded";
        case Errc::cell_limit_exceeded: return "CellLimitExceeded";
        case Errc::term_limit_exceeded: return "TermLimitExceeded";
        case Errc::unsupported: return "Unsupported";
    }
    return "Error";
}

std::size_t max_cells() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("CYLPROJ_MAX_CELLS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(4000000);
    }();
    return cap;
}

}  // namespace cylproj
