#include "bwkit/instance.hpp"

namespace bwkit {

std::string_view kind_name(const Instance& instance) noexcept {
    switch (instance.value.index()) {
        case 0: return "rational_sequence";
        case 1: return "sigma_tree";
        case 2: return "separation";
        default: return "set_family";
    }
}

}  // namespace bwkit
