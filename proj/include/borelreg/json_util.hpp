#pragma once

#include <cstdint>
#include <limits>

#include "json.hpp"

#include "borelreg/bigint.hpp"

namespace borelreg {

/// An Int as a JSON number when it fits 64 bits, a decimal string otherwise.
inline nlohmann::json json_int(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi)
        return x.convert_to<std::int64_t>();
    return x.str();
}

}  // namespace borelreg
