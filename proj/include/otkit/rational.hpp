#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace otkit {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed spec files, bad CLI input. Maps to exit code 3.
struct input_error : error {
    using error::error;
};

// A certified check could not be decided at the working precision.
struct precision_error : error {
    using error::error;
};

inline Rat rat_from_string(std::string_view s) {
    Rat r;
    if (r.set_str(std::string(s), 10) != 0)
        throw input_error("invalid rational literal: '" + std::string(s) + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace otkit
