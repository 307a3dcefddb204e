#pragma once

#include <cstdint>
#include <string>

#include "gradedroots/laufer.hpp"

namespace gradedroots {

enum class OutputFormat { Json, Dot, Text };

struct Config {
    LauferCaps caps;
    Int ar_bound = 0;  // 0 selects the per-graph default
    OutputFormat format = OutputFormat::Json;
    uint64_t seed = 0;  // reserved for corpus tooling
    int jobs = 1;
};

}  // namespace gradedroots
