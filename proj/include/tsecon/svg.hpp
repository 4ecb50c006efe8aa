#pragma once

#include <string>

#include "tsecon/varmodel.hpp"

namespace tsecon {

// Unit circle with one marker per inverse root; roots outside the circle are
// drawn as crosses instead of dots. Byte-deterministic for identical input.
std::string render_unit_circle_svg(const StabilityReport& report);

}  // namespace tsecon
