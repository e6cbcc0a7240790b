#pragma once

#include <iosfwd>
#include <span>

#include "ratvar/lemniscape.hpp"

namespace ratvar {

// Level curves of |r| on the window, zeros of p as dots and poles as open circles.
void write_lemniscate_svg(std::ostream& os, const RationalFunction& r, const Window& window,
                          std::span<const double> levels, std::size_t resolution = 401);

}  // namespace ratvar
