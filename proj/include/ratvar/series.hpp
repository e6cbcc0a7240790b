#pragma once

#include <vector>

#include "ratvar/errors.hpp"

// Truncated power series in t; all results keep the length of the first operand.
namespace ratvar::series {

using Series = std::vector<Complex>;

Series mul(const Series& a, const Series& b);
// a / b, requires b[0] != 0
Series div(const Series& a, const Series& b);
// a^k
Series pow(const Series& a, std::size_t k);

}  // namespace ratvar::series
