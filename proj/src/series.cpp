#include "ratvar/series.hpp"

#include <algorithm>

namespace ratvar::series {

Series mul(const Series& a, const Series& b) {
  Series out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series div(const Series& a, const Series& b) {
  if (b.empty() || b[0] == Complex{}) throw InputError("series division by a series with zero constant term");
  Series out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Complex s = a[n];
    for (std::size_t k = 1; k <= n && k < b.size(); ++k) s -= b[k] * out[n - k];
    out[n] = s / b[0];
  }
  return out;
}

Series pow(const Series& a, std::size_t k) {
  Series out(a.size());
  if (!out.empty()) out[0] = 1.0;
  for (std::size_t i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

}  // namespace ratvar::series
