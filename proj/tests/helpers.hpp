#ifndef DAMPLAB_TESTS_HELPERS_HPP
#define DAMPLAB_TESTS_HELPERS_HPP

#include "damplab/qmat.hpp"
#include "oracle.hpp"

namespace testutil {

inline oracle::Mat to_oracle(const damplab::Matrix4& m) {
  oracle::Mat out = oracle::zeros(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

inline damplab::Matrix4 from_oracle(const oracle::Mat& m) {
  damplab::Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = m[i][j];
  return out;
}

inline double max_diff(const damplab::Matrix4& a, const oracle::Mat& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a(i, j) - b[i][j]));
  return worst;
}

}  // namespace testutil

#endif  // DAMPLAB_TESTS_HELPERS_HPP
