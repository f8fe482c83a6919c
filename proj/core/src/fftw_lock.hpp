#pragma once

#include <mutex>

namespace hypspec::detail {

// FFTW planning is not thread safe.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace hypspec::detail
