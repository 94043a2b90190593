#pragma once

#include <span>
#include <vector>

#include "motivic/motivic_class.hpp"

// Data-parallel inner loops. Each parallel kernel has a serial twin with
// identical results; the serial versions are the reference used by tests
// and the benchmark.
namespace motivic::kernels {

/// c_k = sum_{i+j=k} a_i b_j for k = 0..order.
std::vector<MotivicClass> cauchy_product_serial(std::span<const MotivicClass> a,
                                                std::span<const MotivicClass> b, int order);
std::vector<MotivicClass> cauchy_product_parallel(std::span<const MotivicClass> a,
                                                  std::span<const MotivicClass> b, int order);

/// Below this order the parallel entry points fall back to the serial loop.
inline constexpr int kParallelOrderThreshold = 12;

}  // namespace motivic::kernels
