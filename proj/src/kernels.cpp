#include "motivic/kernels.hpp"

namespace motivic::kernels {

namespace {

MotivicClass cauchy_coefficient(std::span<const MotivicClass> a, std::span<const MotivicClass> b,
                                int k) {
  MotivicClass sum;
  for (int i = 0; i <= k; ++i) {
    const auto& x = a[static_cast<std::size_t>(i)];
    const auto& y = b[static_cast<std::size_t>(k - i)];
    if (x.is_zero() || y.is_zero()) continue;
    sum += x * y;
  }
  return sum;
}

}  // namespace

std::vector<MotivicClass> cauchy_product_serial(std::span<const MotivicClass> a,
                                                std::span<const MotivicClass> b, int order) {
  std::vector<MotivicClass> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = cauchy_coefficient(a, b, k);
  return out;
}

std::vector<MotivicClass> cauchy_product_parallel(std::span<const MotivicClass> a,
                                                  std::span<const MotivicClass> b, int order) {
  std::vector<MotivicClass> out(static_cast<std::size_t>(order) + 1);
  // Late coefficients cost more; dynamic scheduling balances that.
#pragma omp parallel for schedule(dynamic, 1) if (order >= kParallelOrderThreshold)
  for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = cauchy_coefficient(a, b, k);
  return out;
}

}  // namespace motivic::kernels
