#include "motivic/finite_field.hpp"

#include "motivic/errors.hpp"

namespace motivic {

namespace {

std::vector<int> fixed_modulus(int p, int k) {
  if (k == 1) return {0, 1};  // x
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 3 && k == 3) return {1, 2, 0, 1};
  throw InvalidArgument("no fixed table for F_" + std::to_string(p) + "^" + std::to_string(k));
}

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (auto& d : out) {
    d = a % p;
    a /= p;
  }
  return out;
}

int from_digits(const std::vector<int>& d, int p) {
  int a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

GaloisField::GaloisField(int characteristic, int degree)
    : p_(characteristic), k_(degree), modulus_(fixed_modulus(characteristic, degree)) {
  if (p_ != 2 && p_ != 3) throw InvalidArgument("only characteristic 2 and 3 are tabulated");
  size_ = 1;
  for (int i = 0; i < k_; ++i) size_ *= p_;
  add_.resize(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_));
  mul_.resize(add_.size());
  for (int a = 0; a < size_; ++a) {
    const auto da = digits(a, p_, k_);
    for (int b = 0; b < size_; ++b) {
      const auto db = digits(b, p_, k_);
      std::vector<int> sum(static_cast<std::size_t>(k_));
      for (int i = 0; i < k_; ++i) sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
      add_[index(a, b)] = from_digits(sum, p_);

      // Schoolbook product, then reduce by the monic modulus from the top.
      std::vector<int> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
          auto& slot = prod[static_cast<std::size_t>(i + j)];
          slot = (slot + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
        }
      }
      for (int top = 2 * k_ - 2; top >= k_; --top) {
        const int c = prod[static_cast<std::size_t>(top)];
        if (c == 0) continue;
        for (int i = 0; i <= k_; ++i) {
          auto& slot = prod[static_cast<std::size_t>(top - k_ + i)];
          slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(k_));
      mul_[index(a, b)] = from_digits(prod, p_);
    }
  }
}

int GaloisField::neg(int a) const {
  for (int b = 0; b < size_; ++b) {
    if (add(a, b) == 0) return b;
  }
  throw Error("internal: no additive inverse");
}

int GaloisField::power(int a, std::uint64_t e) const {
  int result = 1;
  int base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

bool GaloisField::in_subfield(int a, int e) const {
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p_);
  return power(a, q) == a;
}

}  // namespace motivic
