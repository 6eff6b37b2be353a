#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cylq {

using Coeff = std::int64_t;

// Coefficient arithmetic is fixed-width; any overflow throws.
[[noreturn]] inline void throw_overflow(const char *op) {
  throw std::overflow_error(std::string("cylq: coefficient overflow in ") + op);
}

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

}  // namespace cylq
