#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cylq/checked.hpp"
#include "cylq/exec.hpp"

namespace cylq {

struct CapMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// c * z^z_exp * q^q_exp
struct Monomial {
  int z_exp = 0;
  int q_exp = 0;
  Coeff coeff = 1;
};

struct Term {
  int n = 0;  // q exponent
  int m = 0;  // z exponent
  Coeff coeff = 0;
  bool operator==(const Term &) const = default;
};

// Truncated bivariate power series sum c(n,m) z^m q^n with 0 <= n <= q_cap and
// 0 <= m <= z_cap. Every operation drops terms above either cap. Binary
// operations require identical caps and throw CapMismatch otherwise; use
// series_recap() to move between cap pairs explicitly.
class Series {
 public:
  Series() : Series(0, 0) {}
  Series(int q_cap, int z_cap);

  static Series constant(Coeff value, int q_cap, int z_cap);
  static Series monomial(const Monomial &mono, int q_cap, int z_cap);

  int q_cap() const { return q_cap_; }
  int z_cap() const { return z_cap_; }

  // Coefficient of z^m q^n; zero outside the caps.
  Coeff at(int n, int m) const {
    if (n < 0 || m < 0 || n > q_cap_ || m > z_cap_) return 0;
    return c_[index(n, m)];
  }

  // Adds to the coefficient of z^m q^n; silently ignored above the caps.
  void add_to(int n, int m, Coeff value);

  bool is_zero() const;

  // First nonzero term in (n, m) lexicographic order.
  std::optional<Term> first_nonzero() const;

  // Nonzero terms sorted by (n, m).
  std::vector<Term> terms() const;

  Series &operator+=(const Series &rhs);
  Series &operator-=(const Series &rhs);
  Series &operator*=(Coeff k);

  // In-place multiplication by (1 - mono) and division by (1 - mono). Both
  // are linear-time recurrences; division needs mono to have positive total
  // degree (otherwise 1 - mono is not invertible in the truncated ring).
  void mul_one_minus(const Monomial &mono);
  void div_one_minus(const Monomial &mono);

  // Multiplies by mono, shifting exponents.
  void shift(const Monomial &mono);

  bool same_caps(const Series &o) const { return q_cap_ == o.q_cap_ && z_cap_ == o.z_cap_; }

  // Raw row access for kernels: row n holds the z-polynomial of q^n.
  const Coeff *row(int n) const { return c_.data() + index(n, 0); }
  Coeff *row(int n) { return c_.data() + index(n, 0); }

 private:
  std::size_t index(int n, int m) const {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(z_cap_ + 1) +
           static_cast<std::size_t>(m);
  }

  int q_cap_;
  int z_cap_;
  std::vector<Coeff> c_;
};

void require_same_caps(const Series &a, const Series &b, const char *op);

Series series_const(Coeff value, int q_cap, int z_cap);
Series series_add(const Series &a, const Series &b);
Series series_sub(const Series &a, const Series &b);
Series series_neg(const Series &a);

// Truncated Cauchy product. The parallel kernel splits output rows across
// threads; the serial kernel is the reference it is tested against.
Series series_mul(const Series &a, const Series &b, Exec exec = Exec::parallel);
Series series_mul_serial(const Series &a, const Series &b);

// z -> z q^k.
Series series_subst_z(const Series &a, int k);

// Sum_{t>=0} mono^t for a monomial with coefficient 1 and positive total
// degree.
Series series_inv_one_minus(const Monomial &mono, int q_cap, int z_cap);

// Multiplicative inverse of a series with constant term 1.
Series series_inverse(const Series &a);

// Re-truncates to new caps. Raising a cap fills the new region with zeros,
// which is only meaningful when the caller knows those terms vanish.
Series series_recap(const Series &a, int q_cap, int z_cap);

// Substitutes z = 1, summing each q-row; the result has z_cap 0. Exact only
// when no terms were dropped by the z cap (for max/parts statistics,
// z_cap >= q_cap suffices).
Series series_at_z1(const Series &a);

bool series_is_zero(const Series &a);
bool series_eq(const Series &a, const Series &b);

inline bool operator==(const Series &a, const Series &b) { return series_eq(a, b); }
inline Series operator+(const Series &a, const Series &b) { return series_add(a, b); }
inline Series operator-(const Series &a, const Series &b) { return series_sub(a, b); }
inline Series operator-(const Series &a) { return series_neg(a); }
inline Series operator*(const Series &a, const Series &b) { return series_mul(a, b); }

// Length of a q-Pochhammer product; nullopt means infinite.
using PochLength = std::optional<int>;
inline constexpr PochLength kInfinite = std::nullopt;

// (base; q^q_step)_n = prod_{j=0}^{n-1} (1 - base * q^{j q_step}).
// An infinite product needs base.q_exp >= 1; factors whose lowest q exponent
// exceeds q_cap are skipped.
Series pochhammer(const Monomial &base, PochLength n, int q_step, int q_cap, int z_cap);

// Multiplies / divides a in place by (base; q^q_step)_n.
void mul_pochhammer(Series &a, const Monomial &base, PochLength n, int q_step);
void div_pochhammer(Series &a, const Monomial &base, PochLength n, int q_step);

// (q^a; q^mod)_inf (q^{mod-a}; q^mod)_inf, requires 1 <= a < mod.
Series theta_trunc(int a_exp, int modulus, int q_cap);

}  // namespace cylq
