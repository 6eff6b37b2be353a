#include "cylq/series.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace cylq {

Series::Series(int q_cap, int z_cap) : q_cap_(q_cap), z_cap_(z_cap) {
  if (q_cap < 0 || z_cap < 0) throw std::invalid_argument("cylq: negative truncation cap");
  c_.assign(static_cast<std::size_t>(q_cap + 1) * static_cast<std::size_t>(z_cap + 1), 0);
}

Series Series::constant(Coeff value, int q_cap, int z_cap) {
  Series s(q_cap, z_cap);
  s.c_[0] = value;
  return s;
}

Series Series::monomial(const Monomial &mono, int q_cap, int z_cap) {
  if (mono.z_exp < 0 || mono.q_exp < 0) throw std::invalid_argument("cylq: negative exponent");
  Series s(q_cap, z_cap);
  s.add_to(mono.q_exp, mono.z_exp, mono.coeff);
  return s;
}

void Series::add_to(int n, int m, Coeff value) {
  if (n < 0 || m < 0) throw std::invalid_argument("cylq: negative exponent");
  if (n > q_cap_ || m > z_cap_) return;
  auto &slot = c_[index(n, m)];
  slot = checked_add(slot, value);
}

bool Series::is_zero() const {
  for (Coeff v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<Term> Series::first_nonzero() const {
  for (int n = 0; n <= q_cap_; ++n)
    for (int m = 0; m <= z_cap_; ++m)
      if (Coeff v = c_[index(n, m)]; v != 0) return Term{n, m, v};
  return std::nullopt;
}

std::vector<Term> Series::terms() const {
  std::vector<Term> out;
  for (int n = 0; n <= q_cap_; ++n)
    for (int m = 0; m <= z_cap_; ++m)
      if (Coeff v = c_[index(n, m)]; v != 0) out.push_back({n, m, v});
  return out;
}

Series &Series::operator+=(const Series &rhs) {
  require_same_caps(*this, rhs, "add");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], rhs.c_[i]);
  return *this;
}

Series &Series::operator-=(const Series &rhs) {
  require_same_caps(*this, rhs, "sub");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], rhs.c_[i]);
  return *this;
}

Series &Series::operator*=(Coeff k) {
  for (auto &v : c_) v = checked_mul(v, k);
  return *this;
}

void Series::mul_one_minus(const Monomial &mono) {
  if (mono.z_exp < 0 || mono.q_exp < 0) throw std::invalid_argument("cylq: negative exponent");
  if (mono.z_exp == 0 && mono.q_exp == 0) {
    *this *= checked_sub(1, mono.coeff);
    return;
  }
  if (mono.q_exp > q_cap_ || mono.z_exp > z_cap_ || mono.coeff == 0) return;
  // Descending order: every source (n - q_exp, m - z_exp) is read before it
  // is overwritten.
  for (int n = q_cap_; n >= mono.q_exp; --n)
    for (int m = z_cap_; m >= mono.z_exp; --m) {
      Coeff src = c_[index(n - mono.q_exp, m - mono.z_exp)];
      if (src != 0) c_[index(n, m)] = checked_sub(c_[index(n, m)], checked_mul(mono.coeff, src));
    }
}

void Series::div_one_minus(const Monomial &mono) {
  if (mono.z_exp < 0 || mono.q_exp < 0) throw std::invalid_argument("cylq: negative exponent");
  if (mono.z_exp == 0 && mono.q_exp == 0)
    throw std::domain_error("cylq: 1 - c is not a power-series unit with positive grading");
  if (mono.q_exp > q_cap_ || mono.z_exp > z_cap_ || mono.coeff == 0) return;
  // b = a + mono * b, solved in ascending order.
  for (int n = mono.q_exp; n <= q_cap_; ++n)
    for (int m = mono.z_exp; m <= z_cap_; ++m) {
      Coeff src = c_[index(n - mono.q_exp, m - mono.z_exp)];
      if (src != 0) c_[index(n, m)] = checked_add(c_[index(n, m)], checked_mul(mono.coeff, src));
    }
}

void Series::shift(const Monomial &mono) {
  if (mono.z_exp < 0 || mono.q_exp < 0) throw std::invalid_argument("cylq: negative exponent");
  for (int n = q_cap_; n >= 0; --n)
    for (int m = z_cap_; m >= 0; --m) {
      int sn = n - mono.q_exp, sm = m - mono.z_exp;
      Coeff src = (sn >= 0 && sm >= 0) ? c_[index(sn, sm)] : 0;
      c_[index(n, m)] = src == 0 ? 0 : checked_mul(mono.coeff, src);
    }
}

void require_same_caps(const Series &a, const Series &b, const char *op) {
  if (!a.same_caps(b))
    throw CapMismatch(std::string("cylq: cap mismatch in ") + op + ": (" +
                      std::to_string(a.q_cap()) + "," + std::to_string(a.z_cap()) + ") vs (" +
                      std::to_string(b.q_cap()) + "," + std::to_string(b.z_cap()) + ")");
}

Series series_const(Coeff value, int q_cap, int z_cap) {
  return Series::constant(value, q_cap, z_cap);
}

Series series_add(const Series &a, const Series &b) {
  Series r = a;
  r += b;
  return r;
}

Series series_sub(const Series &a, const Series &b) {
  Series r = a;
  r -= b;
  return r;
}

Series series_neg(const Series &a) {
  Series r = a;
  r *= -1;
  return r;
}

namespace {

void mul_row(const Series &a, const Series &b, Series &out, int n) {
  const int zc = out.z_cap();
  Coeff *dst = out.row(n);
  for (int i = 0; i <= n; ++i) {
    const Coeff *ar = a.row(i);
    const Coeff *br = b.row(n - i);
    for (int j = 0; j <= zc; ++j) {
      if (ar[j] == 0) continue;
      for (int k = 0; j + k <= zc; ++k)
        if (br[k] != 0) dst[j + k] = checked_add(dst[j + k], checked_mul(ar[j], br[k]));
    }
  }
}

}  // namespace

Series series_mul_serial(const Series &a, const Series &b) {
  require_same_caps(a, b, "mul");
  Series out(a.q_cap(), a.z_cap());
  for (int n = 0; n <= a.q_cap(); ++n) mul_row(a, b, out, n);
  return out;
}

Series series_mul(const Series &a, const Series &b, Exec exec) {
  require_same_caps(a, b, "mul");
  const int rows = a.q_cap() + 1;
  // Small products are cheaper without a parallel region.
  if (exec == Exec::serial || rows * (a.z_cap() + 1) < 512 || worker_threads() == 1)
    return series_mul_serial(a, b);

  Series out(a.q_cap(), a.z_cap());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
  for (int n = rows - 1; n >= 0; --n) {
    try {
      mul_row(a, b, out, n);
    } catch (...) {
#pragma omp critical(cylq_mul_failure)
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

Series series_subst_z(const Series &a, int k) {
  if (k < 0) throw std::invalid_argument("cylq: substitution z -> z q^k needs k >= 0");
  Series r(a.q_cap(), a.z_cap());
  for (int n = 0; n <= a.q_cap(); ++n)
    for (int m = 0; m <= a.z_cap(); ++m)
      if (Coeff v = a.at(n, m); v != 0) r.add_to(n + m * k, m, v);
  return r;
}

Series series_inv_one_minus(const Monomial &mono, int q_cap, int z_cap) {
  if (mono.coeff != 1) throw std::invalid_argument("cylq: geometric series needs a unit monomial");
  Series r = Series::constant(1, q_cap, z_cap);
  r.div_one_minus(mono);
  return r;
}

Series series_inverse(const Series &a) {
  if (a.at(0, 0) != 1) throw std::domain_error("cylq: series inverse needs constant term 1");
  const int qc = a.q_cap(), zc = a.z_cap();
  Series b(qc, zc);
  b.add_to(0, 0, 1);
  for (int n = 0; n <= qc; ++n)
    for (int m = 0; m <= zc; ++m) {
      if (n == 0 && m == 0) continue;
      Coeff acc = 0;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= m; ++j) {
          if (i == 0 && j == 0) continue;
          Coeff x = a.at(i, j);
          if (x != 0) acc = checked_add(acc, checked_mul(x, b.at(n - i, m - j)));
        }
      b.add_to(n, m, checked_sub(0, acc));
    }
  return b;
}

Series series_recap(const Series &a, int q_cap, int z_cap) {
  Series r(q_cap, z_cap);
  for (int n = 0; n <= std::min(q_cap, a.q_cap()); ++n)
    for (int m = 0; m <= std::min(z_cap, a.z_cap()); ++m) r.add_to(n, m, a.at(n, m));
  return r;
}

Series series_at_z1(const Series &a) {
  Series r(a.q_cap(), 0);
  for (int n = 0; n <= a.q_cap(); ++n)
    for (int m = 0; m <= a.z_cap(); ++m) r.add_to(n, 0, a.at(n, m));
  return r;
}

bool series_is_zero(const Series &a) { return a.is_zero(); }

bool series_eq(const Series &a, const Series &b) {
  require_same_caps(a, b, "eq");
  for (int n = 0; n <= a.q_cap(); ++n)
    for (int m = 0; m <= a.z_cap(); ++m)
      if (a.at(n, m) != b.at(n, m)) return false;
  return true;
}

namespace {

void check_poch_args(const Monomial &base, PochLength n, int q_step) {
  if (q_step < 1) throw std::invalid_argument("cylq: pochhammer step must be >= 1");
  if (base.z_exp < 0 || base.q_exp < 0) throw std::invalid_argument("cylq: negative exponent");
  if (n && *n < 0) throw std::invalid_argument("cylq: pochhammer length must be >= 0");
  if (!n && base.q_exp < 1)
    throw std::domain_error("cylq: infinite pochhammer product diverges for base with q exponent 0");
}

template <typename Fn>
void for_each_poch_factor(const Monomial &base, PochLength n, int q_step, int q_cap, Fn &&fn) {
  for (long j = 0; !n || j < *n; ++j) {
    long e = base.q_exp + j * q_step;
    if (e > q_cap) break;  // this factor and all later ones are 1 at the cap
    fn(Monomial{base.z_exp, static_cast<int>(e), base.coeff});
  }
}

}  // namespace

Series pochhammer(const Monomial &base, PochLength n, int q_step, int q_cap, int z_cap) {
  check_poch_args(base, n, q_step);
  Series r = Series::constant(1, q_cap, z_cap);
  for_each_poch_factor(base, n, q_step, q_cap, [&](const Monomial &f) { r.mul_one_minus(f); });
  return r;
}

void mul_pochhammer(Series &a, const Monomial &base, PochLength n, int q_step) {
  check_poch_args(base, n, q_step);
  for_each_poch_factor(base, n, q_step, a.q_cap(), [&](const Monomial &f) { a.mul_one_minus(f); });
}

void div_pochhammer(Series &a, const Monomial &base, PochLength n, int q_step) {
  check_poch_args(base, n, q_step);
  for_each_poch_factor(base, n, q_step, a.q_cap(), [&](const Monomial &f) { a.div_one_minus(f); });
}

Series theta_trunc(int a_exp, int modulus, int q_cap) {
  if (modulus < 2 || a_exp < 1 || a_exp >= modulus)
    throw std::invalid_argument("cylq: theta needs 1 <= a < modulus");
  Series r = pochhammer({0, a_exp, 1}, kInfinite, modulus, q_cap, 0);
  for_each_poch_factor({0, modulus - a_exp, 1}, kInfinite, modulus, q_cap,
                       [&](const Monomial &f) { r.mul_one_minus(f); });
  return r;
}

}  // namespace cylq
