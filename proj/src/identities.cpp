#include "cylq/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <sstream>

#include "cylq/dhk.hpp"

namespace cylq {

VectorV vec_basis(int level, BasisKind kind, int index) {
  if (level < 1) throw std::invalid_argument("cylq: vector length must be >= 1");
  if (index < 0) throw std::invalid_argument("cylq: basis index must be >= 0");
  VectorV v(static_cast<std::size_t>(level), 0);
  auto add_delta = [&](int j) {
    for (int k = j; k <= level; ++k) v[static_cast<std::size_t>(k - 1)] += 1;
  };
  switch (kind) {
    case BasisKind::e:
      if (index == 0) throw std::invalid_argument("cylq: e_j is 1-indexed");
      if (index <= level) v[static_cast<std::size_t>(index - 1)] = 1;
      break;
    case BasisKind::delta:
      if (index == 0) throw std::invalid_argument("cylq: delta_j is 1-indexed");
      add_delta(index);
      break;
    case BasisKind::Delta:
      for (int j = 1; j <= index; ++j) add_delta(j);
      break;
    case BasisKind::eta:
      for (int j = 1; j <= index; ++j) add_delta(2 * j);
      break;
  }
  return v;
}

VectorV operator+(const VectorV &a, const VectorV &b) {
  if (a.size() != b.size()) throw std::invalid_argument("cylq: vector length mismatch");
  VectorV r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VectorV operator-(const VectorV &a) {
  VectorV r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

VectorV operator-(const VectorV &a, const VectorV &b) { return a + (-b); }

VectorV operator*(int k, const VectorV &a) {
  VectorV r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

namespace {

std::string vec_str(const VectorV &v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

// Exponent of a chain, split per index: sum_j f_j(N_j) with
// f_j(N) = N(N+1)/2 + (v_j - v_{j-1}) N, which equals
// sum_j binom(N_j+1, 2) + v.n.
class ChainExponent {
 public:
  ChainExponent(const VectorV &v, int n_max) : level_(static_cast<int>(v.size())), n_max_(n_max) {
    slope_.resize(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) slope_[j] = v[j] - (j ? v[j - 1] : 0);
    // floor_[j][N]: least exponent of N_{j+1} ... N_l (0-based j) over chains
    // with N_{j+1} <= N.
    floor_.assign(static_cast<std::size_t>(level_ + 1), std::vector<long>(static_cast<std::size_t>(n_max + 1), 0));
    for (int j = level_ - 1; j >= 0; --j) {
      long run = std::numeric_limits<long>::max();
      for (int n = 0; n <= n_max; ++n) {
        run = std::min(run, term(j, n) + floor_[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(n)]);
        floor_[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] = run;
      }
    }
  }

  long term(int j, int n) const {
    return static_cast<long>(n) * (n + 1) / 2 + static_cast<long>(slope_[static_cast<std::size_t>(j)]) * n;
  }
  // Least exponent of indices j.. (0-based) given N_j <= bound.
  long floor(int j, int bound) const {
    return floor_[static_cast<std::size_t>(j)][static_cast<std::size_t>(bound)];
  }
  long minimum() const { return floor(0, n_max_); }
  int level() const { return level_; }

 private:
  int level_;
  int n_max_;
  std::vector<int> slope_;
  std::vector<std::vector<long>> floor_;
};

// Visits chains n_max >= N_1 >= ... >= N_l >= 0 with first element fixed to
// `first` and exponent + shift <= q_cap.
template <typename Visit>
void for_each_chain(const ChainExponent &ex, int first, long shift, int q_cap, Visit &&visit) {
  const int l = ex.level();
  std::vector<int> chain(static_cast<std::size_t>(l), 0);
  auto rec = [&](auto &&self, int j, long partial) -> void {
    if (j == l) {
      visit(chain, partial);
      return;
    }
    const int hi = j == 0 ? first : chain[static_cast<std::size_t>(j - 1)];
    const int lo = j == 0 ? first : 0;
    for (int n = lo; n <= hi; ++n) {
      const long e = partial + ex.term(j, n);
      const long rest = j + 1 < l ? ex.floor(j + 1, n) : 0;
      if (e + rest + shift > q_cap) continue;
      chain[static_cast<std::size_t>(j)] = n;
      self(self, j + 1, e);
    }
  };
  rec(rec, 0, 0);
}

// z^{N_1} q^{exp} (q;q)_{N_1} / ((zq;q)_{N_1+t} prod_i (q;q)_{N_i - N_{i+1}})
Series multisum_summand(const std::vector<int> &chain, long exponent, int t, Caps caps) {
  const int n1 = chain.front();
  Series s = Series::monomial({n1, static_cast<int>(exponent), 1}, caps.q_cap, caps.z_cap);
  for (int k = 1; k <= n1; ++k) s.mul_one_minus({0, k, 1});
  for (int k = 1; k <= n1 + t; ++k) s.div_one_minus({1, k, 1});
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const int gap = chain[i] - (i + 1 < chain.size() ? chain[i + 1] : 0);
    for (int k = 1; k <= gap; ++k) s.div_one_minus({0, k, 1});
  }
  return s;
}

// Runs body(N_1) for N_1 = 0..n_max, each producing a partial series, and sums
// them. Parallel over N_1.
template <typename Body>
Series sum_over_first(int n_max, Caps caps, Exec exec, Body &&body) {
  std::vector<Series> partial(static_cast<std::size_t>(n_max + 1), Series(caps.q_cap, caps.z_cap));
  if (exec == Exec::serial || worker_threads() == 1) {
    for (int n1 = 0; n1 <= n_max; ++n1) partial[static_cast<std::size_t>(n1)] = body(n1);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
    for (int n1 = n_max; n1 >= 0; --n1) {
      try {
        partial[static_cast<std::size_t>(n1)] = body(n1);
      } catch (...) {
#pragma omp critical(cylq_multisum_failure)
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  Series total(caps.q_cap, caps.z_cap);
  for (const auto &p : partial) total += p;
  return total;
}

void check_caps(Caps caps) {
  if (caps.q_cap < 0 || caps.z_cap < 0) throw std::invalid_argument("cylq: caps must be >= 0");
}

}  // namespace

int s_min_exponent(int level, const VectorV &v, int z_cap) {
  if (static_cast<int>(v.size()) != level) throw std::invalid_argument("cylq: vector length must equal the level");
  return static_cast<int>(ChainExponent(v, z_cap).minimum());
}

Series eval_S(int level, int t, const VectorV &v, Caps caps, int shift, Exec exec) {
  check_caps(caps);
  if (level < 1) throw std::invalid_argument("cylq: S needs level >= 1");
  if (t < 0) throw std::invalid_argument("cylq: S needs t >= 0");
  if (static_cast<int>(v.size()) != level) throw std::invalid_argument("cylq: vector length must equal the level");
  const ChainExponent ex(v, caps.z_cap);
  if (ex.minimum() + shift < 0)
    throw Inadmissible("cylq: S(" + std::to_string(t) + "; " + vec_str(v) + ") has a summand at q^" +
                       std::to_string(ex.minimum() + shift));
  return sum_over_first(caps.z_cap, caps, exec, [&](int n1) {
    Series part(caps.q_cap, caps.z_cap);
    for_each_chain(ex, n1, shift, caps.q_cap, [&](const std::vector<int> &chain, long e) {
      part += multisum_summand(chain, e + shift, t, caps);
    });
    return part;
  });
}

Series eval_T_multisum(int level, int b, Caps caps, Exec exec) {
  check_caps(caps);
  if (level < 1) throw std::invalid_argument("cylq: level must be >= 1");
  if (b < 0 || b > level / 2) throw std::invalid_argument("cylq: need 0 <= b <= floor(level/2)");
  // Every index contributes binom(N+1, 2) - [i even, i <= 2b] N >= 0, so the
  // running exponent bounds any completion from below.
  auto weight = [&](int i, int n) {  // 1-based i
    long e = static_cast<long>(n) * (n + 1) / 2;
    if (i % 2 == 0 && i / 2 <= b) e -= n;
    return e;
  };
  return sum_over_first(caps.z_cap, caps, exec, [&](int n1) {
    Series part(caps.q_cap, caps.z_cap);
    std::vector<int> chain(static_cast<std::size_t>(level), 0);
    auto rec = [&](auto &&self, int i, long e) -> void {
      if (i > level) {
        Series s = Series::monomial({n1, static_cast<int>(e), 1}, caps.q_cap, caps.z_cap);
        mul_pochhammer(s, {0, 1, 1}, n1, 1);
        div_pochhammer(s, {1, 1, 1}, n1, 1);
        for (int k = 1; k <= level; ++k) {
          const int next = k < level ? chain[static_cast<std::size_t>(k)] : 0;
          div_pochhammer(s, {0, 1, 1}, chain[static_cast<std::size_t>(k - 1)] - next, 1);
        }
        part += s;
        return;
      }
      const int hi = i == 1 ? n1 : chain[static_cast<std::size_t>(i - 2)];
      for (int n = (i == 1 ? n1 : 0); n <= hi; ++n) {
        const long ne = e + weight(i, n);
        if (ne > caps.q_cap) continue;
        chain[static_cast<std::size_t>(i - 1)] = n;
        self(self, i + 1, ne);
      }
    };
    rec(rec, 1, 0);
    return part;
  });
}

Series eval_C_multisum(int level, int b, Caps caps) {
  check_caps(caps);
  if (level < 1) throw std::invalid_argument("cylq: level must be >= 1");
  const int k = level / 2;
  if (b < 0 || b > k) throw std::invalid_argument("cylq: need 0 <= b <= floor(level/2)");
  const int s = level % 2 == 1 ? 1 : 2;

  Series total(caps.q_cap, caps.z_cap);
  if (k == 0) {
    total.add_to(0, 0, 1);
  } else {
    std::vector<int> chain(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto &&self, int i, long e) -> void {
      if (i > k) {
        const int n1 = chain.front();
        Series term = Series::monomial({n1, static_cast<int>(e), 1}, caps.q_cap, caps.z_cap);
        for (int j = 1; j < k; ++j)
          div_pochhammer(term, {0, 1, 1}, chain[static_cast<std::size_t>(j - 1)] - chain[static_cast<std::size_t>(j)], 1);
        div_pochhammer(term, {0, s, 1}, chain.back(), s);
        total += term;
        return;
      }
      const int hi = i == 1 ? caps.z_cap : chain[static_cast<std::size_t>(i - 2)];
      for (int n = 0; n <= hi; ++n) {
        const long ne = e + static_cast<long>(n) * n + (i > b ? n : 0);
        if (ne > caps.q_cap) break;  // increasing in n
        chain[static_cast<std::size_t>(i - 1)] = n;
        self(self, i + 1, ne);
      }
    };
    rec(rec, 1, 0);
  }
  div_pochhammer(total, {1, 1, 1}, kInfinite, 1);
  return total;
}

Series eval_level1(int rank, Caps caps) {
  check_caps(caps);
  if (rank < 2) throw std::invalid_argument("cylq: level-1 formula needs rank >= 2");
  Series out = Series::constant(1, caps.q_cap, caps.z_cap);
  Series prev = Series::constant(1, caps.q_cap, 0);  // (q^r;q^r)_{n-1}/(q)_{n-1}
  for (int n = 1; n <= std::min(caps.z_cap, caps.q_cap); ++n) {
    Series cur = prev;
    cur.mul_one_minus({0, rank * n, 1});
    cur.div_one_minus({0, n, 1});
    for (int e = 0; e <= caps.q_cap; ++e) out.add_to(e, n, checked_sub(cur.at(e, 0), prev.at(e, 0)));
    prev = std::move(cur);
  }
  return out;
}

Series eval_product_univariate(const Profile &profile, int q_cap) {
  const int r = profile.rank();
  const int l = profile.level();
  if (l < 1) throw std::invalid_argument("cylq: product formula needs level >= 1");
  const int m = r + l;
  Series s = pochhammer({0, r, 1}, kInfinite, r, q_cap, 0);
  for (int k = 0; k < r - 1; ++k) mul_pochhammer(s, {0, m, 1}, kInfinite, m);
  for (int k = 0; k < r; ++k) div_pochhammer(s, {0, 1, 1}, kInfinite, 1);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      int e = j - i;
      for (int k = i; k < j; ++k) e += profile[k];
      mul_pochhammer(s, {0, e, 1}, kInfinite, m);
      mul_pochhammer(s, {0, m - e, 1}, kInfinite, m);
    }
  return s;
}

Series eval_product_two_row(int level, int b, int q_cap) {
  if (level < 1 || b < 0 || b > level) throw std::invalid_argument("cylq: need level >= 1 and 0 <= b <= level");
  const int mod = level + 2;
  Series s = pochhammer({0, 1, -1}, kInfinite, 1, q_cap, 0);
  mul_pochhammer(s, {0, b + 1, 1}, kInfinite, mod);
  mul_pochhammer(s, {0, level - b + 1, 1}, kInfinite, mod);
  mul_pochhammer(s, {0, mod, 1}, kInfinite, mod);
  div_pochhammer(s, {0, 1, 1}, kInfinite, 1);
  return s;
}

Series eval_product_dhk(int level, int a, int q_cap) {
  if (level < 1 || a < 0 || a > level) throw std::invalid_argument("cylq: need level >= 1 and 0 <= a <= level");
  const int mod = level + 2;
  Series s = pochhammer({0, a + 1, 1}, kInfinite, mod, q_cap, 0);
  mul_pochhammer(s, {0, level - a + 1, 1}, kInfinite, mod);
  mul_pochhammer(s, {0, mod, 1}, kInfinite, mod);
  div_pochhammer(s, {0, 1, 1}, kInfinite, 2);
  div_pochhammer(s, {0, 1, 1}, kInfinite, 1);
  return s;
}

CheckReport make_report(std::string name, const Series &residual, bool asserted) {
  CheckReport r;
  r.name = std::move(name);
  r.q_cap = residual.q_cap();
  r.z_cap = residual.z_cap();
  r.first_nonzero = residual.first_nonzero();
  r.residual_zero = !r.first_nonzero.has_value();
  r.asserted = asserted;
  return r;
}

namespace {

// Substituting z -> zq^k and dividing by (1 - zq^k) only raise q-degrees, so
// every constituent can be computed at the report caps: a term dropped at the
// cap could only land above it after these operations.

// f(zq^k) / (1 - zq^k)
Series subst_over(const Series &f, int k) {
  Series r = series_subst_z(f, k);
  r.div_one_minus({1, k, 1});
  return r;
}

// zq^k / (1 - zq^k) * f(zq^k)
Series z_subst_over(const Series &f, int k) {
  Series r = subst_over(f, k);
  r.shift({1, k, 1});
  return r;
}

Series z_times(Series s) {
  s.shift({1, 0, 1});
  return s;
}

// Tight enumeration series at the report caps. max <= wt, so enumerating to
// weight q_cap and changing the z cap loses nothing below the caps.
Series tight_series(const Profile &profile, Caps caps) {
  return series_recap(gf_tight(profile, caps.q_cap), caps.q_cap, caps.z_cap);
}

class TightCache {
 public:
  explicit TightCache(Caps caps) : caps_(caps) {}
  const Series &get(const Profile &p) {
    auto it = cache_.find(p);
    if (it == cache_.end()) it = cache_.emplace(p, tight_series(p, caps_)).first;
    return it->second;
  }

 private:
  Caps caps_;
  std::map<Profile, Series> cache_;
};

std::string caps_str(Caps caps) {
  return "[" + std::to_string(caps.q_cap) + "," + std::to_string(caps.z_cap) + "]";
}

}  // namespace

bool rel_admissible(int level, int j, int t, const VectorV &v, Caps caps) {
  if (j < 0 || j > level || t < 0 || static_cast<int>(v.size()) != level) return false;
  auto ok = [&](const VectorV &w, int shift) { return s_min_exponent(level, w, caps.z_cap) + shift >= 0; };
  const VectorV d1 = vec_basis(level, BasisKind::delta, 1);
  if (j == 0) return ok(v, 0) && ok(v + d1, t + 1);
  const VectorV Dj = vec_basis(level, BasisKind::Delta, j);
  const int vj = v[static_cast<std::size_t>(j - 1)];
  return ok(v, 0) && ok(v + vec_basis(level, BasisKind::e, j), 0) && ok(v + Dj, vj + j) &&
         ok(v + d1 + Dj, vj + j + 1);
}

CheckReport check_rel(int level, int j, int t, const VectorV &v, Caps caps, bool mutate) {
  if (j < 0 || j > level) throw std::invalid_argument("cylq: rel_j needs 0 <= j <= level");
  if (static_cast<int>(v.size()) != level) throw std::invalid_argument("cylq: vector length must equal the level");
  const VectorV d1 = vec_basis(level, BasisKind::delta, 1);
  const int sign = mutate ? -1 : 1;
  Series res = eval_S(level, t, v, caps);
  if (j == 0) {
    res -= eval_S(level, t + 1, v, caps);
    Series third = z_times(eval_S(level, t + 1, v + d1, caps, t + 1));
    third *= sign;
    res += third;
  } else {
    const VectorV Dj = vec_basis(level, BasisKind::Delta, j);
    const int vj = v[static_cast<std::size_t>(j - 1)];
    res -= eval_S(level, t, v + vec_basis(level, BasisKind::e, j), caps);
    res -= z_times(eval_S(level, t + 1, v + Dj, caps, vj + j));
    Series last = z_times(eval_S(level, t + 1, v + d1 + Dj, caps, vj + j + 1));
    last *= sign;
    res += last;
  }
  return make_report("rel_" + std::to_string(j) + "/l=" + std::to_string(level) + "/t=" + std::to_string(t) +
                         "/v=" + vec_str(v) + (mutate ? "/mutated" : "") + caps_str(caps),
                     res);
}

CheckReport check_four_term(int level, int i, Caps caps, bool mutate) {
  const bool four = i >= 1 && 2 * i < level;
  const bool middle = level % 2 == 0 && i == level / 2 && i >= 1;
  if (!four && !middle) throw std::invalid_argument("cylq: four-term identity needs 1 <= i < l/2, or i = l/2 for even l");
  auto eta = [&](int k) { return vec_basis(level, BasisKind::eta, k); };
  const VectorV d1 = vec_basis(level, BasisKind::delta, 1);
  const VectorV e12 = vec_basis(level, BasisKind::e, 1) + vec_basis(level, BasisKind::e, 2);
  Series res(caps.q_cap, caps.z_cap);
  if (four) {
    res += eval_S(level, 1, d1 - eta(i - 1), caps);
    res -= eval_S(level, 1, 2 * d1 - eta(i), caps);
    res -= eval_S(level, 1, e12 - eta(i), caps);
    Series last = eval_S(level, 1, d1 - eta(i + 1), caps);
    last *= mutate ? -1 : 1;
    res += last;
  } else {
    Series first = eval_S(level, 1, d1 - eta(i - 1), caps);
    first *= mutate ? 1 : 2;
    res += first;
    res -= eval_S(level, 1, 2 * d1 - eta(i), caps);
    res -= eval_S(level, 1, e12 - eta(i), caps);
  }
  return make_report(std::string(four ? "four_term" : "four_term_middle") + "/l=" + std::to_string(level) +
                         "/i=" + std::to_string(i) + (mutate ? "/mutated" : "") + caps_str(caps),
                     res);
}

const char *to_string(DiamondMode mode) {
  switch (mode) {
    case DiamondMode::multisum_S: return "S";
    case DiamondMode::multisum_T: return "T";
    case DiamondMode::enumeration: return "enum";
  }
  return "?";
}

std::vector<CheckReport> check_diamond(int level, Caps caps, DiamondMode mode, bool mutate) {
  check_caps(caps);
  if (level < 1) throw std::invalid_argument("cylq: diamond relations need level >= 1");
  std::vector<Series> R;
  int last = 0;
  if (mode == DiamondMode::enumeration) {
    last = level;
    for (int i = 0; i <= level; ++i) R.push_back(tight_series(Profile({level - i, i}), caps));
  } else {
    last = level / 2;
    for (int i = 0; i <= last; ++i)
      R.push_back(mode == DiamondMode::multisum_S
                      ? eval_S(level, 0, -vec_basis(level, BasisKind::eta, i), caps)
                      : eval_T_multisum(level, i, caps));
  }
  // The multisum modes only carry 0 <= i <= floor(l/2); R_j = R_{l-j}.
  auto r_at = [&](int j) -> const Series & {
    if (mode != DiamondMode::enumeration) j = std::min(j, level - j);
    return R.at(static_cast<std::size_t>(j));
  };

  const std::string prefix = std::string("diamond/") + to_string(mode) + "/l=" + std::to_string(level);
  const std::string suffix = std::string(mutate ? "/mutated" : "") + caps_str(caps);
  std::vector<CheckReport> out;
  for (int i = 0; i <= last; ++i) {
    Series res = r_at(i);
    Series second = z_subst_over(r_at(i), 2);
    second *= mutate ? -1 : 1;
    res += second;
    if (i == 0) {
      res -= subst_over(r_at(1), 1);
    } else if (i == level) {
      res -= subst_over(r_at(level - 1), 1);
    } else {
      res -= subst_over(r_at(i - 1), 1);
      res -= subst_over(r_at(i + 1), 1);
      res += subst_over(r_at(i), 2);
    }
    out.push_back(make_report(prefix + "/i=" + std::to_string(i) + suffix, res));
  }
  if (mode != DiamondMode::enumeration) {
    for (int i = 0; i <= last; ++i) {
      // R_i(0, q) = R_i(z, 0) = 1.
      Series res(caps.q_cap, caps.z_cap);
      for (int m = 0; m <= caps.z_cap; ++m) res.add_to(0, m, r_at(i).at(0, m));
      for (int n = 1; n <= caps.q_cap; ++n) res.add_to(n, 0, r_at(i).at(n, 0));
      res.add_to(0, 0, -1);
      out.push_back(make_report(prefix + "/init/i=" + std::to_string(i) + caps_str(caps), res));
    }
  }
  return out;
}

std::vector<CheckReport> check_mode_agreement(int level, Caps caps) {
  std::vector<CheckReport> out;
  for (int b = 0; b <= level / 2; ++b) {
    const std::string tag = "/l=" + std::to_string(level) + "/b=" + std::to_string(b) + caps_str(caps);
    const Series via_s = eval_S(level, 0, -vec_basis(level, BasisKind::eta, b), caps);
    const Series via_t = eval_T_multisum(level, b, caps);
    out.push_back(make_report("agree/S-vs-T" + tag, via_s - via_t));
    out.push_back(make_report("agree/T-vs-enum(l-b,b)" + tag, via_t - tight_series(Profile({level - b, b}), caps)));
    out.push_back(make_report("agree/T-vs-enum(b,l-b)" + tag, via_t - tight_series(Profile({b, level - b}), caps)));
  }
  return out;
}

CheckReport check_cw(const Profile &profile, Caps caps, bool mutate) {
  check_caps(caps);
  if (profile.level() < 1) throw std::invalid_argument("cylq: the recurrence needs level >= 1");
  const int r = profile.rank();
  TightCache cache(caps);
  Series res = cache.get(profile);
  res += z_subst_over(cache.get(profile), mutate ? r + 1 : r);
  for (const auto &subset : nonempty_support_subsets(profile)) {
    const int size = static_cast<int>(subset.size());
    Series term = subst_over(cache.get(profile_child(profile, subset)), size);
    term *= size % 2 == 1 ? -1 : 1;  // moves (-1)^{|J|-1} T to the left side
    res += term;
  }
  std::string name = "cw/c=" + vec_str(profile.entries()) + (mutate ? "/mutated" : "") + caps_str(caps);
  return make_report(std::move(name), res);
}

CheckReport check_tight_rec2(int c1, int c2, Caps caps, bool mutate) {
  check_caps(caps);
  if (c1 < 0 || c2 < 0 || c1 + c2 < 1) throw std::invalid_argument("cylq: need c1, c2 >= 0 and c1 + c2 >= 1");
  const int level = c1 + c2;
  TightCache cache(caps);
  Series res = cache.get(Profile({c1, c2}));
  res.add_to(0, 0, -1);
  for (int a = 0; a <= level; ++a) {
    if (a == c2) continue;
    int d = std::abs(a - c2);
    if (mutate && a < c2) d = c2 - a + 1;
    res -= z_subst_over(cache.get(Profile({level - a, a})), d);
  }
  return make_report("rec2/c=(" + std::to_string(c1) + "," + std::to_string(c2) + ")" +
                         (mutate ? "/mutated" : "") + caps_str(caps),
                     res);
}

CheckReport check_dhk_rec(int level, int ground, Caps caps, bool mutate) {
  check_caps(caps);
  if (level < 1 || ground < 0 || ground > level) throw std::invalid_argument("cylq: need level >= 1 and 0 <= a <= level");
  std::vector<Series> D;
  for (int j = 0; j <= level; ++j) D.push_back(gf_dhk(level, j, caps.q_cap, caps.z_cap));
  Series res = D[static_cast<std::size_t>(ground)];
  res.add_to(0, 0, -1);
  for (int j = 0; j <= level; ++j) {
    if (j == ground) continue;
    const int d = std::abs(j - ground);
    Series term = series_subst_z(D[static_cast<std::size_t>(j)], mutate ? d + 1 : d);
    term.div_one_minus({1, d, 1});
    term.shift({1, d, 1});
    res -= term;
  }
  return make_report("dhkrec/l=" + std::to_string(level) + "/a=" + std::to_string(ground) +
                         (mutate ? "/mutated" : "") + caps_str(caps),
                     res);
}

std::vector<UnimodalRow> check_unimodal(const Series &series) {
  std::vector<UnimodalRow> out;
  for (int n = 0; n <= series.q_cap(); ++n) {
    UnimodalRow row{n, true, std::nullopt};
    int lo = -1, hi = -1;
    for (int m = 0; m <= series.z_cap(); ++m)
      if (series.at(n, m) != 0) {
        if (lo < 0) lo = m;
        hi = m;
      }
    auto fail = [&](int m) {
      row.conforms = false;
      row.violation_at = m;
    };
    if (lo >= 0) {
      for (int m = lo; m <= hi && row.conforms; ++m)
        if (series.at(n, m) == 0) fail(m);
      if (row.conforms) {
        int p = lo;
        while (p < hi && series.at(n, p + 1) > series.at(n, p)) ++p;
        if (p < hi && series.at(n, p + 1) == series.at(n, p)) ++p;  // plateau of width 2
        for (int m = p; m < hi && row.conforms; ++m)
          if (series.at(n, m + 1) >= series.at(n, m)) fail(m + 1);
      }
    }
    out.push_back(row);
  }
  return out;
}

CheckReport unimodal_report(std::string name, const Series &series) {
  CheckReport r;
  r.name = std::move(name);
  r.q_cap = series.q_cap();
  r.z_cap = series.z_cap();
  r.asserted = false;
  for (const auto &row : check_unimodal(series))
    if (!row.conforms) {
      r.residual_zero = false;
      r.first_nonzero = Term{row.n, *row.violation_at, series.at(row.n, *row.violation_at)};
      break;
    }
  return r;
}

}  // namespace cylq
