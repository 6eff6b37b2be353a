#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylq/cylinder.hpp"
#include "cylq/exec.hpp"
#include "cylq/series.hpp"

namespace cylq {

struct Caps {
  int q_cap = 12;
  int z_cap = 12;
};

// Integer vector (v_1, ..., v_l) indexing the multisum S(t; v).
using VectorV = std::vector<int>;

enum class BasisKind {
  e,      // standard basis e_j
  delta,  // delta_j = e_j + ... + e_l
  Delta,  // Delta_i = delta_1 + ... + delta_i
  eta,    // eta_i = delta_2 + delta_4 + ... + delta_{2i}
};

// Basis vectors of length `level`; e_j and delta_j vanish for j > level.
VectorV vec_basis(int level, BasisKind kind, int index);

VectorV operator+(const VectorV &a, const VectorV &b);
VectorV operator-(const VectorV &a, const VectorV &b);
VectorV operator-(const VectorV &a);
VectorV operator*(int k, const VectorV &a);

struct Inadmissible : std::domain_error {
  using std::domain_error::domain_error;
};

// Lowest q exponent among the summands of S(t; v) that survive the z cap, i.e.
// the minimum of sum_i binom(N_i + 1, 2) + v.n over chains
// z_cap >= N_1 >= ... >= N_l >= 0.
int s_min_exponent(int level, const VectorV &v, int z_cap);

// q^shift * S(t; v; z, q), where
//   S(t; v) = sum_{n >= 0} z^{N_1} q^{(sum N_i^2 + sum N_i)/2 + v.n} (q;q)_{N_1}
//             / ((zq;q)_{N_1 + t} (q;q)_{n_1} ... (q;q)_{n_l}),
//   N_j = n_j + ... + n_l.
// Throws Inadmissible if a surviving summand has a negative exponent.
Series eval_S(int level, int t, const VectorV &v, Caps caps, int shift = 0, Exec exec = Exec::parallel);

// T_{(l-b, b)}(z, q) from the closed-form multisum over chains
// N_1 >= ... >= N_l >= 0 with exponent sum binom(N_i + 1, 2) - sum_{i<=b} N_{2i}.
Series eval_T_multisum(int level, int b, Caps caps, Exec exec = Exec::parallel);

// C_{(l-b, b)}(z, q): 1/(zq;q)_inf times a k-fold sum, k = floor(l/2), with
// (q^s; q^s)_{N_k} in the denominator (s = 1 for odd l, 2 for even l). For
// l = 1 the sum is empty and the result is 1/(zq;q)_inf.
Series eval_C_multisum(int level, int b, Caps caps);

// T_c for any level-1 profile of rank r:
//   1 + sum_{n>=1} z^n ((q^r;q^r)_n/(q)_n - (q^r;q^r)_{n-1}/(q)_{n-1}).
Series eval_level1(int rank, Caps caps);

// (q^r;q^r)_inf (q^m;q^m)_inf^{r-1} / (q)_inf^r * prod_{i<j} theta(q^{j-i+c_i+...+c_{j-1}}; q^m),
// m = r + l. Result has z_cap 0.
Series eval_product_univariate(const Profile &profile, int q_cap);

// (-q;q)_inf (q^{b+1}, q^{l-b+1}, q^{l+2}; q^{l+2})_inf / (q;q)_inf.
Series eval_product_two_row(int level, int b, int q_cap);

// (q^{a+1}, q^{l-a+1}, q^{l+2}; q^{l+2})_inf / ((q;q^2)_inf (q;q)_inf).
Series eval_product_dhk(int level, int a, int q_cap);

struct CheckReport {
  std::string name;
  int q_cap = 0;
  int z_cap = 0;
  bool residual_zero = true;
  std::optional<Term> first_nonzero;
  // Report-only checks (conjectures) never fail a run.
  bool asserted = true;

  bool ok() const { return residual_zero; }
};

CheckReport make_report(std::string name, const Series &residual, bool asserted = true);

// rel_0(t; v): S(t;v) - S(t+1;v) + z q^{t+1} S(t+1; v+delta_1)
// rel_j(t; v): S(t;v) - S(t;v+e_j) - z q^{v_j+j} S(t+1; v+Delta_j)
//              + z q^{v_j+j+1} S(t+1; v+delta_1+Delta_j)
// `mutate` flips the sign of the last term.
bool rel_admissible(int level, int j, int t, const VectorV &v, Caps caps);
CheckReport check_rel(int level, int j, int t, const VectorV &v, Caps caps, bool mutate = false);

// For 1 <= i < l/2:
//   S(1; d1 - eta_{i-1}) - S(1; 2 d1 - eta_i) - S(1; e1 + e2 - eta_i) + S(1; d1 - eta_{i+1});
// for even l and i = l/2:
//   2 S(1; d1 - eta_{l/2-1}) - S(1; 2 d1 - eta_{l/2}) - S(1; e1 + e2 - eta_{l/2}).
// `mutate` flips the last sign (four-term) or turns the 2 into 1 (middle).
CheckReport check_four_term(int level, int i, Caps caps, bool mutate = false);

enum class DiamondMode {
  multisum_S,   // R_i = S(0; -eta_i)
  multisum_T,   // R_i = eval_T_multisum(l, i)
  enumeration,  // T_{(l-i, i)} from tight enumeration, all 0 <= i <= l
};

const char *to_string(DiamondMode mode);

// Diamond relations
//   R_i(z) + zq^2/(1-zq^2) R_i(zq^2)
//     = R_{i-1}(zq)/(1-zq) + R_{i+1}(zq)/(1-zq) - R_i(zq^2)/(1-zq^2)
// with the edge forms at i = 0 and i = l. The multisum modes solve the folded
// system on 0 <= i <= floor(l/2) (R_j = R_{l-j}) and also report the initial
// conditions R_i(0,q) = R_i(z,0) = 1. `mutate` flips the sign of the second
// term on the left.
std::vector<CheckReport> check_diamond(int level, Caps caps, DiamondMode mode, bool mutate = false);

// S(0; -eta_b) == eval_T_multisum(l, b) == tight enumeration of (l-b, b) and
// of (b, l-b), for each 0 <= b <= floor(l/2).
std::vector<CheckReport> check_mode_agreement(int level, Caps caps);

// T_c(z) + zq^r/(1-zq^r) T_c(zq^r) = sum_{J} (-1)^{|J|-1} T_{c(J)}(zq^{|J|})/(1-zq^{|J|})
// over nonempty J in I_c, all series from enumeration. `mutate` uses zq^{r+1}
// in place of zq^r on the left.
CheckReport check_cw(const Profile &profile, Caps caps, bool mutate = false);

// T_{(c1,c2)}(z) = 1 + sum_{a != c2} zq^d/(1-zq^d) T_{(l-a,a)}(zq^d), d = |a - c2|.
// `mutate` replaces d by c2 - a + 1 for a < c2.
CheckReport check_tight_rec2(int c1, int c2, Caps caps, bool mutate = false);

// D_a(z) = 1 + sum_{j != a} zq^d/(1-zq^d) D_j(zq^d), d = |j - a|, all D from
// DHK enumeration. `mutate` substitutes zq^{d+1} inside D_j.
CheckReport check_dhk_rec(int level, int ground, Caps caps, bool mutate = false);

// Per q^n classification of the z-polynomial: strictly rising, a peak of
// width 1 or 2, then strictly falling over its support, with no interior
// zero. Reports only; nothing here is a theorem.
struct UnimodalRow {
  int n = 0;
  bool conforms = true;
  std::optional<int> violation_at;  // z exponent of the first violation
};
std::vector<UnimodalRow> check_unimodal(const Series &series);

// Folds check_unimodal into one report-only CheckReport; first_nonzero carries
// (n, m, coefficient) at the first violation.
CheckReport unimodal_report(std::string name, const Series &series);

}  // namespace cylq
