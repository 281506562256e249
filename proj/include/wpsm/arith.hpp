#pragma once
/**
 * @file arith.hpp
 * Exact integer/rational helpers on top of gmpxx: formatting, small number
 * theory, rational Gauss elimination and the Smith normal form.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include "wpsm/errors.hpp"

namespace wpsm {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMatrix = std::vector<IntVec>;
using RatMatrix = std::vector<RatVec>;

inline Rat make_rat(const Int& p, const Int& q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}
inline std::string to_string(const Int& z) { return z.get_str(); }
/// Unevaluated gmpxx expressions.
template <class T, class U>
  requires(!std::is_same_v<__gmp_expr<T, U>, Int> && !std::is_same_v<__gmp_expr<T, U>, Rat>)
inline std::string to_string(const __gmp_expr<T, U>& e) {
  return to_string(static_cast<__gmp_expr<T, T>>(e));
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Numerator of r, throwing if r is not integral.
inline Int to_int(const Rat& r, const char* what) {
  if (!is_integer(r))
    throw InternalInconsistency(std::string(what) + ": expected an integer, got " + to_string(r));
  return r.get_num();
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}
template <class Range>
Int gcd_of(const Range& xs) {
  Int g = 0;
  for (const auto& x : xs) g = gcd(g, Int(x));
  return g;
}
template <class Range>
Int lcm_of(const Range& xs) {
  Int l = 1;
  for (const auto& x : xs) l = lcm(l, Int(x));
  return l;
}
template <class Range>
Int product_of(const Range& xs) {
  Int p = 1;
  for (const auto& x : xs) p *= Int(x);
  return p;
}

inline Int factorial(long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// Euler's totient by trial factorization. Arguments here are tiny.
inline long euler_phi(long n) {
  if (n <= 0) throw RangeError("euler_phi: argument must be positive");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Power with a signed base and nonnegative exponent.
inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}
inline Rat rpow(const Rat& base, unsigned long e) {
  Rat r = make_rat(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

/// Order of x in Q/Z, i.e. the reduced denominator.
inline Int order_mod_one(const Rat& x) { return x.get_den(); }

/// Fractional part in [0,1).
inline Rat frac(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rat(q);
}

inline RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
  return r;
}

inline RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix t(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline RatVec apply(const RatMatrix& a, const RatVec& v) {
  RatVec out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

/// Bilinear form x^T G y.
inline Rat bilinear(const RatMatrix& g, const RatVec& x, const RatVec& y) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
  }
  return s;
}

/// Gram matrix of vectors under a form: G_ij = B(v_i, v_j).
inline RatMatrix gram(const RatMatrix& form, const std::vector<RatVec>& vs) {
  RatMatrix g(vs.size(), RatVec(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g[i][j] = bilinear(form, vs[i], vs[j]);
  return g;
}

/// Determinant by fraction-exact Gaussian elimination. det of 0x0 is 1.
inline Rat determinant(RatMatrix a) {
  const std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Inverse by Gauss-Jordan; throws on singular input.
inline RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m, inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InternalInconsistency("inverse: singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix U, D, V;
  /// Diagonal entries d_0..d_{min(m,n)-1}.
  IntVec diagonal() const {
    IntVec d;
    for (std::size_t i = 0; i < D.size() && i < (D.empty() ? 0 : D[0].size()); ++i)
      d.push_back(D[i][i]);
    return d;
  }
};

namespace detail {
inline IntMatrix identity(std::size_t n) {
  IntMatrix id(n, IntVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}
inline void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}
inline void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (auto& row : m) row[dst] += f * row[src];
}
inline void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
}  // namespace detail

/// Smith normal form of an m x n integer matrix (m, n may be zero).
inline SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols_if_empty = 0) {
  using namespace detail;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : cols_if_empty;
  SmithForm s{identity(m), a, identity(n)};
  IntMatrix& d = s.D;
  const std::size_t t_max = std::min(m, n);
  for (std::size_t t = 0; t < t_max; ++t) {
    // Pivot: smallest nonzero |entry| in the trailing block.
    auto find_pivot = [&](std::size_t& pi, std::size_t& pj) {
      bool found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (!found || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
            found = true;
          }
      return found;
    };
    std::size_t pi = t, pj = t;
    if (!find_pivot(pi, pj)) break;
    for (;;) {
      std::swap(d[pi], d[t]);
      std::swap(s.U[pi], s.U[t]);
      col_swap(d, pj, t);
      col_swap(s.V, pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        Int q = floor_div(d[i][t], d[t][t]);
        row_axpy(d, i, t, -q);
        row_axpy(s.U, i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        Int q = floor_div(d[t][j], d[t][t]);
        col_axpy(d, j, t, -q);
        col_axpy(s.V, j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility of the trailing block by the pivot.
        std::size_t bad_i = m;
        for (std::size_t i = t + 1; i < m && bad_i == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (d[i][j] % d[t][t] != 0) {
              bad_i = i;
              break;
            }
        if (bad_i == m) break;
        row_axpy(d, t, bad_i, Int(1));
        row_axpy(s.U, t, bad_i, Int(1));
      }
      // Re-pick the smallest nonzero in row t / column t as the new pivot.
      pi = t;
      pj = t;
      for (std::size_t i = t; i < m; ++i)
        if (d[i][t] != 0 && (d[pi][pj] == 0 || abs(d[i][t]) < abs(d[pi][pj]))) pi = i, pj = t;
      for (std::size_t j = t; j < n; ++j)
        if (d[t][j] != 0 && (d[pi][pj] == 0 || abs(d[t][j]) < abs(d[pi][pj]))) pi = t, pj = j;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
  }
  return s;
}

/// Z-basis of the integer kernel {x in Z^n : A x = 0}.
inline std::vector<IntVec> integer_kernel(const IntMatrix& a, std::size_t n) {
  SmithForm s = smith_normal_form(a, n);
  IntVec diag = s.diagonal();
  std::vector<IntVec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (j < diag.size() && diag[j] != 0) continue;
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = s.V[i][j];
    basis.push_back(v);
  }
  return basis;
}

/// Structure of the cokernel Z^m / A Z^n: free rank plus the nontrivial
/// invariant factors.
struct Cokernel {
  std::size_t free_rank = 0;
  IntVec torsion;  // invariant factors > 1
  Int torsion_order() const { return product_of(torsion); }
};

inline Cokernel cokernel(const IntMatrix& a, std::size_t n) {
  const std::size_t m = a.size();
  SmithForm s = smith_normal_form(a, n);
  IntVec diag = s.diagonal();
  Cokernel c;
  for (std::size_t i = 0; i < m; ++i) {
    Int di = i < diag.size() ? diag[i] : Int(0);
    if (di == 0)
      ++c.free_rank;
    else if (di != 1)
      c.torsion.push_back(di);
  }
  return c;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class Range>
std::string join_values(const Range& xs, const std::string& sep = ",") {
  std::vector<std::string> parts;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Int> ||
                  std::is_same_v<std::decay_t<decltype(x)>, Rat>)
      parts.push_back(to_string(x));
    else
      parts.push_back(std::to_string(x));
  }
  return join(parts, sep);
}

}  // namespace wpsm
