#pragma once
/// Farey sequences and the circular symmetry property
///   d_x + d_y = 2M/(xy) for consecutive r/x < s/y in F_N.

#include <optional>
#include <utility>
#include <vector>

#include "wpsm/arith.hpp"
#include "wpsm/errors.hpp"

namespace wpsm {

struct Fraction {
  long num = 0, den = 1;
  bool operator==(const Fraction&) const = default;
};

struct FareySequence {
  long N = 1;
  std::vector<Fraction> entries;
};

/// Next-term recurrence starting from 0/1, 1/N.
inline FareySequence farey_sequence(long N) {
  if (N < 1) throw RangeError("farey_sequence: N must be >= 1");
  FareySequence f;
  f.N = N;
  long a = 0, b = 1, c = 1, d = N;
  f.entries.push_back({a, b});
  while (c <= N) {
    long t = (N + b) / d;
    long e = t * c - a, g = t * d - b;
    f.entries.push_back({c, d});
    a = c, b = d, c = e, d = g;
  }
  return f;
}

struct SymmetryResult {
  bool symmetric = true;
  long x = 0, y = 0;  // denominators of the first failing pair
};

/// d is indexed from 1: d[0] = d_1. Non-integral 2M/(xy) is a violation.
inline SymmetryResult is_circularly_symmetric(const IntVec& d, long N, const Int& M) {
  if (static_cast<long>(d.size()) != N) throw PreconditionError("is_circularly_symmetric: length(d) != N");
  FareySequence f = farey_sequence(N);
  for (std::size_t i = 0; i + 1 < f.entries.size(); ++i) {
    long x = f.entries[i].den, y = f.entries[i + 1].den;
    Int two_m = 2 * M;
    if (two_m % (x * y) != 0 || d[x - 1] + d[y - 1] != two_m / (x * y)) return {false, x, y};
  }
  return {};
}

/// Reconstruct d from d_1 by walking consecutive Farey pairs. Returns
/// nothing if a forced value is non-integral, nonpositive, or inconsistent.
inline std::optional<IntVec> circular_complete(const Int& d1, long N, const Int& M) {
  if (N < 1) throw RangeError("circular_complete: N must be >= 1");
  std::vector<std::optional<Int>> d(N + 1);
  d[1] = d1;
  FareySequence f = farey_sequence(N);
  // Pairs touching denominator 1 first fix everything reachable from d_1;
  // repeated sweeps propagate along the sequence.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.entries.size(); ++i) {
      long x = f.entries[i].den, y = f.entries[i + 1].den;
      Int two_m = 2 * M;
      if (two_m % (x * y) != 0) return std::nullopt;
      Int s = two_m / (x * y);
      if (d[x] && !d[y]) {
        d[y] = s - *d[x];
        changed = true;
      } else if (d[y] && !d[x]) {
        d[x] = s - *d[y];
        changed = true;
      } else if (d[x] && d[y] && *d[x] + *d[y] != s) {
        return std::nullopt;
      }
    }
  }
  IntVec out;
  for (long k = 1; k <= N; ++k) {
    if (!d[k] || *d[k] <= 0) return std::nullopt;
    out.push_back(*d[k]);
  }
  return out;
}

}  // namespace wpsm
