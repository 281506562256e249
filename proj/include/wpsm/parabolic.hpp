#pragma once
/**
 * @file parabolic.hpp
 * Maximal-parabolic combinatorics of a simple root alpha: the grading of R by
 * the alpha-coefficient, extreme roots of each level, the integers i(alpha,k)
 * and d_k(alpha), special roots and the subsystems R(alpha,k).
 */

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "wpsm/arith.hpp"
#include "wpsm/check.hpp"
#include "wpsm/rootsys.hpp"

namespace wpsm {

struct Component {
  std::vector<int> labels;  // Bourbaki labels, ascending
  SimpleType type;
};

struct Level {
  int k = 0;
  Int count;         // c(alpha,k)
  Root sigma;        // lowest root of S(alpha,k)
  Root lambda;       // highest root of S(alpha,k)
  Int k_prime;       // coefficient of alpha^vee in lambda^vee
  Int i;             // i(alpha,k)
};

struct ParabolicProfile {
  int alpha = 0;  // label 1..r
  std::vector<Component> levi_components;
  Root zeta;  // coroot coordinates
  Int m_alpha, n_alpha;
  int h_alpha = 0;
  Int g_alpha;
  std::vector<Level> levels;  // k = 1..h_alpha
  IntVec d_seq;               // d_seq[k-1] = d_k(alpha)
  Int d1;
};

namespace detail {

/// The element of a set dominated by (or dominating) all others, if any.
inline const Root* extreme(const std::vector<Root>& s, bool lowest) {
  for (const Root& c : s) {
    bool ok = true;
    for (const Root& b : s) {
      for (std::size_t i = 0; i < b.size() && ok; ++i)
        if (lowest ? b[i] < c[i] : b[i] > c[i]) ok = false;
      if (!ok) break;
    }
    if (ok) return &c;
  }
  return nullptr;
}

inline void check_label(const RootDatum& d, int alpha) {
  if (alpha < 1 || alpha > d.rank)
    throw RangeError("simple root label " + std::to_string(alpha) + " out of range 1.." + std::to_string(d.rank));
}

}  // namespace detail

/// Components of Delta minus alpha with their types.
inline std::vector<Component> levi_components(const RootDatum& d, int alpha) {
  detail::check_label(d, alpha);
  std::vector<int> nodes;
  for (int i = 0; i < d.rank; ++i)
    if (i != alpha - 1) nodes.push_back(i);
  std::vector<Component> out;
  for (const auto& comp : components(d.adjacency, nodes)) {
    Component c;
    for (int v : comp) c.labels.push_back(v + 1);
    c.type = classify_cartan(cartan_submatrix(d, comp));
    out.push_back(c);
  }
  return out;
}

inline ParabolicProfile parabolic_profile(const RootDatum& d, int alpha) {
  detail::check_label(d, alpha);
  const int a = alpha - 1;
  ParabolicProfile p;
  p.alpha = alpha;
  p.levi_components = levi_components(d, alpha);
  p.h_alpha = static_cast<int>(d.marks[alpha].get_si());
  p.g_alpha = d.comarks[alpha];

  const RatVec& w = d.fund_coweights[a];
  p.n_alpha = 1;
  for (const Rat& x : w) p.n_alpha = lcm(p.n_alpha, x.get_den());
  p.zeta.resize(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    Int z = to_int(w[i] * p.n_alpha, "zeta_alpha");
    if (z <= 0) throw InternalInconsistency("zeta_alpha has a nonpositive coefficient");
    p.zeta[i] = static_cast<int>(z.get_si());
  }
  p.m_alpha = p.zeta[a];

  int kmax = 0;
  for (const Root& b : d.roots) kmax = std::max(kmax, b[a]);
  std::vector<std::vector<Root>> by_level(kmax + 1);
  for (const Root& b : d.roots)
    if (b[a] > 0) by_level[b[a]].push_back(b);

  for (int k = 1; k <= kmax; ++k) {
    Level lv;
    lv.k = k;
    lv.count = static_cast<unsigned long>(by_level[k].size());
    if (by_level[k].empty()) throw InternalInconsistency("S(alpha,k) empty below the maximal level");
    const Root* lo = detail::extreme(by_level[k], true);
    const Root* hi = detail::extreme(by_level[k], false);
    if (!lo || !hi) throw InternalInconsistency("S(alpha,k) lacks a lowest or highest root");
    lv.sigma = *lo;
    lv.lambda = *hi;
    Rat kp = Rat(k) * d.len2[a] / d.root_len2(lv.lambda);
    lv.k_prime = to_int(kp, "k'");
    Rat iv = Rat(k) * p.n_alpha * lv.count / p.m_alpha;
    lv.i = to_int(iv, "i(alpha,k)");
    p.levels.push_back(lv);
  }
  p.d_seq.assign(kmax, Int(0));
  for (int k = 1; k <= kmax; ++k)
    for (int x = k; x <= kmax; x += k) p.d_seq[k - 1] += p.levels[x - 1].i;
  p.d1 = kmax ? p.d_seq[0] : Int(0);
  return p;
}

struct DkEntry {
  int k;
  Int i, d;
};

inline std::vector<DkEntry> dk_sequence(const ParabolicProfile& p) {
  std::vector<DkEntry> out;
  for (const Level& lv : p.levels) out.push_back({lv.k, lv.i, p.d_seq[lv.k - 1]});
  return out;
}

/// alpha is special: Delta minus alpha is a union of A-type diagrams, alpha
/// is attached to an end of each of them, and alpha is long.
inline bool is_special(const RootDatum& d, int alpha) {
  detail::check_label(d, alpha);
  if (!d.is_long_simple(alpha)) return false;
  for (const Component& c : levi_components(d, alpha)) {
    if (c.type.family != Family::A) return false;
    std::set<int> in(c.labels.begin(), c.labels.end());
    int touching = 0;
    for (int nb : d.adjacency[alpha - 1]) {
      if (!in.count(nb + 1)) continue;
      ++touching;
      int deg = 0;
      for (int x : d.adjacency[nb])
        if (in.count(x + 1)) ++deg;
      if (deg > 1) return false;
    }
    if (touching != 1) return false;
  }
  return true;
}

inline std::vector<int> special_roots(const RootDatum& d) {
  std::vector<int> out;
  for (int a = 1; a <= d.rank; ++a)
    if (is_special(d, a)) out.push_back(a);
  return out;
}

/// Permutation of Delta induced by -w_0' with w_0' longest in W(Delta - alpha);
/// tau[alpha-1] = alpha-1. 0-based.
inline std::vector<int> levi_opposition(const RootDatum& d, int alpha, Word* word_out = nullptr) {
  std::vector<int> J = labels_except(d, alpha);
  Word w = longest_word(d, J);
  std::vector<int> tau(d.rank, -1);
  tau[alpha - 1] = alpha - 1;
  for (int j : J) {
    RationalVector e{RatVec(d.rank, Rat(0)), Basis::SimpleRoot};
    e.coords[j - 1] = 1;
    RationalVector img = apply_word(d, w, e);
    for (int i = 0; i < d.rank; ++i)
      if (img.coords[i] == -1) tau[j - 1] = i;
  }
  if (word_out) *word_out = w;
  return tau;
}

struct Subsystem {
  std::vector<Root> simple;  // Delta - alpha, then -lambda_k
  std::vector<Component> components;  // labels index into `simple` (1-based)
  std::set<Root> generated;
};

inline Subsystem subsystem_R_alpha_k(const RootDatum& d, int alpha, int k) {
  detail::check_label(d, alpha);
  const int ha = static_cast<int>(d.marks[alpha].get_si());
  if (k < 1 || k > ha)
    throw RangeError("k = " + std::to_string(k) + " outside 1.." + std::to_string(ha));
  ParabolicProfile p = parabolic_profile(d, alpha);
  Subsystem s;
  for (int i = 1; i <= d.rank; ++i)
    if (i != alpha) s.simple.push_back(d.node_root(i));
  Root m = p.levels[k - 1].lambda;
  for (int& x : m) x = -x;
  s.simple.push_back(m);

  const std::size_t n = s.simple.size();
  std::vector<Root> co;
  for (const Root& b : s.simple) co.push_back(d.coroot_of(b));
  auto pair = [&](const Root& b, const Root& c) {
    int t = 0;
    for (int i = 0; i < d.rank; ++i)
      for (int j = 0; j < d.rank; ++j) t += b[i] * d.cartan[i][j] * c[j];
    return t;
  };
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = pair(s.simple[i], co[j]);
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0) adj[i].push_back(static_cast<int>(j));
  std::vector<int> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
  for (const auto& comp : components(adj, all)) {
    Component c;
    std::vector<std::vector<int>> sub(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i) {
      c.labels.push_back(comp[i] + 1);
      for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = a[comp[i]][comp[j]];
    }
    c.type = classify_cartan(sub);
    s.components.push_back(c);
  }

  // Close the simple set under its own reflections.
  s.generated.insert(s.simple.begin(), s.simple.end());
  std::vector<Root> frontier = s.simple;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier)
      for (std::size_t j = 0; j < n; ++j) {
        int q = pair(b, co[j]);
        if (q == 0) continue;
        Root r = b;
        for (int i = 0; i < d.rank; ++i) r[i] -= q * s.simple[j][i];
        if (s.generated.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return s;
}

struct LeviSpecial {
  std::vector<int> n;  // SL_{n_i} factors
  Int m_alpha;
};

inline LeviSpecial levi_special_structure(const RootDatum& d, int alpha) {
  if (!is_special(d, alpha))
    throw PreconditionError("simple root " + std::to_string(alpha) + " of " + d.type.name() + " is not special");
  LeviSpecial out;
  for (const Component& c : levi_components(d, alpha)) out.n.push_back(static_cast<int>(c.labels.size()) + 1);
  std::sort(out.n.begin(), out.n.end());
  out.m_alpha = lcm_of(out.n);
  return out;
}

/// Highest coroot whose alpha^vee coefficient is 1.
inline Root lambda1_coroot(const RootDatum& d, int alpha) {
  std::vector<Root> s;
  for (const Root& c : d.coroots)
    if (c[alpha - 1] == 1) s.push_back(c);
  const Root* hi = detail::extreme(s, false);
  if (!hi) throw InternalInconsistency("no highest coroot with coefficient 1");
  return *hi;
}

inline Checks parabolic_checks(const RootDatum& d, const ParabolicProfile& p) {
  Checks out;
  const int a = p.alpha - 1;
  const Int g = d.dual_coxeter;
  auto rho_of_coroot = [](const Root& c) {
    Int s = 0;
    for (int x : c) s += x;
    return s;
  };
  {
    bool ok = true;
    for (int i = 0; i < d.rank; ++i)
      if (Rat(p.zeta[i]) != p.n_alpha * d.fund_coweights[a][i] || p.zeta[i] <= 0) ok = false;
    if (d.pair_root(p.zeta, a) != p.n_alpha) ok = false;
    out.push_back(make_bool_check("zeta", "zeta = n w^vee primitive with positive coefficients, alpha(zeta) = n", ok));
  }
  {
    int kmax = static_cast<int>(p.levels.size());
    out.push_back(make_check("unbroken", "S(alpha,k) nonempty exactly for 1 <= k <= h_alpha", std::to_string(kmax),
                             std::to_string(p.h_alpha)));
  }
  {
    Int s1 = 0, s2 = 0, m1 = 0, m2 = 0;
    for (const Level& lv : p.levels) {
      m1 += lv.k * lv.count;
      m2 += lv.k * lv.k * lv.count;
    }
    for (std::size_t k = 0; k < d.num_positive; ++k) {
      int b = d.roots[k][a];
      s1 += b;
      s2 += b * b;
    }
    out.push_back(make_check("level-moments", "sum k c(alpha,k), sum k^2 c(alpha,k) over R+",
                             to_string(m1) + "," + to_string(m2), to_string(s1) + "," + to_string(s2)));
    bool ok = true;
    std::string wit;
    for (const Level& lv : p.levels) {
      Rat f = Rat(p.h_alpha) * g * lv.k * lv.count / (p.g_alpha * s2);
      if (f != Rat(lv.i)) ok = false, wit = "k=" + std::to_string(lv.k);
    }
    out.push_back(make_bool_check("formulas-i", "i(alpha,k) = h_a g k c(alpha,k) / (g_a sum_R+ beta(w^vee)^2)", ok, wit));
    Rat d1f = Rat(p.h_alpha) * g * s1 / (p.g_alpha * s2);
    out.push_back(make_check("formulas-d1", "d1 = h_a g sum beta(w^vee) / (g_a sum beta(w^vee)^2)", to_string(d1f),
                             to_string(p.d1)));
  }
  {
    Int s = 0;
    for (int k = 1; k <= p.h_alpha; ++k) s += euler_phi(k) * p.d_seq[k - 1];
    Rat rhs = Rat(p.h_alpha) * g / p.g_alpha;
    out.push_back(make_check("phi-sum", "sum phi(k) d_k = h_a g / g_a", to_string(s), to_string(rhs)));
  }
  {
    // d1 by three independent routes
    Rat two_rho = 0;
    for (int i = 0; i < d.rank; ++i) two_rho += 2 * d.fund_coweights[a][i];  // rho(alpha_i^vee) = 1
    Rat r1 = two_rho / d.fund_coweights[a][a];
    Int r2 = 0;
    for (const Root& b : d.roots)
      if (b[a] > 0) r2 += d.pair_coroot(b, a);
    Root l1c = lambda1_coroot(d, p.alpha);
    Int r3 = rho_of_coroot(l1c) + 1;
    out.push_back(make_check("d1-rho", "d1 = 2 rho(w^vee)/w(w^vee)", to_string(r1), to_string(p.d1)));
    out.push_back(make_check("d1-pairing", "d1 = sum over beta(w^vee) > 0 of n(beta,alpha)", to_string(r2),
                             to_string(p.d1)));
    out.push_back(make_check("d1-coroot", "d1 = rho(lambda_1(alpha^vee)) + 1", to_string(r3), to_string(p.d1)));
    Int neg = 0;
    for (std::size_t k = 0; k < d.num_positive; ++k) {
      const Root& b = d.roots[k];
      if (b[a] != 0) continue;
      int q = d.pair_coroot(b, a);
      if (q < 0) neg += q;
    }
    out.push_back(make_check("sum1", "2 - sum over S+(alpha,0) with beta(alpha^vee) < 0 of beta(alpha^vee) = d1",
                             to_string(2 - neg), to_string(r2)));
    out.push_back(make_bool_check("lambdaprops-ii", "lambda_1(alpha^vee) = lambda_1(alpha)^vee",
                                  l1c == d.coroot_of(p.levels[0].lambda)));
  }
  {
    Int lhs = p.d_seq.front() + p.d_seq.back();
    Rat rhs = 2 * Rat(g) / p.g_alpha;
    out.push_back(make_check("firstcase", "d_1 + d_{h_alpha} = 2g/g_alpha", to_string(lhs), to_string(rhs)));
  }
  {
    bool ok = true;
    std::string wit;
    for (const Level& lv : p.levels) {
      Root lc = d.coroot_of(lv.lambda);
      Rat lhs = p.d1 + p.d_seq[lv.k - 1];
      Rat rhs = Rat(2) / lv.k_prime * (rho_of_coroot(lc) + 1);
      if (lhs != rhs || lc[a] != lv.k_prime) ok = false, wit = "k=" + std::to_string(lv.k);
    }
    out.push_back(make_bool_check("d1-dk", "d_1 + d_k = (2/k')(rho(lambda_k^vee) + 1)", ok, wit));
  }
  {
    bool ok = p.levels.front().sigma == d.node_root(p.alpha) && p.levels.back().lambda == d.highest_root;
    out.push_back(make_bool_check("extremes", "sigma_1 = alpha and lambda_{h_alpha} = highest root", ok));
  }
  {
    Word w0;
    std::vector<int> tau = levi_opposition(d, p.alpha, &w0);
    std::vector<int> J = labels_except(d, p.alpha);
    bool ok_i = true, ok_anti = true, ok_iii = true, ok_iii_co = true;
    Root l1 = p.levels[0].lambda;
    Root l1c = lambda1_coroot(d, p.alpha);
    for (const Level& lv : p.levels) {
      RationalVector s{RatVec(lv.sigma.begin(), lv.sigma.end()), Basis::SimpleRoot};
      RationalVector l{RatVec(lv.lambda.begin(), lv.lambda.end()), Basis::SimpleRoot};
      if (apply_word(d, w0, s) != l) ok_i = false;
      if (make_dominant_within(d, J, s) != l) ok_i = false;
      if (make_antidominant_within(d, J, l) != s) ok_anti = false;
      // sigma_k = k lambda_1 - tau(lambda_k) + k alpha
      for (int i = 0; i < d.rank; ++i) {
        int expect = lv.k * l1[i] - lv.lambda[std::find(tau.begin(), tau.end(), i) - tau.begin()] +
                     (i == a ? lv.k : 0);
        if (expect != lv.sigma[i]) ok_iii = false;
      }
      Root sc = d.coroot_of(lv.sigma), lc = d.coroot_of(lv.lambda);
      int kp = static_cast<int>(lv.k_prime.get_si());
      for (int i = 0; i < d.rank; ++i) {
        int expect = kp * l1c[i] - lc[std::find(tau.begin(), tau.end(), i) - tau.begin()] + (i == a ? kp : 0);
        if (expect != sc[i]) ok_iii_co = false;
      }
    }
    out.push_back(make_bool_check("lambdaprops-i", "w_0' sigma_k = lambda_k", ok_i));
    out.push_back(make_bool_check("antidominant-sweep", "antidominant sweep of lambda_k within Delta-alpha is sigma_k",
                                  ok_anti));
    out.push_back(make_bool_check("lambdaprops-iii", "sigma_k = k lambda_1 - tau(lambda_k) + k alpha, and dually",
                                  ok_iii && ok_iii_co));
  }
  {
    bool ok = true;
    std::string wit;
    for (int k = 1; k <= p.h_alpha; ++k) {
      Subsystem s = subsystem_R_alpha_k(d, p.alpha, k);
      std::set<Root> expect;
      for (const Root& b : d.roots)
        if (b[a] % k == 0) expect.insert(b);
      if (s.generated != expect) ok = false, wit = "k=" + std::to_string(k);
    }
    out.push_back(make_bool_check("subsystem", "(Delta-alpha) + {-lambda_k} generates {beta : k | beta(w^vee)}", ok,
                                  wit));
  }
  {
    bool special = is_special(d, p.alpha);
    Int r1 = d.rank + 1;
    bool ok = special ? p.d1 == r1 : p.d1 >= r1 + 1;
    out.push_back(make_bool_check("d2", "d1 = r+1 if special, d1 >= r+2 otherwise", ok,
                                  "d1=" + to_string(p.d1) + (special ? " special" : " not special")));
    if (special) {
      LeviSpecial ls = levi_special_structure(d, p.alpha);
      out.push_back(make_check("lalpha2", "m_alpha = lcm(n_i) over the SL_{n_i} Levi factors", to_string(ls.m_alpha),
                               to_string(p.m_alpha)));
    }
  }
  return out;
}

}  // namespace wpsm
