#pragma once
/**
 * @file moduli.hpp
 * Weighted projective space data of the moduli space M(G,c): weights,
 * intersection numbers of the determinant bundle by two routes, cohomology
 * dimensions over a c-special parabolic, and the singular locus counts.
 */

#include <algorithm>
#include <string>
#include <vector>

#include "wpsm/arith.hpp"
#include "wpsm/center.hpp"
#include "wpsm/check.hpp"
#include "wpsm/farey.hpp"
#include "wpsm/parabolic.hpp"
#include "wpsm/rootsys.hpp"

namespace wpsm {

/// Everything computed for one (root system, center element) pair.
struct GroupData {
  const RootDatum* d = nullptr;
  const CenterGroup* z = nullptr;
  const std::vector<ParabolicProfile>* profiles = nullptr;
  OrbitProfile orbits;
  LatticeProfile lattice;

  const CenterElement& c() const { return orbits.c; }
  bool c_generates_center() const { return z->generates(orbits.c); }
};

inline GroupData group_data(const RootDatum& d, const CenterGroup& z, const std::vector<ParabolicProfile>& profiles,
                            const CenterElement& c) {
  GroupData g;
  g.d = &d;
  g.z = &z;
  g.profiles = &profiles;
  g.orbits = orbit_data(d, c);
  g.lattice = lattice_profile(d, g.orbits);
  return g;
}

/// Suffix naming the group: simply connected, adjoint (c generates the
/// center) or the center index otherwise.
inline std::string group_key(const GroupData& g) {
  return g.d->type.name() + "-" + g.z->key_suffix(g.c().index);
}

struct WpsProfile {
  std::string key;
  int alpha = 0;
  IntVec weights;          // n_{c,alpha} g_bar / n0, in orbit order
  IntVec moduli_weights;   // g_bar / n0
  Int weight_gcd;
  int dimension = 0;       // r_c
  Int n_c_alpha;
  Int ample_exponent;      // -2g n_{c,alpha} / n0
  bool c_generates_center = true;

  IntVec sorted_weights() const {
    IntVec w = weights;
    std::sort(w.begin(), w.end());
    return w;
  }
  IntVec sorted_moduli_weights() const {
    IntVec w = moduli_weights;
    std::sort(w.begin(), w.end());
    return w;
  }
};

inline WpsProfile wps_profile(const GroupData& g, int alpha) {
  const RootDatum& d = *g.d;
  auto cs = c_special_roots(d, g.orbits, *g.profiles);
  if (std::find(cs.begin(), cs.end(), alpha) == cs.end())
    throw PreconditionError("simple root " + std::to_string(alpha) + " is not c-special for " + group_key(g));
  WpsProfile w;
  w.key = group_key(g);
  w.alpha = alpha;
  w.n_c_alpha = n_c_alpha(d, *g.z, g.c(), alpha);
  w.c_generates_center = g.c_generates_center();
  const Int& n0 = g.orbits.n0;
  for (const Int& gb : g.orbits.g_bar) {
    w.moduli_weights.push_back(gb / n0);
    w.weights.push_back(w.n_c_alpha * gb / n0);
  }
  w.weight_gcd = gcd_of(w.weights);
  w.dimension = g.orbits.r_c;
  w.ample_exponent = to_int(make_rat(-2 * d.dual_coxeter * w.n_c_alpha, n0), "ample exponent");
  return w;
}

/// Top self-intersection of O(a) on WP(w_0..w_r): a^r gcd(w) / prod w.
inline Rat wps_top_intersection(const IntVec& w, const Int& a) {
  if (w.empty()) throw PreconditionError("wps_top_intersection: no weights");
  for (const Int& x : w)
    if (x <= 0 || a % x != 0)
      throw PreconditionError("wps_top_intersection: weight " + to_string(x) + " does not divide " + to_string(a));
  Rat r = make_rat(ipow(a, w.size() - 1) * gcd_of(w), product_of(w));
  return r;
}

/// (-2g)^{r_c} n0 / prod g_bar.
inline Rat det_bundle_self_intersection(const GroupData& g) {
  Rat r = make_rat(ipow(-2 * g.d->dual_coxeter, g.orbits.r_c) * g.orbits.n0, product_of(g.orbits.g_bar));
  return r;
}

/// Top power of the class of a quadratic form: r! det J.
inline Rat quadratic_top_power(const RatMatrix& j) {
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < j.size(); ++b)
      if (j[a][b] != j[b][a]) throw PreconditionError("quadratic_top_power: matrix is not symmetric");
  return Rat(factorial(static_cast<long>(j.size()))) * determinant(j);
}

/// Q restricted to the invariant lattice, as the root sum of products.
inline RatMatrix root_form_on_invariants(const GroupData& g) {
  const RootDatum& d = *g.d;
  const auto& b = g.lattice.basis;
  RatMatrix j(b.size(), RatVec(b.size(), Rat(0)));
  for (const Root& beta : d.roots) {
    std::vector<Int> p(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      Int s = 0;
      for (int k = 0; k < d.rank; ++k) s += d.pair_coroot(beta, k) * b[i][k];
      p[i] = s;
    }
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = 0; y < b.size(); ++y) j[x][y] += p[x] * p[y];
  }
  return j;
}

inline Check degree_consistency(const GroupData& g) {
  const RootDatum& d = *g.d;
  Int e = pairing_degree(d, g.orbits, g.lattice);
  RatMatrix j = root_form_on_invariants(g);
  Rat lhs = quadratic_top_power(j) / e;
  Rat rhs = abs(det_bundle_self_intersection(g));
  Check c = make_check("moddegree", "top power of Q on the invariants / e = |(-2g)^{r_c} n0 / prod g_bar|",
                       to_string(lhs), to_string(rhs), "e=" + to_string(e));
  return c;
}

struct CohomologyDims {
  int alpha = 0;
  Int deg;
  Int r_hat;
  Int o_c_alpha;
  IntVec per_level;  // dim H^1(u^k(eta)), k = 1..h_alpha
  Int total;         // dim H^1(ad xi)
  RatVec atiyah_bott;  // d zeta / (o m_alpha), coroot coordinates
};

inline CohomologyDims cohomology_dimensions(const GroupData& g, int alpha, const Int& deg, const Int& r_hat = 0) {
  if (deg >= 0) throw PreconditionError("cohomology_dimensions: degree must be negative");
  if (r_hat < 0) throw PreconditionError("cohomology_dimensions: r_hat must be nonnegative");
  const ParabolicProfile& p = g.profiles->at(alpha - 1);
  CohomologyDims cd;
  cd.alpha = alpha;
  cd.deg = deg;
  cd.r_hat = r_hat;
  cd.o_c_alpha = o_c_alpha(g.c(), alpha);
  const Int& o = cd.o_c_alpha;
  Rat lhs = frac(make_rat(deg, o));
  Rat rhs = varpi_of_center(g.c(), alpha);
  if (lhs != rhs)
    throw CongruenceError("degree " + to_string(deg) + " fails deg/o = w_alpha(c) mod 1: " + to_string(lhs) +
                          " vs " + to_string(rhs));
  for (const Level& lv : p.levels) {
    Int num = -deg * lv.i;
    if (num % o != 0)
      throw CongruenceError("o_{c,alpha} = " + to_string(o) + " does not divide -deg i(alpha," +
                            std::to_string(lv.k) + ") = " + to_string(num));
    cd.per_level.push_back(num / o);
  }
  if ((-deg * p.d1) % o != 0) throw CongruenceError("o_{c,alpha} does not divide -deg d1");
  cd.total = 1 + r_hat - deg * p.d1 / o;
  for (int i = 0; i < g.d->rank; ++i) cd.atiyah_bott.push_back(Rat(deg * p.zeta[i]) / (o * p.m_alpha));
  return cd;
}

/// 1 + n d1(beta) >= r + 2 over all simple beta and 1 <= n <= h, with
/// equality exactly for n = 1 and beta special.
inline Check minimality_scan(const RootDatum& d, const std::vector<ParabolicProfile>& profiles) {
  bool ok = true;
  std::string wit;
  int equal_cases = 0;
  const long h = d.coxeter.get_si();
  for (int b = 1; b <= d.rank; ++b) {
    bool special = is_special(d, b);
    for (long n = 1; n <= h; ++n) {
      Int v = 1 + n * profiles[b - 1].d1;
      Int bound = d.rank + 2;
      bool eq = v == bound;
      if (v < bound || eq != (n == 1 && special)) {
        ok = false;
        wit = "beta=" + std::to_string(b) + ",n=" + std::to_string(n);
      }
      equal_cases += eq;
    }
  }
  Check c = make_bool_check("mindim", "1 + n d1(beta) >= r+2, equality iff n = 1 and beta special", ok, wit);
  return c;
}

struct SingularLocus {
  std::vector<Component> components;  // of R(alpha,k)
  long divisible_count = 0;           // weights divisible by k n_{c,alpha}
};

inline SingularLocus singular_locus_structure(const GroupData& g, const WpsProfile& w, int k) {
  const RootDatum& d = *g.d;
  Subsystem s = subsystem_R_alpha_k(d, w.alpha, k);
  SingularLocus out;
  out.components = s.components;
  for (const Int& x : w.weights)
    if (x % (k * w.n_c_alpha) == 0) ++out.divisible_count;
  return out;
}

/// Identities for one c-special root.
inline Checks moduli_checks(const GroupData& g, const WpsProfile& w) {
  const RootDatum& d = *g.d;
  const ParabolicProfile& p = g.profiles->at(w.alpha - 1);
  const Int o = g.c().order;
  Checks out;
  {
    Int sum = 0;
    for (const Int& x : w.weights) sum += x;
    out.push_back(make_check("weights-sum", "sum of weights = n_{c,alpha} g / n0", to_string(sum),
                             to_string(w.n_c_alpha * d.dual_coxeter / g.orbits.n0)));
    out.push_back(make_check("weights-count", "number of weights = r_c + 1", std::to_string(w.weights.size()),
                             std::to_string(g.orbits.r_c + 1)));
    out.push_back(make_check("weights-gcd", "gcd of weights = n_{c,alpha}", to_string(w.weight_gcd),
                             to_string(w.n_c_alpha)));
    if (g.c().index == 0) {
      IntVec simple;
      for (int node = 0; node <= d.rank; ++node) simple.push_back(p.n_alpha * d.comarks[node]);
      std::sort(simple.begin(), simple.end());
      out.push_back(make_check("1weights", "weights = {n_alpha g_beta}", join_values(w.sorted_weights()),
                               join_values(simple)));
    }
  }
  {
    // multiplicity of weight k n_{c,alpha} is i(alpha,k)/o(c)
    IntVec from_levels;
    for (const Level& lv : p.levels) {
      Int m = to_int(make_rat(lv.i, o), "i(alpha,k)/o(c)");
      for (Int t = 0; t < m; ++t) from_levels.push_back(g.orbits.n0 * lv.k);
    }
    IntVec gb = g.orbits.g_bar;
    std::sort(gb.begin(), gb.end());
    std::sort(from_levels.begin(), from_levels.end());
    out.push_back(make_check("orbit-weights", "orbit integers g_bar = n0 k with multiplicity i(alpha,k)/o(c)",
                             join_values(gb), join_values(from_levels)));
    out.push_back(make_check("n0", "n0 = o(c) g_alpha / h_alpha", to_string(g.orbits.n0),
                             to_string(make_rat(o * p.g_alpha, p.h_alpha))));
    Int nmax = *std::max_element(g.orbits.g_bar.begin(), g.orbits.g_bar.end());
    out.push_back(make_check("h-alpha", "h_alpha = N / n0", std::to_string(p.h_alpha), to_string(make_rat(nmax, g.orbits.n0))));
    // d_c(k) built from the orbit integers is circular for N/n0 and g/n0
    long nn = Int(nmax / g.orbits.n0).get_si();
    IntVec dc(nn, Int(0));
    for (long k = 1; k <= nn; ++k)
      for (const Int& x : g.orbits.g_bar)
        if ((x / g.orbits.n0) % k == 0) dc[k - 1] += 1;
    auto sym = is_circularly_symmetric(dc, nn, d.dual_coxeter / g.orbits.n0);
    out.push_back(make_bool_check("orbit-circular", "d_c(k) is circular for N/n0 and g/n0", sym.symmetric,
                                  "pair " + std::to_string(sym.x) + "," + std::to_string(sym.y)));
  }
  {
    bool ok = true;
    for (const Component& c : levi_components(d, w.alpha)) ok = ok && c.type.family == Family::A;
    out.push_back(make_bool_check("cthm-ii", "components of Delta - alpha are of type A", ok));
  }
  {
    Rat a = wps_top_intersection(w.weights, w.ample_exponent);
    Rat b = det_bundle_self_intersection(g);
    out.push_back(make_check("intersection", "a^r gcd(w)/prod w = (-2g)^{r_c} n0 / prod g_bar", to_string(a),
                             to_string(b)));
  }
  {
    CohomologyDims cd = cohomology_dimensions(g, w.alpha, -1, 0);
    out.push_back(make_check("cmindim", "dim H^1(ad xi) = r_c + 2 at deg -1", to_string(cd.total),
                             std::to_string(g.orbits.r_c + 2)));
  }
  {
    bool ok = true;
    std::string wit;
    for (int k = 1; k <= p.h_alpha; ++k) {
      SingularLocus s = singular_locus_structure(g, w, k);
      Rat expect = make_rat(p.d_seq[k - 1], o);
      if (Rat(s.divisible_count) != expect) ok = false, wit = "k=" + std::to_string(k);
      if (g.c().index == 0)
        for (const Component& c : s.components) {
          bool has_lambda = std::find(c.labels.begin(), c.labels.end(), d.rank) != c.labels.end();
          if (!has_lambda && c.type.family != Family::A) ok = false, wit = "k=" + std::to_string(k) + " typing";
        }
    }
    out.push_back(make_bool_check("singembed", "#weights divisible by k n_{c,alpha} = d_k(alpha)/o(c)", ok, wit));
  }
  return out;
}

}  // namespace wpsm
