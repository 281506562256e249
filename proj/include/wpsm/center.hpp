#pragma once
/**
 * @file center.hpp
 * The center P^vee/Q^vee of the simply connected group, the automorphism
 * tau_c of the extended Dynkin diagram attached to a central element, its
 * orbit integers, the invariant/coinvariant lattices, the fixed simplex of
 * the alcove, the covering degree and c-special roots.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wpsm/arith.hpp"
#include "wpsm/check.hpp"
#include "wpsm/parabolic.hpp"
#include "wpsm/rootsys.hpp"

namespace wpsm {

struct CenterElement {
  int index = 0;   // position in the enumeration, 0 = trivial
  int node = 0;    // mark-1 simple node whose fundamental coweight represents it
  RatVec coweight; // coroot coordinates of the representative
  IntVec cls;      // coordinates in the Smith decomposition
  Int order = 1;
};

struct CenterGroup {
  IntVec factors;  // nontrivial invariant factors
  IntMatrix U;     // Smith left transform, fundamental-coweight coords -> classes
  std::vector<CenterElement> elements;

  Int order() const { return product_of(factors); }
  bool cyclic() const { return factors.size() <= 1; }

  /// Class coordinates of a coweight of P^vee given in coroot coordinates.
  IntVec class_of(const RootDatum& d, const RatVec& coroot_coords) const {
    const std::size_t off = U.size() - factors.size();
    IntVec f(d.rank);
    for (int i = 0; i < d.rank; ++i) {
      Rat s = 0;
      for (int j = 0; j < d.rank; ++j) s += d.cartan[i][j] * coroot_coords[j];
      f[i] = to_int(s, "coweight not in P^vee");
    }
    IntVec out;
    for (std::size_t t = 0; t < factors.size(); ++t) {
      Int s = 0;
      for (int j = 0; j < d.rank; ++j) s += U[off + t][j] * f[j];
      Int m;
      mpz_fdiv_r(m.get_mpz_t(), s.get_mpz_t(), factors[t].get_mpz_t());
      out.push_back(m);
    }
    return out;
  }
  IntVec add(const IntVec& a, const IntVec& b) const {
    IntVec s(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
      s[t] = a[t] + b[t];
      mpz_fdiv_r(s[t].get_mpz_t(), s[t].get_mpz_t(), factors[t].get_mpz_t());
    }
    return s;
  }
  IntVec scale(const IntVec& a, const Int& m) const {
    IntVec s(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) {
      s[t] = a[t] * m;
      mpz_fdiv_r(s[t].get_mpz_t(), s[t].get_mpz_t(), factors[t].get_mpz_t());
    }
    return s;
  }
  Int order_of(const IntVec& a) const {
    Int o = 1;
    for (std::size_t t = 0; t < a.size(); ++t) o = lcm(o, factors[t] / gcd(a[t], factors[t]));
    return o;
  }
  const CenterElement& find(const IntVec& cls) const {
    for (const auto& e : elements)
      if (e.cls == cls) return e;
    throw ElementDomainError("class is not an enumerated center element");
  }
  const CenterElement& at(int index) const {
    if (index < 0 || index >= static_cast<int>(elements.size()))
      throw ElementDomainError("center index " + std::to_string(index) + " out of range 0.." +
                               std::to_string(static_cast<int>(elements.size()) - 1));
    return elements[index];
  }
  /// Whether <c> is the whole center.
  bool generates(const CenterElement& c) const { return c.order == order(); }
  /// The generator with the least index, or null when Z is not cyclic.
  const CenterElement* first_generator() const {
    for (const auto& e : elements)
      if (generates(e) && e.index != 0) return &e;
    return nullptr;
  }
  /// "sc", "adj" for the first generator, "c<index>" otherwise.
  std::string key_suffix(int index) const {
    if (index == 0) return "sc";
    const CenterElement* g = first_generator();
    if (g && g->index == index) return "adj";
    return "c" + std::to_string(index);
  }
};

inline CenterGroup center_group(const RootDatum& d) {
  IntMatrix m(d.rank, IntVec(d.rank));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) m[i][j] = d.cartan[i][j];
  SmithForm s = smith_normal_form(m);
  CenterGroup z;
  IntVec diag = s.diagonal();
  std::size_t first = 0;
  while (first < diag.size() && diag[first] == 1) ++first;
  for (std::size_t i = first; i < diag.size(); ++i) z.factors.push_back(diag[i]);
  z.U = s.U;
  CenterElement e0;
  e0.coweight.assign(d.rank, Rat(0));
  e0.cls.assign(z.factors.size(), Int(0));
  z.elements.push_back(e0);
  for (int label = 1; label <= d.rank; ++label) {
    if (d.marks[label] != 1) continue;
    CenterElement e;
    e.index = static_cast<int>(z.elements.size());
    e.node = label;
    e.coweight = d.fund_coweights[label - 1];
    e.cls = z.class_of(d, e.coweight);
    e.order = z.order_of(e.cls);
    z.elements.push_back(e);
  }
  if (Int(static_cast<unsigned long>(z.elements.size())) != z.order())
    throw InternalInconsistency("center of " + d.type.name() + ": mark-1 nodes do not match the Smith order");
  for (std::size_t i = 0; i < z.elements.size(); ++i)
    for (std::size_t j = i + 1; j < z.elements.size(); ++j)
      if (z.elements[i].cls == z.elements[j].cls)
        throw InternalInconsistency("center of " + d.type.name() + ": repeated class");
  return z;
}

struct AffineAutomorphism {
  std::vector<int> tau;  // on extended nodes 0..r
  Word linear_word;      // w_c as simple reflections, first applied first
  bool operator==(const AffineAutomorphism& o) const { return tau == o.tau; }
};

/// Alcove vertices in coroot coordinates: e_0 = 0, e_j = w_j^vee / h_j.
inline std::vector<RatVec> alcove_vertices(const RootDatum& d) {
  std::vector<RatVec> v{RatVec(d.rank, Rat(0))};
  for (int j = 1; j <= d.rank; ++j) {
    RatVec e = d.fund_coweights[j - 1];
    for (auto& x : e) x /= d.marks[j];
    v.push_back(e);
  }
  return v;
}

/// tau_c read off the affine map x -> w_beta^vee + w x, where w is the
/// product of the longest elements of W and of W(Delta - beta).
inline AffineAutomorphism diagram_automorphism(const RootDatum& d, const CenterElement& c) {
  const int r = d.rank;
  AffineAutomorphism a;
  a.tau.resize(r + 1);
  for (int i = 0; i <= r; ++i) a.tau[i] = i;
  if (c.node == 0) return a;
  if (c.node < 1 || c.node > r || d.marks[c.node] != 1 || c.coweight != d.fund_coweights[c.node - 1])
    throw ElementDomainError("center element is not represented by a mark-1 fundamental coweight of " +
                             d.type.name());
  Word w0 = longest_word(d, all_labels(d));
  Word w0j = longest_word(d, labels_except(d, c.node));
  auto verts = alcove_vertices(d);
  for (int attempt = 0; attempt < 2; ++attempt) {
    Word w = attempt == 0 ? w0 : w0j;
    const Word& second = attempt == 0 ? w0j : w0;
    w.insert(w.end(), second.begin(), second.end());
    std::vector<int> tau(r + 1, -1);
    bool ok = true;
    for (int j = 0; j <= r && ok; ++j) {
      RationalVector x = apply_word(d, w, {verts[j], Basis::SimpleCoroot});
      for (int i = 0; i < r; ++i) x.coords[i] += c.coweight[i];
      auto it = std::find(verts.begin(), verts.end(), x.coords);
      if (it == verts.end()) ok = false;
      else tau[j] = static_cast<int>(it - verts.begin());
    }
    if (ok) {
      a.tau = tau;
      a.linear_word = w;
      return a;
    }
  }
  throw InternalInconsistency("no affine diagram automorphism found for " + d.type.name() + " node " +
                              std::to_string(c.node));
}

struct OrbitProfile {
  CenterElement c;
  AffineAutomorphism aut;
  std::vector<std::vector<int>> orbits;  // sorted by least node; orbit 0 contains alpha_0
  IntVec sizes, g_bar;
  Int n0;
  int r_c = 0;

  Int comark_of_orbit(const RootDatum& d, std::size_t o) const { return d.comarks[orbits[o][0]]; }
};

inline OrbitProfile orbit_data(const RootDatum& d, const CenterElement& c) {
  OrbitProfile p;
  p.c = c;
  p.aut = diagram_automorphism(d, c);
  std::vector<bool> seen(d.rank + 1, false);
  for (int s = 0; s <= d.rank; ++s) {
    if (seen[s]) continue;
    std::vector<int> orb;
    for (int x = s; !seen[x]; x = p.aut.tau[x]) {
      seen[x] = true;
      orb.push_back(x);
    }
    std::sort(orb.begin(), orb.end());
    p.orbits.push_back(orb);
  }
  p.n0 = 0;
  for (const auto& o : p.orbits) {
    p.sizes.push_back(Int(static_cast<unsigned long>(o.size())));
    for (int x : o)
      if (d.comarks[x] != d.comarks[o[0]]) throw InternalInconsistency("comarks not constant on an orbit");
    p.g_bar.push_back(p.sizes.back() * d.comarks[o[0]]);
    p.n0 = gcd(p.n0, p.g_bar.back());
  }
  p.r_c = static_cast<int>(p.orbits.size()) - 1;
  return p;
}

struct LatticeProfile {
  std::vector<IntVec> basis;  // orbit coroot sums, coroot coordinates
  RatMatrix gram;
  Rat det;
  IntMatrix action;           // w_c on coroot coordinates (columns are images)
  std::vector<IntVec> kernel_basis;  // independent basis of the invariants
  std::size_t coinv_free_rank = 0;
  IntVec coinv_torsion;
  Int torsion_order;
  Int covering_degree;  // index of the image of the invariants in the free coinvariants
  IntVec free_relation;  // g_bar / n0, the relation on e_bar
};

inline LatticeProfile lattice_profile(const RootDatum& d, const OrbitProfile& o) {
  const int r = d.rank;
  LatticeProfile L;
  for (const auto& orb : o.orbits) {
    if (orb[0] == 0) continue;
    IntVec v(r, Int(0));
    for (int node : orb) {
      Root c = d.node_coroot(node);
      for (int i = 0; i < r; ++i) v[i] += c[i];
    }
    L.basis.push_back(v);
  }
  std::vector<RatVec> rb;
  for (const auto& v : L.basis) rb.emplace_back(v.begin(), v.end());
  L.gram = gram(d.I0, rb);
  L.det = determinant(L.gram);

  L.action.assign(r, IntVec(r, Int(0)));
  for (int j = 0; j < r; ++j) {
    Root img = d.node_coroot(o.aut.tau[j + 1]);
    for (int i = 0; i < r; ++i) L.action[i][j] = img[i];
  }
  IntMatrix pm = L.action, ip = L.action;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      pm[i][j] -= (i == j ? 1 : 0);
      ip[i][j] = (i == j ? 1 : 0) - L.action[i][j];
    }
  L.kernel_basis = integer_kernel(pm, r);

  SmithForm s = smith_normal_form(ip, r);
  IntVec diag = s.diagonal();
  std::vector<std::size_t> free_rows;
  for (int i = 0; i < r; ++i) {
    Int di = i < static_cast<int>(diag.size()) ? diag[i] : Int(0);
    if (di == 0) {
      ++L.coinv_free_rank;
      free_rows.push_back(i);
    } else if (di != 1) {
      L.coinv_torsion.push_back(di);
    }
  }
  L.torsion_order = product_of(L.coinv_torsion);
  // Image of the invariant basis in the free part of the coinvariants.
  RatMatrix img(free_rows.size(), RatVec(L.basis.size()));
  for (std::size_t a = 0; a < free_rows.size(); ++a)
    for (std::size_t b = 0; b < L.basis.size(); ++b) {
      Int t = 0;
      for (int j = 0; j < r; ++j) t += s.U[free_rows[a]][j] * L.basis[b][j];
      img[a][b] = t;
    }
  L.covering_degree = abs(to_int(determinant(img), "covering degree"));
  for (const Int& g : o.g_bar) L.free_relation.push_back(g / o.n0);
  return L;
}

struct FixedSimplex {
  std::vector<RatVec> vertices;  // orbit barycenters of alcove vertices
  Rat ratio_squared;             // vol(T_0)^2 / vol(A^c)^2
  Rat expected_squared;          // ((r_c)! prod g det)^2
};

inline FixedSimplex alcove_fixed_simplex(const RootDatum& d, const OrbitProfile& o, const LatticeProfile& L) {
  FixedSimplex f;
  auto verts = alcove_vertices(d);
  for (const auto& orb : o.orbits) {
    RatVec b(d.rank, Rat(0));
    for (int node : orb)
      for (int i = 0; i < d.rank; ++i) b[i] += verts[node][i];
    for (auto& x : b) x /= static_cast<long>(orb.size());
    f.vertices.push_back(b);
  }
  std::vector<RatVec> edges;
  for (std::size_t i = 1; i < f.vertices.size(); ++i) {
    RatVec e = f.vertices[i];
    for (int k = 0; k < d.rank; ++k) e[k] -= f.vertices[0][k];
    edges.push_back(e);
  }
  Rat edge_det = determinant(gram(d.I0, edges));
  Rat fact = factorial(o.r_c);
  f.ratio_squared = L.det * fact * fact / edge_det;
  Int prod = 1;
  for (std::size_t i = 0; i < o.orbits.size(); ++i) prod *= o.comark_of_orbit(d, i);
  Rat e = fact * prod * L.det;
  f.expected_squared = e * e;
  return f;
}

inline Int pairing_degree(const RootDatum& d, const OrbitProfile& o, const LatticeProfile& L) {
  (void)d;
  Rat e = Rat(factorial(o.r_c)) * L.det / o.n0 * product_of(o.g_bar);
  return to_int(e, "pairing degree");
}

/// w_alpha(c) mod 1 and its order.
inline Rat varpi_of_center(const CenterElement& c, int alpha) { return frac(c.coweight.at(alpha - 1)); }

inline Int o_c_alpha(const CenterElement& c, int alpha) { return order_mod_one(varpi_of_center(c, alpha)); }

/// Order of the image of <w_alpha^vee> in Z/<c>.
inline Int n_c_alpha(const RootDatum& d, const CenterGroup& z, const CenterElement& c, int alpha) {
  IntVec x = z.class_of(d, d.fund_coweights[alpha - 1]);
  Int na = z.order_of(x);
  std::vector<IntVec> sub;
  for (Int t = 0; t < c.order; ++t) sub.push_back(z.scale(c.cls, t));
  for (Int m = 1; m <= na; ++m)
    if (std::find(sub.begin(), sub.end(), z.scale(x, m)) != sub.end()) return m;
  throw InternalInconsistency("n_c_alpha: no multiple lands in <c>");
}

struct CSpecialCertificate {
  int alpha = 0;
  Int o_c_alpha;
  Rat varpi_c;  // w_alpha(c) mod 1
  Int d1;
  int rc_plus_1 = 0;
  bool order_ok = false, congruence_ok = false, d1_ok = false;
  bool is_c_special() const { return order_ok && congruence_ok && d1_ok; }
};

/// Certificates for every simple root; c-special ones have all flags set.
inline std::vector<CSpecialCertificate> c_special_certificates(const RootDatum& d, const OrbitProfile& o,
                                                               const std::vector<ParabolicProfile>& profiles) {
  std::vector<CSpecialCertificate> out;
  for (int a = 1; a <= d.rank; ++a) {
    CSpecialCertificate cert;
    cert.alpha = a;
    cert.o_c_alpha = o_c_alpha(o.c, a);
    cert.varpi_c = varpi_of_center(o.c, a);
    cert.d1 = profiles[a - 1].d1;
    cert.rc_plus_1 = o.r_c + 1;
    cert.order_ok = cert.o_c_alpha == o.c.order;
    cert.congruence_ok = frac(cert.varpi_c + Rat(1) / o.c.order) == 0;
    cert.d1_ok = cert.d1 == o.c.order * cert.rc_plus_1;
    out.push_back(cert);
  }
  return out;
}

inline std::vector<int> c_special_roots(const RootDatum& d, const OrbitProfile& o,
                                        const std::vector<ParabolicProfile>& profiles) {
  std::vector<int> out;
  for (const auto& cert : c_special_certificates(d, o, profiles))
    if (cert.is_c_special()) out.push_back(cert.alpha);
  return out;
}

inline std::vector<ParabolicProfile> all_parabolic_profiles(const RootDatum& d) {
  std::vector<ParabolicProfile> out;
  for (int a = 1; a <= d.rank; ++a) out.push_back(parabolic_profile(d, a));
  return out;
}

/// Affine Cartan integers n(beta, gamma) on the extended diagram.
inline std::vector<std::vector<int>> affine_cartan(const RootDatum& d) {
  const int r = d.rank;
  std::vector<std::vector<int>> a(r + 1, std::vector<int>(r + 1));
  for (int i = 0; i <= r; ++i) {
    Root b = d.node_root(i);
    for (int j = 0; j <= r; ++j) {
      Root c = d.node_coroot(j);
      int s = 0;
      for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) s += b[x] * d.cartan[x][y] * c[y];
      a[i][j] = s;
    }
  }
  return a;
}

/// Identities of tau_c, the orbit integers and the lattices for one c.
inline Checks center_checks(const RootDatum& d, const CenterGroup& z, const OrbitProfile& o, const LatticeProfile& L,
                            const FixedSimplex& f) {
  Checks out;
  const auto& tau = o.aut.tau;
  const int r = d.rank;
  {
    auto a = affine_cartan(d);
    bool ok = true;
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j)
        if (a[tau[i]][tau[j]] != a[i][j]) ok = false;
    out.push_back(make_bool_check("tau-cartan", "n(tau b, tau g) = n(b, g) on the extended diagram", ok));
    bool mk = true;
    for (int i = 0; i <= r; ++i)
      if (d.marks[tau[i]] != d.marks[i] || d.comarks[tau[i]] != d.comarks[i]) mk = false;
    out.push_back(make_bool_check("tau-marks", "tau preserves marks and comarks", mk));
    out.push_back(make_check("tau-alpha0", "tau(alpha_0) is the mark-1 node of c", std::to_string(tau[0]),
                             std::to_string(o.c.node)));
    int ord = 1;
    for (std::vector<int> p = tau;; ++ord) {
      bool id = true;
      for (int i = 0; i <= r; ++i) id = id && p[i] == i;
      if (id) break;
      for (int i = 0; i <= r; ++i) p[i] = tau[p[i]];
    }
    out.push_back(make_check("tau-order", "order of tau = o(c)", std::to_string(ord), to_string(o.c.order)));
    if (d.type.family == Family::A && o.c.index != 0) {
      bool fpf = true;
      for (int i = 0; i <= r; ++i) fpf = fpf && tau[i] != i;
      out.push_back(make_bool_check("tau-fixed-point-free", "tau_c has no fixed node in type A", fpf));
    }
    // Linear part permutes the simple coroots, alpha_0^vee included.
    bool lin = true;
    for (int j = 0; j <= r; ++j) {
      Root c = d.node_coroot(j);
      RationalVector x = apply_word(d, o.aut.linear_word, {RatVec(c.begin(), c.end()), Basis::SimpleCoroot});
      Root t = d.node_coroot(tau[j]);
      if (x.coords != RatVec(t.begin(), t.end())) lin = false;
    }
    out.push_back(make_bool_check("tau-linear", "w_c alpha^vee = (tau alpha)^vee for all extended nodes", lin));
  }
  {
    Int sum = 0;
    bool div = true;
    for (const Int& g : o.g_bar) {
      sum += g;
      div = div && g % o.n0 == 0;
    }
    out.push_back(make_check("orbit-sum", "sum of g_bar = g", to_string(sum), to_string(d.dual_coxeter)));
    out.push_back(make_check("orbit-count", "r_c + 1 = number of orbits", std::to_string(o.r_c + 1),
                             std::to_string(o.orbits.size())));
  }
  {
    out.push_back(make_check("lattice-rank", "rank of invariant lattice = r_c",
                             std::to_string(L.kernel_basis.size()) + "," + std::to_string(L.coinv_free_rank),
                             std::to_string(o.r_c) + "," + std::to_string(o.r_c)));
    // Orbit sums are invariant and span the same lattice as the kernel basis.
    bool inv = true;
    for (const auto& v : L.basis)
      for (int i = 0; i < r; ++i) {
        Int s = 0;
        for (int j = 0; j < r; ++j) s += L.action[i][j] * v[j];
        inv = inv && s == v[i];
      }
    std::vector<RatVec> b1, b2;
    for (const auto& v : L.basis) b1.emplace_back(v.begin(), v.end());
    for (const auto& v : L.kernel_basis) b2.emplace_back(v.begin(), v.end());
    RatMatrix eye(r, RatVec(r, Rat(0)));
    for (int i = 0; i < r; ++i) eye[i][i] = 1;
    bool same = b1.size() == b2.size() && determinant(gram(eye, b1)) == determinant(gram(eye, b2));
    out.push_back(make_bool_check("lattice-basis", "orbit coroot sums form an integral basis of the invariants",
                                  inv && same));
    out.push_back(make_check("torsion", "|Tor of coinvariants| = n0", to_string(L.torsion_order), to_string(o.n0)));
    bool cyc = L.coinv_torsion.size() <= 1;
    out.push_back(make_bool_check("torsion-cyclic", "Tor of coinvariants is cyclic", cyc));
    IntMatrix rel(L.free_relation.size(), IntVec(1));
    for (std::size_t i = 0; i < L.free_relation.size(); ++i) rel[i][0] = L.free_relation[i];
    Cokernel q = cokernel(rel, 1);
    out.push_back(make_check("free-relation", "free quotient: orbits modulo sum (g_bar/n0) e_bar is free of rank r_c",
                             std::to_string(q.free_rank) + "," + to_string(q.torsion_order()),
                             std::to_string(o.r_c) + ",1"));
    Int cov = product_of(o.sizes) / o.n0;
    out.push_back(make_check("covering", "degree of T_0 -> T_{w_c} = prod n_bar / n0", to_string(L.covering_degree),
                             to_string(cov)));
  }
  {
    out.push_back(make_check("simplex-volume", "vol(T_0)^2/vol(A^c)^2 = ((r_c)! prod g det)^2",
                             to_string(f.ratio_squared), to_string(f.expected_squared)));
  }
  {
    bool ok = true;
    std::string wit;
    for (int a = 1; a <= r; ++a) {
      Int na = z.order_of(z.class_of(d, d.fund_coweights[a - 1]));
      Int nca = n_c_alpha(d, z, o.c, a);
      // |<w_a^vee> cap <c>|
      Int inter = 0;
      IntVec x = z.class_of(d, d.fund_coweights[a - 1]);
      for (Int m = 0; m < na; ++m) {
        IntVec y = z.scale(x, m);
        for (Int t = 0; t < o.c.order; ++t)
          if (z.scale(o.c.cls, t) == y) {
            ++inter;
            break;
          }
      }
      if (na / nca != inter) ok = false, wit = "alpha=" + std::to_string(a);
    }
    out.push_back(make_bool_check("ncalpha", "n_alpha / n_{c,alpha} = |<w_alpha^vee> cap <c>|", ok, wit));
  }
  return out;
}

}  // namespace wpsm
