#pragma once
/**
 * @file rootsys.hpp
 * Simple root systems of every type with exact arithmetic.
 *
 * Conventions. Simple roots carry Bourbaki labels 1..r; label 0 is the
 * affine node alpha_0 = -(highest root). Arrays indexed by simple roots use
 * position label-1, arrays over the extended diagram use the label itself.
 * cartan[i][j] = n(alpha_i, alpha_j) = alpha_i(alpha_j^vee). Weights are
 * stored in simple-root coordinates, coweights in simple-coroot coordinates,
 * and the pairing of b with c is b^T cartan c. Long roots have squared
 * length 2 under I_0.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "wpsm/arith.hpp"
#include "wpsm/check.hpp"
#include "wpsm/errors.hpp"

namespace wpsm {

enum class Family { A, B, C, D, E, F, G };

inline char family_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw ConstructionError("unknown family '" + s + "' (expected one of A,B,C,D,E,F,G)");
}

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(1, family_char(family)) + std::to_string(rank); }
  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;
};

/// Throws ConstructionError naming the violated rank bound.
inline void validate_type(const SimpleType& t) {
  const int r = t.rank;
  auto fail = [&](const std::string& rule) {
    throw ConstructionError("invalid root system " + t.name() + ": " + rule);
  };
  switch (t.family) {
    case Family::A: if (r < 1) fail("type A needs rank >= 1"); break;
    case Family::B: if (r < 2) fail("type B needs rank >= 2"); break;
    case Family::C: if (r < 2) fail("type C needs rank >= 2"); break;
    case Family::D: if (r < 3) fail("type D needs rank >= 3"); break;
    case Family::E: if (r < 6 || r > 8) fail("type E needs rank 6, 7 or 8"); break;
    case Family::F: if (r != 4) fail("type F needs rank 4"); break;
    case Family::G: if (r != 2) fail("type G needs rank 2"); break;
  }
}

enum class Basis { SimpleRoot, SimpleCoroot, FundamentalWeight, FundamentalCoweight };

inline bool is_weight_basis(Basis b) { return b == Basis::SimpleRoot || b == Basis::FundamentalWeight; }

struct RationalVector {
  RatVec coords;
  Basis basis = Basis::SimpleRoot;
  bool operator==(const RationalVector&) const = default;
};

/// Integer coordinates in the simple-root (or simple-coroot) basis. Entries
/// are bounded by the largest mark, so machine ints are plenty.
using Root = std::vector<int>;

struct RootDatum {
  SimpleType type;
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> adjacency;  // Dynkin neighbours, 0-based
  RatVec len2;                               // <alpha_i, alpha_i>, long = 2
  std::vector<Root> roots;                   // positives by height, then negatives
  std::vector<Root> coroots;                 // coroots[k] is the coroot of roots[k]
  std::size_t num_positive = 0;
  Root highest_root, highest_coroot;
  IntVec marks, comarks;  // size r+1, index 0 is alpha_0
  Int coxeter, dual_coxeter;
  IntMatrix Q;       // sum over roots of products of pairings, coroot basis
  RatMatrix I0;      // Q scaled so that I0(highest coroot) = 2
  RatMatrix cartan_inv;
  std::vector<RatVec> fund_weights;    // root coordinates
  std::vector<RatVec> fund_coweights;  // coroot coordinates
  RatVec rho;                          // root coordinates
  RatVec rho_vee;                      // coroot coordinates
  bool d3_as_a3 = false;
  std::map<Root, std::size_t> root_index;

  std::size_t size() const { return roots.size(); }
  bool is_root(const Root& b) const { return root_index.count(b) != 0; }

  /// beta(alpha_j^vee) for beta in root coordinates, j 0-based.
  template <class V>
  auto pair_coroot(const V& b, int j) const {
    std::decay_t<decltype(b[0])> s = 0;
    for (int k = 0; k < rank; ++k) s += b[k] * cartan[k][j];
    return s;
  }
  /// alpha_j(c) for c in coroot coordinates, j 0-based.
  template <class V>
  auto pair_root(const V& c, int j) const {
    std::decay_t<decltype(c[0])> s = 0;
    for (int k = 0; k < rank; ++k) s += cartan[j][k] * c[k];
    return s;
  }
  /// General pairing of a weight (root coordinates) with a coweight.
  Rat pairing(const RatVec& weight, const RatVec& coweight) const {
    Rat s = 0;
    for (int i = 0; i < rank; ++i) {
      if (weight[i] == 0) continue;
      for (int j = 0; j < rank; ++j) s += weight[i] * cartan[i][j] * coweight[j];
    }
    return s;
  }
  /// Symmetric form on V normalized by I_0 (long roots length 2).
  Rat form(const Root& a, const Root& b) const {
    Rat s = 0;
    for (int i = 0; i < rank; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank; ++j)
        if (b[j] != 0) s += Rat(a[i] * b[j] * cartan[i][j]) * len2[j] / 2;
    }
    return s;
  }
  Rat root_len2(const Root& b) const { return form(b, b); }

  /// Coroot of a root, in coroot coordinates.
  Root coroot_of(const Root& b) const {
    Rat l = root_len2(b);
    Root c(rank);
    for (int i = 0; i < rank; ++i) c[i] = static_cast<int>(to_int(Rat(b[i]) * len2[i] / l, "coroot").get_si());
    return c;
  }
  /// Root / coroot of an extended-diagram node (0 = alpha_0).
  Root node_root(int node) const {
    if (node == 0) {
      Root r = highest_root;
      for (int& x : r) x = -x;
      return r;
    }
    Root e(rank, 0);
    e[node - 1] = 1;
    return e;
  }
  Root node_coroot(int node) const { return coroot_of(node_root(node)); }

  bool is_long_simple(int label) const { return len2[label - 1] == 2; }

  static int height(const Root& b) { return std::accumulate(b.begin(), b.end(), 0); }
};

namespace detail {

struct Diagram {
  std::vector<int> len;  // relative squared lengths (1, 2 or 3)
  std::vector<std::pair<int, int>> edges;  // 0-based
};

inline Diagram bourbaki_diagram(const SimpleType& t) {
  const int n = t.rank;
  Diagram d;
  d.len.assign(n, 1);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.push_back({i, i + 1});
  };
  switch (t.family) {
    case Family::A: chain(n); break;
    case Family::B: chain(n); d.len.assign(n, 2); d.len[n - 1] = 1; break;
    case Family::C: chain(n); d.len[n - 1] = 2; break;
    case Family::D:
      chain(n - 1);
      d.edges.push_back({n - 3, n - 1});
      break;
    case Family::E:
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) d.edges.push_back({i, i + 1});
      break;
    case Family::F: chain(4); d.len = {2, 2, 1, 1}; break;
    case Family::G: chain(2); d.len = {1, 3}; break;
  }
  return d;
}

}  // namespace detail

/// The Cartan matrix of a type, read off its Dynkin diagram.
inline std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  validate_type(t);
  auto dg = detail::bourbaki_diagram(t);
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [i, j] : dg.edges) {
    int m = std::max(dg.len[i], dg.len[j]);
    a[i][j] = -m / dg.len[j];
    a[j][i] = -m / dg.len[i];
  }
  return a;
}

/// s_j applied to a weight in root coordinates.
template <class V>
V reflect_weight(const RootDatum& d, int j, V b) {
  auto p = d.pair_coroot(b, j);
  b[j] -= p;
  return b;
}

/// s_j applied to a coweight in coroot coordinates.
template <class V>
V reflect_coweight(const RootDatum& d, int j, V c) {
  auto p = d.pair_root(c, j);
  c[j] -= p;
  return c;
}

/// Squared lengths from symmetrizability, scaled so the longest is 2.
inline RatVec lengths_from_cartan(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  RatVec len(n, Rat(0));
  if (n == 0) return len;
  len[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (j != i && a[i][j] != 0 && len[j] == 0) {
        len[j] = len[i] * a[j][i] / a[i][j];
        stack.push_back(j);
      }
  }
  Rat mx = *std::max_element(len.begin(), len.end());
  for (auto& l : len) l = l * 2 / mx;
  return len;
}

/// All roots generated from the simple roots of a Cartan matrix by the
/// reflections s_i, iterated until a pass adds nothing.
inline std::set<Root> reflection_closure(const std::vector<std::vector<int>>& a, std::set<Root> start) {
  const int n = static_cast<int>(a.size());
  std::set<Root> all = std::move(start);
  std::vector<Root> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& b : frontier)
      for (int j = 0; j < n; ++j) {
        int p = 0;
        for (int k = 0; k < n; ++k) p += b[k] * a[k][j];
        if (p == 0) continue;
        Root s = b;
        s[j] -= p;
        if (all.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return all;
}

inline std::set<Root> simple_root_set(int n) {
  std::set<Root> s;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    s.insert(e);
  }
  return s;
}

inline RootDatum build_root_system(const SimpleType& t);

namespace detail {

inline void finalize_datum(RootDatum& d) {
  const int r = d.rank;
  // Highest root: the unique root of maximal height, dominating every root.
  d.highest_root = d.roots.front();
  for (const Root& b : d.roots)
    if (RootDatum::height(b) > RootDatum::height(d.highest_root)) d.highest_root = b;
  for (const Root& b : d.roots)
    for (int i = 0; i < r; ++i)
      if (b[i] > d.highest_root[i]) throw InternalInconsistency("highest root does not dominate " + d.type.name());
  d.highest_coroot = d.coroot_of(d.highest_root);
  d.marks.assign(r + 1, Int(1));
  d.comarks.assign(r + 1, Int(1));
  for (int i = 0; i < r; ++i) {
    d.marks[i + 1] = d.highest_root[i];
    d.comarks[i + 1] = d.highest_coroot[i];
  }
  d.coxeter = std::accumulate(d.marks.begin(), d.marks.end(), Int(0));
  d.dual_coxeter = std::accumulate(d.comarks.begin(), d.comarks.end(), Int(0));
}

}  // namespace detail

inline RootDatum build_root_system(const SimpleType& t) {
  validate_type(t);
  RootDatum d;
  d.type = t;
  d.rank = t.rank;
  d.d3_as_a3 = t.family == Family::D && t.rank == 3;
  const int r = t.rank;
  d.cartan = cartan_matrix(t);
  d.adjacency.assign(r, {});
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && d.cartan[i][j] != 0) d.adjacency[i].push_back(j);
  d.len2 = lengths_from_cartan(d.cartan);

  std::set<Root> all = reflection_closure(d.cartan, simple_root_set(r));
  std::vector<Root> pos;
  for (const Root& b : all)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  std::stable_sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    int ha = RootDatum::height(a), hb = RootDatum::height(b);
    return ha != hb ? ha < hb : a < b;
  });
  d.num_positive = pos.size();
  d.roots = pos;
  for (const Root& b : pos) {
    Root m = b;
    for (int& x : m) x = -x;
    d.roots.push_back(m);
  }
  if (d.roots.size() != all.size())
    throw InternalInconsistency("roots of " + t.name() + " are not split into positive and negative");
  for (std::size_t k = 0; k < d.roots.size(); ++k) d.root_index[d.roots[k]] = k;
  for (const Root& b : d.roots) d.coroots.push_back(d.coroot_of(b));

  detail::finalize_datum(d);

  // Q on the coroot basis, then I_0 by normalizing Q(highest coroot) to 2.
  d.Q.assign(r, IntVec(r, Int(0)));
  for (const Root& b : d.roots) {
    std::vector<int> p(r);
    for (int i = 0; i < r; ++i) p[i] = d.pair_coroot(b, i);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) d.Q[i][j] += p[i] * p[j];
  }
  RatVec hc(d.highest_coroot.begin(), d.highest_coroot.end());
  Rat qh = bilinear(to_rat(d.Q), hc, hc);
  d.I0 = to_rat(d.Q);
  for (auto& row : d.I0)
    for (auto& x : row) x = x * 2 / qh;

  RatMatrix m(r, RatVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = d.cartan[i][j];
  d.cartan_inv = inverse(m);
  d.fund_weights.assign(r, RatVec(r));
  d.fund_coweights.assign(r, RatVec(r));
  d.rho.assign(r, Rat(0));
  d.rho_vee.assign(r, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      d.fund_coweights[i][j] = d.cartan_inv[j][i];
      d.fund_weights[i][j] = d.cartan_inv[i][j];
      d.rho[j] += d.fund_weights[i][j];
      d.rho_vee[j] += d.fund_coweights[i][j];
    }
  return d;
}

/// Returns (h, g, marks, comarks).
struct CoxeterInvariants {
  Int h, g;
  IntVec marks, comarks;
};
inline CoxeterInvariants coxeter_invariants(const RootDatum& d) {
  return {d.coxeter, d.dual_coxeter, d.marks, d.comarks};
}

/// Test hook: a copy of d with one comark shifted and g recomputed, so a
/// verification run can show that the form identity catches it.
inline RootDatum with_corrupted_comark(const RootDatum& d, int node, int delta) {
  RootDatum c = d;
  c.comarks.at(node) += delta;
  c.dual_coxeter = std::accumulate(c.comarks.begin(), c.comarks.end(), Int(0));
  return c;
}

// ---- basis conversions ----

inline RationalVector convert(const RootDatum& d, const RationalVector& x, Basis target) {
  if (x.basis == target) return x;
  if (is_weight_basis(x.basis) != is_weight_basis(target))
    throw PreconditionError("convert: weights and coweights live in different spaces");
  const int r = d.rank;
  RatVec out(r, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      switch (target) {
        case Basis::FundamentalWeight: out[i] += x.coords[j] * d.cartan[j][i]; break;
        case Basis::SimpleRoot: out[i] += d.cartan_inv[j][i] * x.coords[j]; break;
        case Basis::FundamentalCoweight: out[i] += d.cartan[i][j] * x.coords[j]; break;
        case Basis::SimpleCoroot: out[i] += d.cartan_inv[i][j] * x.coords[j]; break;
      }
    }
  return {out, target};
}

/// Pairing of x with the simple coroot (weights) or simple root (coweights) j.
inline Rat simple_pairing(const RootDatum& d, const RationalVector& x, int j) {
  switch (x.basis) {
    case Basis::SimpleRoot: return d.pair_coroot(x.coords, j);
    case Basis::SimpleCoroot: return d.pair_root(x.coords, j);
    default: return x.coords[j];
  }
}

/// s_j in whatever basis x carries.
inline RationalVector reflect(const RootDatum& d, int j, RationalVector x) {
  Rat p = simple_pairing(d, x, j);
  if (p == 0) return x;
  switch (x.basis) {
    case Basis::SimpleRoot:
    case Basis::SimpleCoroot: x.coords[j] -= p; break;
    case Basis::FundamentalWeight:
      for (int k = 0; k < d.rank; ++k) x.coords[k] -= p * d.cartan[j][k];
      break;
    case Basis::FundamentalCoweight:
      for (int k = 0; k < d.rank; ++k) x.coords[k] -= p * d.cartan[k][j];
      break;
  }
  return x;
}

/// Word of 0-based simple reflections, applied left to right.
using Word = std::vector<int>;

inline RationalVector apply_word(const RootDatum& d, const Word& w, RationalVector x) {
  for (int j : w) x = reflect(d, j, x);
  return x;
}

namespace detail {
inline RationalVector sweep(const RootDatum& d, const std::vector<int>& J, RationalVector x, int sign,
                            Word* word) {
  std::vector<int> js;
  for (int label : J) {
    if (label < 1 || label > d.rank) throw RangeError("simple root label out of range");
    js.push_back(label - 1);
  }
  std::sort(js.begin(), js.end());
  for (;;) {
    int hit = -1;
    for (int j : js)
      if (sgn(simple_pairing(d, x, j)) == sign) {
        hit = j;
        break;
      }
    if (hit < 0) return x;
    x = reflect(d, hit, x);
    if (word) word->push_back(hit);
  }
}
}  // namespace detail

/// Repeatedly reflect in the smallest-index simple root of J (labels 1..r)
/// with positive pairing. The result is the W(J)-antidominant point of the
/// orbit of x. The reflections used are appended to word if given.
inline RationalVector make_antidominant_within(const RootDatum& d, const std::vector<int>& J,
                                               const RationalVector& x, Word* word = nullptr) {
  return detail::sweep(d, J, x, +1, word);
}

/// Mirror image of make_antidominant_within.
inline RationalVector make_dominant_within(const RootDatum& d, const std::vector<int>& J,
                                           const RationalVector& x, Word* word = nullptr) {
  return detail::sweep(d, J, x, -1, word);
}

inline std::vector<int> all_labels(const RootDatum& d) {
  std::vector<int> v(d.rank);
  std::iota(v.begin(), v.end(), 1);
  return v;
}
inline std::vector<int> labels_except(const RootDatum& d, int alpha) {
  std::vector<int> v;
  for (int i = 1; i <= d.rank; ++i)
    if (i != alpha) v.push_back(i);
  return v;
}

/// A reduced word for the longest element of W(J): sweep the regular
/// J-dominant coweight rho^vee to its antidominant image.
inline Word longest_word(const RootDatum& d, const std::vector<int>& J) {
  Word w;
  make_antidominant_within(d, J, {d.rho_vee, Basis::SimpleCoroot}, &w);
  return w;
}

/// Size of the W-orbit of the regular coweight 2 rho^vee, i.e. |W|, by
/// breadth-first search over simple reflections.
inline Int weyl_group_order_bruteforce(const RootDatum& d, std::size_t cap = 2000000) {
  Root start(d.rank);
  for (int i = 0; i < d.rank; ++i) start[i] = to_int(2 * d.rho_vee[i], "2 rho_vee").get_si();
  std::set<Root> seen{start};
  std::vector<Root> frontier{start};
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& c : frontier)
      for (int j = 0; j < d.rank; ++j) {
        Root s = reflect_coweight(d, j, c);
        if (seen.insert(s).second) next.push_back(s);
      }
    if (seen.size() > cap) throw RangeError("weyl_group_order_bruteforce: orbit exceeds cap");
    frontier = std::move(next);
  }
  return Int(static_cast<unsigned long>(seen.size()));
}

/// Type of a connected Cartan matrix by its diagram shape, bonds and which
/// side of a double bond is short.
inline SimpleType classify_cartan(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw PreconditionError("classify_cartan: empty matrix");
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  int multi_i = -1, multi_j = -1, mult = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != 0 || a[j][i] != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
        int m = a[i][j] * a[j][i];
        if (m > 1) {
          if (multi_i >= 0) throw PreconditionError("classify_cartan: two multiple bonds");
          multi_i = i, multi_j = j, mult = m;
        }
      }
  if (edges != n - 1) throw PreconditionError("classify_cartan: diagram is not a tree");
  {
    std::vector<bool> seen(n, false);
    std::vector<int> st{0};
    seen[0] = true;
    int cnt = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v])
        if (!seen[w]) seen[w] = true, ++cnt, st.push_back(w);
    }
    if (cnt != n) throw PreconditionError("classify_cartan: diagram is disconnected");
  }
  if (n == 1) return {Family::A, 1};
  int max_deg = 0, branch = -1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(adj[i].size()) > max_deg) max_deg = static_cast<int>(adj[i].size());
    if (adj[i].size() == 3) branch = i;
  }
  if (max_deg > 3) throw PreconditionError("classify_cartan: vertex of degree > 3");
  if (mult == 3) {
    if (n != 2) throw PreconditionError("classify_cartan: triple bond outside G2");
    return {Family::G, 2};
  }
  if (mult == 2) {
    if (max_deg > 2) throw PreconditionError("classify_cartan: double bond with a branch point");
    if (n == 2) return {Family::B, 2};
    bool i_end = adj[multi_i].size() == 1, j_end = adj[multi_j].size() == 1;
    if (!i_end && !j_end) {
      if (n == 4) return {Family::F, 4};
      throw PreconditionError("classify_cartan: interior double bond outside F4");
    }
    int end = i_end ? multi_i : multi_j, other = i_end ? multi_j : multi_i;
    // a[long][short] = -2: the end node is short iff a[other][end] = -2.
    bool end_short = a[other][end] == -2;
    return {end_short ? Family::B : Family::C, n};
  }
  if (branch < 0) return {Family::A, n};
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 0, prev = branch, cur = start;
    for (;;) {
      ++len;
      int nxt = -1;
      for (int w : adj[cur])
        if (w != prev) nxt = w;
      if (adj[cur].size() > 2) throw PreconditionError("classify_cartan: two branch points");
      if (nxt < 0) break;
      prev = cur, cur = nxt;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  throw PreconditionError("classify_cartan: not a finite-type diagram");
}

/// Connected components of a set of 0-based nodes under a Dynkin adjacency.
inline std::vector<std::vector<int>> components(const std::vector<std::vector<int>>& adjacency,
                                                const std::vector<int>& nodes) {
  std::set<int> left(nodes.begin(), nodes.end());
  std::vector<std::vector<int>> out;
  while (!left.empty()) {
    std::vector<int> comp, st{*left.begin()};
    left.erase(left.begin());
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      comp.push_back(v);
      for (int w : adjacency[v])
        if (left.erase(w)) st.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

/// Cartan submatrix on the given 0-based nodes.
inline std::vector<std::vector<int>> cartan_submatrix(const RootDatum& d, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> a(nodes.size(), std::vector<int>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) a[i][j] = d.cartan[nodes[i]][nodes[j]];
  return a;
}

/// The identities every root datum satisfies, evaluated on d.
inline Checks rootsys_checks(const RootDatum& d) {
  Checks out;
  const int r = d.rank;
  const std::string sr = std::to_string(r);
  // Q = 2g I0 on the full coroot Gram matrix.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r; ++j)
        if (Rat(d.Q[i][j]) != 2 * Rat(d.dual_coxeter) * d.I0[i][j]) {
          ok = false;
          wit = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): Q=" + to_string(d.Q[i][j]) +
                ", 2g I0=" + to_string(2 * Rat(d.dual_coxeter) * d.I0[i][j]);
          break;
        }
    Check c = make_bool_check("looform", "Q = 2g I0 on the coroot basis", ok, wit);
    c.lhs = to_string(Rat(d.Q[0][0]) / (d.I0[0][0]));
    c.rhs = to_string(2 * d.dual_coxeter);
    c.pass = ok && c.lhs == c.rhs;
    out.push_back(c);
  }
  {
    std::size_t expect = 0;
    switch (d.type.family) {
      case Family::A: expect = r * (r + 1); break;
      case Family::B:
      case Family::C: expect = 2 * r * r; break;
      case Family::D: expect = 2 * r * (r - 1); break;
      case Family::E: expect = r == 6 ? 72 : r == 7 ? 126 : 240; break;
      case Family::F: expect = 48; break;
      case Family::G: expect = 12; break;
    }
    out.push_back(make_check("root-count", "|R| from reflection closure", std::to_string(d.roots.size()),
                             std::to_string(expect)));
  }
  {
    auto again = reflection_closure(d.cartan, std::set<Root>(d.roots.begin(), d.roots.end()));
    out.push_back(make_check("closure-stable", "one more closure pass adds nothing", std::to_string(again.size()),
                             std::to_string(d.roots.size())));
    bool sym = std::all_of(d.roots.begin(), d.roots.end(), [&](const Root& b) {
      Root m = b;
      for (int& x : m) x = -x;
      return d.is_root(m);
    });
    out.push_back(make_bool_check("root-symmetric", "R = -R", sym));
  }
  {
    // n(alpha_i, alpha_j) for i != j is minus the length of the alpha_j-string
    // through alpha_i, read off the generated root set.
    bool ok = true;
    std::string wit;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        int val = 2;
        if (i != j) {
          Root b = d.node_root(i + 1);
          int p = 0;
          for (;;) {
            b[j] += 1;
            if (!d.is_root(b)) break;
            ++p;
          }
          val = -p;
        }
        if (val != d.cartan[i][j] && ok) {
          ok = false;
          wit = "n(a" + std::to_string(i + 1) + ",a" + std::to_string(j + 1) + ")";
        }
      }
    out.push_back(make_bool_check("cartan-reconstruct", "root strings reproduce the Cartan matrix", ok, wit));
  }
  {
    // sum h_b b = 0 and sum g_b b^vee = 0 over the extended diagram
    std::vector<Int> s1(r, 0), s2(r, 0);
    for (int node = 0; node <= r; ++node) {
      Root b = d.node_root(node), c = d.node_coroot(node);
      for (int i = 0; i < r; ++i) {
        s1[i] += d.marks[node] * b[i];
        s2[i] += d.comarks[node] * c[i];
      }
    }
    bool z1 = std::all_of(s1.begin(), s1.end(), [](const Int& x) { return x == 0; });
    bool z2 = std::all_of(s2.begin(), s2.end(), [](const Int& x) { return x == 0; });
    out.push_back(make_bool_check("marks-relation", "sum h_b b = 0 over extended diagram", z1));
    out.push_back(make_bool_check("comarks-relation", "sum g_b b^vee = 0 over extended diagram", z2));
  }
  {
    Int h = 0, g = 0;
    for (int node = 0; node <= r; ++node) h += d.marks[node], g += d.comarks[node];
    Check c = make_check("coxeter", "h = 1 + sum of marks, g = sum of comarks",
                         to_string(d.coxeter) + "," + to_string(d.dual_coxeter),
                         to_string(h) + "," + to_string(g));
    out.push_back(c);
  }
  {
    // g_a = h_a <a,a>/<highest,highest>, with g_a = h_a iff a long
    bool ok = true;
    std::string wit;
    Rat lh = d.root_len2(d.highest_root);
    for (int i = 0; i < r; ++i) {
      Rat expect = Rat(d.marks[i + 1]) * d.len2[i] / lh;
      bool divides = d.marks[i + 1] % d.comarks[i + 1] == 0;
      bool eq_iff_long = (d.marks[i + 1] == d.comarks[i + 1]) == (d.len2[i] == lh);
      if (Rat(d.comarks[i + 1]) != expect || !divides || !eq_iff_long) {
        ok = false;
        wit = "node " + std::to_string(i + 1);
      }
    }
    out.push_back(make_bool_check("comark-mark", "g_a = h_a <a,a>/<highest,highest>, equality iff long", ok, wit));
  }
  {
    RatVec hc(d.highest_coroot.begin(), d.highest_coroot.end());
    out.push_back(make_check("i0-normalized", "I0(highest coroot) = 2", to_string(bilinear(d.I0, hc, hc)), "2"));
    bool ok = true;
    for (const Root& b : d.roots) {
      if (d.root_len2(b) != 2) continue;
      Root bc = d.coroot_of(b);
      RatVec c(bc.begin(), bc.end());
      // for long roots the coroot has the same length as the root
      if (bilinear(d.I0, c, c) != 2) ok = false;
    }
    out.push_back(make_bool_check("long-length", "long (co)roots have I0-length 2", ok));
  }
  {
    // dual basis: I0(a^vee, g_b w_b^vee / h_b) = delta
    bool ok = true;
    for (int i = 0; i < r; ++i) {
      RatVec ai(r, Rat(0));
      ai[i] = 1;
      for (int j = 0; j < r; ++j) {
        RatVec v = d.fund_coweights[j];
        for (auto& x : v) x = x * d.comarks[j + 1] / d.marks[j + 1];
        if (bilinear(d.I0, ai, v) != (i == j ? 1 : 0)) ok = false;
      }
    }
    out.push_back(make_bool_check("dual-basis", "I0(a^vee, g_b w_b^vee/h_b) = delta", ok));
  }
  {
    bool ok = true;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (d.pair_coroot(d.fund_weights[i], j) != (i == j ? 1 : 0)) ok = false;
        if (d.pair_root(d.fund_coweights[i], j) != (i == j ? 1 : 0)) ok = false;
      }
    for (int j = 0; j < r; ++j)
      if (d.pair_coroot(d.rho, j) != 1) ok = false;
    RatVec half(r, Rat(0));
    for (std::size_t k = 0; k < d.num_positive; ++k)
      for (int i = 0; i < r; ++i) half[i] += make_rat(d.roots[k][i], 2);
    if (half != d.rho) ok = false;
    out.push_back(make_bool_check("fundamental", "w_a(b^vee) = delta, rho(b^vee) = 1, rho = half sum of R+", ok));
  }
  return out;
}

}  // namespace wpsm
