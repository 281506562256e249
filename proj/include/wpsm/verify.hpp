#pragma once
/**
 * @file verify.hpp
 * The verification sweep: every identity of the library evaluated over a
 * set of root systems and center elements, merged into one ordered report.
 */

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "wpsm/center.hpp"
#include "wpsm/farey.hpp"
#include "wpsm/moduli.hpp"
#include "wpsm/parabolic.hpp"
#include "wpsm/rootsys.hpp"

namespace wpsm {

enum class Status { Pass, Fail, Skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "skip";
  }
}

struct ClaimRecord {
  std::string id;
  std::string anchor;
  SimpleType type;
  int center = 0;
  int alpha = 0;  // 0 when the claim is not attached to a simple root
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string lhs, rhs, lhs_expr;
  Status status = Status::Pass;
  std::string witness;

  bool pass() const { return status == Status::Pass; }
};

/// AllElements sweeps every element of Z, Generators only the trivial
/// element and those generating Z.
enum class CenterPolicy { TrivialOnly, AllElements, Generators, Explicit };

struct SweepConfig {
  std::vector<Family> families;  // empty means all
  int max_rank = 12;             // bound for the classical families
  std::vector<SimpleType> types; // explicit list, overrides families/max_rank
  CenterPolicy center_policy = CenterPolicy::AllElements;
  int center_index = 0;
  int jobs = 1;
  bool fail_fast = false;
  bool inject_comark_fault = false;  // test hook

  std::vector<SimpleType> resolved_types() const {
    if (!types.empty()) return types;
    std::vector<Family> fams = families;
    if (fams.empty()) fams = {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G};
    std::sort(fams.begin(), fams.end());
    std::vector<SimpleType> out;
    for (Family f : fams) {
      switch (f) {
        case Family::A: for (int r = 1; r <= max_rank; ++r) out.push_back({f, r}); break;
        case Family::B:
        case Family::C: for (int r = 2; r <= max_rank; ++r) out.push_back({f, r}); break;
        case Family::D: for (int r = 3; r <= max_rank; ++r) out.push_back({f, r}); break;
        case Family::E: for (int r = 6; r <= 8; ++r) out.push_back({f, r}); break;
        case Family::F: out.push_back({f, 4}); break;
        case Family::G: out.push_back({f, 2}); break;
      }
    }
    return out;
  }

  void validate() const {
    if (jobs < 1) throw ConstructionError("jobs must be >= 1");
    if (types.empty() && max_rank < 1) throw ConstructionError("max rank must be >= 1");
    for (const auto& t : types) validate_type(t);
  }
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [s](const ClaimRecord& c) { return c.status == s; }));
  }
  bool pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.pass(); });
  }
  const ClaimRecord* find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return &c;
    return nullptr;
  }
  const ClaimRecord* first_failure() const {
    for (const auto& c : claims)
      if (!c.pass()) return &c;
    return nullptr;
  }
};

// ---- census expectations from the classification ----

inline std::vector<int> expected_special_roots(const SimpleType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = i + 1;
      return v;
    }
    case Family::B: return {n - 1};
    case Family::C: return {n};
    case Family::D: return n == 3 ? std::vector<int>{1, 2, 3} : std::vector<int>{n - 2};
    case Family::E: return {4};
    case Family::F: return {2};
    case Family::G: return {2};
  }
  return {};
}

/// Census check for c-special roots against the classification of cases.
/// Returns (pass, description of the expectation).
inline std::pair<bool, std::string> c_special_census(const GroupData& g, const std::vector<int>& found) {
  const RootDatum& d = *g.d;
  const int n = d.rank;
  const CenterElement& c = g.c();
  const long f = c.order.get_si();
  auto eq = [&](std::vector<int> v) {
    return std::make_pair(found == v, "{" + join_values(v) + "}");
  };
  auto one_of = [&](std::vector<int> v) {
    bool ok = found.size() == 1 && std::find(v.begin(), v.end(), found[0]) != v.end();
    return std::make_pair(ok, "one of {" + join_values(v) + "}");
  };
  if (c.index == 0) return eq(expected_special_roots(d.type));
  bool type_a = d.type.family == Family::A || (d.type.family == Family::D && n == 3);
  if (type_a) {
    long nn = n + 1;
    bool ok = static_cast<long>(found.size()) == nn / f;
    // In A-type labels coprimality refers to the chain position.
    if (d.type.family == Family::A)
      for (int k : found) ok = ok && std::gcd(static_cast<long>(k), f) == 1;
    return {ok, std::to_string(nn / f) + " roots"};
  }
  switch (d.type.family) {
    case Family::B: return eq({n});
    case Family::C: return eq({n % 2 ? n : n - 1});
    case Family::D:
      if (c.node == 1) return eq({n - 1, n});
      if (n % 2) return one_of({n - 1, n});
      if (n == 4) return eq(c.node == 3 ? std::vector<int>{1, 4} : std::vector<int>{1, 3});
      return eq({n - 3});
    case Family::E:
      if (n == 6) return one_of({3, 5});
      return eq({5});
    default: return {found.empty(), "none"};
  }
}

namespace detail {

struct TypeData {
  RootDatum d;
  CenterGroup z;
  std::vector<ParabolicProfile> profiles;
};

inline ClaimRecord to_record(const Check& c, const SimpleType& t, int center, int alpha, const std::string& key) {
  ClaimRecord r;
  r.id = c.tag + "/" + key + (alpha ? "/a" + std::to_string(alpha) : "");
  r.anchor = c.anchor;
  r.type = t;
  r.center = center;
  r.alpha = alpha;
  r.lhs = c.lhs;
  r.rhs = c.rhs;
  r.lhs_expr = c.lhs_expr;
  r.status = c.pass ? Status::Pass : Status::Fail;
  r.witness = c.witness;
  if (alpha) r.params["alpha"] = alpha;
  return r;
}

inline std::string base_key(const SimpleType& t, const CenterGroup& z, int center) {
  return t.name() + "-" + z.key_suffix(center);
}

/// Claims that depend only on the root system.
inline void type_claims(const TypeData& td, std::vector<ClaimRecord>& out) {
  const RootDatum& d = td.d;
  const std::string key = d.type.name() + "-sc";
  auto push = [&](const Check& c, int alpha = 0) { out.push_back(to_record(c, d.type, 0, alpha, key)); };
  for (const Check& c : rootsys_checks(d)) push(c);
  if (d.d3_as_a3) out.back().params["d3_as_a3"] = true;
  {
    auto sp = special_roots(d);
    push(make_check("special-census", "special roots located by diagram shape", join_values(sp),
                    join_values(expected_special_roots(d.type))));
  }
  {
    // d(k) = #{beta in extended diagram : k | g_beta} is circular for N = max g, M = g
    Int nmax = *std::max_element(d.comarks.begin(), d.comarks.end());
    long nn = nmax.get_si();
    IntVec dk(nn, Int(0));
    for (long k = 1; k <= nn; ++k)
      for (const Int& gb : d.comarks)
        if (gb % k == 0) dk[k - 1] += 1;
    auto s = is_circularly_symmetric(dk, nn, d.dual_coxeter);
    push(make_bool_check("comark-circular", "d(k) from comarks is circular for N = max g_beta, M = g", s.symmetric,
                         "pair " + std::to_string(s.x) + "," + std::to_string(s.y)));
  }
  push(minimality_scan(d, td.profiles));
  {
    Int zorder = td.z.order();
    push(make_check("center-order", "|P^vee/Q^vee| = 1 + #{mark-1 simple nodes}", to_string(zorder),
                    std::to_string(td.z.elements.size())));
    bool hom = true;
    std::vector<OrbitProfile> ops;
    for (const auto& e : td.z.elements) ops.push_back(orbit_data(d, e));
    for (const auto& a : td.z.elements)
      for (const auto& b : td.z.elements) {
        const CenterElement& s = td.z.find(td.z.add(a.cls, b.cls));
        for (int i = 0; i <= d.rank; ++i)
          if (ops[s.index].aut.tau[i] != ops[a.index].aut.tau[ops[b.index].aut.tau[i]]) hom = false;
      }
    push(make_bool_check("tau-homomorphism", "c -> tau_c is a homomorphism", hom));
  }
  for (const ParabolicProfile& p : td.profiles) {
    for (const Check& c : parabolic_checks(d, p)) push(c, p.alpha);
    Int m = Int(p.h_alpha) * d.dual_coxeter / p.g_alpha;
    auto s = is_circularly_symmetric(p.d_seq, p.h_alpha, m);
    Check cc = make_bool_check("circular", "d_x + d_y = 2M/(xy) on consecutive Farey pairs, N = h_alpha, M = g h_alpha/g_alpha",
                               s.symmetric, "pair " + std::to_string(s.x) + "," + std::to_string(s.y));
    push(cc, p.alpha);
    auto comp = circular_complete(p.d1, p.h_alpha, m);
    push(make_check("circdetermines", "d_1 and circular symmetry determine d_k",
                    comp ? join_values(*comp) : std::string("none"), join_values(p.d_seq)),
         p.alpha);
    Int na = td.z.order_of(td.z.class_of(d, d.fund_coweights[p.alpha - 1]));
    push(make_check("nalpha", "n_alpha = order of w_alpha^vee in P^vee/Q^vee", to_string(p.n_alpha), to_string(na)),
         p.alpha);
    out.back().params["d_seq"] = join_values(p.d_seq);
  }
}

/// Claims for one center element.
inline void center_claims(const TypeData& td, int center, std::vector<ClaimRecord>& out) {
  const RootDatum& d = td.d;
  const CenterGroup& z = td.z;
  GroupData g = group_data(d, z, td.profiles, z.at(center));
  const std::string key = group_key(g);
  auto push = [&](const Check& c, int alpha = 0) {
    out.push_back(to_record(c, d.type, center, alpha, key));
    out.back().params["generator"] = g.c_generates_center();
  };
  FixedSimplex fs = alcove_fixed_simplex(d, g.orbits, g.lattice);
  for (const Check& c : center_checks(d, z, g.orbits, g.lattice, fs)) push(c);
  out.back().params["orbit_integers"] = join_values(g.orbits.g_bar);
  Int e = pairing_degree(d, g.orbits, g.lattice);
  if (center == 0 && d.rank <= 4) {
    push(make_check("degree-weyl", "(r)! det(I0) prod g / n0 = |W| by reflection enumeration", to_string(e),
                    to_string(weyl_group_order_bruteforce(d))));
  }
  if (center == 0 && d.type.family != Family::B && d.type.family != Family::C && d.type.family != Family::F &&
      d.type.family != Family::G) {
    push(make_check("det-center", "det(I0 on the coroot lattice) = |Z| for simply laced types", to_string(g.lattice.det),
                    to_string(z.order())));
  }
  auto certs = c_special_certificates(d, g.orbits, td.profiles);
  std::vector<int> cs;
  for (const auto& c : certs)
    if (c.is_c_special()) cs.push_back(c.alpha);
  {
    auto [ok, expect] = c_special_census(g, cs);
    Check c = make_bool_check("cspecial-census", "c-special roots match the case list", ok,
                              "found {" + join_values(cs) + "}");
    c.lhs = "{" + join_values(cs) + "}";
    c.rhs = expect;
    push(c);
  }
  if (cs.empty()) {
    push(make_bool_check("cthm", "d1/o = r_c+1", false, "no c-special root"));
    return;
  }
  {
    const auto& first = certs[cs[0] - 1];
    Rat q = make_rat(first.d1, g.c().order);
    bool ok = true;
    for (int a : cs) ok = ok && make_rat(certs[a - 1].d1, g.c().order) == Rat(g.orbits.r_c + 1);
    Check c = make_check("cthm", "d1/o = r_c+1", to_string(q), std::to_string(g.orbits.r_c + 1));
    c.pass = c.pass && ok;
    c.lhs_expr = to_string(first.d1) + "/" + to_string(g.c().order);
    push(c);
    out.back().params["alpha"] = cs;
    out.back().params["d1"] = first.d1.get_si();
    out.back().params["o"] = g.c().order.get_si();
  }
  for (int a : cs) {
    WpsProfile w = wps_profile(g, a);
    for (const Check& c : moduli_checks(g, w)) push(c, a);
    out.back().params["weights"] = join_values(w.sorted_weights());
    out.back().params["moduli_weights"] = join_values(w.sorted_moduli_weights());
  }
  push(degree_consistency(g));
}

inline std::vector<ClaimRecord> run_task(const TypeData& td, int center) {
  std::vector<ClaimRecord> out;
  try {
    if (center == 0) type_claims(td, out);
    center_claims(td, center, out);
  } catch (const std::exception& e) {
    ClaimRecord r;
    r.id = "internal/" + base_key(td.d.type, td.z, center);
    r.anchor = "computation completes without an internal error";
    r.type = td.d.type;
    r.center = center;
    r.lhs = "error";
    r.rhs = "ok";
    r.status = Status::Fail;
    r.witness = e.what();
    out.push_back(r);
  }
  // emission order within (center, alpha) keeps root-datum checks ahead of what depends on them
  std::stable_sort(out.begin(), out.end(), [](const ClaimRecord& a, const ClaimRecord& b) {
    return std::tie(a.center, a.alpha) < std::tie(b.center, b.alpha);
  });
  return out;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  int t = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  for (int k = 1; k < t; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline VerificationReport run_verification(const SweepConfig& cfg) {
  cfg.validate();
  auto types = cfg.resolved_types();
  std::vector<std::unique_ptr<detail::TypeData>> data(types.size());
  detail::parallel_for(types.size(), cfg.jobs, [&](std::size_t i) {
    auto td = std::make_unique<detail::TypeData>();
    td->d = build_root_system(types[i]);
    if (cfg.inject_comark_fault) td->d = with_corrupted_comark(td->d, 1, 1);
    td->z = center_group(td->d);
    td->profiles = all_parabolic_profiles(td->d);
    data[i] = std::move(td);
  });

  struct Task {
    std::size_t type;
    int center;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& z = data[i]->z;
    switch (cfg.center_policy) {
      case CenterPolicy::TrivialOnly: tasks.push_back({i, 0}); break;
      case CenterPolicy::AllElements:
        for (const auto& e : z.elements) tasks.push_back({i, e.index});
        break;
      case CenterPolicy::Generators:
        for (const auto& e : z.elements)
          if (e.index == 0 || z.generates(e)) tasks.push_back({i, e.index});
        break;
      case CenterPolicy::Explicit:
        z.at(cfg.center_index);
        tasks.push_back({i, cfg.center_index});
        break;
    }
  }
  std::vector<std::vector<ClaimRecord>> results(tasks.size());
  std::vector<bool> ran(tasks.size(), false);
  std::atomic<std::size_t> first_fail{tasks.size()};
  detail::parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
    if (cfg.fail_fast && i > first_fail.load()) return;
    results[i] = detail::run_task(*data[tasks[i].type], tasks[i].center);
    ran[i] = true;
    bool failed = std::any_of(results[i].begin(), results[i].end(), [](const ClaimRecord& c) { return !c.pass(); });
    if (failed) {
      std::size_t cur = first_fail.load();
      while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
      }
    }
  });

  VerificationReport rep;
  const std::size_t stop = cfg.fail_fast ? first_fail.load() : tasks.size();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (i > stop) {
      const auto& td = *data[tasks[i].type];
      ClaimRecord r;
      r.id = "skipped/" + detail::base_key(td.d.type, td.z, tasks[i].center);
      r.anchor = "not evaluated after an earlier failure (fail-fast)";
      r.type = td.d.type;
      r.center = tasks[i].center;
      r.lhs = r.rhs = "";
      r.status = Status::Skip;
      rep.claims.push_back(r);
      continue;
    }
    for (auto& c : results[i]) rep.claims.push_back(std::move(c));
  }
  return rep;
}

// ---- serialization ----

inline nlohmann::ordered_json to_json(const ClaimRecord& c) {
  nlohmann::ordered_json j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["group"] = {{"family", std::string(1, family_char(c.type.family))}, {"rank", c.type.rank}, {"center", c.center}};
  j["params"] = c.params;
  if (!c.lhs_expr.empty()) j["params"]["lhs_expr"] = c.lhs_expr;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["pass"] = c.pass();
  j["status"] = status_name(c.status);
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

inline std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) j["claims"].push_back(to_json(c));
  j["summary"] = {{"total", r.claims.size()},
                  {"passed", r.count(Status::Pass)},
                  {"failed", r.count(Status::Fail)},
                  {"skipped", r.count(Status::Skip)}};
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

inline std::string claim_text(const ClaimRecord& c) {
  std::string s = std::string(c.status == Status::Pass ? "PASS " : c.status == Status::Fail ? "FAIL " : "SKIP ") +
                  c.id + ": " + c.anchor;
  if (c.status != Status::Skip)
    s += " → " + (c.lhs_expr.empty() ? c.lhs : c.lhs_expr) + " = " + c.rhs;
  if (!c.witness.empty()) s += "  [" + c.witness + "]";
  return s;
}

inline std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.claims) os << claim_text(c) << "\n";
  os << "summary: " << r.claims.size() << " claims, " << r.count(Status::Pass) << " passed, "
     << r.count(Status::Fail) << " failed, " << r.count(Status::Skip) << " skipped\n";
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline std::string report_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "id,anchor,family,rank,center,alpha,lhs,rhs,status,witness\n";
  auto flat = [](std::string s) {
    // multisets are written semicolon-joined in CSV
    std::replace(s.begin(), s.end(), ',', ';');
    return s;
  };
  for (const auto& c : r.claims) {
    os << csv_field(c.id) << "," << csv_field(c.anchor) << "," << family_char(c.type.family) << "," << c.type.rank
       << "," << c.center << "," << c.alpha << "," << csv_field(flat(c.lhs)) << "," << csv_field(flat(c.rhs)) << ","
       << status_name(c.status) << "," << csv_field(c.witness) << "\n";
  }
  return os.str();
}

}  // namespace wpsm
