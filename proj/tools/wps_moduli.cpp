// wps-moduli: tables and the verification sweep from the command line.
//
// Exit codes: 0 ok, 1 a claim failed, 2 invalid input, 3 no c-special root.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "wpsm/verify.hpp"

using nlohmann::ordered_json;
using namespace wpsm;

namespace {

constexpr int kOk = 0, kClaimFailure = 1, kInvalidInput = 2, kNoCSpecial = 3;

struct NoCSpecial : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  int rank = 0;
  std::optional<int> center;
  std::optional<int> alpha;
  int max_rank = 12;
  bool all = false;
  std::string format = "text";
  std::string out;
  int jobs = 0;
  bool fail_fast = false;
  bool dot = false;
};

SimpleType simple_type(const Options& o) {
  if (o.type.empty()) throw ConstructionError("--type is required");
  SimpleType t{parse_family(o.type), o.rank};
  if (o.rank == 0) {
    // exceptional families have a single rank
    if (t.family == Family::F) t.rank = 4;
    else if (t.family == Family::G) t.rank = 2;
  }
  validate_type(t);
  return t;
}

/// Everything a subcommand needs about one group.
struct Context {
  RootDatum d;
  CenterGroup z;
  std::vector<ParabolicProfile> profiles;
  GroupData g;
};

std::unique_ptr<Context> make_context(const Options& o) {
  auto ctx = std::make_unique<Context>();
  ctx->d = build_root_system(simple_type(o));
  ctx->z = center_group(ctx->d);
  ctx->profiles = all_parabolic_profiles(ctx->d);
  ctx->g = group_data(ctx->d, ctx->z, ctx->profiles, ctx->z.at(o.center.value_or(0)));
  return ctx;
}

ordered_json vec_json(const IntVec& v) {
  ordered_json a = ordered_json::array();
  for (const Int& x : v) a.push_back(to_string(x));
  return a;
}
ordered_json vec_json(const RatVec& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}
ordered_json matrix_json(const RatMatrix& m) {
  ordered_json a = ordered_json::array();
  for (const auto& row : m) a.push_back(vec_json(row));
  return a;
}

std::string csv_join(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + to_string(v[i]);
  return s;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ConstructionError("cannot open " + o.out + " for writing");
  f << text;
}

/// Renders a flat key/value table in the requested format.
std::string render(const Options& o, const ordered_json& j) {
  if (o.format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  if (o.format == "csv") {
    os << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::string v = it->is_string() ? it->get<std::string>() : it->dump();
      std::replace(v.begin(), v.end(), ',', ';');
      os << it.key() << "," << csv_field(v) << "\n";
    }
    return os.str();
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    os << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  return os.str();
}

std::string center_label(const Context& c) {
  const CenterElement& e = c.g.c();
  std::string s = "c" + std::to_string(e.index) + " order " + to_string(e.order);
  if (e.index) s += " = w_" + std::to_string(e.node) + "^vee (" + join_values(e.coweight) + ")";
  return s;
}

int cmd_roots(const Options& o) {
  auto ctx = make_context(o);
  const RootDatum& d = ctx->d;
  if (o.format == "text") {
    std::ostringstream os;
    os << d.type.name() << ": |R|=" << d.roots.size() << ", h=" << d.coxeter << ", g=" << d.dual_coxeter << "\n";
    os << "marks (h_0..h_r): " << join_values(d.marks) << "\n";
    os << "comarks (g_0..g_r): " << join_values(d.comarks) << "\n";
    os << "highest root: " << join_values(d.highest_root) << "\n";
    os << "Cartan matrix:\n";
    for (const auto& row : d.cartan) os << "  " << join_values(row) << "\n";
    os << "I0 Gram on simple coroots:\n";
    for (const auto& row : d.I0) os << "  " << join_values(row) << "\n";
    emit(o, os.str());
    return kOk;
  }
  ordered_json j;
  j["type"] = d.type.name();
  j["roots"] = d.roots.size();
  j["h"] = to_string(d.coxeter);
  j["g"] = to_string(d.dual_coxeter);
  j["marks"] = vec_json(d.marks);
  j["comarks"] = vec_json(d.comarks);
  j["I0"] = matrix_json(d.I0);
  if (o.format == "csv") {
    j["marks"] = csv_join(d.marks);
    j["comarks"] = csv_join(d.comarks);
    j.erase("I0");
  }
  emit(o, render(o, j));
  return kOk;
}

int cmd_parabolic(const Options& o) {
  auto ctx = make_context(o);
  const RootDatum& d = ctx->d;
  ordered_json all = ordered_json::array();
  for (const ParabolicProfile& p : ctx->profiles) {
    if (o.alpha && *o.alpha != p.alpha) continue;
    ordered_json j;
    j["alpha"] = p.alpha;
    std::string levi;
    for (const auto& c : p.levi_components) levi += (levi.empty() ? "" : " x ") + c.type.name();
    j["levi"] = levi.empty() ? "torus" : levi;
    j["h_alpha"] = p.h_alpha;
    j["g_alpha"] = to_string(p.g_alpha);
    j["m_alpha"] = to_string(p.m_alpha);
    j["n_alpha"] = to_string(p.n_alpha);
    j["d1"] = to_string(p.d1);
    j["d"] = o.format == "csv" ? ordered_json(csv_join(p.d_seq)) : vec_json(p.d_seq);
    j["special"] = is_special(d, p.alpha);
    Int m = Int(p.h_alpha) * d.dual_coxeter / p.g_alpha;
    j["circular"] = is_circularly_symmetric(p.d_seq, p.h_alpha, m).symmetric;
    all.push_back(j);
  }
  if (o.alpha && all.empty()) throw RangeError("alpha out of range");
  if (o.format == "json") {
    emit(o, all.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  if (o.format == "csv") {
    os << "alpha,levi,h_alpha,g_alpha,m_alpha,n_alpha,d1,d,special,circular\n";
    for (const auto& j : all) {
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it, first = false)
        os << (first ? "" : ",") << (it->is_string() ? it->get<std::string>() : it->dump());
      os << "\n";
    }
  } else {
    for (const auto& j : all) {
      os << "alpha_" << j["alpha"].get<int>() << ": levi " << j["levi"].get<std::string>() << ", h_alpha "
         << j["h_alpha"] << ", g_alpha " << j["g_alpha"].get<std::string>() << ", d1 " << j["d1"].get<std::string>()
         << ", d_k " << j["d"].dump() << (j["special"].get<bool>() ? ", special" : "")
         << (j["circular"].get<bool>() ? "" : ", NOT circular") << "\n";
    }
  }
  emit(o, os.str());
  return kOk;
}

int cmd_orbits(const Options& o) {
  auto ctx = make_context(o);
  const RootDatum& d = ctx->d;
  const OrbitProfile& op = ctx->g.orbits;
  if (o.dot) {
    // extended diagram, one colour class per orbit
    std::ostringstream os;
    os << "graph extended_" << d.type.name() << " {\n";
    for (std::size_t k = 0; k < op.orbits.size(); ++k)
      for (int v : op.orbits[k])
        os << "  n" << v << " [label=\"" << v << " (" << d.comarks[v] << ")\", group=" << k
           << ", colorscheme=set312, style=filled, fillcolor=" << (k % 12) + 1 << "];\n";
    auto a = affine_cartan(d);
    for (int i = 0; i <= d.rank; ++i)
      for (int j = i + 1; j <= d.rank; ++j)
        if (a[i][j] != 0) {
          int m = a[i][j] * a[j][i];
          os << "  n" << i << " -- n" << j << (m > 1 ? " [label=\"" + std::to_string(m) + "\"]" : "") << ";\n";
        }
    os << "}\n";
    emit(o, os.str());
    return kOk;
  }
  ordered_json j;
  j["type"] = d.type.name();
  j["center"] = center_label(*ctx);
  ordered_json orbs = ordered_json::array();
  for (const auto& orb : op.orbits) orbs.push_back(orb);
  j["tau"] = op.aut.tau;
  j["orbits"] = orbs;
  j["g_bar"] = vec_json(op.g_bar);
  j["n0"] = to_string(op.n0);
  j["r_c"] = op.r_c;
  j["invariant_rank"] = ctx->g.lattice.basis.size();
  j["coinvariant_torsion"] = vec_json(ctx->g.lattice.coinv_torsion);
  j["det_I0_invariants"] = to_string(ctx->g.lattice.det);
  if (o.format == "csv") {
    j["g_bar"] = csv_join(op.g_bar);
    j["coinvariant_torsion"] = csv_join(ctx->g.lattice.coinv_torsion);
  }
  emit(o, render(o, j));
  return kOk;
}

/// The root used for the weighted projective space: first c-special one.
int chosen_alpha(const Context& c, const Options& o) {
  auto cs = c_special_roots(c.d, c.g.orbits, c.profiles);
  if (cs.empty()) throw NoCSpecial("no c-special simple root for " + group_key(c.g));
  if (o.alpha) {
    if (std::find(cs.begin(), cs.end(), *o.alpha) == cs.end())
      throw PreconditionError("alpha " + std::to_string(*o.alpha) + " is not c-special for " + group_key(c.g));
    return *o.alpha;
  }
  return cs.front();
}

int cmd_weights(const Options& o) {
  auto ctx = make_context(o);
  const GroupData& g = ctx->g;
  int alpha = chosen_alpha(*ctx, o);
  WpsProfile w = wps_profile(g, alpha);
  ordered_json j;
  j["group"] = group_key(g);
  j["center"] = center_label(*ctx);
  j["generator"] = g.c_generates_center();
  j["alpha"] = alpha;
  j["g_bar"] = join_values(g.orbits.g_bar);
  j["n0"] = to_string(g.orbits.n0);
  j["r_c"] = g.orbits.r_c;
  j["moduli_weights"] = join_values(w.sorted_moduli_weights());
  j["wps_weights"] = join_values(w.sorted_weights());
  j["n_c_alpha"] = to_string(w.n_c_alpha);
  j["ample_exponent"] = to_string(w.ample_exponent);
  if (o.format == "csv") {
    j["g_bar"] = csv_join(g.orbits.g_bar);
    j["moduli_weights"] = csv_join(w.sorted_moduli_weights());
    j["wps_weights"] = csv_join(w.sorted_weights());
  }
  emit(o, render(o, j));
  return kOk;
}

int cmd_degree(const Options& o) {
  auto ctx = make_context(o);
  const GroupData& g = ctx->g;
  ordered_json j;
  j["group"] = group_key(g);
  j["center"] = center_label(*ctx);
  j["pairing_degree"] = to_string(pairing_degree(ctx->d, g.orbits, g.lattice));
  int alpha = chosen_alpha(*ctx, o);
  WpsProfile w = wps_profile(g, alpha);
  j["alpha"] = alpha;
  j["wps_top_intersection"] = to_string(wps_top_intersection(w.weights, w.ample_exponent));
  j["det_bundle_self_intersection"] = to_string(det_bundle_self_intersection(g));
  Check c = degree_consistency(g);
  j["quadratic_route"] = c.lhs;
  j["consistent"] = c.pass;
  emit(o, render(o, j));
  return c.pass ? kOk : kClaimFailure;
}

int cmd_verify(const Options& o) {
  SweepConfig cfg;
  cfg.max_rank = o.max_rank;
  cfg.fail_fast = o.fail_fast;
  cfg.jobs = o.jobs;
  if (cfg.jobs == 0) {
    const char* env = std::getenv("WPS_MODULI_JOBS");
    if (env) {
      try {
        cfg.jobs = std::stoi(env);
      } catch (const std::exception&) {
        throw ConstructionError(std::string("WPS_MODULI_JOBS is not an integer: ") + env);
      }
    } else {
      cfg.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
  }
  if (!o.all && !o.type.empty()) {
    if (o.rank) cfg.types = {simple_type(o)};
    else cfg.families = {parse_family(o.type)};
  }
  if (o.center) {
    cfg.center_policy = *o.center == 0 ? CenterPolicy::TrivialOnly : CenterPolicy::Explicit;
    cfg.center_index = *o.center;
  }
  VerificationReport r = run_verification(cfg);
  std::string text = o.format == "json" ? report_json(r) : o.format == "csv" ? report_csv(r) : report_text(r);
  emit(o, text);
  if (!o.out.empty())
    std::cerr << r.claims.size() << " claims, " << r.count(Status::Fail) << " failed, " << r.count(Status::Skip)
              << " skipped\n";
  return r.pass() ? kOk : kClaimFailure;
}

void add_group_options(CLI::App* sub, Options& o, bool with_center) {
  sub->add_option("--type", o.type, "family letter A..G")->required();
  sub->add_option("--rank", o.rank, "rank (optional for F and G)");
  if (with_center) sub->add_option("--center", o.center, "center element index, 0 = trivial");
  sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", o.out, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted projective space data of moduli of G-bundles on elliptic curves"};
  app.require_subcommand(1);
  Options o;

  auto* roots = app.add_subcommand("roots", "root datum summary");
  add_group_options(roots, o, false);
  auto* para = app.add_subcommand("parabolic", "maximal parabolic data per simple root");
  add_group_options(para, o, false);
  para->add_option("--alpha", o.alpha, "restrict to one simple root");
  auto* orbits = app.add_subcommand("orbits", "orbits of a center element on the extended diagram");
  add_group_options(orbits, o, true);
  orbits->add_flag("--dot", o.dot, "emit a graphviz diagram");
  auto* weights = app.add_subcommand("weights", "moduli weights");
  add_group_options(weights, o, true);
  weights->add_option("--alpha", o.alpha, "c-special simple root to use");
  auto* degree = app.add_subcommand("degree", "pairing degree and intersection numbers");
  add_group_options(degree, o, true);
  degree->add_option("--alpha", o.alpha, "c-special simple root to use");

  auto* verify = app.add_subcommand("verify", "run the verification sweep");
  verify->add_option("--type", o.type, "restrict to one family");
  verify->add_option("--rank", o.rank, "restrict to one rank");
  verify->add_option("--center", o.center, "restrict to one center element");
  verify->add_option("--max-rank", o.max_rank, "largest classical rank")->check(CLI::Range(1, 64));
  verify->add_flag("--all", o.all, "all families");
  verify->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", o.out, "write the report to a file");
  verify->add_option("--jobs", o.jobs, "worker threads (default WPS_MODULI_JOBS or core count)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--fail-fast", o.fail_fast, "skip remaining tasks after the first failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*roots) return cmd_roots(o);
    if (*para) return cmd_parabolic(o);
    if (*orbits) return cmd_orbits(o);
    if (*weights) return cmd_weights(o);
    if (*degree) return cmd_degree(o);
    return cmd_verify(o);
  } catch (const NoCSpecial& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoCSpecial;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kInvalidInput;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ElementDomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kClaimFailure;
  }
}
