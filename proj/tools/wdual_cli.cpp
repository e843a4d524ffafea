#include "wdual/error.hpp"
#include "wdual/forest.hpp"
#include "wdual/isomorphism.hpp"
#include "wdual/labeling.hpp"
#include "wdual/operad_bases.hpp"
#include "wdual/partition_posets.hpp"
#include "wdual/poset_io.hpp"
#include "wdual/reproduce.hpp"
#include "wdual/whitney_dual.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

using namespace wdual;
using nlohmann::json;

namespace {

// Exit codes, by first failing class.
enum Exit : int {
  kOk = 0,
  kError = 1,
  kFailER = 2,
  kFailEL = 3,
  kFailSwitching = 4,
  kFailInjectivity = 5,
  kFailStanley = 6,
  kNotDual = 7,
  kNotIsomorphic = 8,
  kCriterionFailed = 9,
  kBudget = 10,
};

struct Globals {
  bool as_json = false;
  bool as_dot = false;
  std::uint64_t limit_nodes = IsoOptions{}.node_budget;
  double limit_seconds = 0;
  unsigned threads = 1;
  std::optional<int> max_n;

  [[nodiscard]] int build_limit() const { return max_n.value_or(kDefaultBuildLimit); }
  [[nodiscard]] int sweep_limit() const { return max_n.value_or(kDefaultSweepLimit); }

  [[nodiscard]] IsoOptions iso() const {
    IsoOptions o;
    o.node_budget = limit_nodes;
    if (limit_seconds > 0)
      o.deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(static_cast<long long>(limit_seconds * 1000));
    return o;
  }
};

std::string seq(const std::vector<std::int64_t> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Builds the family and, when named, a labeling on it. lambda_bullet_star
// yields one labeling per maximal interval.
struct Built {
  std::shared_ptr<const GradedPoset> poset;
  std::vector<EdgeLabeling> labelings;
  std::vector<std::string> scopes;
};

Built build_family(const std::string &family, int n, const std::string &labeling,
                   const Globals &g) {
  Built b;
  auto need = [&](std::initializer_list<const char *> ok) {
    if (labeling.empty())
      return;
    for (const char *name : ok)
      if (labeling == name)
        return;
    throw Error(ErrorKind::InvalidArgument,
                "labeling '" + labeling + "' is not defined on family '" + family + "'");
  };
  if (family == "weighted") {
    need({"lambda_w"});
    auto W = build_weighted(n, g.build_limit());
    b.poset = W.poset;
    if (!labeling.empty()) {
      b.labelings.push_back(label_lambda_w(W));
      b.scopes.emplace_back("");
    }
  } else if (family == "pointed") {
    need({"lambda_bullet", "lambda_bullet2", "lambda_bullet_star", "lambda_tilde"});
    auto P = build_pointed(n, g.build_limit());
    b.poset = P.poset;
    if (labeling == "lambda_bullet")
      b.labelings.push_back(label_lambda_bullet(P));
    else if (labeling == "lambda_bullet2")
      b.labelings.push_back(label_lambda_bullet2(P));
    else if (labeling == "lambda_tilde")
      b.labelings.push_back(label_lambda_tilde(P));
    else if (labeling == "lambda_bullet_star")
      for (ElementId top : pointed_tops(P)) {
        b.labelings.push_back(label_lambda_bullet_star(P, top));
        b.scopes.push_back("dual of [0, " + P.poset->name(top) + "]");
      }
    if (b.scopes.size() < b.labelings.size())
      b.scopes.emplace_back("");
  } else if (family == "partition") {
    need({});
    b.poset = std::make_shared<const GradedPoset>(build_partition_lattice(n, g.build_limit()));
  } else if (family == "sf") {
    need({});
    b.poset = build_spanning_forest_poset(n, g.build_limit()).poset;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
  }
  return b;
}

std::vector<std::string> edge_names(const EdgeLabeling &L) {
  std::vector<std::string> out;
  for (CoverId c = 0; c < L.poset().cover_count(); ++c)
    out.push_back(L.label_name(c));
  return out;
}

int cmd_build(const Globals &g, const std::string &family, int n,
              const std::string &labeling) {
  if (labeling == "lambda_bullet_star")
    throw Error(ErrorKind::InvalidArgument,
                "lambda_bullet_star lives on order duals of maximal intervals; use verify");
  Built b = build_family(family, n, labeling, g);
  if (g.as_dot) {
    std::cout << poset_to_dot(*b.poset, b.labelings.empty()
                                            ? std::vector<std::string>{}
                                            : edge_names(b.labelings.front()));
  } else if (!b.labelings.empty()) {
    std::cout << labeling_to_json(b.labelings.front()).dump(1) << "\n";
  } else {
    std::cout << poset_to_json(*b.poset).dump(1) << "\n";
  }
  return kOk;
}

int cmd_whitney(const Globals &g, const std::string &family, int n) {
  Built b = build_family(family, n, "", g);
  auto w = whitney_first(*b.poset), W = whitney_second(*b.poset);
  if (g.as_json)
    std::cout << json{{"family", family}, {"n", n}, {"first", w}, {"second", W}}.dump()
              << "\n";
  else
    std::cout << "w = " << seq(w) << "\nW = " << seq(W) << "\n";
  return kOk;
}

const std::vector<std::string> kCheckOrder = {kCheckER, kCheckEL, kCheckSwitching,
                                              kCheckInjectivity, "EW", kCheckStanley};

int exit_for(const std::string &check, const std::map<std::string, bool> &verdict) {
  if (check == "EW") {
    for (const char *part : {kCheckER, kCheckSwitching, kCheckInjectivity})
      if (!verdict.at(part))
        return exit_for(part, verdict);
  }
  if (check == kCheckER)
    return kFailER;
  if (check == kCheckEL)
    return kFailEL;
  if (check == kCheckSwitching)
    return kFailSwitching;
  if (check == kCheckInjectivity)
    return kFailInjectivity;
  return kFailStanley;
}

int cmd_verify(const Globals &g, const std::string &family, const std::string &labeling,
               int n, std::vector<std::string> require, bool all_intervals) {
  if (n > g.sweep_limit())
    throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(n) +
                                              " above the sweep limit " +
                                              std::to_string(g.sweep_limit()) +
                                              "; raise with --max-n");
  if (labeling.empty())
    throw Error(ErrorKind::InvalidArgument, "verify needs a labeling");
  if (require.empty())
    require.push_back(kCheckER);
  for (const auto &req : require)
    if (std::find(kCheckOrder.begin(), kCheckOrder.end(), req) == kCheckOrder.end())
      throw Error(ErrorKind::InvalidArgument, "unknown check '" + req + "'");
  Built b = build_family(family, n, labeling, g);
  CheckOptions co{g.threads};

  // verdict per check, plus the first failing scope's report.
  std::map<std::string, bool> verdict;
  std::map<std::string, std::pair<std::size_t, Report>> failing;
  for (std::size_t i = 0; i < b.labelings.size(); ++i) {
    const auto &L = b.labelings[i];
    std::map<std::string, Report> rs;
    rs[kCheckER] = check_ER(L, co);
    rs[kCheckEL] = check_EL(L, co);
    rs[kCheckSwitching] = check_rank_two_switching(L, co);
    rs[kCheckInjectivity] = check_ascent_free_injectivity(L, co);
    Report ew = rs[kCheckER];
    ew.merge(rs[kCheckSwitching]);
    ew.merge(rs[kCheckInjectivity]);
    rs["EW"] = ew;
    if (rs[kCheckER].passed())
      rs[kCheckStanley] = stanley_mobius_check(L, all_intervals, co);
    for (const auto &name : kCheckOrder) {
      if (!rs.count(name))
        continue;
      bool ok = rs[name].passed();
      verdict.emplace(name, true);
      verdict[name] = verdict[name] && ok;
      if (!ok && !failing.count(name))
        failing.emplace(name, std::make_pair(i, rs[name]));
    }
  }

  if (g.as_json) {
    json checks = json::object();
    for (const auto &name : kCheckOrder) {
      if (!verdict.count(name)) {
        checks[name] = {{"verdict", "skipped"}};
        continue;
      }
      if (verdict[name]) {
        checks[name] = {{"verdict", "pass"}, {"witnesses", json::array()}};
      } else {
        auto &[i, r] = failing.at(name);
        checks[name] = report_to_json(b.labelings[i], r);
        if (!b.scopes[i].empty())
          checks[name]["scope"] = b.scopes[i];
      }
    }
    std::cout << json{{"family", family}, {"labeling", labeling}, {"n", n}, {"checks", checks}}
                     .dump(1)
              << "\n";
  } else {
    std::cout << family << " " << labeling << " n=" << n << "\n";
    for (const auto &name : kCheckOrder) {
      std::string v = !verdict.count(name) ? "skipped (needs ER)"
                      : verdict[name]      ? "pass"
                                           : "fail";
      std::cout << "  " << std::left << std::setw(26) << name << v << "\n";
    }
    for (const auto &name : kCheckOrder) {
      if (!failing.count(name) || name == "EW")
        continue;
      auto &[i, r] = failing.at(name);
      if (!b.scopes[i].empty())
        std::cout << b.scopes[i] << ":\n";
      Report only;
      only.witnesses.push_back(*r.find(name));
      std::string text = report_to_text(b.labelings[i], only);
      std::cout << text.substr(text.find('\n') + 1);
    }
  }

  for (const auto &name : kCheckOrder)
    for (const auto &req : require)
      if (req == name && (!verdict.count(name) || !verdict[name]))
        return name == kCheckStanley && !verdict.count(name) ? exit_for(kCheckER, verdict)
                                                              : exit_for(name, verdict);
  return kOk;
}

int cmd_dual(const Globals &g, const std::string &family, const std::string &labeling,
             int n, bool bypass, int top) {
  std::optional<EdgeLabeling> L;
  if (labeling == "lambda_bullet_star") {
    auto P = build_pointed(n, g.build_limit());
    auto tops = pointed_tops(P);
    if (family != "pointed" || top < 1 || top > n)
      throw Error(ErrorKind::InvalidArgument,
                  "lambda_bullet_star needs family pointed and --top p in 1..n");
    L = label_lambda_bullet_star(P, tops[static_cast<std::size_t>(top - 1)]);
  } else {
    Built b = build_family(family, n, labeling, g);
    if (b.labelings.empty())
      throw Error(ErrorKind::InvalidArgument, "dual needs a labeling");
    L = b.labelings.front();
  }
  ConstructOptions co;
  co.bypass_check = bypass;
  co.check.threads = g.threads;
  DualPoset R = construct_R(*L, co);
  bool dual = is_whitney_dual(L->poset(), *R.poset);
  if (g.as_dot) {
    std::cout << poset_to_dot(*R.poset);
  } else if (g.as_json) {
    json j = poset_to_json(*R.poset);
    json els = json::array();
    for (const auto &e : R.elements)
      els.push_back(dual_element_to_json(*L, e));
    j["dual_elements"] = els;
    j["validated"] = R.validated;
    j["whitney_dual"] = dual;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "R has " << R.poset->size() << " elements"
              << (R.validated ? "" : " (not validated)") << "\n"
              << "W(R) = " << seq(whitney_second(*R.poset)) << "\n"
              << "w(R) = " << seq(whitney_first(*R.poset)) << "\n"
              << "whitney dual: " << (dual ? "true" : "false") << "\n";
  }
  return dual ? kOk : kNotDual;
}

int cmd_flyn(const Globals &g, const std::string &flavor, int n, bool compare) {
  Flavor f;
  if (flavor == "pointed")
    f = Flavor::Pointed;
  else if (flavor == "weighted")
    f = Flavor::Weighted;
  else
    throw Error(ErrorKind::InvalidArgument, "unknown flavor '" + flavor + "'");
  auto F = build_flyn(n, f, g.build_limit());
  std::optional<bool> iso;
  if (compare) {
    std::optional<EdgeLabeling> L;
    if (f == Flavor::Pointed)
      L = label_lambda_bullet(build_pointed(n, g.build_limit()));
    else
      L = label_lambda_w(build_weighted(n, g.build_limit()));
    ConstructOptions co;
    co.check.threads = g.threads;
    auto R = construct_R(*L, co);
    iso = are_isomorphic(*F.poset, *R.poset, g.iso()).has_value();
  }
  if (g.as_dot) {
    std::cout << poset_to_dot(*F.poset);
  } else if (g.as_json) {
    json j = poset_to_json(*F.poset);
    if (iso)
      j["isomorphic_to_R"] = *iso;
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "FLyn " << flavor << " n=" << n << ": " << F.poset->size()
              << " elements, W = " << seq(whitney_second(*F.poset)) << "\n";
    if (iso)
      std::cout << "isomorphic to R: " << (*iso ? "true" : "false") << "\n";
  }
  return iso && !*iso ? kNotIsomorphic : kOk;
}

int cmd_isocheck(const Globals &g, const std::string &a, const std::string &b) {
  GradedPoset P = read_poset_file(a), Q = read_poset_file(b);
  bool iso = are_isomorphic(P, Q, g.iso()).has_value();
  if (g.as_json)
    std::cout << json{{"isomorphic", iso}}.dump() << "\n";
  else
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? kOk : kNotIsomorphic;
}

int cmd_pbw(const std::string &operad, int n, bool machine) {
  std::vector<Monomial> basis;
  if (operad == "perm")
    basis = pbw_perm_basis(n);
  else if (operad == "com2")
    basis = pbw_com2_basis(n);
  else
    throw Error(ErrorKind::InvalidArgument, "unknown operad '" + operad + "'");
  for (const auto &m : basis)
    std::cout << m.str(machine ? MonomialStyle::Machine : MonomialStyle::Display) << "\n";
  return kOk;
}

int cmd_counts(int n, const std::string &flavor, bool by_weight) {
  Flavor f = flavor == "weighted" ? Flavor::Weighted : Flavor::Pointed;
  if (flavor != "weighted" && flavor != "pointed")
    throw Error(ErrorKind::InvalidArgument, "unknown flavor '" + flavor + "'");
  auto c = by_weight ? tlyn_counts_by_weight(n, f) : tlyn_counts(n, f);
  std::cout << counts_to_json(c).dump() << "\n";
  return kOk;
}

int cmd_reproduce(const Globals &g, const std::vector<int> &only) {
  ReproduceOptions o;
  o.threads = g.threads;
  o.iso = g.iso();
  o.only = only;
  auto results = run_reproduction(o);
  std::cout << reproduction_table(results);
  for (const auto &r : results)
    if (!r.passed)
      return kCriterionFailed;
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Whitney duals of graded posets: partition posets, labelings, "
               "Lyndon forests"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char *env = std::getenv("WDUAL_MAX_N"))
    g.max_n = std::atoi(env);
  int max_n_flag = 0;
  app.add_flag("--json", g.as_json, "JSON output");
  app.add_flag("--dot", g.as_dot, "Graphviz output");
  app.add_option("--limit-nodes", g.limit_nodes, "Isomorphism search node budget");
  app.add_option("--limit-seconds", g.limit_seconds, "Isomorphism search time budget");
  app.add_option("--threads", g.threads, "Worker threads for labeling checks")
      ->check(CLI::Range(1u, 256u));
  auto *max_n_opt =
      app.add_option("--max-n", max_n_flag, "Size limit for builders and sweeps (env WDUAL_MAX_N)");

  std::string family, labeling, flavor = "pointed", operad, file_a, file_b;
  int n = 0, top = 0;
  bool bypass = false, compare = false, machine = false, by_weight = false,
       all_intervals = false;
  std::vector<std::string> require;
  std::vector<int> only;

  auto *build = app.add_subcommand("build", "Build a poset family");
  build->add_option("family", family, "weighted | pointed | partition | sf")->required();
  build->add_option("n", n)->required();
  build->add_option("--labeling", labeling, "Attach a labeling");

  auto *whitney = app.add_subcommand("whitney", "Whitney numbers of both kinds");
  whitney->add_option("family", family)->required();
  whitney->add_option("n", n)->required();

  auto *verify = app.add_subcommand("verify", "Check labeling axioms");
  verify->add_option("family", family)->required();
  verify->add_option("labeling", labeling)->required();
  verify->add_option("n", n)->required();
  verify->add_option("--require", require,
                     "Checks that decide the exit code (default ER): ER EL "
                     "rank-two-switching ascent-free-injectivity EW stanley")
      ->delimiter(',');
  verify->add_flag("--all-intervals", all_intervals, "Stanley check on every interval");

  auto *dual = app.add_subcommand("dual", "Build R for a labeling and test duality");
  dual->add_option("family", family)->required();
  dual->add_option("labeling", labeling)->required();
  dual->add_option("n", n)->required();
  dual->add_flag("--bypass", bypass, "Skip the EW precondition");
  dual->add_option("--top", top, "Maximal interval [n]^p for lambda_bullet_star");

  auto *flyn = app.add_subcommand("flyn", "Build the Lyndon forest poset");
  flyn->add_option("flavor", flavor, "pointed | weighted")->required();
  flyn->add_option("n", n)->required();
  flyn->add_flag("--compare", compare, "Compare with R of the matching labeling");

  auto *isocheck = app.add_subcommand("isocheck", "Isomorphism of two JSON posets");
  isocheck->add_option("fileA", file_a)->required();
  isocheck->add_option("fileB", file_b)->required();

  auto *pbw = app.add_subcommand("pbw", "PBW left-comb basis");
  pbw->add_option("operad", operad, "perm | com2")->required();
  pbw->add_option("n", n)->required();
  pbw->add_flag("--machine", machine, "ASCII rendering (o, o0, o1)");

  auto *counts = app.add_subcommand("counts", "Tree counts per maximal interval");
  counts->add_option("n", n)->required();
  counts->add_option("--flavor", flavor, "pointed | weighted");
  counts->add_flag("--by-weight", by_weight, "Group by weighted top instead");

  auto *reproduce = app.add_subcommand("reproduce", "Run the acceptance criteria");
  reproduce->add_option("--only", only, "Criterion ids")->delimiter(',');

  CLI11_PARSE(app, argc, argv);
  if (*max_n_opt)
    g.max_n = max_n_flag;

  try {
    if (*build)
      return cmd_build(g, family, n, labeling);
    if (*whitney)
      return cmd_whitney(g, family, n);
    if (*verify)
      return cmd_verify(g, family, labeling, n, require, all_intervals);
    if (*dual)
      return cmd_dual(g, family, labeling, n, bypass, top);
    if (*flyn)
      return cmd_flyn(g, flavor, n, compare);
    if (*isocheck)
      return cmd_isocheck(g, file_a, file_b);
    if (*pbw)
      return cmd_pbw(operad, n, machine);
    if (*counts)
      return cmd_counts(n, flavor, by_weight);
    if (*reproduce)
      return cmd_reproduce(g, only);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExhausted ? kBudget : kError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
