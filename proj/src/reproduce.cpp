#include "wdual/reproduce.hpp"

#include "wdual/error.hpp"
#include "wdual/forest.hpp"
#include "wdual/labeling.hpp"
#include "wdual/operad_bases.hpp"
#include "wdual/partition_posets.hpp"
#include "wdual/whitney_dual.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace wdual {

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok)
      failures.push_back(what);
  }
};

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

std::vector<std::int64_t> expected_first(int n) {
  std::vector<std::int64_t> w;
  for (int k = 0; k < n; ++k)
    w.push_back((k % 2 ? -1 : 1) * binom(n - 1, k) * ipow(n, k));
  return w;
}

std::vector<std::int64_t> expected_second(int n) {
  std::vector<std::int64_t> W;
  for (int k = 0; k < n; ++k)
    W.push_back(binom(n, k) * ipow(n - k, k));
  return W;
}

std::string seq(const std::vector<std::int64_t> &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string nstr(int n) { return "n=" + std::to_string(n); }

// Five-element poset 0 < a,b,c < 1 with labels a<b<c, and its dual.
struct SmallPair {
  EdgeLabeling L;
  GradedPoset Q;
};

SmallPair small_pair() {
  auto P = std::make_shared<const GradedPoset>(
      std::vector<std::string>{"0", "a", "b", "c", "1"},
      std::vector<Cover>{{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}});
  auto labels = std::make_shared<const LabelPoset>(LabelPoset::chain({"a", "b", "c"}));
  EdgeLabeling L(P, labels, {0, 1, 1, 0, 2, 0});
  GradedPoset Q({"0", "a", "b", "c", "1ba", "1ca"},
                {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}});
  return {L, Q};
}

std::vector<std::string> word_strings(const EdgeLabeling &L, const Witness &w) {
  std::vector<std::string> out;
  for (const auto &c : w.chains)
    out.push_back(L.labels().render(L.word(c)));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome whitney_formulas(const ReproduceOptions &) {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    auto W = build_weighted(n);
    auto B = build_pointed(n);
    for (auto [name, P] : {std::pair{"weighted", W.poset}, std::pair{"pointed", B.poset}}) {
      auto w = whitney_first(*P), Ws = whitney_second(*P);
      o.expect(w == expected_first(n),
               std::string(name) + " " + nstr(n) + " w=" + seq(w));
      o.expect(Ws == expected_second(n),
               std::string(name) + " " + nstr(n) + " W=" + seq(Ws));
    }
  }
  return o;
}

Outcome mobius_values_check(const ReproduceOptions &) {
  Outcome o;
  auto W = build_weighted(3);
  std::vector<std::int64_t> mw;
  for (ElementId t : weighted_tops(W))
    mw.push_back(mobius(*W.poset, t));
  o.expect(mw == std::vector<std::int64_t>{2, 5, 2}, "weighted n=3 tops " + seq(mw));
  auto B = build_pointed(3);
  std::vector<std::int64_t> mb;
  for (ElementId t : pointed_tops(B))
    mb.push_back(mobius(*B.poset, t));
  o.expect(mb == std::vector<std::int64_t>{3, 3, 3}, "pointed n=3 tops " + seq(mb));

  auto sp = small_pair();
  const GradedPoset &P = sp.L.poset();
  auto mp = mobius_values(P);
  o.expect(mp == std::vector<std::int64_t>{1, -1, -1, -1, 2}, "P values " + seq(mp));
  auto R = construct_R(sp.L);
  auto mr = mobius_values(*R.poset);
  std::map<std::string, std::int64_t> by_name;
  for (ElementId x = 0; x < R.poset->size(); ++x)
    by_name[R.poset->name(x)] = mr[x];
  o.expect(by_name.size() == 6, "Q has " + std::to_string(by_name.size()) + " elements");
  o.expect(by_name["0 []"] == 1, "Q bottom");
  o.expect(by_name["a [a]"] == -1 && by_name["b [b]"] == -1 && by_name["c [c]"] == -1,
           "Q atoms");
  o.expect(by_name["1 [ba]"] == 1, "Q (1,ba)");
  o.expect(by_name["1 [ca]"] == 0, "Q (1,ca)");
  o.expect(are_isomorphic(*R.poset, sp.Q).has_value(), "R(P) matches Q");
  o.expect(whitney_first(P) == std::vector<std::int64_t>{1, -3, 2}, "w(P)");
  o.expect(whitney_second(sp.Q) == std::vector<std::int64_t>{1, 3, 2}, "W(Q)");
  o.expect(is_whitney_dual(P, sp.Q), "P and Q are Whitney duals");
  return o;
}

Outcome verdict_matrix(const ReproduceOptions &opts) {
  Outcome o;
  CheckOptions co{opts.threads};
  for (int n = 1; n <= 5; ++n) {
    auto W = build_weighted(n);
    auto lw = label_lambda_w(W);
    o.expect(check_EL(lw, co).passed(), "lambda_w EL " + nstr(n));
    o.expect(check_EW(lw, co).passed(), "lambda_w EW " + nstr(n));

    auto B = build_pointed(n);
    auto lb = label_lambda_bullet(B);
    o.expect(check_EW(lb, co).passed(), "lambda_bullet EW " + nstr(n));
    if (n >= 3)
      o.expect(!check_EL(lb, co).passed(), "lambda_bullet not EL " + nstr(n));

    auto lb2 = label_lambda_bullet2(B);
    o.expect(check_EL(lb2, co).passed(), "lambda_bullet2 EL " + nstr(n));
    if (n >= 3) {
      auto r = check_EW(lb2, co);
      o.expect(!r.passed() && r.find(kCheckSwitching),
               "lambda_bullet2 fails rank-two switching " + nstr(n));
    }

    for (ElementId top : pointed_tops(B))
      o.expect(check_EL(label_lambda_bullet_star(B, top), co).passed(),
               "lambda_bullet_star EL on dual of [0," + B.poset->name(top) + "]");
  }

  // The EL failure of lambda_bullet sits in a rank-2 interval of [0, 123~].
  {
    auto B = build_pointed(3);
    auto lb = label_lambda_bullet(B);
    ElementId top = B.poset->find("12~3");
    auto sub = restrict_labeling(lb, interval(*B.poset, B.poset->bottom(), top));
    auto r = check_EL(sub, co);
    const Witness *w = r.find(kCheckEL);
    o.expect(w && sub.poset().rank(w->top) - sub.poset().rank(w->bottom) == 2,
             "lambda_bullet EL witness of rank 2 inside [0,12~3]");
    if (w && w->chains.size() == 2) {
      LexOrder cmp = lex_compare(sub.labels(), sub.word(w->chains[0]), sub.word(w->chains[1]));
      o.expect(cmp == LexOrder::Incomparable, "lambda_bullet witness words incomparable");
    }
  }

  // lambda_tilde on n = 3: two increasing chains in [0, 12~3].
  {
    auto B = build_pointed(3);
    auto lt = label_lambda_tilde(B);
    auto r = check_ER(lt, co);
    const Witness *w = r.find(kCheckER);
    o.expect(w && B.poset->name(w->top) == "12~3", "lambda_tilde ER witness at [0,12~3]");
    if (w)
      o.expect(word_strings(lt, *w) == std::vector<std::string>{"(2,1)(3,2)", "(2,2)(3,2)"},
               "lambda_tilde increasing words");
  }

  // lambda_tilde on n = 6 fails EL on every maximal interval.
  {
    auto B = build_pointed(6);
    auto lt = label_lambda_tilde(B);
    for (ElementId top : pointed_tops(B)) {
      auto sub = restrict_labeling(lt, interval(*B.poset, B.poset->bottom(), top));
      o.expect(!check_EL(sub, co).passed(),
               "lambda_tilde not EL on [0," + B.poset->name(top) + "]");
    }
    for (int j = 1; j <= 3; ++j) {
      std::string head = "123";
      head.insert(static_cast<std::size_t>(j - 1), "~");
      ElementId lo = B.poset->find(head + "/~4/~5/~6");
      ElementId hi = B.poset->find(head + "/45~6");
      auto sub = restrict_labeling(lt, interval(*B.poset, lo, hi));
      auto r = check_ER(sub, co);
      const Witness *w = r.find(kCheckER);
      o.expect(w && word_strings(sub, *w) ==
                        std::vector<std::string>{"(5,6)(6,7)", "(5,7)(6,7)"},
               "lambda_tilde increasing pair in [" + head + "/~4/~5/~6, " + head + "/45~6]");
    }
  }
  return o;
}

Outcome stanley_oracle(const ReproduceOptions &opts) {
  Outcome o;
  CheckOptions co{opts.threads};
  std::size_t pairs = 0;
  auto run = [&](const EdgeLabeling &L, const std::string &what) {
    if (!check_ER(L, co).passed())
      return;
    ++pairs;
    o.expect(stanley_mobius_check(L, false, co).passed(), "Stanley identity " + what);
  };
  for (int n = 1; n <= 4; ++n) {
    auto W = build_weighted(n);
    run(label_lambda_w(W), "lambda_w " + nstr(n));
    auto B = build_pointed(n);
    run(label_lambda_bullet(B), "lambda_bullet " + nstr(n));
    run(label_lambda_bullet2(B), "lambda_bullet2 " + nstr(n));
    run(label_lambda_tilde(B), "lambda_tilde " + nstr(n));
    for (ElementId top : pointed_tops(B))
      run(label_lambda_bullet_star(B, top), "lambda_bullet_star " + nstr(n));
  }
  run(small_pair().L, "small pair");
  o.expect(pairs >= 20, std::to_string(pairs) + " ER pairs checked");
  return o;
}

Outcome whitney_duality(const ReproduceOptions &opts) {
  Outcome o;
  ConstructOptions co;
  co.check.threads = opts.threads;
  for (int n = 1; n <= 5; ++n) {
    auto W = build_weighted(n);
    auto Rw = construct_R(label_lambda_w(W), co);
    o.expect(is_whitney_dual(*W.poset, *Rw.poset), "weighted " + nstr(n));
    auto B = build_pointed(n);
    auto Rb = construct_R(label_lambda_bullet(B), co);
    o.expect(is_whitney_dual(*B.poset, *Rb.poset), "pointed " + nstr(n));
  }
  return o;
}

Outcome forest_bijection(const ReproduceOptions &) {
  Outcome o;
  for (Flavor f : {Flavor::Pointed, Flavor::Weighted}) {
    const std::string fl = to_string(f);
    for (int n = 1; n <= 5; ++n) {
      auto forests = enumerate_valid_forests(n, f);
      auto L = f == Flavor::Pointed ? build_label_poset_bullet(n) : build_label_poset_w(n);
      auto to_word = [&](const std::vector<PairLabel> &w) {
        Word out;
        for (const auto &l : w)
          out.push_back(L.find(l.str()));
        return out;
      };
      auto from_word = [&](const Word &w) {
        std::vector<PairLabel> out;
        for (LabelId a : w)
          out.push_back(PairLabel::parse(L.name(a)));
        return out;
      };
      std::size_t bad_trip = 0, bad_slide = 0;
      for (const auto &F : forests) {
        auto c = forest_to_chain(F, f);
        if (chain_to_forest(c.word, n, f).encode() != F.encode())
          ++bad_trip;
        for (std::size_t i = 0; i < F.trees.size(); ++i)
          for (std::size_t j = i + 1; j < F.trees.size(); ++j)
            for (int u = 0; u <= 1; ++u) {
              auto merged = u_merge(F, i, j, u, f);
              Word w = to_word(c.word);
              w.push_back(L.find(PairLabel{F.trees[i]->valency, F.trees[j]->valency, u}.str()));
              auto viasort = chain_to_forest(from_word(sort_word(L, w)), n, f);
              if (merged.encode() != viasort.encode())
                ++bad_slide;
            }
      }
      o.expect(bad_trip == 0, fl + " forest round trip " + nstr(n));
      o.expect(bad_slide == 0, fl + " slide/sort " + nstr(n) + " (" +
                                   std::to_string(bad_slide) + " mismatches)");

      // Every ascent-free chain from the minimum comes back unchanged.
      std::size_t chains = 0, bad_chain = 0;
      if (f == Flavor::Pointed) {
        auto B = build_pointed(n);
        auto lb = label_lambda_bullet(B);
        for (const auto &e : ascent_free_zero_chains(lb)) {
          ++chains;
          auto word = from_word(e.word);
          auto c = forest_to_chain(chain_to_forest(word, n, f), f);
          if (c.word != word || c.elements.back() != B.poset->name(e.top))
            ++bad_chain;
        }
      } else {
        auto W = build_weighted(n);
        auto lw = label_lambda_w(W);
        for (const auto &e : ascent_free_zero_chains(lw)) {
          ++chains;
          auto word = from_word(e.word);
          auto c = forest_to_chain(chain_to_forest(word, n, f), f);
          if (c.word != word || c.elements.back() != W.poset->name(e.top))
            ++bad_chain;
        }
      }
      o.expect(bad_chain == 0, fl + " chain round trip " + nstr(n));
      o.expect(chains == forests.size(), fl + " " + nstr(n) + ": " +
                                             std::to_string(chains) + " chains vs " +
                                             std::to_string(forests.size()) + " forests");
    }
  }
  return o;
}

Outcome direct_vs_generic(const ReproduceOptions &opts) {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    auto Fp = build_flyn(n, Flavor::Pointed);
    auto B = build_pointed(n);
    auto Rb = construct_R(label_lambda_bullet(B));
    o.expect(are_isomorphic(*Fp.poset, *Rb.poset, opts.iso).has_value(),
             "pointed " + nstr(n));
    auto Fw = build_flyn(n, Flavor::Weighted);
    auto W = build_weighted(n);
    auto Rw = construct_R(label_lambda_w(W));
    o.expect(are_isomorphic(*Fw.poset, *Rw.poset, opts.iso).has_value(),
             "weighted " + nstr(n));
  }
  return o;
}

Outcome non_isomorphism(const ReproduceOptions &opts) {
  Outcome o;
  auto F3p = build_flyn(3, Flavor::Pointed), F3w = build_flyn(3, Flavor::Weighted);
  auto F4p = build_flyn(4, Flavor::Pointed), F4w = build_flyn(4, Flavor::Weighted);
  o.expect(are_isomorphic(*F3w.poset, *F3p.poset, opts.iso).has_value(),
           "FLyn_3 flavors isomorphic");
  o.expect(!are_isomorphic(*F4w.poset, *F4p.poset, opts.iso).has_value(),
           "FLyn_4 flavors not isomorphic");
  for (int n : {3, 4}) {
    auto S = build_spanning_forest_poset(n);
    const auto &Fp = n == 3 ? F3p : F4p;
    const auto &Fw = n == 3 ? F3w : F4w;
    o.expect(!are_isomorphic(*S.poset, *Fp.poset, opts.iso).has_value(),
             "SF vs pointed " + nstr(n));
    o.expect(!are_isomorphic(*S.poset, *Fw.poset, opts.iso).has_value(),
             "SF vs weighted " + nstr(n));
  }
  return o;
}

Outcome twins(const ReproduceOptions &) {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    o.expect(is_whitney_twin(*build_pointed(n).poset, *build_weighted(n).poset),
             "partition posets " + nstr(n));
    o.expect(is_whitney_twin(*build_flyn(n, Flavor::Pointed).poset,
                             *build_flyn(n, Flavor::Weighted).poset),
             "forest posets " + nstr(n));
  }
  return o;
}

Outcome counting(const ReproduceOptions &) {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    auto cp = tlyn_counts(n, Flavor::Pointed);
    auto cw = tlyn_counts(n, Flavor::Weighted);
    std::int64_t target = ipow(n, n - 1);
    o.expect(cp.total == target, "pointed total " + nstr(n) + " = " + std::to_string(cp.total));
    o.expect(cw.total == target, "weighted total " + nstr(n) + " = " + std::to_string(cw.total));
    std::set<std::int64_t> distinct;
    for (auto [p, k] : cp.per_p)
      distinct.insert(k);
    o.expect(distinct.size() == 1, "pointed counts equal across p " + nstr(n));
  }
  for (int n = 1; n <= 8; ++n) {
    auto basis = pbw_perm_basis(n);
    std::set<std::string> distinct;
    for (const auto &m : basis)
      distinct.insert(m.str());
    o.expect(basis.size() == static_cast<std::size_t>(n) && distinct.size() == basis.size(),
             "Perm basis size " + nstr(n));
  }
  Tree t = parse_tree("(((1 ((5 7)^1 6)^0)^1 4)^1 (2 3)^1)^0");
  std::string s = theta(t).str();
  o.expect(s == "(2∘3)∘((1∘(6∘(5∘7)))∘4)", "theta renders " + s);
  return o;
}

Outcome sort_example(const ReproduceOptions &) {
  Outcome o;
  // a < c, b < c, c < d; a and b incomparable.
  LabelPoset L({"a", "b", "c", "d"}, {{0, 2}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
  std::string s = L.render(sort_word(L, L.parse_word("adbca")));
  o.expect(s == "dcaba", "sort(adbca) = " + s);
  return o;
}

struct Criterion {
  int id;
  const char *name;
  Outcome (*run)(const ReproduceOptions &);
};

const Criterion kCriteria[] = {
    {1, "whitney-number formulas", whitney_formulas},
    {2, "mobius values", mobius_values_check},
    {3, "labeling verdict matrix", verdict_matrix},
    {4, "stanley chain-count oracle", stanley_oracle},
    {5, "whitney duality of R", whitney_duality},
    {6, "forest-chain bijection and slide/sort", forest_bijection},
    {7, "FLyn isomorphic to R", direct_vs_generic},
    {8, "non-isomorphism triple", non_isomorphism},
    {9, "whitney twins", twins},
    {10, "TLyn counts, PBW sizes, theta", counting},
    {11, "sort_word example", sort_example},
};

} // namespace

std::vector<CriterionResult> run_reproduction(const ReproduceOptions &opts) {
  std::vector<CriterionResult> results;
  for (const auto &c : kCriteria) {
    if (!opts.only.empty() &&
        std::find(opts.only.begin(), opts.only.end(), c.id) == opts.only.end())
      continue;
    CriterionResult r{c.id, c.name, false, "", 0};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.run(opts);
      r.passed = o.failures.empty();
      if (r.passed) {
        r.detail = std::to_string(o.checks) + " checks";
      } else {
        r.detail = std::to_string(o.failures.size()) + "/" + std::to_string(o.checks) +
                   " checks failed: " + o.failures.front();
        for (std::size_t i = 1; i < std::min<std::size_t>(o.failures.size(), 4); ++i)
          r.detail += "; " + o.failures[i];
      }
    } catch (const std::exception &e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.on_result)
      opts.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string reproduction_table(const std::vector<CriterionResult> &results) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto &r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  "
       << std::left << std::setw(40) << r.name << std::right << "  " << r.detail
       << "\n";
    passed += r.passed;
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

} // namespace wdual
