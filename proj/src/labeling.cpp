#include "wdual/labeling.hpp"

#include "wdual/error.hpp"
#include "wdual/poset_io.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

namespace wdual {

EdgeLabeling::EdgeLabeling(std::shared_ptr<const GradedPoset> poset,
                           std::shared_ptr<const LabelPoset> labels,
                           std::vector<LabelId> label_of)
    : poset_(std::move(poset)), labels_(std::move(labels)),
      label_of_(std::move(label_of)) {
  if (!poset_ || !labels_)
    throw Error(ErrorKind::InvalidArgument, "labeling needs a poset and labels");
  if (label_of_.size() != poset_->cover_count())
    throw Error(ErrorKind::InvalidArgument,
                "labeling has " + std::to_string(label_of_.size()) +
                    " labels for " + std::to_string(poset_->cover_count()) +
                    " covers");
  for (LabelId a : label_of_)
    if (a >= labels_->size())
      throw Error(ErrorKind::InvalidArgument, "label index out of range");
}

Word EdgeLabeling::word(std::span<const CoverId> chain) const {
  Word w;
  w.reserve(chain.size());
  for (CoverId c : chain)
    w.push_back(label_of_[c]);
  return w;
}

std::vector<CoverId>
EdgeLabeling::covers_of(std::span<const ElementId> chain) const {
  std::vector<CoverId> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto c = poset_->find_cover(chain[i], chain[i + 1]);
    if (!c)
      throw Error(ErrorKind::InvalidArgument,
                  "'" + poset_->name(chain[i]) + "' is not covered by '" +
                      poset_->name(chain[i + 1]) + "'");
    out.push_back(*c);
  }
  return out;
}

ChainClass classify_word(const LabelPoset &L, const Word &w) {
  ChainClass cc;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (L.less(w[i], w[i + 1]))
      cc.ascent_free = false;
    else
      cc.increasing = false;
  }
  return cc;
}

ChainClass classify_chain(const EdgeLabeling &L, std::span<const ElementId> chain) {
  return classify_word(L.labels(), L.word(L.covers_of(chain)));
}

const Witness *Report::find(std::string_view check) const {
  for (const auto &w : witnesses)
    if (w.check == check)
      return &w;
  return nullptr;
}

void Report::merge(const Report &other) {
  for (const auto &w : other.witnesses)
    if (!find(w.check))
      witnesses.push_back(w);
}

namespace {

std::vector<ElementId> chain_elements(const GradedPoset &P, ElementId bottom,
                                      const std::vector<CoverId> &chain) {
  std::vector<ElementId> out{bottom};
  for (CoverId c : chain)
    out.push_back(P.cover(c).upper);
  return out;
}

// Runs f over [0, count) and returns the witness of the smallest index that
// produced one, so the result does not depend on the thread count.
template <class F>
std::optional<Witness> first_witness(std::size_t count, unsigned threads, F f) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (auto w = f(i))
        return w;
    return std::nullopt;
  }
  std::vector<std::optional<Witness>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load())
        return;
      if (auto w = f(i)) {
        results[i] = std::move(w);
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned t = std::min<std::size_t>(threads, count);
  for (unsigned k = 0; k < t; ++k)
    pool.emplace_back(worker);
  for (auto &th : pool)
    th.join();
  std::size_t b = best.load();
  if (b == count)
    return std::nullopt;
  return results[b];
}

Report single(std::optional<Witness> w) {
  Report r;
  if (w)
    r.witnesses.push_back(std::move(*w));
  return r;
}

// Increasing chains from x, up to two per top.
struct IncreasingPass {
  std::vector<int> count;
  std::vector<std::vector<std::vector<CoverId>>> chains;
};

IncreasingPass increasing_from(const EdgeLabeling &L, ElementId x) {
  const GradedPoset &P = L.poset();
  IncreasingPass r;
  r.count.assign(P.size(), 0);
  r.chains.assign(P.size(), {});
  walk_chains_from(P, x, [&](std::span<const CoverId> chain, ElementId last) {
    std::size_t k = chain.size();
    if (k >= 2 && !L.labels().less(L.label(chain[k - 2]), L.label(chain[k - 1])))
      return false;
    ++r.count[last];
    if (r.chains[last].size() < 2)
      r.chains[last].emplace_back(chain.begin(), chain.end());
    return true;
  });
  return r;
}

std::optional<Witness> er_witness(const EdgeLabeling &L, ElementId x,
                                  const IncreasingPass &inc) {
  const GradedPoset &P = L.poset();
  auto ups = P.up_set(x);
  std::sort(ups.begin(), ups.end(), [&](ElementId a, ElementId b) {
    return P.rank(a) != P.rank(b) ? P.rank(a) < P.rank(b) : a < b;
  });
  for (ElementId y : ups) {
    if (inc.count[y] == 1)
      continue;
    Witness w{kCheckER, x, y,
              std::to_string(inc.count[y]) + " increasing maximal chains",
              inc.chains[y]};
    return w;
  }
  return std::nullopt;
}

std::vector<ElementId> bottoms(const GradedPoset &P) { return P.rank_order(); }

std::optional<Witness> el_witness(const EdgeLabeling &L, ElementId x) {
  auto inc = increasing_from(L, x);
  if (auto w = er_witness(L, x, inc))
    return w;
  const GradedPoset &P = L.poset();
  std::vector<Word> inc_word(P.size());
  for (ElementId y = 0; y < P.size(); ++y)
    if (inc.count[y] == 1)
      inc_word[y] = L.word(inc.chains[y][0]);
  std::optional<Witness> found;
  walk_chains_from(P, x, [&](std::span<const CoverId> chain, ElementId last) {
    if (found)
      return false;
    if (chain.size() < 2)
      return true;
    Word w = L.word(chain);
    if (w == inc_word[last] &&
        std::equal(chain.begin(), chain.end(), inc.chains[last][0].begin()))
      return true;
    LexOrder o = lex_compare(L.labels(), inc_word[last], w);
    if (o != LexOrder::Less) {
      found = Witness{kCheckEL, x, last,
                      o == LexOrder::Incomparable
                          ? std::string("increasing chain word is lex-incomparable "
                                        "with a competitor")
                          : std::string("increasing chain word is not lex-smallest"),
                      {inc.chains[last][0],
                       std::vector<CoverId>(chain.begin(), chain.end())}};
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Witness> switching_witness(const EdgeLabeling &L, ElementId x) {
  const GradedPoset &P = L.poset();
  std::map<ElementId, std::vector<std::vector<CoverId>>> by_top;
  for (CoverId c1 : P.up(x))
    for (CoverId c2 : P.up(P.cover(c1).upper))
      by_top[P.cover(c2).upper].push_back({c1, c2});
  for (auto &[y, chains] : by_top) {
    std::vector<std::vector<CoverId>> increasing;
    for (auto &c : chains)
      if (L.labels().less(L.label(c[0]), L.label(c[1])))
        increasing.push_back(c);
    if (increasing.size() != 1)
      continue;
    LabelId a = L.label(increasing[0][0]), b = L.label(increasing[0][1]);
    std::vector<std::vector<CoverId>> swapped;
    for (auto &c : chains)
      if (L.label(c[0]) == b && L.label(c[1]) == a)
        swapped.push_back(c);
    if (swapped.size() == 1)
      continue;
    Witness w{kCheckSwitching, x, y,
              std::to_string(swapped.size()) + " chains labeled " +
                  L.labels().name(b) + L.labels().name(a),
              {increasing[0]}};
    for (auto &c : swapped)
      w.chains.push_back(c);
    return w;
  }
  return std::nullopt;
}

std::optional<Witness> injectivity_witness(const EdgeLabeling &L, ElementId x) {
  const GradedPoset &P = L.poset();
  std::map<ElementId, std::map<Word, std::vector<CoverId>>> seen;
  std::optional<Witness> found;
  walk_chains_from(P, x, [&](std::span<const CoverId> chain, ElementId last) {
    if (found)
      return false;
    std::size_t k = chain.size();
    if (k >= 2 && L.labels().less(L.label(chain[k - 2]), L.label(chain[k - 1])))
      return false;
    auto [it, fresh] =
        seen[last].emplace(L.word(chain), std::vector<CoverId>(chain.begin(), chain.end()));
    if (!fresh) {
      found = Witness{kCheckInjectivity, x, last,
                      "two ascent-free chains share a word",
                      {it->second, std::vector<CoverId>(chain.begin(), chain.end())}};
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Witness> stanley_witness(const EdgeLabeling &L, ElementId x) {
  const GradedPoset &P = L.poset();
  auto filter = upper_filter(P, x);
  auto mu_local = mobius_values(filter.poset);
  std::vector<std::int64_t> mu(P.size(), 0);
  for (std::size_t i = 0; i < filter.parent_element.size(); ++i)
    mu[filter.parent_element[i]] = mu_local[i];
  std::vector<std::int64_t> count(P.size(), 0);
  walk_chains_from(P, x, [&](std::span<const CoverId> chain, ElementId last) {
    std::size_t k = chain.size();
    if (k >= 2 && L.labels().less(L.label(chain[k - 2]), L.label(chain[k - 1])))
      return false;
    ++count[last];
    return true;
  });
  std::vector<ElementId> ups = filter.parent_element;
  std::sort(ups.begin(), ups.end(), [&](ElementId a, ElementId b) {
    return P.rank(a) != P.rank(b) ? P.rank(a) < P.rank(b) : a < b;
  });
  for (ElementId y : ups) {
    int r = P.rank(y) - P.rank(x);
    std::int64_t predicted = (r % 2 ? -1 : 1) * count[y];
    if (predicted != mu[y]) {
      std::ostringstream os;
      os << "mu = " << mu[y] << " but " << count[y]
         << " ascent-free maximal chains";
      return Witness{kCheckStanley, x, y, os.str(), {}};
    }
  }
  return std::nullopt;
}

} // namespace

Report check_ER(const EdgeLabeling &L, const CheckOptions &opts) {
  auto xs = bottoms(L.poset());
  return single(first_witness(xs.size(), opts.threads, [&](std::size_t i) {
    return er_witness(L, xs[i], increasing_from(L, xs[i]));
  }));
}

Report check_EL(const EdgeLabeling &L, const CheckOptions &opts) {
  auto xs = bottoms(L.poset());
  auto w = first_witness(xs.size(), opts.threads,
                         [&](std::size_t i) { return el_witness(L, xs[i]); });
  Report r = single(w);
  // An ER failure also fails EL.
  if (w && w->check == kCheckER) {
    Witness el = *w;
    el.check = kCheckEL;
    el.message = "no unique increasing chain: " + w->message;
    r.witnesses.push_back(el);
  }
  return r;
}

Report check_rank_two_switching(const EdgeLabeling &L, const CheckOptions &opts) {
  auto xs = bottoms(L.poset());
  return single(first_witness(xs.size(), opts.threads, [&](std::size_t i) {
    return switching_witness(L, xs[i]);
  }));
}

Report check_ascent_free_injectivity(const EdgeLabeling &L,
                                     const CheckOptions &opts) {
  auto xs = bottoms(L.poset());
  return single(first_witness(xs.size(), opts.threads, [&](std::size_t i) {
    return injectivity_witness(L, xs[i]);
  }));
}

Report check_EW(const EdgeLabeling &L, const CheckOptions &opts) {
  Report r = check_ER(L, opts);
  r.merge(check_rank_two_switching(L, opts));
  r.merge(check_ascent_free_injectivity(L, opts));
  return r;
}

Report stanley_mobius_check(const EdgeLabeling &L, bool all_intervals,
                            const CheckOptions &opts) {
  std::vector<ElementId> xs{L.poset().bottom()};
  if (all_intervals)
    xs = bottoms(L.poset());
  return single(first_witness(xs.size(), opts.threads, [&](std::size_t i) {
    return stanley_witness(L, xs[i]);
  }));
}

std::optional<std::vector<CoverId>>
unique_increasing_chain(const EdgeLabeling &L, ElementId x, ElementId y) {
  auto inc = increasing_from(L, x);
  if (inc.count[y] != 1)
    return std::nullopt;
  return inc.chains[y][0];
}

EdgeLabeling dual_labeling(const EdgeLabeling &L) {
  auto dual = std::make_shared<const GradedPoset>(order_dual(L.poset()));
  auto labels = std::make_shared<const LabelPoset>(L.labels().reversed());
  return EdgeLabeling(dual, labels, L.label_of());
}

EdgeLabeling restrict_labeling(const EdgeLabeling &L, const SubPoset &sub) {
  std::vector<LabelId> label_of;
  label_of.reserve(sub.parent_cover.size());
  for (CoverId c : sub.parent_cover)
    label_of.push_back(L.label(c));
  return EdgeLabeling(std::make_shared<const GradedPoset>(sub.poset),
                      L.labels_ptr(), std::move(label_of));
}

std::string report_to_text(const EdgeLabeling &L, const Report &r) {
  const GradedPoset &P = L.poset();
  std::ostringstream os;
  if (r.passed()) {
    os << "pass\n";
    return os.str();
  }
  os << "fail\n";
  for (const auto &w : r.witnesses) {
    os << "  " << w.check << " fails on [" << P.name(w.bottom) << ", "
       << P.name(w.top) << "]: " << w.message << "\n";
    for (const auto &c : w.chains) {
      os << "    ";
      auto els = chain_elements(P, w.bottom, c);
      for (std::size_t i = 0; i < els.size(); ++i)
        os << (i ? " < " : "") << P.name(els[i]);
      os << "   word " << L.labels().render(L.word(c)) << "\n";
    }
  }
  return os.str();
}

nlohmann::json report_to_json(const EdgeLabeling &L, const Report &r) {
  const GradedPoset &P = L.poset();
  nlohmann::json ws = nlohmann::json::array();
  for (const auto &w : r.witnesses) {
    nlohmann::json chains = nlohmann::json::array();
    for (const auto &c : w.chains) {
      std::vector<std::string> els, word;
      for (ElementId e : chain_elements(P, w.bottom, c))
        els.push_back(P.name(e));
      for (LabelId a : L.word(c))
        word.push_back(L.labels().name(a));
      chains.push_back({{"elements", els}, {"word", word}});
    }
    ws.push_back({{"check", w.check},
                  {"bottom", P.name(w.bottom)},
                  {"top", P.name(w.top)},
                  {"message", w.message},
                  {"chains", chains}});
  }
  return {{"verdict", r.passed() ? "pass" : "fail"}, {"witnesses", ws}};
}

nlohmann::json labeling_to_json(const EdgeLabeling &L) {
  nlohmann::json j = poset_to_json(L.poset());
  nlohmann::json less = nlohmann::json::array();
  for (auto [a, b] : L.labels().relation())
    less.push_back({a, b});
  j["label_poset"] = {{"labels", L.labels().names()}, {"less", less}};
  nlohmann::json of = nlohmann::json::array();
  for (CoverId c = 0; c < L.label_of().size(); ++c)
    of.push_back({c, L.label(c)});
  j["labels_of_covers"] = of;
  return j;
}

EdgeLabeling labeling_from_json(const nlohmann::json &j) {
  auto poset = std::make_shared<const GradedPoset>(poset_from_json(j));
  try {
    const auto &lp = j.at("label_poset");
    std::vector<std::pair<LabelId, LabelId>> less;
    for (const auto &p : lp.at("less"))
      less.emplace_back(p.at(0).get<LabelId>(), p.at(1).get<LabelId>());
    auto labels = std::make_shared<const LabelPoset>(
        lp.at("labels").get<std::vector<std::string>>(), less);
    std::vector<LabelId> label_of(poset->cover_count(), 0);
    std::vector<char> given(poset->cover_count(), 0);
    for (const auto &p : j.at("labels_of_covers")) {
      auto c = p.at(0).get<CoverId>();
      if (c >= label_of.size() || given[c])
        throw Error(ErrorKind::Parse, "bad or repeated cover index in labeling");
      given[c] = 1;
      label_of[c] = p.at(1).get<LabelId>();
    }
    if (std::find(given.begin(), given.end(), 0) != given.end())
      throw Error(ErrorKind::Parse, "labeling leaves a cover unlabeled");
    return EdgeLabeling(poset, labels, std::move(label_of));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

} // namespace wdual
