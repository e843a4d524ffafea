#include "wdual/operad_bases.hpp"

#include "wdual/error.hpp"

#include <algorithm>

namespace wdual {

Monomial Monomial::leaf(int label) {
  auto n = std::make_shared<Node>();
  n->leaf = label;
  n->leaves = Mask{1} << label;
  return Monomial(n);
}

Monomial Monomial::product(const Monomial &left, const Monomial &right,
                           int subscript) {
  if (left.leaves() & right.leaves())
    throw Error(ErrorKind::InvalidArgument, "monomial factors share a leaf");
  auto n = std::make_shared<Node>();
  n->subscript = subscript;
  n->left = left.root_;
  n->right = right.root_;
  n->leaves = left.leaves() | right.leaves();
  return Monomial(n);
}

Mask Monomial::leaves() const { return root_->leaves; }

std::string Monomial::render(const Node &n, MonomialStyle style, bool top) {
  if (n.leaf)
    return std::to_string(n.leaf);
  std::string op;
  if (style == MonomialStyle::Display) {
    op = "∘";
    if (n.subscript == 0)
      op += "₀";
    else if (n.subscript == 1)
      op += "₁";
  } else {
    op = " o";
    if (n.subscript >= 0)
      op += std::to_string(n.subscript);
    op += " ";
  }
  std::string body = render(*n.left, style, false) + op + render(*n.right, style, false);
  return top ? body : "(" + body + ")";
}

std::string Monomial::str(MonomialStyle style) const {
  return render(*root_, style, true);
}

bool Monomial::equal(const Node &a, const Node &b) {
  if (a.leaf || b.leaf)
    return a.leaf == b.leaf;
  return a.subscript == b.subscript && equal(*a.left, *b.left) &&
         equal(*a.right, *b.right);
}

bool Monomial::operator==(const Monomial &other) const {
  return equal(*root_, *other.root_);
}

Monomial theta(const Tree &t) {
  if (t->is_leaf())
    return Monomial::leaf(t->leaf);
  Monomial l = theta(t->left), r = theta(t->right);
  return t->color ? Monomial::product(l, r) : Monomial::product(r, l);
}

namespace {

void check_counts_n(int n) {
  if (n < 1 || n > 7)
    throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(n) + " outside 1..7");
}

std::string chain_top(const Tree &t, Flavor reading) {
  BicoloredForest F{{t}};
  return forest_to_chain(F, reading, false).elements.back();
}

TlynCounts census(int n, Flavor f, Flavor reading) {
  check_counts_n(n);
  TlynCounts c;
  c.n = n;
  std::map<std::string, int> key;
  if (reading == Flavor::Pointed) {
    for (int p = 1; p <= n; ++p) {
      key[PointedPartition{{{full_mask(n), p}}}.encode()] = p;
      c.per_p[p] = 0;
    }
  } else {
    for (int k = 0; k < n; ++k) {
      key[WeightedPartition{{{full_mask(n), k}}}.encode()] = k;
      c.per_p[k] = 0;
    }
  }
  for (const auto &t : all_normalized_trees(full_mask(n))) {
    if (!is_valid(t, f))
      continue;
    ++c.per_p[key.at(chain_top(t, reading))];
    ++c.total;
  }
  return c;
}

} // namespace

std::vector<Tree> tlyn_trees(int n, int p, Flavor f) {
  check_counts_n(n);
  if (p < 1 || p > n)
    throw Error(ErrorKind::InvalidArgument, "need 1 <= p <= n");
  const std::string top = PointedPartition{{{full_mask(n), p}}}.encode();
  std::vector<Tree> out;
  for (const auto &t : all_normalized_trees(full_mask(n)))
    if (is_valid(t, f) && chain_top(t, Flavor::Pointed) == top)
      out.push_back(t);
  std::sort(out.begin(), out.end(), [](const Tree &x, const Tree &y) {
    return encode_tree(x) < encode_tree(y);
  });
  return out;
}

TlynCounts tlyn_counts(int n, Flavor f) { return census(n, f, Flavor::Pointed); }

TlynCounts tlyn_counts_by_weight(int n, Flavor f) {
  return census(n, f, Flavor::Weighted);
}

nlohmann::json counts_to_json(const TlynCounts &c) {
  nlohmann::json per = nlohmann::json::object();
  for (auto [p, k] : c.per_p)
    per[std::to_string(p)] = k;
  return {{"n", c.n}, {"per_p", per}, {"total", c.total}};
}

PrelieDimension prelie_dimension_check(int n) {
  PrelieDimension d;
  d.pointed = tlyn_counts(n, Flavor::Pointed).total;
  d.weighted = tlyn_counts(n, Flavor::Weighted).total;
  auto P = build_pointed(n, std::max(n, kDefaultBuildLimit));
  auto L = label_lambda_bullet(P);
  const int top_rank = n - 1;
  walk_chains_from(*P.poset, P.poset->bottom(),
                   [&](std::span<const CoverId> chain, ElementId last) {
                     std::size_t k = chain.size();
                     if (k >= 2 && L.labels().less(L.label(chain[k - 2]),
                                                   L.label(chain[k - 1])))
                       return false;
                     if (P.poset->rank(last) == top_rank)
                       ++d.ascent_free_chains;
                     return true;
                   });
  return d;
}

std::vector<std::vector<int>> left_comb_colorings(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> c;
    for (int j = 1; j < n; ++j)
      c.push_back(j < i ? 0 : 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Monomial> pbw_perm_basis(int n) {
  if (n < 1 || n > 30)
    throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(n));
  std::vector<Monomial> out;
  for (const auto &c : left_comb_colorings(n)) {
    Tree t = TreeNode::make_leaf(1);
    for (int j = 2; j <= n; ++j)
      t = TreeNode::join(t, TreeNode::make_leaf(j), c[static_cast<std::size_t>(j - 2)]);
    out.push_back(theta(t));
  }
  return out;
}

std::vector<Monomial> pbw_com2_basis(int n) {
  if (n < 1 || n > 30)
    throw Error(ErrorKind::LimitExceeded, "n = " + std::to_string(n));
  std::vector<Monomial> out;
  auto colorings = left_comb_colorings(n);
  // Listed from the all-zero comb upward.
  std::reverse(colorings.begin(), colorings.end());
  for (const auto &c : colorings) {
    Monomial m = Monomial::leaf(1);
    for (int j = 2; j <= n; ++j)
      m = Monomial::product(m, Monomial::leaf(j), c[static_cast<std::size_t>(j - 2)]);
    out.push_back(m);
  }
  return out;
}

namespace {

template <class Family>
ChainCensus census_of(const Family &P, const EdgeLabeling &L,
                      const std::vector<ElementId> &tops) {
  ChainCensus c;
  std::vector<std::int64_t> count(P.poset->size(), 0);
  std::vector<std::vector<PairLabel>> first(P.poset->size());
  walk_chains_from(*P.poset, P.poset->bottom(),
                   [&](std::span<const CoverId> chain, ElementId last) {
                     std::size_t k = chain.size();
                     if (k >= 2 && !L.labels().less(L.label(chain[k - 2]),
                                                    L.label(chain[k - 1])))
                       return false;
                     if (count[last]++ == 0)
                       for (CoverId cv : chain)
                         first[last].push_back(P.merges[cv].label());
                     return true;
                   });
  for (ElementId t : tops) {
    c.tops.push_back(P.poset->name(t));
    c.counts.push_back(count[t]);
    c.words.push_back(first[t]);
  }
  return c;
}

} // namespace

ChainCensus increasing_chain_census(int n, Flavor f) {
  if (f == Flavor::Weighted) {
    auto P = build_weighted(n);
    return census_of(P, label_lambda_w(P), weighted_tops(P));
  }
  auto P = build_pointed(n);
  return census_of(P, label_lambda_bullet2(P), pointed_tops(P));
}

} // namespace wdual
