#include "wdual/forest.hpp"

#include "wdual/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace wdual {

const char *to_string(Flavor f) {
  return f == Flavor::Pointed ? "pointed" : "weighted";
}

Tree TreeNode::make_leaf(int label) {
  if (label < 1 || label > 31)
    throw Error(ErrorKind::InvalidArgument, "leaf label " + std::to_string(label));
  auto t = std::make_shared<TreeNode>();
  t->leaf = label;
  t->valency = label;
  t->leaves = Mask{1} << label;
  return t;
}

Tree TreeNode::join(Tree left, Tree right, int color) {
  if (!left || !right || (left->leaves & right->leaves))
    throw Error(ErrorKind::InvalidMerge, "subtrees must be disjoint");
  auto t = std::make_shared<TreeNode>();
  t->color = color;
  t->valency = std::min(left->valency, right->valency);
  t->leaves = left->leaves | right->leaves;
  t->internal = left->internal + right->internal + 1;
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

std::string encode_tree(const Tree &t) {
  if (t->is_leaf())
    return std::to_string(t->leaf);
  return "(" + encode_tree(t->left) + " " + encode_tree(t->right) + ")^" +
         std::to_string(t->color);
}

namespace {

struct TreeParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos) +
                                      " in '" + std::string(s) + "'");
  }
  void expect(char ch) {
    skip();
    if (pos >= s.size() || s[pos] != ch)
      fail(std::string("expected '") + ch + "'");
    ++pos;
  }
  Tree tree() {
    skip();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      Tree l = tree();
      Tree r = tree();
      expect(')');
      expect('^');
      skip();
      if (pos >= s.size() || (s[pos] != '0' && s[pos] != '1'))
        fail("expected color 0 or 1");
      int color = s[pos++] - '0';
      return TreeNode::join(std::move(l), std::move(r), color);
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos)
      fail("expected a leaf label");
    return TreeNode::make_leaf(std::stoi(std::string(s.substr(start, pos - start))));
  }
};

bool node_normalized(const TreeNode &v) {
  if (v.is_leaf())
    return true;
  return v.left->valency < v.right->valency && node_normalized(*v.left) &&
         node_normalized(*v.right);
}

template <class Pred> bool all_internal(const TreeNode &v, Pred pred) {
  if (v.is_leaf())
    return true;
  return pred(v) && all_internal(*v.left, pred) && all_internal(*v.right, pred);
}

bool pointed_at(const TreeNode &v) {
  if (v.left->is_leaf())
    return true;
  int cl = v.left->color, cv = v.color;
  if (cl < cv)
    return false;
  return !(cl == 1 && cv == 1) || is_lyndon_vertex(v);
}

bool bicolored_at(const TreeNode &v) {
  if (v.left->is_leaf())
    return true;
  return is_lyndon_vertex(v) || v.left->color > v.color;
}

} // namespace

Tree parse_tree(std::string_view s) {
  TreeParser p{s};
  Tree t = p.tree();
  p.skip();
  if (p.pos != s.size())
    p.fail("trailing input");
  return t;
}

BicoloredForest BicoloredForest::isolated(int n) { return isolated_on(full_mask(n)); }

BicoloredForest BicoloredForest::isolated_on(Mask ground) {
  BicoloredForest F;
  for (int i = 1; i < 32; ++i)
    if (mask_has(ground, i))
      F.trees.push_back(TreeNode::make_leaf(i));
  return F;
}

BicoloredForest BicoloredForest::from_trees(std::vector<Tree> trees) {
  Mask seen = 0;
  for (const auto &t : trees) {
    if (seen & t->leaves)
      throw Error(ErrorKind::InvalidForest, "trees share a leaf");
    seen |= t->leaves;
  }
  std::sort(trees.begin(), trees.end(),
            [](const Tree &x, const Tree &y) { return x->valency < y->valency; });
  return BicoloredForest{std::move(trees)};
}

BicoloredForest BicoloredForest::parse(std::string_view s) {
  std::vector<Tree> trees;
  std::size_t start = 0;
  for (;;) {
    std::size_t k = s.find('|', start);
    trees.push_back(parse_tree(s.substr(start, k - start)));
    if (k == std::string_view::npos)
      break;
    start = k + 1;
  }
  return from_trees(std::move(trees));
}

std::string BicoloredForest::encode() const {
  std::string out;
  for (std::size_t i = 0; i < trees.size(); ++i)
    out += (i ? "|" : "") + encode_tree(trees[i]);
  return out;
}

Mask BicoloredForest::ground() const {
  Mask m = 0;
  for (const auto &t : trees)
    m |= t->leaves;
  return m;
}

std::size_t BicoloredForest::tree_with_min(int leaf) const {
  for (std::size_t i = 0; i < trees.size(); ++i)
    if (trees[i]->valency == leaf)
      return i;
  throw Error(ErrorKind::InvalidMerge,
              "no tree has least leaf " + std::to_string(leaf));
}

bool is_normalized(const Tree &t) { return node_normalized(*t); }

bool is_lyndon_vertex(const TreeNode &v) {
  if (v.is_leaf())
    return false;
  if (v.left->is_leaf())
    return true;
  return v.left->right->valency > v.right->valency;
}

bool is_pointed_lyndon(const Tree &t) {
  return is_normalized(t) && all_internal(*t, pointed_at);
}

bool is_bicolored_lyndon(const Tree &t) {
  return is_normalized(t) && all_internal(*t, bicolored_at);
}

bool is_pointed_lyndon(const BicoloredForest &F) {
  return std::all_of(F.trees.begin(), F.trees.end(),
                     [](const Tree &t) { return is_pointed_lyndon(t); });
}

bool is_bicolored_lyndon(const BicoloredForest &F) {
  return std::all_of(F.trees.begin(), F.trees.end(),
                     [](const Tree &t) { return is_bicolored_lyndon(t); });
}

bool is_valid(const Tree &t, Flavor f) {
  return f == Flavor::Pointed ? is_pointed_lyndon(t) : is_bicolored_lyndon(t);
}

bool is_valid(const BicoloredForest &F, Flavor f) {
  return f == Flavor::Pointed ? is_pointed_lyndon(F) : is_bicolored_lyndon(F);
}

std::vector<const TreeNode *> reverse_minimal_extension(const BicoloredForest &F) {
  std::vector<std::pair<const TreeNode *, int>> nodes;
  std::function<void(const TreeNode &, int)> collect = [&](const TreeNode &v, int depth) {
    if (v.is_leaf())
      return;
    nodes.emplace_back(&v, depth);
    collect(*v.left, depth + 1);
    collect(*v.right, depth + 1);
  };
  for (const auto &t : F.trees)
    collect(*t, 0);
  // Equal valencies only occur along one left spine; deeper comes first.
  std::stable_sort(nodes.begin(), nodes.end(), [](const auto &x, const auto &y) {
    if (x.first->valency != y.first->valency)
      return x.first->valency > y.first->valency;
    return x.second > y.second;
  });
  std::vector<const TreeNode *> out;
  for (auto &[v, d] : nodes)
    out.push_back(v);
  return out;
}

ForestChain forest_to_chain(const BicoloredForest &F, Flavor f, bool strict) {
  for (const auto &t : F.trees)
    if (!is_normalized(t))
      throw Error(ErrorKind::InvalidForest, "forest is not normalized: " + F.encode());
  if (strict && !is_valid(F, f))
    throw Error(ErrorKind::InvalidForest, std::string("not a ") + to_string(f) +
                                              " Lyndon forest: " + F.encode());
  ForestChain c;
  Mask ground = F.ground();
  auto pp = PointedPartition::singletons(ground);
  auto wp = WeightedPartition::singletons(ground);
  auto current = [&] { return f == Flavor::Pointed ? pp.encode() : wp.encode(); };
  c.elements.push_back(current());
  for (const TreeNode *v : reverse_minimal_extension(F)) {
    PairLabel l{v->left->valency, v->right->valency, v->color};
    c.word.push_back(l);
    if (f == Flavor::Pointed)
      pp = pp.merged(pp.block_of(l.a), pp.block_of(l.b), l.u);
    else
      wp = wp.merged(wp.block_of(l.a), wp.block_of(l.b), l.u);
    c.elements.push_back(current());
  }
  return c;
}

BicoloredForest chain_to_forest(const std::vector<PairLabel> &word, int n,
                                Flavor f, bool strict) {
  auto less = f == Flavor::Pointed ? less_bullet : less_w;
  if (strict)
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
      if (less(word[i], word[i + 1]))
        throw Error(ErrorKind::InvalidArgument,
                    "word has an ascent at position " + std::to_string(i));
  BicoloredForest F = BicoloredForest::isolated(n);
  for (const PairLabel &l : word) {
    if (l.a >= l.b)
      throw Error(ErrorKind::InvalidArgument, "label " + l.str() + " needs a < b");
    std::size_t i = F.tree_with_min(l.a), j = F.tree_with_min(l.b);
    F.trees[i] = TreeNode::join(F.trees[i], F.trees[j], l.u);
    F.trees.erase(F.trees.begin() + static_cast<std::ptrdiff_t>(j));
  }
  if (strict && !is_valid(F, f))
    throw Error(ErrorKind::Internal,
                "ascent-free word produced an invalid forest: " + F.encode());
  return F;
}

BicoloredForest u_merge(const BicoloredForest &F, std::size_t t1, std::size_t t2,
                        int u, Flavor f, int *slides) {
  if (t1 >= F.trees.size() || t2 >= F.trees.size() || t1 == t2)
    throw Error(ErrorKind::InvalidMerge, "u-merge needs two distinct trees");
  if (F.trees[t1]->valency > F.trees[t2]->valency)
    throw Error(ErrorKind::InvalidMerge, "first tree must hold the smaller leaf");
  // The tree is x_1(x_2(...x_k(r(A, C), B_k)..., B_2), B_1) after k slides.
  struct Passed {
    int color;
    Tree right;
  };
  std::vector<Passed> passed;
  Tree A = F.trees[t1];
  const Tree &C = F.trees[t2];
  auto assemble = [&] {
    Tree t = TreeNode::join(A, C, u);
    for (auto it = passed.rbegin(); it != passed.rend(); ++it)
      t = TreeNode::join(t, it->right, it->color);
    return t;
  };
  Tree t = assemble();
  while (!is_valid(t, f)) {
    if (A->is_leaf())
      throw Error(ErrorKind::Internal, "slide reached a leaf without a valid tree");
    passed.push_back({A->color, A->right});
    A = A->left;
    t = assemble();
  }
  if (slides)
    *slides = static_cast<int>(passed.size());
  BicoloredForest out;
  for (std::size_t i = 0; i < F.trees.size(); ++i)
    if (i != t1 && i != t2)
      out.trees.push_back(F.trees[i]);
  out.trees.push_back(t);
  return BicoloredForest::from_trees(std::move(out.trees));
}

} // namespace wdual
