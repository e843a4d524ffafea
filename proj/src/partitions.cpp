#include "wdual/partitions.hpp"

#include "wdual/error.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace wdual {

Mask full_mask(int n) {
  if (n < 0 || n > 30)
    throw Error(ErrorKind::LimitExceeded, "ground set size " + std::to_string(n));
  return ((Mask{1} << (n + 1)) - 1) & ~Mask{1};
}

std::string PairLabel::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")^" +
         std::to_string(u);
}

PairLabel PairLabel::parse(std::string_view s) {
  PairLabel p;
  char tail = 0;
  std::string str(s);
  if (std::sscanf(str.c_str(), "(%d,%d)^%d%c", &p.a, &p.b, &p.u, &tail) != 3 ||
      p.a >= p.b || (p.u != 0 && p.u != 1))
    throw Error(ErrorKind::Parse, "bad pair label '" + str + "'");
  return p;
}

bool less_w(const PairLabel &x, const PairLabel &y) {
  if (x.a != y.a)
    return x.a < y.a;
  return x.b <= y.b && x.u <= y.u && x != y;
}

bool less_bullet(const PairLabel &x, const PairLabel &y) {
  if (x.a != y.a)
    return x.a < y.a;
  if (x.u == 0)
    return y.u == 1;
  return y.u == 1 && x.b < y.b;
}

namespace {

std::string digits(Mask m) {
  std::string out;
  for (int i = 1; i < 32; ++i)
    if (mask_has(m, i)) {
      if (i > 9)
        throw Error(ErrorKind::LimitExceeded,
                    "encodings support ground elements 1..9");
      out += static_cast<char>('0' + i);
    }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t k = s.find(sep, start);
    parts.push_back(s.substr(start, k - start));
    if (k == std::string_view::npos)
      return parts;
    start = k + 1;
  }
}

template <class Block> void sort_blocks(std::vector<Block> &blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block &x, const Block &y) {
    return mask_min(x.mask) < mask_min(y.mask);
  });
}

template <class Block> void check_disjoint(const std::vector<Block> &blocks) {
  Mask seen = 0;
  for (const auto &b : blocks) {
    if (b.mask == 0 || (seen & b.mask))
      throw Error(ErrorKind::Parse, "blocks must be nonempty and disjoint");
    seen |= b.mask;
  }
}

} // namespace

WeightedPartition WeightedPartition::singletons(Mask ground) {
  WeightedPartition p;
  for (int i = 1; i < 32; ++i)
    if (mask_has(ground, i))
      p.blocks.push_back({Mask{1} << i, 0});
  return p;
}

WeightedPartition WeightedPartition::parse(std::string_view s) {
  WeightedPartition p;
  for (auto part : split(s, '/')) {
    auto hat = part.find('^');
    if (hat == std::string_view::npos || hat == 0 || hat + 1 >= part.size())
      throw Error(ErrorKind::Parse, "weighted block needs digits^weight");
    WeightedBlock b;
    for (char ch : part.substr(0, hat)) {
      if (ch < '1' || ch > '9' || mask_has(b.mask, ch - '0'))
        throw Error(ErrorKind::Parse, "bad block '" + std::string(part) + "'");
      b.mask |= Mask{1} << (ch - '0');
    }
    b.weight = std::stoi(std::string(part.substr(hat + 1)));
    if (b.weight < 0 || b.weight >= mask_size(b.mask))
      throw Error(ErrorKind::Parse, "weight out of range in '" + std::string(part) + "'");
    p.blocks.push_back(b);
  }
  check_disjoint(p.blocks);
  sort_blocks(p.blocks);
  return p;
}

std::string WeightedPartition::encode() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i)
      out += '/';
    out += digits(blocks[i].mask) + "^" + std::to_string(blocks[i].weight);
  }
  return out;
}

Mask WeightedPartition::ground() const {
  Mask m = 0;
  for (const auto &b : blocks)
    m |= b.mask;
  return m;
}

std::size_t WeightedPartition::block_of(int element) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (mask_has(blocks[i].mask, element))
      return i;
  throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(element) +
                                              " not in partition");
}

WeightedPartition WeightedPartition::merged(std::size_t i, std::size_t j,
                                            int u) const {
  WeightedPartition p = *this;
  p.blocks[i] = {blocks[i].mask | blocks[j].mask,
                 blocks[i].weight + blocks[j].weight + u};
  p.blocks.erase(p.blocks.begin() + static_cast<std::ptrdiff_t>(j));
  return p;
}

PointedPartition PointedPartition::singletons(Mask ground) {
  PointedPartition p;
  for (int i = 1; i < 32; ++i)
    if (mask_has(ground, i))
      p.blocks.push_back({Mask{1} << i, i});
  return p;
}

PointedPartition PointedPartition::parse(std::string_view s) {
  PointedPartition p;
  for (auto part : split(s, '/')) {
    PointedBlock b;
    bool tilde = false;
    for (char ch : part) {
      if (ch == '~') {
        if (tilde || b.point)
          throw Error(ErrorKind::Parse, "block '" + std::string(part) +
                                            "' must have exactly one point");
        tilde = true;
        continue;
      }
      if (ch < '1' || ch > '9' || mask_has(b.mask, ch - '0'))
        throw Error(ErrorKind::Parse, "bad block '" + std::string(part) + "'");
      b.mask |= Mask{1} << (ch - '0');
      if (tilde) {
        b.point = ch - '0';
        tilde = false;
      }
    }
    if (!b.point || tilde)
      throw Error(ErrorKind::Parse, "block '" + std::string(part) +
                                        "' must have exactly one point");
    p.blocks.push_back(b);
  }
  check_disjoint(p.blocks);
  sort_blocks(p.blocks);
  return p;
}

std::string PointedPartition::encode() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i)
      out += '/';
    for (char ch : digits(blocks[i].mask)) {
      if (ch - '0' == blocks[i].point)
        out += '~';
      out += ch;
    }
  }
  return out;
}

Mask PointedPartition::ground() const {
  Mask m = 0;
  for (const auto &b : blocks)
    m |= b.mask;
  return m;
}

std::size_t PointedPartition::block_of(int element) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (mask_has(blocks[i].mask, element))
      return i;
  throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(element) +
                                              " not in partition");
}

PointedPartition PointedPartition::merged(std::size_t i, std::size_t j,
                                          int u) const {
  PointedPartition p = *this;
  p.blocks[i] = {blocks[i].mask | blocks[j].mask,
                 u ? blocks[i].point : blocks[j].point};
  p.blocks.erase(p.blocks.begin() + static_cast<std::ptrdiff_t>(j));
  return p;
}

RootedForest RootedForest::isolated(int n) {
  return RootedForest{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
}

std::vector<int> RootedForest::roots() const {
  std::vector<int> out;
  for (int v = 1; v <= n(); ++v)
    if (parent[static_cast<std::size_t>(v)] == 0)
      out.push_back(v);
  return out;
}

int RootedForest::root_of(int v) const {
  while (parent[static_cast<std::size_t>(v)] != 0)
    v = parent[static_cast<std::size_t>(v)];
  return v;
}

std::string RootedForest::encode() const {
  std::vector<std::vector<int>> children(parent.size());
  for (int v = 1; v <= n(); ++v)
    if (parent[static_cast<std::size_t>(v)])
      children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);
  std::function<std::string(int)> render = [&](int v) {
    std::string s = std::to_string(v);
    const auto &ch = children[static_cast<std::size_t>(v)];
    if (!ch.empty()) {
      s += '(';
      for (std::size_t i = 0; i < ch.size(); ++i)
        s += (i ? "," : "") + render(ch[i]);
      s += ')';
    }
    return s;
  };
  // Trees in order of their least vertex.
  std::vector<int> order;
  std::vector<char> done(parent.size(), 0);
  for (int v = 1; v <= n(); ++v) {
    int r = root_of(v);
    if (!done[static_cast<std::size_t>(r)]) {
      done[static_cast<std::size_t>(r)] = 1;
      order.push_back(r);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i)
    out += (i ? "/" : "") + render(order[i]);
  return out;
}

} // namespace wdual
