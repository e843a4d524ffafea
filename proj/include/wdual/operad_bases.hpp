#pragma once

#include "wdual/forest.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace wdual {

enum class MonomialStyle { Display, Machine };

/// Fully parenthesized binary product over leaf labels. Products may carry a
/// subscript 0/1 (Com^2) or none (Perm, Pre-Lie).
class Monomial {
public:
  static Monomial leaf(int label);
  static Monomial product(const Monomial &left, const Monomial &right,
                          int subscript = -1);

  [[nodiscard]] std::string str(MonomialStyle style = MonomialStyle::Display) const;
  [[nodiscard]] Mask leaves() const;
  bool operator==(const Monomial &other) const;

private:
  struct Node {
    int leaf = 0;
    int subscript = -1;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    Mask leaves = 0;
  };
  explicit Monomial(std::shared_ptr<const Node> n) : root_(std::move(n)) {}
  static std::string render(const Node &n, MonomialStyle style, bool top);
  static bool equal(const Node &a, const Node &b);

  std::shared_ptr<const Node> root_;
};

/// Theta(L) o Theta(R) at a 1-colored vertex, Theta(R) o Theta(L) at a
/// 0-colored one.
Monomial theta(const Tree &t);

/// Valid one-tree forests on [n] whose chain, read in the pointed poset,
/// ends at [n]^p. Sorted by encoding.
std::vector<Tree> tlyn_trees(int n, int p, Flavor f);

struct TlynCounts {
  int n = 0;
  /// Keyed by the point p of the top [n]^p (or by the weight when the
  /// census is taken by weighted tops).
  std::map<int, std::int64_t> per_p;
  std::int64_t total = 0;
};

TlynCounts tlyn_counts(int n, Flavor f);
/// The same trees grouped by the top of their chain in the weighted poset.
TlynCounts tlyn_counts_by_weight(int n, Flavor f);
nlohmann::json counts_to_json(const TlynCounts &c);

struct PrelieDimension {
  std::int64_t pointed = 0;
  std::int64_t weighted = 0;
  /// Ascent-free maximal chains of the pointed poset under lambda_bullet.
  std::int64_t ascent_free_chains = 0;

  [[nodiscard]] bool consistent() const {
    return pointed == weighted && pointed == ascent_free_chains;
  }
};

PrelieDimension prelie_dimension_check(int n);

/// Left combs ((1 o_{c1} 2) o_{c2} 3) ... with c = 0^{i-1} 1^{n-i}, i = 1..n.
std::vector<std::vector<int>> left_comb_colorings(int n);
std::vector<Monomial> pbw_perm_basis(int n);
std::vector<Monomial> pbw_com2_basis(int n);

struct ChainCensus {
  std::vector<std::string> tops;
  std::vector<std::int64_t> counts;
  /// Word of the first increasing chain found for each top.
  std::vector<std::vector<PairLabel>> words;
};

/// Increasing maximal chains from the minimum under lambda_w (weighted) or
/// lambda_bullet2 (pointed), per top element.
ChainCensus increasing_chain_census(int n, Flavor f);

} // namespace wdual
