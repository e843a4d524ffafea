#pragma once

#include "wdual/label_poset.hpp"
#include "wdual/poset.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wdual {

/// A label for every cover of a poset.
class EdgeLabeling {
public:
  EdgeLabeling(std::shared_ptr<const GradedPoset> poset,
               std::shared_ptr<const LabelPoset> labels,
               std::vector<LabelId> label_of);

  [[nodiscard]] const GradedPoset &poset() const { return *poset_; }
  [[nodiscard]] const LabelPoset &labels() const { return *labels_; }
  [[nodiscard]] std::shared_ptr<const GradedPoset> poset_ptr() const { return poset_; }
  [[nodiscard]] std::shared_ptr<const LabelPoset> labels_ptr() const { return labels_; }
  [[nodiscard]] LabelId label(CoverId c) const { return label_of_[c]; }
  [[nodiscard]] const std::vector<LabelId> &label_of() const { return label_of_; }
  [[nodiscard]] const std::string &label_name(CoverId c) const {
    return labels_->name(label_of_[c]);
  }
  [[nodiscard]] Word word(std::span<const CoverId> chain) const;
  /// Cover ids along an element chain; throws if a step is not a cover.
  [[nodiscard]] std::vector<CoverId> covers_of(std::span<const ElementId> chain) const;

private:
  std::shared_ptr<const GradedPoset> poset_;
  std::shared_ptr<const LabelPoset> labels_;
  std::vector<LabelId> label_of_;
};

struct ChainClass {
  bool increasing = true;
  bool ascent_free = true;
};

ChainClass classify_word(const LabelPoset &L, const Word &w);
ChainClass classify_chain(const EdgeLabeling &L, std::span<const ElementId> chain);

inline constexpr const char *kCheckER = "ER";
inline constexpr const char *kCheckEL = "EL";
inline constexpr const char *kCheckSwitching = "rank-two-switching";
inline constexpr const char *kCheckInjectivity = "ascent-free-injectivity";
inline constexpr const char *kCheckStanley = "stanley";

struct Witness {
  std::string check;
  ElementId bottom = 0;
  ElementId top = 0;
  std::string message;
  /// Relevant saturated chains from bottom to top, as cover ids.
  std::vector<std::vector<CoverId>> chains;
};

/// Verdict of one or more checks: at most one witness per failing class.
struct Report {
  std::vector<Witness> witnesses;

  [[nodiscard]] bool passed() const { return witnesses.empty(); }
  [[nodiscard]] const Witness *find(std::string_view check) const;
  void merge(const Report &other);
};

std::string report_to_text(const EdgeLabeling &L, const Report &r);
nlohmann::json report_to_json(const EdgeLabeling &L, const Report &r);

struct CheckOptions {
  unsigned threads = 1;
};

Report check_ER(const EdgeLabeling &L, const CheckOptions &opts = {});
Report check_EL(const EdgeLabeling &L, const CheckOptions &opts = {});
Report check_rank_two_switching(const EdgeLabeling &L,
                                const CheckOptions &opts = {});
Report check_ascent_free_injectivity(const EdgeLabeling &L,
                                     const CheckOptions &opts = {});
Report check_EW(const EdgeLabeling &L, const CheckOptions &opts = {});
/// mu(x,y) = (-1)^rank * #ascent-free maximal chains on every [0,y], or on
/// every interval when `all_intervals` is set.
Report stanley_mobius_check(const EdgeLabeling &L, bool all_intervals = false,
                            const CheckOptions &opts = {});

/// Labeling of the order dual over the reversed label order.
EdgeLabeling dual_labeling(const EdgeLabeling &L);
EdgeLabeling restrict_labeling(const EdgeLabeling &L, const SubPoset &sub);

/// The increasing maximal chain of [x, y] when it is unique.
std::optional<std::vector<CoverId>> unique_increasing_chain(const EdgeLabeling &L,
                                                            ElementId x,
                                                            ElementId y);

nlohmann::json labeling_to_json(const EdgeLabeling &L);
/// Reads a poset plus labeling from one object carrying both formats.
EdgeLabeling labeling_from_json(const nlohmann::json &j);

} // namespace wdual
