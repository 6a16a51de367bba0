#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zdg/errors.hpp"

namespace zdg {

/// Element of a finite semigroup, identified by its dense index.
using elem = std::uint32_t;

/// Default cap on the order of constructed product semigroups.
inline constexpr std::size_t kDefaultOrderCap = 4096;

/// Hard bound on the power-set parameter (bitmask encoding of subsets).
inline constexpr int kMaxPowerSetBits = 20;

/// A finite commutative semigroup with a designated absorbing zero, given by
/// its full Cayley table. Instances are validated eagerly at construction and
/// immutable afterwards; copies share the underlying table, so values are
/// cheap to pass around and safe for concurrent reads.
class Semigroup {
 public:
  /// Checks squareness, entry ranges, label distinctness, commutativity,
  /// associativity and that `zero` is absorbing; throws ValidationError with
  /// the first witnessing index tuple otherwise. Empty `labels` get the
  /// defaults "e0", "e1", ...
  static Semigroup validate(const std::vector<std::vector<elem>>& table, elem zero,
                            std::vector<std::string> labels = {},
                            std::string description = "custom table");

  std::size_t order() const noexcept { return data_->order; }
  elem zero() const noexcept { return data_->zero; }

  elem mul(elem a, elem b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }

  const std::string& label(elem e) const { return data_->labels[e]; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  const std::string& description() const noexcept { return data_->description; }

  std::span<const elem> row(elem a) const {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->order,
            data_->order};
  }

  std::optional<elem> element_by_label(std::string_view label) const;

  /// Re-materializes the table as rows (for re-validation and serialization).
  std::vector<std::vector<elem>> table_rows() const;

  /// Same semigroup, different display metadata. The table is shared.
  Semigroup with_description(std::string description) const;

  /// Relabeling; the new labels must be pairwise distinct.
  Semigroup with_labels(std::vector<std::string> labels) const;

  /// Structural equality on (order, table, zero, labels); descriptions are
  /// display metadata and excluded.
  friend bool operator==(const Semigroup& a, const Semigroup& b) {
    return a.data_->order == b.data_->order && a.data_->zero == b.data_->zero &&
           a.data_->table == b.data_->table && a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<elem> table;  // row-major, order x order
    elem zero = 0;
    std::vector<std::string> labels;
    std::string description;
    std::unordered_map<std::string, elem> label_index;
  };

  explicit Semigroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// P(n): subsets of {1,...,n} under intersection. Element index = bitmask of
/// the subset; zero is the empty set at index 0. Throws SizeLimitExceeded for
/// n > 20 and std::invalid_argument for n < 1.
Semigroup power_set_semigroup(int n);

/// (Z_m, · mod m) with zero 0̄. Requires m >= 2.
Semigroup zn_multiplicative(int m);

/// Componentwise product; index of (a_i, b_j) is i*|b| + j. Throws
/// SizeLimitExceeded when |a|·|b| > order_cap.
Semigroup direct_product(const Semigroup& a, const Semigroup& b,
                         std::size_t order_cap = kDefaultOrderCap);

/// Label helpers shared by the builders and the report/verifier layer.
std::string subset_label(unsigned mask);       // 0 -> "∅", 0b101 -> "{1,3}"
std::string residue_label(unsigned a);         // 2 -> "2̄"
std::string pair_label(const std::string& a, const std::string& b);

}  // namespace zdg
