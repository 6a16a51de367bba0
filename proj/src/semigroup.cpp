#include "zdg/semigroup.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>
#include <utility>

namespace zdg {
namespace {

constexpr std::size_t kParallelValidationThreshold = 256;

std::string index_str(std::size_t i) { return std::to_string(i); }

/// Scans rows [row_begin, row_end) for the lexicographically first
/// associativity violation (i, j, k) with table[table[i][j]][k] !=
/// table[i][table[j][k]].
std::optional<std::array<std::size_t, 3>> find_nonassociative(
    const std::vector<elem>& t, std::size_t n, std::size_t row_begin,
    std::size_t row_end) {
  for (std::size_t i = row_begin; i < row_end; ++i) {
    const elem* row_i = t.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const elem* row_ij = t.data() + static_cast<std::size_t>(row_i[j]) * n;
      const elem* row_j = t.data() + j * n;
      for (std::size_t k = 0; k < n; ++k) {
        if (row_ij[k] != row_i[row_j[k]]) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_nonassociative_parallel(
    const std::vector<elem>& t, std::size_t n) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t chunks = std::min<std::size_t>(hw, n);
  std::vector<std::optional<std::array<std::size_t, 3>>> found(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = n * c / chunks, end = n * (c + 1) / chunks;
    workers.emplace_back(
        [&, c, begin, end] { found[c] = find_nonassociative(t, n, begin, end); });
  }
  for (auto& w : workers) w.join();
  // Chunks cover ascending row ranges, so the first non-empty slot holds the
  // lexicographically first witness overall.
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace

Semigroup Semigroup::validate(const std::vector<std::vector<elem>>& table, elem zero,
                              std::vector<std::string> labels,
                              std::string description) {
  const std::size_t n = table.size();
  if (n == 0)
    throw ValidationError(ValidationError::Kind::MalformedTable, "table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw ValidationError(ValidationError::Kind::MalformedTable,
                            "table is not square: row " + index_str(i) + " has " +
                                index_str(table[i].size()) + " entries, expected " +
                                index_str(n),
                            {i, 0, 0});
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw ValidationError(ValidationError::Kind::MalformedTable,
                              "entry (" + index_str(i) + ", " + index_str(j) +
                                  ") = " + index_str(table[i][j]) +
                                  " is out of range",
                              {i, j, 0});
    }
  }
  if (zero >= n)
    throw ValidationError(ValidationError::Kind::MalformedTable,
                          "zero index " + index_str(zero) + " is out of range",
                          {zero, 0, 0});

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + index_str(i));
  }
  if (labels.size() != n)
    throw ValidationError(ValidationError::Kind::MalformedTable,
                          "expected " + index_str(n) + " labels, got " +
                              index_str(labels.size()));
  {
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.insert(labels[i]).second)
        throw ValidationError(ValidationError::Kind::MalformedTable,
                              "duplicate label \"" + labels[i] + "\" at index " +
                                  index_str(i),
                              {i, 0, 0});
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (table[zero][i] != zero)
      throw ValidationError(ValidationError::Kind::ZeroNotAbsorbing,
                            "zero is not absorbing: " + labels[zero] + " * " +
                                labels[i] + " = " + labels[table[zero][i]],
                            {i, 0, 0});
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i])
        throw ValidationError(ValidationError::Kind::NotCommutative,
                              "not commutative at (" + index_str(i) + ", " +
                                  index_str(j) + "): " + labels[i] + " * " +
                                  labels[j] + " != " + labels[j] + " * " + labels[i],
                              {i, j, 0});

  std::vector<elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());

  auto bad = n >= kParallelValidationThreshold
                 ? find_nonassociative_parallel(flat, n)
                 : find_nonassociative(flat, n, 0, n);
  if (bad) {
    auto [i, j, k] = *bad;
    throw ValidationError(ValidationError::Kind::NotAssociative,
                          "not associative at (" + index_str(i) + ", " +
                              index_str(j) + ", " + index_str(k) + "): (" +
                              labels[i] + " * " + labels[j] + ") * " + labels[k] +
                              " != " + labels[i] + " * (" + labels[j] + " * " +
                              labels[k] + ")",
                          *bad);
  }

  auto data = std::make_shared<Data>();
  data->order = n;
  data->table = std::move(flat);
  data->zero = zero;
  data->labels = std::move(labels);
  data->description = std::move(description);
  data->label_index.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    data->label_index.emplace(data->labels[i], static_cast<elem>(i));
  return Semigroup(std::move(data));
}

std::optional<elem> Semigroup::element_by_label(std::string_view label) const {
  auto it = data_->label_index.find(std::string(label));
  if (it == data_->label_index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<elem>> Semigroup::table_rows() const {
  std::vector<std::vector<elem>> rows(data_->order);
  for (std::size_t i = 0; i < data_->order; ++i) {
    auto r = row(static_cast<elem>(i));
    rows[i].assign(r.begin(), r.end());
  }
  return rows;
}

Semigroup Semigroup::with_description(std::string description) const {
  auto data = std::make_shared<Data>(*data_);
  data->description = std::move(description);
  return Semigroup(std::move(data));
}

Semigroup Semigroup::with_labels(std::vector<std::string> labels) const {
  return validate(table_rows(), zero(), std::move(labels), description());
}

std::string subset_label(unsigned mask) {
  if (mask == 0) return "∅";
  std::string out = "{";
  bool first = true;
  for (unsigned bit = 0; mask >> bit; ++bit) {
    if (!(mask >> bit & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(bit + 1);
    first = false;
  }
  out += "}";
  return out;
}

std::string residue_label(unsigned a) {
  return std::to_string(a) + "̄";  // combining macron: 2 -> 2̄
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + ", " + b + ")";
}

Semigroup power_set_semigroup(int n) {
  if (n < 1) throw std::invalid_argument("power set parameter must be >= 1");
  if (n > kMaxPowerSetBits)
    throw SizeLimitExceeded("power set parameter " + std::to_string(n) +
                                " exceeds the bitmask bound " +
                                std::to_string(kMaxPowerSetBits),
                            static_cast<std::size_t>(n), kMaxPowerSetBits);
  const std::size_t order = std::size_t{1} << n;
  std::vector<std::vector<elem>> table(order, std::vector<elem>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      table[i][j] = static_cast<elem>(i & j);
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i)
    labels.push_back(subset_label(static_cast<unsigned>(i)));
  return Semigroup::validate(table, 0, std::move(labels),
                             "P(" + std::to_string(n) + ")");
}

Semigroup zn_multiplicative(int m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  const std::size_t order = static_cast<std::size_t>(m);
  std::vector<std::vector<elem>> table(order, std::vector<elem>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      table[i][j] = static_cast<elem>(i * j % order);
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i)
    labels.push_back(residue_label(static_cast<unsigned>(i)));
  return Semigroup::validate(table, 0, std::move(labels),
                             "(Z_" + std::to_string(m) + ", ·)");
}

Semigroup direct_product(const Semigroup& a, const Semigroup& b, std::size_t order_cap) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t order = na * nb;
  if (order > order_cap)
    throw SizeLimitExceeded("product order " + std::to_string(order) +
                                " exceeds the order cap " + std::to_string(order_cap),
                            order, order_cap);
  std::vector<std::vector<elem>> table(order, std::vector<elem>(order));
  for (std::size_t i = 0; i < order; ++i) {
    const elem ia = static_cast<elem>(i / nb), ib = static_cast<elem>(i % nb);
    for (std::size_t j = 0; j < order; ++j) {
      const elem ja = static_cast<elem>(j / nb), jb = static_cast<elem>(j % nb);
      table[i][j] =
          static_cast<elem>(static_cast<std::size_t>(a.mul(ia, ja)) * nb + b.mul(ib, jb));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t i = 0; i < order; ++i)
    labels.push_back(pair_label(a.label(static_cast<elem>(i / nb)),
                                b.label(static_cast<elem>(i % nb))));
  const elem zero = static_cast<elem>(static_cast<std::size_t>(a.zero()) * nb + b.zero());
  return Semigroup::validate(table, zero, std::move(labels),
                             a.description() + " × " + b.description());
}

}  // namespace zdg
