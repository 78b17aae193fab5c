#pragma once

// SL_d(F_p) for d in {2, 3} and its substructures: the Borel and unipotent
// subgroups, the diagonalisable set, centralizers and conjugacy classes.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "progmix/error.hpp"
#include "progmix/finite_field.hpp"

namespace progmix {

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// A finite group whose elements are the positions [0, size()).
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  virtual std::size_t size() const = 0;
  virtual std::size_t identity() const = 0;
  virtual std::size_t product(std::size_t i, std::size_t j) const = 0;
  virtual std::size_t inverse(std::size_t i) const = 0;
};

// Z_n under addition; element i is the residue i.
class CyclicGroup final : public FiniteGroup {
 public:
  explicit CyclicGroup(std::size_t n);
  std::size_t size() const override { return n_; }
  std::size_t identity() const override { return 0; }
  std::size_t product(std::size_t i, std::size_t j) const override {
    return (i + j) % n_;
  }
  std::size_t inverse(std::size_t i) const override {
    return (n_ - i) % n_;
  }

 private:
  std::size_t n_;
};

// d x d matrix over F_p with determinant one.
class GroupElement {
 public:
  static constexpr int kMaxDim = 3;

  // Throws std::invalid_argument on bad shape, non-prime p or det != 1.
  GroupElement(int d, std::int64_t p, std::span<const std::int64_t> entries);
  GroupElement(int d, std::int64_t p,
               std::initializer_list<std::int64_t> entries);

  static GroupElement identity(int d, std::int64_t p);
  // diag(t, t^-1) in SL_2.
  static GroupElement diagonal(std::int64_t p, std::int64_t t);

  int dim() const { return d_; }
  std::int64_t modulus() const { return p_; }
  std::int64_t entry(int row, int col) const {
    return e_[static_cast<std::size_t>(row * d_ + col)];
  }
  FieldElement at(int row, int col) const { return {entry(row, col), p_}; }

  FieldElement trace() const;
  FieldElement determinant() const;
  bool is_upper_triangular() const;
  bool is_central() const;
  std::uint64_t key() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  struct Unchecked {};
  GroupElement(Unchecked, int d, std::int64_t p) : d_(d), p_(p), e_{} {}
  friend GroupElement mul(const GroupElement&, const GroupElement&);
  friend GroupElement inverse(const GroupElement&);
  friend class GroupTable;

  int d_;
  std::int64_t p_;
  std::array<std::int64_t, kMaxDim * kMaxDim> e_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

// Throws std::invalid_argument on dimension or modulus mismatch.
GroupElement mul(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
FieldElement trace(const GroupElement& x);

// d = 2: tr x != +-2.  d = 3: characteristic polynomial squarefree.
bool is_regular_semisimple(const GroupElement& x);

enum class TableKind {
  kFull,
  kBorel,
  kUnipotent,
  kDiagSet,
  kCentralizer,
  kClass,
  kConjugateSubgroup,
  kSubset,
};

std::string to_string(TableKind kind);

// Immutable, lexicographically ordered set of matrices with index lookup.
// Tables whose kind is a subgroup kind also act as a FiniteGroup.
class GroupTable final : public FiniteGroup {
 public:
  GroupTable(int d, std::int64_t p, std::vector<GroupElement> elements,
             TableKind kind);

  int dim() const { return d_; }
  std::int64_t modulus() const { return p_; }
  TableKind kind() const { return kind_; }
  bool is_group() const { return kind_ != TableKind::kDiagSet &&
                                 kind_ != TableKind::kClass &&
                                 kind_ != TableKind::kSubset; }

  std::size_t size() const override { return keys_.size(); }
  std::size_t identity() const override;
  // Throws std::logic_error if the table is not a group.
  std::size_t product(std::size_t i, std::size_t j) const override;
  std::size_t inverse(std::size_t i) const override;

  GroupElement element(std::size_t i) const;
  // kNoIndex when absent.
  std::size_t index_of(const GroupElement& x) const;
  std::size_t index_of_key(std::uint64_t key) const;
  bool contains(const GroupElement& x) const { return index_of(x) != kNoIndex; }

  // Index of element(i) * element(j) in `this`, or kNoIndex if the product
  // leaves the table.  Works for any table kind.
  std::size_t product_or_none(std::size_t i, std::size_t j) const;
  // Index in `this` of the product of element i of `a` and element j of `b`.
  std::size_t product_across(const GroupTable& a, std::size_t i,
                             const GroupTable& b, std::size_t j) const;

  std::span<const std::uint64_t> keys() const { return keys_; }

 private:
  std::uint64_t product_key(const std::uint8_t* x, const std::uint8_t* y) const;
  const std::uint8_t* raw(std::size_t i) const {
    return entries_.data() + i * static_cast<std::size_t>(d_ * d_);
  }

  int d_;
  std::int64_t p_;
  TableKind kind_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> entries_;
  std::vector<std::uint32_t> dense_index_;  // empty when key space too large
  std::vector<std::uint32_t> inverse_;
  std::size_t identity_ = kNoIndex;
};

// prod_{i<d} (p^d - p^i) / (p - 1).
std::uint64_t sl_order_formula(int d, std::int64_t p);

// All of SL_d(F_p).  Requires d in {2,3}, odd prime p, p^(d^2-1) <= budget.
GroupTable enumerate_group(int d, std::int64_t p,
                           std::uint64_t budget = kDefaultGroupBudget);

// Both throw std::invalid_argument when b (resp. a) is not in the table.
GroupTable centralizer(const GroupTable& table, const GroupElement& b);
GroupTable conjugacy_class(const GroupTable& table, const GroupElement& a);

// Upper-triangular and upper-unitriangular subgroups of SL_2(F_p).
GroupTable borel_subgroup(std::int64_t p);
GroupTable unipotent_subgroup(std::int64_t p);

// Elements of SL_2(F_p) with an eigenbasis over F_p: +-I, or tr^2 - 4 a
// nonzero square.
GroupTable diagonalisable_set(std::int64_t p);
bool is_diagonalisable(const GroupElement& x);

// g H g^-1 as a table (kind kConjugateSubgroup).
GroupTable conjugate_subgroup(const GroupTable& h, const GroupElement& g);

// Number of distinct subgroups g H g^-1 for g in `group`.
std::size_t count_distinct_conjugates(const GroupTable& group,
                                      const GroupTable& h);

// psi(a) = [[1, a], [0, 1]].
GroupElement psi(const FieldElement& a);
// pi([[t, a], [0, t^-1]]) = t^-1; throws if x is not upper triangular.
FieldElement pi(const GroupElement& x);

}  // namespace progmix
