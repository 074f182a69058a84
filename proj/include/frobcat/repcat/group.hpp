#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace frobcat {

using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Finite group given by its multiplication table; table[a][b] = index of a·b.
class Group {
 public:
  /// Validates closure, identity, inverses and associativity; throws
  /// MalformedInput otherwise.
  explicit Group(CayleyTable table);

  static Group trivial();
  static Group cyclic(std::size_t n);
  /// Direct product; element (a, b) has index a·|right| + b.
  static Group product(const Group& left, const Group& right);
  /// S_n with permutations enumerated lexicographically.
  static Group symmetric(std::size_t n);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const CayleyTable& table() const { return table_; }

  bool is_central(std::size_t a) const;
  bool is_subgroup(const std::vector<std::size_t>& elements) const;
  /// Sorted element list of the subgroup generated by `generators`.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& generators) const;
  /// The subgroup as a group in its own right; element i of the result is
  /// elements[i] here.
  Group subgroup(const std::vector<std::size_t>& elements) const;

  friend bool operator==(const Group& a, const Group& b) { return a.table_ == b.table_; }

 private:
  CayleyTable table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Left coset decomposition G = ⊔ r_c·K for K ≤ G, with r_0 the identity.
class CosetDecomposition {
 public:
  /// `embedding[i]` is the image in `group` of element i of the subgroup.
  CosetDecomposition(const Group& group, std::vector<std::size_t> embedding);

  std::size_t count() const { return reps_.size(); }
  std::size_t rep(std::size_t c) const { return reps_[c]; }
  /// For g·r_c = r_{c'}·k returns (c', index of k in the subgroup).
  std::pair<std::size_t, std::size_t> act(std::size_t g, std::size_t c) const;
  const std::vector<std::size_t>& embedding() const { return embedding_; }

 private:
  Group group_;
  std::vector<std::size_t> embedding_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> coset_of_;      // element -> coset index
  std::vector<std::size_t> sub_index_of_;  // element of G -> subgroup index, or npos
};

}  // namespace frobcat
