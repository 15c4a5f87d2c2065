#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ggr/element_set.hpp"

namespace ggr::finabel {

/// Value-level element: one residue per cyclic factor.
struct GroupElement {
  std::vector<int> residues;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// A set of element ids that contains zero and is closed under + and -.
using Subgroup = ElementSet;

/// Product of cyclic groups Z_{n_1} x ... x Z_{n_k}. Elements are indexed by
/// dense ids in mixed radix (first factor most significant); id 0 is zero.
/// The empty product is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }

  ElemId zero() const { return 0; }
  ElemId add(ElemId x, ElemId y) const;
  ElemId neg(ElemId x) const;
  ElemId sub(ElemId x, ElemId y) const { return add(x, neg(y)); }
  ElemId multiple(long long n, ElemId x) const;
  std::size_t order_of(ElemId x) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;

  /// Reduces each residue modulo its factor. Throws StructuralError on a
  /// dimension mismatch.
  ElemId encode(const std::vector<int>& residues) const;
  ElemId encode(const GroupElement& e) const { return encode(e.residues); }
  GroupElement decode(ElemId id) const;
  /// "(r1,r2,...)"; the trivial group's only element prints as "()".
  std::string element_name(ElemId id) const;
  /// "Z2 x Z4", or "1" for the trivial group.
  std::string describe() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<int> orders_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

Subgroup subgroup_generate(const FiniteAbelianGroup& g, const ElementSet& gens);
bool is_subgroup(const FiniteAbelianGroup& g, const ElementSet& s);

inline constexpr std::size_t kDefaultSubgroupBound = 64;

/// Every subgroup exactly once, sorted canonically. Throws ResourceError
/// when |G| exceeds `bound`.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::size_t bound = kDefaultSubgroupBound);

/// True iff the orders of `parts` multiply to |G| and the sum map from the
/// product of the parts is injective.
bool is_internal_direct_sum(const FiniteAbelianGroup& g, const std::vector<Subgroup>& parts);

/// Basis of an abstract finite abelian group on ids [0, n) with identity 0.
struct CyclicDecomposition {
  std::vector<int> orders;      // order of each basis element
  std::vector<ElemId> basis;    // basis element ids
  std::vector<ElemId> to_group; // abstract id -> id in FiniteAbelianGroup(orders)
  std::vector<ElemId> from_group;
};

/// Finds a basis (largest orders first) by backtracking. Throws
/// StructuralError if `add` does not describe an abelian group.
CyclicDecomposition cyclic_decomposition(std::size_t n,
                                         const std::function<ElemId(ElemId, ElemId)>& add);

}  // namespace ggr::finabel
