#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggr/check_report.hpp"
#include "ggr/element_set.hpp"
#include "ggr/finabel.hpp"

namespace ggr::grading {

using finabel::FiniteAbelianGroup;
using finabel::Subgroup;

/// Grade 0 is the zero grade; strict grades are 1..grade_count().
using GradeId = int;
inline constexpr GradeId kZeroGrade = 0;

/// A Krasner graduation in its proper form: component 0 is {0}, components
/// 1..k are the nontrivial summands, ordered by smallest nonzero member.
class Graduation {
 public:
  /// Builds the trivial graduation (one strict component = G, or none if G = 1).
  explicit Graduation(FiniteAbelianGroup group);
  /// Trivial parts are dropped. Throws StructuralError unless the parts are
  /// subgroups forming an internal direct sum of `group`.
  Graduation(FiniteAbelianGroup group, std::vector<Subgroup> parts);

  const FiniteAbelianGroup& group() const { return group_; }
  int grade_count() const { return static_cast<int>(components_.size()) - 1; }
  const Subgroup& component(GradeId g) const { return components_.at(static_cast<std::size_t>(g)); }
  std::vector<Subgroup> strict_components() const {
    return {components_.begin() + 1, components_.end()};
  }
  /// Grade of a homogeneous element, kZeroGrade for 0, nullopt otherwise.
  std::optional<GradeId> grade_of(ElemId x) const;
  /// Component of x in each grade (index = GradeId, entry 0 is always 0).
  const std::vector<ElemId>& decompose(ElemId x) const { return decomposition_.at(x); }

  friend bool operator==(const Graduation& a, const Graduation& b) {
    return a.group_ == b.group_ && a.components_ == b.components_;
  }

 private:
  void finish();

  FiniteAbelianGroup group_;
  std::vector<Subgroup> components_;
  std::vector<int> grade_of_;  // -1 for non-homogeneous
  std::vector<std::vector<ElemId>> decomposition_;
};

/// Weak equivalence: the same set of strict components.
bool weakly_equivalent(const Graduation& a, const Graduation& b);

struct HomogeneousPart {
  ElementSet carrier;
  std::vector<GradeId> grade_of;  // indexed by group id, -1 off the carrier
};

HomogeneousPart homogeneous_part(const Graduation& g);

/// Finite commutative partial groupoid with distinguished zero at id 0.
/// `addible` is the relation #, `sum` holds x+y or kUndefined.
class Homogroupoid {
 public:
  static constexpr ElemId kUndefined = 0xFFFFFFFFu;

  Homogroupoid();  // the one-element homogroupoid {0}
  Homogroupoid(std::vector<std::string> names, std::vector<char> addible, std::vector<ElemId> sum);

  /// Carrier = {0} followed by the nonzero members of `subset` in id order,
  /// with the addition induced from `group`. `map_out` receives carrier -> group ids.
  static Homogroupoid from_subset(const FiniteAbelianGroup& group, const ElementSet& subset,
                                  std::vector<ElemId>* map_out = nullptr,
                                  const std::vector<std::string>* names = nullptr);
  static Homogroupoid from_graduation(const Graduation& g, std::vector<ElemId>* map_out = nullptr,
                                      const std::vector<std::string>* names = nullptr);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElemId x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElemId> find(const std::string& name) const;

  bool addible(ElemId x, ElemId y) const { return addible_[x * size() + y] != 0; }
  ElemId sum(ElemId x, ElemId y) const { return sum_[x * size() + y]; }
  /// The y with x#y and x+y = 0, or kUndefined.
  ElemId neg(ElemId x) const { return neg_.at(x); }
  /// x - y for addible x, y (kUndefined otherwise).
  ElemId difference(ElemId x, ElemId y) const;

  /// Addibility classes among nonzero elements. Meaningful once
  /// verify_homogroupoid passes.
  int grade_count() const { return static_cast<int>(classes_.size()) - 1; }
  GradeId grade_of(ElemId x) const { return grade_of_.at(x); }
  /// Members of the class (including 0); grade 0 gives {0}.
  const ElementSet& grade_class(GradeId g) const { return classes_.at(static_cast<std::size_t>(g)); }

  /// Integer multiples n*x inside the class of x.
  ElemId multiple(long long n, ElemId x) const;

  friend bool operator==(const Homogroupoid& a, const Homogroupoid& b) {
    return a.names_ == b.names_ && a.addible_ == b.addible_ && a.sum_ == b.sum_;
  }

 private:
  void derive();

  std::vector<std::string> names_;
  std::vector<char> addible_;
  std::vector<ElemId> sum_;
  std::vector<ElemId> neg_;
  std::vector<GradeId> grade_of_;
  std::vector<ElementSet> classes_;
};

/// Quotient of a homogroupoid by K (K must meet every class in a subgroup).
/// Elements of the result are 0 and the nonzero cosets x + K_delta.
struct Quotient {
  Homogroupoid carrier;
  std::vector<ElemId> projection;   // source id -> quotient id
  std::vector<ElemId> representative;  // quotient id -> smallest source id
};
Quotient quotient(const Homogroupoid& h, const ElementSet& k);

/// Sub-homogroupoid on `subset` (which must contain 0 and be closed under
/// addible sums). `map_out` receives new id -> old id.
Homogroupoid subhomogroupoid(const Homogroupoid& h, const ElementSet& subset,
                             std::vector<ElemId>* map_out = nullptr);

/// Conditions i)-vi) for a subset H of an abelian group (additive form).
CheckReport verify_homogeneous_part_axioms(const FiniteAbelianGroup& g, const ElementSet& h);
/// The graduation whose strict components are the sets {x in H : a + x in H}.
/// Throws StructuralError if those sets do not form a graduation.
Graduation graduation_from_homogeneous_part(const FiniteAbelianGroup& g, const ElementSet& h);

/// Conditions i)-iv) of the homogroupoid characterization, plus commutativity
/// and "sum defined exactly on addible pairs".
CheckReport verify_homogroupoid(const Homogroupoid& h);

struct Linearization {
  FiniteAbelianGroup group;
  Graduation graduation;
  std::vector<ElemId> embed;  // homogroupoid id -> group id; grade i maps into component i
};
/// Throws StructuralError if the homogroupoid axioms fail.
Linearization linearize(const Homogroupoid& h);
bool roundtrip_check(const Homogroupoid& h);

struct PartialMap {
  const Homogroupoid* source = nullptr;
  const Homogroupoid* target = nullptr;
  std::vector<ElemId> value;
};
/// Conditions "quasihomomorphism" and "homomorphism".
CheckReport verify_homomorphism(const PartialMap& f);

inline constexpr std::size_t kDefaultGraduationBound = 64;
/// All strict graduations of G up to equivalence, canonically ordered.
std::vector<Graduation> enumerate_graduations(const FiniteAbelianGroup& g,
                                              std::size_t bound = kDefaultGraduationBound);

}  // namespace ggr::grading
