#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggr/check_report.hpp"
#include "ggr/gammaring.hpp"
#include "ggr/grading.hpp"

namespace ggr::anneid {

using grading::GradeId;
using grading::Homogroupoid;
using grading::kZeroGrade;

/// Homogeneous aspect of a graded gamma ring: homogroupoids A and G with a
/// total product A x G x A -> A (indexed (x * |G| + a) * |A| + y) and, for
/// anneids of Nobusawa, G x A x G -> G (indexed (a * |A| + x) * |G| + b).
class GammaAnneid {
 public:
  /// Marks a grade triple whose nonzero products land in different grades.
  static constexpr GradeId kInconsistentGrade = -1;

  GammaAnneid(Homogroupoid a, Homogroupoid g, std::vector<ElemId> triple,
              std::optional<std::vector<ElemId>> cotriple = std::nullopt);

  const Homogroupoid& A() const { return a_; }
  const Homogroupoid& G() const { return g_; }
  std::size_t size() const { return a_.size(); }
  bool is_nobusawa() const { return cotriple_.has_value(); }

  ElemId product(ElemId x, ElemId alpha, ElemId y) const {
    return triple_[(x * g_.size() + alpha) * a_.size() + y];
  }
  ElemId coproduct(ElemId alpha, ElemId x, ElemId beta) const {
    return (*cotriple_)[(alpha * a_.size() + x) * g_.size() + beta];
  }
  const std::vector<ElemId>& triple_table() const { return triple_; }
  const std::optional<std::vector<ElemId>>& cotriple_table() const { return cotriple_; }

  int grade_count() const { return a_.grade_count(); }
  int gamma_grade_count() const { return g_.grade_count(); }
  GradeId grade(ElemId x) const { return a_.grade_of(x); }
  GradeId gamma_grade(ElemId alpha) const { return g_.grade_of(alpha); }

  /// Induced operation xi d eta on grades (zero grade when every product is 0).
  GradeId grade_table(GradeId xi, GradeId d, GradeId eta) const {
    return grade_table_[static_cast<std::size_t>((xi * (gamma_grade_count() + 1) + d) * (grade_count() + 1) + eta)];
  }

  /// x alpha y -> y alpha x (and alpha x beta -> beta x alpha).
  GammaAnneid opposite() const;

  friend bool operator==(const GammaAnneid& l, const GammaAnneid& r) {
    return l.a_ == r.a_ && l.g_ == r.g_ && l.triple_ == r.triple_ && l.cotriple_ == r.cotriple_;
  }

 private:
  Homogroupoid a_;
  Homogroupoid g_;
  std::vector<ElemId> triple_;
  std::optional<std::vector<ElemId>> cotriple_;
  std::vector<GradeId> grade_table_;
};

/// Anneid with every product zero.
GammaAnneid zero_product_anneid(Homogroupoid a, Homogroupoid g);

/// Sub-anneid on subsets of A and G closed under the products. Maps are new
/// id -> old id.
struct SubAnneid {
  GammaAnneid anneid;
  std::vector<ElemId> a_map;
  std::vector<ElemId> g_map;
};
SubAnneid restrict_anneid(const GammaAnneid& a, const ElementSet& a_subset, const ElementSet& g_subset);

/// Homogroupoid axioms for A and G, then i)-iv) with the Nobusawa clauses
/// gated on the cotriple, plus grade coherence.
CheckReport verify_anneid(const GammaAnneid& a);

struct SemihomogeneousQuadruple {
  gammaring::GammaRing ring;
  ElementSet a;  // subset of R
  ElementSet g;  // subset of Gamma
};
CheckReport verify_semihomogeneous(const SemihomogeneousQuadruple& q);
/// The graded gamma ring whose graduations have homogeneous parts q.a, q.g.
/// Throws StructuralError when they are not homogeneous parts.
gammaring::GradedGammaRing graded_from_semihomogeneous(const SemihomogeneousQuadruple& q);

struct HomogeneousView {
  GammaAnneid anneid;
  std::vector<ElemId> a_to_r;
  std::vector<ElemId> g_to_gamma;
};
/// Throws PreconditionError unless verify_graded passes. Optional name
/// tables (indexed by group id) label the carrier elements.
HomogeneousView anneid_from_graded(const gammaring::GradedGammaRing& g,
                                   const std::vector<std::string>* r_names = nullptr,
                                   const std::vector<std::string>* gamma_names = nullptr);

struct LinearizedAnneid {
  gammaring::GradedGammaRing ring;
  std::vector<ElemId> embed_a;  // A id -> R id
  std::vector<ElemId> embed_g;  // G id -> Gamma id
};
/// Throws StructuralError unless verify_anneid passes.
LinearizedAnneid linearize_anneid(const GammaAnneid& a);

/// Trivially graded view of a gamma ring: A = R, G = Gamma, one grade each.
GammaAnneid one_grade_view(const gammaring::GammaRing& g);

struct AnneidIsomorphism {
  std::vector<ElemId> a_map;
  std::vector<ElemId> g_map;
};
/// Checks that the given maps form an isomorphism.
bool is_isomorphism(const GammaAnneid& from, const GammaAnneid& to, const AnneidIsomorphism& f);
/// Backtracking search over grade-preserving bijections.
std::optional<AnneidIsomorphism> find_isomorphism(const GammaAnneid& from, const GammaAnneid& to);

/// linearize_anneid(anneid_from_graded(g)) is weakly equivalent to g through
/// the additive extension of the inclusion of homogeneous parts.
bool linearization_roundtrip(const gammaring::GradedGammaRing& g);

/// grade_table(e, d(alpha), e) == e. Throws PreconditionError for alpha = 0.
bool is_alpha_idempotent(const GammaAnneid& a, GradeId e, ElemId alpha);

/// A(e) with the addibility class of alpha as its gamma set; one grade each.
/// Throws PreconditionError unless e is an alpha-idempotent.
SubAnneid local_ring_at(const GammaAnneid& a, GradeId e, ElemId alpha);

enum class Side { Left, Right, Both };
bool is_regular(const GammaAnneid& a, Side side);

}  // namespace ggr::anneid
