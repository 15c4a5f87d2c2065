#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggr/check_report.hpp"
#include "ggr/finabel.hpp"
#include "ggr/grading.hpp"

namespace ggr::gammaring {

using finabel::FiniteAbelianGroup;
using finabel::Subgroup;
using grading::GradeId;
using grading::Graduation;

/// Finite (not necessarily unital) ring given by its additive group and a
/// multiplication table indexed x * |R| + y.
struct FiniteRing {
  FiniteAbelianGroup group;
  std::vector<ElemId> mul;

  ElemId multiply(ElemId x, ElemId y) const { return mul[x * group.size() + y]; }
  /// Distributivity on both sides and associativity.
  CheckReport verify() const;
  static FiniteRing zero_ring(FiniteAbelianGroup g);
  /// Z_n with the usual multiplication.
  static FiniteRing integers_mod(int n);
};

/// Additive group M with a left action L x M -> M and a right action M x R -> M.
struct Bimodule {
  FiniteAbelianGroup group;
  std::vector<ElemId> left;   // index l * |M| + m
  std::vector<ElemId> right;  // index m * |R| + r
};

/// Finite Gamma-ring. `triple` is indexed (x * |Gamma| + a) * |R| + y;
/// `cotriple`, when present (Nobusawa), is indexed (a * |R| + x) * |Gamma| + b.
class GammaRing {
 public:
  GammaRing(FiniteAbelianGroup r, FiniteAbelianGroup gamma, std::vector<ElemId> triple,
            std::optional<std::vector<ElemId>> cotriple = std::nullopt);

  const FiniteAbelianGroup& r() const { return r_; }
  const FiniteAbelianGroup& gamma() const { return gamma_; }
  bool is_nobusawa() const { return cotriple_.has_value(); }

  ElemId product(ElemId x, ElemId a, ElemId y) const {
    return triple_[(x * gamma_.size() + a) * r_.size() + y];
  }
  ElemId coproduct(ElemId a, ElemId x, ElemId b) const {
    return (*cotriple_)[(a * r_.size() + x) * gamma_.size() + b];
  }
  const std::vector<ElemId>& triple_table() const { return triple_; }
  const std::optional<std::vector<ElemId>>& cotriple_table() const { return cotriple_; }

  friend bool operator==(const GammaRing&, const GammaRing&) = default;

 private:
  FiniteAbelianGroup r_;
  FiniteAbelianGroup gamma_;
  std::vector<ElemId> triple_;
  std::optional<std::vector<ElemId>> cotriple_;
};

/// Tri-additivity, associativity, and (for Nobusawa rings) mixed
/// associativity, cotriple additivity and faithfulness.
CheckReport verify_gamma_ring(const GammaRing& g);

/// Induced grade operations. Entries for triples whose product set is {0}
/// are the zero grade.
struct GradeTernaryTable {
  int r_grades = 0;      // strict grades of R
  int gamma_grades = 0;  // strict grades of Gamma
  std::vector<GradeId> triple;                  // (xi, d, eta)
  std::optional<std::vector<GradeId>> cotriple;  // (s, delta, t)

  GradeId at(GradeId xi, GradeId d, GradeId eta) const {
    return triple[static_cast<std::size_t>((xi * (gamma_grades + 1) + d) * (r_grades + 1) + eta)];
  }
  GradeId co_at(GradeId s, GradeId delta, GradeId t) const {
    return (*cotriple)[static_cast<std::size_t>((s * (r_grades + 1) + delta) * (gamma_grades + 1) + t)];
  }
};

struct GradedGammaRing {
  GammaRing ring;
  Graduation grad_r;
  Graduation grad_gamma;
};

struct GradedCheck {
  CheckReport report;
  std::optional<GradeTernaryTable> table;  // present iff the report passed
};

/// Containment of every product set R_xi Gamma_d R_eta in one component
/// (and Gamma_s R_delta Gamma_t for Nobusawa rings).
GradedCheck verify_graded(const GradedGammaRing& g);

/// Throws PreconditionError if the product set of this grade triple does not
/// lie in a single component.
GradeId grade_ternary(const GradedGammaRing& g, GradeId xi, GradeId d, GradeId eta);

/// Element-level form: AGA in A and grades of nonzero products constant on
/// grade triples (likewise GAG in G for Nobusawa rings).
CheckReport lemma_consistency_check(const GradedGammaRing& g);

struct MoritaContext {
  FiniteRing r;
  FiniteRing s;
  Bimodule v;               // (R, S)-bimodule
  Bimodule w;               // (S, R)-bimodule
  std::vector<ElemId> vw;   // V x W -> R, index v * |W| + w
  std::vector<ElemId> wv;   // W x V -> S, index w * |V| + v
};

/// 2x2 generalized matrix ring over the context, Gamma = diag(R, S).
/// Group factors are ordered R, V, W, S. Throws StructuralError with the
/// violated instance when the context equations fail.
GradedGammaRing build_generalized_matrix_ring(const MoritaContext& m);

struct SemidirectSpec {
  FiniteRing s;
  FiniteRing i;
  std::vector<ElemId> s_on_i;  // S x I -> I, index s * |I| + i
  std::vector<ElemId> i_on_s;  // I x S -> I, index i * |S| + s
};

/// R = S + I with Gamma = S. Group factors are ordered S, I.
GradedGammaRing build_semidirect_sum(const SemidirectSpec& spec);

/// Gamma = R with the same graduation and the Nobusawa cotriple a x b.
/// Throws StructuralError if the ring is not Krasner graded.
GradedGammaRing gamma_from_graded_ring(const FiniteRing& ring, const Graduation& grad);

/// Gamma-ring R with Gamma a subgroup of R acting by ring multiplication.
/// `gamma_ids` lists the subgroup's elements in the order of `gamma_group`.
GammaRing gamma_ring_from_subgroup(const FiniteRing& ring, const FiniteAbelianGroup& gamma_group,
                                   const std::vector<ElemId>& gamma_ids);

}  // namespace ggr::gammaring
