#pragma once

#include <optional>
#include <vector>

#include "ggr/anneid.hpp"
#include "ggr/check_report.hpp"

namespace ggr::moduloid {

using anneid::GammaAnneid;
using grading::GradeId;
using grading::Homogroupoid;

/// Right AG-moduloid: abelian homogroupoid M with a total action
/// M x G x A -> M indexed (w * |G| + alpha) * |A| + x.
class Moduloid {
 public:
  static constexpr GradeId kInconsistentGrade = -1;

  Moduloid(Homogroupoid m, GammaAnneid over, std::vector<ElemId> action);
  /// A as a right moduloid over itself.
  static Moduloid of_anneid(const GammaAnneid& a);

  const Homogroupoid& M() const { return m_; }
  const GammaAnneid& over() const { return over_; }
  std::size_t size() const { return m_.size(); }
  ElemId act(ElemId w, ElemId alpha, ElemId x) const {
    return action_[(w * over_.G().size() + alpha) * over_.size() + x];
  }
  const std::vector<ElemId>& action_table() const { return action_; }

  int grade_count() const { return m_.grade_count(); }
  GradeId grade(ElemId w) const { return m_.grade_of(w); }
  /// External grade product xi d eta.
  GradeId grade_table(GradeId xi, GradeId d, GradeId eta) const;

 private:
  Homogroupoid m_;
  GammaAnneid over_;
  std::vector<ElemId> action_;
  std::vector<GradeId> grade_table_;
};

/// M homogroupoid axioms, i)-iii), MGA in M and grade coherence.
CheckReport verify_moduloid(const Moduloid& m);

/// 0 != x alpha a # x beta b != 0 implies alpha # beta and a # b.
bool is_regular_moduloid(const Moduloid& m);

bool is_submoduloid(const Moduloid& m, const ElementSet& n);
ElementSet generated_submoduloid(const Moduloid& m, const ElementSet& seeds);
/// All submoduloids ordered by size and members. Throws ResourceError when
/// more than `max_count` are found.
std::vector<ElementSet> enumerate_submoduloids(const Moduloid& m, std::size_t max_count = 8192);

/// x alpha A and x G A as sets.
ElementSet x_alpha_a(const Moduloid& m, ElemId x, ElemId alpha);
ElementSet x_g_a(const Moduloid& m, ElemId x);

/// MGA != {0} and the only submoduloids are {0} and M. The strict generator
/// criterion (every nonzero x generates M from xGA) is computed alongside;
/// disagreement throws InvariantViolation.
bool is_irreducible(const Moduloid& m);

/// x with x alpha A = M.
ElementSet alpha_strict_generators(const Moduloid& m, ElemId alpha);
/// x with x alpha A = M for every nonzero alpha.
ElementSet strict_generators(const Moduloid& m);
bool is_alpha_strictly_cyclic(const Moduloid& m, ElemId alpha);
bool is_strictly_cyclic(const Moduloid& m);

/// (N : S) = {a in A : S G a in N}.
ElementSet quotient_ideal(const Moduloid& m, const ElementSet& n, const ElementSet& s);
/// (0 : M).
ElementSet annihilator(const Moduloid& m);
/// (0 : x)_alpha = {a : x alpha a = 0}.
ElementSet annihilator_at(const Moduloid& m, ElemId x, ElemId alpha);

struct FactorModuloid {
  Moduloid moduloid;
  std::vector<ElemId> projection;
  std::vector<ElemId> representative;
};
/// M/N. Throws PreconditionError unless N is a submoduloid.
FactorModuloid factor_moduloid(const Moduloid& m, const ElementSet& n);
/// A/I as a right moduloid for a right ideal I.
FactorModuloid factor_by_right_ideal(const GammaAnneid& a, const ElementSet& i);

/// a + (0:x)_alpha -> x alpha a is a moduloid isomorphism of A/(0:x)_alpha
/// onto x alpha A.
bool check_cyclic_isomorphism(const Moduloid& m, ElemId x, ElemId alpha);

}  // namespace ggr::moduloid
