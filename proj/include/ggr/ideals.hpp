#pragma once

#include <optional>
#include <vector>

#include "ggr/anneid.hpp"

namespace ggr::ideals {

using anneid::GammaAnneid;
using grading::GradeId;

enum class Side { Right, Left, TwoSided };

/// Closure conditions: 0 in S, x#y => x-y in S, and xGA / AGx in S per side.
bool is_ideal(const GammaAnneid& a, const ElementSet& s, Side side);
inline bool is_right_ideal(const GammaAnneid& a, const ElementSet& s) { return is_ideal(a, s, Side::Right); }

/// Smallest ideal of the given side containing `seeds`.
ElementSet generated_ideal(const GammaAnneid& a, const ElementSet& seeds, Side side);

/// Integer multiples of x (all inside the addibility class of x).
ElementSet cyclic_multiples(const GammaAnneid& a, ElemId x);

/// Za + aGA (right), Za + AGa (left), Za + aGA + AGa + AGaGA (two-sided),
/// with sums taken over addible pairs.
ElementSet principal_formula(const GammaAnneid& a, ElemId x, Side side);
/// Smallest ideal containing x. Equals principal_formula whenever the
/// formula set is already closed.
ElementSet principal_ideal(const GammaAnneid& a, ElemId x, Side side);
inline ElementSet principal_right(const GammaAnneid& a, ElemId x) { return principal_ideal(a, x, Side::Right); }
inline ElementSet principal_left(const GammaAnneid& a, ElemId x) { return principal_ideal(a, x, Side::Left); }
inline ElementSet principal_two_sided(const GammaAnneid& a, ElemId x) { return principal_ideal(a, x, Side::TwoSided); }

/// {x + y : x in I, y in J, x#y}.
ElementSet ideal_sum(const GammaAnneid& a, const ElementSet& i, const ElementSet& j);
ElementSet ideal_intersection(const ElementSet& i, const ElementSet& j);

struct EnumerationBounds {
  std::size_t max_carrier = 24;
  std::size_t max_ideals = 8192;
};

/// All ideals of one side, ordered by size and then members. Throws
/// ResourceError when a bound is exceeded.
std::vector<ElementSet> enumerate_ideals(const GammaAnneid& a, Side side, const EnumerationBounds& bounds = {});
inline std::vector<ElementSet> enumerate_right_ideals(const GammaAnneid& a, const EnumerationBounds& bounds = {}) {
  return enumerate_ideals(a, Side::Right, bounds);
}

struct Factor {
  GammaAnneid anneid;
  std::vector<ElemId> projection;      // A id -> A/I id
  std::vector<ElemId> representative;  // A/I id -> smallest A id
};
/// A/I for a two-sided ideal I (plain anneid). Throws PreconditionError if I
/// is not two-sided, InvariantViolation if the product is not well defined.
Factor factor_anneid(const GammaAnneid& a, const ElementSet& i);

/// u is an alpha-left identity modulo I.
struct ModularityWitness {
  ElemId u = 0;
  ElemId alpha = 0;
  friend bool operator==(const ModularityWitness&, const ModularityWitness&) = default;
};

/// For every a: a, u alpha a in I, or a # u alpha a and a - u alpha a in I.
bool is_witness(const GammaAnneid& a, const ElementSet& i, ModularityWitness w);
/// The elements that must lie in I for (u, alpha) to be a witness:
/// a - u alpha a when addible, otherwise both a and u alpha a.
ElementSet witness_requirements(const GammaAnneid& a, ModularityWitness w);

std::vector<ModularityWitness> modularity_witnesses(const GammaAnneid& a, const ElementSet& i);
std::optional<ModularityWitness> find_modularity(const GammaAnneid& a, const ElementSet& i);

struct ModularIdeal {
  ElementSet ideal;
  ModularityWitness witness;
};
/// Maximal proper right ideals admitting a witness, from a given lattice.
std::vector<ModularIdeal> maximal_right_modular_ideals(const GammaAnneid& a, const std::vector<ElementSet>& lattice);
std::vector<ModularIdeal> maximal_right_modular_ideals(const GammaAnneid& a, const EnumerationBounds& bounds = {});

/// Common grade of all left identities modulo a proper right modular ideal.
/// Throws PreconditionError if I is not proper and modular or if the grades
/// differ (only possible without regularity).
GradeId grade_of_modular_ideal(const GammaAnneid& a, const ElementSet& i);

/// (I : A) = {a : A G a in I}.
ElementSet colon_anneid(const GammaAnneid& a, const ElementSet& i);

}  // namespace ggr::ideals
