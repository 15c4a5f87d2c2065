#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ggr/anneid.hpp"
#include "ggr/check_report.hpp"
#include "ggr/ideals.hpp"

namespace ggr::radical {

using anneid::GammaAnneid;
using grading::GradeId;

struct RqrCertificate {
  ElemId z = 0;
  ElemId alpha = 0;
  bool rqr = true;
  /// On failure: a proper right ideal with z as an alpha-left identity.
  std::optional<ElementSet> ideal;
};

/// Fast route: z is alpha-rqr iff the right ideal generated by
/// witness_requirements(z, alpha) is all of A.
bool is_alpha_rqr_fast(const GammaAnneid& a, ElemId z, ElemId alpha);
/// Definitional scan over the right-ideal lattice, cross-checked against the
/// fast route (InvariantViolation on disagreement). Throws PreconditionError
/// for alpha = 0.
RqrCertificate is_alpha_rqr(const GammaAnneid& a, ElemId z, ElemId alpha, const std::vector<ElementSet>& lattice);
RqrCertificate is_alpha_rqr(const GammaAnneid& a, ElemId z, ElemId alpha,
                            const ideals::EnumerationBounds& bounds = {});
/// alpha-rqr for every alpha.
bool is_rqr(const GammaAnneid& a, ElemId z);
ElementSet rqr_elements(const GammaAnneid& a);
/// Left quasi-regularity, through the opposite anneid.
ElementSet left_rqr_elements(const GammaAnneid& a);

/// z with some power z alpha z alpha ... z = 0 for every alpha.
ElementSet nilpotent_elements(const GammaAnneid& a);

/// Intersection of the maximal right modular ideals (A for an empty family).
ElementSet j_modular(const GammaAnneid& a, const std::vector<ElementSet>& lattice);
/// {x : x alpha a is rqr for all alpha, a}.
ElementSet j_qr(const GammaAnneid& a);
/// J of the local ring at (e, alpha), by the rqr route.
ElementSet local_radical(const GammaAnneid& a, GradeId e, ElemId alpha);
/// {x : xGA n A(e) in J(A(e)) for every alpha-idempotent e}. A(e) is taken
/// with the class of alpha, so each (e, d) pair is visited once.
ElementSet j_local(const GammaAnneid& a);

struct RadicalOptions {
  ideals::EnumerationBounds bounds;
  /// Linearized rings above this size skip the lattice route for J(R).
  std::size_t max_linearized_lattice_carrier = 64;
  /// Linearized rings above this size raise ResourceError.
  std::size_t max_linearized_carrier = 4096;
};

struct LargeRadical {
  ElementSet j_large;                    // J(R) n A, J(R) by the rqr route
  std::optional<ElementSet> j_linearized;  // J(R) n A, J(R) by modular maximal ideals
  std::size_t linearized_size = 0;
};
LargeRadical large_jacobson_radical(const GammaAnneid& a, const RadicalOptions& options = {});

struct Agreement {
  std::string name;
  bool applicable = false;  // theorem-backed for this anneid
  bool agrees = false;
  std::vector<std::string> witness;
};

struct RadicalReport {
  bool right_regular = false;
  bool left_regular = false;
  std::size_t lattice_size = 0;
  ElementSet j_modular;
  ElementSet j_qr;
  ElementSet j_local;
  ElementSet j_large;
  std::optional<ElementSet> j_linearized;
  ElementSet j_left;  // J_modular of the opposite anneid
  bool j_qr_is_ideal = false;
  bool j_qr_quasi_regular = false;
  std::vector<Agreement> agreements;

  /// Every applicable agreement holds.
  bool consistent() const;
  nlohmann::json to_json(const GammaAnneid& a) const;
};

RadicalReport jacobson_radical(const GammaAnneid& a, const RadicalOptions& options = {});

/// Proposition-level dichotomy against the definitional verdict for every
/// (z, alpha).
CheckReport check_regular_rqr_criterion(const GammaAnneid& a, const ideals::EnumerationBounds& bounds = {});

/// I -> I n A(e) and S -> S^ between right modular maximal ideals of grade e
/// (witness in the class of alpha) and those of A(e).
CheckReport correspondence_at_idempotent(const GammaAnneid& a, GradeId e, ElemId alpha,
                                         const ideals::EnumerationBounds& bounds = {});

/// J(A(e)) = J(A) n A(e).
bool check_local_radical(const GammaAnneid& a, GradeId e, ElemId alpha);

/// J(I) = {x in I : xGI in J(A)}, and J(I) = I n J(A) for two-sided I. J(I)
/// is computed on I as a sub-anneid.
bool check_ideal_radical(const GammaAnneid& a, const ElementSet& i);

std::string set_name(const GammaAnneid& a, const ElementSet& s);

}  // namespace ggr::radical
