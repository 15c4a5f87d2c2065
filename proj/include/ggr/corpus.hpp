#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ggr/anneid.hpp"
#include "ggr/gammaring.hpp"

namespace ggr::corpus {

using anneid::GammaAnneid;
using gammaring::FiniteRing;
using gammaring::GradedGammaRing;

/// Finite-dimensional algebra over F_p from products of basis vectors
/// (coefficient vectors of length dim).
FiniteRing algebra_over_fp(int p, int dim, const std::vector<std::vector<std::vector<int>>>& basis_product);

struct NamedRing {
  std::string name;
  FiniteRing ring;
};
/// F2, F3, Z4, F4, F2 x F2, F2[x]/(x^2), F2[x]/(x^3), T2(F2), M2(F2), zero rings...
std::vector<NamedRing> small_rings();

/// Element names for the fixtures, indexed by group id.
struct Named {
  GradedGammaRing ring;
  std::vector<std::string> r_names;
  std::vector<std::string> gamma_names;
};

/// S + I over F2 with I^2 = 0 and si = is = i; Gamma = S.
Named semidirect_f2();
/// 2x2 matrices over F2 graded by the four matrix units, Gamma = diagonal.
Named matrix_m2f2();
/// F2[x]/(x^2) graded by {1} and {x}, viewed as a gamma ring over itself.
Named graded_ring_as_gamma();

GammaAnneid sd3();
GammaAnneid matrix_anneid();
GammaAnneid graded_ring_anneid();
/// {0, a, b} with a, b in different classes, G = {0, g}, all products 0.
GammaAnneid zero_product_abg();
/// M2(F2) trivially graded as a gamma ring over its diagonal: |A| = 16.
GammaAnneid matrix_one_grade();

struct Entry {
  std::string name;
  std::string family;
  GammaAnneid anneid;
};

struct CorpusOptions {
  std::uint64_t seed = 1;
  std::size_t max_a = 8;
  std::size_t max_g = 4;
  std::size_t random_target = 120;
  bool with_opposites = true;
};

/// Ring-derived anneids (every Krasner graduation making the ring graded,
/// with Gamma = R or a homogeneous subgroup), seeded random F_p tables kept
/// when they pass verify_anneid, and opposites. Deduplicated, deterministic.
std::vector<Entry> generate_corpus(const CorpusOptions& options = {});

struct Mutation {
  std::string name;
  std::string fixture;
  ElemId x = 0, alpha = 0, y = 0;
  ElemId old_value = 0, new_value = 0;
  Named mutated;
};
/// 20 single-entry changes of the fixtures' triple tables.
std::vector<Mutation> fixture_mutations();

}  // namespace ggr::corpus
