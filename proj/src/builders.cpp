#include <array>

#include "ggr/errors.hpp"
#include "ggr/gammaring.hpp"

namespace ggr::gammaring {

namespace {

std::vector<int> concat(std::initializer_list<const FiniteAbelianGroup*> gs) {
  std::vector<int> out;
  for (const auto* g : gs) out.insert(out.end(), g->cyclic_orders().begin(), g->cyclic_orders().end());
  return out;
}

// Splits ids of a product group into ids of its blocks and back.
class BlockCodec {
 public:
  BlockCodec(std::vector<const FiniteAbelianGroup*> blocks, const FiniteAbelianGroup& whole)
      : blocks_(std::move(blocks)), whole_(whole) {}

  std::vector<ElemId> split(ElemId id) const {
    auto r = whole_.decode(id).residues;
    std::vector<ElemId> out;
    std::size_t pos = 0;
    for (const auto* b : blocks_) {
      std::vector<int> part(r.begin() + static_cast<long>(pos), r.begin() + static_cast<long>(pos + b->rank()));
      out.push_back(b->encode(part));
      pos += b->rank();
    }
    return out;
  }

  ElemId join(const std::vector<ElemId>& parts) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      auto p = blocks_[i]->decode(parts[i]).residues;
      r.insert(r.end(), p.begin(), p.end());
    }
    return whole_.encode(r);
  }

  Subgroup block_subgroup(std::size_t k) const {
    Subgroup s(whole_.size());
    std::vector<ElemId> parts(blocks_.size(), 0);
    for (ElemId x = 0; x < blocks_[k]->size(); ++x) {
      parts[k] = x;
      s.insert(join(parts));
    }
    return s;
  }

 private:
  std::vector<const FiniteAbelianGroup*> blocks_;
  const FiniteAbelianGroup& whole_;
};

void require_table(const std::vector<ElemId>& t, std::size_t size, std::size_t range, const char* what) {
  if (t.size() != size) throw StructuralError(std::string(what) + ": table has wrong size");
  for (ElemId v : t)
    if (v >= range) throw StructuralError(std::string(what) + ": value out of range");
}

void require_ring(const FiniteRing& ring, const std::string& what) {
  auto rep = ring.verify();
  if (!rep.passed()) throw StructuralError(what + " fails ring axioms\n" + rep.to_text());
}

std::vector<ElemId> triple_from_ring(const FiniteRing& ring, const std::vector<ElemId>& gamma_ids) {
  const std::size_t n = ring.group.size(), m = gamma_ids.size();
  std::vector<ElemId> t(n * m * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId a = 0; a < m; ++a) {
      ElemId xa = ring.multiply(x, gamma_ids[a]);
      for (ElemId y = 0; y < n; ++y) t[(x * m + a) * n + y] = ring.multiply(xa, y);
    }
  return t;
}

}  // namespace

GammaRing gamma_ring_from_subgroup(const FiniteRing& ring, const FiniteAbelianGroup& gamma_group,
                                   const std::vector<ElemId>& gamma_ids) {
  if (gamma_ids.size() != gamma_group.size()) throw StructuralError("gamma embedding has wrong size");
  return GammaRing(ring.group, gamma_group, triple_from_ring(ring, gamma_ids));
}

GradedGammaRing build_generalized_matrix_ring(const MoritaContext& m) {
  const auto &R = m.r.group, &S = m.s.group, &V = m.v.group, &W = m.w.group;
  require_ring(m.r, "R");
  require_ring(m.s, "S");
  require_table(m.v.left, R.size() * V.size(), V.size(), "R x V -> V");
  require_table(m.v.right, V.size() * S.size(), V.size(), "V x S -> V");
  require_table(m.w.left, S.size() * W.size(), W.size(), "S x W -> W");
  require_table(m.w.right, W.size() * R.size(), W.size(), "W x R -> W");
  require_table(m.vw, V.size() * W.size(), R.size(), "V x W -> R");
  require_table(m.wv, W.size() * V.size(), S.size(), "W x V -> S");

  FiniteAbelianGroup whole(concat({&R, &V, &W, &S}));
  BlockCodec codec({&R, &V, &W, &S}, whole);
  const std::size_t n = whole.size();
  std::vector<std::array<ElemId, 4>> parts(n);
  for (ElemId x = 0; x < n; ++x) {
    auto p = codec.split(x);
    parts[x] = {p[0], p[1], p[2], p[3]};
  }
  std::vector<ElemId> mul(n * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      auto [r, v, w, s] = parts[x];
      auto [r1, v1, w1, s1] = parts[y];
      ElemId rr = R.add(m.r.multiply(r, r1), m.vw[v * W.size() + w1]);
      ElemId vv = V.add(m.v.left[r * V.size() + v1], m.v.right[v * S.size() + s1]);
      ElemId ww = W.add(m.w.right[w * R.size() + r1], m.w.left[s * W.size() + w1]);
      ElemId ss = S.add(m.wv[w * V.size() + v1], m.s.multiply(s, s1));
      mul[x * n + y] = codec.join({rr, vv, ww, ss});
    }
  FiniteRing ring{whole, std::move(mul)};
  auto rep = ring.verify();
  if (!rep.passed())
    throw StructuralError("Morita context equations fail (matrix ring not associative/distributive)\n" +
                          rep.to_text());

  FiniteAbelianGroup gamma(concat({&R, &S}));
  BlockCodec gcodec({&R, &S}, gamma);
  std::vector<ElemId> gamma_ids(gamma.size());
  for (ElemId a = 0; a < gamma.size(); ++a) {
    auto p = gcodec.split(a);
    gamma_ids[a] = codec.join({p[0], 0, 0, p[1]});
  }
  GammaRing gr(whole, gamma, triple_from_ring(ring, gamma_ids));
  Graduation grad_r(whole, {codec.block_subgroup(0), codec.block_subgroup(1), codec.block_subgroup(2),
                            codec.block_subgroup(3)});
  Graduation grad_g(gamma, {gcodec.block_subgroup(0), gcodec.block_subgroup(1)});
  return {std::move(gr), std::move(grad_r), std::move(grad_g)};
}

GradedGammaRing build_semidirect_sum(const SemidirectSpec& spec) {
  const auto &S = spec.s.group, &I = spec.i.group;
  require_ring(spec.s, "S");
  require_ring(spec.i, "I");
  require_table(spec.s_on_i, S.size() * I.size(), I.size(), "S x I -> I");
  require_table(spec.i_on_s, I.size() * S.size(), I.size(), "I x S -> I");

  FiniteAbelianGroup whole(concat({&S, &I}));
  BlockCodec codec({&S, &I}, whole);
  const std::size_t n = whole.size();
  std::vector<std::array<ElemId, 2>> parts(n);
  for (ElemId x = 0; x < n; ++x) {
    auto p = codec.split(x);
    parts[x] = {p[0], p[1]};
  }
  std::vector<ElemId> mul(n * n);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      auto [s, i] = parts[x];
      auto [s1, i1] = parts[y];
      ElemId ii = I.add(I.add(spec.s_on_i[s * I.size() + i1], spec.i_on_s[i * S.size() + s1]),
                        spec.i.multiply(i, i1));
      mul[x * n + y] = codec.join({spec.s.multiply(s, s1), ii});
    }
  FiniteRing ring{whole, std::move(mul)};
  auto rep = ring.verify();
  if (!rep.passed())
    throw StructuralError("semidirect sum is not a ring (closure/associativity of the actions)\n" +
                          rep.to_text());

  std::vector<ElemId> gamma_ids(S.size());
  for (ElemId s = 0; s < S.size(); ++s) gamma_ids[s] = codec.join({s, 0});
  GammaRing gr(whole, S, triple_from_ring(ring, gamma_ids));
  Graduation grad_r(whole, {codec.block_subgroup(0), codec.block_subgroup(1)});
  Graduation grad_g(S);
  return {std::move(gr), std::move(grad_r), std::move(grad_g)};
}

GradedGammaRing gamma_from_graded_ring(const FiniteRing& ring, const Graduation& grad) {
  if (!(grad.group() == ring.group)) throw StructuralError("graduation is over a different group");
  require_ring(ring, "graded ring");
  for (GradeId a = 1; a <= grad.grade_count(); ++a)
    for (GradeId b = 1; b <= grad.grade_count(); ++b) {
      ElementSet prod(ring.group.size());
      grad.component(a).for_each([&](ElemId x) {
        grad.component(b).for_each([&](ElemId y) { prod.insert(ring.multiply(x, y)); });
      });
      bool contained = prod.size() == 1;
      for (GradeId c = 1; c <= grad.grade_count() && !contained; ++c)
        contained = prod.is_subset_of(grad.component(c));
      if (!contained)
        throw StructuralError("ring is not Krasner graded: R_" + std::to_string(a) + " R_" +
                              std::to_string(b) + " meets several components");
    }
  const std::size_t n = ring.group.size();
  std::vector<ElemId> ids(n);
  for (ElemId x = 0; x < n; ++x) ids[x] = x;
  auto triple = triple_from_ring(ring, ids);
  auto cotriple = triple;  // Gamma = R, so a x b has the same table
  GammaRing gr(ring.group, ring.group, std::move(triple), std::move(cotriple));
  return {std::move(gr), grad, grad};
}

}  // namespace ggr::gammaring
