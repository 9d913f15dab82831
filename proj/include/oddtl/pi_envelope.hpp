#pragma once

// Pi-envelope of a monoidal supercategory and the associated supercategory
// of its underlying even category.
//
// Objects of the envelope are Pi^a X with a in Z/2; a morphism
// Pi^a X -> Pi^b Y is written f_a^b with f: X -> Y homogeneous, and has
// parity a + b + |f|. Composition forgets the shifts; the tensor product
// carries the sign (-1)^{a|g| + |f|d + ad + ac} for f_a^b (x) g_c^d.
//
// The code is generic over the underlying category: `Cat` provides
// compose/tensor/add/scale/parity_of on morphism values of type M.

#include <stdexcept>

#include "ratfunc.hpp"

namespace oddtl {

template <typename M>
struct PiMor {
  M base;
  int src_shift = 0;  // a in Z/2
  int tgt_shift = 0;  // b in Z/2

  friend bool operator==(const PiMor&, const PiMor&) = default;
};

template <typename Cat, typename M>
int env_parity(const Cat& cat, const PiMor<M>& f) {
  return (f.src_shift + f.tgt_shift + cat.parity_of(f.base)) % 2;
}

/// f after g; the shifts at the shared object must agree.
template <typename Cat, typename M>
PiMor<M> env_compose(const Cat& cat, const PiMor<M>& f, const PiMor<M>& g) {
  if (f.src_shift != g.tgt_shift)
    throw std::invalid_argument("env_compose: object shifts do not match");
  return {cat.compose(f.base, g.base), g.src_shift, f.tgt_shift};
}

template <typename Cat, typename M>
PiMor<M> env_tensor(const Cat& cat, const PiMor<M>& f, const PiMor<M>& g) {
  int a = f.src_shift, b = f.tgt_shift, c = g.src_shift, d = g.tgt_shift;
  int e = a * cat.parity_of(g.base) + cat.parity_of(f.base) * d + a * d + a * c;
  M base = cat.tensor(f.base, g.base);
  if (e % 2) base = cat.scale(RatFunc(-1), base);
  return {std::move(base), (a + c) % 2, (b + d) % 2};
}

template <typename Cat, typename M>
PiMor<M> env_add(const Cat& cat, const PiMor<M>& f, const PiMor<M>& g) {
  if (f.src_shift != g.src_shift || f.tgt_shift != g.tgt_shift)
    throw std::invalid_argument("env_add: shifts do not match");
  return {cat.add(f.base, g.base), f.src_shift, f.tgt_shift};
}

template <typename Cat, typename M>
PiMor<M> env_scale(const Cat& cat, const RatFunc& c, const PiMor<M>& f) {
  return {cat.scale(c, f.base), f.src_shift, f.tgt_shift};
}

/// The odd natural isomorphism zeta_{Pi^a X} = (1_X)_{a+1}^{a}.
template <typename M>
PiMor<M> zeta(const M& identity_on_x, int a) {
  return {identity_on_x, (a + 1) % 2, a};
}

/// The parity-shift functor on morphisms: Pi(g_s^t) = (-1)^{s+t+|g|} g_{s+1}^{t+1}.
template <typename Cat, typename M>
PiMor<M> pi_shift(const Cat& cat, const PiMor<M>& f) {
  int e = (f.src_shift + f.tgt_shift + cat.parity_of(f.base)) % 2;
  M base = e ? cat.scale(RatFunc(-1), f.base) : f.base;
  return {std::move(base), (f.src_shift + 1) % 2, (f.tgt_shift + 1) % 2};
}

/// xi_{Pi^a X} = zeta o Pi(zeta) = -(1_X)_a^a : Pi^{a+2} X -> Pi^a X.
template <typename Cat, typename M>
PiMor<M> xi(const Cat& cat, const M& identity_on_x, int a) {
  return env_compose(cat, zeta(identity_on_x, a), pi_shift(cat, zeta(identity_on_x, a)));
}

/// Morphism of the supercategory associated with the even subcategory A of
/// the envelope: an even arrow X -> Y is an even arrow of A; an odd arrow
/// X -> Y is an even arrow X -> Pi Y of A. `rep` stores that arrow, so
/// rep.tgt_shift carries the extra Pi when odd.
template <typename M>
struct AssocMor {
  PiMor<M> rep;
  bool odd = false;

  friend bool operator==(const AssocMor&, const AssocMor&) = default;
};

template <typename Cat, typename M>
AssocMor<M> assoc_from_even(const Cat& cat, const PiMor<M>& f) {
  if (env_parity(cat, f) != 0)
    throw std::invalid_argument("assoc_from_even: arrow is not even");
  return {f, false};
}

/// Compose in the associated supercategory: g after f. When f is odd, g is
/// transported across Pi; when both are odd the composite lands in Pi^2 and
/// is straightened by xi = -id at the target.
template <typename Cat, typename M>
AssocMor<M> assoc_compose(const Cat& cat, const AssocMor<M>& g, const AssocMor<M>& f) {
  if (!f.odd) return {env_compose(cat, g.rep, f.rep), g.odd};
  PiMor<M> gp = pi_shift(cat, g.rep);
  PiMor<M> comp = env_compose(cat, gp, f.rep);
  if (!g.odd) return {comp, true};
  // comp: X -> Pi^2 Y stored at shift 0; xi contributes the sign.
  return {env_scale(cat, RatFunc(-1), comp), false};
}

/// The equivalence T back into the envelope: even arrows map to themselves,
/// odd arrows compose with zeta_Y = (1_Y)_1^0, which drops the target shift
/// without a sign.
template <typename M>
PiMor<M> assoc_to_envelope(const AssocMor<M>& f) {
  PiMor<M> r = f.rep;
  if (f.odd) r.tgt_shift = (r.tgt_shift + 1) % 2;
  return r;
}

}  // namespace oddtl
