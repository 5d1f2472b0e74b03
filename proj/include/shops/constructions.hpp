#pragma once

#include "shops/space.hpp"

namespace shops {

/// scale * T + shift * I on the same space. Adjoint admissibility is
/// preserved: (scale T + shift I)# = conj(scale) T# + conj(shift) P.
AOperator affine(const AOperator& t, Complex scale, Complex shift);

/// Kronecker-product structure: the product space carries kron(A, B), with
/// the left factor indexing the slow axis of the vectorization.
struct TensorSpace {
  SpacePtr left;
  SpacePtr right;
  SpacePtr product;
};

TensorSpace make_tensor_space(const SpacePtr& left, const SpacePtr& right);

/// T tensor S over kron(A, B). Both factors must admit adjoints; then
/// (T tensor S)# = T# tensor S#.
AOperator tensor(const AOperator& t, const AOperator& s);
/// Same, reusing a precomputed product space.
AOperator tensor(const AOperator& t, const AOperator& s, const TensorSpace& ts);

/// Feasible interval of rebalancing factors d > 0 with d T2 >=_A T1 and
/// (1/d) S2 >=_B S1. The interval collapses the existential claim "some d
/// works" into checkable endpoints: d_min is the smallest admissible scaling
/// on the left (sup of the Rayleigh quotient of the A-forms, +inf when no
/// scaling works), d_max the largest on the right.
struct FactorInterval {
  double d_min = 0.0;
  double d_max = 0.0;
  bool feasible = false;
};

/// Requires t1, t2 A-positive and s1, s2 B-positive with t1, s1 nonzero as
/// forms; throws Errc::invalid_input otherwise. feasible iff d_min <= d_max,
/// which is equivalent to t1 tensor s1 <=_{A tensor B} t2 tensor s2.
FactorInterval tensor_factor_interval(const AOperator& t1, const AOperator& t2,
                                      const AOperator& s1, const AOperator& s2);

}  // namespace shops
