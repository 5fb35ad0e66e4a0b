#pragma once

// Algebra products lifted to symbolic elements.
//
// alg_mul_reference is the serial reference kernel: for every structure
// constant it multiplies the two coordinate polynomials afresh and adds the
// result into the target coordinate. alg_mul is the production kernel: it
// forms each distinct coordinate product X_i * Y_j once, in parallel, and
// then assembles every output coordinate in parallel with a single
// sort-and-merge. Both produce identical canonical polynomials.

#include "avw/algebra.hpp"
#include "avw/polynomial.hpp"

namespace avw {

AlgPoly alg_mul_reference(const Algebra& a, const AlgPoly& x, const AlgPoly& y);
AlgPoly alg_mul(const Algebra& a, const AlgPoly& x, const AlgPoly& y);

/// Number of worker threads the parallel kernels may use (1 without OpenMP).
int worker_threads();

}  // namespace avw
