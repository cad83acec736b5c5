#pragma once

#include "wreathfuse/algebra.hpp"

namespace wrf::kernels {

using Terms = AlgebraElement::Terms;

/// Serial reference convolution: plain double loop over the stored terms of
/// both operands with field arithmetic on the coefficients. Kept as the
/// ground truth the optimized kernel is tested against.
Terms mul_reference(const Algebra& ctx, const Terms& a, const Terms& b);

/// Optimized convolution: clears coefficient denominators, runs an integer
/// cyclotomic convolution over the dense encoded index space (OpenMP across
/// result indices), and restores the common denominator at the end.
/// Requires ctx.dense_supported().
Terms mul_dense_cleared(const Algebra& ctx, const Terms& a, const Terms& b);

/// Kernel picked by operator*: dense when the context has dense tables and
/// the term-pair count is large enough to amortize the setup.
Terms mul_auto(const Algebra& ctx, const Terms& a, const Terms& b);

} // namespace wrf::kernels
