#pragma once

#include "glpq/repr.hpp"
#include "glpq/symcalc.hpp"

#include <functional>

namespace glpq {

/// Symbol phi(A) of a spectral function applied to an invariant operator:
/// per shell, phi acts on the eigenvalues of the operator's matrix.  Models
/// that are diagonal in the weight basis skip the eigensolve.  A non-finite
/// phi value raises ValidationError.
MultiplierSymbol spectral_symbol(const std::function<double(double)>& phi,
                                 const InvariantOperator& op, int two_band);

/// (I + A)^{-order/2}  — potential-type smoothing of the given order.
MultiplierSymbol bessel_symbol(double order, const InvariantOperator& op, int two_band);

/// exp(-t A), t > 0.
MultiplierSymbol heat_symbol(double t, const InvariantOperator& op, int two_band);

/// A^{-order/2} with the kernel of A removed (eigenvalues below 1e-10 map
/// to 0).
MultiplierSymbol riesz_symbol(double order, const InvariantOperator& op, int two_band);

/// Contribution of one shell to the heat kernel at the identity:
/// (2l+1) * sum over the shell's eigenvalues of exp(-t lambda).
double shell_heat_sum(double t, const InvariantOperator& op, int two_l);

/// Heat kernel at the identity summed through a fixed band:
/// sum_l (2l+1) Tr exp(-t A(l)).  Raises TruncationInsufficient unless the
/// last shell contributes less than 1e-12 of the total.
double heat_trace_identity(double t, const InvariantOperator& op, int two_band,
                           bool parallel = true);

/// Same sum with the band chosen automatically: shells are added in chunks
/// until the band reaches floor_two_l and the newest shell contributes less
/// than 1e-12 of the running total.  Raises ResourceLimit past shell
/// two_l = 262144.  On return *used_two_band (if given) holds the last shell
/// included.
double heat_trace_adaptive(double t, const InvariantOperator& op, int floor_two_l,
                           int* used_two_band = nullptr, bool parallel = true);

/// Critical operator order for L^p -> L^q boundedness of order-m invariant
/// operators of type rho on a space of homogeneous dimension Q:
///   m*(p, q) = -Q * ( 1/p - 1/q + (1 - rho) * max{1/2 - 1/p, 1/q - 1/2, 0} ).
/// Requires 1 < p <= q < infinity, 0 <= rho <= 1, Q >= 1.
double critical_order(double p, double q, double rho, double Q);

} // namespace glpq
