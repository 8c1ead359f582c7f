#pragma once

#include "ptmeans/jet.hpp"
#include "ptmeans/means.hpp"

namespace ptmeans {

/// Truncation order used wherever only the (x-1)^2 coefficient matters;
/// the spare orders guard against indexing mistakes at no cost.
inline constexpr int kDefaultSeriesOrder = 8;

/// Taylor series of x -> M(x, 1) at x = 1 (variable t = x - 1), built
/// compositionally from the defining formula.  The result has c_0 = 1 and
/// c_1 = 1/2.  Requires order >= 2.
Jet mean_series(MeanKind kind, int order);

/// Taylor series of x -> M_p(x, 1) = M((1+t)^p, 1)^{1/p}: expand (1+t)^p,
/// compose with the base-mean series, then apply pow(., 1/p).  p = 0 is
/// unsupported (the transform degenerates to sqrt(1+t)).
Jet power_type_series(const PowerTypeSpec& spec, int order);

}  // namespace ptmeans
