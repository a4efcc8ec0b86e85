#pragma once

#include <string>

#include "qpd/ncalgebra.hpp"
#include "qpd/qpdmap.hpp"

namespace qpd {

struct EvalOptions {
    /// Inside `limit`, dt(E) denotes the unshifted time derivative
    /// dt E = dt^ E + (i/hb) E, since the 2/h shift has no classical limit.
    bool unshifted_dt = false;
};

/// Parse and evaluate a surface expression. The preset is inferred from the
/// generators used: l[i,j] selects GL(N) (N = largest index, at least 2),
/// t/x/y/z/rho and the derivative applications dt/dx/dy/dz select the
/// extended compact algebra. Throws parse_error with a position on bad input.
NCPoly parse_expression(const std::string& src, const EvalOptions& opts = {});

/// Canonical text form: terms sorted by descending total degree, then
/// lexicographically on the exponent vector. Reparses to an equal value.
std::string to_string(const NCPoly& p);

/// Coefficient as a standalone parseable expression.
std::string to_string(const HbarScalar& c);

/// Aligned grid of entry strings.
std::string matrix_grid(const DerivMatrix& m);

} // namespace qpd
