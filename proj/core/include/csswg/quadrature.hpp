#pragma once

#include <span>
#include <vector>

#include "csswg/field.hpp"

namespace csswg {

// Rectangle-rule integrals on the periodic grid. For smooth periodic (or
// rapidly decaying) integrands these are spectrally accurate.

double integrate(const RealField1D& f);
double integrate(const RealField2D& f);
cplx integrate(const Field1D& f);
cplx integrate(const Field2D& f);

/// <f, g>, conjugate-linear in f.
cplx inner(const Field1D& f, const Field1D& g);
cplx inner(const Field2D& f, const Field2D& g);

double l2_norm(const Field1D& f);
double l2_norm(const Field2D& f);
double l2_norm(const RealField1D& f);
double l2_norm(const RealField2D& f);

/// Antiderivative from the left edge, F(y_j) = int_{-L}^{y_j} g.
///
/// g must decay at both ends of the box. The mean of g contributes a linear
/// ramp and the zero-mean remainder is integrated in Fourier space, so the
/// result is spectrally accurate for smooth decaying g.
std::vector<double> antiderivative(std::span<const double> g, const Grid1D& grid);

/// int sgn(y - y') g(y') dy' = 2 F(y) - int g, evaluated with antiderivative().
std::vector<double> sign_convolution(std::span<const double> g, const Grid1D& grid);

/// sign_convolution applied to every column (fixed x) of a 2D field.
RealField2D sign_convolution_y(const RealField2D& g);

/// Cumulative integral along x from the left edge; makes no periodicity
/// assumption. A fixed window splits each row: the part inside |x| < 0.6 Lx
/// goes through antiderivative(), the slowly varying remainder near the
/// edges through cumulative_integral().
RealField2D cumulative_integral_x(const RealField2D& g);

/// Cumulative integral with an 8th-order local polynomial rule.
std::vector<double> cumulative_integral(std::span<const double> g, double h);

}  // namespace csswg
