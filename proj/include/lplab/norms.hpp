#pragma once

#include "lplab/trig_poly.hpp"

namespace lplab {

// All functionals use the normalized measure mu(T) = 1.

// (M^{-1} sum |v_k|^p)^{1/p}, p >= 1
double lp_norm(const GridSamples& samples, double p);
double lp_norm(const GridSamples2D& samples, double p);

// Convenience: evaluate on the default grid first.
double lp_norm(const TrigPoly& f, double p, std::size_t oversampling = 8);

// Grid maximum of |f|; a proxy for the sup norm at sufficient oversampling.
double max_abs(const GridSamples& samples);

// (sum |c_n|^2)^{1/2}, exact
double l2_norm_parseval(const TrigPoly& f);
double l2_norm_parseval(const TrigPoly2D& f);

// sup_t t * mu{|f| > t} computed from the sorted sample values
double weak_l1(const GridSamples& samples);

// Luxemburg norm for Phi_r(t) = t (1 + log(1+t))^r; 0 for the zero input
double llogl_norm(const GridSamples& samples, double r);

// 1 + M^{-1} sum |v_k| log^{1/2}(e + |v_k|)
double zygmund_functional(const GridSamples& samples);

}  // namespace lplab
