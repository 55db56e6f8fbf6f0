#pragma once

#include <functional>

namespace ivbias {

// Brent's method on [a,b]; requires a sign change, else throws NoBracket
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-13, int maxiter = 200);

}
