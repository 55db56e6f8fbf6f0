#include "ivbias/roots.hpp"

#include <algorithm>
#include <cmath>

#include "ivbias/errors.hpp"

namespace ivbias {

// classic Brent: bisection with secant / inverse quadratic acceleration
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol, int maxiter) {
	double fa = f(a), fb = f(b);
	if (fa == 0) return a;
	if (fb == 0) return b;
	if ((fa > 0) == (fb > 0)) throw NoBracket("brent_root: no sign change on the interval");
	double c = a, fc = fa;
	double d = b - a, e = d;
	for (int iter = 0; iter < maxiter; ++iter) {
		if ((fb > 0) == (fc > 0)) {
			c = a; fc = fa;
			d = b - a; e = d;
		}
		if (std::abs(fc) < std::abs(fb)) {
			a = b; b = c; c = a;
			fa = fb; fb = fc; fc = fa;
		}
		double tol = 2 * 2.220446049250313e-16 * std::abs(b) + 0.5 * xtol;
		double m = 0.5 * (c - b);
		if (std::abs(m) <= tol || fb == 0) return b;
		if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
			d = m; e = m;	// bisection
		} else {
			double s = fb / fa, p, q;
			if (a == c) {
				p = 2 * m * s;
				q = 1 - s;
			} else {
				double r = fb / fc, t = fa / fc;
				p = s * (2 * m * t * (t - r) - (b - a) * (r - 1));
				q = (t - 1) * (r - 1) * (s - 1);
			}
			if (p > 0) q = -q; else p = -p;
			if (2 * p < std::min(3 * m * q - std::abs(tol * q), std::abs(e * q))) {
				e = d; d = p / q;	// accept interpolation
			} else {
				d = m; e = m;
			}
		}
		a = b; fa = fb;
		b += std::abs(d) > tol ? d : (m > 0 ? tol : -tol);
		fb = f(b);
	}
	return b;
}

}
