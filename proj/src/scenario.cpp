#include "ivbias/scenario.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "ivbias/errors.hpp"
#include "ivbias/quadrature.hpp"
#include "ivbias/roots.hpp"

namespace ivbias {

namespace {

constexpr double coef_box = 20;		// calibrated coefficients accepted in [-20, 20]
constexpr double cal_tol = 1e-9;	// required residual on every calibration target

void check(const Scenario& s) {
	if (!(s.pg > 0 && s.pg < 1)) throw Error("scenario: pg must lie in (0,1)");
	if (s.confounder == Confounder::discrete_uniform && s.atoms < 1)
		throw Error("scenario: discrete confounder needs atoms >= 1");
	if (s.quad_nodes < 0) throw Error("scenario: quad_nodes must be nonnegative");
}

void check(const CalibrationSpec& c) {
	if (!(c.target_px1 > 0 && c.target_px1 < 1) || !(c.target_py1 > 0 && c.target_py1 < 1))
		throw Error("calibration: probability targets must lie in (0,1)");
	if (!(c.target_rr_xg > 0) || !(c.target_crr > 0))
		throw Error("calibration: ratio targets must be positive");
	if (!(c.pg > 0 && c.pg < 1)) throw Error("calibration: pg must lie in (0,1)");
}

}

double outcome_mean(const Scenario& s, int x, double u) {
	return expit(s.alpha1 + s.alpha2 * x + s.alpha3 * u + s.alpha4 * x * u);
}

double exposure_prob(const Scenario& s, int g, double u) {
	return expit(s.beta1 + s.beta2 * g + s.beta3 * u + s.beta4 * g * u);
}

double confounder_mean(const Scenario& s, const std::function<double(double)>& f) {
	check(s);
	if (s.confounder == Confounder::discrete_uniform) {
		double acc = 0;
		for (int k = 0; k < s.atoms; ++k) acc += f((k + 0.5) / s.atoms);
		return acc / s.atoms;
	}
	return integrate_u(f, s.quad_nodes > 0 ? s.quad_nodes : default_quad_nodes());
}

ObservationalLaw observational_law(const Scenario& s) {
	check(s);
	ObservationalLaw law;
	for (int g = 0; g < 2; ++g) {
		double wg = g ? s.pg : 1 - s.pg;
		for (int x = 0; x < 2; ++x) {
			// p(x|g) and p(y=1,x|g) share the exposure factor
			double p_x = confounder_mean(s, [&](double u) {
				double e = exposure_prob(s, g, u);
				return x ? e : 1 - e;
			});
			double p_y1x = confounder_mean(s, [&](double u) {
				double e = exposure_prob(s, g, u);
				return (x ? e : 1 - e) * outcome_mean(s, x, u);
			});
			law.p[1][x][g] = wg * p_y1x;
			law.p[0][x][g] = wg * (p_x - p_y1x);
		}
	}
	return law;
}

CausalTargets causal_targets(const Scenario& s) {
	check(s);
	CausalTargets t;
	t.ey_do0 = confounder_mean(s, [&](double u) { return outcome_mean(s, 0, u); });
	t.ey_do1 = confounder_mean(s, [&](double u) { return outcome_mean(s, 1, u); });
	if (!(t.ey_do0 > 0)) throw UndefinedEstimand("causal_targets: ey_do0 is zero, crr undefined");
	t.crr = t.ey_do1 / t.ey_do0;
	t.ace = t.ey_do1 - t.ey_do0;
	t.cor = (t.ey_do1 * (1 - t.ey_do0)) / ((1 - t.ey_do1) * t.ey_do0);
	// p(u | X=1) weights, with the instrument marginalized out
	auto px1_u = [&](double u) {
		return s.pg * exposure_prob(s, 1, u) + (1 - s.pg) * exposure_prob(s, 0, u);
	};
	double px1 = confounder_mean(s, px1_u);
	double ey1_x1 = confounder_mean(s, [&](double u) { return outcome_mean(s, 1, u) * px1_u(u); }) / px1;
	double ey0_x1 = confounder_mean(s, [&](double u) { return outcome_mean(s, 0, u) * px1_u(u); }) / px1;
	t.lcrr = ey1_x1 / ey0_x1;
	return t;
}

std::pair<double, double> calibrate_exposure(const CalibrationSpec& c) {
	check(c);
	int nodes = c.quad_nodes > 0 ? c.quad_nodes : default_quad_nodes();
	auto px_g = [&](double b1, double b2, int g) {
		return integrate_u([&](double u) {
			return expit(b1 + b2 * g + c.beta3 * u + c.beta4 * g * u);
		}, nodes);
	};
	auto marginal = [&](double b1, double b2) {
		return (1 - c.pg) * px_g(b1, b2, 0) + c.pg * px_g(b1, b2, 1);
	};
	// the marginal is monotone in beta1, so it can be re-solved inside the
	// beta2 search; the inner bracket is wider than the acceptance box because
	// intermediate beta2 values can push beta1 far out before settling
	auto solve_b1 = [&](double b2) {
		return brent_root([&](double b1) { return marginal(b1, b2) - c.target_px1; }, -60, 60);
	};
	double b1 = 0, b2 = 0;
	try {
		b2 = brent_root([&](double bb2) {
			double bb1 = solve_b1(bb2);
			return px_g(bb1, bb2, 1) / px_g(bb1, bb2, 0) - c.target_rr_xg;
		}, -coef_box, coef_box);
		b1 = solve_b1(b2);
	} catch (const NoBracket&) {
		throw CalibrationInfeasible("calibrate_exposure: targets unreachable for coefficients in [-20,20]");
	}
	double rm = marginal(b1, b2) - c.target_px1;
	double rr = px_g(b1, b2, 1) / px_g(b1, b2, 0) - c.target_rr_xg;
	if (std::abs(rm) > cal_tol || std::abs(rr) > cal_tol ||
	    std::abs(b1) > coef_box || std::abs(b2) > coef_box)
		throw CalibrationInfeasible("calibrate_exposure: solution rejected, residual or coefficient out of range");
	return {b1, b2};
}

std::pair<double, double> calibrate_outcome(const CalibrationSpec& c, const Scenario& s_exposure) {
	check(c);
	Scenario s = s_exposure;
	s.alpha3 = c.alpha3;
	s.alpha4 = c.alpha4;
	if (s.quad_nodes == 0) s.quad_nodes = c.quad_nodes;
	// residuals of the 2-D system: effect ratio and outcome marginal; the
	// ratio involves alpha1 through both integrals, so this is genuinely 2-D
	auto resid = [&](double a1, double a2, double& r_crr, double& r_py) {
		s.alpha1 = a1;
		s.alpha2 = a2;
		double m1 = confounder_mean(s, [&](double u) { return outcome_mean(s, 1, u); });
		double m0 = confounder_mean(s, [&](double u) { return outcome_mean(s, 0, u); });
		double py = confounder_mean(s, [&](double u) {
			double px1u = s.pg * exposure_prob(s, 1, u) + (1 - s.pg) * exposure_prob(s, 0, u);
			return outcome_mean(s, 1, u) * px1u + outcome_mean(s, 0, u) * (1 - px1u);
		});
		r_crr = m1 / m0 - c.target_crr;
		r_py = py - c.target_py1;
	};

	// damped Newton with a forward-difference Jacobian; the Jacobian can be
	// ill-conditioned for strong confounding, so residuals are pushed to the
	// double-precision floor and the best iterate is kept
	double a1 = -3, a2 = 0;
	double r1, r2;
	resid(a1, a2, r1, r2);
	double best_a1 = a1, best_a2 = a2;
	double best_norm = std::max(std::abs(r1), std::abs(r2));
	for (int it = 0; it < 200; ++it) {
		double norm = std::max(std::abs(r1), std::abs(r2));
		if (norm < best_norm) {
			best_norm = norm;
			best_a1 = a1;
			best_a2 = a2;
		}
		if (norm < 1e-15) break;
		double h1 = 1e-6 * std::max(1.0, std::abs(a1));
		double h2 = 1e-6 * std::max(1.0, std::abs(a2));
		double s1, s2, t1, t2;
		resid(a1 + h1, a2, s1, s2);
		resid(a1, a2 + h2, t1, t2);
		double j11 = (s1 - r1) / h1, j12 = (t1 - r1) / h2;
		double j21 = (s2 - r2) / h1, j22 = (t2 - r2) / h2;
		double det = j11 * j22 - j12 * j21;
		if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
		double d1 = (r1 * j22 - r2 * j12) / det;
		double d2 = (r2 * j11 - r1 * j21) / det;
		double lam = 1;
		bool accepted = false;
		for (int half = 0; half < 40; ++half) {
			double n1, n2;
			resid(a1 - lam * d1, a2 - lam * d2, n1, n2);
			if (std::max(std::abs(n1), std::abs(n2)) < norm) {
				a1 -= lam * d1;
				a2 -= lam * d2;
				r1 = n1;
				r2 = n2;
				accepted = true;
				break;
			}
			lam *= 0.5;
		}
		if (!accepted) break;
	}
	a1 = best_a1;
	a2 = best_a2;

	if (best_norm > 1e-12) {
		// fallback: alternate 1-D solves; the ratio is monotone in alpha2 for
		// fixed alpha1 and the marginal is monotone in alpha1 for fixed alpha2
		try {
			a1 = -3;
			a2 = 0;
			double alt_norm = std::numeric_limits<double>::infinity();
			for (int it = 0; it < 200; ++it) {
				a2 = brent_root([&](double x) {
					double rc, rp;
					resid(a1, x, rc, rp);
					return rc;
				}, -40, 40);
				a1 = brent_root([&](double x) {
					double rc, rp;
					resid(x, a2, rc, rp);
					return rp;
				}, -60, 60);
				resid(a1, a2, r1, r2);
				double n = std::max(std::abs(r1), std::abs(r2));
				if (n < best_norm) {
					best_norm = n;
					best_a1 = a1;
					best_a2 = a2;
				}
				if (n >= alt_norm || n < 1e-13) break;	// hit the alternation floor
				alt_norm = n;
			}
			a1 = best_a1;
			a2 = best_a2;
		} catch (const NoBracket&) {
			throw CalibrationInfeasible("calibrate_outcome: targets unreachable for coefficients in [-20,20]");
		}
	}

	resid(a1, a2, r1, r2);
	if (std::abs(r1) > cal_tol || std::abs(r2) > cal_tol ||
	    std::abs(a1) > coef_box || std::abs(a2) > coef_box)
		throw CalibrationInfeasible("calibrate_outcome: solution rejected, residual or coefficient out of range");
	return {a1, a2};
}

Scenario calibrate(const CalibrationSpec& c) {
	Scenario s;
	s.beta3 = c.beta3;
	s.beta4 = c.beta4;
	s.pg = c.pg;
	s.quad_nodes = c.quad_nodes;
	auto [b1, b2] = calibrate_exposure(c);
	s.beta1 = b1;
	s.beta2 = b2;
	auto [a1, a2] = calibrate_outcome(c, s);
	s.alpha1 = a1;
	s.alpha2 = a2;
	s.alpha3 = c.alpha3;
	s.alpha4 = c.alpha4;
	return s;
}

Dataset simulate(const Scenario& s, long n, std::uint64_t seed) {
	check(s);
	if (n < 1) throw Error("simulate: n must be >= 1");
	std::mt19937_64 rng(seed);
	auto unit = [&] { return (rng() >> 11) * 0x1.0p-53; };
	Dataset d;
	d.records.reserve(static_cast<size_t>(n));
	for (long i = 0; i < n; ++i) {
		int g = unit() < s.pg;
		double u;
		if (s.confounder == Confounder::discrete_uniform) {
			int k = std::min(s.atoms - 1, static_cast<int>(unit() * s.atoms));
			u = (k + 0.5) / s.atoms;
		} else {
			u = unit();
		}
		int x = unit() < exposure_prob(s, g, u);
		int y = unit() < outcome_mean(s, x, u);
		d.records.push_back({g, static_cast<double>(x), static_cast<double>(y)});
	}
	return d;
}

}
