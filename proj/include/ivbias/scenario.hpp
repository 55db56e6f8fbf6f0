#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>

#include "ivbias/dataset.hpp"

namespace ivbias {

// confounder U is uniform on [0,1]; the discrete variant puts equal mass on
// the midpoints (k-0.5)/atoms so that tests can sum cells exactly
enum class Confounder { continuous_uniform, discrete_uniform };

// data generating process:
//   logit E(Y|X=x,U=u) = alpha1 + alpha2 x + alpha3 u + alpha4 x u
//   logit E(X|G=g,U=u) = beta1 + beta2 g + beta3 u + beta4 g u
//   P(G=1) = pg, U ~ uniform
struct Scenario {
	double alpha1 = 0, alpha2 = 0, alpha3 = 0, alpha4 = 0;
	double beta1 = 0, beta2 = 0, beta3 = 0, beta4 = 0;
	double pg = 0.5;
	Confounder confounder = Confounder::continuous_uniform;
	int atoms = 0;		// discrete_uniform only
	int quad_nodes = 0;	// 0 means default_quad_nodes()
};

// joint p(y,x,g), indexed p[y][x][g]
struct ObservationalLaw {
	double p[2][2][2] = {};
	double pg1() const { return p[0][0][1] + p[0][1][1] + p[1][0][1] + p[1][1][1]; }
	// conditional P(y,x|g)
	double pyx_g(int y, int x, int g) const {
		double w = g ? pg1() : 1 - pg1();
		return p[y][x][g] / w;
	}
};

struct CausalTargets {
	double ey_do0 = 0, ey_do1 = 0;	// interventional outcome means
	double crr = 0;			// ey_do1 / ey_do0
	double ace = 0;			// ey_do1 - ey_do0
	double cor = 0;			// causal odds ratio
	double lcrr = 0;		// local effect among the exposed, instrument marginalized out
};

struct CalibrationSpec {
	double target_px1 = 0.13;	// P(X=1)
	double target_rr_xg = 2.4;	// P(X=1|G=1) / P(X=1|G=0)
	double target_py1 = 0.03;	// P(Y=1)
	double target_crr = 1.0;
	double alpha3 = 0, alpha4 = 0;	// confounding side, held fixed
	double beta3 = 2, beta4 = 0;
	double pg = 0.5;
	int quad_nodes = 0;
};

inline double expit(double z) {
	if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
	double e = std::exp(z);
	return e / (1.0 + e);
}

// E(Y|X=x,U=u); identical under observation and intervention
double outcome_mean(const Scenario& s, int x, double u);
// E(X|G=g,U=u)
double exposure_prob(const Scenario& s, int g, double u);

// E over the confounder of f(U): quadrature in the continuous case, atom average otherwise
double confounder_mean(const Scenario& s, const std::function<double(double)>& f);

ObservationalLaw observational_law(const Scenario& s);
CausalTargets causal_targets(const Scenario& s);

// solve (beta1, beta2) for the exposure marginal and the G-X relative risk;
// the ratio target is the U-marginal ratio P(X=1|G=1)/P(X=1|G=0)
std::pair<double, double> calibrate_exposure(const CalibrationSpec& spec);
// solve (alpha1, alpha2) for P(Y=1) and the causal relative risk, given calibrated betas
std::pair<double, double> calibrate_outcome(const CalibrationSpec& spec, const Scenario& s_exposure);
// both halves; returns the fully assembled scenario
Scenario calibrate(const CalibrationSpec& spec);

// n ancestral draws of (g,u,x,y); deterministic in the seed
Dataset simulate(const Scenario& s, long n, std::uint64_t seed);

}
