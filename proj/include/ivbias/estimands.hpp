#pragma once

#include <array>
#include <utility>

#include "ivbias/scenario.hpp"

namespace ivbias {

// below this, cov(X,G) and the compliance difference count as no instrument
inline constexpr double weak_floor = 1e-10;

struct JointMoments {
	std::array<double, 2> ey_g{};	// E(Y|G=g)
	std::array<double, 2> ex_g{};	// E(X|G=g)
	std::array<double, 2> eyx_g{};	// E(YX|G=g)
	std::array<double, 2> ey_x{};	// E(Y|X=x); NaN when an X cell is empty or X is continuous
	double px1 = 0, py1 = 0, pg1 = 0;
	double cov_yg = 0, cov_xg = 0;
};

// a flag is true when the stored value carries its intended interpretation;
// false covers both "not computable" (value NaN) and "algebraically outside
// its domain" (value kept so that misspecified estimands can still be tabulated)
struct EstimandSet {
	double nrr = 0;			// naive comparator E(Y|X=1)/E(Y|X=0)
	double livae = 0;		// cov(Y,G)/cov(X,G)
	double livrr = 0, livor = 0;	// intercept-based ratios from the linear IV fit
	double wald_delta = 0;		// compliance difference
	double wald_rr = 0, wald_or = 0;
	double msmm_gamma = 0;		// log multiplicative effect among the exposed
	double msmm_rr = 0;		// exp(msmm_gamma)
	double msmm_ace = 0, msmm_cor = 0;
	struct Flags {
		bool nrr = false, livae = false, livrr = false, livor = false;
		bool wald_delta = false, wald_rr = false, wald_or = false;
		bool msmm_gamma = false, msmm_rr = false, msmm_ace = false, msmm_cor = false;
	} valid;
};

struct LivResult {
	double livrr = 0, livor = 0;
	bool valid = false;	// false when ahat or ahat+bhat leave (0,1)
};

struct WaldResult {
	double delta = 0, wald_rr = 0, wald_or = 0;
};

struct MsmmEffects {
	double ace = 0, cor = 0;
	bool cor_valid = false;	// false when an interventional mean leaves (0,1)
};

// exact conditional moments of an 8-cell law; probabilities below 1e-12 count as zero mass
JointMoments moments(const ObservationalLaw& law);

double nrr(const JointMoments& m);
double livae(const JointMoments& m);
// ahat = E(Y) - livae * E(X); livrr = (ahat+bhat)/ahat, livor per the odds transform
LivResult livrr_livor(const JointMoments& m);
// delta = E(X|G=1)-E(X|G=0) (equals cov(X,G)/var(G) for binary G); RR(Y|G)^(1/delta), OR(Y|G)^(1/delta)
WaldResult wald(const JointMoments& m);
// closed form exp(-gamma) = 1 - [E(Y|G=1)-E(Y|G=0)] / [E(YX|G=1)-E(YX|G=0)]; returns (gamma, exp(gamma))
std::pair<double, double> msmm(const JointMoments& m);
// interventional means E(Y|do(X~=0)) = e^-g E(Y|X=1)P(X=1) + E(Y|X=0)P(X=0) and its do(X~=1) mirror
MsmmEffects msmm_ace_cor(const JointMoments& m, double gamma_l);
// (estimand - target) / target
double relative_bias(double estimand, double target);

// every estimand with per-field validity; individual failures land in the flags, never throw
EstimandSet all_estimands(const JointMoments& m);

}
