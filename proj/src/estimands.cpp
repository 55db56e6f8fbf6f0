#include "ivbias/estimands.hpp"

#include <cmath>
#include <limits>

#include "ivbias/errors.hpp"

namespace ivbias {

namespace {

constexpr double zero_mass = 1e-12;	// probabilities below this count as zero

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

}

JointMoments moments(const ObservationalLaw& law) {
	double tot = 0;
	for (int y = 0; y < 2; ++y)
		for (int x = 0; x < 2; ++x)
			for (int g = 0; g < 2; ++g) {
				double c = law.p[y][x][g];
				if (!std::isfinite(c) || c < -zero_mass)
					throw Error("moments: law cells must be nonnegative");
				tot += c;
			}
	if (std::abs(tot - 1) > 1e-8) throw Error("moments: law cells must sum to 1");

	JointMoments m;
	double pg[2], px[2];
	for (int g = 0; g < 2; ++g)
		pg[g] = law.p[0][0][g] + law.p[0][1][g] + law.p[1][0][g] + law.p[1][1][g];
	for (int x = 0; x < 2; ++x)
		px[x] = law.p[0][x][0] + law.p[0][x][1] + law.p[1][x][0] + law.p[1][x][1];
	if (pg[0] < zero_mass || pg[1] < zero_mass)
		throw DegenerateLaw("moments: a g group carries no mass");
	if (px[0] < zero_mass || px[1] < zero_mass)
		throw DegenerateLaw("moments: an x group carries no mass");

	for (int g = 0; g < 2; ++g) {
		m.ey_g[g] = (law.p[1][0][g] + law.p[1][1][g]) / pg[g];
		m.ex_g[g] = (law.p[0][1][g] + law.p[1][1][g]) / pg[g];
		m.eyx_g[g] = law.p[1][1][g] / pg[g];
	}
	for (int x = 0; x < 2; ++x)
		m.ey_x[x] = (law.p[1][x][0] + law.p[1][x][1]) / px[x];
	m.px1 = px[1];
	m.py1 = law.p[1][0][0] + law.p[1][0][1] + law.p[1][1][0] + law.p[1][1][1];
	m.pg1 = pg[1];
	m.cov_yg = (law.p[1][0][1] + law.p[1][1][1]) - m.py1 * m.pg1;
	m.cov_xg = (law.p[0][1][1] + law.p[1][1][1]) - m.px1 * m.pg1;
	return m;
}

double nrr(const JointMoments& m) {
	if (!(m.ey_x[0] > 0) || !std::isfinite(m.ey_x[1]))
		throw UndefinedEstimand("nrr: E(Y|X=0) is zero or the x cells are unavailable");
	return m.ey_x[1] / m.ey_x[0];
}

double livae(const JointMoments& m) {
	if (std::abs(m.cov_xg) < weak_floor)
		throw WeakInstrument("livae: cov(X,G) below the weak-instrument floor");
	return m.cov_yg / m.cov_xg;
}

LivResult livrr_livor(const JointMoments& m) {
	double b = livae(m);
	double a = m.py1 - b * m.px1;
	if (a == 0) throw UndefinedEstimand("livrr: zero intercept estimate");
	LivResult r;
	r.livrr = (a + b) / a;
	r.livor = ((a + b) * (1 - a)) / (a * (1 - a - b));
	r.valid = a > 0 && a < 1 && a + b > 0 && a + b < 1;
	return r;
}

WaldResult wald(const JointMoments& m) {
	double delta = m.ex_g[1] - m.ex_g[0];
	if (std::abs(delta) < weak_floor)
		throw WeakInstrument("wald: compliance difference below the weak-instrument floor");
	for (int g = 0; g < 2; ++g)
		if (!(m.ey_g[g] > 0) || !(m.ey_g[g] < 1))
			throw UndefinedEstimand("wald: boundary outcome probability");
	WaldResult r;
	r.delta = delta;
	r.wald_rr = std::pow(m.ey_g[1] / m.ey_g[0], 1 / delta);
	double oryg = (m.ey_g[1] * (1 - m.ey_g[0])) / ((1 - m.ey_g[1]) * m.ey_g[0]);
	r.wald_or = std::pow(oryg, 1 / delta);
	return r;
}

std::pair<double, double> msmm(const JointMoments& m) {
	double den = m.eyx_g[1] - m.eyx_g[0];
	if (std::abs(den) < weak_floor)
		throw WeakInstrument("msmm: zero denominator in the closed form");
	double display = 1 - (m.ey_g[1] - m.ey_g[0]) / den;
	if (!(display > 0))
		throw UndefinedEstimand("msmm: nonpositive argument to the log");
	double gamma = -std::log(display);
	return {gamma, std::exp(gamma)};
}

MsmmEffects msmm_ace_cor(const JointMoments& m, double gamma_l) {
	if (!std::isfinite(m.ey_x[0]) || !std::isfinite(m.ey_x[1]))
		throw UndefinedEstimand("msmm_ace_cor: needs binary exposure moments");
	double px0 = 1 - m.px1;
	double do0 = std::exp(-gamma_l) * m.ey_x[1] * m.px1 + m.ey_x[0] * px0;
	double do1 = m.ey_x[1] * m.px1 + std::exp(gamma_l) * m.ey_x[0] * px0;
	MsmmEffects r;
	r.ace = do1 - do0;
	r.cor_valid = do0 > 0 && do0 < 1 && do1 > 0 && do1 < 1;
	r.cor = (do1 * (1 - do0)) / ((1 - do1) * do0);
	return r;
}

double relative_bias(double estimand, double target) {
	if (target == 0) throw UndefinedEstimand("relative_bias: zero target");
	return (estimand - target) / target;
}

EstimandSet all_estimands(const JointMoments& m) {
	EstimandSet e;
	e.nrr = e.livae = e.livrr = e.livor = nan_value();
	e.wald_delta = e.wald_rr = e.wald_or = nan_value();
	e.msmm_gamma = e.msmm_rr = e.msmm_ace = e.msmm_cor = nan_value();

	try { e.nrr = nrr(m); e.valid.nrr = true; } catch (const Error&) {}
	try { e.livae = livae(m); e.valid.livae = true; } catch (const Error&) {}
	try {
		LivResult lr = livrr_livor(m);
		e.livrr = lr.livrr;
		e.livor = lr.livor;
		e.valid.livrr = e.valid.livor = lr.valid;
	} catch (const Error&) {}
	// the compliance difference stands on its own even when the powers fail
	double delta = m.ex_g[1] - m.ex_g[0];
	if (std::abs(delta) >= weak_floor) {
		e.wald_delta = delta;
		e.valid.wald_delta = true;
	}
	try {
		WaldResult w = wald(m);
		e.wald_rr = w.wald_rr;
		e.wald_or = w.wald_or;
		e.valid.wald_rr = e.valid.wald_or = true;
	} catch (const Error&) {}
	try {
		auto [gamma, rr] = msmm(m);
		e.msmm_gamma = gamma;
		e.msmm_rr = rr;
		e.valid.msmm_gamma = e.valid.msmm_rr = true;
		MsmmEffects fx = msmm_ace_cor(m, gamma);
		e.msmm_ace = fx.ace;
		e.valid.msmm_ace = true;
		e.msmm_cor = fx.cor;
		e.valid.msmm_cor = fx.cor_valid;
	} catch (const Error&) {}
	return e;
}

}
