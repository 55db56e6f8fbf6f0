#include "ivbias/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ivbias {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence
void legendre(int n, double x, double& p, double& dp) {
	double p0 = 1, p1 = 0;
	for (int k = 0; k < n; ++k) {
		double p2 = p1;
		p1 = p0;
		p0 = ((2 * k + 1) * x * p1 - k * p2) / (k + 1);
	}
	p = p0;
	dp = n * (x * p0 - p1) / (x * x - 1);
}

QuadRule build_rule(int n) {
	QuadRule r;
	r.node.resize(n);
	r.weight.resize(n);
	for (int i = 0; i < (n + 1) / 2; ++i) {
		// Newton from the Chebyshev-like initial guess
		double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
		double p = 0, dp = 1;
		for (int it = 0; it < 100; ++it) {
			legendre(n, x, p, dp);
			double dx = p / dp;
			x -= dx;
			if (std::abs(dx) < 1e-15) break;
		}
		legendre(n, x, p, dp);
		double w = 2.0 / ((1 - x * x) * dp * dp);
		// x is the i-th root from the top; map [-1,1] to [0,1]
		r.node[i] = 0.5 * (1 - x);
		r.node[n - 1 - i] = 0.5 * (1 + x);
		r.weight[i] = 0.5 * w;
		r.weight[n - 1 - i] = 0.5 * w;
	}
	return r;
}

}

const QuadRule& gauss_legendre_01(int nodes) {
	if (nodes <= 0) throw std::invalid_argument("gauss_legendre_01: nodes must be >= 1");
	static std::mutex mu;
	static std::map<int, QuadRule> cache;
	std::lock_guard<std::mutex> lock(mu);
	auto it = cache.find(nodes);
	if (it == cache.end()) it = cache.emplace(nodes, build_rule(nodes)).first;
	return it->second;
}

int default_quad_nodes() {
	static const int n = [] {
		const char* env = std::getenv("IVBIAS_QUAD_NODES");
		if (!env || !*env) return 64;
		int v = std::atoi(env);
		return v >= 1 ? v : 64;
	}();
	return n;
}

double integrate_u(const std::function<double(double)>& f, int nodes) {
	if (nodes <= 0) throw std::invalid_argument("integrate_u: nodes must be >= 1");
	const QuadRule& r = gauss_legendre_01(nodes);
	double s = 0;
	for (int i = 0; i < nodes; ++i) s += r.weight[i] * f(r.node[i]);
	return s;
}

}
