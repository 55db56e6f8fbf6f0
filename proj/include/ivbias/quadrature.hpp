#pragma once

#include <functional>
#include <vector>

namespace ivbias {

// Gauss-Legendre rule mapped to [0,1], nodes ascending
struct QuadRule {
	std::vector<double> node;
	std::vector<double> weight;
};

// rules are computed on first use and cached per node count; thread safe
const QuadRule& gauss_legendre_01(int nodes);

// node count used when a scenario does not pin one; IVBIAS_QUAD_NODES overrides, else 64
int default_quad_nodes();

// integral of f over [0,1]; exact for polynomials up to degree 2*nodes-1
double integrate_u(const std::function<double(double)>& f, int nodes);

}
