#pragma once

#include <array>
#include <vector>

#include "ivbias/scenario.hpp"

namespace ivbias {

// response-type distribution q over 4 exposure types x 4 outcome types;
// tx = 2*x(g=0) + x(g=1), ty = 2*y(x=0) + y(x=1), q index = 4*tx + ty
inline constexpr int n_types = 16;

struct ResponsePolytope {
	// original equalities: 8 rows mapping q to P(y,x|g) plus the simplex row
	std::array<std::array<double, n_types>, 9> a{};
	std::array<double, 9> b{};
	// row-reduced right-hand side actually used for enumeration (the reduced
	// matrix is law-independent and cached internally)
	int rank = 0;
	std::array<double, 9> rb{};
};

enum class BoundQuantity { ey_do0, ey_do1, ace, crr };

struct BoundInterval {
	BoundQuantity quantity = BoundQuantity::ace;
	double lower = 0;
	double upper = 0;	// +infinity for crr when a vertex has zero denominator and positive numerator
};

struct InequalityReport {
	bool satisfied = false;
	double worst_slack = 0;	// max over x of sum_y max_g P(y,x|g), minus 1
};

// throws InfeasibleLaw when no response-type distribution reproduces the law
ResponsePolytope build_polytope(const ObservationalLaw& law);

// all basic feasible solutions: every 7-column basis of the reduced system,
// nonnegative within 1e-10, deduplicated within 1e-10; empty when infeasible
std::vector<std::array<double, n_types>> enumerate_vertices(const ResponsePolytope& p);

// tight bounds over the vertex set; crr extrema sit at vertices because a
// linear-fractional objective attains them there
BoundInterval bound(const ObservationalLaw& law, BoundQuantity q);

InequalityReport instrumental_inequality(const ObservationalLaw& law);

// nonthrowing feasibility probe (early exit on the first feasible basis)
bool polytope_feasible(const ObservationalLaw& law);

}
