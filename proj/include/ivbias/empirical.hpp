#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "ivbias/dataset.hpp"
#include "ivbias/estimands.hpp"

namespace ivbias {

struct EmpiricalMoments {
	JointMoments m;
	long n = 0;
	std::array<long, 2> n_g{0, 0};
	std::array<long, 2> n_x{0, 0};	// populated for binary exposure
	bool binary_x = true;
	bool binary_y = true;
};

// CSV with header g,x,y; g must be 0/1, y nonnegative; kinds inferred as
// binary iff every observed value is 0 or 1
Dataset read_dataset(std::istream& in);
Dataset read_dataset_file(const std::string& path);
// same format back out; binary columns print as integers so round-trips are bit exact
void write_dataset(std::ostream& out, const Dataset& d);
void write_dataset_file(const std::string& path, const Dataset& d);

// sample analogues of the law moments; throws DegenerateSample when a G cell is
// empty (nothing is computable then); an empty X cell only yields NaN ey_x so
// the instrument-based estimands can still be formed
EmpiricalMoments empirical_moments(const Dataset& d);

// estimands on sample moments; estimands whose formula needs binary exposure
// (nrr, livrr/livor, the msmm closed form and its effects) are flagged invalid
// for continuous X
EstimandSet plugin_estimates(const EmpiricalMoments& em);

// root of the sample moment condition mean(y * exp(-gamma x) * (g - gbar)) = 0;
// bracket [-10,10] widened geometrically up to 1000; exponents clamped at +-700
// and clamped endpoints are not used for sign-change detection; several distinct
// roots raise MultipleRoots carrying all of them
double solve_msmm_general(const Dataset& d);
// same condition with an 8-cell law standing in for data
double solve_msmm_general(const ObservationalLaw& law);

// cov(Y,G)/cov(X,G), the exact root of the linear moment condition
double solve_additive_smm(const Dataset& d);
double solve_additive_smm(const ObservationalLaw& law);

}
