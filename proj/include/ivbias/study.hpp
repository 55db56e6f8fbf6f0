#pragma once

#include <string>
#include <vector>

#include "ivbias/estimands.hpp"
#include "ivbias/scenario.hpp"

namespace ivbias {

// cross product of confounding settings, filtered to |alpha4| <= |alpha3|;
// rows with target_crr = 1 additionally require alpha4 != 0 (with alpha4 = 0
// a unit CRR forces alpha2 = 0 and every method is trivially unbiased)
struct GridSpec {
	std::vector<double> crr_targets{1.33};
	std::vector<double> alpha3_set{0.1, 1, 2};
	std::vector<double> alpha4_set{0, 1, -1};
	std::vector<double> beta4_set{0, 1, -1};
	double beta3 = 2;
	double target_px1 = 0.13;
	double target_py1 = 0.03;
	double target_rr_xg = 2.4;
	double pg = 0.5;
	int quad_nodes = 0;
};

// the three reference grids: no effect, small effect, large effect
GridSpec null_effect_grid();	// CRR 1.00, 12 rows
GridSpec small_effect_grid();	// CRR 1.33, 21 rows
GridSpec large_effect_grid();	// CRR 3.03, 21 rows

struct BiasRow {
	double crr_target = 0;
	double alpha3 = 0, alpha4 = 0, beta4 = 0;
	bool calibrated = false;
	std::string error;	// set when calibration failed; the run continues
	Scenario scenario;	// calibrated coefficients, for audit
	CausalTargets targets;
	EstimandSet estimands;
	// relative biases of the tabulated estimators against the true crr
	double bias_nrr = 0, bias_livrr = 0, bias_waldrr = 0, bias_msmm = 0;
	// extra audit columns, not rendered
	double bias_waldor = 0, bias_livor = 0;
};

// grid order: crr target, then beta4, then alpha4, then alpha3, in the order given
std::vector<CalibrationSpec> expand_grid(const GridSpec& g);

// calibrate each row, build the law, tabulate biases; failures are recorded per row
std::vector<BiasRow> run_bias_study(const GridSpec& g);

enum class TableFormat { csv, markdown };

// three decimals, matching the reference presentation; negative zero kept as "-0.000"
std::string render(const std::vector<BiasRow>& rows, TableFormat f);

}
