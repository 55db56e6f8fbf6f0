#include "ivbias/study.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>

#include "ivbias/errors.hpp"

namespace ivbias {

GridSpec null_effect_grid() {
	GridSpec g;
	g.crr_targets = {1.0};
	g.alpha3_set = {1, 2};
	return g;
}

GridSpec small_effect_grid() {
	GridSpec g;
	g.crr_targets = {1.33};
	return g;
}

GridSpec large_effect_grid() {
	GridSpec g;
	g.crr_targets = {3.03};
	return g;
}

std::vector<CalibrationSpec> expand_grid(const GridSpec& g) {
	std::vector<CalibrationSpec> out;
	for (double crr : g.crr_targets)
		for (double b4 : g.beta4_set)
			for (double a4 : g.alpha4_set)
				for (double a3 : g.alpha3_set) {
					if (std::abs(a4) > std::abs(a3)) continue;
					if (crr == 1.0 && a4 == 0) continue;
					CalibrationSpec cs;
					cs.target_px1 = g.target_px1;
					cs.target_rr_xg = g.target_rr_xg;
					cs.target_py1 = g.target_py1;
					cs.target_crr = crr;
					cs.alpha3 = a3;
					cs.alpha4 = a4;
					cs.beta3 = g.beta3;
					cs.beta4 = b4;
					cs.pg = g.pg;
					cs.quad_nodes = g.quad_nodes;
					out.push_back(cs);
				}
	if (out.empty()) throw EmptyGrid("expand_grid: every cell filtered out");
	return out;
}

std::vector<BiasRow> run_bias_study(const GridSpec& g) {
	auto specs = expand_grid(g);
	std::vector<BiasRow> rows;
	rows.reserve(specs.size());
	for (const auto& cs : specs) {
		BiasRow row;
		row.crr_target = cs.target_crr;
		row.alpha3 = cs.alpha3;
		row.alpha4 = cs.alpha4;
		row.beta4 = cs.beta4;
		try {
			row.scenario = calibrate(cs);
			ObservationalLaw law = observational_law(row.scenario);
			row.targets = causal_targets(row.scenario);
			row.estimands = all_estimands(moments(law));
			double crr = row.targets.crr;
			row.bias_nrr = relative_bias(row.estimands.nrr, crr);
			row.bias_livrr = relative_bias(row.estimands.livrr, crr);
			row.bias_waldrr = relative_bias(row.estimands.wald_rr, crr);
			row.bias_msmm = relative_bias(row.estimands.msmm_rr, crr);
			row.bias_waldor = relative_bias(row.estimands.wald_or, crr);
			row.bias_livor = relative_bias(row.estimands.livor, crr);
			row.calibrated = true;
		} catch (const Error& e) {
			row.error = std::string(e.kind()) + ": " + e.what();
		}
		rows.push_back(row);
	}
	return rows;
}

namespace {

std::string fmt_coord(double v) {
	char b[32];
	std::snprintf(b, sizeof b, "%g", v);
	return b;
}

std::string fmt_bias(double v, bool ok) {
	if (!ok || !std::isfinite(v)) return "NA";
	char b[32];
	std::snprintf(b, sizeof b, "%.3f", v);
	return b;
}

}

std::string render(const std::vector<BiasRow>& rows, TableFormat f) {
	if (rows.empty()) throw std::invalid_argument("render: no rows");
	static const char* md_head[8] = {"crr", "alpha3", "alpha4", "beta4",
					 "NRR", "LIVRR", "WaldRR", "MSMM"};
	static const char* csv_head[8] = {"crr", "alpha3", "alpha4", "beta4",
					  "nrr", "livrr", "wald_rr", "msmm_rr"};
	std::vector<std::array<std::string, 8>> cells;
	cells.reserve(rows.size());
	for (const auto& r : rows) {
		std::array<std::string, 8> c;
		c[0] = fmt_coord(r.crr_target);
		c[1] = fmt_coord(r.alpha3);
		c[2] = fmt_coord(r.alpha4);
		c[3] = fmt_coord(r.beta4);
		c[4] = fmt_bias(r.bias_nrr, r.calibrated && r.estimands.valid.nrr);
		c[5] = fmt_bias(r.bias_livrr, r.calibrated && r.estimands.valid.livrr);
		c[6] = fmt_bias(r.bias_waldrr, r.calibrated && r.estimands.valid.wald_rr);
		c[7] = fmt_bias(r.bias_msmm, r.calibrated && r.estimands.valid.msmm_rr);
		cells.push_back(c);
	}
	std::string out;
	if (f == TableFormat::csv) {
		for (int i = 0; i < 8; ++i) {
			out += csv_head[i];
			out += i < 7 ? "," : "\n";
		}
		for (const auto& c : cells)
			for (int i = 0; i < 8; ++i) {
				out += c[i];
				out += i < 7 ? "," : "\n";
			}
		return out;
	}
	std::array<size_t, 8> w{};
	for (int i = 0; i < 8; ++i) w[i] = std::strlen(md_head[i]);
	for (const auto& c : cells)
		for (int i = 0; i < 8; ++i) w[i] = std::max(w[i], c[i].size());
	auto pad = [](const std::string& s, size_t width) {
		return std::string(width - s.size(), ' ') + s;
	};
	out += "|";
	for (int i = 0; i < 8; ++i) out += " " + pad(md_head[i], w[i]) + " |";
	out += "\n|";
	for (int i = 0; i < 8; ++i) out += std::string(w[i] + 1, '-') + ":|";
	out += "\n";
	for (const auto& c : cells) {
		out += "|";
		for (int i = 0; i < 8; ++i) out += " " + pad(c[i], w[i]) + " |";
		out += "\n";
	}
	return out;
}

}
