#include "ivbias/json_io.hpp"

#include <cmath>
#include <fstream>

#include "ivbias/errors.hpp"

namespace ivbias {

namespace {

// intervals can be infinite (open upper crr bound); JSON numbers cannot
nlohmann::json endpoint(double v) {
	if (std::isfinite(v)) return v;
	return v > 0 ? "inf" : "-inf";
}

// a silently ignored misspelling yields a plausible-looking result for a
// different input, so configs reject fields they do not define
void check_fields(const nlohmann::json& j, const char* what,
		  std::initializer_list<const char*> allowed) {
	if (!j.is_object())
		throw Error(std::string(what) + ": config must be a JSON object");
	for (const auto& item : j.items()) {
		bool known = false;
		for (const char* a : allowed)
			if (item.key() == a) {
				known = true;
				break;
			}
		if (!known)
			throw Error(std::string(what) + ": unknown field '" + item.key() + "'");
	}
}

}

nlohmann::json to_json(const Scenario& s) {
	return {
		{"alpha1", s.alpha1}, {"alpha2", s.alpha2},
		{"alpha3", s.alpha3}, {"alpha4", s.alpha4},
		{"beta1", s.beta1}, {"beta2", s.beta2},
		{"beta3", s.beta3}, {"beta4", s.beta4},
		{"pg", s.pg},
		{"confounder", s.confounder == Confounder::discrete_uniform ? "discrete" : "continuous"},
		{"atoms", s.atoms},
		{"quad_nodes", s.quad_nodes},
	};
}

Scenario scenario_from_json(const nlohmann::json& j) {
	// 'achieved' is written by the calibrate command, so its output
	// files feed straight back in as scenario configs
	check_fields(j, "scenario",
		     {"alpha1", "alpha2", "alpha3", "alpha4", "beta1", "beta2", "beta3",
		      "beta4", "pg", "confounder", "atoms", "quad_nodes", "achieved"});
	Scenario s;
	s.alpha1 = j.value("alpha1", 0.0);
	s.alpha2 = j.value("alpha2", 0.0);
	s.alpha3 = j.value("alpha3", 0.0);
	s.alpha4 = j.value("alpha4", 0.0);
	s.beta1 = j.value("beta1", 0.0);
	s.beta2 = j.value("beta2", 0.0);
	s.beta3 = j.value("beta3", 0.0);
	s.beta4 = j.value("beta4", 0.0);
	s.pg = j.value("pg", 0.5);
	std::string kind = j.value("confounder", "continuous");
	if (kind == "discrete") s.confounder = Confounder::discrete_uniform;
	else if (kind == "continuous") s.confounder = Confounder::continuous_uniform;
	else throw Error("scenario: confounder must be 'continuous' or 'discrete'");
	s.atoms = j.value("atoms", 0);
	s.quad_nodes = j.value("quad_nodes", 0);
	return s;
}

nlohmann::json to_json(const CalibrationSpec& c) {
	return {
		{"target_px1", c.target_px1},
		{"target_rr_xg", c.target_rr_xg},
		{"target_py1", c.target_py1},
		{"target_crr", c.target_crr},
		{"alpha3", c.alpha3}, {"alpha4", c.alpha4},
		{"beta3", c.beta3}, {"beta4", c.beta4},
		{"pg", c.pg},
		{"quad_nodes", c.quad_nodes},
	};
}

CalibrationSpec calibration_from_json(const nlohmann::json& j) {
	check_fields(j, "calibration",
		     {"target_px1", "target_rr_xg", "target_py1", "target_crr", "alpha3",
		      "alpha4", "beta3", "beta4", "pg", "quad_nodes"});
	CalibrationSpec c;
	c.target_px1 = j.value("target_px1", c.target_px1);
	c.target_rr_xg = j.value("target_rr_xg", c.target_rr_xg);
	c.target_py1 = j.value("target_py1", c.target_py1);
	c.target_crr = j.value("target_crr", c.target_crr);
	c.alpha3 = j.value("alpha3", c.alpha3);
	c.alpha4 = j.value("alpha4", c.alpha4);
	c.beta3 = j.value("beta3", c.beta3);
	c.beta4 = j.value("beta4", c.beta4);
	c.pg = j.value("pg", c.pg);
	c.quad_nodes = j.value("quad_nodes", c.quad_nodes);
	return c;
}

nlohmann::json to_json(const GridSpec& g) {
	return {
		{"crr_targets", g.crr_targets},
		{"alpha3_set", g.alpha3_set},
		{"alpha4_set", g.alpha4_set},
		{"beta4_set", g.beta4_set},
		{"beta3", g.beta3},
		{"target_px1", g.target_px1},
		{"target_py1", g.target_py1},
		{"target_rr_xg", g.target_rr_xg},
		{"pg", g.pg},
		{"quad_nodes", g.quad_nodes},
	};
}

GridSpec grid_from_json(const nlohmann::json& j) {
	check_fields(j, "grid",
		     {"crr_targets", "alpha3_set", "alpha4_set", "beta4_set", "beta3",
		      "target_px1", "target_py1", "target_rr_xg", "pg", "quad_nodes"});
	GridSpec g;
	g.crr_targets = j.value("crr_targets", g.crr_targets);
	g.alpha3_set = j.value("alpha3_set", g.alpha3_set);
	g.alpha4_set = j.value("alpha4_set", g.alpha4_set);
	g.beta4_set = j.value("beta4_set", g.beta4_set);
	g.beta3 = j.value("beta3", g.beta3);
	g.target_px1 = j.value("target_px1", g.target_px1);
	g.target_py1 = j.value("target_py1", g.target_py1);
	g.target_rr_xg = j.value("target_rr_xg", g.target_rr_xg);
	g.pg = j.value("pg", g.pg);
	g.quad_nodes = j.value("quad_nodes", g.quad_nodes);
	return g;
}

nlohmann::json to_json(const ObservationalLaw& law) {
	nlohmann::json p = nlohmann::json::array();
	for (int y = 0; y < 2; ++y) {
		nlohmann::json px = nlohmann::json::array();
		for (int x = 0; x < 2; ++x)
			px.push_back({law.p[y][x][0], law.p[y][x][1]});
		p.push_back(px);
	}
	return {{"p", p}};
}

ObservationalLaw law_from_json(const nlohmann::json& j) {
	check_fields(j, "law", {"p"});
	if (!j.contains("p")) throw Error("law: missing field p");
	const auto& p = j.at("p");
	ObservationalLaw law;
	bool shape = p.is_array() && p.size() == 2;
	for (int y = 0; shape && y < 2; ++y) {
		shape = p[y].is_array() && p[y].size() == 2;
		for (int x = 0; shape && x < 2; ++x)
			shape = p[y][x].is_array() && p[y][x].size() == 2;
	}
	if (!shape) throw Error("law: p must be 2x2x2 nested [y][x][g]");
	for (int y = 0; y < 2; ++y)
		for (int x = 0; x < 2; ++x)
			for (int g = 0; g < 2; ++g)
				law.p[y][x][g] = p[y][x][g].get<double>();
	return law;
}

nlohmann::json to_json(const CausalTargets& t) {
	return {
		{"ey_do0", t.ey_do0}, {"ey_do1", t.ey_do1},
		{"crr", t.crr}, {"ace", t.ace},
		{"cor", t.cor}, {"lcrr", t.lcrr},
	};
}

nlohmann::json to_json(const JointMoments& m) {
	return {
		{"ey_g", m.ey_g}, {"ex_g", m.ex_g}, {"eyx_g", m.eyx_g},
		{"ey_x", m.ey_x},
		{"px1", m.px1}, {"py1", m.py1}, {"pg1", m.pg1},
		{"cov_yg", m.cov_yg}, {"cov_xg", m.cov_xg},
	};
}

nlohmann::json to_json(const EstimandSet& e) {
	return {
		{"nrr", e.nrr},
		{"livae", e.livae},
		{"livrr", e.livrr},
		{"livor", e.livor},
		{"wald_delta", e.wald_delta},
		{"wald_rr", e.wald_rr},
		{"wald_or", e.wald_or},
		{"msmm_gamma", e.msmm_gamma},
		{"msmm_rr", e.msmm_rr},
		{"msmm_ace", e.msmm_ace},
		{"msmm_cor", e.msmm_cor},
		{"valid", {
			{"nrr", e.valid.nrr},
			{"livae", e.valid.livae},
			{"livrr", e.valid.livrr},
			{"livor", e.valid.livor},
			{"wald_delta", e.valid.wald_delta},
			{"wald_rr", e.valid.wald_rr},
			{"wald_or", e.valid.wald_or},
			{"msmm_gamma", e.valid.msmm_gamma},
			{"msmm_rr", e.valid.msmm_rr},
			{"msmm_ace", e.valid.msmm_ace},
			{"msmm_cor", e.valid.msmm_cor},
		}},
	};
}

nlohmann::json to_json(const BoundInterval& b) {
	const char* name = "ace";
	switch (b.quantity) {
	case BoundQuantity::ey_do0: name = "ey_do0"; break;
	case BoundQuantity::ey_do1: name = "ey_do1"; break;
	case BoundQuantity::ace: name = "ace"; break;
	case BoundQuantity::crr: name = "crr"; break;
	}
	return {{"quantity", name}, {"lower", endpoint(b.lower)}, {"upper", endpoint(b.upper)}};
}

nlohmann::json to_json(const InequalityReport& r) {
	return {{"satisfied", r.satisfied}, {"worst_slack", r.worst_slack}};
}

nlohmann::json to_json(const BiasRow& row) {
	nlohmann::json j = {
		{"crr_target", row.crr_target},
		{"alpha3", row.alpha3}, {"alpha4", row.alpha4}, {"beta4", row.beta4},
		{"calibrated", row.calibrated},
	};
	if (!row.calibrated) {
		j["error"] = row.error;
		return j;
	}
	j["scenario"] = to_json(row.scenario);
	j["targets"] = to_json(row.targets);
	j["estimands"] = to_json(row.estimands);
	j["bias"] = {
		{"nrr", row.bias_nrr}, {"livrr", row.bias_livrr},
		{"wald_rr", row.bias_waldrr}, {"msmm_rr", row.bias_msmm},
		{"wald_or", row.bias_waldor}, {"livor", row.bias_livor},
	};
	return j;
}

void apply_override(nlohmann::json& config, const std::string& dotted_key, const std::string& value) {
	nlohmann::json* cur = &config;
	size_t pos = 0;
	while (true) {
		size_t dot = dotted_key.find('.', pos);
		std::string key = dotted_key.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
		if (key.empty()) throw Error("override: empty key segment in '" + dotted_key + "'");
		if (dot == std::string::npos) {
			nlohmann::json v;
			try {
				v = nlohmann::json::parse(value);
			} catch (...) {
				v = value;
			}
			(*cur)[key] = v;
			return;
		}
		cur = &(*cur)[key];
		pos = dot + 1;
	}
}

nlohmann::json load_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw Error("cannot open " + path);
	try {
		return nlohmann::json::parse(in);
	} catch (const std::exception& e) {
		throw Error(path + ": " + e.what());
	}
}

}
