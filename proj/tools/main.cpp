#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivbias/bounds.hpp"
#include "ivbias/empirical.hpp"
#include "ivbias/errors.hpp"
#include "ivbias/json_io.hpp"
#include "ivbias/study.hpp"

namespace {

void emit(const std::string& out, const std::string& text) {
	if (out.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(out);
	if (!f) throw ivbias::Error("cannot open " + out);
	f << text;
}

// a config naming any marginal target is a calibration spec; one naming
// coefficients is a scenario
ivbias::Scenario scenario_input(const nlohmann::json& cfg) {
	for (const char* k : {"target_px1", "target_rr_xg", "target_py1", "target_crr"})
		if (cfg.contains(k))
			return ivbias::calibrate(ivbias::calibration_from_json(cfg));
	return ivbias::scenario_from_json(cfg);
}

// a law can come from a law file or from a scenario config; both is ambiguous
ivbias::ObservationalLaw law_input(const nlohmann::json& cfg,
				   const std::string& config_path,
				   const std::string& law_path) {
	if (!law_path.empty() && !config_path.empty())
		throw ivbias::Error("give --config or --law, not both");
	if (!law_path.empty())
		return ivbias::law_from_json(ivbias::load_json_file(law_path));
	return ivbias::observational_law(scenario_input(cfg));
}

}

int main(int argc, char** argv) {
	CLI::App app{"logistic IV scenario engine: calibration, estimands, bounds, simulation"};
	app.require_subcommand(1);

	std::string config, law, data, grid, out, format = "md";
	long long n = 1000;
	unsigned long long seed = 0;
	std::vector<std::string> sets;

	auto add_common = [&](CLI::App* c) {
		c->add_option("--config", config, "scenario or calibration spec JSON");
		c->add_option("--out", out, "output path (default stdout)");
		c->add_option("--set", sets, "dotted-key config override, repeatable");
	};

	auto* cal = app.add_subcommand("calibrate", "solve coefficients for the marginal targets");
	add_common(cal);
	auto* tgt = app.add_subcommand("targets", "interventional quantities of a scenario");
	add_common(tgt);
	auto* est = app.add_subcommand("estimate", "estimands from a scenario, a law, or CSV data");
	add_common(est);
	est->add_option("--law", law, "observational law JSON");
	est->add_option("--data", data, "CSV dataset with header g,x,y");
	auto* bnd = app.add_subcommand("bounds", "nonparametric bounds and the instrumental inequality");
	add_common(bnd);
	bnd->add_option("--law", law, "observational law JSON");
	auto* chk = app.add_subcommand("check-iv", "instrumental inequality check; exit 1 on violation");
	add_common(chk);
	chk->add_option("--law", law, "observational law JSON");
	auto* sim = app.add_subcommand("simulate", "draw records from a scenario as CSV");
	add_common(sim);
	sim->add_option("--n", n, "number of records");
	sim->add_option("--seed", seed, "RNG seed");
	auto* tbl = app.add_subcommand("bias-table", "relative-bias table over a scenario grid");
	tbl->add_option("--grid", grid, "grid spec JSON (defaults to the small-effect grid)");
	tbl->add_option("--format", format, "csv, md, or json")->check(CLI::IsMember({"csv", "md", "json"}));
	tbl->add_option("--out", out, "output path (default stdout)");
	tbl->add_option("--set", sets, "dotted-key grid override, repeatable");

	CLI11_PARSE(app, argc, argv);

	try {
		// overrides land on whichever JSON the subcommand treats as its config
		nlohmann::json cfg = config.empty() ? nlohmann::json::object()
						    : ivbias::load_json_file(config);
		if (*tbl && !grid.empty()) cfg = ivbias::load_json_file(grid);
		for (const std::string& kv : sets) {
			size_t eq = kv.find('=');
			if (eq == std::string::npos)
				throw ivbias::Error("--set expects key=value, got '" + kv + "'");
			ivbias::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
		}

		if (*cal) {
			ivbias::Scenario s = ivbias::calibrate(ivbias::calibration_from_json(cfg));
			nlohmann::json j = ivbias::to_json(s);
			ivbias::JointMoments m = ivbias::moments(ivbias::observational_law(s));
			ivbias::CausalTargets t = ivbias::causal_targets(s);
			j["achieved"] = {
				{"px1", m.px1},
				{"py1", m.py1},
				{"rr_xg", m.ex_g[1] / m.ex_g[0]},
				{"crr", t.crr},
			};
			emit(out, j.dump(2) + "\n");
		} else if (*tgt) {
			ivbias::Scenario s = scenario_input(cfg);
			emit(out, ivbias::to_json(ivbias::causal_targets(s)).dump(2) + "\n");
		} else if (*est) {
			if (!data.empty() && (!config.empty() || !law.empty()))
				throw ivbias::Error("give one of --config, --law, --data");
			nlohmann::json j;
			if (!data.empty()) {
				ivbias::EmpiricalMoments em =
					ivbias::empirical_moments(ivbias::read_dataset_file(data));
				j["n"] = em.n;
				j["moments"] = ivbias::to_json(em.m);
				j["estimands"] = ivbias::to_json(ivbias::plugin_estimates(em));
			} else {
				ivbias::JointMoments m = ivbias::moments(law_input(cfg, config, law));
				j["moments"] = ivbias::to_json(m);
				j["estimands"] = ivbias::to_json(ivbias::all_estimands(m));
			}
			emit(out, j.dump(2) + "\n");
		} else if (*bnd) {
			ivbias::ObservationalLaw lw = law_input(cfg, config, law);
			nlohmann::json j;
			j["intervals"] = nlohmann::json::array();
			for (ivbias::BoundQuantity q : {ivbias::BoundQuantity::ey_do0,
							ivbias::BoundQuantity::ey_do1,
							ivbias::BoundQuantity::ace,
							ivbias::BoundQuantity::crr})
				j["intervals"].push_back(ivbias::to_json(ivbias::bound(lw, q)));
			j["inequality"] = ivbias::to_json(ivbias::instrumental_inequality(lw));
			emit(out, j.dump(2) + "\n");
		} else if (*chk) {
			ivbias::InequalityReport rep =
				ivbias::instrumental_inequality(law_input(cfg, config, law));
			emit(out, ivbias::to_json(rep).dump(2) + "\n");
			return rep.satisfied ? 0 : 1;
		} else if (*sim) {
			ivbias::Scenario s = scenario_input(cfg);
			ivbias::Dataset d = ivbias::simulate(s, n, seed);
			if (out.empty())
				ivbias::write_dataset(std::cout, d);
			else
				ivbias::write_dataset_file(out, d);
		} else if (*tbl) {
			ivbias::GridSpec gs = ivbias::grid_from_json(cfg);
			std::vector<ivbias::BiasRow> rows = ivbias::run_bias_study(gs);
			if (format == "json") {
				nlohmann::json j = nlohmann::json::array();
				for (const auto& r : rows) j.push_back(ivbias::to_json(r));
				emit(out, j.dump(2) + "\n");
			} else {
				ivbias::TableFormat tf = format == "csv" ? ivbias::TableFormat::csv
									 : ivbias::TableFormat::markdown;
				emit(out, ivbias::render(rows, tf));
			}
		}
	} catch (const ivbias::Error& e) {
		std::cerr << e.kind() << ": " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}
