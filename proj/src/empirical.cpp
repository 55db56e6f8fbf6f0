#include "ivbias/empirical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "ivbias/errors.hpp"
#include "ivbias/roots.hpp"
#include "ivbias/scenario.hpp"

namespace ivbias {

namespace {

std::string trim(const std::string& s) {
	size_t a = s.find_first_not_of(" \t\r");
	if (a == std::string::npos) return "";
	size_t b = s.find_last_not_of(" \t\r");
	return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
	std::vector<std::string> out;
	size_t pos = 0;
	while (true) {
		size_t c = s.find(',', pos);
		if (c == std::string::npos) { out.push_back(s.substr(pos)); break; }
		out.push_back(s.substr(pos, c - pos));
		pos = c + 1;
	}
	return out;
}

double parse_num(const std::string& tok, int line, const char* field) {
	double v = 0;
	auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
	if (ec != std::errc() || p != tok.data() + tok.size())
		throw ParseError(line, std::string(field) + " is not a number: '" + tok + "'");
	if (!std::isfinite(v))
		throw ParseError(line, std::string(field) + " must be finite");
	return v;
}

}

Dataset read_dataset(std::istream& in) {
	std::string line;
	if (!std::getline(in, line)) throw EmptyData("dataset: no header");
	auto hf = split_commas(trim(line));
	if (hf.size() != 3 || trim(hf[0]) != "g" || trim(hf[1]) != "x" || trim(hf[2]) != "y")
		throw ParseError(1, "expected header g,x,y");
	Dataset d;
	bool bx = true, by = true;
	int lineno = 1;
	while (std::getline(in, line)) {
		++lineno;
		std::string t = trim(line);
		if (t.empty()) throw ParseError(lineno, "empty line");
		auto f = split_commas(t);
		if (f.size() != 3) throw ParseError(lineno, "expected 3 comma-separated fields");
		double gv = parse_num(trim(f[0]), lineno, "g");
		double xv = parse_num(trim(f[1]), lineno, "x");
		double yv = parse_num(trim(f[2]), lineno, "y");
		if (gv != 0 && gv != 1) throw ParseError(lineno, "g must be 0 or 1");
		if (yv < 0) throw ParseError(lineno, "y must be nonnegative");
		if (xv != 0 && xv != 1) bx = false;
		if (yv != 0 && yv != 1) by = false;
		d.records.push_back({static_cast<int>(gv), xv, yv});
	}
	if (d.records.empty()) throw EmptyData("dataset: no data rows");
	d.exposure_kind = bx ? VarKind::binary : VarKind::continuous;
	d.outcome_kind = by ? VarKind::binary : VarKind::continuous;
	return d;
}

Dataset read_dataset_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw Error("cannot open " + path);
	return read_dataset(in);
}

void write_dataset(std::ostream& out, const Dataset& d) {
	out << "g,x,y\n";
	char buf[64];
	for (const auto& r : d.records) {
		out << r.g << ',';
		if (d.exposure_kind == VarKind::binary) {
			out << static_cast<int>(r.x);
		} else {
			std::snprintf(buf, sizeof buf, "%.17g", r.x);
			out << buf;
		}
		out << ',';
		if (d.outcome_kind == VarKind::binary) {
			out << static_cast<int>(r.y);
		} else {
			std::snprintf(buf, sizeof buf, "%.17g", r.y);
			out << buf;
		}
		out << '\n';
	}
}

void write_dataset_file(const std::string& path, const Dataset& d) {
	std::ofstream out(path);
	if (!out) throw Error("cannot open " + path);
	write_dataset(out, d);
}

EmpiricalMoments empirical_moments(const Dataset& d) {
	if (d.records.empty()) throw EmptyData("empirical_moments: no records");
	EmpiricalMoments em;
	em.n = static_cast<long>(d.records.size());
	em.binary_x = d.exposure_kind == VarKind::binary;
	em.binary_y = d.outcome_kind == VarKind::binary;
	double sy[2] = {}, sx[2] = {}, sxy[2] = {}, syx[2] = {};
	for (const auto& r : d.records) {
		em.n_g[r.g]++;
		sy[r.g] += r.y;
		sx[r.g] += r.x;
		sxy[r.g] += r.x * r.y;
		if (em.binary_x) {
			int xi = static_cast<int>(r.x);
			em.n_x[xi]++;
			syx[xi] += r.y;
		}
	}
	if (em.n_g[0] == 0 || em.n_g[1] == 0)
		throw DegenerateSample("empirical_moments: a g group is empty");
	JointMoments& m = em.m;
	for (int g = 0; g < 2; ++g) {
		m.ey_g[g] = sy[g] / em.n_g[g];
		m.ex_g[g] = sx[g] / em.n_g[g];
		m.eyx_g[g] = sxy[g] / em.n_g[g];
	}
	double n = static_cast<double>(em.n);
	m.pg1 = em.n_g[1] / n;
	m.px1 = (sx[0] + sx[1]) / n;
	m.py1 = (sy[0] + sy[1]) / n;
	// plug-in covariances; the G sums only touch g=1 records
	m.cov_yg = sy[1] / n - m.py1 * m.pg1;
	m.cov_xg = sx[1] / n - m.px1 * m.pg1;
	double nan = std::numeric_limits<double>::quiet_NaN();
	m.ey_x = {nan, nan};
	if (em.binary_x)
		for (int x = 0; x < 2; ++x)
			if (em.n_x[x] > 0) m.ey_x[x] = syx[x] / em.n_x[x];
	return em;
}

EstimandSet plugin_estimates(const EmpiricalMoments& em) {
	EstimandSet es = all_estimands(em.m);
	if (!em.binary_x) {
		// these formulas read X as an event indicator, meaningless otherwise
		double nan = std::numeric_limits<double>::quiet_NaN();
		es.nrr = es.livrr = es.livor = nan;
		es.msmm_gamma = es.msmm_rr = es.msmm_ace = es.msmm_cor = nan;
		es.valid.nrr = es.valid.livrr = es.valid.livor = false;
		es.valid.msmm_gamma = es.valid.msmm_rr = false;
		es.valid.msmm_ace = es.valid.msmm_cor = false;
	}
	return es;
}

namespace {

struct WRec {
	double g, x, y, w;
};

struct MomentEval {
	double f;
	bool clamped;
};

MomentEval moment_at(const std::vector<WRec>& rs, double wsum, double gbar, double gamma) {
	double s = 0;
	bool clamped = false;
	for (const auto& r : rs) {
		double e = -gamma * r.x;
		if (e > 700) { e = 700; clamped = true; }
		if (e < -700) { e = -700; clamped = true; }
		s += r.w * r.y * std::exp(e) * (r.g - gbar);
	}
	return {s / wsum, clamped};
}

double solve_msmm_core(const std::vector<WRec>& rs) {
	double wsum = 0, wg = 0, wy = 0;
	for (const auto& r : rs) {
		wsum += r.w;
		wg += r.w * r.g;
		wy += r.w * std::abs(r.y);
	}
	if (wsum <= 0) throw EmptyData("msmm solver: no mass");
	double gbar = wg / wsum;
	if (gbar <= 0 || gbar >= 1)
		throw DegenerateSample("msmm solver: a g group is empty");
	if (wy == 0)
		throw UndefinedEstimand("msmm solver: moment condition vanishes identically");
	constexpr int cells = 256;
	double half = 10;
	while (true) {
		// roots are taken from sign changes only; an absolute smallness
		// test would misread the asymptotic decay of a one-signed moment
		// function as a root
		std::vector<double> roots;
		MomentEval prev = moment_at(rs, wsum, gbar, -half);
		double prevx = -half;
		if (!prev.clamped && prev.f == 0) roots.push_back(prevx);
		for (int j = 1; j <= cells; ++j) {
			double xj = -half + 2 * half * j / cells;
			MomentEval cur = moment_at(rs, wsum, gbar, xj);
			if (!cur.clamped && !prev.clamped && prev.f != 0) {
				if (cur.f == 0)
					roots.push_back(xj);
				else if ((prev.f < 0) != (cur.f < 0))
					roots.push_back(brent_root(
						[&](double t) { return moment_at(rs, wsum, gbar, t).f; },
						prevx, xj, 1e-13));
			}
			prev = cur;
			prevx = xj;
		}
		std::sort(roots.begin(), roots.end());
		std::vector<double> uniq;
		for (double r : roots)
			if (uniq.empty() || r - uniq.back() > 1e-9) uniq.push_back(r);
		if (uniq.size() == 1) return uniq[0];
		if (uniq.size() > 1) {
			std::string msg = "msmm solver: moment condition has several roots:";
			char buf[32];
			for (double r : uniq) {
				std::snprintf(buf, sizeof buf, " %.12g", r);
				msg += buf;
			}
			throw MultipleRoots(msg, uniq);
		}
		if (half >= 1000) throw NoRoot("msmm solver: no sign change up to the bracket cap");
		half = std::min(half * 2, 1000.0);
	}
}

}

double solve_msmm_general(const Dataset& d) {
	if (d.records.empty()) throw EmptyData("msmm solver: no records");
	std::vector<WRec> rs;
	rs.reserve(d.records.size());
	for (const auto& r : d.records)
		rs.push_back({static_cast<double>(r.g), r.x, r.y, 1.0});
	return solve_msmm_core(rs);
}

double solve_msmm_general(const ObservationalLaw& law) {
	std::vector<WRec> rs;
	double tot = 0;
	for (int y = 0; y < 2; ++y)
		for (int x = 0; x < 2; ++x)
			for (int g = 0; g < 2; ++g) {
				double w = law.p[y][x][g];
				if (!std::isfinite(w) || w < -1e-12)
					throw Error("msmm solver: law cells must be nonnegative");
				tot += w;
				rs.push_back({static_cast<double>(g), static_cast<double>(x),
					      static_cast<double>(y), std::max(w, 0.0)});
			}
	if (std::abs(tot - 1) > 1e-8) throw Error("msmm solver: law cells must sum to 1");
	return solve_msmm_core(rs);
}

double solve_additive_smm(const Dataset& d) {
	if (d.records.empty()) throw EmptyData("additive smm: no records");
	double n = static_cast<double>(d.records.size());
	double sg = 0, sx = 0, sy = 0, sxg = 0, syg = 0;
	for (const auto& r : d.records) {
		sg += r.g;
		sx += r.x;
		sy += r.y;
		sxg += r.x * r.g;
		syg += r.y * r.g;
	}
	double cxg = sxg / n - (sx / n) * (sg / n);
	double cyg = syg / n - (sy / n) * (sg / n);
	if (std::abs(cxg) < weak_floor)
		throw WeakInstrument("additive smm: cov(X,G) below the floor");
	return cyg / cxg;
}

double solve_additive_smm(const ObservationalLaw& law) {
	return livae(moments(law));
}

}
