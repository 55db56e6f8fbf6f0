#include "ivbias/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ivbias/errors.hpp"

namespace ivbias {

namespace {

constexpr double pivot_tol = 1e-12;	// row reduction and basis factorization
constexpr double feas_tol = 1e-10;	// vertex nonnegativity
constexpr double dedup_tol = 1e-10;
constexpr double consist_tol = 1e-9;	// dropped equality rows must carry ~zero rhs

// exposure of type tx under instrument g; outcome of type ty under exposure x
inline int x_of(int tx, int g) { return g ? (tx & 1) : (tx >> 1); }
inline int y_of(int ty, int x) { return x ? (ty & 1) : (ty >> 1); }

// rows: P(y,x|g) for g,x,y nested, then the simplex row; same matrix for every law
void fill_matrix(std::array<std::array<double, n_types>, 9>& a) {
	int row = 0;
	for (int g = 0; g < 2; ++g)
		for (int x = 0; x < 2; ++x)
			for (int y = 0; y < 2; ++y, ++row)
				for (int i = 0; i < n_types; ++i) {
					int tx = i / 4, ty = i % 4;
					a[row][i] = (x_of(tx, g) == x && y_of(ty, x) == y) ? 1.0 : 0.0;
				}
	for (int i = 0; i < n_types; ++i) a[8][i] = 1.0;
}

struct ReducedSystem {
	int rank = 0;
	std::array<std::array<double, n_types>, 9> ra{};	// reduced rows, first rank meaningful
	std::array<std::array<double, 9>, 9> t{};		// reduced rhs = t * original rhs
};

ReducedSystem reduce_constraints() {
	std::array<std::array<double, n_types>, 9> a;
	fill_matrix(a);
	// Gauss-Jordan on [A | I]; the identity block accumulates the row operations
	double m[9][n_types + 9] = {};
	for (int r = 0; r < 9; ++r) {
		for (int c = 0; c < n_types; ++c) m[r][c] = a[r][c];
		m[r][n_types + r] = 1;
	}
	int rank = 0;
	for (int col = 0; col < n_types && rank < 9; ++col) {
		int piv = -1;
		double best = pivot_tol;
		for (int r = rank; r < 9; ++r)
			if (std::abs(m[r][col]) > best) { best = std::abs(m[r][col]); piv = r; }
		if (piv < 0) continue;
		for (int c = 0; c < n_types + 9; ++c) std::swap(m[rank][c], m[piv][c]);
		double d = m[rank][col];
		for (int c = 0; c < n_types + 9; ++c) m[rank][c] /= d;
		for (int r = 0; r < 9; ++r) {
			if (r == rank || m[r][col] == 0) continue;
			double f = m[r][col];
			for (int c = 0; c < n_types + 9; ++c) m[r][c] -= f * m[rank][c];
		}
		++rank;
	}
	ReducedSystem rs;
	rs.rank = rank;
	for (int r = 0; r < 9; ++r) {
		for (int c = 0; c < n_types; ++c) rs.ra[r][c] = m[r][c];
		for (int c = 0; c < 9; ++c) rs.t[r][c] = m[r][n_types + c];
	}
	return rs;
}

bool invert(const double* m, double* inv, int r) {
	double w[9][18];
	for (int i = 0; i < r; ++i) {
		for (int j = 0; j < r; ++j) w[i][j] = m[i * r + j];
		for (int j = 0; j < r; ++j) w[i][r + j] = i == j;
	}
	for (int col = 0; col < r; ++col) {
		int piv = -1;
		double best = pivot_tol;
		for (int i = col; i < r; ++i)
			if (std::abs(w[i][col]) > best) { best = std::abs(w[i][col]); piv = i; }
		if (piv < 0) return false;
		for (int j = 0; j < 2 * r; ++j) std::swap(w[col][j], w[piv][j]);
		double d = w[col][col];
		for (int j = 0; j < 2 * r; ++j) w[col][j] /= d;
		for (int i = 0; i < r; ++i) {
			if (i == col || w[i][col] == 0) continue;
			double f = w[i][col];
			for (int j = 0; j < 2 * r; ++j) w[i][j] -= f * w[col][j];
		}
	}
	for (int i = 0; i < r; ++i)
		for (int j = 0; j < r; ++j) inv[i * r + j] = w[i][r + j];
	return true;
}

// all invertible bases are factorized once; only the rhs changes between laws
struct BasisTable {
	ReducedSystem rs;
	struct Basis {
		std::array<int, 9> cols;
		std::array<double, 81> inv;
	};
	std::vector<Basis> bases;
};

const BasisTable& basis_table() {
	static const BasisTable tbl = [] {
		BasisTable t;
		t.rs = reduce_constraints();
		int r = t.rs.rank;
		std::vector<int> c(r);
		for (int i = 0; i < r; ++i) c[i] = i;
		double mat[81], inv[81];
		while (true) {
			for (int i = 0; i < r; ++i)
				for (int j = 0; j < r; ++j) mat[i * r + j] = t.rs.ra[i][c[j]];
			if (invert(mat, inv, r)) {
				BasisTable::Basis b{};
				for (int i = 0; i < r; ++i) b.cols[i] = c[i];
				for (int i = 0; i < r * r; ++i) b.inv[i] = inv[i];
				t.bases.push_back(b);
			}
			int k = r - 1;
			while (k >= 0 && c[k] == n_types - r + k) --k;
			if (k < 0) break;
			++c[k];
			for (int j = k + 1; j < r; ++j) c[j] = c[j - 1] + 1;
		}
		return t;
	}();
	return tbl;
}

std::array<double, 9> law_rhs(const ObservationalLaw& law) {
	double tot = 0;
	for (int y = 0; y < 2; ++y)
		for (int x = 0; x < 2; ++x)
			for (int g = 0; g < 2; ++g) {
				double c = law.p[y][x][g];
				if (!std::isfinite(c) || c < -1e-12)
					throw Error("bounds: law cells must be nonnegative");
				tot += c;
			}
	if (std::abs(tot - 1) > 1e-8) throw Error("bounds: law cells must sum to 1");
	double w1 = law.pg1();
	if (w1 < 1e-12 || 1 - w1 < 1e-12)
		throw DegenerateLaw("bounds: a g group carries no mass");
	std::array<double, 9> b{};
	int row = 0;
	for (int g = 0; g < 2; ++g)
		for (int x = 0; x < 2; ++x)
			for (int y = 0; y < 2; ++y, ++row)
				b[row] = law.p[y][x][g] / (g ? w1 : 1 - w1);
	b[8] = 1;
	return b;
}

// reduced rhs plus the consistency of the dropped rows
bool reduce_rhs(const std::array<double, 9>& b, std::array<double, 9>& rb) {
	const BasisTable& tbl = basis_table();
	for (int i = 0; i < 9; ++i) {
		double s = 0;
		for (int j = 0; j < 9; ++j) s += tbl.rs.t[i][j] * b[j];
		rb[i] = s;
	}
	for (int i = tbl.rs.rank; i < 9; ++i)
		if (std::abs(rb[i]) > consist_tol) return false;
	return true;
}

bool any_feasible_basis(const std::array<double, 9>& rb) {
	const BasisTable& tbl = basis_table();
	int r = tbl.rs.rank;
	for (const auto& bs : tbl.bases) {
		bool ok = true;
		for (int i = 0; i < r && ok; ++i) {
			double v = 0;
			for (int j = 0; j < r; ++j) v += bs.inv[i * r + j] * rb[j];
			if (v < -feas_tol) ok = false;
		}
		if (ok) return true;
	}
	return false;
}

}

bool polytope_feasible(const ObservationalLaw& law) {
	std::array<double, 9> rb;
	if (!reduce_rhs(law_rhs(law), rb)) return false;
	return any_feasible_basis(rb);
}

ResponsePolytope build_polytope(const ObservationalLaw& law) {
	const BasisTable& tbl = basis_table();
	ResponsePolytope p;
	fill_matrix(p.a);
	p.b = law_rhs(law);
	p.rank = tbl.rs.rank;
	bool consistent = reduce_rhs(p.b, p.rb);
	if (!consistent || !any_feasible_basis(p.rb))
		throw InfeasibleLaw("build_polytope: law admits no response-type distribution");
	return p;
}

std::vector<std::array<double, n_types>> enumerate_vertices(const ResponsePolytope& p) {
	const BasisTable& tbl = basis_table();
	int r = tbl.rs.rank;
	for (int i = r; i < 9; ++i)
		if (std::abs(p.rb[i]) > consist_tol) return {};
	std::vector<std::array<double, n_types>> verts;
	double xb[9];
	for (const auto& bs : tbl.bases) {
		bool ok = true;
		for (int i = 0; i < r && ok; ++i) {
			double v = 0;
			for (int j = 0; j < r; ++j) v += bs.inv[i * r + j] * p.rb[j];
			if (v < -feas_tol) ok = false;
			xb[i] = v;
		}
		if (!ok) continue;
		std::array<double, n_types> q{};
		for (int i = 0; i < r; ++i) q[bs.cols[i]] = xb[i];
		verts.push_back(q);
	}
	// copies of one geometric vertex can interleave with copies of another
	// when leading coordinates tie exactly, so compare against every kept
	// vertex whose first coordinate is within the tolerance window
	std::sort(verts.begin(), verts.end());
	std::vector<std::array<double, n_types>> out;
	for (const auto& v : verts) {
		bool dup = false;
		for (int j = (int)out.size() - 1; j >= 0 && v[0] - out[j][0] <= dedup_tol; --j) {
			double dmax = 0;
			for (int i = 0; i < n_types; ++i)
				dmax = std::max(dmax, std::abs(v[i] - out[j][i]));
			if (dmax < dedup_tol) { dup = true; break; }
		}
		if (!dup) out.push_back(v);
	}
	return out;
}

BoundInterval bound(const ObservationalLaw& law, BoundQuantity q) {
	ResponsePolytope p = build_polytope(law);
	auto verts = enumerate_vertices(p);
	if (verts.empty()) throw InfeasibleLaw("bound: empty feasible region");
	auto ey0 = [](const std::array<double, n_types>& v) {
		double s = 0;
		for (int i = 0; i < n_types; ++i) s += v[i] * ((i % 4) >> 1);
		return s;
	};
	auto ey1 = [](const std::array<double, n_types>& v) {
		double s = 0;
		for (int i = 0; i < n_types; ++i) s += v[i] * ((i % 4) & 1);
		return s;
	};
	const double inf = std::numeric_limits<double>::infinity();
	BoundInterval out;
	out.quantity = q;
	if (q == BoundQuantity::crr) {
		// ratio extrema sit at vertices; a zero denominator with positive
		// numerator pushes the upper end to infinity (degenerate laws with no
		// positive-denominator vertex at all give [inf, inf])
		double lo = inf, hi = -inf;
		bool unbounded = false, any = false;
		for (const auto& v : verts) {
			double den = ey0(v), num = ey1(v);
			if (den > 1e-12) {
				any = true;
				double ratio = num / den;
				lo = std::min(lo, ratio);
				hi = std::max(hi, ratio);
			} else if (num > 1e-12) {
				unbounded = true;
			}
		}
		if (!any) { lo = inf; hi = inf; }
		if (unbounded) hi = inf;
		out.lower = std::max(0.0, lo);
		out.upper = hi;
		return out;
	}
	double lo = inf, hi = -inf;
	for (const auto& v : verts) {
		double val = 0;
		switch (q) {
		case BoundQuantity::ey_do0: val = ey0(v); break;
		case BoundQuantity::ey_do1: val = ey1(v); break;
		default: val = ey1(v) - ey0(v); break;
		}
		lo = std::min(lo, val);
		hi = std::max(hi, val);
	}
	if (q == BoundQuantity::ace) {
		out.lower = std::max(-1.0, lo);
		out.upper = std::min(1.0, hi);
	} else {
		out.lower = std::max(0.0, lo);
		out.upper = std::min(1.0, hi);
	}
	return out;
}

InequalityReport instrumental_inequality(const ObservationalLaw& law) {
	std::array<double, 9> b = law_rhs(law);	// validates and conditions on g
	auto cond = [&](int y, int x, int g) { return b[g * 4 + x * 2 + y]; };
	InequalityReport rep;
	double worst = -std::numeric_limits<double>::infinity();
	for (int x = 0; x < 2; ++x) {
		double s = 0;
		for (int y = 0; y < 2; ++y) s += std::max(cond(y, x, 0), cond(y, x, 1));
		worst = std::max(worst, s - 1);
	}
	rep.worst_slack = worst;
	rep.satisfied = worst <= feas_tol;
	return rep;
}

}
