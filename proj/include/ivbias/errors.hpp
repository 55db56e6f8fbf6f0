#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ivbias {

// all library failures derive from Error; kind() gives a stable name for CLI reporting
struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
	virtual const char* kind() const { return "Error"; }
};

#define IVBIAS_ERROR_TYPE(name) \
	struct name : Error { \
		using Error::Error; \
		const char* kind() const override { return #name; } \
	}

IVBIAS_ERROR_TYPE(CalibrationInfeasible);	// targets not attainable inside the coefficient box
IVBIAS_ERROR_TYPE(DegenerateLaw);		// law conditions on a zero-probability event
IVBIAS_ERROR_TYPE(DegenerateSample);		// empty conditioning cell in a dataset
IVBIAS_ERROR_TYPE(WeakInstrument);		// |cov(X,G)| or the compliance difference below the floor
IVBIAS_ERROR_TYPE(UndefinedEstimand);		// estimand has no defined value at these moments
IVBIAS_ERROR_TYPE(InfeasibleLaw);		// no response-type distribution reproduces the law
IVBIAS_ERROR_TYPE(EmptyData);
IVBIAS_ERROR_TYPE(NoRoot);
IVBIAS_ERROR_TYPE(EmptyGrid);
IVBIAS_ERROR_TYPE(NoBracket);			// internal: root solver got same-sign endpoints

#undef IVBIAS_ERROR_TYPE

// CSV ingestion failure, carries the 1-based line number
struct ParseError : Error {
	int line;
	ParseError(int line_, const std::string& what_)
		: Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
	const char* kind() const override { return "ParseError"; }
};

// moment condition has several solutions; carries all of them
struct MultipleRoots : Error {
	std::vector<double> roots;
	MultipleRoots(const std::string& what_, std::vector<double> roots_)
		: Error(what_), roots(std::move(roots_)) {}
	const char* kind() const override { return "MultipleRoots"; }
};

}
