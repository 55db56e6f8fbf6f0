#pragma once

#include <vector>

namespace ivbias {

enum class VarKind { binary, continuous };

// one observation; g is always 0/1, x and y may be real-valued
struct Record {
	int g = 0;
	double x = 0;
	double y = 0;
};

struct Dataset {
	std::vector<Record> records;
	VarKind exposure_kind = VarKind::binary;
	VarKind outcome_kind = VarKind::binary;
	long n() const { return static_cast<long>(records.size()); }
};

}
