#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopf/catalog.hpp"
#include "hopf/io.hpp"

namespace hopf {

/// Outcome of one numbered replication criterion.
struct CriterionResult {
	int id = 0;
	std::string title;
	bool passed = true;
	std::vector<std::string> failures; // one line per failed sub-check
	std::vector<std::string> notes;
	double seconds = 0;
	double budget_seconds = 0;

	void expect(bool ok, const std::string& what);
};

struct ReplicationOptions {
	/// Criterion ids to run; empty runs all nine.
	std::vector<int> only;
	/// Applied to every catalog object before it is checked.
	std::function<void(CatalogObject&)> mutate;
	bool parallel = true;
};

struct ReplicationReport {
	std::vector<CriterionResult> criteria;
	bool passed() const;
};

constexpr int kCriteriaCount = 9;

CriterionResult run_criterion(int id, const ReplicationOptions& opts = {});
ReplicationReport replicate(const ReplicationOptions& opts = {});

/// Swaps the sign of Z in [Z,X] of every B(lambda) entry, which breaks
/// compatibility with delta(Z).
void corrupt_b_family(CatalogObject& obj);

Json replication_to_json(const ReplicationReport& r);
std::string replication_table(const ReplicationReport& r);

} // namespace hopf
