#pragma once

#include <string>
#include <vector>

namespace hopf {

struct CheckResult {
	std::string name;
	bool passed = true;
	// Informational entries (flags, notes) never affect the overall status.
	bool informational = false;
	std::string witness;
};

class VerificationReport {
public:
	VerificationReport() = default;
	explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

	void add(std::string name, bool passed, std::string witness = {});
	void add_info(std::string name, bool value, std::string detail = {});
	void note(std::string text) { notes_.push_back(std::move(text)); }
	/// Appends every check of other, prefixing names with "prefix: ".
	void merge(const VerificationReport& other, const std::string& prefix = {});

	bool passed() const;
	const std::string& subject() const { return subject_; }
	const std::vector<CheckResult>& checks() const { return checks_; }
	const std::vector<std::string>& notes() const { return notes_; }
	const CheckResult* first_failure() const;

	std::string to_text() const;

private:
	std::string subject_;
	std::vector<CheckResult> checks_;
	std::vector<std::string> notes_;
};

} // namespace hopf
