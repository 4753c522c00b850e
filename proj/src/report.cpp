#include "hopf/report.hpp"

#include <sstream>

namespace hopf {

void VerificationReport::add(std::string name, bool passed, std::string witness)
{
	checks_.push_back({std::move(name), passed, false, std::move(witness)});
}

void VerificationReport::add_info(std::string name, bool value, std::string detail)
{
	checks_.push_back({std::move(name), value, true, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix)
{
	for (CheckResult c : other.checks_) {
		if (!prefix.empty())
			c.name = prefix + ": " + c.name;
		checks_.push_back(std::move(c));
	}
	for (const auto& n : other.notes_)
		notes_.push_back(n);
}

bool VerificationReport::passed() const
{
	for (const auto& c : checks_)
		if (!c.informational && !c.passed)
			return false;
	return true;
}

const CheckResult* VerificationReport::first_failure() const
{
	for (const auto& c : checks_)
		if (!c.informational && !c.passed)
			return &c;
	return nullptr;
}

std::string VerificationReport::to_text() const
{
	std::ostringstream os;
	if (!subject_.empty())
		os << subject_ << "\n";
	for (const auto& c : checks_) {
		if (c.informational)
			os << "  [info] " << c.name << ": " << (c.passed ? "true" : "false");
		else
			os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
		if (!c.witness.empty())
			os << "  (" << c.witness << ")";
		os << "\n";
	}
	for (const auto& n : notes_)
		os << "  note: " << n << "\n";
	os << "overall: " << (passed() ? "pass" : "FAIL") << "\n";
	return os.str();
}

} // namespace hopf
