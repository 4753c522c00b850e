#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopf {

/// Exact rational number in canonical form (denominator > 0, reduced).
class Scalar {
public:
	Scalar() = default;
	Scalar(int v) : q_(v) {}
	Scalar(long v) : q_(v) {}
	Scalar(long num, long den);
	explicit Scalar(mpq_class q);

	/// Parses "p", "-p", "p/q" (whitespace not allowed). Throws InputError.
	static Scalar parse(std::string_view text);

	/// "p" when the denominator is 1, otherwise "p/q"; the sign sits on p.
	std::string str() const;

	bool is_zero() const { return sgn(q_) == 0; }
	bool is_one() const { return q_ == 1; }
	int sign() const { return sgn(q_); }
	std::string numerator() const { return q_.get_num().get_str(); }
	std::string denominator() const { return q_.get_den().get_str(); }
	const mpq_class& value() const { return q_; }

	Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
	Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
	Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
	Scalar& operator/=(const Scalar& o);

	friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
	friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
	friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
	Scalar operator-() const { return Scalar(mpq_class(-q_)); }

	friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
	friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
	{
		int c = cmp(a.q_, b.q_);
		return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater
		             : std::strong_ordering::equal;
	}

	Scalar inverse() const;

private:
	mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace hopf
