#include "hopf/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hopf/errors.hpp"

namespace hopf {

Scalar::Scalar(long num, long den)
{
	if (den == 0)
		throw InputError("scalar with zero denominator");
	q_ = mpq_class(num, den);
	q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
	if (s.empty())
		return false;
	size_t i = 0;
	if (allow_sign && (s[0] == '-' || s[0] == '+'))
		i = 1;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

} // namespace

Scalar Scalar::parse(std::string_view text)
{
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!valid_integer(num, true) || !valid_integer(den, false))
		throw InputError("malformed rational '" + std::string(text) + "'");
	std::string n(num);
	if (n[0] == '+')
		n.erase(0, 1);
	mpz_class zn(n, 10), zd(std::string(den), 10);
	if (zd == 0)
		throw InputError("rational '" + std::string(text) + "' has zero denominator");
	return Scalar(mpq_class(zn, zd));
}

std::string Scalar::str() const
{
	if (q_.get_den() == 1)
		return q_.get_num().get_str();
	return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o)
{
	if (o.is_zero())
		throw InputError("division by zero");
	q_ /= o.q_;
	return *this;
}

Scalar Scalar::inverse() const { return Scalar(1) / *this; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace hopf
