#include "mfil/scalar.hpp"

#include <stdexcept>

namespace mfil {

Scalar make_scalar(long num, long den)
{
	if (den == 0)
		throw std::invalid_argument("zero denominator");
	Scalar r(num, den);
	r.canonicalize();
	return r;
}

namespace {

bool is_decimal(std::string_view s)
{
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
		s.remove_prefix(1);
	if (s.empty())
		return false;
	for (char c : s)
		if (c < '0' || c > '9')
			return false;
	return true;
}

}  // namespace

Integer parse_integer(std::string_view text)
{
	if (!is_decimal(text))
		throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
	if (text.front() == '+')
		text.remove_prefix(1);
	return Integer(std::string(text), 10);
}

Scalar parse_scalar(std::string_view text)
{
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Scalar(parse_integer(text));
	auto den_text = text.substr(slash + 1);
	if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
		throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
	Integer num = parse_integer(text.substr(0, slash));
	Integer den = parse_integer(den_text);
	if (den == 0)
		throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
	Scalar r(num, den);
	r.canonicalize();
	return r;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Scalar& value)
{
	if (value.get_den() == 1)
		return value.get_num().get_str(10);
	return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

}  // namespace mfil
