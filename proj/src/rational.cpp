#include "ncd/rational.hpp"

#include <cctype>

namespace ncd {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b)
{
	a = abs128(a);
	b = abs128(b);
	while (b != 0) {
		__int128 t = a % b;
		a = b;
		b = t;
	}
	return a;
}

mpz_class to_mpz(__int128 v)
{
	bool neg = v < 0;
	unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
	mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
	mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
	mpz_class r = (hi << 64) + lo;
	return neg ? mpz_class(-r) : r;
}

bool fits_small(const mpz_class& z, std::int64_t limit)
{
	return z.fits_slong_p() && z.get_si() < limit && z.get_si() > -limit;
}

} // namespace

Rational::Rational(long long value)
{
	assign_reduced(value, 1);
}

Rational::Rational(long long num, long long den)
{
	if (den == 0)
		throw DivisionByZero();
	assign_reduced(num, den);
}

Rational::Rational(const mpq_class& value)
{
	mpq_class v = value;
	v.canonicalize();
	assign_big(std::move(v));
}

Rational Rational::parse(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(c);
	if (s.empty())
		throw std::invalid_argument("empty rational literal");
	auto valid_int = [](std::string_view t) {
		std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
		if (i == t.size())
			return false;
		for (; i < t.size(); ++i)
			if (!std::isdigit(static_cast<unsigned char>(t[i])))
				return false;
		return true;
	};
	auto slash = s.find('/');
	std::string num = s.substr(0, slash);
	std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
	if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
		throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
	if (num[0] == '+')
		num.erase(0, 1);
	mpz_class n(num), d(den);
	if (d == 0)
		throw DivisionByZero();
	return Rational(mpq_class(n, d));
}

void Rational::assign_reduced(__int128 num, __int128 den)
{
	if (den < 0) {
		num = -num;
		den = -den;
	}
	__int128 g = gcd128(num, den);
	if (g > 1) {
		num /= g;
		den /= g;
	}
	if (num == 0)
		den = 1;
	if (abs128(num) < kSmallLimit && den < kSmallLimit) {
		num_ = static_cast<std::int64_t>(num);
		den_ = static_cast<std::int64_t>(den);
		big_.reset();
		return;
	}
	mpq_class q(to_mpz(num), to_mpz(den));
	big_ = std::make_shared<const mpq_class>(std::move(q));
	num_ = 0;
	den_ = 1;
}

void Rational::assign_big(mpq_class value)
{
	if (fits_small(value.get_num(), kSmallLimit) && fits_small(value.get_den(), kSmallLimit)) {
		num_ = value.get_num().get_si();
		den_ = value.get_den().get_si();
		big_.reset();
		return;
	}
	big_ = std::make_shared<const mpq_class>(std::move(value));
	num_ = 0;
	den_ = 1;
}

mpq_class Rational::to_mpq() const
{
	if (big_)
		return *big_;
	return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rational::is_integer() const
{
	return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const
{
	if (big_)
		return sgn(*big_);
	return (num_ > 0) - (num_ < 0);
}

std::optional<std::int64_t> Rational::small_numerator() const
{
	if (big_) {
		if (big_->get_num().fits_slong_p())
			return big_->get_num().get_si();
		return std::nullopt;
	}
	return num_;
}

std::optional<std::int64_t> Rational::small_denominator() const
{
	if (big_) {
		if (big_->get_den().fits_slong_p())
			return big_->get_den().get_si();
		return std::nullopt;
	}
	return den_;
}

Rational& Rational::operator+=(const Rational& o)
{
	if (!big_ && !o.big_) {
		if (den_ == o.den_)
			assign_reduced(static_cast<__int128>(num_) + o.num_, den_);
		else
			assign_reduced(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
			               static_cast<__int128>(den_) * o.den_);
		return *this;
	}
	assign_big(to_mpq() + o.to_mpq());
	return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
	return *this += -o;
}

Rational& Rational::operator*=(const Rational& o)
{
	if (!big_ && !o.big_) {
		assign_reduced(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
		return *this;
	}
	assign_big(to_mpq() * o.to_mpq());
	return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
	return *this *= o.inverse();
}

Rational Rational::operator-() const
{
	Rational r;
	if (big_)
		r.assign_big(-*big_);
	else {
		r.num_ = -num_;
		r.den_ = den_;
	}
	return r;
}

std::optional<Rational> Rational::checked_inverse() const
{
	if (is_zero())
		return std::nullopt;
	Rational r;
	if (big_) {
		mpq_class inv = 1 / *big_;
		r.assign_big(std::move(inv));
	} else
		r.assign_reduced(den_, num_);
	return r;
}

Rational Rational::inverse() const
{
	auto r = checked_inverse();
	if (!r)
		throw DivisionByZero();
	return *r;
}

Rational Rational::pow(int e) const
{
	if (e < 0)
		return inverse().pow(-e);
	Rational result(1), base = *this;
	while (e > 0) {
		if (e & 1)
			result *= base;
		e >>= 1;
		if (e)
			base *= base;
	}
	return result;
}

bool operator==(const Rational& a, const Rational& b)
{
	if (a.big_ || b.big_) {
		if (!a.big_ || !b.big_)
			return false;
		return *a.big_ == *b.big_;
	}
	return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b)
{
	if (!a.big_ && !b.big_)
		return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
	return a.to_mpq() < b.to_mpq();
}

std::string Rational::to_string() const
{
	if (big_)
		return big_->get_str();
	if (den_ == 1)
		return std::to_string(num_);
	return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace ncd
