#include "ncd/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace ncd {

namespace {

using RPoly = std::vector<Rational>;

void trim_poly(RPoly& p)
{
	while (!p.empty() && p.back().is_zero())
		p.pop_back();
}

// Remainder of p modulo a monic polynomial m.
RPoly poly_mod(RPoly p, const RPoly& m)
{
	trim_poly(p);
	const std::size_t dm = m.size() - 1;
	while (p.size() > dm) {
		Rational lead = p.back();
		std::size_t shift = p.size() - 1 - dm;
		for (std::size_t i = 0; i <= dm; ++i)
			p[shift + i] -= lead * m[i];
		trim_poly(p);
	}
	return p;
}

// Quotient and remainder for a general nonzero divisor.
std::pair<RPoly, RPoly> poly_divmod(RPoly p, const RPoly& d)
{
	trim_poly(p);
	RPoly q;
	const std::size_t dd = d.size() - 1;
	Rational inv_lead = d.back().inverse();
	if (p.size() > dd)
		q.assign(p.size() - dd, Rational());
	while (!p.empty() && p.size() > dd) {
		Rational c = p.back() * inv_lead;
		std::size_t shift = p.size() - 1 - dd;
		q[shift] = c;
		for (std::size_t i = 0; i <= dd; ++i)
			p[shift + i] -= c * d[i];
		trim_poly(p);
	}
	trim_poly(q);
	return {q, p};
}

RPoly poly_mul(const RPoly& a, const RPoly& b)
{
	if (a.empty() || b.empty())
		return {};
	RPoly r(a.size() + b.size() - 1);
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i].is_zero())
			continue;
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	}
	trim_poly(r);
	return r;
}

RPoly poly_sub(RPoly a, const RPoly& b)
{
	if (a.size() < b.size())
		a.resize(b.size());
	for (std::size_t i = 0; i < b.size(); ++i)
		a[i] -= b[i];
	trim_poly(a);
	return a;
}

std::vector<std::int64_t> int_poly_divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& monic)
{
	const std::size_t dd = monic.size() - 1;
	std::vector<std::int64_t> q(num.size() - dd, 0);
	for (std::size_t k = num.size(); k-- > dd;) {
		std::int64_t c = num[k];
		q[k - dd] = c;
		for (std::size_t i = 0; i <= dd; ++i)
			num[k - dd + i] -= c * monic[i];
	}
	for (std::size_t i = 0; i < dd; ++i)
		if (num[i] != 0)
			throw std::logic_error("inexact cyclotomic division");
	return q;
}

} // namespace

std::vector<int> divisors(int n)
{
	std::vector<int> out;
	for (int d = 1; d <= n; ++d)
		if (n % d == 0)
			out.push_back(d);
	return out;
}

int euler_phi(int n)
{
	int result = n;
	for (int p = 2; p * p <= n; ++p) {
		if (n % p == 0) {
			while (n % p == 0)
				n /= p;
			result -= result / p;
		}
	}
	if (n > 1)
		result -= result / n;
	return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(int order)
{
	if (order < 1)
		throw std::invalid_argument("cyclotomic order must be positive");
	static std::mutex mutex;
	static std::map<int, std::vector<std::int64_t>> cache;
	{
		std::lock_guard lock(mutex);
		if (auto it = cache.find(order); it != cache.end())
			return it->second;
	}
	std::vector<std::int64_t> p(order + 1, 0);
	p[0] = -1;
	p[order] = 1;
	for (int d : divisors(order))
		if (d < order)
			p = int_poly_divide_exact(std::move(p), cyclotomic_polynomial(d));
	std::lock_guard lock(mutex);
	cache.emplace(order, p);
	return p;
}

const CyclotomicField& cyclotomic_field(int order)
{
	static std::mutex mutex;
	static std::map<int, CyclotomicField> fields;
	auto phi = cyclotomic_polynomial(order);
	std::lock_guard lock(mutex);
	auto it = fields.find(order);
	if (it == fields.end()) {
		CyclotomicField f{order, static_cast<int>(phi.size()) - 1, {}};
		for (auto c : phi)
			f.modulus.emplace_back(static_cast<long long>(c));
		it = fields.emplace(order, std::move(f)).first;
	}
	return it->second;
}

Cyclotomic::Cyclotomic(const Rational& value)
{
	if (!value.is_zero())
		coeffs_.push_back(value);
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs) : field_(&cyclotomic_field(order)), coeffs_(std::move(coeffs))
{
	coeffs_ = poly_mod(std::move(coeffs_), field_->modulus);
}

Cyclotomic Cyclotomic::generator(int order)
{
	return Cyclotomic(order, {Rational(0), Rational(1)});
}

void Cyclotomic::trim()
{
	trim_poly(coeffs_);
}

const CyclotomicField* Cyclotomic::join(const Cyclotomic& o) const
{
	if (!field_)
		return o.field_;
	if (!o.field_ || o.field_ == field_)
		return field_;
	if (is_rational() || o.is_rational())
		return coeffs_.size() <= 1 ? o.field_ : field_;
	throw CyclotomicMismatch(field_->order, o.field_->order);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
	field_ = join(o);
	if (coeffs_.size() < o.coeffs_.size())
		coeffs_.resize(o.coeffs_.size());
	for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
		coeffs_[i] += o.coeffs_[i];
	trim();
	return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
	return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
	field_ = join(o);
	if (is_rational() && o.is_rational()) {
		if (coeffs_.empty() || o.coeffs_.empty())
			coeffs_.clear();
		else
			coeffs_[0] *= o.coeffs_[0];
		trim();
		return *this;
	}
	coeffs_ = poly_mod(poly_mul(coeffs_, o.coeffs_), field_->modulus);
	return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o)
{
	return *this *= o.inverse();
}

Cyclotomic Cyclotomic::operator-() const
{
	Cyclotomic r = *this;
	for (auto& c : r.coeffs_)
		c = -c;
	return r;
}

Cyclotomic Cyclotomic::inverse() const
{
	if (is_zero())
		throw DivisionByZero();
	if (is_rational()) {
		Cyclotomic r(coeffs_[0].inverse());
		r.field_ = field_;
		return r;
	}
	// Extended Euclid on (modulus, value): track s with s*value ≡ r (mod Φ).
	RPoly r0 = field_->modulus, r1 = coeffs_;
	RPoly s0, s1{Rational(1)};
	while (r1.size() > 1) {
		auto [q, rem] = poly_divmod(r0, r1);
		RPoly s2 = poly_sub(s0, poly_mul(q, s1));
		r0 = std::move(r1);
		r1 = std::move(rem);
		s0 = std::move(s1);
		s1 = std::move(s2);
	}
	if (r1.empty())
		throw std::logic_error("non-invertible cyclotomic element: modulus not irreducible?");
	Rational c = r1[0].inverse();
	for (auto& v : s1)
		v *= c;
	Cyclotomic out;
	out.field_ = field_;
	out.coeffs_ = poly_mod(std::move(s1), field_->modulus);
	return out;
}

Cyclotomic Cyclotomic::pow(int e) const
{
	if (e < 0)
		return inverse().pow(-e);
	Cyclotomic result(Rational(1)), base = *this;
	result.field_ = field_;
	while (e > 0) {
		if (e & 1)
			result *= base;
		e >>= 1;
		if (e)
			base *= base;
	}
	return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
	if (a.coeffs_ != b.coeffs_)
		return false;
	if (a.is_rational() || !a.field_ || !b.field_)
		return true;
	if (a.field_ != b.field_)
		throw CyclotomicMismatch(a.field_->order, b.field_->order);
	return true;
}

std::string Cyclotomic::to_string() const
{
	if (coeffs_.empty())
		return "0";
	std::string out;
	for (std::size_t k = coeffs_.size(); k-- > 0;) {
		const Rational& c = coeffs_[k];
		if (c.is_zero())
			continue;
		bool neg = c.sign() < 0;
		Rational mag = neg ? -c : c;
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";
		if (k == 0) {
			out += mag.to_string();
			continue;
		}
		if (!mag.is_one())
			out += mag.to_string() + "*";
		out += "q";
		if (k > 1)
			out += "^" + std::to_string(k);
	}
	return out;
}

std::string Cyclotomic::to_literal() const
{
	if (!field_)
		return to_string();
	return to_string() + " (mod Phi_" + std::to_string(field_->order) + ")";
}

Cyclotomic Cyclotomic::parse_literal(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(c);
	int order = 0;
	if (auto pos = s.find("(modPhi_"); pos != std::string::npos) {
		auto close = s.find(')', pos);
		if (close == std::string::npos || close != s.size() - 1)
			throw std::invalid_argument("malformed cyclotomic annotation in '" + std::string(text) + "'");
		order = std::stoi(s.substr(pos + 8, close - pos - 8));
		if (order < 1)
			throw std::invalid_argument("cyclotomic order must be positive");
		s = s.substr(0, pos);
	}
	std::map<int, Rational> terms;
	std::size_t i = 0;
	if (s.empty())
		throw std::invalid_argument("empty cyclotomic literal");
	while (i < s.size()) {
		bool neg = false;
		if (s[i] == '+' || s[i] == '-') {
			neg = s[i] == '-';
			++i;
		} else if (i != 0)
			throw std::invalid_argument("expected sign in cyclotomic literal '" + std::string(text) + "'");
		std::size_t j = i;
		while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
			++j;
		Rational coeff(1);
		if (j > i)
			coeff = Rational::parse(s.substr(i, j - i));
		i = j;
		int power = 0;
		if (i < s.size() && s[i] == '*')
			++i;
		if (i < s.size() && s[i] == 'q') {
			++i;
			power = 1;
			if (i < s.size() && s[i] == '^') {
				++i;
				std::size_t k = i;
				while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
					++k;
				if (k == i)
					throw std::invalid_argument("missing exponent in cyclotomic literal");
				power = std::stoi(s.substr(i, k - i));
				i = k;
			}
		} else if (j == i && (i >= s.size() || (s[i] != '+' && s[i] != '-')) && i < s.size())
			throw std::invalid_argument("unexpected character in cyclotomic literal '" + std::string(text) + "'");
		if (neg)
			coeff = -coeff;
		terms[power] += coeff;
	}
	int top = terms.rbegin()->first;
	if (top > 0 && order == 0)
		throw std::invalid_argument("cyclotomic literal with q needs a (mod Phi_N) annotation");
	std::vector<Rational> coeffs(top + 1);
	for (auto& [p, c] : terms)
		coeffs[p] = c;
	if (order == 0) {
		Cyclotomic r(coeffs[0]);
		return r;
	}
	return Cyclotomic(order, std::move(coeffs));
}

} // namespace ncd
