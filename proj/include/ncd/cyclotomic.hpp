#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncd/rational.hpp"

namespace ncd {

/// Coefficients of Φ_N, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int order);

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);
int euler_phi(int n);

struct CyclotomicField {
	int order;
	int degree;
	std::vector<Rational> modulus; // monic Φ_N, lowest degree first
};

/// Process-wide registry; the returned reference stays valid forever.
const CyclotomicField& cyclotomic_field(int order);

class CyclotomicMismatch : public std::invalid_argument {
public:
	CyclotomicMismatch(int a, int b)
	    : std::invalid_argument("mixing Q(zeta_" + std::to_string(a) + ") with Q(zeta_" + std::to_string(b) + ")") {}
};

/// Element of Q[q]/Φ_N(q).
///
/// An element constructed from a rational carries no field and acts as a
/// constant in whichever field it is combined with, so generic code can
/// write F(1) or F(r) without knowing N. Coefficients are trimmed of
/// trailing zeros; two values are equal iff their coefficient lists are.
class Cyclotomic {
public:
	Cyclotomic() = default;
	Cyclotomic(long long value) : Cyclotomic(Rational(value)) {} // NOLINT
	Cyclotomic(const Rational& value);                             // NOLINT
	Cyclotomic(int order, std::vector<Rational> coeffs);

	/// The class of q, a primitive N-th root of unity.
	static Cyclotomic generator(int order);
	/// Parses `q^2+q+1 (mod Phi_3)`; the annotation is mandatory unless the
	/// literal is a plain rational.
	static Cyclotomic parse_literal(std::string_view text);

	int order() const { return field_ ? field_->order : 0; }
	const std::vector<Rational>& coefficients() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }
	bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
	bool is_rational() const { return coeffs_.size() <= 1; }
	Rational rational_part() const { return coeffs_.empty() ? Rational() : coeffs_[0]; }

	Cyclotomic& operator+=(const Cyclotomic& o);
	Cyclotomic& operator-=(const Cyclotomic& o);
	Cyclotomic& operator*=(const Cyclotomic& o);
	Cyclotomic& operator/=(const Cyclotomic& o);
	friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
	friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
	friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
	friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
	Cyclotomic operator-() const;

	Cyclotomic inverse() const;
	Cyclotomic pow(int e) const;

	friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

	/// Polynomial in q, highest power first, e.g. `q^2 + q + 1`.
	std::string to_string() const;
	/// to_string() plus the `(mod Phi_N)` annotation when a field is bound.
	std::string to_literal() const;

private:
	const CyclotomicField* join(const Cyclotomic& o) const;
	void trim();

	const CyclotomicField* field_ = nullptr;
	std::vector<Rational> coeffs_;
};

inline std::string to_string(const Cyclotomic& c) { return c.to_string(); }

} // namespace ncd
