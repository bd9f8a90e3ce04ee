#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncd {

class DivisionByZero : public std::domain_error {
public:
	DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in 62 bits are stored
/// inline and combined with 128-bit intermediates; anything larger spills
/// to a shared, immutable GMP rational. The representation is canonical:
/// a value is stored big iff it does not fit the inline range, so equality
/// is a field-by-field comparison.
class Rational {
public:
	Rational() = default;
	Rational(long long value); // NOLINT(google-explicit-constructor)
	Rational(long long num, long long den);
	explicit Rational(const mpq_class& value);

	/// Parses `p`, `-p` or `p/q` with arbitrary-length decimal digits.
	static Rational parse(std::string_view text);

	bool is_zero() const { return !big_ && num_ == 0; }
	bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
	bool is_integer() const;
	int sign() const;

	/// Numerator/denominator when they fit in 64 bits.
	std::optional<std::int64_t> small_numerator() const;
	std::optional<std::int64_t> small_denominator() const;
	mpq_class to_mpq() const;

	Rational& operator+=(const Rational& o);
	Rational& operator-=(const Rational& o);
	Rational& operator*=(const Rational& o);
	Rational& operator/=(const Rational& o);

	friend Rational operator+(Rational a, const Rational& b) { return a += b; }
	friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
	Rational operator-() const;

	/// Throws DivisionByZero for zero.
	Rational inverse() const;
	std::optional<Rational> checked_inverse() const;
	Rational pow(int e) const;

	friend bool operator==(const Rational& a, const Rational& b);
	friend bool operator<(const Rational& a, const Rational& b);

	std::string to_string() const;

private:
	static constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

	void assign_reduced(__int128 num, __int128 den);
	void assign_big(mpq_class value);

	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
	std::shared_ptr<const mpq_class> big_;
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

} // namespace ncd
