#pragma once

#include <concepts>
#include <string>

#include "ncd/cyclotomic.hpp"
#include "ncd/rational.hpp"

namespace ncd {

/// Exact scalars usable as polynomial coefficients.
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, Rational> && requires(const F a, const F b, F c) {
	{ a + b } -> std::same_as<F>;
	{ a - b } -> std::same_as<F>;
	{ a * b } -> std::same_as<F>;
	{ a / b } -> std::same_as<F>;
	{ -a } -> std::same_as<F>;
	{ c += a } -> std::same_as<F&>;
	{ c -= a } -> std::same_as<F&>;
	{ a.is_zero() } -> std::convertible_to<bool>;
	{ a.is_one() } -> std::convertible_to<bool>;
	{ a.inverse() } -> std::same_as<F>;
	{ to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(Field<Rational>);
static_assert(Field<Cyclotomic>);

/// True when the printed form needs parentheses as a product factor.
inline bool needs_parens(const Rational&) { return false; }
inline bool needs_parens(const Cyclotomic& c) { return !c.is_rational(); }

/// Sign-aware split used by the polynomial printers: returns true and the
/// magnitude when the scalar prints as a negative rational.
inline bool split_negative(const Rational& r, Rational& magnitude)
{
	magnitude = r.sign() < 0 ? -r : r;
	return r.sign() < 0;
}

inline bool split_negative(const Cyclotomic& c, Cyclotomic& magnitude)
{
	if (c.is_rational() && c.rational_part().sign() < 0) {
		magnitude = -c;
		return true;
	}
	magnitude = c;
	return false;
}

} // namespace ncd
