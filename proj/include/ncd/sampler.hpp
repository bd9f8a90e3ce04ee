#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncd/presentations.hpp"

namespace ncd {

/// Seeded source of random test data: rationals p/q with |p|, q <= 9, defining
/// polynomials and polynomials over [a, x].
class Sampler {
public:
	explicit Sampler(std::uint64_t seed) : rng_(seed) {}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

	Rational small_rational(bool nonzero = false)
	{
		while (true) {
			Rational r(uniform(-9, 9), uniform(1, 9));
			if (!nonzero || !r.is_zero())
				return r;
		}
	}

	/// Monic g of degree n with g(0) = 0 and random lower coefficients.
	DefiningPolynomial<Rational> monic_g(int n)
	{
		std::vector<Rational> c;
		for (int i = 1; i < n; ++i)
			c.push_back(small_rational());
		c.push_back(Rational(1));
		return DefiningPolynomial<Rational>(std::move(c));
	}

	/// g of degree n with a random nonzero leading coefficient.
	DefiningPolynomial<Rational> any_g(int n)
	{
		std::vector<Rational> c;
		for (int i = 1; i < n; ++i)
			c.push_back(small_rational());
		c.push_back(small_rational(true));
		return DefiningPolynomial<Rational>(std::move(c));
	}

	Word word(std::size_t letters, std::size_t length)
	{
		std::string packed;
		for (std::size_t i = 0; i < length; ++i)
			packed.push_back(static_cast<char>(uniform(0, static_cast<int>(letters) - 1)));
		return Word(std::move(packed));
	}

	NcPoly<Rational> poly(const AlphabetPtr& alphabet, int max_length, int terms)
	{
		std::vector<NcPoly<Rational>::Term> t;
		for (int i = 0; i < terms; ++i)
			t.emplace_back(word(alphabet->size(), static_cast<std::size_t>(uniform(0, max_length))), small_rational());
		return NcPoly<Rational>::from_terms(alphabet, std::move(t));
	}

	std::mt19937_64& engine() { return rng_; }

private:
	std::mt19937_64 rng_;
};

} // namespace ncd
