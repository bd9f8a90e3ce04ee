#include <random>

#include "doctest.h"
#include "ncd/field.hpp"

using namespace ncd;

namespace {

Rational random_rational(std::mt19937_64& rng, long long bound)
{
	std::uniform_int_distribution<long long> num(-bound, bound), den(1, bound);
	return Rational(num(rng), den(rng));
}

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int order)
{
	std::vector<Rational> c;
	for (int i = 0; i < cyclotomic_field(order).degree; ++i)
		c.push_back(random_rational(rng, 9));
	return Cyclotomic(order, std::move(c));
}

} // namespace

TEST_SUITE("scalar")
{
	TEST_CASE("rational arithmetic")
	{
		CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
		CHECK(Rational(2, 4) == Rational(1, 2));
		CHECK(Rational(1, -2) == Rational(-1, 2));
		CHECK(Rational(0, 7) == Rational());
		CHECK(Rational(0, 7).to_string() == "0");
		CHECK(Rational(-3, 6).to_string() == "-1/2");
		CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
		CHECK(Rational(-2).pow(0) == Rational(1));
	}

	TEST_CASE("division by zero is an error")
	{
		CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
		CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
		CHECK_THROWS_AS(Rational(3) / Rational(0), DivisionByZero);
		CHECK_FALSE(Rational(0).checked_inverse().has_value());
		CHECK(Rational(-4).checked_inverse() == Rational(-1, 4));
	}

	TEST_CASE("parse and print")
	{
		CHECK(Rational::parse("-12/18") == Rational(-2, 3));
		CHECK(Rational::parse("7") == Rational(7));
		const Rational big = Rational::parse("123456789012345678901234567890/7");
		CHECK(Rational::parse(big.to_string()) == big);
		CHECK_THROWS(Rational::parse("1/"));
		CHECK_THROWS(Rational::parse("x"));
	}

	TEST_CASE("inline and spilled values agree with GMP")
	{
		std::mt19937_64 rng(7);
		for (int i = 0; i < 500; ++i) {
			const long long bound = i % 2 ? 9 : 4'000'000'000'000LL;
			const Rational a = random_rational(rng, bound), b = random_rational(rng, bound);
			const mpq_class A = a.to_mpq(), B = b.to_mpq();
			CHECK((a + b).to_mpq() == A + B);
			CHECK((a - b).to_mpq() == A - B);
			CHECK((a * b * a * b).to_mpq() == A * B * A * B);
			if (!b.is_zero())
				CHECK((a / b).to_mpq() == A / B);
			// canonical storage: a value that shrinks back is equal to its inline twin
			if (!b.is_zero())
				CHECK(a * b / b == a);
		}
	}

	TEST_CASE("rational field axioms")
	{
		std::mt19937_64 rng(11);
		for (int i = 0; i < 300; ++i) {
			const Rational a = random_rational(rng, 1'000'000), b = random_rational(rng, 1'000'000),
			               c = random_rational(rng, 1'000'000);
			CHECK((a + b) + c == a + (b + c));
			CHECK((a * b) * c == a * (b * c));
			CHECK(a * (b + c) == a * b + a * c);
			CHECK(a + b == b + a);
			CHECK(a * b == b * a);
			CHECK(a - a == Rational(0));
			if (!a.is_zero())
				CHECK(a * a.inverse() == Rational(1));
		}
	}

	TEST_CASE("cyclotomic polynomials")
	{
		CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
		CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
		CHECK(cyclotomic_polynomial(8) == std::vector<std::int64_t>{1, 0, 0, 0, 1});
		CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
		CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
		for (int n = 1; n <= 30; ++n)
			CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
	}

	TEST_CASE("arithmetic modulo Phi_3")
	{
		const Cyclotomic q = Cyclotomic::generator(3);
		CHECK(q * q == -q - Cyclotomic(1));
		CHECK((Cyclotomic(1) + q + q * q).is_zero());
		CHECK(q.to_string() == "q");
		CHECK((q * q).to_literal() == "-q - 1 (mod Phi_3)");
	}

	TEST_CASE("q is a primitive N-th root of unity")
	{
		for (int n = 1; n <= 16; ++n) {
			const Cyclotomic q = Cyclotomic::generator(n);
			CHECK(q.pow(n).is_one());
			for (int d : divisors(n))
				if (d < n)
					CHECK_FALSE(q.pow(d).is_one());
			CHECK(cyclotomic_field(n).degree == euler_phi(n));
		}
	}

	TEST_CASE("cyclotomic field axioms and inverses")
	{
		std::mt19937_64 rng(13);
		for (int order : {3, 4, 5, 8, 12}) {
			for (int i = 0; i < 40; ++i) {
				const Cyclotomic a = random_cyclotomic(rng, order), b = random_cyclotomic(rng, order),
				                 c = random_cyclotomic(rng, order);
				CHECK(a.coefficients().size() <= static_cast<std::size_t>(euler_phi(order)));
				CHECK((a * b) * c == a * (b * c));
				CHECK(a * (b + c) == a * b + a * c);
				CHECK(a * b == b * a);
				if (!a.is_zero())
					CHECK(a * a.inverse() == Cyclotomic(1));
				CHECK(Cyclotomic::parse_literal(a.to_literal()) == a);
			}
		}
	}

	TEST_CASE("rational constants combine with any field")
	{
		const Cyclotomic q = Cyclotomic::generator(5);
		CHECK((Cyclotomic(2) * q).order() == 5);
		CHECK(Cyclotomic(Rational(1, 2)).is_rational());
		CHECK_THROWS_AS(q + Cyclotomic::generator(7), CyclotomicMismatch);
		CHECK_THROWS_AS(Cyclotomic(0).inverse(), DivisionByZero);
	}
}
