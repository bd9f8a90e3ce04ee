#include <algorithm>

#include "doctest.h"
#include "ncd/parser.hpp"
#include "ncd/pq.hpp"
#include "ncd/sampler.hpp"
#include "ncd/tensor.hpp"

using namespace ncd;

namespace {

using RPoly = NcPoly<Rational>;
using RTensor = TensorPoly<Rational>;

const Letter A = 0, X = 1;

RPoly mono(std::initializer_list<Letter> w, Rational c = 1) { return RPoly::monomial(ax_alphabet(), Word(w), c); }

RPoly poly(const char* text) { return parse_poly(text, ax_alphabet()); }

RTensor simple(std::initializer_list<Letter> u, std::initializer_list<Letter> v, Rational c = 1)
{
	return RTensor::simple(ax_alphabet(), {Word(u), Word(v)}, c);
}

/// P(j,i) by filtering every word of length j+i on its letter counts.
RPoly brute_P(int j, int i)
{
	RPoly out(ax_alphabet());
	if (j < 0 || i < 0)
		return out;
	for (const Word& w : all_words(2, static_cast<std::size_t>(j + i)))
		if (w.count(A) == static_cast<std::size_t>(j))
			out += RPoly::monomial(ax_alphabet(), w);
	return out;
}

long long binomial(int n, int k)
{
	long long r = 1;
	for (int i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

} // namespace

TEST_SUITE("freealg")
{
	TEST_CASE("alphabets and words")
	{
		CHECK_THROWS(make_alphabet({}));
		CHECK_THROWS(make_alphabet({"a", "a"}));
		const auto& alpha = *ax_alphabet();
		CHECK(alpha.index("x") == X);
		CHECK_FALSE(alpha.find("y").has_value());
		const Word w = parse_word("a*x^2*a", alpha);
		CHECK(w == Word({A, X, X, A}));
		CHECK(w.to_string(alpha) == "a*x^2*a");
		CHECK(Word().to_string(alpha) == "1");
		CHECK(parse_word("1", alpha).empty());
		CHECK_THROWS(parse_word("a*y", alpha));
		CHECK(w.count(X) == 2);
		CHECK(w.contains(Word({X, A})));
		CHECK(w.find(Word({A})) == 0);
		CHECK(w.find(Word({A}), 1) == 3);
		CHECK(all_words(2, 5).size() == 32);
		CHECK(all_words(3, 0).size() == 1);
	}

	TEST_CASE("canonical word order is shortlex")
	{
		CHECK(Word({X}) < Word({A, A}));
		CHECK(Word({A, X}) < Word({X, A}));
		CHECK_FALSE(Word({X, A}) < Word({X, A}));
	}

	TEST_CASE("products")
	{
		CHECK(mono({X}) * mono({A}) == mono({X, A}));
		const RPoly p = mono({A, X}) + mono({X, A});
		CHECK(p * p == mono({A, X, A, X}) + mono({A, X, X, A}) + mono({X, A, A, X}) + mono({X, A, X, A}));
		CHECK(p * RPoly::constant(ax_alphabet(), Rational(1)) == p);
		CHECK((p - p).is_zero());
		CHECK((p - p).size() == 0);
		CHECK((Rational(0) * p).is_zero());
		CHECK(p.sandwich(Word({A}), Word({X})) == mono({A, A, X, X}) + mono({A, X, A, X}));
		CHECK(mono({X}).pow(3) == mono({X, X, X}));
	}

	TEST_CASE("no stored zero coefficients")
	{
		const RPoly p = RPoly::from_terms(ax_alphabet(), {{Word({A}), 1}, {Word({X}), 2}, {Word({A}), -1}});
		CHECK(p.size() == 1);
		CHECK(p.coefficient(Word({A})).is_zero());
		CHECK(p.coefficient(Word({X})) == Rational(2));
		for (const auto& [w, c] : (poly("a*x + x*a") * poly("a*x - x*a")).terms())
			CHECK_FALSE(c.is_zero());
	}

	TEST_CASE("alphabet mismatch")
	{
		const auto other = make_alphabet({"b", "y"});
		CHECK_THROWS_AS(mono({A}) + RPoly::letter(other, 0), AlphabetMismatch);
		CHECK_THROWS_AS(mono({A}) * RPoly::letter(other, 0), AlphabetMismatch);
		// an unbound polynomial adopts the other alphabet
		CHECK(RPoly() + mono({A}) == mono({A}));
	}

	TEST_CASE("ring axioms on random polynomials")
	{
		Sampler rng(5);
		for (int i = 0; i < 60; ++i) {
			const RPoly p = rng.poly(ax_alphabet(), 3, 4), q = rng.poly(ax_alphabet(), 3, 4),
			            r = rng.poly(ax_alphabet(), 3, 4);
			CHECK((p * q) * r == p * (q * r));
			CHECK(p * (q + r) == p * q + p * r);
			CHECK((p + q) * r == p * r + q * r);
			CHECK(p + q == q + p);
		}
	}

	TEST_CASE("printing")
	{
		CHECK(poly("2*a*x").to_string() == "2*a*x");
		CHECK(poly("x*a - 1/2*a^2*x + 3").to_string() == "-1/2*a^2*x + x*a + 3");
		CHECK(RPoly(ax_alphabet()).to_string() == "0");
		const auto q = Cyclotomic::generator(3);
		const auto c = NcPoly<Cyclotomic>::monomial(ax_alphabet(), Word({A}), q + Cyclotomic(1));
		CHECK(c.to_string() == "(q + 1)*a");
		CHECK((-c).to_string() == "(-q - 1)*a");
	}

	TEST_CASE("P and Q values")
	{
		CHECK(P(0, 0) == RPoly::constant(ax_alphabet(), Rational(1)));
		CHECK(P(1, 1) == mono({A, X}) + mono({X, A}));
		CHECK(P(2, 2) == poly("a^2*x^2 + a*x*a*x + a*x^2*a + x*a^2*x + x*a*x*a + x^2*a^2"));
		CHECK(P(-1, 3).is_zero());
		CHECK(Q(1, 0).is_zero());
		CHECK(Q(1, 1) == mono({X, A}));
		CHECK(Q(1, 2) == mono({X, A, X}) + mono({X, X, A}));
	}

	TEST_CASE("P agrees with brute-force enumeration")
	{
		for (int j = 0; j <= 6; ++j)
			for (int i = 0; i + j <= 9; ++i) {
				CHECK(P(j, i) == brute_P(j, i));
				CHECK(static_cast<long long>(mixed_words(j, i, A, X).size()) == binomial(i + j, j));
			}
	}

	TEST_CASE("recursion identities at sample points")
	{
		CHECK(check_pq_identity(PqIdentity::FirstStep, 1, 1));
		CHECK(check_pq_identity(PqIdentity::QStep, 1, 2));
		CHECK(check_pq_identity(PqIdentity::ExpansionA, 2, 2));
		const auto [lhs, rhs] = pq_identity_sides(PqIdentity::QStep, 1, 2);
		CHECK(lhs == poly("x*a*x + x^2*a"));
		CHECK(rhs == lhs);
	}

	TEST_CASE("step identities hold away from the boundary")
	{
		for (int r = 0; r <= 8; ++r)
			for (int s = 0; s <= 8; ++s) {
				if (r + s > 0)
					CHECK(check_pq_identity(PqIdentity::FirstStep, r, s));
				if (s > 0)
					CHECK(check_pq_identity(PqIdentity::QStep, r, s));
			}
	}

	TEST_CASE("step identities fail exactly on the degenerate boundary")
	{
		// P(0,0) = 1 while both terms on the right vanish
		CHECK_FALSE(check_pq_identity(PqIdentity::FirstStep, 0, 0));
		// Q(r,0) = 0 but P(r-1,0)a = a^r
		for (int r = 1; r <= 8; ++r) {
			CHECK_FALSE(check_pq_identity(PqIdentity::QStep, r, 0));
			CHECK(pq_identity_sides(PqIdentity::QStep, r, 0).second == RPoly::monomial(ax_alphabet(), Word::power(A, r)));
		}
		CHECK(check_pq_identity(PqIdentity::QStep, 0, 0));
	}

	TEST_CASE("expansion identities over their ranges")
	{
		for (PqIdentity kind : all_pq_identities()) {
			if (kind == PqIdentity::FirstStep || kind == PqIdentity::QStep)
				continue;
			const int lo = pq_identity_min_index(kind);
			for (int r = lo; r <= 6; ++r)
				for (int s = lo; s <= 6; ++s) {
					INFO(pq_identity_name(kind), " r=", r, " s=", s);
					CHECK(check_pq_identity(kind, r, s));
				}
		}
	}

	TEST_CASE("tensor products")
	{
		CHECK(simple({A}, {A}) * simple({A}, {A}) == simple({A, A}, {A, A}));
		const RTensor t = simple({}, {X}) + simple({X}, {A});
		CHECK(t * t == simple({}, {X, X}) + simple({X}, {X, A}) + simple({X}, {A, X}) + simple({X, X}, {A, A}));
		const RTensor u = simple({A, X}, {X}, Rational(3, 2));
		CHECK(u * RTensor::one(ax_alphabet()) == u);
		CHECK((u - u).is_zero());
		CHECK(RTensor::product({mono({A}) + mono({X}), mono({X})}) == simple({A}, {X}) + simple({X}, {X}));
		CHECK(u.to_string() == "3/2*(a*x ⊗ x)");
	}

	TEST_CASE("tensor multiplication is bilinear and associative")
	{
		Sampler rng(9);
		for (int i = 0; i < 30; ++i) {
			const RPoly p = rng.poly(ax_alphabet(), 2, 3), q = rng.poly(ax_alphabet(), 2, 3),
			            r = rng.poly(ax_alphabet(), 2, 3), s = rng.poly(ax_alphabet(), 2, 3);
			CHECK(RTensor::product({p, q}) * RTensor::product({r, s}) == RTensor::product({p * r, q * s}));
			CHECK(RTensor::product({p + r, q}) == RTensor::product({p, q}) + RTensor::product({r, q}));
		}
	}

	TEST_CASE("substitution and renaming")
	{
		const RPoly p = poly("a*x - x*a");
		// a -> a, x -> x + 1 fixes the commutator
		CHECK(substitute(p, {mono({A}), mono({X}) + RPoly::constant(ax_alphabet(), Rational(1))}, ax_alphabet()) == p);
		const auto du = make_alphabet({"d", "u"});
		CHECK(rename(p, {0, 1}, du).to_string() == "d*u - u*d");
		CHECK(rename(p, {1, 0}, ax_alphabet()) == -p);
	}
}
