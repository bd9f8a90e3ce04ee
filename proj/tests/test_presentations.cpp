#include "doctest.h"
#include "ncd/parser.hpp"
#include "ncd/sampler.hpp"

using namespace ncd;

namespace {

using RPoly = NcPoly<Rational>;
using CPoly = NcPoly<Cyclotomic>;
using RDef = DefiningPolynomial<Rational>;

RPoly poly(const char* text) { return parse_poly(text, ax_alphabet()); }

const Rule<Rational>& rule_named(const ReductionSystem<Rational>& sys, const std::string& label)
{
	for (const auto& r : sys.rules())
		if (r.label == label)
			return r;
	FAIL("no rule " << label);
	throw std::logic_error("unreachable");
}

std::string rule_text(const Rule<Rational>& r, const ReductionSystem<Rational>& sys)
{
	return r.lhs.to_string(*sys.alphabet()) + " -> " + r.rhs.to_string(&sys.order());
}

} // namespace

TEST_SUITE("presentations")
{
	TEST_CASE("defining polynomials")
	{
		const RDef g = parse_defining("x^3 + 2*x^2 + 1/2*x");
		CHECK(g.coefficients() == std::vector<Rational>{Rational(1, 2), 2, 1});
		CHECK(parse_defining("1, 0, 1") == RDef({1, 0, 1}));
		CHECK(g.to_string() == "x^3 + 2*x^2 + 1/2*x");
		CHECK(RDef({1, 1, 0, 0}).degree() == 2);
		CHECK_THROWS(RDef({1}));
		CHECK_THROWS(RDef({1, 0}));
		CHECK_THROWS(parse_defining("x^2 + 1"));
		CHECK_THROWS(parse_defining("x*y"));
		CHECK(RDef({2, 4}).monic() == RDef({Rational(1, 2), 1}));
		CHECK(RDef({1, 1}).scaled(Rational(2)) == RDef({2, 4}));
	}

	TEST_CASE("sigma generators")
	{
		for (Rational r1 : {Rational(0), Rational(3), Rational(-2, 5)}) {
			const RPoly a = poly("a"), a2 = poly("a^2");
			CHECK(sigma(1, RDef({r1, 1})) == poly("a*x + x*a") + r1 * a - r1 * a2);
		}
		const Rational r1(7), r2(-1, 3);
		CHECK(sigma(2, RDef({r1, r2, 1})) == poly("a^2*x + a*x*a + x*a^2") + r2 * poly("a^2") - r2 * poly("a^3"));
		const Cyclotomic lambda = Cyclotomic::generator(8);
		const DefiningPolynomial<Cyclotomic> lem({0, lambda * lambda, 0, 1});
		CHECK(sigma(3, lem) == parse_poly("a^3*x + a^2*x*a + a*x*a^2 + x*a^3", ax_alphabet(), ScalarSymbol{}));
		CHECK_THROWS_AS(sigma(0, RDef({0, 1})), std::out_of_range);
		CHECK_THROWS_AS(sigma(2, RDef({0, 1})), std::out_of_range);
	}

	TEST_CASE("oriented systems")
	{
		const auto q = build_system(RDef({0, 1}));
		REQUIRE(q.system.rules().size() == 1);
		CHECK(rule_text(q.system.rules()[0], q.system) == "a*x -> -x*a");

		const auto nodal = build_system(RDef({0, 1, 1}));
		CHECK(rule_named(nodal.system, "sigma_1").lhs == Word({0, 1, 1}));
		CHECK(rule_named(nodal.system, "sigma_1").rhs == poly("-x*a*x - x^2*a - a*x - x*a"));

		const auto cubic = build_system(RDef({0, 0, 1}));
		CHECK(rule_named(cubic.system, "sigma_1").rhs == poly("-x*a*x - x^2*a"));
		CHECK(rule_named(cubic.system, "sigma_2").lhs == Word({0, 0, 1}));
		CHECK(rule_named(cubic.system, "sigma_2").rhs == poly("-a*x*a - x*a^2"));
	}

	TEST_CASE("random systems are compatible with left sides a^j x^(n-j)")
	{
		Sampler rng(31);
		for (int i = 0; i < 50; ++i) {
			const int n = 2 + i % 4;
			const auto pres = build_system(rng.monic_g(n));
			CHECK(check_compatibility(pres.system.rules(), pres.system.order()).compatible());
			for (int j = 1; j < n; ++j)
				CHECK(pres.system.rules()[static_cast<std::size_t>(j - 1)].lhs ==
				      Word::power(0, static_cast<std::size_t>(j)) * Word::power(1, static_cast<std::size_t>(n - j)));
		}
	}

	TEST_CASE("non-monic g is divided by its leading coefficient")
	{
		Rational scale;
		const auto pres = build_system(RDef({2, 2}), &scale);
		CHECK(scale == Rational(2));
		CHECK(pres.relations == build_system(RDef({1, 1})).relations);
	}

	TEST_CASE("scaling identity")
	{
		Sampler rng(32);
		const RPoly p = rng.poly(ax_alphabet(), 5, 6);
		CHECK(scale_theta(p, Rational(1)) == p);
		CHECK_THROWS(scale_theta(p, Rational(0)));
		CHECK_THROWS(RDef({1, 1}).scaled(Rational(0)));
		for (int i = 0; i < 100; ++i) {
			const int n = rng.uniform(2, 5);
			const RDef g = rng.any_g(n);
			const Rational lambda = rng.small_rational(true);
			for (int j = 1; j < n; ++j)
				CHECK(scale_theta(sigma(j, g), lambda) == lambda.pow(-j) * sigma(j, scale_poly(g, lambda)));
		}
	}

	TEST_CASE("quantum plane at a root of unity")
	{
		const auto two = build_quantum_plane(2);
		REQUIRE(two.rules().size() == 1);
		CHECK(two.rules()[0].lhs == Word({1, 0}));
		CHECK(two.rules()[0].rhs == CPoly::monomial(ax_alphabet(), Word({0, 1}), Cyclotomic(-1)));

		const auto three = build_quantum_plane(3);
		// P(1,2) -> (1 + q + q^2) ax^2
		CHECK(three.normal_form(P<Cyclotomic>(1, 2, ax_alphabet(), 0, 1)).is_zero());
		CHECK(build_quantum_plane(4).normal_form(P<Cyclotomic>(2, 2, ax_alphabet(), 0, 1)).is_zero());
		for (int n = 2; n <= 8; ++n) {
			const auto sys = build_quantum_plane(n);
			for (int j = 1; j < n; ++j)
				CHECK(sys.normal_form(P<Cyclotomic>(j, n - j, ax_alphabet(), 0, 1)).is_zero());
			// below the root order the Gaussian binomial survives
			if (n >= 3)
				CHECK_FALSE(sys.normal_form(P<Cyclotomic>(1, 1, ax_alphabet(), 0, 1)).is_zero());
		}
		CHECK_THROWS(build_quantum_plane(1));
	}

	TEST_CASE("down-up relations")
	{
		const auto m1 = downup_relations<Rational>(-1, -1, 0);
		CHECK(m1[0].to_string() == "d^2*u + d*u*d + u*d^2");
		CHECK(m1[1].to_string() == "d*u^2 + u*d*u + u^2*d");
		const auto plain = downup_relations<Rational>(0, 1, 0);
		CHECK(plain[0].to_string() == "d^2*u - u*d^2");
		CHECK(plain[1].to_string() == "d*u^2 - u^2*d");
		const auto cubic = build_system(RDef({0, 0, 1})).relations;
		CHECK(rename(m1[0], {0, 1}, ax_alphabet()) == cubic[1]);
		CHECK(rename(m1[1], {0, 1}, ax_alphabet()) == cubic[0]);
	}

	TEST_CASE("leading filtered parts")
	{
		const std::vector<int> weights{1, 2};
		Sampler rng(33);
		for (int i = 0; i < 20; ++i) {
			const RDef g = rng.monic_g(3);
			CHECK(leading_filtered_part(sigma(1, g), weights) == poly("a*x^2 + x*a*x + x^2*a"));
			CHECK(leading_filtered_part(sigma(2, g), weights) == poly("a^2*x + a*x*a + x*a^2"));
		}
		const RPoly h = poly("a*x - 2*x*a");
		CHECK(leading_filtered_part(h, weights) == h);
	}

	TEST_CASE("two-factor presentation")
	{
		const auto pres = build_tensor_presentation(RDef({0, 1}), RDef({0, 1}));
		const auto& sys = pres.system;
		std::vector<std::string> rules;
		for (const auto& r : sys.rules())
			rules.push_back(r.label + ": " + rule_text(r, sys));
		CHECK(rules == std::vector<std::string>{"[x,y]: y*x -> x*y", "[x,b]: b*x -> x*b", "[a,b]: b*a -> a*b",
		                                        "[a,y]: y*a -> a*y", "sigma_1: a*x -> -x*a", "tau_1: b*y -> -y*b",
		                                        "group: b^2 -> a^2", "curve: y^2 -> x^2"});
		CHECK(check_confluence(sys).confluent());
	}

	TEST_CASE("nodal cubic and lemniscate relation lists")
	{
		const auto nodal = build_tensor_presentation(RDef({0, 1, 1}), RDef({0, 1}));
		const auto& alpha = nodal.alphabet;
		auto rel = [&](const std::string& label) {
			for (std::size_t i = 0; i < nodal.labels.size(); ++i)
				if (nodal.labels[i] == label)
					return nodal.relations[i];
			return RPoly(alpha);
		};
		CHECK(rel("tau_1") == parse_poly("y*b + b*y", alpha));
		CHECK(rel("group") == parse_poly("a^3 - b^2", alpha));
		CHECK(rel("sigma_1") == parse_poly("a*x + x*a + a*x^2 + x*a*x + x^2*a", alpha));
		CHECK(check_confluence(nodal.system).confluent());

		const Cyclotomic lambda = Cyclotomic::generator(8);
		const auto lem = build_tensor_presentation(DefiningPolynomial<Cyclotomic>({0, lambda * lambda, 0, 1}),
		                                           DefiningPolynomial<Cyclotomic>({0, 1}));
		CHECK(lem.relations[4 + 3] == parse_poly("b*y + y*b", lem.alphabet, ScalarSymbol{"lambda", 8}));
		CHECK(check_compatibility(lem.system.rules(), lem.system.order()).compatible());
	}

	TEST_CASE("curve basis")
	{
		const auto basis = curve_basis(RDef({0, 1}), RDef({0, 0, 1}), 6);
		// x^i y^j with j < 3 and 3i + 2j <= 6
		CHECK(basis == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}});
	}
}
