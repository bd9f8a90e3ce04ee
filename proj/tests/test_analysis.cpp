#include <random>

#include "doctest.h"
#include "ncd/oracle.hpp"
#include "ncd/parser.hpp"
#include "ncd/sampler.hpp"
#include "ncd/structure.hpp"

using namespace ncd;

namespace {

using RPoly = NcPoly<Rational>;
using RDef = DefiningPolynomial<Rational>;
using Vec = SparseEliminator<Rational>::Vector;

RPoly poly(const char* text) { return parse_poly(text, ax_alphabet()); }

RDef xn(int n)
{
	std::vector<Rational> c(static_cast<std::size_t>(n));
	c.back() = 1;
	return RDef(std::move(c));
}

/// Textbook dense Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<Rational>> m)
{
	std::size_t rank = 0;
	const std::size_t cols = m.empty() ? 0 : m[0].size();
	for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
		std::size_t p = rank;
		while (p < m.size() && m[p][c].is_zero())
			++p;
		if (p == m.size())
			continue;
		std::swap(m[p], m[rank]);
		for (std::size_t r = 0; r < m.size(); ++r) {
			if (r == rank || m[r][c].is_zero())
				continue;
			const Rational f = m[r][c] / m[rank][c];
			for (std::size_t k = c; k < cols; ++k)
				m[r][k] -= f * m[rank][k];
		}
		++rank;
	}
	return rank;
}

/// Coefficients of 1/((1-s)^2 (1 - s^2 - 2 s^3)) up to s^L.
std::vector<std::size_t> quartic_series(int L)
{
	std::vector<long long> inv(static_cast<std::size_t>(L) + 1, 0);
	for (int k = 0; k <= L; ++k) {
		long long v = k == 0 ? 1 : 0;
		if (k >= 2)
			v += inv[static_cast<std::size_t>(k - 2)];
		if (k >= 3)
			v += 2 * inv[static_cast<std::size_t>(k - 3)];
		inv[static_cast<std::size_t>(k)] = v;
	}
	std::vector<std::size_t> out;
	for (int k = 0; k <= L; ++k) {
		long long c = 0;
		for (int i = 0; i <= k; ++i)
			c += (k - i + 1) * inv[static_cast<std::size_t>(i)];
		out.push_back(static_cast<std::size_t>(c));
	}
	return out;
}

} // namespace

TEST_SUITE("analysis")
{
	TEST_CASE("sparse elimination agrees with dense rank")
	{
		std::mt19937_64 rng(51);
		std::uniform_int_distribution<int> val(-3, 3), dim(1, 9);
		for (int t = 0; t < 200; ++t) {
			const int rows = dim(rng), cols = dim(rng);
			std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(rows),
			                                         std::vector<Rational>(static_cast<std::size_t>(cols)));
			SparseEliminator<Rational> elim;
			for (auto& row : dense) {
				Vec v;
				for (int c = 0; c < cols; ++c) {
					// sparse-ish entries so dependent rows occur
					const int x = val(rng) * (val(rng) > 0 ? 1 : 0);
					row[static_cast<std::size_t>(c)] = x;
					if (x != 0)
						v.emplace(static_cast<std::size_t>(c), Rational(x));
				}
				elim.add(v);
			}
			CHECK(elim.rank() == dense_rank(dense));
			CHECK(elim.rank() <= static_cast<std::size_t>(std::min(rows, cols)));
		}
	}

	TEST_CASE("sparse elimination membership")
	{
		SparseEliminator<Rational> e;
		CHECK(e.add(Vec{{2, 1}, {0, 1}}));
		CHECK(e.add(Vec{{1, 1}, {0, -1}}));
		CHECK_FALSE(e.add(Vec{{2, 2}, {1, 2}}));
		CHECK(e.contains(Vec{{2, 1}, {1, 1}}));
		CHECK_FALSE(e.contains(Vec{{0, 1}}));
		CHECK(e.pivot_columns() == std::vector<std::size_t>{1, 2});
		CHECK(e.contains(Vec{}));
	}

	TEST_CASE("shortlex word indexing")
	{
		const WordIndexer idx(2, 6);
		CHECK(idx.count_up_to(0) == 1);
		CHECK(idx.count_up_to(3) == 15);
		std::size_t expected = 0;
		for (std::size_t len = 0; len <= 6; ++len)
			for (const Word& w : all_words(2, len)) {
				CHECK(idx.index(w) == expected++);
				CHECK(idx.length_of(idx.index(w)) == len);
			}
		CHECK_THROWS(idx.index(Word::power(0, 7)));
	}

	TEST_CASE("ideal span contains w - nf(w)")
	{
		Sampler rng(52);
		for (const RDef& g : {xn(3), rng.monic_g(3), rng.monic_g(2)}) {
			const auto pres = build_system(g);
			IdealSpan<Rational> span(ax_alphabet(), pres.relations, 10);
			span.extend_to(10);
			for (int i = 0; i < 60; ++i) {
				const Word w = rng.word(2, static_cast<std::size_t>(rng.uniform(0, 10)));
				const RPoly p = RPoly::monomial(ax_alphabet(), w);
				CHECK(span.contains(p - pres.system.normal_form(p)));
			}
			// irreducible words stay independent modulo the ideal
			CHECK_FALSE(span.contains(poly("x*a")));
		}
	}

	TEST_CASE("dimension oracle values")
	{
		CHECK(dimension_oracle(xn(2), 4, 0).dimension() == 15);
		CHECK(dimension_oracle(xn(2), 4, 0).total_words == 31);
		CHECK(dimension_oracle(xn(3), 4, 0).dimension() == 22);
		const auto deformed = dimension_oracle(RDef({1, 1, 1}), 4, 0);
		CHECK(deformed.certified);
		CHECK(deformed.dimension() == 22);
		CHECK_THROWS_AS(dimension_oracle(xn(3), 10, 3), std::length_error);
		CHECK_THROWS_AS(dimension_oracle(xn(3), -1, 0), std::invalid_argument);
	}

	TEST_CASE("oracle dimensions are non-increasing in the slack")
	{
		Sampler rng(53);
		for (int n = 2; n <= 4; ++n) {
			const auto r = dimension_oracle(rng.monic_g(n), 5, 0);
			CHECK(r.dimensions[0] >= r.dimensions[1]);
			CHECK(r.dimensions[1] >= r.dimensions[2]);
		}
	}

	TEST_CASE("oracle matches the irreducible census")
	{
		for (int n = 2; n <= 4; ++n) {
			const auto counts = pbw_counts(n, 6);
			std::size_t cum = 0;
			for (int ell = 0; ell <= 6; ++ell) {
				cum += counts[static_cast<std::size_t>(ell)];
				const auto r = dimension_oracle(xn(n), ell, 0);
				CHECK(r.certified);
				CHECK(r.dimension() == cum);
			}
		}
	}

	TEST_CASE("PBW words")
	{
		const auto three = pbw_words(3, 3);
		CHECK(three.size() == 13);
		CHECK(pbw_counts(3, 3) == std::vector<std::size_t>{1, 2, 4, 6});
		CHECK(pbw_counts(2, 6) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
		CHECK(pbw_counts(4, 12) == quartic_series(12));
		for (int n = 2; n <= 12; ++n)
			CHECK(pbw_alphabet(n).size() == static_cast<std::size_t>((n - 1) * (n - 2) / 2));
		std::size_t collisions = 99;
		pbw_words(5, 8, &collisions);
		CHECK(collisions == 0);
		CHECK_THROWS(pbw_counts(1, 3));
	}

	TEST_CASE("irreducible census equals PBW enumeration")
	{
		Sampler rng(54);
		CHECK(irreducible_census(build_system(xn(2)).system, 3).counts == std::vector<std::size_t>{1, 2, 3, 4});
		CHECK(irreducible_census(build_system(xn(3)).system, 3).counts == std::vector<std::size_t>{1, 2, 4, 6});
		for (int n = 2; n <= 5; ++n) {
			const auto sys = build_system(rng.monic_g(n)).system;
			CHECK(irreducible_census(sys, 9).counts == pbw_counts(n, 9));
			for (const Word& w : pbw_words(n, 7))
				CHECK(sys.is_irreducible(w));
		}
		CHECK_THROWS(irreducible_census(build_system(xn(2)).system, 15));
	}

	TEST_CASE("growth classification")
	{
		const auto cls = [](int n) { return growth_classify(irreducible_census(build_system(xn(n)).system, 12)); };
		const auto two = cls(2), three = cls(3), four = cls(4);
		CHECK(two.kind == GrowthKind::Polynomial);
		CHECK(two.exponent == 2);
		CHECK(three.kind == GrowthKind::Polynomial);
		CHECK(three.exponent == 3);
		CHECK(four.kind == GrowthKind::Exponential);
		CHECK(four.min_tail_ratio >= kExponentialRatio);

		GrowthReport small;
		small.counts = {1, 2, 3};
		CHECK_THROWS(growth_classify(small));
		GrowthReport bad;
		bad.counts = std::vector<std::size_t>(12, 2);
		CHECK_THROWS(growth_classify(bad));
	}

	TEST_CASE("central elements")
	{
		Sampler rng(55);
		for (int i = 0; i < 30; ++i) {
			const int n = 2 + i % 4;
			const RDef g = rng.monic_g(n);
			const auto sys = build_system(g).system;
			CHECK(is_central(RPoly::monomial(ax_alphabet(), Word::power(0, static_cast<std::size_t>(n))), sys));
			CHECK(is_central(g.as_poly(ax_alphabet(), 1), sys));
			CHECK_FALSE(is_central(poly("x"), sys));
		}
		for (int i = 0; i < 10; ++i) {
			const RDef g = rng.monic_g(3);
			CHECK(is_central(cubic_central_element(g), build_system(g).system));
		}
		CHECK_THROWS(cubic_central_element(xn(4)));
		const auto suite = centre_suite_x3();
		CHECK(suite.size() == 5);
		for (const auto& e : suite)
			CHECK_MESSAGE(e.central, e.name);
	}

	TEST_CASE("tensor quotient against the basis census")
	{
		const auto sq = quotient_dimension_tensor(xn(2), xn(2), 6);
		CHECK(sq.degrees.front().quotient == 1);
		CHECK_FALSE(sq.first_disagreement.has_value());
		// x^i a^p ⊗ y^e b^j with e, j in {0, 1}, weights all 2
		for (const auto& d : sq.degrees) {
			std::size_t census = 0;
			for (int i = 0; 2 * i <= d.degree; ++i)
				for (int p = 0; 2 * (i + p) <= d.degree; ++p)
					for (int e = 0; e < 2; ++e)
						for (int j = 0; j < 2; ++j)
							if (2 * (i + p + e + j) <= d.degree)
								++census;
			CHECK(d.quotient == census);
			CHECK(d.agrees());
		}
		const auto mixed = quotient_dimension_tensor(xn(2), xn(3), 6);
		CHECK_FALSE(mixed.first_disagreement.has_value());
		CHECK(mixed.degrees.back().quotient == 20);
		CHECK_THROWS(quotient_dimension_tensor(xn(2), xn(2), -1));
	}

	TEST_CASE("generators of I(m) modulo I(n)")
	{
		const auto three_two = xn_chain_report(3, 2);
		REQUIRE(three_two.size() == 2);
		CHECK(three_two[0].j == 1);
		CHECK(three_two[0].normal_form == "x^2*a");
		CHECK_FALSE(three_two[0].zero);
		for (int m = 3; m <= 8; ++m)
			for (int n = 2; n <= std::min(5, m - 1); ++n)
				for (const auto& e : xn_chain_report(m, n))
					CHECK(e.recursion_holds);
		CHECK_THROWS(xn_chain_report(2, 2));
	}

	TEST_CASE("degree-2 change of variables")
	{
		const auto zero = degree2_suite(Rational(0), Rational(0));
		CHECK(zero.relation_holds);
		Sampler rng(56);
		for (int i = 0; i < 20; ++i) {
			const Rational r = rng.small_rational(), s = rng.small_rational();
			const auto rep = degree2_suite(r, s);
			CHECK(rep.relation_holds);
			CHECK(rep.corrected_holds);
		}
		// the identity holds with g - f; the f - g form leaves 2(g ⊗ 1 - 1 ⊗ f)
		const auto two = degree2_suite(Rational(2), Rational(0));
		CHECK(two.relation_holds);
		CHECK(two.corrected_holds);
		CHECK_FALSE(two.literal_holds);
		CHECK(two.literal_residual == "2*(x^2 ⊗ 1) + 4*(x ⊗ 1) - 2*(1 ⊗ x^2)");
		// r = s: constant terms cancel
		CHECK(degree2_suite(Rational(3), Rational(3)).corrected_holds);
	}
}
