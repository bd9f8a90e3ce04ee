#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncd/ncpoly.hpp"

namespace ncd {

/// Every word with `j` copies of `first` and `i` copies of `second`.
std::vector<Word> mixed_words(int j, int i, Letter first, Letter second);

/// P(j,i): sum of all words of bidegree (j,i) in (first, second), each with
/// coefficient 1. P(0,0) = 1 and P vanishes when either index is negative.
template <Field F>
NcPoly<F> P(int j, int i, const AlphabetPtr& alphabet, Letter first, Letter second)
{
	std::vector<typename NcPoly<F>::Term> terms;
	for (auto& w : mixed_words(j, i, first, second))
		terms.emplace_back(std::move(w), F(Rational(1)));
	return NcPoly<F>::from_terms(alphabet, std::move(terms));
}

/// Q(m,q) = P(m,q) - first^m second^q, taken as 0 when m or q is not positive.
template <Field F>
NcPoly<F> Q(int m, int q, const AlphabetPtr& alphabet, Letter first, Letter second)
{
	if (m <= 0 || q <= 0)
		return NcPoly<F>(alphabet);
	return P<F>(m, q, alphabet, first, second) -
	       NcPoly<F>::monomial(alphabet, Word::power(first, m) * Word::power(second, q));
}

/// The standard two-letter alphabet [a, x] shared by the single-factor code.
const AlphabetPtr& ax_alphabet();

/// P and Q over [a, x] with rational coefficients.
NcPoly<Rational> P(int j, int i);
NcPoly<Rational> Q(int m, int q);

enum class PqIdentity {
	FirstStep,       // P(r,s) = P(r,s-1)x + P(r-1,s)a
	QStep,           // Q(r,s) = Q(r,s-1)x + P(r-1,s)a
	ExpansionA,      // split off the last two letters
	ExpansionB,      // split off the first two letters
	ExpansionC,      // split off the first and last letter
	ExpansionD,      // split off the last three letters, blocks grouped by a-count
	ExpansionE,      // as D on the left
	ExpansionF,      // first two letters inside, last letter outside
	ExpansionG,      // first letter outside, last two letters inside
};

const std::vector<PqIdentity>& all_pq_identities();
std::string pq_identity_name(PqIdentity kind);
/// Smallest index for which the identity is asserted in both r and s.
int pq_identity_min_index(PqIdentity kind);

/// Left and right sides of the identity at (r, s).
std::pair<NcPoly<Rational>, NcPoly<Rational>> pq_identity_sides(PqIdentity kind, int r, int s);
bool check_pq_identity(PqIdentity kind, int r, int s);

} // namespace ncd
