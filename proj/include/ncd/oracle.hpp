#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ncd/linalg.hpp"
#include "ncd/presentations.hpp"

namespace ncd {

/// Shortlex column indexing of all words over `letters` letters: every word
/// of length L comes after every shorter word.
class WordIndexer {
public:
	WordIndexer(std::size_t letters, std::size_t max_length);

	std::size_t index(const Word& w) const;
	std::size_t length_of(std::size_t index) const;
	/// Number of words of length at most L.
	std::size_t count_up_to(std::size_t L) const { return offsets_.at(L + 1); }
	std::size_t max_length() const { return offsets_.size() - 2; }

private:
	std::size_t letters_;
	std::vector<std::size_t> offsets_; // offsets_[L] = number of words shorter than L
};

/// The two-sided span of a set of polynomials, built length by length as
/// span{u·p·v : |u| + (max length of p) + |v| <= M}. Uses no rewriting.
template <Field F>
class IdealSpan {
public:
	IdealSpan(AlphabetPtr alphabet, std::vector<NcPoly<F>> generators, std::size_t capacity)
	    : alphabet_(std::move(alphabet)), generators_(std::move(generators)), indexer_(alphabet_->size(), capacity)
	{
	}

	/// Adds every row of total length up to M.
	void extend_to(std::size_t M)
	{
		if (M > indexer_.max_length())
			throw std::length_error("ideal span capacity exceeded");
		for (; built_ < M; ++built_) {
			const std::size_t target = built_ + 1;
			for (const auto& g : generators_) {
				if (g.is_zero() || g.max_length() > target)
					continue;
				const std::size_t free = target - g.max_length();
				for (std::size_t lu = 0; lu <= free; ++lu)
					for (const Word& u : all_words(alphabet_->size(), lu))
						for (const Word& v : all_words(alphabet_->size(), free - lu))
							elim_.add(to_vector(g.sandwich(u, v)));
			}
		}
	}

	/// dim(span ∩ F_ell) for the rows added so far.
	std::size_t dimension_up_to(std::size_t ell) const
	{
		std::size_t n = 0;
		for (std::size_t c : elim_.pivot_columns())
			if (indexer_.length_of(c) <= ell)
				++n;
		return n;
	}

	bool contains(const NcPoly<F>& p) const { return elim_.contains(to_vector(p)); }
	std::size_t built_to() const { return built_; }
	const WordIndexer& indexer() const { return indexer_; }
	std::size_t rank() const { return elim_.rank(); }

private:
	typename SparseEliminator<F>::Vector to_vector(const NcPoly<F>& p) const
	{
		typename SparseEliminator<F>::Vector v;
		for (const auto& [w, c] : p)
			v.emplace(indexer_.index(w), c);
		return v;
	}

	AlphabetPtr alphabet_;
	std::vector<NcPoly<F>> generators_;
	WordIndexer indexer_;
	SparseEliminator<F> elim_;
	std::size_t built_ = 0;
};

struct DimOracleResult {
	int ell = 0;
	int slack = 0;
	std::size_t total_words = 0; // words of length <= ell
	std::vector<std::size_t> dimensions; // quotient dimension at slack, slack+1, slack+2
	bool certified = false;              // all three agree
	std::size_t dimension() const { return dimensions.front(); }
};

inline constexpr int kOracleGuard = 12;

/// dim F_ell / (I_g ∩ F_ell) estimated from the span of u·σ_j·v with total
/// length at most ell + slack; certified when three consecutive slacks agree.
template <Field F>
DimOracleResult dimension_oracle(const DefiningPolynomial<F>& g, int ell, int slack)
{
	if (ell < 0 || slack < 0)
		throw std::invalid_argument("oracle bounds must be nonnegative");
	if (ell + slack > kOracleGuard)
		throw std::length_error("oracle resource guard: ell + slack must not exceed 12");
	const auto h = g.is_monic() ? g : g.monic();
	std::vector<NcPoly<F>> gens;
	for (int j = 1; j < h.degree(); ++j)
		gens.push_back(sigma(j, h));
	const std::size_t top = static_cast<std::size_t>(ell + slack + 2);
	IdealSpan<F> span(ax_alphabet(), std::move(gens), top);
	DimOracleResult r;
	r.ell = ell;
	r.slack = slack;
	r.total_words = span.indexer().count_up_to(static_cast<std::size_t>(ell));
	for (int s = slack; s <= slack + 2; ++s) {
		span.extend_to(static_cast<std::size_t>(ell + s));
		r.dimensions.push_back(r.total_words - span.dimension_up_to(static_cast<std::size_t>(ell)));
	}
	r.certified = r.dimensions[0] == r.dimensions[1] && r.dimensions[1] == r.dimensions[2];
	return r;
}

} // namespace ncd
