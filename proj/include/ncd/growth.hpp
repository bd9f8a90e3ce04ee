#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncd/parallel.hpp"
#include "ncd/rewrite.hpp"

namespace ncd {

/// L_n = {a^i x^j : i, j > 0, i + j < n} over [a, x].
std::vector<Word> pbw_alphabet(int n);

/// Words x^i · (free product of L_n blocks) · a^k of length at most L,
/// sorted canonically. Each decomposition is built once; `collisions`
/// receives the number of decompositions that repeated an earlier word.
std::vector<Word> pbw_words(int n, int L, std::size_t* collisions = nullptr);

/// Per-length counts of pbw_words computed from the block generating series.
std::vector<std::size_t> pbw_counts(int n, int L);

struct GrowthReport {
	std::vector<std::size_t> counts; // counts[l] = number of basis words of length l
	std::vector<std::size_t> cumulative() const;
};

inline constexpr int kCensusLimit = 14;

/// Irreducible words of each length up to L by exhaustive filtering.
template <Field F>
GrowthReport irreducible_census(const ReductionSystem<F>& sys, int L)
{
	if (L < 0 || L > kCensusLimit)
		throw std::length_error("census length must lie in 0..14");
	const std::size_t letters = sys.alphabet()->size();
	GrowthReport r;
	r.counts = parallel_map<std::size_t>(static_cast<std::size_t>(L) + 1, [&](std::size_t len) {
		std::size_t c = 0;
		for (const Word& w : all_words(letters, len))
			if (sys.is_irreducible(w))
				++c;
		return c;
	});
	return r;
}

enum class GrowthKind { Polynomial, Exponential, Undetermined };

struct GrowthClass {
	GrowthKind kind = GrowthKind::Undetermined;
	int exponent = 0;          // rounded slope, polynomial case
	double slope = 0;          // fitted slope of log cumulative count
	double residual = 0;       // RMS residual of that fit
	double min_tail_ratio = 0; // least c_{l+1}/c_l over the tail
	std::string name() const;
};

inline constexpr double kExponentialRatio = 1.2;
inline constexpr int kTailLengths = 4;
inline constexpr double kPolynomialResidual = 0.1;
inline constexpr int kFitStart = 6;

/// Exponential when every ratio c_{l+1}/c_l over the last four lengths is at
/// least 1.2. Otherwise polynomial when log cumulative count against
/// log(l + 2) over lengths 6..L fits a line with RMS residual below 0.1; the
/// exponent is the rounded slope. Needs L >= 10.
GrowthClass growth_classify(const GrowthReport& report);

} // namespace ncd
