#include "ncd/growth.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "ncd/pq.hpp"

namespace ncd {

namespace {

constexpr Letter kA = 0, kX = 1;

void extend_blocks(const std::vector<Word>& blocks, const Word& cur, int remaining, std::vector<Word>& out)
{
	out.push_back(cur);
	for (const Word& b : blocks)
		if (static_cast<int>(b.size()) <= remaining)
			extend_blocks(blocks, cur * b, remaining - static_cast<int>(b.size()), out);
}

} // namespace

std::vector<Word> pbw_alphabet(int n)
{
	std::vector<Word> out;
	for (int i = 1; i < n; ++i)
		for (int j = 1; i + j < n; ++j)
			out.push_back(Word::power(kA, static_cast<std::size_t>(i)) * Word::power(kX, static_cast<std::size_t>(j)));
	return out;
}

std::vector<Word> pbw_words(int n, int L, std::size_t* collisions)
{
	if (n < 2 || L < 0)
		throw std::invalid_argument("pbw_words needs n >= 2 and L >= 0");
	std::vector<Word> middles;
	extend_blocks(pbw_alphabet(n), Word{}, L, middles);
	std::set<Word> seen;
	std::size_t repeats = 0;
	for (const Word& mid : middles)
		for (int i = 0; i + static_cast<int>(mid.size()) <= L; ++i)
			for (int k = 0; i + k + static_cast<int>(mid.size()) <= L; ++k) {
				Word w = Word::power(kX, static_cast<std::size_t>(i)) * mid * Word::power(kA, static_cast<std::size_t>(k));
				if (!seen.insert(std::move(w)).second)
					++repeats;
			}
	if (collisions)
		*collisions = repeats;
	return {seen.begin(), seen.end()};
}

std::vector<std::size_t> pbw_counts(int n, int L)
{
	if (n < 2 || L < 0)
		throw std::invalid_argument("pbw_counts needs n >= 2 and L >= 0");
	std::vector<std::size_t> blocks(static_cast<std::size_t>(L) + 1, 0);
	blocks[0] = 1;
	const auto alphabet = pbw_alphabet(n);
	for (int l = 1; l <= L; ++l)
		for (const Word& b : alphabet)
			if (static_cast<int>(b.size()) <= l)
				blocks[static_cast<std::size_t>(l)] += blocks[static_cast<std::size_t>(l) - b.size()];
	std::vector<std::size_t> out(static_cast<std::size_t>(L) + 1, 0);
	for (int l = 0; l <= L; ++l)
		for (int r = 0; r <= l; ++r)
			out[static_cast<std::size_t>(l)] += static_cast<std::size_t>(r + 1) * blocks[static_cast<std::size_t>(l - r)];
	return out;
}

std::vector<std::size_t> GrowthReport::cumulative() const
{
	std::vector<std::size_t> out;
	std::size_t s = 0;
	for (std::size_t c : counts)
		out.push_back(s += c);
	return out;
}

std::string GrowthClass::name() const
{
	switch (kind) {
	case GrowthKind::Polynomial: return "polynomial";
	case GrowthKind::Exponential: return "exponential";
	case GrowthKind::Undetermined: return "undetermined";
	}
	return "undetermined";
}

GrowthClass growth_classify(const GrowthReport& report)
{
	const int L = static_cast<int>(report.counts.size()) - 1;
	if (L < 10)
		throw std::invalid_argument("growth classification needs counts up to length 10 or more");
	if (report.counts[0] != 1)
		throw std::invalid_argument("growth counts must start with c_0 = 1");
	GrowthClass g;
	g.min_tail_ratio = INFINITY;
	for (int l = L - kTailLengths; l < L; ++l) {
		const double c0 = static_cast<double>(report.counts[static_cast<std::size_t>(l)]);
		const double c1 = static_cast<double>(report.counts[static_cast<std::size_t>(l) + 1]);
		g.min_tail_ratio = std::min(g.min_tail_ratio, c0 > 0 ? c1 / c0 : 0.0);
	}
	const auto cum = report.cumulative();
	std::vector<double> xs, ys;
	for (int l = kFitStart; l <= L; ++l) {
		xs.push_back(std::log(static_cast<double>(l + 2)));
		ys.push_back(std::log(static_cast<double>(cum[static_cast<std::size_t>(l)])));
	}
	const double n = static_cast<double>(xs.size());
	double mx = 0, my = 0;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		mx += xs[i];
		my += ys[i];
	}
	mx /= n;
	my /= n;
	double sxy = 0, sxx = 0;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		sxy += (xs[i] - mx) * (ys[i] - my);
		sxx += (xs[i] - mx) * (xs[i] - mx);
	}
	g.slope = sxy / sxx;
	const double icpt = my - g.slope * mx;
	double ss = 0;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		const double e = ys[i] - (icpt + g.slope * xs[i]);
		ss += e * e;
	}
	g.residual = std::sqrt(ss / n);
	if (g.min_tail_ratio >= kExponentialRatio)
		g.kind = GrowthKind::Exponential;
	else if (g.residual < kPolynomialResidual) {
		g.kind = GrowthKind::Polynomial;
		g.exponent = static_cast<int>(std::lround(g.slope));
	}
	return g;
}

} // namespace ncd
