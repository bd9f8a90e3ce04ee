#include "ncd/coalgebra.hpp"

#include <stdexcept>

namespace ncd {

CoalgebraContext::CoalgebraContext(AlphabetPtr alphabet, std::vector<GeneratorCoproduct> generators)
    : alphabet_(std::move(alphabet)), generators_(std::move(generators))
{
	if (generators_.size() != alphabet_->size())
		throw std::invalid_argument("one coproduct rule per generator required");
	for (const auto& g : generators_)
		if (g.shape == CoproductShape::SkewPrimitive &&
		    (g.companion >= generators_.size() || generators_[g.companion].shape != CoproductShape::Grouplike))
			throw std::invalid_argument("skew-primitive companion must be a grouplike generator");
}

const CoalgebraContext& CoalgebraContext::standard()
{
	static const CoalgebraContext ctx(ax_alphabet(), {{CoproductShape::Grouplike, 0}, {CoproductShape::SkewPrimitive, 0}});
	return ctx;
}

const CoalgebraContext& CoalgebraContext::two_factor()
{
	static const CoalgebraContext ctx(abxy_alphabet(), {{CoproductShape::Grouplike, 0},
	                                                    {CoproductShape::SkewPrimitive, 0},
	                                                    {CoproductShape::Grouplike, 2},
	                                                    {CoproductShape::SkewPrimitive, 2}});
	return ctx;
}

std::vector<std::pair<Word, Word>> CoalgebraContext::expand(const Word& w) const
{
	std::vector<std::pair<std::string, std::string>> cur{{"", ""}};
	for (std::size_t i = 0; i < w.size(); ++i) {
		const Letter l = w[i];
		const char c = static_cast<char>(l);
		const auto& g = generators_.at(l);
		if (g.shape == CoproductShape::Grouplike) {
			for (auto& [u, v] : cur) {
				u.push_back(c);
				v.push_back(c);
			}
			continue;
		}
		const std::size_t n = cur.size();
		cur.reserve(2 * n);
		for (std::size_t k = 0; k < n; ++k) {
			auto split = cur[k];
			split.first.push_back(c);
			split.second.push_back(static_cast<char>(g.companion));
			cur[k].second.push_back(c);
			cur.push_back(std::move(split));
		}
	}
	std::vector<std::pair<Word, Word>> out;
	out.reserve(cur.size());
	for (auto& [u, v] : cur)
		out.emplace_back(Word(std::move(u)), Word(std::move(v)));
	return out;
}

bool verify_delta_powers(int ell)
{
	const auto& alpha = ax_alphabet();
	TensorPoly<Rational> expected(alpha);
	for (int s = 0; s <= ell; ++s)
		expected += TensorPoly<Rational>::product(
		    {NcPoly<Rational>::monomial(alpha, Word::power(1, static_cast<std::size_t>(s))), P(s, ell - s)});
	return coproduct(P(0, ell)) == expected;
}

bool verify_delta_P(int j, int t)
{
	TensorPoly<Rational> expected(ax_alphabet());
	for (int l = 0; l <= t; ++l)
		expected += TensorPoly<Rational>::product({P(j, l), P(j + l, t - l)});
	return coproduct(P(j, t)) == expected;
}

} // namespace ncd
