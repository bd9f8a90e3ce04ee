#include "ncd/order.hpp"

#include <stdexcept>

namespace ncd {

MonomialOrder::MonomialOrder(AlphabetPtr alphabet, std::string name, std::vector<int> weights,
                             std::vector<Letter> tallies, std::vector<Letter> precedence)
    : alphabet_(std::move(alphabet)), name_(std::move(name)), weights_(std::move(weights)), tallies_(std::move(tallies))
{
	const std::size_t n = alphabet_->size();
	if (weights_.size() != n || precedence.size() != n)
		throw std::invalid_argument("order descriptor does not match alphabet");
	for (int w : weights_)
		if (w <= 0)
			throw std::invalid_argument("order weights must be positive");
	rank_.assign(n, -1);
	for (std::size_t i = 0; i < precedence.size(); ++i) {
		Letter l = precedence[i];
		if (l >= n || rank_[l] != -1)
			throw std::invalid_argument("lex precedence must be a permutation of the alphabet");
		rank_[l] = static_cast<int>(n - i);
	}
}

MonomialOrder MonomialOrder::grlex_plus(AlphabetPtr alphabet, Letter a_like, Letter x_like)
{
	if (alphabet->size() != 2 || a_like == x_like)
		throw std::invalid_argument("grlex+ needs a two-letter alphabet");
	return MonomialOrder(std::move(alphabet), "grlex+", {1, 1}, {x_like}, {a_like, x_like});
}

MonomialOrder MonomialOrder::grlex_plus(AlphabetPtr alphabet)
{
	Letter a = alphabet->index("a");
	Letter x = alphabet->index("x");
	return grlex_plus(std::move(alphabet), a, x);
}

MonomialOrder MonomialOrder::product_grlex(AlphabetPtr alphabet, int n, int m)
{
	if (alphabet->size() != 4)
		throw std::invalid_argument("product order needs the alphabet {a, x, b, y}");
	if (n < 1 || m < 1)
		throw std::invalid_argument("product order degrees must be positive");
	Letter a = alphabet->index("a"), x = alphabet->index("x");
	Letter b = alphabet->index("b"), y = alphabet->index("y");
	std::vector<int> w(4);
	w[a] = w[x] = m;
	w[b] = w[y] = n;
	return MonomialOrder(std::move(alphabet), "product", std::move(w), {y, b, x}, {b, y, a, x});
}

MonomialOrder MonomialOrder::deglex(AlphabetPtr alphabet, std::vector<Letter> precedence)
{
	std::vector<int> w(alphabet->size(), 1);
	return MonomialOrder(std::move(alphabet), "deglex", std::move(w), {}, std::move(precedence));
}

MonomialOrder MonomialOrder::deglex(AlphabetPtr alphabet)
{
	std::vector<Letter> prec;
	for (std::size_t i = alphabet->size(); i-- > 0;)
		prec.push_back(static_cast<Letter>(i));
	return deglex(std::move(alphabet), std::move(prec));
}

long MonomialOrder::weighted_length(const Word& w) const
{
	long s = 0;
	for (std::size_t i = 0; i < w.size(); ++i)
		s += weights_[w[i]];
	return s;
}

std::vector<long> MonomialOrder::rank_key(const Word& w) const
{
	std::vector<long> key{weighted_length(w)};
	for (Letter t : tallies_)
		key.push_back(static_cast<long>(w.count(t)));
	key.push_back(static_cast<long>(w.size()));
	return key;
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const
{
	if (u == v)
		return std::strong_ordering::equal;
	if (auto c = weighted_length(u) <=> weighted_length(v); c != 0)
		return c;
	for (Letter t : tallies_)
		if (auto c = u.count(t) <=> v.count(t); c != 0)
			return c;
	if (auto c = u.size() <=> v.size(); c != 0)
		return c;
	for (std::size_t i = 0; i < u.size(); ++i)
		if (u[i] != v[i])
			return rank_[u[i]] <=> rank_[v[i]];
	return std::strong_ordering::equal;
}

} // namespace ncd
