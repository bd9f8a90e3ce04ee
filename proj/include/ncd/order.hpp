#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ncd/word.hpp"

namespace ncd {

/// Semigroup order on words, compared key by key:
///   1. weighted length (every weight positive),
///   2. a sequence of single-letter tallies, larger count wins,
///   3. plain length,
///   4. lexicographic left to right under a letter precedence.
/// Positive weights bound the number of words under any given word, which
/// gives the descending chain condition; every key is additive or
/// position-wise, which gives the semigroup property.
class MonomialOrder {
public:
	/// The grlex+ order on a two-letter alphabet: length, then number of
	/// x-like letters, then lex with the a-like letter on top.
	static MonomialOrder grlex_plus(AlphabetPtr alphabet, Letter a_like, Letter x_like);
	/// grlex+ on an alphabet whose letters are named "a" and "x".
	static MonomialOrder grlex_plus(AlphabetPtr alphabet);
	/// Four-letter order for the tensor presentation: weights
	/// w(a)=w(x)=m, w(b)=w(y)=n; tallies y, b, x; lex b > y > a > x.
	static MonomialOrder product_grlex(AlphabetPtr alphabet, int n, int m);
	/// Length, then lex with `precedence` listed from greatest to least.
	static MonomialOrder deglex(AlphabetPtr alphabet, std::vector<Letter> precedence);
	/// Length, then lex with higher letter index greater.
	static MonomialOrder deglex(AlphabetPtr alphabet);

	std::strong_ordering compare(const Word& u, const Word& v) const;
	bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }
	bool greater(const Word& u, const Word& v) const { return compare(u, v) > 0; }

	long weighted_length(const Word& w) const;
	/// Integer key whose lexicographic order refines to this order on words
	/// of equal plain length; used as a termination witness in tests.
	std::vector<long> rank_key(const Word& w) const;

	const std::string& name() const { return name_; }
	const AlphabetPtr& alphabet() const { return alphabet_; }
	int weight(Letter l) const { return weights_.at(l); }

private:
	MonomialOrder(AlphabetPtr alphabet, std::string name, std::vector<int> weights, std::vector<Letter> tallies,
	              std::vector<Letter> precedence);

	AlphabetPtr alphabet_;
	std::string name_;
	std::vector<int> weights_;
	std::vector<Letter> tallies_;
	std::vector<int> rank_; // per letter; larger rank is lex-greater
};

/// Comparator placing order-larger words first.
struct OrderGreater {
	const MonomialOrder* order;
	bool operator()(const Word& u, const Word& v) const { return order->greater(u, v); }
};

} // namespace ncd
