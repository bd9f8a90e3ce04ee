#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncd/field.hpp"
#include "ncd/order.hpp"
#include "ncd/word.hpp"

namespace ncd {

class AlphabetMismatch : public std::invalid_argument {
public:
	AlphabetMismatch() : std::invalid_argument("polynomials over different alphabets") {}
};

/// Element of the free algebra k<X>: a finitely supported map from words to
/// nonzero scalars, kept as a vector sorted by the canonical word order.
///
/// A default-constructed polynomial is zero with no alphabet bound; it takes
/// on the alphabet of whatever it is combined with.
template <Field F>
class NcPoly {
public:
	using Term = std::pair<Word, F>;

	NcPoly() = default;
	explicit NcPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

	static NcPoly constant(AlphabetPtr alphabet, const F& c) { return monomial(std::move(alphabet), Word{}, c); }
	static NcPoly monomial(AlphabetPtr alphabet, Word w, const F& c = F(Rational(1)))
	{
		NcPoly p(std::move(alphabet));
		if (!c.is_zero())
			p.terms_.emplace_back(std::move(w), c);
		return p;
	}
	static NcPoly letter(AlphabetPtr alphabet, Letter l) { return monomial(std::move(alphabet), Word::letter(l)); }
	/// Sums coefficients of repeated words and drops zeros.
	static NcPoly from_terms(AlphabetPtr alphabet, std::vector<Term> terms)
	{
		std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
		NcPoly p(std::move(alphabet));
		for (auto& t : terms) {
			if (!p.terms_.empty() && p.terms_.back().first == t.first)
				p.terms_.back().second += t.second;
			else {
				if (!p.terms_.empty() && p.terms_.back().second.is_zero())
					p.terms_.pop_back();
				p.terms_.push_back(std::move(t));
			}
		}
		if (!p.terms_.empty() && p.terms_.back().second.is_zero())
			p.terms_.pop_back();
		return p;
	}
	/// Builds from a map that already holds each word once.
	template <class Map>
	static NcPoly from_map(AlphabetPtr alphabet, const Map& m)
	{
		std::vector<Term> terms;
		terms.reserve(m.size());
		for (const auto& [w, c] : m)
			if (!c.is_zero())
				terms.emplace_back(w, c);
		std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
		NcPoly p(std::move(alphabet));
		p.terms_ = std::move(terms);
		return p;
	}

	const AlphabetPtr& alphabet() const { return alphabet_; }
	const std::vector<Term>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	auto begin() const { return terms_.begin(); }
	auto end() const { return terms_.end(); }

	F coefficient(const Word& w) const
	{
		auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
		                           [](const Term& t, const Word& key) { return t.first < key; });
		if (it != terms_.end() && it->first == w)
			return it->second;
		return F();
	}

	std::size_t max_length() const { return terms_.empty() ? 0 : terms_.back().first.size(); }

	/// Order-largest word of the support; the polynomial must be nonzero.
	const Word& leading_word(const MonomialOrder& order) const
	{
		if (terms_.empty())
			throw std::logic_error("leading word of zero polynomial");
		const Term* best = &terms_.front();
		for (const auto& t : terms_)
			if (order.greater(t.first, best->first))
				best = &t;
		return best->first;
	}

	NcPoly& operator+=(const NcPoly& o) { return *this = combine(*this, o, false); }
	NcPoly& operator-=(const NcPoly& o) { return *this = combine(*this, o, true); }
	friend NcPoly operator+(const NcPoly& a, const NcPoly& b) { return combine(a, b, false); }
	friend NcPoly operator-(const NcPoly& a, const NcPoly& b) { return combine(a, b, true); }
	NcPoly operator-() const
	{
		NcPoly r = *this;
		for (auto& t : r.terms_)
			t.second = -t.second;
		return r;
	}

	friend NcPoly operator*(const NcPoly& a, const NcPoly& b)
	{
		NcPoly r(join(a, b));
		if (a.is_zero() || b.is_zero())
			return r;
		std::unordered_map<Word, F, WordHash> acc;
		acc.reserve(a.size() * b.size());
		for (const auto& [u, c] : a.terms_)
			for (const auto& [v, d] : b.terms_)
				acc[u * v] += c * d;
		return from_map(r.alphabet_, acc);
	}
	NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

	friend NcPoly operator*(const F& c, const NcPoly& p)
	{
		NcPoly r(p.alphabet_);
		if (c.is_zero())
			return r;
		r.terms_ = p.terms_;
		for (auto& t : r.terms_)
			t.second = c * t.second;
		return r;
	}
	friend NcPoly operator*(const NcPoly& p, const F& c) { return c * p; }

	/// Left and right multiplication by words.
	NcPoly sandwich(const Word& left, const Word& right) const
	{
		NcPoly r(alphabet_);
		r.terms_.reserve(terms_.size());
		for (const auto& [w, c] : terms_)
			r.terms_.emplace_back(left * w * right, c);
		std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
		return r;
	}

	NcPoly pow(unsigned e) const
	{
		NcPoly r = constant(alphabet_, F(Rational(1)));
		for (unsigned i = 0; i < e; ++i)
			r *= *this;
		return r;
	}

	friend bool operator==(const NcPoly& a, const NcPoly& b)
	{
		if (!compatible(a.alphabet_, b.alphabet_))
			throw AlphabetMismatch();
		return a.terms_ == b.terms_;
	}

	/// Terms in descending order: under `order` when given, else longest
	/// first and then lex with earlier alphabet letters greater.
	std::vector<Term> sorted_terms(const MonomialOrder* order) const
	{
		std::vector<Term> t = terms_;
		if (order)
			std::sort(t.begin(), t.end(), [order](const Term& a, const Term& b) { return order->greater(a.first, b.first); });
		else
			std::stable_sort(t.begin(), t.end(),
			                 [](const Term& a, const Term& b) { return a.first.size() > b.first.size(); });
		return t;
	}

	/// Canonical text: `a*x^2 - 1/2*x*a + 3`.
	std::string to_string(const MonomialOrder* order = nullptr) const
	{
		if (terms_.empty())
			return "0";
		if (!alphabet_)
			throw std::logic_error("rendering a polynomial without an alphabet");
		std::string out;
		for (const auto& [w, c] : sorted_terms(order)) {
			F mag;
			bool neg = split_negative(c, mag);
			if (out.empty())
				out += neg ? "-" : "";
			else
				out += neg ? " - " : " + ";
			std::string cs = ncd::to_string(mag);
			if (needs_parens(mag))
				cs = "(" + cs + ")";
			if (w.empty())
				out += cs;
			else if (mag.is_one())
				out += w.to_string(*alphabet_);
			else
				out += cs + "*" + w.to_string(*alphabet_);
		}
		return out;
	}

private:
	static AlphabetPtr join(const NcPoly& a, const NcPoly& b)
	{
		if (!compatible(a.alphabet_, b.alphabet_))
			throw AlphabetMismatch();
		return a.alphabet_ ? a.alphabet_ : b.alphabet_;
	}

	static NcPoly combine(const NcPoly& a, const NcPoly& b, bool subtract)
	{
		NcPoly r(join(a, b));
		r.terms_.reserve(a.size() + b.size());
		auto i = a.terms_.begin(), j = b.terms_.begin();
		while (i != a.terms_.end() || j != b.terms_.end()) {
			if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first))
				r.terms_.push_back(*i++);
			else if (i == a.terms_.end() || j->first < i->first) {
				r.terms_.emplace_back(j->first, subtract ? -j->second : j->second);
				++j;
			} else {
				F c = subtract ? i->second - j->second : i->second + j->second;
				if (!c.is_zero())
					r.terms_.emplace_back(i->first, std::move(c));
				++i;
				++j;
			}
		}
		return r;
	}

	AlphabetPtr alphabet_;
	std::vector<Term> terms_;
};

/// Applies a letter substitution that is an algebra map: each letter is sent
/// to a polynomial over `target`.
template <Field F>
NcPoly<F> substitute(const NcPoly<F>& p, const std::vector<NcPoly<F>>& images, AlphabetPtr target)
{
	NcPoly<F> out(target);
	for (const auto& [w, c] : p) {
		NcPoly<F> term = NcPoly<F>::constant(target, c);
		for (std::size_t i = 0; i < w.size(); ++i)
			term *= images.at(w[i]);
		out += term;
	}
	return out;
}

/// Renames letters between alphabets of equal size by position map.
template <Field F>
NcPoly<F> rename(const NcPoly<F>& p, const std::vector<Letter>& letter_map, AlphabetPtr target)
{
	std::vector<typename NcPoly<F>::Term> terms;
	for (const auto& [w, c] : p) {
		std::string packed(w.size(), '\0');
		for (std::size_t i = 0; i < w.size(); ++i)
			packed[i] = static_cast<char>(letter_map.at(w[i]));
		terms.emplace_back(Word(std::move(packed)), c);
	}
	return NcPoly<F>::from_terms(std::move(target), std::move(terms));
}

} // namespace ncd
