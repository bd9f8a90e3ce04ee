#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncd/ncpoly.hpp"

namespace ncd {

/// Element of the K-fold tensor power of k<X>, stored as a sorted list of
/// (word tuple, nonzero scalar). Every leg uses the same alphabet.
template <Field F, std::size_t K>
class MultiTensor {
public:
	using Key = std::array<Word, K>;
	using Term = std::pair<Key, F>;

	MultiTensor() = default;
	explicit MultiTensor(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

	static MultiTensor simple(AlphabetPtr alphabet, Key words, const F& c = F(Rational(1)))
	{
		MultiTensor t(std::move(alphabet));
		if (!c.is_zero())
			t.terms_.emplace_back(std::move(words), c);
		return t;
	}
	static MultiTensor one(AlphabetPtr alphabet) { return simple(std::move(alphabet), Key{}); }

	/// p_1 ⊗ ... ⊗ p_K.
	static MultiTensor product(const std::array<NcPoly<F>, K>& legs)
	{
		AlphabetPtr alpha;
		for (const auto& p : legs) {
			if (!compatible(alpha, p.alphabet()))
				throw AlphabetMismatch();
			if (!alpha)
				alpha = p.alphabet();
		}
		std::map<Key, F> acc;
		acc.emplace(Key{}, F(Rational(1)));
		for (std::size_t leg = 0; leg < K; ++leg) {
			std::map<Key, F> next;
			for (const auto& [key, c] : acc)
				for (const auto& [w, d] : legs[leg]) {
					Key k = key;
					k[leg] = w;
					next[k] += c * d;
				}
			acc = std::move(next);
		}
		return from_map(alpha, acc);
	}

	template <class Map>
	static MultiTensor from_map(AlphabetPtr alphabet, const Map& m)
	{
		MultiTensor t(std::move(alphabet));
		for (const auto& [k, c] : m)
			if (!c.is_zero())
				t.terms_.emplace_back(k, c);
		std::sort(t.terms_.begin(), t.terms_.end(), key_less);
		return t;
	}

	const AlphabetPtr& alphabet() const { return alphabet_; }
	const std::vector<Term>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	auto begin() const { return terms_.begin(); }
	auto end() const { return terms_.end(); }

	friend MultiTensor operator+(const MultiTensor& a, const MultiTensor& b) { return combine(a, b, false); }
	friend MultiTensor operator-(const MultiTensor& a, const MultiTensor& b) { return combine(a, b, true); }
	MultiTensor& operator+=(const MultiTensor& o) { return *this = combine(*this, o, false); }
	MultiTensor& operator-=(const MultiTensor& o) { return *this = combine(*this, o, true); }
	MultiTensor operator-() const
	{
		MultiTensor r = *this;
		for (auto& t : r.terms_)
			t.second = -t.second;
		return r;
	}
	friend MultiTensor operator*(const F& c, const MultiTensor& t)
	{
		MultiTensor r(t.alphabet_);
		if (c.is_zero())
			return r;
		r.terms_ = t.terms_;
		for (auto& x : r.terms_)
			x.second = c * x.second;
		return r;
	}

	/// Legwise concatenation (u_1⊗...⊗u_K)(v_1⊗...⊗v_K) = u_1v_1⊗...⊗u_Kv_K.
	friend MultiTensor operator*(const MultiTensor& a, const MultiTensor& b)
	{
		MultiTensor r(join(a, b));
		std::map<Key, F> acc;
		for (const auto& [ka, ca] : a.terms_)
			for (const auto& [kb, cb] : b.terms_) {
				Key k;
				for (std::size_t i = 0; i < K; ++i)
					k[i] = ka[i] * kb[i];
				acc[k] += ca * cb;
			}
		return from_map(r.alphabet_, acc);
	}
	MultiTensor& operator*=(const MultiTensor& o) { return *this = *this * o; }

	friend bool operator==(const MultiTensor& a, const MultiTensor& b)
	{
		if (!compatible(a.alphabet_, b.alphabet_))
			throw AlphabetMismatch();
		return a.terms_ == b.terms_;
	}

	/// Applies `f` to leg `leg` of every simple tensor, extending linearly.
	template <class Fn>
	MultiTensor map_leg(std::size_t leg, Fn&& f) const
	{
		std::map<Key, F> acc;
		for (const auto& [k, c] : terms_) {
			NcPoly<F> image = f(k[leg]);
			for (const auto& [w, d] : image) {
				Key nk = k;
				nk[leg] = w;
				acc[nk] += c * d;
			}
		}
		return from_map(alphabet_, acc);
	}

	std::string to_string() const
	{
		if (terms_.empty())
			return "0";
		std::string out;
		for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
			F mag;
			bool neg = split_negative(it->second, mag);
			if (out.empty())
				out += neg ? "-" : "";
			else
				out += neg ? " - " : " + ";
			if (!mag.is_one()) {
				std::string cs = ncd::to_string(mag);
				out += (needs_parens(mag) ? "(" + cs + ")" : cs) + "*";
			}
			out += "(";
			for (std::size_t i = 0; i < K; ++i) {
				if (i)
					out += " ⊗ ";
				out += it->first[i].to_string(*alphabet_);
			}
			out += ")";
		}
		return out;
	}

private:
	static bool key_less(const Term& a, const Term& b)
	{
		for (std::size_t i = 0; i < K; ++i) {
			if (a.first[i] < b.first[i])
				return true;
			if (b.first[i] < a.first[i])
				return false;
		}
		return false;
	}

	static AlphabetPtr join(const MultiTensor& a, const MultiTensor& b)
	{
		if (!compatible(a.alphabet_, b.alphabet_))
			throw AlphabetMismatch();
		return a.alphabet_ ? a.alphabet_ : b.alphabet_;
	}

	static MultiTensor combine(const MultiTensor& a, const MultiTensor& b, bool subtract)
	{
		std::map<Key, F> acc;
		for (const auto& [k, c] : a.terms_)
			acc[k] += c;
		for (const auto& [k, c] : b.terms_)
			acc[k] += subtract ? -c : c;
		return from_map(join(a, b), acc);
	}

	AlphabetPtr alphabet_;
	std::vector<Term> terms_;
};

template <Field F>
using TensorPoly = MultiTensor<F, 2>;

} // namespace ncd
