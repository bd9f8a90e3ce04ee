#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncd {

using Letter = std::uint8_t;

/// Ordered, duplicate-free list of generator names.
class Alphabet {
public:
	explicit Alphabet(std::vector<std::string> names);

	std::size_t size() const { return names_.size(); }
	const std::string& name(Letter l) const { return names_.at(l); }
	const std::vector<std::string>& names() const { return names_; }
	std::optional<Letter> find(std::string_view name) const;
	Letter index(std::string_view name) const;

	friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

private:
	std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Alphabets are interchangeable when both are bound and equal; an unbound
/// (null) alphabet adopts the other one.
bool compatible(const AlphabetPtr& a, const AlphabetPtr& b);

/// A monomial of the free algebra: a sequence of letter indices. The empty
/// word is 1. Letters are packed into a std::string so short words stay
/// inline and subword search uses the string machinery.
class Word {
public:
	Word() = default;
	Word(std::initializer_list<Letter> letters) : data_(letters.begin(), letters.end()) {}
	explicit Word(std::string packed) : data_(std::move(packed)) {}

	static Word letter(Letter l) { return Word(std::string(1, static_cast<char>(l))); }
	static Word power(Letter l, std::size_t e) { return Word(std::string(e, static_cast<char>(l))); }

	std::size_t size() const { return data_.size(); }
	bool empty() const { return data_.empty(); }
	Letter operator[](std::size_t i) const { return static_cast<Letter>(data_[i]); }
	std::size_t count(Letter l) const;

	Word subword(std::size_t pos, std::size_t len = std::string::npos) const { return Word(data_.substr(pos, len)); }
	bool starts_with(const Word& w) const { return data_.compare(0, w.size(), w.data_) == 0; }
	bool ends_with(const Word& w) const
	{
		return w.size() <= size() && data_.compare(size() - w.size(), w.size(), w.data_) == 0;
	}
	/// Leftmost occurrence of w at or after pos, npos if none.
	std::size_t find(const Word& w, std::size_t pos = 0) const { return data_.find(w.data_, pos); }
	bool contains(const Word& w) const { return find(w) != npos; }

	Word& operator*=(const Word& o)
	{
		data_ += o.data_;
		return *this;
	}
	friend Word operator*(Word a, const Word& b) { return a *= b; }

	const std::string& packed() const { return data_; }

	/// Canonical storage order: shorter first, then by letter index.
	friend bool operator<(const Word& a, const Word& b)
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a.data_ < b.data_;
	}
	friend bool operator==(const Word& a, const Word& b) { return a.data_ == b.data_; }
	friend bool operator!=(const Word& a, const Word& b) { return a.data_ != b.data_; }

	/// `a*x^2*a`; the empty word renders as `1`.
	std::string to_string(const Alphabet& alphabet) const;

	static constexpr std::size_t npos = std::string::npos;

private:
	std::string data_;
};

/// Parses `a*x^2*a` or `1` over an alphabet. Throws on unknown names.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// All words of exactly the given length over an alphabet of `letters` letters.
std::vector<Word> all_words(std::size_t letters, std::size_t length);

struct WordHash {
	std::size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.packed()); }
};

} // namespace ncd
