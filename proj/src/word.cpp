#include "ncd/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace ncd {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names))
{
	if (names_.empty())
		throw std::invalid_argument("alphabet must be nonempty");
	if (names_.size() > 127)
		throw std::invalid_argument("alphabet too large");
	std::set<std::string> seen;
	for (const auto& n : names_) {
		if (n.empty())
			throw std::invalid_argument("empty generator name");
		if (!seen.insert(n).second)
			throw std::invalid_argument("duplicate generator name '" + n + "'");
	}
}

std::optional<Letter> Alphabet::find(std::string_view name) const
{
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name)
			return static_cast<Letter>(i);
	return std::nullopt;
}

Letter Alphabet::index(std::string_view name) const
{
	if (auto l = find(name))
		return *l;
	throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

AlphabetPtr make_alphabet(std::vector<std::string> names)
{
	return std::make_shared<const Alphabet>(std::move(names));
}

bool compatible(const AlphabetPtr& a, const AlphabetPtr& b)
{
	return !a || !b || a == b || *a == *b;
}

std::size_t Word::count(Letter l) const
{
	return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), static_cast<char>(l)));
}

std::string Word::to_string(const Alphabet& alphabet) const
{
	if (data_.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < data_.size();) {
		std::size_t j = i;
		while (j < data_.size() && data_[j] == data_[i])
			++j;
		if (!out.empty())
			out += "*";
		out += alphabet.name(static_cast<Letter>(data_[i]));
		if (j - i > 1)
			out += "^" + std::to_string(j - i);
		i = j;
	}
	return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(c);
	if (s == "1")
		return {};
	Word w;
	std::size_t i = 0;
	while (i < s.size()) {
		std::size_t j = i;
		while (j < s.size() && s[j] != '*' && s[j] != '^')
			++j;
		Letter l = alphabet.index(s.substr(i, j - i));
		std::size_t e = 1;
		if (j < s.size() && s[j] == '^') {
			std::size_t k = j + 1;
			while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
				++k;
			if (k == j + 1)
				throw std::invalid_argument("missing exponent in word '" + std::string(text) + "'");
			e = std::stoul(s.substr(j + 1, k - j - 1));
			j = k;
		}
		w *= Word::power(l, e);
		if (j < s.size()) {
			if (s[j] != '*')
				throw std::invalid_argument("malformed word '" + std::string(text) + "'");
			++j;
		}
		i = j;
	}
	return w;
}

std::vector<Word> all_words(std::size_t letters, std::size_t length)
{
	std::vector<Word> out;
	std::string cur(length, '\0');
	if (length == 0) {
		out.emplace_back();
		return out;
	}
	while (true) {
		out.emplace_back(cur);
		std::size_t k = length;
		while (k > 0) {
			--k;
			if (static_cast<std::size_t>(static_cast<unsigned char>(cur[k])) + 1 < letters) {
				cur[k] = static_cast<char>(cur[k] + 1);
				break;
			}
			cur[k] = '\0';
			if (k == 0)
				return out;
		}
	}
}

} // namespace ncd
