#include "ncd/parser.hpp"

#include <cctype>

namespace ncd {

namespace {

class Parser {
public:
	explicit Parser(std::string_view text) : s_(text) {}

	Expr parse()
	{
		skip();
		if (pos_ == s_.size())
			throw ParseError("empty expression", pos_);
		Expr e = expr();
		skip();
		if (pos_ != s_.size())
			fail_trailing();
		return e;
	}

private:
	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}
	bool peek(char c)
	{
		skip();
		return pos_ < s_.size() && s_[pos_] == c;
	}
	bool starts_operand()
	{
		skip();
		if (pos_ >= s_.size())
			return false;
		const unsigned char c = static_cast<unsigned char>(s_[pos_]);
		return std::isalnum(c) || c == '_' || c == '(';
	}
	[[noreturn]] void fail_trailing()
	{
		if (starts_operand())
			throw ParseError("missing '*' between factors", pos_);
		throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
	}

	static Expr node(Expr::Kind k, std::size_t pos, std::vector<Expr> children)
	{
		Expr e;
		e.kind = k;
		e.position = pos;
		e.children = std::move(children);
		return e;
	}

	Expr expr()
	{
		Expr lhs = term();
		while (true) {
			skip();
			if (peek('+') || peek('-')) {
				const std::size_t at = pos_;
				const bool plus = s_[pos_++] == '+';
				Expr rhs = term();
				lhs = node(plus ? Expr::Kind::Add : Expr::Kind::Sub, at, {std::move(lhs), std::move(rhs)});
			} else
				return lhs;
		}
	}

	Expr term()
	{
		Expr lhs = unary();
		while (peek('*')) {
			const std::size_t at = pos_++;
			Expr rhs = unary();
			lhs = node(Expr::Kind::Mul, at, {std::move(lhs), std::move(rhs)});
		}
		if (starts_operand())
			throw ParseError("missing '*' between factors", pos_);
		return lhs;
	}

	Expr unary()
	{
		if (peek('-')) {
			const std::size_t at = pos_++;
			return node(Expr::Kind::Neg, at, {unary()});
		}
		return power();
	}

	Expr power()
	{
		Expr base = primary();
		if (!peek('^'))
			return base;
		const std::size_t at = pos_++;
		skip();
		if (pos_ < s_.size() && s_[pos_] == '-')
			throw ParseError("exponent must be a positive integer", pos_);
		const std::size_t digits_at = pos_;
		std::string digits = integer();
		if (digits.empty())
			throw ParseError("exponent must be a positive integer", digits_at);
		if (digits.size() > 6)
			throw ParseError("exponent too large", digits_at);
		const unsigned e = static_cast<unsigned>(std::stoul(digits));
		if (e == 0)
			throw ParseError("exponent must be a positive integer", digits_at);
		Expr out = node(Expr::Kind::Pow, at, {std::move(base)});
		out.exponent = e;
		return out;
	}

	std::string integer()
	{
		std::string d;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			d.push_back(s_[pos_++]);
		return d;
	}

	Expr primary()
	{
		skip();
		if (pos_ >= s_.size())
			throw ParseError("unexpected end of expression", pos_);
		const std::size_t at = pos_;
		const unsigned char c = static_cast<unsigned char>(s_[pos_]);
		if (c == '(') {
			++pos_;
			Expr inner = expr();
			if (!peek(')'))
				throw ParseError("expected ')'", pos_);
			++pos_;
			return inner;
		}
		if (std::isdigit(c)) {
			std::string num = integer();
			std::string den = "1";
			if (peek('/')) {
				++pos_;
				skip();
				den = integer();
				if (den.empty())
					throw ParseError("expected a denominator", pos_);
			}
			Expr e;
			e.kind = Expr::Kind::Number;
			e.position = at;
			try {
				e.value = Rational::parse(num + "/" + den);
			} catch (const std::exception&) {
				throw ParseError("invalid number", at);
			}
			return e;
		}
		if (std::isalpha(c) || c == '_') {
			Expr e;
			e.kind = Expr::Kind::Symbol;
			e.position = at;
			while (pos_ < s_.size() &&
			       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				e.name.push_back(s_[pos_++]);
			return e;
		}
		throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
	}

	std::string_view s_;
	std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

NcPoly<Rational> parse_poly(std::string_view text, const AlphabetPtr& alphabet)
{
	return evaluate<Rational>(parse_expr(text), alphabet);
}

NcPoly<Cyclotomic> parse_poly(std::string_view text, const AlphabetPtr& alphabet, const ScalarSymbol& scalar)
{
	if (alphabet->find(scalar.symbol))
		throw std::invalid_argument("scalar symbol collides with a generator name");
	return evaluate<Cyclotomic>(parse_expr(text), alphabet, scalar);
}

DefiningPolynomial<Rational> parse_defining(std::string_view text, const std::string& var)
{
	bool letters = false;
	for (char c : text)
		letters |= std::isalpha(static_cast<unsigned char>(c)) != 0;
	if (!letters) {
		std::vector<Rational> coeffs;
		std::size_t start = 0;
		const std::string s(text);
		while (start <= s.size()) {
			std::size_t comma = s.find(',', start);
			if (comma == std::string::npos)
				comma = s.size();
			std::string item = s.substr(start, comma - start);
			const auto b = item.find_first_not_of(" \t");
			const auto e = item.find_last_not_of(" \t");
			if (b == std::string::npos)
				throw ParseError("empty coefficient", start);
			coeffs.push_back(Rational::parse(item.substr(b, e - b + 1)));
			start = comma + 1;
		}
		return DefiningPolynomial<Rational>(std::move(coeffs));
	}
	const auto alphabet = make_alphabet({var});
	return DefiningPolynomial<Rational>::from_poly(parse_poly(text, alphabet), 0);
}

} // namespace ncd
