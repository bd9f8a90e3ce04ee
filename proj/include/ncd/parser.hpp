#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncd/presentations.hpp"

namespace ncd {

class ParseError : public std::invalid_argument {
public:
	ParseError(const std::string& what, std::size_t position)
	    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
	{
	}
	std::size_t position() const { return position_; }

private:
	std::size_t position_;
};

/// Syntax tree of a polynomial expression. Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER ('/' INTEGER)? | NAME | '(' expr ')'
/// Juxtaposition is rejected; every product needs an explicit '*'.
struct Expr {
	enum class Kind { Number, Symbol, Neg, Add, Sub, Mul, Pow };
	Kind kind = Kind::Number;
	Rational value;
	std::string name;
	unsigned exponent = 0;
	std::vector<Expr> children;
	std::size_t position = 0;
};

Expr parse_expr(std::string_view text);

/// Scalar symbols available during evaluation: `symbol` names the chosen
/// primitive root of unity of order `order`.
struct ScalarSymbol {
	std::string symbol = "q";
	int order = 0;
};

template <Field F>
NcPoly<F> scalar_symbol_value(const AlphabetPtr& alphabet, const std::optional<ScalarSymbol>& s, const Expr& e);

template <Field F>
NcPoly<F> evaluate(const Expr& e, const AlphabetPtr& alphabet, const std::optional<ScalarSymbol>& scalar = std::nullopt)
{
	switch (e.kind) {
	case Expr::Kind::Number: return NcPoly<F>::constant(alphabet, F(e.value));
	case Expr::Kind::Symbol:
		if (auto l = alphabet->find(e.name))
			return NcPoly<F>::letter(alphabet, *l);
		return scalar_symbol_value<F>(alphabet, scalar, e);
	case Expr::Kind::Neg: return -evaluate<F>(e.children[0], alphabet, scalar);
	case Expr::Kind::Add: return evaluate<F>(e.children[0], alphabet, scalar) + evaluate<F>(e.children[1], alphabet, scalar);
	case Expr::Kind::Sub: return evaluate<F>(e.children[0], alphabet, scalar) - evaluate<F>(e.children[1], alphabet, scalar);
	case Expr::Kind::Mul: return evaluate<F>(e.children[0], alphabet, scalar) * evaluate<F>(e.children[1], alphabet, scalar);
	case Expr::Kind::Pow: return evaluate<F>(e.children[0], alphabet, scalar).pow(e.exponent);
	}
	throw std::logic_error("unknown expression node");
}

template <>
inline NcPoly<Rational> scalar_symbol_value<Rational>(const AlphabetPtr&, const std::optional<ScalarSymbol>&,
                                                      const Expr& e)
{
	throw ParseError("unknown symbol '" + e.name + "'", e.position);
}

template <>
inline NcPoly<Cyclotomic> scalar_symbol_value<Cyclotomic>(const AlphabetPtr& alphabet,
                                                          const std::optional<ScalarSymbol>& s, const Expr& e)
{
	if (!s || s->symbol != e.name)
		throw ParseError("unknown symbol '" + e.name + "'", e.position);
	return NcPoly<Cyclotomic>::constant(alphabet, Cyclotomic::generator(s->order));
}

NcPoly<Rational> parse_poly(std::string_view text, const AlphabetPtr& alphabet);
NcPoly<Cyclotomic> parse_poly(std::string_view text, const AlphabetPtr& alphabet, const ScalarSymbol& scalar);

/// Either an expression in `var` ("x^3 + 2*x^2") or, when the text has no
/// letters, a coefficient list "r1, r2, ..., rn".
DefiningPolynomial<Rational> parse_defining(std::string_view text, const std::string& var = "x");

} // namespace ncd
