#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncd/pq.hpp"
#include "ncd/rewrite.hpp"

namespace ncd {

/// g(x) = r_1 x + ... + r_n x^n with n >= 2 and r_n != 0; no constant term.
template <Field F>
class DefiningPolynomial {
public:
	DefiningPolynomial() = default;
	/// coeffs[i] is r_{i+1}. Trailing zeros are dropped before validation.
	explicit DefiningPolynomial(std::vector<F> coeffs) : r_(std::move(coeffs))
	{
		while (!r_.empty() && r_.back().is_zero())
			r_.pop_back();
		if (r_.size() < 2)
			throw std::invalid_argument("defining polynomial must have degree at least 2");
	}

	int degree() const { return static_cast<int>(r_.size()); }
	/// r_i, zero outside 1..n.
	F coeff(int i) const { return i >= 1 && i <= degree() ? r_[static_cast<std::size_t>(i - 1)] : F(); }
	const std::vector<F>& coefficients() const { return r_; }
	bool is_monic() const { return r_.back().is_one(); }

	/// g / r_n. σ_j is linear in the coefficients, so this leaves I_g unchanged.
	DefiningPolynomial monic() const
	{
		F inv = r_.back().inverse();
		std::vector<F> c = r_;
		for (auto& v : c)
			v = inv * v;
		return DefiningPolynomial(std::move(c));
	}

	/// g(λx), the coefficients r_i λ^i.
	DefiningPolynomial scaled(const F& lambda) const
	{
		if (lambda.is_zero())
			throw std::invalid_argument("scaling parameter must be nonzero");
		std::vector<F> c = r_;
		F power = lambda;
		for (auto& v : c) {
			v = v * power;
			power = power * lambda;
		}
		return DefiningPolynomial(std::move(c));
	}

	/// g as a polynomial in the given letter.
	NcPoly<F> as_poly(const AlphabetPtr& alphabet, Letter var) const
	{
		NcPoly<F> out(alphabet);
		for (int i = 1; i <= degree(); ++i)
			out += NcPoly<F>::monomial(alphabet, Word::power(var, static_cast<std::size_t>(i)), coeff(i));
		return out;
	}

	/// Reads g back from a polynomial in one letter with zero constant term.
	static DefiningPolynomial from_poly(const NcPoly<F>& p, Letter var)
	{
		std::vector<F> c;
		for (const auto& [w, v] : p) {
			if (w.empty())
				throw std::invalid_argument("defining polynomial must have zero constant term");
			if (w.count(var) != w.size())
				throw std::invalid_argument("defining polynomial must be in a single variable");
			if (c.size() < w.size())
				c.resize(w.size());
			c[w.size() - 1] = v;
		}
		return DefiningPolynomial(std::move(c));
	}

	friend bool operator==(const DefiningPolynomial& a, const DefiningPolynomial& b) { return a.r_ == b.r_; }

	std::string to_string(const std::string& var = "x") const
	{
		auto alpha = make_alphabet({var});
		return as_poly(alpha, 0).to_string();
	}

private:
	std::vector<F> r_;
};

/// σ_j = Σ_{i=j}^{n} r_i P(j, i-j) - r_j a^n over [a, x].
template <Field F>
NcPoly<F> sigma(int j, const DefiningPolynomial<F>& g, const AlphabetPtr& alphabet = ax_alphabet(), Letter a = 0,
                Letter x = 1)
{
	const int n = g.degree();
	if (j < 1 || j > n - 1)
		throw std::out_of_range("sigma index must lie in 1..n-1");
	NcPoly<F> out(alphabet);
	for (int i = j; i <= n; ++i)
		out += g.coeff(i) * P<F>(j, i - j, alphabet, a, x);
	out -= NcPoly<F>::monomial(alphabet, Word::power(a, static_cast<std::size_t>(n)), g.coeff(j));
	return out;
}

/// Orients a relation as leading word -> remainder under `order`.
template <Field F>
Rule<F> orient(const NcPoly<F>& relation, const MonomialOrder& order, std::string label)
{
	if (relation.is_zero())
		throw std::invalid_argument("cannot orient the zero relation '" + label + "'");
	const Word& lead = relation.leading_word(order);
	F inv = relation.coefficient(lead).inverse();
	NcPoly<F> rhs = NcPoly<F>::monomial(order.alphabet(), lead) - inv * relation;
	return Rule<F>{lead, std::move(rhs), std::move(label)};
}

template <Field F>
struct Presentation {
	std::string construction;
	AlphabetPtr alphabet;
	std::vector<std::string> labels;
	std::vector<NcPoly<F>> relations;
	ReductionSystem<F> system;
};

/// Σ_g: the relations σ_1..σ_{n-1} of the monic rescaling of g, oriented
/// under grlex+. `scale` receives r_n, the factor divided out.
template <Field F>
Presentation<F> build_system(const DefiningPolynomial<F>& g, F* scale = nullptr)
{
	if (scale)
		*scale = g.coeff(g.degree());
	const DefiningPolynomial<F> h = g.is_monic() ? g : g.monic();
	const AlphabetPtr& alpha = ax_alphabet();
	MonomialOrder order = MonomialOrder::grlex_plus(alpha);
	std::vector<std::string> labels;
	std::vector<NcPoly<F>> rels;
	std::vector<Rule<F>> rules;
	for (int j = 1; j < h.degree(); ++j) {
		labels.push_back("sigma_" + std::to_string(j));
		rels.push_back(sigma(j, h));
		rules.push_back(orient(rels.back(), order, labels.back()));
	}
	ReductionSystem<F> sys(order, std::move(rules), "A0(x,a," + h.to_string() + ")");
	return Presentation<F>{"single", alpha, std::move(labels), std::move(rels), std::move(sys)};
}

/// θ_λ: a -> a, x -> λx, applied letterwise.
template <Field F>
NcPoly<F> scale_theta(const NcPoly<F>& p, const F& lambda, Letter x = 1)
{
	if (lambda.is_zero())
		throw std::invalid_argument("scaling parameter must be nonzero");
	std::vector<typename NcPoly<F>::Term> terms;
	for (const auto& [w, c] : p) {
		F f = c;
		for (std::size_t i = 0; i < w.count(x); ++i)
			f = f * lambda;
		terms.emplace_back(w, f);
	}
	return NcPoly<F>::from_terms(p.alphabet(), std::move(terms));
}

template <Field F>
DefiningPolynomial<F> scale_poly(const DefiningPolynomial<F>& g, const F& lambda)
{
	return g.scaled(lambda);
}

/// k<x,a>/(xa - q ax) over Q(ζ_n) with q the chosen primitive n-th root.
ReductionSystem<Cyclotomic> build_quantum_plane(int n);

/// d²u - α dud - β ud² - γ d and du² - α udu - β u²d - γ u over [d, u].
template <Field F>
std::vector<NcPoly<F>> downup_relations(const F& alpha, const F& beta, const F& gamma)
{
	static const AlphabetPtr du = make_alphabet({"d", "u"});
	auto m = [](const char* w) { return NcPoly<F>::monomial(du, parse_word(w, *du)); };
	return {m("d^2*u") - alpha * m("d*u*d") - beta * m("u*d^2") - gamma * m("d"),
	        m("d*u^2") - alpha * m("u*d*u") - beta * m("u^2*d") - gamma * m("u")};
}

/// Terms of maximal total weight.
template <Field F>
NcPoly<F> leading_filtered_part(const NcPoly<F>& p, const std::vector<int>& weights)
{
	long best = -1;
	auto weight = [&](const Word& w) {
		long s = 0;
		for (std::size_t i = 0; i < w.size(); ++i)
			s += weights.at(w[i]);
		return s;
	};
	for (const auto& [w, c] : p)
		best = std::max(best, weight(w));
	std::vector<typename NcPoly<F>::Term> terms;
	for (const auto& [w, c] : p)
		if (weight(w) == best)
			terms.emplace_back(w, c);
	return NcPoly<F>::from_terms(p.alphabet(), std::move(terms));
}

/// Alphabet [a, x, b, y] of the two-factor presentation.
const AlphabetPtr& abxy_alphabet();

/// Relations of A(g,f) over [a, x, b, y] without inverses: the four
/// cross commutators, Σ_g on (a,x), Σ_f on (b,y), a^n - b^m and f(y) - g(x),
/// all oriented under the product order.
template <Field F>
Presentation<F> build_tensor_presentation(const DefiningPolynomial<F>& g_in, const DefiningPolynomial<F>& f_in)
{
	const auto g = g_in.is_monic() ? g_in : g_in.monic();
	const auto f = f_in.is_monic() ? f_in : f_in.monic();
	const AlphabetPtr& alpha = abxy_alphabet();
	const Letter a = 0, x = 1, b = 2, y = 3;
	MonomialOrder order = MonomialOrder::product_grlex(alpha, g.degree(), f.degree());
	auto mono = [&](Word w) { return NcPoly<F>::monomial(alpha, std::move(w)); };
	std::vector<std::string> labels;
	std::vector<NcPoly<F>> rels;
	auto add = [&](std::string label, NcPoly<F> rel) {
		labels.push_back(std::move(label));
		rels.push_back(std::move(rel));
	};
	add("[x,y]", mono({x, y}) - mono({y, x}));
	add("[x,b]", mono({x, b}) - mono({b, x}));
	add("[a,b]", mono({a, b}) - mono({b, a}));
	add("[a,y]", mono({a, y}) - mono({y, a}));
	for (int j = 1; j < g.degree(); ++j)
		add("sigma_" + std::to_string(j), sigma(j, g, alpha, a, x));
	for (int p = 1; p < f.degree(); ++p)
		add("tau_" + std::to_string(p), sigma(p, f, alpha, b, y));
	add("group", mono(Word::power(a, static_cast<std::size_t>(g.degree()))) -
	                 mono(Word::power(b, static_cast<std::size_t>(f.degree()))));
	add("curve", f.as_poly(alpha, y) - g.as_poly(alpha, x));
	std::vector<Rule<F>> rules;
	for (std::size_t i = 0; i < rels.size(); ++i)
		rules.push_back(orient(rels[i], order, labels[i]));
	ReductionSystem<F> sys(order, std::move(rules), "A0(" + g.to_string() + "," + f.to_string("y") + ")");
	return Presentation<F>{"tensor", alpha, std::move(labels), std::move(rels), std::move(sys)};
}

/// Standard monomial basis {x^i y^j : j < m} of k[x,y]/(g - f), enumerated
/// up to weighted degree D with w(x) = m, w(y) = n.
template <Field F>
std::vector<std::pair<int, int>> curve_basis(const DefiningPolynomial<F>& g, const DefiningPolynomial<F>& f, int D)
{
	const int n = g.degree(), m = f.degree();
	std::vector<std::pair<int, int>> out;
	for (int j = 0; j < m; ++j)
		for (int i = 0; m * i + n * j <= D; ++i)
			out.emplace_back(i, j);
	return out;
}

} // namespace ncd
