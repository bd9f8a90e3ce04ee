#include "ncd/pq.hpp"

#include <stdexcept>

namespace ncd {

namespace {

void extend(std::string& cur, int j, int i, char first, char second, std::vector<Word>& out)
{
	if (j == 0 && i == 0) {
		out.emplace_back(cur);
		return;
	}
	if (j > 0) {
		cur.push_back(first);
		extend(cur, j - 1, i, first, second, out);
		cur.pop_back();
	}
	if (i > 0) {
		cur.push_back(second);
		extend(cur, j, i - 1, first, second, out);
		cur.pop_back();
	}
}

using Poly = NcPoly<Rational>;

Poly w(const char* text) { return Poly::monomial(ax_alphabet(), parse_word(text, *ax_alphabet())); }

} // namespace

std::vector<Word> mixed_words(int j, int i, Letter first, Letter second)
{
	std::vector<Word> out;
	if (j < 0 || i < 0)
		return out;
	std::string cur;
	cur.reserve(static_cast<std::size_t>(i + j));
	extend(cur, j, i, static_cast<char>(first), static_cast<char>(second), out);
	return out;
}

const AlphabetPtr& ax_alphabet()
{
	static const AlphabetPtr alphabet = make_alphabet({"a", "x"});
	return alphabet;
}

Poly P(int j, int i) { return P<Rational>(j, i, ax_alphabet(), 0, 1); }
Poly Q(int m, int q) { return Q<Rational>(m, q, ax_alphabet(), 0, 1); }

const std::vector<PqIdentity>& all_pq_identities()
{
	static const std::vector<PqIdentity> all{
	    PqIdentity::FirstStep, PqIdentity::QStep, PqIdentity::ExpansionA, PqIdentity::ExpansionB, PqIdentity::ExpansionC,
	    PqIdentity::ExpansionD, PqIdentity::ExpansionE, PqIdentity::ExpansionF, PqIdentity::ExpansionG};
	return all;
}

std::string pq_identity_name(PqIdentity kind)
{
	switch (kind) {
	case PqIdentity::FirstStep: return "P-step";
	case PqIdentity::QStep: return "Q-step";
	case PqIdentity::ExpansionA: return "expansion-a";
	case PqIdentity::ExpansionB: return "expansion-b";
	case PqIdentity::ExpansionC: return "expansion-c";
	case PqIdentity::ExpansionD: return "expansion-d";
	case PqIdentity::ExpansionE: return "expansion-e";
	case PqIdentity::ExpansionF: return "expansion-f";
	case PqIdentity::ExpansionG: return "expansion-g";
	}
	throw std::invalid_argument("unknown identity");
}

int pq_identity_min_index(PqIdentity kind)
{
	switch (kind) {
	case PqIdentity::FirstStep:
	case PqIdentity::QStep: return 0;
	case PqIdentity::ExpansionA:
	case PqIdentity::ExpansionB:
	case PqIdentity::ExpansionC: return 2;
	default: return 3;
	}
}

std::pair<Poly, Poly> pq_identity_sides(PqIdentity kind, int r, int s)
{
	const Poly a = w("a"), x = w("x");
	const Poly lhs = kind == PqIdentity::QStep ? Q(r, s) : P(r, s);
	Poly rhs(ax_alphabet());
	switch (kind) {
	case PqIdentity::FirstStep:
		rhs = P(r, s - 1) * x + P(r - 1, s) * a;
		break;
	case PqIdentity::QStep:
		rhs = Q(r, s - 1) * x + P(r - 1, s) * a;
		break;
	case PqIdentity::ExpansionA:
		rhs = P(r - 1, s - 1) * w("x*a") + P(r - 1, s - 1) * w("a*x") + P(r - 2, s) * w("a^2") + P(r, s - 2) * w("x^2");
		break;
	case PqIdentity::ExpansionB:
		rhs = w("x*a") * P(r - 1, s - 1) + w("a*x") * P(r - 1, s - 1) + w("a^2") * P(r - 2, s) + w("x^2") * P(r, s - 2);
		break;
	case PqIdentity::ExpansionC:
		rhs = x * P(r - 1, s - 1) * a + a * P(r - 1, s - 1) * x + a * P(r - 2, s) * a + x * P(r, s - 2) * x;
		break;
	case PqIdentity::ExpansionD:
		rhs = P(r - 3, s) * w("a^3") + P(r - 2, s - 1) * (w("a^2*x") + w("a*x*a") + w("x*a^2")) +
		      P(r - 1, s - 2) * (w("a*x^2") + w("x*a*x") + w("x^2*a")) + P(r, s - 3) * w("x^3");
		break;
	case PqIdentity::ExpansionE:
		rhs = w("a^3") * P(r - 3, s) + (w("a^2*x") + w("a*x*a") + w("x*a^2")) * P(r - 2, s - 1) +
		      (w("a*x^2") + w("x*a*x") + w("x^2*a")) * P(r - 1, s - 2) + w("x^3") * P(r, s - 3);
		break;
	case PqIdentity::ExpansionF:
		rhs = (w("x^2") * P(r - 1, s - 2) + w("a*x") * P(r - 2, s - 1) + w("x*a") * P(r - 2, s - 1) +
		       w("a^2") * P(r - 3, s)) * a +
		      (w("x^2") * P(r, s - 3) + w("a*x") * P(r - 1, s - 2) + w("x*a") * P(r - 1, s - 2) +
		       w("a^2") * P(r - 2, s - 1)) * x;
		break;
	case PqIdentity::ExpansionG:
		rhs = a * (P(r - 1, s - 2) * w("x^2") + P(r - 2, s - 1) * w("a*x") + P(r - 2, s - 1) * w("x*a") +
		           P(r - 3, s) * w("a^2")) +
		      x * (P(r, s - 3) * w("x^2") + P(r - 1, s - 2) * w("a*x") + P(r - 1, s - 2) * w("x*a") +
		           P(r - 2, s - 1) * w("a^2"));
		break;
	}
	return {lhs, rhs};
}

bool check_pq_identity(PqIdentity kind, int r, int s)
{
	if (r < 0 || s < 0)
		throw std::invalid_argument("identity indices must be nonnegative");
	auto [lhs, rhs] = pq_identity_sides(kind, r, s);
	return lhs == rhs;
}

} // namespace ncd
