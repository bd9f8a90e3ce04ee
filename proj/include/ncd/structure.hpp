#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncd/coalgebra.hpp"
#include "ncd/growth.hpp"
#include "ncd/linalg.hpp"

namespace ncd {

/// p commutes with every generator modulo the system.
template <Field F>
bool is_central(const NcPoly<F>& p, const ReductionSystem<F>& sys)
{
	for (std::size_t l = 0; l < sys.alphabet()->size(); ++l) {
		auto gen = NcPoly<F>::letter(sys.alphabet(), static_cast<Letter>(l));
		if (!sys.ideal_membership(p * gen - gen * p))
			return false;
	}
	return true;
}

struct CentralityEntry {
	std::string name;
	std::string element;
	bool central = false;
};

/// The listed centre elements of A0(x,a,x^3) over Q(ζ_3), λ = q.
std::vector<CentralityEntry> centre_suite_x3();

/// axax - x²a² - r_2 xa² - r_1 a² for a monic cubic g.
NcPoly<Rational> cubic_central_element(const DefiningPolynomial<Rational>& g);

/// Normal forms on each leg with a separate system per leg.
template <Field F>
TensorPoly<F> tensor_normal_form(const TensorPoly<F>& t, const ReductionSystem<F>& left,
                                 const ReductionSystem<F>& right)
{
	return t.map_leg(0, [&](const Word& w) { return left.normal_form(w); })
	    .map_leg(1, [&](const Word& w) { return right.normal_form(w); });
}

struct TensorDegree {
	int degree = 0;
	std::size_t tensor_dimension = 0; // PBW pairs of weighted degree <= degree
	std::size_t rank = 0;             // of the ideal rows inside that piece
	std::size_t quotient = 0;         // tensor_dimension - rank
	std::size_t census = 0;           // closed-form basis count
	bool agrees() const { return quotient == census; }
};

struct TensorQuotientReport {
	int n = 0, m = 0;
	std::vector<TensorDegree> degrees;
	std::optional<int> first_disagreement;
};

inline constexpr std::size_t kTensorGuard = 20000;

/// dim of (A0(x,a,g) ⊗ A0(y,b,f)) / (g - f, a^n - b^m) in each weighted
/// degree up to D, with w(a) = w(x) = m and w(b) = w(y) = n, against the
/// census of {x^i ω a^p ⊗ y^e ω' b^j : e, j < m}.
TensorQuotientReport quotient_dimension_tensor(const DefiningPolynomial<Rational>& g,
                                               const DefiningPolynomial<Rational>& f, int D);

struct ChainEntry {
	int j = 0;
	std::string normal_form;
	bool zero = false;
	bool recursion_holds = false; // P(j,m-j) = P(j-1,m-j)a + P(j,m-j-1)x
};

/// Normal forms of the generators P(j, m-j) of I(m) under Σ_{x^n}.
std::vector<ChainEntry> xn_chain_report(int m, int n);

struct Degree2Report {
	Rational r, s;
	std::string relation_residual;  // nf(ax' + x'a) under Σ_{x^2+rx}
	std::string literal_residual;   // x'^2 - y'^2 - [f - g + ...] as displayed
	std::string corrected_residual; // x'^2 - y'^2 - [g - f + ...]
	bool relation_holds = false;
	bool literal_holds = false;
	bool corrected_holds = false;
};

/// x' = x + (r/2)(1 - a), y' = y + (s/2)(1 - b) with g = x^2 + rx, f = y^2 + sy.
Degree2Report degree2_suite(const Rational& r, const Rational& s);

} // namespace ncd
