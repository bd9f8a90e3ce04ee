#include "ncd/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncd {

namespace {

using RPoly = NcPoly<Rational>;
using RTensor = TensorPoly<Rational>;
using CPoly = NcPoly<Cyclotomic>;

DefiningPolynomial<Rational> monomial_g(int n)
{
	std::vector<Rational> c(static_cast<std::size_t>(n));
	c.back() = 1;
	return DefiningPolynomial<Rational>(std::move(c));
}

std::size_t leading_run(const Word& w, Letter l)
{
	std::size_t k = 0;
	while (k < w.size() && w[k] == l)
		++k;
	return k;
}

std::size_t trailing_run(const Word& w, Letter l)
{
	std::size_t k = 0;
	while (k < w.size() && w[w.size() - 1 - k] == l)
		++k;
	return k;
}

std::vector<Word> irreducible_up_to(const ReductionSystem<Rational>& sys, int L)
{
	std::vector<Word> out;
	for (int l = 0; l <= L; ++l)
		for (const Word& w : all_words(sys.alphabet()->size(), static_cast<std::size_t>(l)))
			if (sys.is_irreducible(w))
				out.push_back(w);
	return out;
}

} // namespace

std::vector<CentralityEntry> centre_suite_x3()
{
	const AlphabetPtr& alpha = ax_alphabet();
	const auto sys = build_system(DefiningPolynomial<Cyclotomic>({Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)})).system;
	const Cyclotomic lambda = Cyclotomic::generator(3);
	const Cyclotomic three(3);
	auto w = [&](const char* t) { return CPoly::monomial(alpha, parse_word(t, *alpha)); };
	const CPoly xa = w("x*a"), ax = w("a*x");
	std::vector<std::pair<std::string, CPoly>> elements{
	    {"a^3", w("a^3")},
	    {"x^3", w("x^3")},
	    {"(xa)^3 - 3λ²(xa)²(ax) + 3λ(xa)(ax)² - (ax)^3",
	     xa.pow(3) - (three * lambda * lambda) * xa.pow(2) * ax + (three * lambda) * xa * ax.pow(2) - ax.pow(3)},
	    {"(xa)^3 - 3λ(xa)²(ax) + 3λ²(xa)(ax)² - (ax)^3",
	     xa.pow(3) - (three * lambda) * xa.pow(2) * ax + (three * lambda * lambda) * xa * ax.pow(2) - ax.pow(3)},
	    {"(ax)^2 - x^2a^2", ax.pow(2) - w("x^2*a^2")},
	};
	std::vector<CentralityEntry> out;
	for (const auto& [name, p] : elements)
		out.push_back({name, p.to_string(), is_central(p, sys)});
	return out;
}

RPoly cubic_central_element(const DefiningPolynomial<Rational>& g_in)
{
	if (g_in.degree() != 3)
		throw std::invalid_argument("cubic central element needs a degree-3 g");
	const auto g = g_in.monic();
	const AlphabetPtr& alpha = ax_alphabet();
	auto w = [&](const char* t) { return RPoly::monomial(alpha, parse_word(t, *alpha)); };
	return w("a*x*a*x") - w("x^2*a^2") - g.coeff(2) * w("x*a^2") - g.coeff(1) * w("a^2");
}

TensorQuotientReport quotient_dimension_tensor(const DefiningPolynomial<Rational>& g_in,
                                               const DefiningPolynomial<Rational>& f_in, int D)
{
	if (D < 0)
		throw std::invalid_argument("degree bound must be nonnegative");
	const auto g = g_in.monic();
	const auto f = f_in.monic();
	const int n = g.degree(), m = f.degree();
	const auto sys_g = build_system(g).system;
	const auto sys_f = build_system(f).system;
	const AlphabetPtr& alpha = ax_alphabet();
	const Letter a = 0, x = 1;

	const auto left = irreducible_up_to(sys_g, D / m);
	const auto right = irreducible_up_to(sys_f, D / n);
	using Key = RTensor::Key;
	std::vector<std::pair<int, Key>> cols;
	for (const Word& u : left)
		for (const Word& v : right) {
			const int deg = m * static_cast<int>(u.size()) + n * static_cast<int>(v.size());
			if (deg <= D)
				cols.push_back({deg, Key{u, v}});
		}
	if (cols.size() > kTensorGuard)
		throw std::length_error("tensor quotient resource guard exceeded");
	std::sort(cols.begin(), cols.end());
	std::map<Key, std::size_t> index;
	for (std::size_t i = 0; i < cols.size(); ++i)
		index.emplace(cols[i].second, i);

	const RPoly gx = g.as_poly(alpha, x), fy = f.as_poly(alpha, x);
	const RPoly an = RPoly::monomial(alpha, Word::power(a, static_cast<std::size_t>(n)));
	const RPoly bm = RPoly::monomial(alpha, Word::power(a, static_cast<std::size_t>(m)));
	auto row_for = [&](const Key& uv, const RPoly& left_factor, const RPoly& right_factor) {
		RTensor t =
		    RTensor::product({sys_g.normal_form(RPoly::monomial(alpha, uv[0]) * left_factor), RPoly::monomial(alpha, uv[1])}) -
		    RTensor::product({RPoly::monomial(alpha, uv[0]), sys_f.normal_form(RPoly::monomial(alpha, uv[1]) * right_factor)});
		SparseEliminator<Rational>::Vector row;
		for (const auto& [k, c] : t)
			row.emplace(index.at(k), c);
		return row;
	};

	TensorQuotientReport report;
	report.n = n;
	report.m = m;
	SparseEliminator<Rational> elim;
	std::size_t col_cursor = 0, row_cursor = 0;
	for (int d = 0; d <= D; ++d) {
		while (col_cursor < cols.size() && cols[col_cursor].first <= d)
			++col_cursor;
		// rows (u⊗v)z have degree deg(u⊗v) + mn
		while (row_cursor < cols.size() && cols[row_cursor].first + m * n <= d) {
			const Key& uv = cols[row_cursor].second;
			elim.add(row_for(uv, gx, fy));
			elim.add(row_for(uv, an, bm));
			++row_cursor;
		}
		TensorDegree td;
		td.degree = d;
		td.tensor_dimension = col_cursor;
		td.rank = elim.rank();
		td.quotient = td.tensor_dimension - td.rank;
		for (std::size_t i = 0; i < col_cursor; ++i) {
			const Word& v = cols[i].second[1];
			if (leading_run(v, x) < static_cast<std::size_t>(m) && trailing_run(v, a) < static_cast<std::size_t>(m))
				++td.census;
		}
		if (!td.agrees() && !report.first_disagreement)
			report.first_disagreement = d;
		report.degrees.push_back(td);
	}
	return report;
}

std::vector<ChainEntry> xn_chain_report(int m, int n)
{
	if (n < 2 || m <= n || n > 5)
		throw std::invalid_argument("chain report needs 2 <= n < m with n <= 5");
	const auto sys = build_system(monomial_g(n)).system;
	std::vector<ChainEntry> out;
	for (int j = 1; j < m; ++j) {
		ChainEntry e;
		e.j = j;
		const RPoly nf = sys.normal_form(P(j, m - j));
		e.normal_form = nf.to_string(&sys.order());
		e.zero = nf.is_zero();
		e.recursion_holds = check_pq_identity(PqIdentity::FirstStep, j, m - j);
		out.push_back(e);
	}
	return out;
}

Degree2Report degree2_suite(const Rational& r, const Rational& s)
{
	const AlphabetPtr& alpha = ax_alphabet();
	const Letter a = 0, x = 1;
	const auto sys_g = build_system(DefiningPolynomial<Rational>({r, Rational(1)})).system;
	const auto sys_f = build_system(DefiningPolynomial<Rational>({s, Rational(1)})).system;
	const Rational half(1, 2), quarter(1, 4);

	Degree2Report rep;
	rep.r = r;
	rep.s = s;
	const RPoly one = RPoly::constant(alpha, Rational(1));
	const RPoly pa = RPoly::letter(alpha, a), px = RPoly::letter(alpha, x);
	const RPoly xp = px + (half * r) * (one - pa);
	const RPoly rel = sys_g.normal_form(pa * xp + xp * pa);
	rep.relation_holds = rel.is_zero();
	rep.relation_residual = rel.to_string();

	const RTensor I = RTensor::one(alpha);
	const RTensor X = RTensor::product({px, one}), A = RTensor::product({pa, one});
	const RTensor Y = RTensor::product({one, px}), B = RTensor::product({one, pa});
	const RTensor Xp = X + (half * r) * (I - A);
	const RTensor Yp = Y + (half * s) * (I - B);
	const RTensor G = X * X + r * X, F = Y * Y + s * Y;
	const RTensor constants = (quarter * (r * r - s * s)) * I - quarter * ((r * r) * (A * A) - (s * s) * (B * B));
	const RTensor lhs = Xp * Xp - Yp * Yp;
	const RTensor literal = tensor_normal_form(lhs - (F - G + constants), sys_g, sys_f);
	const RTensor corrected = tensor_normal_form(lhs - (G - F + constants), sys_g, sys_f);
	rep.literal_holds = literal.is_zero();
	rep.corrected_holds = corrected.is_zero();
	rep.literal_residual = literal.to_string();
	rep.corrected_residual = corrected.to_string();
	return rep;
}

} // namespace ncd
