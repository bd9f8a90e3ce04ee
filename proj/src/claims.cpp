#include "ncd/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <tuple>

#include "ncd/parser.hpp"
#include "ncd/sampler.hpp"

namespace ncd {

namespace {

using RPoly = NcPoly<Rational>;
using RTensor = TensorPoly<Rational>;
using CPoly = NcPoly<Cyclotomic>;
using RDef = DefiningPolynomial<Rational>;
using CDef = DefiningPolynomial<Cyclotomic>;

RDef monomial_g(int n)
{
	std::vector<Rational> c(static_cast<std::size_t>(n));
	c.back() = 1;
	return RDef(std::move(c));
}

Claim make(std::string id, std::string title, std::string location)
{
	Claim c;
	c.id = std::move(id);
	c.title = std::move(title);
	c.paper_location = std::move(location);
	return c;
}

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

/// Seed for one suite, so suites do not consume each other's randomness.
std::uint64_t suite_seed(const SuiteConfig& cfg, int criterion) { return cfg.seed * 1000003ULL + criterion; }

// --- criterion 1 ---------------------------------------------------------

Claim diamond_suite(const SuiteConfig& cfg)
{
	Claim c = make("C01", "ambiguity census and resolution of the oriented system for random g",
	               "Diamond Lemma verification: overlap census, no inclusions, every overlap resolvable");
	Sampler rng(suite_seed(cfg, 1));
	Json failures = Json::array();
	std::size_t ambiguities = 0, steps = 0;
	std::vector<int> per_degree(6, 0);
	for (int i = 0; i < cfg.diamond_systems; ++i) {
		const int n = 2 + i % 4;
		const RDef g = rng.monic_g(n);
		const auto pres = build_system(g);
		const auto rep = check_confluence(pres.system, cfg.budget);
		ambiguities += rep.verdicts.size();
		steps += rep.stats.steps;
		++per_degree[static_cast<std::size_t>(n)];
		// expected overlaps (ω_{j+t}, ω_j, a^t, a^j x^{n-j-t}, x^t); rule k is ω_{k+1}
		std::set<std::tuple<std::size_t, std::size_t, std::string, std::string, std::string>> expected, found;
		for (int j = 1; j < n; ++j)
			for (int t = 1; j + t < n; ++t)
				expected.insert({static_cast<std::size_t>(j + t - 1), static_cast<std::size_t>(j - 1),
				                 Word::power(0, t).packed(),
				                 (Word::power(0, j) * Word::power(1, static_cast<std::size_t>(n - j - t))).packed(),
				                 Word::power(1, t).packed()});
		for (const auto& v : rep.verdicts)
			found.insert({v.ambiguity.sigma, v.ambiguity.tau, v.ambiguity.A.packed(), v.ambiguity.B.packed(),
			              v.ambiguity.C.packed()});
		const std::size_t want = static_cast<std::size_t>((n - 1) * (n - 2) / 2);
		const bool census_ok = rep.overlaps() == want && rep.inclusions() == 0 && found == expected &&
		                       rep.verdicts.size() == want;
		if (!census_ok || !rep.confluent())
			failures.push_back(Json{{"g", g.to_string()},
			                        {"overlaps", rep.overlaps()},
			                        {"inclusions", rep.inclusions()},
			                        {"expected_overlaps", want},
			                        {"census_matches", found == expected},
			                        {"confluent", rep.confluent()}});
	}
	c.verdict = pass_if(failures.empty());
	c.witness = Json{{"systems", cfg.diamond_systems},
	                 {"systems_per_degree", Json{{"2", per_degree[2]}, {"3", per_degree[3]}, {"4", per_degree[4]}, {"5", per_degree[5]}}},
	                 {"ambiguities_resolved", ambiguities},
	                 {"reduction_steps", steps},
	                 {"failures", failures}};
	return c;
}

// --- criterion 2 ---------------------------------------------------------

Claim pq_suite()
{
	Claim c = make("C02", "P and Q recursion identities and their two- and three-letter expansions",
	               "step identities for P and Q, expansion identities (a) to (g)");
	Json failures = Json::array();
	Json checked = Json::object();
	for (PqIdentity kind : all_pq_identities()) {
		const int lo = pq_identity_min_index(kind);
		const int hi = (kind == PqIdentity::FirstStep || kind == PqIdentity::QStep) ? 8 : 6;
		int count = 0;
		for (int r = lo; r <= hi; ++r)
			for (int s = lo; s <= hi; ++s) {
				++count;
				if (!check_pq_identity(kind, r, s)) {
					auto [lhs, rhs] = pq_identity_sides(kind, r, s);
					failures.push_back(Json{{"identity", pq_identity_name(kind)},
					                        {"r", r},
					                        {"s", s},
					                        {"lhs", lhs.to_string()},
					                        {"rhs", rhs.to_string()}});
				}
			}
		checked[pq_identity_name(kind)] = Json{{"range", std::to_string(lo) + ".." + std::to_string(hi)}, {"cases", count}};
	}
	// Same identities restricted to indices away from the degenerate boundary.
	bool interior = true;
	for (int r = 0; r <= 8; ++r)
		for (int s = 0; s <= 8; ++s) {
			if (r + s > 0)
				interior &= check_pq_identity(PqIdentity::FirstStep, r, s);
			if (s > 0)
				interior &= check_pq_identity(PqIdentity::QStep, r, s);
		}
	c.verdict = pass_if(failures.empty());
	c.witness = Json{{"checked", checked}, {"failures", failures}, {"holds_off_boundary", interior}};
	return c;
}

// --- criterion 3 ---------------------------------------------------------

Claim pbw_suite(const SuiteConfig& cfg)
{
	Claim c = make("C03", "irreducible words are the PBW words and span a complement of the ideal",
	               "irreducible word census against the x^i <L_n> a^k enumeration; linear-algebra dimension check");
	Sampler rng(suite_seed(cfg, 3));
	bool ok = true;
	Json census = Json::array();
	for (int n = 2; n <= 5; ++n) {
		std::size_t collisions = 0;
		const auto words = pbw_words(n, cfg.census_length, &collisions);
		std::vector<std::size_t> enumerated(static_cast<std::size_t>(cfg.census_length) + 1, 0);
		for (const Word& w : words)
			++enumerated[w.size()];
		const auto series = pbw_counts(n, cfg.census_length);
		for (const RDef& g : {monomial_g(n), rng.monic_g(n)}) {
			const auto pres = build_system(g);
			const auto rep = irreducible_census(pres.system, cfg.census_length);
			bool irreducible = std::all_of(words.begin(), words.end(),
			                               [&](const Word& w) { return pres.system.is_irreducible(w); });
			bool match = rep.counts == enumerated && enumerated == series && collisions == 0 && irreducible;
			ok &= match;
			census.push_back(Json{{"g", g.to_string()}, {"counts", rep.counts}, {"pbw_counts", enumerated}, {"match", match}});
		}
	}
	bool ln_sizes = true;
	for (int n = 2; n <= 12; ++n)
		ln_sizes &= pbw_alphabet(n).size() == static_cast<std::size_t>((n - 1) * (n - 2) / 2);
	ok &= ln_sizes;
	Json oracle = Json::array();
	for (int n = 2; n <= 4; ++n) {
		for (const RDef& g : {monomial_g(n), rng.monic_g(n)}) {
			const auto cum = pbw_counts(n, cfg.oracle_length);
			std::size_t running = 0;
			Json dims = Json::array();
			bool match = true;
			for (int ell = 0; ell <= cfg.oracle_length; ++ell) {
				running += cum[static_cast<std::size_t>(ell)];
				const auto r = dimension_oracle(g, ell, 0);
				match &= r.certified && r.dimension() == running;
				dims.push_back(r.dimension());
			}
			ok &= match;
			oracle.push_back(Json{{"g", g.to_string()}, {"dimensions", dims}, {"match", match}});
		}
	}
	c.verdict = pass_if(ok);
	c.witness = Json{{"census", census}, {"L_n_sizes", ln_sizes}, {"oracle", oracle}};
	return c;
}

// --- criterion 4 ---------------------------------------------------------

std::vector<Claim> centrality_suite(const SuiteConfig& cfg)
{
	Sampler rng(suite_seed(cfg, 4));
	Claim a = make("C04a", "a^n and g are central", "centrality of a^n and g in A0(x,a,g)");
	Json failures = Json::array();
	for (int i = 0; i < cfg.central_g; ++i) {
		const int n = 2 + i % 4;
		const RDef g = rng.monic_g(n);
		const auto sys = build_system(g).system;
		const RPoly an = RPoly::monomial(ax_alphabet(), Word::power(0, static_cast<std::size_t>(n)));
		const RPoly gx = g.as_poly(ax_alphabet(), 1);
		if (!is_central(an, sys) || !is_central(gx, sys))
			failures.push_back(g.to_string());
	}
	a.verdict = pass_if(failures.empty());
	a.witness = Json{{"tested", cfg.central_g}, {"failures", failures}};

	Claim b = make("C04b", "axax - x^2a^2 - r2 xa^2 - r1 a^2 is central for cubic g",
	               "central element of A0(x,a,g) for deg g = 3");
	Json bf = Json::array();
	for (int i = 0; i < cfg.central_cubic; ++i) {
		const RDef g = rng.monic_g(3);
		if (!is_central(cubic_central_element(g), build_system(g).system))
			bf.push_back(g.to_string());
	}
	b.verdict = pass_if(bf.empty());
	b.witness = Json{{"tested", cfg.central_cubic}, {"failures", bf}};

	Claim d = make("C04c", "listed centre elements of A0(x,a,x^3) over Q(zeta_3)",
	               "centre of A0(x,a,x^3), lambda a primitive cube root of unity");
	Json elements = Json::array();
	bool all = true;
	for (const auto& e : centre_suite_x3()) {
		all &= e.central;
		elements.push_back(Json{{"element", e.name}, {"expanded", e.element}, {"central", e.central}});
	}
	d.verdict = pass_if(all);
	d.witness = Json{{"elements", elements}};
	return {a, b, d};
}

// --- criterion 5 ---------------------------------------------------------

std::vector<Claim> coalgebra_suite(const SuiteConfig& cfg)
{
	Sampler rng(suite_seed(cfg, 5));
	Claim closed = make("C05a", "closed forms for the coproduct of x^l and P(j,t)",
	                    "coproduct of powers of x and of P(j,t)");
	bool ok = true;
	Json bad = Json::array();
	for (int l = 0; l <= 8; ++l)
		if (!verify_delta_powers(l)) {
			ok = false;
			bad.push_back(Json{{"power", l}});
		}
	for (int j = 0; j <= 8; ++j)
		for (int t = 0; j + t <= 8; ++t)
			if (!verify_delta_P(j, t)) {
				ok = false;
				bad.push_back(Json{{"j", j}, {"t", t}});
			}
	closed.verdict = pass_if(ok);
	closed.witness = Json{{"max_index", 8}, {"failures", bad}};

	Claim hopf = make("C05b", "the relations generate a Hopf ideal at bialgebra level",
	                  "coproduct and counit of each sigma_j vanish modulo I⊗F + F⊗I");
	std::vector<RDef> gs{monomial_g(3), RDef({Rational(1), Rational(1)}),
	                     RDef({Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)})};
	for (int i = 0; i < cfg.coalgebra_g; ++i)
		gs.push_back(rng.monic_g(2 + i % 4));
	Json hf = Json::array();
	bool lemma_iii = true, lemma_iv = true;
	for (const RDef& g : gs) {
		const auto rep = hopf_ideal_check(g, cfg.budget);
		if (!rep.passed())
			hf.push_back(hopf_json(rep));
		const auto sys = build_system(g).system;
		const RDef h = g.monic();
		const int n = h.degree();
		const RPoly gp = sys.normal_form(h.as_poly(ax_alphabet(), 1));
		const RPoly an = sys.normal_form(RPoly::monomial(ax_alphabet(), Word::power(0, static_cast<std::size_t>(n))));
		const RPoly one = RPoly::constant(ax_alphabet(), Rational(1));
		lemma_iii &= tensor_normal_form(coproduct(h.as_poly(ax_alphabet(), 1)), sys) ==
		             RTensor::product({one, gp}) + RTensor::product({gp, an});
		for (int j = 1; j < n; ++j) {
			RPoly s(ax_alphabet());
			for (int l = j; l <= n; ++l)
				s += h.coeff(l) * P(j, l - j);
			lemma_iv &= tensor_normal_form(coproduct(s), sys) == h.coeff(j) * RTensor::product({an, an});
		}
	}
	hopf.verdict = pass_if(hf.empty() && lemma_iii && lemma_iv);
	hopf.witness = Json{{"tested", gs.size()},
	                    {"failures", hf},
	                    {"delta_g_congruence", lemma_iii},
	                    {"delta_partial_sum_congruence", lemma_iv}};

	Claim laws = make("C05c", "coassociativity and counit laws", "coalgebra structure on the free algebra");
	bool coassoc = true, counit_ok = true;
	std::vector<RPoly> samples{P(1, 0), P(0, 1), RPoly::constant(ax_alphabet(), Rational(3))};
	for (int i = 0; i < cfg.coalgebra_polys; ++i)
		samples.push_back(rng.poly(ax_alphabet(), 6, 4));
	for (const RPoly& p : samples) {
		coassoc &= double_coproduct(p, true) == double_coproduct(p, false);
		counit_ok &= counit_contract(p, true) == p && counit_contract(p, false) == p;
	}
	laws.verdict = pass_if(coassoc && counit_ok);
	laws.witness = Json{{"samples", samples.size()}, {"coassociative", coassoc}, {"counit", counit_ok}};
	return {closed, hopf, laws};
}

// --- criterion 6 ---------------------------------------------------------

Claim quantum_plane_suite()
{
	Claim c = make("C06", "P(j, n-j) vanishes in the quantum plane at a primitive n-th root",
	               "quotient onto the quantum plane at a primitive n-th root of unity");
	Json rows = Json::array();
	bool ok = true;
	for (int n = 2; n <= 8; ++n) {
		const auto sys = build_quantum_plane(n);
		Json entries = Json::array();
		for (int j = 1; j < n; ++j) {
			const CPoly nf = sys.normal_form(P<Cyclotomic>(j, n - j, ax_alphabet(), 0, 1));
			ok &= nf.is_zero();
			entries.push_back(nf.to_string());
		}
		rows.push_back(Json{{"n", n}, {"normal_forms", entries}});
	}
	c.verdict = pass_if(ok);
	c.witness = Json{{"results", rows}};
	return c;
}

// --- criterion 7 ---------------------------------------------------------

std::vector<Claim> small_degree_suite(const SuiteConfig& cfg)
{
	Sampler rng(suite_seed(cfg, 7));
	Claim change = make("C07a", "change of variable x' = x + (r/2)(1 - a) gives ax' + x'a = 0",
	                    "degree-2 case as a quantum plane at -1");
	Json bad = Json::array();
	for (int i = 0; i < cfg.small_degree_r; ++i) {
		const Rational r = rng.small_rational();
		const auto rep = degree2_suite(r, Rational(0));
		if (!rep.relation_holds)
			bad.push_back(Json{{"r", r.to_string()}, {"residual", rep.relation_residual}});
	}
	change.verdict = pass_if(bad.empty());
	change.witness = Json{{"tested", cfg.small_degree_r}, {"failures", bad}};

	Claim downup = make("C07b", "down-up algebra A(-1,-1,0) is A0(x,a,x^3)",
	                    "down-up relations renamed d -> a, u -> x");
	const auto du = downup_relations<Rational>(Rational(-1), Rational(-1), Rational(0));
	const auto rels = build_system(monomial_g(3)).relations;
	std::vector<RPoly> renamed;
	for (const auto& p : du)
		renamed.push_back(rename(p, {0, 1}, ax_alphabet()));
	auto matches = [&](const RPoly& p) {
		return std::any_of(rels.begin(), rels.end(), [&](const RPoly& s) { return p == s || p == -s; });
	};
	const bool same = renamed.size() == rels.size() && std::all_of(renamed.begin(), renamed.end(), matches) &&
	                  std::all_of(rels.begin(), rels.end(), [&](const RPoly& s) {
		                  return std::any_of(renamed.begin(), renamed.end(),
		                                     [&](const RPoly& p) { return p == s || p == -s; });
	                  });
	downup.verdict = pass_if(same);
	downup.witness = Json{{"renamed", Json{renamed[0].to_string(), renamed[1].to_string()}},
	                      {"relations", Json{rels[0].to_string(), rels[1].to_string()}}};

	Claim filtered = make("C07c", "leading filtered parts of sigma_j(g) are sigma_j(x^3)",
	                      "PBW deformation of A0(x,a,x^3), weights x:2, a:1");
	Json fbad = Json::array();
	const std::vector<int> weights{1, 2};
	for (int i = 0; i < cfg.filtered_cubic; ++i) {
		const RDef g = rng.monic_g(3);
		for (int j = 1; j <= 2; ++j)
			if (!(leading_filtered_part(sigma(j, g), weights) == sigma(j, monomial_g(3))))
				fbad.push_back(Json{{"g", g.to_string()}, {"j", j}});
	}
	filtered.verdict = pass_if(fbad.empty());
	filtered.witness = Json{{"tested", cfg.filtered_cubic}, {"failures", fbad}};
	return {change, downup, filtered};
}

// --- criterion 8 ---------------------------------------------------------

Claim growth_suite(const SuiteConfig& cfg)
{
	Claim c = make("C08", "growth dichotomy of the irreducible word census",
	               "polynomial growth of degree 2 and 3 for n = 2, 3; free subalgebra for n >= 4");
	Json rows = Json::object();
	bool ok = true;
	for (int n = 2; n <= 5; ++n) {
		const auto rep = irreducible_census(build_system(monomial_g(n)).system, cfg.census_length);
		const auto cls = growth_classify(rep);
		bool expected = n <= 3 ? (cls.kind == GrowthKind::Polynomial && cls.exponent == n)
		                       : cls.kind == GrowthKind::Exponential;
		ok &= expected;
		Json j = growth_json(rep, cls);
		j["expected"] = n <= 3 ? "polynomial exponent " + std::to_string(n) : std::string("exponential");
		rows["n=" + std::to_string(n)] = j;
	}
	c.verdict = pass_if(ok);
	c.witness = rows;
	return c;
}

// --- criterion 9 ---------------------------------------------------------

Claim scaling_suite(const SuiteConfig& cfg)
{
	Claim c = make("C09", "scaling identity theta_lambda(sigma_j(g)) = lambda^-j sigma_j(g^lambda)",
	               "rescaling x by a nonzero scalar");
	Sampler rng(suite_seed(cfg, 9));
	Json bad = Json::array();
	for (int i = 0; i < cfg.scaling_triples; ++i) {
		const int n = rng.uniform(2, 5);
		const RDef g = rng.any_g(n);
		const Rational lambda = rng.small_rational(true);
		const int j = rng.uniform(1, n - 1);
		const RPoly lhs = scale_theta(sigma(j, g), lambda);
		const RPoly rhs = lambda.pow(-j) * sigma(j, scale_poly(g, lambda));
		if (!(lhs == rhs))
			bad.push_back(Json{{"g", g.to_string()}, {"lambda", lambda.to_string()}, {"j", j}});
	}
	c.verdict = pass_if(bad.empty());
	c.witness = Json{{"tested", cfg.scaling_triples}, {"failures", bad}};
	return c;
}

// --- criterion 10 --------------------------------------------------------

template <Field F>
const NcPoly<F>& relation_named(const Presentation<F>& p, const std::string& label)
{
	for (std::size_t i = 0; i < p.labels.size(); ++i)
		if (p.labels[i] == label)
			return p.relations[i];
	throw std::out_of_range("no relation labelled " + label);
}

std::vector<Claim> examples_suite(const SuiteConfig& cfg)
{
	std::vector<Claim> out;

	// lemniscate y^2 = x^4 + λ^2 x^2 over Q(ζ_8)
	{
		Claim c = make("C10a", "lemniscate relations match the displayed presentation",
		               "lemniscate of Gerono, lambda a primitive 8th root of unity");
		const Cyclotomic lambda = Cyclotomic::generator(8);
		const CDef g({Cyclotomic(0), lambda * lambda, Cyclotomic(0), Cyclotomic(1)});
		const CDef f({Cyclotomic(0), Cyclotomic(1)});
		const auto pres = build_tensor_presentation(g, f);
		const ScalarSymbol sym{"lambda", 8};
		const std::vector<std::pair<std::string, std::string>> displays{
		    {"tau_1", "b*y + y*b"},
		    {"sigma_1", "a*x^3 + x*a*x^2 + x^2*a*x + x^3*a + lambda^2*(x*a + a*x)"},
		    {"sigma_2", "lambda^2*a^2 + a^2*x^2 + x^2*a^2 + x*a*x*a + a*x^2*a + x*a^2*x + a*x*a*x - lambda^2*a^4"},
		    {"sigma_3", "a^3*x + a^2*x*a + a*x*a^2 + x*a^3"},
		};
		bool ok = true;
		Json rows = Json::array();
		for (const auto& [label, text] : displays) {
			const CPoly shown = parse_poly(text, pres.alphabet, sym);
			const CPoly& made = relation_named(pres, label);
			const bool eq = shown == made;
			ok &= eq;
			rows.push_back(Json{{"relation", label}, {"displayed", text}, {"generated", made.to_string()}, {"match", eq}});
		}
		c.verdict = pass_if(ok);
		c.witness = Json{{"relations", rows}};
		out.push_back(c);
	}

	const RDef nodal_g({Rational(0), Rational(1), Rational(1)});
	const RDef nodal_f({Rational(0), Rational(1)});
	const auto nodal = build_tensor_presentation(nodal_g, nodal_f);
	{
		Claim c = make("C10b", "nodal cubic relation sigma_1 matches the displayed presentation",
		               "nodal cubic y^2 = x^2 + x^3");
		const std::string text = "a*x + x*a + a*x^2 + x*a*x + x^2*a";
		const RPoly shown = parse_poly(text, nodal.alphabet);
		const RPoly& made = relation_named(nodal, "sigma_1");
		Json others = Json::array();
		for (const auto& [label, t] : std::vector<std::pair<std::string, std::string>>{
		         {"curve", "y^2 - x^2 - x^3"}, {"group", "a^3 - b^2"}, {"tau_1", "y*b + b*y"}}) {
			others.push_back(Json{{"relation", label},
			                      {"displayed", t},
			                      {"match", parse_poly(t, nodal.alphabet) == relation_named(nodal, label)}});
		}
		c.verdict = pass_if(shown == made);
		c.witness = Json{{"displayed", text}, {"generated", made.to_string()}, {"other_relations", others}};
		out.push_back(c);
	}
	{
		Claim c = make("C10c", "degree-2 identity for x'^2 - y'^2 in the tensor algebra, as displayed",
		               "smooth and singular degree-2 curves, identity preceding the final presentation");
		Sampler rng(suite_seed(cfg, 10));
		Json bad = Json::array();
		bool corrected_all = true;
		for (int i = 0; i < cfg.degree2_pairs; ++i) {
			const Rational r = rng.small_rational(), s = rng.small_rational();
			const auto rep = degree2_suite(r, s);
			corrected_all &= rep.corrected_holds;
			if (!rep.literal_holds)
				bad.push_back(Json{{"r", r.to_string()},
				                   {"s", s.to_string()},
				                   {"residual", rep.literal_residual},
				                   {"holds_with_g_minus_f", rep.corrected_holds}});
		}
		c.verdict = pass_if(bad.empty());
		c.witness = Json{{"tested", cfg.degree2_pairs},
		                 {"displayed_identity", "x'^2 - y'^2 = f - g + 1/4(r^2 - s^2) - 1/4(r^2 a^2 - s^2 b^2)"},
		                 {"failures", bad},
		                 {"identity_with_g_minus_f_holds_for_all", corrected_all},
		                 {"tensor_legs", "left leg over (a, x), right leg over (b, y) printed as (a, x)"}};
		out.push_back(c);
	}
	{
		Claim c = make("C10d", "nodal cubic relation sigma_2 against the displayed presentation",
		               "nodal cubic y^2 = x^2 + x^3");
		const std::string text = "a^2*x + a*x*a + x*a^2 - (a^3 + a^2)";
		const RPoly shown = parse_poly(text, nodal.alphabet);
		const RPoly& made = relation_named(nodal, "sigma_2");
		c.verdict = Verdict::ReportOnly;
		c.witness = Json{{"displayed", "a^2*x + a*x*a + x*a^2 = a^3 + a^2"},
		                 {"generated", made.to_string() + " = 0"},
		                 {"match", shown == made},
		                 {"difference", (shown - made).to_string()}};
		out.push_back(c);
	}
	{
		Claim c = make("C10e", "generators of I(m) reduced modulo I(n)",
		               "containment of ideals I(m) in I(n) for the monomial family");
		Json rows = Json::array();
		for (int n = 2; n <= 5; ++n)
			for (int m = n + 1; m <= 6; ++m) {
				Json gens = Json::array();
				for (const auto& e : xn_chain_report(m, n))
					gens.push_back(Json{{"generator", "P(" + std::to_string(e.j) + "," + std::to_string(m - e.j) + ")"},
					                    {"normal_form", e.normal_form},
					                    {"in_ideal", e.zero},
					                    {"recursion_identity", e.recursion_holds}});
				rows.push_back(Json{{"m", m}, {"n", n}, {"generators", gens}});
			}
		c.verdict = Verdict::ReportOnly;
		c.witness = Json{{"results", rows}};
		out.push_back(c);
	}
	return out;
}

// --- criterion 11 --------------------------------------------------------

Claim tensor_quotient_suite(const SuiteConfig& cfg)
{
	Claim c = make("C11", "tensor quotient dimensions against the non-localised basis census",
	               "PBW basis of A(g,f) via the tensor product of the two factors");
	Json rows = Json::array();
	bool ok = true;
	for (int m : {2, 3}) {
		const auto rep = quotient_dimension_tensor(monomial_g(2), monomial_g(m), cfg.tensor_degree);
		ok &= !rep.first_disagreement.has_value();
		Json j = tensor_quotient_json(rep);
		j["pair"] = "(x^2, y^" + std::to_string(m) + ")";
		rows.push_back(j);
	}
	c.verdict = pass_if(ok);
	c.witness = Json{{"max_weighted_degree", cfg.tensor_degree}, {"results", rows}};
	return c;
}

template <class Fn>
std::vector<Claim> timed(Fn&& fn)
{
	const auto start = std::chrono::steady_clock::now();
	std::vector<Claim> claims = fn();
	const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	for (auto& c : claims)
		c.seconds = secs / static_cast<double>(claims.size());
	return claims;
}

} // namespace

std::string verdict_name(Verdict v)
{
	switch (v) {
	case Verdict::Pass: return "pass";
	case Verdict::Fail: return "fail";
	case Verdict::ReportOnly: return "report-only";
	}
	return "fail";
}

std::vector<Claim> run_criterion(int criterion, const SuiteConfig& cfg)
{
	auto one = [](Claim c) { return std::vector<Claim>{std::move(c)}; };
	switch (criterion) {
	case 1: return timed([&] { return one(diamond_suite(cfg)); });
	case 2: return timed([&] { return one(pq_suite()); });
	case 3: return timed([&] { return one(pbw_suite(cfg)); });
	case 4: return timed([&] { return centrality_suite(cfg); });
	case 5: return timed([&] { return coalgebra_suite(cfg); });
	case 6: return timed([&] { return one(quantum_plane_suite()); });
	case 7: return timed([&] { return small_degree_suite(cfg); });
	case 8: return timed([&] { return one(growth_suite(cfg)); });
	case 9: return timed([&] { return one(scaling_suite(cfg)); });
	case 10: return timed([&] { return examples_suite(cfg); });
	case 11: return timed([&] { return one(tensor_quotient_suite(cfg)); });
	default: throw std::out_of_range("criterion must lie in 1..11");
	}
}

std::vector<Claim> run_all_claims(const SuiteConfig& cfg)
{
	std::vector<Claim> all;
	for (int k = 1; k <= kCriteria; ++k)
		for (auto& c : run_criterion(k, cfg))
			all.push_back(std::move(c));
	std::sort(all.begin(), all.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
	return all;
}

bool all_passed(const std::vector<Claim>& claims)
{
	return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verdict == Verdict::Fail; });
}

Json report_document(const std::vector<Claim>& claims, const std::vector<std::string>& invocation)
{
	Json list = Json::array();
	for (const auto& c : claims)
		list.push_back(Json{{"id", c.id},
		                    {"title", c.title},
		                    {"paper_location", c.paper_location},
		                    {"verdict", verdict_name(c.verdict)},
		                    {"witness", c.witness}});
	return Json{{"tool", "ncd"},
	            {"version", kToolVersion},
	            {"invocation", invocation},
	            {"claims", list},
	            {"overall", all_passed(claims) ? "pass" : "fail"}};
}

} // namespace ncd
