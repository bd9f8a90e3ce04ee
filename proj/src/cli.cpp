#include "ncd/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "ncd/claims.hpp"
#include "ncd/parser.hpp"

namespace ncd {

namespace {

using RPoly = NcPoly<Rational>;
using RDef = DefiningPolynomial<Rational>;

class UsageError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

struct Options {
	std::string g, f, expr, order, json;
	int n = 0;
	int max_len = -1;
	int slack = 0;
	int criterion = 0;
	bool all = false;
	bool oracle = false;
	std::size_t budget = kDefaultBudget;
};

/// Outcome of one subcommand: the report object plus its text view.
struct Outcome {
	Json report;
	std::string text;
	int code = kExitOk;
};

RDef monomial(int n)
{
	if (n < 2)
		throw UsageError("--n must be at least 2");
	std::vector<Rational> c(static_cast<std::size_t>(n));
	c.back() = 1;
	return RDef(std::move(c));
}

RDef require_g(const Options& o)
{
	if (o.g.empty())
		throw UsageError("--g is required");
	return parse_defining(o.g, "x");
}

RDef g_or_n(const Options& o)
{
	if (!o.g.empty() && o.n != 0)
		throw UsageError("give either --g or --n, not both");
	if (!o.g.empty())
		return parse_defining(o.g, "x");
	if (o.n == 0)
		throw UsageError("--g or --n is required");
	return monomial(o.n);
}

/// Σ_g, or the two-factor presentation when --f is given.
Presentation<Rational> load_presentation(const Options& o)
{
	const RDef g = require_g(o);
	const bool tensor = !o.f.empty();
	if (!o.order.empty() && o.order != (tensor ? "product" : "grlex+"))
		throw UsageError(tensor ? "the two-factor presentation uses --order product"
		                        : "a single defining polynomial uses --order grlex+");
	if (tensor)
		return build_tensor_presentation(g, parse_defining(o.f, "y"));
	return build_system(g);
}

Json presentation_json(const Presentation<Rational>& p)
{
	Json out = system_json(p.system);
	Json rels = Json::array();
	for (std::size_t i = 0; i < p.relations.size(); ++i)
		rels.push_back(Json{{"label", p.labels[i]}, {"relation", p.relations[i].to_string()}});
	out["relations"] = rels;
	return out;
}

std::string system_header(const Json& j)
{
	return "system " + j["system"].get<std::string>() + "\norder " + j["order"].get<std::string>() + "\n";
}

std::string rules_text(const Json& j)
{
	std::string s = "rules:\n";
	for (const auto& r : j["rules"])
		s += "  " + r["label"].get<std::string>() + ": " + r["lhs"].get<std::string>() + " -> " +
		     r["rhs"].get<std::string>() + "\n";
	return s;
}

std::string relations_text(const Json& j)
{
	std::string s = "relations:\n";
	for (const auto& r : j["relations"])
		s += "  " + r["label"].get<std::string>() + " = " + r["relation"].get<std::string>() + "\n";
	return s;
}

std::string join(const Json& arr)
{
	std::string s;
	for (const auto& v : arr) {
		if (!s.empty())
			s += " ";
		s += v.is_string() ? v.get<std::string>() : v.dump();
	}
	return s;
}

// --- subcommands ---------------------------------------------------------

Outcome cmd_present(const Options& o)
{
	const auto pres = load_presentation(o);
	Outcome r;
	r.report = presentation_json(pres);
	const RDef g = require_g(o);
	if (!g.is_monic())
		r.report["normalised_by"] = g.coeff(g.degree()).to_string();
	r.text = system_header(r.report) + relations_text(r.report) + rules_text(r.report);
	if (!g.is_monic())
		r.text += "g divided by its leading coefficient " + r.report["normalised_by"].get<std::string>() + "\n";
	return r;
}

std::string confluence_text(const Json& j)
{
	std::string s = system_header(j);
	const Json& st = j["stats"];
	s += "ambiguities " + st["ambiguities"].dump() + " (" + st["overlaps"].dump() + " overlaps, " +
	     st["inclusions"].dump() + " inclusions)\n";
	for (const auto& a : j["ambiguities"]) {
		s += "  " + a["kind"].get<std::string>() + " " + a["sigma"].get<std::string>() + "/" +
		     a["tau"].get<std::string>() + " A=" + a["A"].get<std::string>() + " B=" + a["B"].get<std::string>() +
		     " C=" + a["C"].get<std::string>() + ": " + a["verdict"].get<std::string>() + "\n";
		if (a.contains("difference"))
			s += "    difference " + a["difference"].get<std::string>() + "\n";
	}
	s += "overall " + j["overall"].get<std::string>() + "\n";
	return s;
}

Outcome cmd_confluence(const Options& o)
{
	const auto pres = load_presentation(o);
	const auto rep = check_confluence(pres.system, o.budget);
	Outcome r;
	r.report = confluence_json(rep, pres.system);
	r.text = confluence_text(r.report);
	r.code = rep.confluent() ? kExitOk : kExitFailed;
	return r;
}

Outcome cmd_nf(const Options& o)
{
	if (o.expr.empty())
		throw UsageError("--expr is required");
	const auto pres = load_presentation(o);
	const RPoly p = parse_poly(o.expr, pres.alphabet);
	ReductionStats stats;
	const RPoly nf = pres.system.normal_form(p, &stats, o.budget);
	Outcome r;
	r.report = Json{{"system", pres.system.name()},
	                {"input", p.to_string()},
	                {"normal_form", nf.to_string(&pres.system.order())},
	                {"steps", stats.steps}};
	r.text = r.report["normal_form"].get<std::string>() + "\n";
	return r;
}

Outcome cmd_basis(const Options& o)
{
	const RDef g = g_or_n(o);
	const int L = o.max_len < 0 ? 6 : o.max_len;
	if (L > kCensusLimit)
		throw UsageError("--max-len must not exceed " + std::to_string(kCensusLimit));
	const int n = g.degree();
	std::size_t collisions = 0;
	const auto words = pbw_words(n, L, &collisions);
	const auto alpha = ax_alphabet();
	std::vector<Json> by_length(static_cast<std::size_t>(L) + 1, Json::array());
	for (const Word& w : words)
		by_length[w.size()].push_back(w.to_string(*alpha));
	Outcome r;
	Json lengths = Json::array();
	std::size_t total = 0;
	r.text = "PBW words x^i <L_" + std::to_string(n) + "> a^k up to length " + std::to_string(L) + "\n";
	for (int len = 0; len <= L; ++len) {
		const Json& ws = by_length[static_cast<std::size_t>(len)];
		total += ws.size();
		lengths.push_back(Json{{"length", len}, {"count", ws.size()}, {"words", ws}});
		r.text += "  " + std::to_string(len) + " (" + std::to_string(ws.size()) + "): " + join(ws) + "\n";
	}
	r.report = Json{{"n", n}, {"max_len", L}, {"total", total}, {"lengths", lengths}};
	r.text += "total " + std::to_string(total) + "\n";
	if (!o.g.empty() || o.oracle) {
		const auto sys = build_system(g).system;
		const bool irreducible =
		    std::all_of(words.begin(), words.end(), [&](const Word& w) { return sys.is_irreducible(w); });
		r.report["irreducible"] = irreducible;
		r.text += std::string("all irreducible under ") + sys.name() + ": " + (irreducible ? "yes" : "no") + "\n";
		if (!irreducible)
			r.code = kExitFailed;
	}
	if (o.oracle) {
		const auto dim = dimension_oracle(g, L, o.slack);
		r.report["oracle"] = Json{{"ell", dim.ell},
		                          {"slack", dim.slack},
		                          {"total_words", dim.total_words},
		                          {"dimensions", dim.dimensions},
		                          {"certified", dim.certified},
		                          {"matches_basis", dim.dimension() == total}};
		r.text += "oracle dimension " + std::to_string(dim.dimension()) + " at slacks " + std::to_string(o.slack) +
		          ".." + std::to_string(o.slack + 2) + " [" + join(Json(dim.dimensions)) + "] " +
		          (dim.certified ? "certified" : "not certified") + "\n";
		if (!dim.certified || dim.dimension() != total)
			r.code = kExitFailed;
	}
	return r;
}

Outcome cmd_growth(const Options& o)
{
	const RDef g = g_or_n(o);
	const int L = o.max_len < 0 ? 12 : o.max_len;
	const auto sys = build_system(g).system;
	const auto rep = irreducible_census(sys, L);
	const auto cls = growth_classify(rep);
	Outcome r;
	r.report = growth_json(rep, cls);
	r.report["system"] = sys.name();
	r.text = "system " + sys.name() + "\ncounts " + join(r.report["counts"]) + "\ncumulative " +
	         join(r.report["cumulative"]) + "\nclassification " + cls.name();
	if (cls.kind == GrowthKind::Polynomial)
		r.text += " exponent " + std::to_string(cls.exponent);
	r.text += "\n";
	return r;
}

Outcome cmd_central(const Options& o)
{
	const RDef g = require_g(o).monic();
	const auto sys = build_system(g).system;
	std::vector<std::pair<std::string, RPoly>> elements;
	if (!o.expr.empty()) {
		elements.emplace_back(o.expr, parse_poly(o.expr, ax_alphabet()));
	} else {
		elements.emplace_back("a^" + std::to_string(g.degree()),
		                      RPoly::monomial(ax_alphabet(), Word::power(0, static_cast<std::size_t>(g.degree()))));
		elements.emplace_back("g(x)", g.as_poly(ax_alphabet(), 1));
		if (g.degree() == 3)
			elements.emplace_back("axax - x^2a^2 - r2 xa^2 - r1 a^2", cubic_central_element(g));
	}
	Outcome r;
	Json list = Json::array();
	r.text = "system " + sys.name() + "\n";
	bool all = true;
	for (const auto& [name, p] : elements) {
		const bool c = is_central(p, sys);
		all &= c;
		list.push_back(Json{{"element", name}, {"expanded", p.to_string()}, {"central", c}});
		r.text += "  " + name + ": " + (c ? "central" : "not central") + "\n";
	}
	r.report = Json{{"system", sys.name()}, {"elements", list}};
	r.code = all ? kExitOk : kExitFailed;
	return r;
}

Outcome cmd_hopf(const Options& o)
{
	const auto rep = hopf_ideal_check(require_g(o), o.budget);
	Outcome r;
	r.report = hopf_json(rep);
	r.text = "system " + rep.system + "\nconfluent " + (rep.confluent ? "yes" : "no") + "\n";
	for (const auto& e : r.report["generators"])
		r.text += "  " + e["sigma"].get<std::string>() + ": delta residual " + e["delta_residual"].get<std::string>() +
		          ", counit " + e["counit"].get<std::string>() + ": " + e["verdict"].get<std::string>() + "\n";
	r.text += "verdict " + r.report["verdict"].get<std::string>() + "\n";
	r.code = rep.passed() ? kExitOk : kExitFailed;
	return r;
}

Outcome cmd_tensor(const Options& o)
{
	if (o.f.empty())
		throw UsageError("--f is required");
	const auto pres = load_presentation(o);
	const auto conf = check_confluence(pres.system, o.budget);
	const int D = o.max_len < 0 ? 6 : o.max_len;
	const auto quo = quotient_dimension_tensor(require_g(o), parse_defining(o.f, "y"), D);
	Outcome r;
	r.report = presentation_json(pres);
	r.report["confluent"] = conf.confluent();
	r.report["ambiguities"] = conf.verdicts.size();
	r.report["quotient"] = tensor_quotient_json(quo);
	r.text = system_header(r.report) + relations_text(r.report) + rules_text(r.report);
	r.text += "ambiguities " + std::to_string(conf.verdicts.size()) + ", " +
	          (conf.confluent() ? "resolvable" : "not-confluent") + "\n";
	r.text += "weighted degree: tensor rank quotient census\n";
	for (const auto& d : quo.degrees)
		r.text += "  " + std::to_string(d.degree) + ": " + std::to_string(d.tensor_dimension) + " " +
		          std::to_string(d.rank) + " " + std::to_string(d.quotient) + " " + std::to_string(d.census) +
		          (d.agrees() ? "" : "  disagrees") + "\n";
	if (quo.first_disagreement)
		r.text += "first disagreement at degree " + std::to_string(*quo.first_disagreement) + "\n";
	r.code = conf.confluent() && !quo.first_disagreement ? kExitOk : kExitFailed;
	return r;
}

Outcome cmd_verify_paper(const Options& o, const std::vector<std::string>& args)
{
	if (!o.all && o.criterion == 0)
		throw UsageError("verify paper needs --all or --criterion K");
	std::vector<Claim> claims;
	if (o.all) {
		claims = run_all_claims();
	} else {
		claims = run_criterion(o.criterion);
	}
	std::vector<std::string> invocation{"ncd"};
	invocation.insert(invocation.end(), args.begin(), args.end());
	Outcome r;
	r.report = report_document(claims, invocation);
	for (const auto& c : claims)
		r.text += c.id + " " + verdict_name(c.verdict) + " " + c.title + "\n";
	r.text += "overall " + r.report["overall"].get<std::string>() + "\n";
	r.code = all_passed(claims) ? kExitOk : kExitFailed;
	return r;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"noncommutative deformation toolkit", "ncd"};
	app.require_subcommand(1);
	app.set_version_flag("--version", std::string(kToolVersion));
	Options o;

	auto add_g = [&](CLI::App* c) { c->add_option("--g", o.g, "defining polynomial in x, or coefficients r1, ..., rn"); };
	auto add_f = [&](CLI::App* c) { c->add_option("--f", o.f, "second defining polynomial, in y"); };
	auto add_order = [&](CLI::App* c) {
		c->add_option("--order", o.order, "monomial order")->check(CLI::IsMember({"grlex+", "product"}));
	};
	auto add_budget = [&](CLI::App* c) {
		c->add_option("--budget", o.budget, "reduction step budget per normal form")->check(CLI::PositiveNumber);
	};
	auto add_json = [&](CLI::App* c) { c->add_option("--json", o.json, "write the JSON report to FILE, or - for stdout"); };

	auto* present = app.add_subcommand("present", "relations and oriented rules");
	auto* confluence = app.add_subcommand("confluence", "ambiguity census and resolution");
	auto* nf = app.add_subcommand("nf", "normal form of an expression");
	auto* basis = app.add_subcommand("basis", "PBW words up to a length");
	auto* growth = app.add_subcommand("growth", "irreducible word census and growth class");
	auto* central = app.add_subcommand("central", "centrality of a^n, g and given elements");
	auto* hopf = app.add_subcommand("hopf-ideal", "coproduct and counit of each sigma_j");
	auto* tensor = app.add_subcommand("tensor", "two-factor presentation and quotient dimensions");
	auto* verify = app.add_subcommand("verify", "run claim suites");
	verify->require_subcommand(1);
	auto* verify_hopf = verify->add_subcommand("hopf-ideal", "Hopf ideal verdict per sigma_j");
	auto* verify_paper = verify->add_subcommand("paper", "every claim suite");

	for (auto* c : {present, confluence, nf}) {
		add_g(c);
		add_f(c);
		add_order(c);
	}
	for (auto* c : {confluence, nf, hopf, verify_hopf, tensor})
		add_budget(c);
	for (auto* c : {present, confluence, nf, basis, growth, central, hopf, tensor, verify_hopf, verify_paper})
		add_json(c);
	nf->add_option("--expr", o.expr, "expression over the generators");
	for (auto* c : {basis, growth}) {
		add_g(c);
		c->add_option("--n", o.n, "use g = x^n");
		c->add_option("--max-len", o.max_len, "largest word length")->check(CLI::NonNegativeNumber);
	}
	basis->add_flag("--oracle", o.oracle, "cross-check with the linear-algebra dimension oracle");
	basis->add_option("--slack", o.slack, "oracle slack")->check(CLI::NonNegativeNumber);
	add_g(central);
	central->add_option("--expr", o.expr, "element to test instead of the defaults");
	add_g(hopf);
	add_g(verify_hopf);
	add_g(tensor);
	add_f(tensor);
	add_order(tensor);
	tensor->add_option("--max-len", o.max_len, "largest weighted degree")->check(CLI::NonNegativeNumber);
	verify_paper->add_flag("--all", o.all, "run every suite");
	verify_paper->add_option("--criterion", o.criterion, "run one acceptance criterion")
	    ->check(CLI::Range(1, kCriteria));

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitUsage;
	}

	try {
		Outcome r;
		if (*present)
			r = cmd_present(o);
		else if (*confluence)
			r = cmd_confluence(o);
		else if (*nf)
			r = cmd_nf(o);
		else if (*basis)
			r = cmd_basis(o);
		else if (*growth)
			r = cmd_growth(o);
		else if (*central)
			r = cmd_central(o);
		else if (*hopf || *verify_hopf)
			r = cmd_hopf(o);
		else if (*tensor)
			r = cmd_tensor(o);
		else
			r = cmd_verify_paper(o, args);

		if (o.json == "-") {
			out << r.report.dump(2) << "\n";
		} else {
			out << r.text;
			if (!o.json.empty()) {
				std::ofstream file(o.json);
				if (!file) {
					err << "error: cannot write " << o.json << "\n";
					return kExitUsage;
				}
				file << r.report.dump(2) << "\n";
			}
		}
		return r.code;
	} catch (const ReductionBudgetExceeded& e) {
		err << "error: " << e.what() << "\n";
		return kExitFailed;
	} catch (const std::logic_error& e) {
		// parse errors, incompatible systems, bad degrees, resource guards
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << "\n";
		return kExitFailed;
	}
}

} // namespace ncd
