#pragma once

#include <string>

#include "json.hpp"
#include "ncd/coalgebra.hpp"
#include "ncd/growth.hpp"
#include "ncd/oracle.hpp"
#include "ncd/structure.hpp"

namespace ncd {

using Json = nlohmann::ordered_json;

template <Field F>
Json rule_json(const Rule<F>& r, const ReductionSystem<F>& sys)
{
	return Json{{"label", r.label},
	            {"lhs", r.lhs.to_string(*sys.alphabet())},
	            {"rhs", r.rhs.to_string(&sys.order())}};
}

template <Field F>
Json system_json(const ReductionSystem<F>& sys)
{
	Json rules = Json::array();
	for (const auto& r : sys.rules())
		rules.push_back(rule_json(r, sys));
	return Json{{"system", sys.name()}, {"order", sys.order().name()}, {"rules", rules}};
}

/// {system, order, rules[], ambiguities[], overall, stats}
template <Field F>
Json confluence_json(const ConfluenceReport<F>& rep, const ReductionSystem<F>& sys)
{
	Json out = system_json(sys);
	Json ambs = Json::array();
	const Alphabet& alpha = *sys.alphabet();
	for (const auto& v : rep.verdicts) {
		const auto& a = v.ambiguity;
		Json j{{"kind", a.kind == AmbiguityKind::Overlap ? "overlap" : "inclusion"},
		       {"sigma", sys.rules()[a.sigma].label},
		       {"tau", sys.rules()[a.tau].label},
		       {"A", a.A.to_string(alpha)},
		       {"B", a.B.to_string(alpha)},
		       {"C", a.C.to_string(alpha)},
		       {"verdict", v.resolvable ? "resolvable" : "not-confluent"}};
		if (!v.resolvable) {
			j["difference"] = v.difference.to_string(&sys.order());
			j["via_sigma"] = v.via_sigma.to_string(&sys.order());
			j["via_tau"] = v.via_tau.to_string(&sys.order());
		}
		ambs.push_back(std::move(j));
	}
	out["ambiguities"] = ambs;
	out["overall"] = rep.confluent() ? "resolvable" : "not-confluent";
	out["stats"] = Json{{"ambiguities", rep.verdicts.size()},
	                    {"overlaps", rep.overlaps()},
	                    {"inclusions", rep.inclusions()},
	                    {"reduction_steps", rep.stats.steps},
	                    {"max_support", rep.stats.max_support}};
	return out;
}

template <Field F>
Json hopf_json(const HopfIdealReport<F>& rep)
{
	Json entries = Json::array();
	for (const auto& e : rep.entries)
		entries.push_back(Json{{"sigma", "sigma_" + std::to_string(e.j)},
		                       {"delta_residual", e.delta_residual.to_string()},
		                       {"counit", to_string(e.counit_value)},
		                       {"verdict", e.passed() ? "pass" : "fail"}});
	return Json{{"system", rep.system},
	            {"confluent", rep.confluent},
	            {"ambiguities", rep.ambiguities},
	            {"generators", entries},
	            {"verdict", rep.passed() ? "pass" : (rep.confluent ? "fail" : "not-certified")}};
}

Json growth_json(const GrowthReport& rep, const GrowthClass& cls);
Json tensor_quotient_json(const TensorQuotientReport& rep);

} // namespace ncd
