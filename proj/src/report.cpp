#include "ncd/report.hpp"

namespace ncd {

Json growth_json(const GrowthReport& rep, const GrowthClass& cls)
{
	Json out{{"counts", rep.counts}, {"cumulative", rep.cumulative()}, {"classification", cls.name()}};
	if (cls.kind == GrowthKind::Polynomial)
		out["exponent"] = cls.exponent;
	out["fit_slope"] = cls.slope;
	out["fit_residual"] = cls.residual;
	out["min_tail_ratio"] = cls.min_tail_ratio;
	return out;
}

Json tensor_quotient_json(const TensorQuotientReport& rep)
{
	Json degrees = Json::array();
	for (const auto& d : rep.degrees)
		degrees.push_back(Json{{"degree", d.degree},
		                       {"tensor_dimension", d.tensor_dimension},
		                       {"rank", d.rank},
		                       {"quotient", d.quotient},
		                       {"census", d.census}});
	Json out{{"n", rep.n}, {"m", rep.m}, {"degrees", degrees}};
	out["first_disagreement"] = rep.first_disagreement ? Json(*rep.first_disagreement) : Json(nullptr);
	return out;
}

} // namespace ncd
