#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncd/parallel.hpp"
#include "ncd/presentations.hpp"
#include "ncd/tensor.hpp"

namespace ncd {

enum class CoproductShape { Grouplike, SkewPrimitive };

/// Grouplike: Δ(l) = l⊗l. Skew-primitive: Δ(l) = 1⊗l + l⊗companion.
struct GeneratorCoproduct {
	CoproductShape shape = CoproductShape::Grouplike;
	Letter companion = 0;
};

class CoalgebraContext {
public:
	CoalgebraContext(AlphabetPtr alphabet, std::vector<GeneratorCoproduct> generators);

	/// [a, x] with a grouplike and x skew-primitive against a.
	static const CoalgebraContext& standard();
	/// [a, x, b, y] with y skew-primitive against b.
	static const CoalgebraContext& two_factor();

	const AlphabetPtr& alphabet() const { return alphabet_; }
	const GeneratorCoproduct& generator(Letter l) const { return generators_.at(l); }
	bool is_skew(Letter l) const { return generators_.at(l).shape == CoproductShape::SkewPrimitive; }

	/// All (left, right) pairs in the expansion of Δ(w); each has coefficient 1.
	std::vector<std::pair<Word, Word>> expand(const Word& w) const;

private:
	AlphabetPtr alphabet_;
	std::vector<GeneratorCoproduct> generators_;
};

template <Field F>
TensorPoly<F> coproduct(const NcPoly<F>& p, const CoalgebraContext& ctx = CoalgebraContext::standard())
{
	if (!compatible(p.alphabet(), ctx.alphabet()))
		throw AlphabetMismatch();
	std::map<typename TensorPoly<F>::Key, F> acc;
	for (const auto& [w, c] : p)
		for (auto& [u, v] : ctx.expand(w))
			acc[{std::move(u), std::move(v)}] += c;
	return TensorPoly<F>::from_map(ctx.alphabet(), acc);
}

/// The algebra character with ε(grouplike) = 1 and ε(skew-primitive) = 0.
template <Field F>
F counit(const NcPoly<F>& p, const CoalgebraContext& ctx = CoalgebraContext::standard())
{
	F total;
	for (const auto& [w, c] : p) {
		bool killed = false;
		for (std::size_t i = 0; i < w.size() && !killed; ++i)
			killed = ctx.is_skew(w[i]);
		if (!killed)
			total += c;
	}
	return total;
}

template <Field F>
F counit(const Word& w, const CoalgebraContext& ctx)
{
	return counit(NcPoly<F>::monomial(ctx.alphabet(), w), ctx);
}

/// (Δ⊗id)Δ(p) when `left` is true, (id⊗Δ)Δ(p) otherwise.
template <Field F>
MultiTensor<F, 3> double_coproduct(const NcPoly<F>& p, bool left,
                                   const CoalgebraContext& ctx = CoalgebraContext::standard())
{
	std::map<typename MultiTensor<F, 3>::Key, F> acc;
	for (const auto& [key, c] : coproduct(p, ctx))
		for (auto& [u, v] : ctx.expand(left ? key[0] : key[1])) {
			if (left)
				acc[{u, v, key[1]}] += c;
			else
				acc[{key[0], u, v}] += c;
		}
	return MultiTensor<F, 3>::from_map(ctx.alphabet(), acc);
}

/// (ε⊗id)Δ(p) when `left` is true, (id⊗ε)Δ(p) otherwise.
template <Field F>
NcPoly<F> counit_contract(const NcPoly<F>& p, bool left, const CoalgebraContext& ctx = CoalgebraContext::standard())
{
	std::vector<typename NcPoly<F>::Term> terms;
	for (const auto& [key, c] : coproduct(p, ctx)) {
		F e = counit<F>(left ? key[0] : key[1], ctx);
		if (!e.is_zero())
			terms.emplace_back(left ? key[1] : key[0], e * c);
	}
	return NcPoly<F>::from_terms(ctx.alphabet(), std::move(terms));
}

/// Closed form Σ_{s=0}^{ℓ} x^s ⊗ P(s, ℓ-s) against Δ(x^ℓ).
bool verify_delta_powers(int ell);
/// Closed form Σ_{l=0}^{t} P(j,l) ⊗ P(j+l, t-l) against Δ(P(j,t)).
bool verify_delta_P(int j, int t);

/// Reduces both legs to normal form. Only canonical when `sys` is confluent.
template <Field F>
TensorPoly<F> tensor_normal_form(const TensorPoly<F>& t, const ReductionSystem<F>& sys)
{
	auto nf = [&](const Word& w) { return sys.normal_form(w); };
	return t.map_leg(0, nf).map_leg(1, nf);
}

template <Field F>
struct HopfIdealEntry {
	int j = 0;
	TensorPoly<F> delta_residual; // tensor normal form of Δ(σ_j)
	F counit_value;
	bool passed() const { return delta_residual.is_zero() && counit_value.is_zero(); }
};

template <Field F>
struct HopfIdealReport {
	std::string system;
	bool confluent = false;
	std::size_t ambiguities = 0;
	std::vector<HopfIdealEntry<F>> entries;
	/// Certified only on top of a confluent system.
	bool passed() const
	{
		if (!confluent)
			return false;
		for (const auto& e : entries)
			if (!e.passed())
				return false;
		return true;
	}
};

/// For each σ_j: its coproduct vanishes in A0⊗A0 and its counit is 0.
template <Field F>
HopfIdealReport<F> hopf_ideal_check(const DefiningPolynomial<F>& g, std::size_t budget = kDefaultBudget)
{
	auto pres = build_system(g);
	HopfIdealReport<F> report;
	report.system = pres.system.name();
	auto conf = check_confluence(pres.system, budget);
	report.confluent = conf.confluent();
	report.ambiguities = conf.verdicts.size();
	report.entries = parallel_map<HopfIdealEntry<F>>(pres.relations.size(), [&](std::size_t i) {
		HopfIdealEntry<F> e;
		e.j = static_cast<int>(i) + 1;
		e.delta_residual = tensor_normal_form(coproduct(sigma(e.j, g)), pres.system);
		e.counit_value = counit(sigma(e.j, g));
		return e;
	});
	return report;
}

} // namespace ncd
