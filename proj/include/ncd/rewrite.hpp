#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncd/ncpoly.hpp"
#include "ncd/order.hpp"
#include "ncd/parallel.hpp"

namespace ncd {

/// Oriented relation lhs -> rhs.
template <Field F>
struct Rule {
	Word lhs;
	NcPoly<F> rhs;
	std::string label;

	/// lhs - rhs, the relation as a polynomial.
	NcPoly<F> relation() const { return NcPoly<F>::monomial(rhs.alphabet(), lhs) - rhs; }
};

struct CompatibilityViolation {
	std::string label;
	Word offending; // rhs word not strictly below lhs
};

struct CompatibilityReport {
	std::vector<CompatibilityViolation> violations;
	bool compatible() const { return violations.empty(); }
};

/// Every monomial of every rhs must lie strictly below its lhs.
template <Field F>
CompatibilityReport check_compatibility(const std::vector<Rule<F>>& rules, const MonomialOrder& order)
{
	CompatibilityReport report;
	for (const auto& r : rules)
		for (const auto& [w, c] : r.rhs)
			if (!order.less(w, r.lhs))
				report.violations.push_back({r.label, w});
	return report;
}

class IncompatibleSystem : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

class ReductionBudgetExceeded : public std::runtime_error {
public:
	explicit ReductionBudgetExceeded(std::size_t budget)
	    : std::runtime_error("normal form exceeded the budget of " + std::to_string(budget) + " reductions")
	{
	}
};

struct ReductionStats {
	std::size_t steps = 0;
	std::size_t max_support = 0;

	void merge(const ReductionStats& o)
	{
		steps += o.steps;
		max_support = std::max(max_support, o.max_support);
	}
};

inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// A compatible set of rules over an alphabet with a monomial order.
template <Field F>
class ReductionSystem {
public:
	ReductionSystem(MonomialOrder order, std::vector<Rule<F>> rules, std::string name = {})
	    : order_(std::move(order)), rules_(std::move(rules)), name_(std::move(name))
	{
		std::set<Word> seen;
		for (auto& r : rules_) {
			if (r.lhs.empty())
				throw IncompatibleSystem("rule '" + r.label + "' has an empty left side");
			for (std::size_t i = 0; i < r.lhs.size(); ++i)
				if (r.lhs[i] >= alphabet()->size())
					throw IncompatibleSystem("rule '" + r.label + "' uses a letter outside the alphabet");
			if (!compatible(r.rhs.alphabet(), alphabet()))
				throw IncompatibleSystem("rule '" + r.label + "' is over another alphabet");
			if (!r.rhs.alphabet())
				r.rhs = NcPoly<F>(alphabet()) + r.rhs;
			if (!seen.insert(r.lhs).second)
				throw IncompatibleSystem("duplicate left side in rule '" + r.label + "'");
		}
		auto report = check_compatibility(rules_, order_);
		if (!report.compatible()) {
			const auto& v = report.violations.front();
			throw IncompatibleSystem("rule '" + v.label + "' is not compatible with " + order_.name() + ": " +
			                         v.offending.to_string(*alphabet()) + " is not below its left side");
		}
		by_size_.resize(rules_.size());
		for (std::size_t i = 0; i < rules_.size(); ++i)
			by_size_[i] = i;
		std::sort(by_size_.begin(), by_size_.end(),
		          [this](std::size_t i, std::size_t j) { return order_.greater(rules_[i].lhs, rules_[j].lhs); });
	}

	const AlphabetPtr& alphabet() const { return order_.alphabet(); }
	const MonomialOrder& order() const { return order_; }
	const std::vector<Rule<F>>& rules() const { return rules_; }
	const std::string& name() const { return name_; }

	struct Redex {
		std::size_t rule;
		std::size_t position;
	};

	/// Leftmost occurrence of the order-largest left side occurring in w.
	std::optional<Redex> find_redex(const Word& w) const
	{
		for (std::size_t i : by_size_) {
			const Word& lhs = rules_[i].lhs;
			if (lhs.size() > w.size())
				continue;
			std::size_t pos = w.find(lhs);
			if (pos != Word::npos)
				return Redex{i, pos};
		}
		return std::nullopt;
	}

	bool is_irreducible(const Word& w) const { return !find_redex(w); }

	/// Rewrites one occurrence in the order-largest reducible monomial.
	std::pair<NcPoly<F>, bool> reduce_once(const NcPoly<F>& p) const
	{
		const typename NcPoly<F>::Term* target = nullptr;
		std::optional<Redex> redex;
		for (const auto& t : p) {
			if (target && !order_.greater(t.first, target->first))
				continue;
			if (auto r = find_redex(t.first)) {
				target = &t;
				redex = r;
			}
		}
		if (!target)
			return {p, false};
		const Word& w = target->first;
		const Rule<F>& rule = rules_[redex->rule];
		NcPoly<F> replaced = target->second * rule.rhs.sandwich(w.subword(0, redex->position),
		                                                         w.subword(redex->position + rule.lhs.size()));
		return {p - NcPoly<F>::monomial(alphabet(), w, target->second) + replaced, true};
	}

	/// Fixed point of reduce_once, computed with the largest remaining word
	/// always processed first so finished terms are never revisited.
	NcPoly<F> normal_form(const NcPoly<F>& p, ReductionStats* stats = nullptr, std::size_t budget = kDefaultBudget) const
	{
		if (!compatible(p.alphabet(), alphabet()))
			throw AlphabetMismatch();
		std::map<Word, F, OrderGreater> work(OrderGreater{&order_});
		for (const auto& [w, c] : p)
			work.emplace(w, c);
		std::vector<typename NcPoly<F>::Term> done;
		std::size_t steps = 0, max_support = work.size();
		while (!work.empty()) {
			auto node = work.extract(work.begin());
			const Word& w = node.key();
			auto redex = find_redex(w);
			if (!redex) {
				done.emplace_back(std::move(node.key()), std::move(node.mapped()));
				continue;
			}
			if (++steps > budget)
				throw ReductionBudgetExceeded(budget);
			const Rule<F>& rule = rules_[redex->rule];
			const Word left = w.subword(0, redex->position);
			const Word right = w.subword(redex->position + rule.lhs.size());
			for (const auto& [v, d] : rule.rhs) {
				F c = node.mapped() * d;
				auto [it, fresh] = work.try_emplace(left * v * right, c);
				if (!fresh) {
					it->second += c;
					if (it->second.is_zero())
						work.erase(it);
				}
			}
			max_support = std::max(max_support, work.size() + done.size());
		}
		if (stats) {
			stats->steps += steps;
			stats->max_support = std::max(stats->max_support, max_support);
		}
		return NcPoly<F>::from_terms(alphabet(), std::move(done));
	}

	NcPoly<F> normal_form(const Word& w, ReductionStats* stats = nullptr, std::size_t budget = kDefaultBudget) const
	{
		return normal_form(NcPoly<F>::monomial(alphabet(), w), stats, budget);
	}

	/// Normal form is zero. Decides membership in the ideal when the system
	/// is confluent; otherwise a true answer is still a certificate.
	bool ideal_membership(const NcPoly<F>& p, std::size_t budget = kDefaultBudget) const
	{
		return normal_form(p, nullptr, budget).is_zero();
	}

private:
	MonomialOrder order_;
	std::vector<Rule<F>> rules_;
	std::vector<std::size_t> by_size_; // rule indices, largest lhs first
	std::string name_;
};

enum class AmbiguityKind { Overlap, Inclusion };

/// (sigma, tau, A, B, C). Overlap: W_sigma = AB, W_tau = BC with A, B, C
/// nonempty. Inclusion: W_sigma = ABC, W_tau = B, sigma != tau.
struct Ambiguity {
	AmbiguityKind kind;
	std::size_t sigma;
	std::size_t tau;
	Word A, B, C;

	Word word() const { return A * B * C; }
};

template <Field F>
std::vector<Ambiguity> find_ambiguities(const ReductionSystem<F>& sys)
{
	std::vector<Ambiguity> out;
	const auto& rules = sys.rules();
	for (std::size_t s = 0; s < rules.size(); ++s)
		for (std::size_t t = 0; t < rules.size(); ++t) {
			const Word& ws = rules[s].lhs;
			const Word& wt = rules[t].lhs;
			for (std::size_t k = 1; k < std::min(ws.size(), wt.size()); ++k)
				if (ws.ends_with(wt.subword(0, k)))
					out.push_back({AmbiguityKind::Overlap, s, t, ws.subword(0, ws.size() - k), wt.subword(0, k),
					               wt.subword(k)});
			if (s != t && wt.size() <= ws.size())
				for (std::size_t p = ws.find(wt); p != Word::npos; p = ws.find(wt, p + 1))
					out.push_back({AmbiguityKind::Inclusion, s, t, ws.subword(0, p), wt, ws.subword(p + wt.size())});
		}
	return out;
}

template <Field F>
struct AmbiguityVerdict {
	Ambiguity ambiguity{};
	bool resolvable = false;
	NcPoly<F> via_sigma;  // normal form of the route through f_sigma
	NcPoly<F> via_tau;    // normal form of the route through f_tau
	NcPoly<F> difference; // via_tau - via_sigma
	ReductionStats stats;
};

/// Reduces both one-step images of ABC to normal form and compares them.
/// Unequal normal forms are two distinct irreducible representatives of the
/// same word, so they witness non-confluence of the system itself.
template <Field F>
AmbiguityVerdict<F> resolve_ambiguity(const Ambiguity& amb, const ReductionSystem<F>& sys,
                                      std::size_t budget = kDefaultBudget)
{
	AmbiguityVerdict<F> v;
	v.ambiguity = amb;
	const auto& fs = sys.rules().at(amb.sigma).rhs;
	const auto& ft = sys.rules().at(amb.tau).rhs;
	NcPoly<F> route_sigma, route_tau;
	if (amb.kind == AmbiguityKind::Overlap) {
		route_sigma = fs.sandwich({}, amb.C);
		route_tau = ft.sandwich(amb.A, {});
	} else {
		route_sigma = fs;
		route_tau = ft.sandwich(amb.A, amb.C);
	}
	v.via_sigma = sys.normal_form(route_sigma, &v.stats, budget);
	v.via_tau = sys.normal_form(route_tau, &v.stats, budget);
	v.difference = v.via_tau - v.via_sigma;
	v.resolvable = v.difference.is_zero();
	return v;
}

template <Field F>
struct ConfluenceReport {
	std::vector<AmbiguityVerdict<F>> verdicts;
	ReductionStats stats;

	bool confluent() const
	{
		return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.resolvable; });
	}
	std::size_t overlaps() const { return count(AmbiguityKind::Overlap); }
	std::size_t inclusions() const { return count(AmbiguityKind::Inclusion); }

private:
	std::size_t count(AmbiguityKind k) const
	{
		return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(),
		                                              [k](const auto& v) { return v.ambiguity.kind == k; }));
	}
};

/// Resolves every ambiguity concurrently; verdicts keep enumeration order.
template <Field F>
ConfluenceReport<F> check_confluence(const ReductionSystem<F>& sys, std::size_t budget = kDefaultBudget)
{
	auto ambs = find_ambiguities(sys);
	ConfluenceReport<F> report;
	report.verdicts = parallel_map<AmbiguityVerdict<F>>(
	    ambs.size(), [&](std::size_t i) { return resolve_ambiguity(ambs[i], sys, budget); });
	for (const auto& v : report.verdicts)
		report.stats.merge(v.stats);
	return report;
}

} // namespace ncd
