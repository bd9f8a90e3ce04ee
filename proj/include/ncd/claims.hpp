#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncd/report.hpp"

namespace ncd {

enum class Verdict { Pass, Fail, ReportOnly };

std::string verdict_name(Verdict v);

struct Claim {
	std::string id;
	std::string title;
	std::string paper_location;
	Verdict verdict = Verdict::Fail;
	Json witness;
	double seconds = 0;
};

/// Sizes of the randomized suites. Defaults are the acceptance sizes.
struct SuiteConfig {
	std::uint64_t seed = 20261014;
	int diamond_systems = 100;
	int central_g = 200;
	int central_cubic = 50;
	int coalgebra_g = 20;
	int coalgebra_polys = 25;
	int small_degree_r = 20;
	int filtered_cubic = 50;
	int scaling_triples = 100;
	int degree2_pairs = 20;
	int census_length = 12;
	int oracle_length = 8;
	int tensor_degree = 6;
	std::size_t budget = kDefaultBudget;
};

inline constexpr int kCriteria = 11;

/// Claims checked under one acceptance criterion, sorted by id.
std::vector<Claim> run_criterion(int criterion, const SuiteConfig& config = {});
std::vector<Claim> run_all_claims(const SuiteConfig& config = {});

/// True when no claim other than a report-only one failed.
bool all_passed(const std::vector<Claim>& claims);

/// {tool, version, invocation, claims[{id, title, paper_location, verdict, witness}], overall}
Json report_document(const std::vector<Claim>& claims, const std::vector<std::string>& invocation);

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace ncd
