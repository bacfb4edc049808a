#pragma once

#include <string>
#include <vector>

#include "parqsym/checks.hpp"

namespace parqsym {

// Verification suites shared by the CLI `check` verb and the acceptance
// tests. Exhaustive up to total order min(max_order, 2); orders above 2
// are covered by deterministic random samples (seeded).

struct SuiteOptions {
    int max_order = 3;
    std::vector<Rational> q_values = {Rational(1), Rational(2), Rational(-3), Rational(1, 2)};
    int samples_per_order = 100;
    unsigned seed = 20240915;
};

std::vector<CheckReport> run_hopf_suite(const SuiteOptions& opt);
std::vector<CheckReport> run_duality_suite(const SuiteOptions& opt);
std::vector<CheckReport> run_bases_suite(const SuiteOptions& opt);
std::vector<CheckReport> run_subalgebras_suite(const SuiteOptions& opt);
std::vector<CheckReport> run_gradings_suite(const SuiteOptions& opt);
std::vector<CheckReport> run_filtrations_suite(const SuiteOptions& opt);

// All of the above, in order.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace parqsym
