#pragma once
// Self-checks behind `ctk check`: oracle equivalence, adjoint identities, Krylov
// relations and solver exactness at tiny sizes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ctk/tensor3.hpp"

namespace ctk {

enum class CheckLevel { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Failure is the documented outcome; it does not fail the suite.
    bool expected_failure = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string detail;
};

/// Replaceable pieces, so a test can run the suite against a deliberately broken primitive.
struct CheckHooks {
    std::function<Tensor3(const Tensor3&)> transpose;
};

CheckHooks default_check_hooks();

std::vector<CheckResult> run_checks(CheckLevel level, const CheckHooks& hooks = default_check_hooks());

/// True when every result passed or is an expected failure.
bool all_passed(const std::vector<CheckResult>& results);

/// n x n x p tensor whose transform-domain slices are I + (0.3 / sqrt(n)) G with G standard
/// normal; singular values of every slice stay near 1.
Tensor3 random_well_conditioned(std::size_t n, std::size_t p, std::uint64_t seed);

}  // namespace ctk
