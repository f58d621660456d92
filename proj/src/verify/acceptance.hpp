#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tinkit/graph.hpp"
#include "tinkit/patterns.hpp"

namespace tinkit::verify {

// Pinned tolerances and sizes.
inline constexpr double kCriterion1MaxSeconds = 300.0;
inline constexpr double kCriterion2MaxSeconds = 60.0;
inline constexpr double kCriterion4MaxSeconds = 600.0;
inline constexpr double kCriterion6ScalingMaxSeconds = 5.0;
inline constexpr double kCriterion8MaxSeconds = 300.0;
inline constexpr int kStarPathInClass = 500;
inline constexpr int kStarPathOutOfClass = 100;
inline constexpr int kLiftInstances = 200;
inline constexpr int kRandomCographs = 1000;
inline constexpr int kScalingCographOrder = 10000;
inline constexpr int kMwisInstances = 200;

struct AcceptanceOptions {
    std::uint64_t seed = 20240601;
    int jobs = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// A certificate together with the graph it was issued for.
struct IssuedCertificate {
    Graph host;
    Certificate cert;
    std::string origin;
};

class Acceptance {
public:
    explicit Acceptance(AcceptanceOptions options = {}) : options_(options) {}

    CriterionResult exact_values();        // 1
    CriterionResult sharpness_witness();   // 2
    CriterionResult starpath_bound();      // 3
    CriterionResult backbone_bound();      // 4
    CriterionResult lift_bound();          // 5
    CriterionResult cograph_equivalence(); // 6
    CriterionResult universal_inequalities(); // 7
    CriterionResult mwis_equivalence();    // 8
    /// Re-checks every certificate issued by criteria 3 and 4, so those
    /// must have run first.
    CriterionResult certificate_soundness();  // 9

    /// All nine in order; `report` sees each result as it completes.
    std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& report = {});

    const std::vector<IssuedCertificate>& issued() const noexcept { return issued_; }

private:
    AcceptanceOptions options_;
    std::vector<IssuedCertificate> issued_;
};

std::string format_line(const CriterionResult& r);

}  // namespace tinkit::verify
