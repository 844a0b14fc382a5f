#include "problems_data.hpp"
namespace mlpr::detail {
namespace {
constexpr RawProblem kProblems[] = {
    {"R3_1", 3,
     "3x3x3 binary tensor from an exhaustive search for fixed-point and shifted-iteration failures, column-normalized at load",
     "1 1 1 1 0 0 0 0 0\n"
     "1 1 1 1 0 1 1 0 1\n"
     "1 1 1 1 1 1 0 1 0\n"},
    {"R3_2", 3,
     "3x3x3 binary tensor from an exhaustive search for fixed-point and shifted-iteration failures, column-normalized at load",
     "0 0 0 1 0 1 1 1 0\n"
     "0 0 0 0 1 1 0 0 0\n"
     "1 1 1 0 1 0 1 0 1\n"},
    {"R3_3", 3,
     "3x3x3 binary tensor from an exhaustive search for fixed-point and shifted-iteration failures, column-normalized at load",
     "0 1 0 1 0 1 1 1 0\n"
     "0 0 0 0 1 0 0 1 0\n"
     "1 1 1 1 1 0 1 0 1\n"},
    {"R3_4", 3,
     "3x3x3 binary tensor from an exhaustive search for fixed-point and shifted-iteration failures, column-normalized at load",
     "0 0 1 1 0 0 1 1 1\n"
     "0 0 1 1 0 0 0 0 1\n"
     "1 1 1 1 1 1 1 1 0\n"},
    {"R3_5", 3,
     "3x3x3 binary tensor from an exhaustive search for fixed-point and shifted-iteration failures, column-normalized at load",
     "0 0 0 0 0 0 1 0 1\n"
     "0 0 0 0 1 1 0 1 0\n"
     "1 1 1 1 0 0 0 0 0\n"},
    {"R4_1", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1\n"
     "0 0 0 0 0 1 0 1 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 0 0 0 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 1 1 0 1 0\n"},
    {"R4_2", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0\n"
     "0 0 0 0 1 1 1 0 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 0 0 1 0 1 1 0 0 1 0\n"
     "1 1 1 1 0 0 0 1 0 0 0 0 1 0 0 1\n"},
    {"R4_3", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 1\n"
     "0 0 0 0 1 1 1 0 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 1 1 0 0 1 0\n"
     "1 1 1 1 0 0 0 1 1 0 0 0 0 1 0 0\n"},
    {"R4_4", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1\n"
     "0 0 0 0 0 1 0 1 0 0 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 0 0 1 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 1 1 0 0 0\n"},
    {"R4_5", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 1\n"
     "0 0 0 0 0 1 0 1 0 0 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 0 0 0 0\n"
     "1 1 1 1 1 0 0 0 0 0 0 1 0 0 1 1\n"},
    {"R4_6", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 1 1 0 0 0\n"
     "0 0 0 0 0 1 0 1 0 0 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 0 0 1 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 0 0 0 1 1\n"},
    {"R4_7", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 1\n"
     "0 0 0 0 0 1 0 1 0 1 0 0 1 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 0 0 0 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 1 0 0 1 0\n"},
    {"R4_8", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0\n"
     "0 0 0 0 0 1 0 1 0 0 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 0 0 0 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 0 1 0 0 1\n"},
    {"R4_9", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 0\n"
     "0 0 0 0 0 1 0 1 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 0 0 0 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 0 0 0 0 1\n"},
    {"R4_10", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 1\n"
     "0 0 0 0 0 1 1 0 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 1 1 0 1 1 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 0 0 0 0 0\n"},
    {"R4_11", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1\n"
     "0 0 0 0 0 1 0 1 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 1 0 0 0 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 0 1 1 1 1\n"},
    {"R4_12", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 1\n"
     "0 0 0 0 0 1 1 0 0 1 0 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 1 1 0 0 1 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 1 1 1 0 1\n"},
    {"R4_13", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1\n"
     "0 0 0 0 0 1 0 1 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 1 1 1 0 0 0 0 0\n"
     "1 1 1 1 1 0 0 0 0 0 0 1 1 0 1 0\n"},
    {"R4_14", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0\n"
     "0 0 0 0 1 1 1 0 0 1 0 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 1 1 0 0 1 0\n"
     "1 1 1 1 0 0 0 1 0 0 0 0 1 0 1 1\n"},
    {"R4_15", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0\n"
     "0 0 0 0 0 1 0 1 0 0 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 1 0 1 1 1 0 0 0 1 0\n"
     "1 1 1 1 1 0 0 0 0 0 0 1 1 0 0 1\n"},
    {"R4_16", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1\n"
     "0 0 0 0 0 1 1 0 0 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 0 0 0 1 1 1 1 0 1 0\n"
     "1 1 1 1 1 0 0 1 1 0 0 0 0 1 0 0\n"},
    {"R4_17", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 1 0 0 0 0 0 0 0 0 1 0 1\n"
     "0 0 0 0 0 1 1 0 0 1 0 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 0 0 1 1 1 0 1 1 0\n"
     "1 1 1 1 0 0 0 1 1 0 0 0 1 1 1 0\n"},
    {"R4_18", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 1 0 0 0 0 0 0 0 1 1 0 1\n"
     "0 0 0 0 0 1 1 0 0 1 0 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 1 1 0 0 1 0\n"
     "1 1 1 1 0 0 0 1 1 1 0 0 0 0 0 0\n"},
    {"R4_19", 4,
     "4x4x4 binary tensor from a randomized search for slow or erratic convergence, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1\n"
     "0 0 0 0 0 1 0 1 1 0 0 0 1 1 0 0\n"
     "0 0 0 0 0 0 1 0 0 1 1 0 1 0 0 0\n"
     "1 1 1 1 1 0 0 0 1 0 0 1 1 0 1 0\n"},
    {"R6_1", 6,
     "6x6x6 tensor from a randomized adversarial construction favoring strong directionality, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 0 1 0 1 0 0 0 0 1 1 0 0 0 1 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 0 0 0 1 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 1 0 0 0 0 1 0 0 0 0 0 0 1 0 0 0\n"
     "0 0 0 0 0 0 0 1 1 0 1 0 1 0 0 0 0 0 0 1 0 1 0 1 0 1 0 0 0 0 0 0 0 1 1 0\n"
     "0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0 1 0 0 1 0 0 0 0\n"
     "1 1 1 1 1 1 1 0 0 1 0 1 0 0 0 1 0 1 0 1 0 0 0 0 0 1 0 1 0 0 0 1 0 0 0 1\n"},
    {"R6_2", 6,
     "6x6x6 tensor from a randomized adversarial construction favoring strong directionality, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1 1 0 0 0 1 0 1 0 0 0 1\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 1 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 1 0\n"
     "0 0 0 0 0 0 1 0 0 0 0 0 1 0 0 0 0 0 0 0 0 1 0 1 0 0 0 1 0 0 0 1 0 1 1 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0 0 0 1 1 0 0 0 0 0 0 0\n"
     "1 1 1 1 1 1 0 1 1 1 1 0 0 1 1 0 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0\n"},
    {"R6_3", 6,
     "6x6x6 tensor from a randomized adversarial construction favoring strong directionality, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 1 1 0 0 0 0 0 0 0 1 0 1 0 0 1 1 0 0 0 0 0 0 0 0 1\n"
     "0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 1 1 0 0 1 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 1 0 1 0 0\n"
     "0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0 0 0 1 0 1 0\n"
     "1 1 1 1 1 1 1 0 0 1 1 0 1 0 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0\n"},
    {"R6_4", 6,
     "6x6x6 tensor from a randomized adversarial construction favoring strong directionality, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 1 0 0 0 0 0 1 1 1 0 0 0 0 1 1 0 1 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 0 0 0 1 0 0 0 1 0 0 0 0 1 1 0 1 0 1 0\n"
     "0 0 0 0 0 0 0 0 1 0 1 0 1 0 0 0 1 0 1 0 1 1 1 1 0 0 0 1 1 1 0 0 0 1 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 1 0\n"
     "1 1 1 1 1 1 1 1 0 1 0 1 0 1 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 1\n"},
    {"R6_5", 6,
     "6x6x6 tensor from a randomized adversarial construction favoring strong directionality, column-normalized at load",
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0\n"
     "0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 1 0 0 0 0 1 1 0 1 0 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 1 0 0 0 0 0 0 1 1 0 0 0 0 0 0 1 0 0 0\n"
     "0 0 0 0 0 0 0 1 1 1 0 0 0 0 0 0 1 0 0 1 1 0 1 0 1 0 0 1 0 0 0 1 0 1 1 0\n"
     "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 1 0 0 1 1 1 0 0 0 0 0\n"
     "1 1 1 1 1 1 1 0 0 0 1 1 0 1 0 1 0 0 1 1 1 1 0 1 0 0 1 0 1 0 0 0 0 0 0 1\n"},
};
}  // namespace

std::span<const RawProblem> appendix_problems() { return kProblems; }

}  // namespace mlpr::detail
