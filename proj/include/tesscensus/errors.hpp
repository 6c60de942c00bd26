#ifndef TESSCENSUS_ERRORS_HPP
#define TESSCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tesscensus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Stable machine-readable name, used by the CLI error records.
    virtual const char* kind() const noexcept { return "Error"; }
};

#define TESSCENSUS_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                         \
    public:                                                             \
        using Error::Error;                                             \
        const char* kind() const noexcept override { return #Name; }    \
    }

// Exact division left a remainder; a formula-derivation bug if raised internally.
TESSCENSUS_DEFINE_ERROR(NotDivisible);
TESSCENSUS_DEFINE_ERROR(ZeroDenominatorConstant);
TESSCENSUS_DEFINE_ERROR(BadDegree);
TESSCENSUS_DEFINE_ERROR(BadShape);
TESSCENSUS_DEFINE_ERROR(BadSymbol);
TESSCENSUS_DEFINE_ERROR(NoRootFound);

#undef TESSCENSUS_DEFINE_ERROR

class SphericalOutOfScope : public Error {
public:
    SphericalOutOfScope(int p, int q)
        : Error("{" + std::to_string(p) + "," + std::to_string(q) +
                "} is spherical (1/p + 1/q > 1/2); only Euclidean and hyperbolic "
                "tessellations are supported"),
          p_(p), q_(q) {}
    const char* kind() const noexcept override { return "SphericalOutOfScope"; }
    int p() const noexcept { return p_; }
    int q() const noexcept { return q_; }

private:
    int p_;
    int q_;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::size_t budget, int achieved_depth, int requested_depth)
        : Error("vertex budget " + std::to_string(budget) + " exhausted at saturated depth " +
                std::to_string(achieved_depth) + " (requested " +
                std::to_string(requested_depth) + ")"),
          achieved_depth_(achieved_depth) {}
    const char* kind() const noexcept override { return "BudgetExceeded"; }
    int achieved_depth() const noexcept { return achieved_depth_; }

private:
    int achieved_depth_;
};

}  // namespace tesscensus

#endif  // TESSCENSUS_ERRORS_HPP
