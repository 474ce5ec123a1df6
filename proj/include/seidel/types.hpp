#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace seidel {

using BigInt = boost::multiprecision::cpp_int;
using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

// Error hierarchy. The CLI maps InputError to exit code 2 and BudgetExceeded to 3.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input or a value that violates a type invariant.
class InputError : public Error
{
public:
    using Error::Error;
};

/// An operation's hypotheses do not hold for the given arguments.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// The operation is well defined but has nothing to say about this input
/// (e.g. an irrational eigenvalue where an integer one is required).
class NotApplicable : public Error
{
public:
    using Error::Error;
};

class BudgetExceeded : public Error
{
public:
    using Error::Error;
};

/// Exact floor division for signed integers.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Non-negative residue.
inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace seidel
