#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qeuler {

// Coefficients and cardinalities are exact, arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

// Hard cap on the number of elements an enumeration may visit.
inline constexpr long long kDefaultBudget = 10'000'000;

// Thrown before an enumeration starts when the class is too large.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(Int cardinality, long long budget)
        : std::runtime_error("enumeration of " + cardinality.str() +
                             " elements exceeds budget " + std::to_string(budget)),
          cardinality_(std::move(cardinality)) {}

    const Int& cardinality() const { return cardinality_; }

private:
    Int cardinality_;
};

// Malformed textual input (permutations, words, polynomials).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Strict base-10 integer: optional sign then digits.  Leading zeros are
// stripped before handing to the bignum (whose string constructor would
// read them as a base prefix).
Int parse_int_decimal(const std::string& text);

}  // namespace qeuler
