#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "eulab/errors.hpp"

namespace eulab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw invalid_parameters_error("factorial of negative argument");
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

// binomial with the combinatorial convention: 0 whenever k < 0 or k > n
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int out = 1;
    for (long i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

// multinomial(n; parts) with sum(parts) required to equal n
inline Int multinomial(int n, const std::vector<int>& parts) {
    Int out = factorial(n);
    int total = 0;
    for (int p : parts) {
        if (p < 0) return 0;
        total += p;
        out /= factorial(p);
    }
    if (total != n) throw invalid_parameters_error("multinomial parts do not sum to n");
    return out;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string numerator_string(const Rat& v) {
    return boost::multiprecision::numerator(v).str();
}

inline std::string denominator_string(const Rat& v) {
    return boost::multiprecision::denominator(v).str();
}

// exact conversion; throws when the rational is not an integer
inline Int rat_to_int(const Rat& v) {
    if (boost::multiprecision::denominator(v) != 1)
        throw internal_consistency_error("expected an integer, got " + numerator_string(v) + "/" +
                                         denominator_string(v));
    return boost::multiprecision::numerator(v);
}

}  // namespace eulab
