#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eulab/matroid.hpp"
#include "eulab/multipoly.hpp"
#include "eulab/rational.hpp"

namespace eulab {

// divisor on the permutohedral variety of ground set {0,...,m-1} in the ray
// basis; keys are proper nonempty subsets as bitmasks, absent keys mean 0
struct Divisor {
    int m = 0;
    std::map<Subset, Rat> coeffs;

    bool zero() const { return coeffs.empty(); }
    void add(Subset s, const Rat& c);
};

Divisor divisor_L(int m, int i);
Divisor divisor_S(int m, int i);
Divisor divisor_M_factor(const Matroid& m_, int i);

// unique representative of the divisor class with vanishing coefficients on
// the singletons {0},...,{m-2}; class-equal divisors canonicalize identically
Divisor canonical_divisor(Divisor d);

std::string divisor_fingerprint(const Divisor& d);

// restriction to the boundary divisor of F: the first component lives on the
// permutohedral variety of F, the second on that of the complement
std::pair<Divisor, Divisor> restrict_divisor(const Divisor& d, Subset f);

using IntegrandFactor = std::variant<Divisor, Matroid>;

// recursive degree-map evaluation with a memo table; one instance per
// evaluation, reusable across integrals of the same ambient ground set
class Integrator {
public:
    Rat integral(int m, const std::vector<IntegrandFactor>& factors);

private:
    Rat run(int m, const std::optional<Matroid>& cls, std::vector<Divisor> divisors);

    std::map<std::string, Rat> memo_;
};

Rat integral(int m, const std::vector<IntegrandFactor>& factors);

// same number through the factored form of the matroid class, with no
// matroid carried through the recursion
Rat integral_pure_matroid(const Matroid& m_, const Composition& a);

}  // namespace eulab
