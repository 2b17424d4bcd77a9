#pragma once

#include <array>
#include <string>

namespace actorkit {

/// The 16 field scalars selecting a linear combination of the 8 possible
/// bracketings of {x, f, g} that define the partial product on an actor
/// space. Stored as field-independent scalar literals; the bracketing order
/// of the indices is, for x*h with coefficients lambda_1..lambda_8:
///   (x*f)*g, (f*x)*g, g*(x*f), g*(f*x), (x*g)*f, (g*x)*f, f*(x*g), f*(g*x)
/// and the same order for h*x with mu_1..mu_8.
struct LambdaMuRules {
    std::array<std::string, 8> lambda;
    std::array<std::string, 8> mu;

    /// lambda_1 = mu_8 = 1, all other coefficients 0.
    static LambdaMuRules standard_associative() {
        return LambdaMuRules{{"1", "0", "0", "0", "0", "0", "0", "0"},
                             {"0", "0", "0", "0", "0", "0", "0", "1"}};
    }
};

}  // namespace actorkit
