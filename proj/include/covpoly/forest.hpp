#pragma once

#include <map>

#include "covpoly/engine.hpp"
#include "covpoly/graph.hpp"
#include "covpoly/poly.hpp"

namespace covpoly {

/// Variable names of the forest polynomial xi-hat: exponent slots (x, a, b).
inline const std::array<std::string, 3> kXAB = {"x", "a", "b"};

/// Forest polynomial from the pendant-edge recursion
/// xi_hat(F) = a xi_hat(F/e) + b xi_hat(F extract e), xi_hat(K1) = x.
TriPoly xi_hat(const Multigraph& forest);

/// Verifies the four substitution identities tying xi_hat to the edge
/// elimination polynomial and to C; throws IdentityViolationError on mismatch.
void check_xi_hat_identities(const Multigraph& forest, CcpEngine& engine);

/// Full degree multiset of a forest, extracted from its polynomials:
/// degree 0 from the isolated-vertex invariant, degree 1 from the C
/// coefficient read, degrees >= 2 from xi_hat(F,x,1,b).
std::map<int, mpz_class> forest_degree_sequence(const Multigraph& forest, CcpEngine& engine);

/// Reconstructs xi(F,x,y,z) from the bivariate chromatic polynomial of a
/// forest; the missing y-degree of each term is n - i - 2k.
TriPoly xi_from_bivariate_chromatic(const BiPoly& p);

}  // namespace covpoly
