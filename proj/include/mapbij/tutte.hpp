#ifndef GUARD_MAPBIJ_TUTTE_HPP
#define GUARD_MAPBIJ_TUTTE_HPP

#include "map.hpp"
#include "polynomial.hpp"

namespace mapbij
{

using TuttePolynomial = BivariatePolynomial;

// Sum over spanning trees of x^internal_active * y^external_active.
TuttePolynomial tutte_polynomial(CombinatorialMap const &map);

// Sum over all subgraphs of (x-1)^(c(S)-1) (y-1)^(c(S)+|S|-|V|).
TuttePolynomial tutte_subgraph_oracle(CombinatorialMap const &map);

// Sum over forests F of (x-1)^(c(F)-1) y^external_active(delta(F)).
TuttePolynomial forest_expansion(CombinatorialMap const &map);

} // namespace mapbij

#endif // GUARD_MAPBIJ_TUTTE_HPP
