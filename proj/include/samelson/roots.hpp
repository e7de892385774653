#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "samelson/root_datum.hpp"

namespace samelson {

/// Returns a rational basis of a maximal abelian subalgebra. With a hint,
/// verifies the hint is an independent abelian self-centralizing family and
/// returns it unchanged; otherwise searches by centralizing random elements
/// (deterministic in `seed`). Requires compact type.
std::vector<Element> find_maximal_torus(const LieAlgebra& g, std::uint64_t seed = 0,
                                        const std::vector<Element>* hint = nullptr);

/// Simultaneously diagonalizes the complexified ad action of the torus.
/// Eigen decomposition runs in floating point; every eigenvalue is snapped
/// to a Gaussian rational (denominator bound 10^6) and every root relation
/// ad_{H_i} E = alpha(H_i) E is re-verified exactly before the datum is
/// returned. Roots are stored one per (alpha, -alpha) pair in canonical
/// order; positivity is not chosen yet.
RootDatum root_space_decomposition(const LieAlgebra& g, std::vector<Element> torus,
                                   double tol = 1e-9);

/// Picks a regular element H0 (given, or a deterministic small integer
/// combination of the torus basis) and keeps the representative of each
/// root pair with Im alpha(H0) > 0.
RootDatum choose_positive_system(RootDatum datum, const std::optional<Element>& regular = {});

/// Rescales each root vector so its lowest-index nonzero coordinate is
/// exactly 1; the canonical representative of the one-dimensional root space.
RootDatum normalize_root_vectors(RootDatum datum);

/// Re-verifies the datum from scratch in exact arithmetic: eigen relations,
/// purely imaginary nonzero values, dimension count, and the zero eigenspace
/// matching the torus span.
VerificationItem verify_root_exactness(const RootDatum& datum);

}  // namespace samelson
