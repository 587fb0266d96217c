#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dseidel/exact_linalg.hpp"
#include "dseidel/graph.hpp"

namespace dseidel {

enum class Family {
  Complete,                    // kn n
  CompleteMinusEdge,           // kn-e n
  CompleteBipartite,           // kab a b
  Star,                        // star n  (K_{1,n−1})
  Cycle,                       // cycle n
  Wheel,                       // wheel n (C_{n−1} ∨ K_1)
  CompleteSplit,               // split n p  (K_p ∨ empty(n−p))
  Friendship,                  // friendship n  (K_1 ∨ nK_2)
  BalancedMultipartite,        // balanced n q  (q parts of size n)
  CocktailParty,               // cocktail n  (n parts of size 2)
  CompleteMultipartite,        // multipartite n_1 ... n_q
  CompleteBipartiteMinusEdge,  // kab-e a b
};

struct FamilySpec {
  Family family = Family::Complete;
  std::vector<std::size_t> params;
};

/// Validates parameter count and range; throws InvalidParameters.
FamilySpec make_family(Family family, std::vector<std::size_t> params);
/// CLI names: kn, kn-e, kab, kab-e, star, cycle, wheel, split, friendship, multipartite, cocktail, balanced.
FamilySpec parse_family(std::string_view name, std::vector<std::size_t> params);
std::string family_name(Family family);
std::vector<Family> all_families();

std::size_t family_order(const FamilySpec& spec);
Graph build_family_graph(const FamilySpec& spec);

/// Eigenvalues from the analytic formulas, descending and grouped.
Spectrum closed_form_spectrum(const FamilySpec& spec, double grouping_tol = kDefaultGroupingTolerance);

/// {n−1−2k} ∪ {−1−2μ_j : j ≥ 1}, with μ_j = Σ_k min(k, n−k)·cos(2πjk/n) the circulant distance eigenvalues.
Spectrum cycle_spectrum(std::size_t n, double grouping_tol = kDefaultGroupingTolerance);

/// (x−3)^{n−q} (∏(x−3+2n_r) + Σ_r n_r ∏_{t≠r}(x−3+2n_t)).
ExactPoly charpoly_complete_multipartite(std::span<const std::size_t> parts);
/// The polynomial as usually printed, with 4n_r and a minus sign; it agrees with the
/// true characteristic polynomial only for two parts.
ExactPoly printed_charpoly_complete_multipartite(std::span<const std::size_t> parts);

/// Monic characteristic polynomial of D^S(K_{a,b} − e), a, b ≥ 2.
ExactPoly charpoly_kab_minus_edge(std::size_t a, std::size_t b);

/// {n−1−2k} ∪ {−1−2∂_r : r ≥ 2} from the numeric distance spectrum, or nullopt if
/// the graph is not transmission regular.
std::optional<Spectrum> transmission_regular_spectrum(const Graph& g,
                                                      double grouping_tol = kDefaultGroupingTolerance);

/// Σ |closed-form eigenvalue|.
double closed_form_energy(const FamilySpec& spec);
/// The energy formula in its usual closed form, for families that have one.
std::optional<double> printed_energy(const FamilySpec& spec);

}  // namespace dseidel
