#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "manyworlds/hilbert.hpp"

namespace manyworlds {

/// An ordered orthonormal basis of a finite-dimensional space.
/// Two worlds are identified when they agree per index up to a
/// unit-modulus phase; see worlds_equal.
class World {
public:
    /// Validates a candidate basis: equal dimensions, count == dim >= 2,
    /// Gram matrix equal to the identity within eps.
    static World validate(std::vector<Ket> basis, double eps = default_eps());

    static World standard(Index dim);

    Index dim() const { return static_cast<Index>(basis_.size()); }
    const Ket& vector(Index n) const;
    const std::vector<Ket>& basis() const { return basis_; }

    /// Unitary matrix whose n-th column is the n-th basis vector.
    Matrix basis_matrix() const;

private:
    explicit World(std::vector<Ket> basis) : basis_(std::move(basis)) {}
    std::vector<Ket> basis_;
};

World validate_world(std::vector<Ket> basis, double eps = default_eps());

/// Per-index identification up to phases: for every n there is a
/// unit-modulus alpha_n with ||e_n - alpha_n e'_n|| <= eps, where
/// alpha_n is the phase of inner(e'_n, e_n). Order-sensitive.
bool worlds_equal(const World& w, const World& w2, double eps = default_eps());

/// Order-insensitive variant. Plumbing only; the core semantics
/// identify worlds per index.
bool worlds_equal_up_to_permutation(const World& w, const World& w2,
                                    double eps = default_eps());

/// Self-adjoint generator A of the world evolution U_t = exp(i t A).
class EvolutionGenerator {
public:
    explicit EvolutionGenerator(HermitianOperator a) : a_(std::move(a)) {}
    const HermitianOperator& hamiltonian() const { return a_; }
    Index dim() const { return a_.dim(); }

private:
    HermitianOperator a_;
};

/// W_t = (U_t e_n) with U_t = exp(i t A). Negative t runs backward.
World evolve_world(const World& w, const EvolutionGenerator& gen, double t);

/// A world of a bipartite system together with its factor worlds.
/// combined holds e^A_n (x) e^B_k at index n * dimB + k.
struct ProductWorld {
    World world_a;
    World world_b;
    World combined;
};

ProductWorld product_world(const World& wa, const World& wb);

/// True iff every basis vector, reshaped to dimA x dimB, has Schmidt
/// rank 1 (second singular value <= tol).
bool is_product_world(const World& w, Index dim_a, Index dim_b,
                      double tol = 1e-8);

/// Deterministic pseudo-random orthonormal basis: seeded complex
/// Gaussian matrix orthonormalized by Gram-Schmidt with a
/// re-orthogonalization pass.
World random_world(Index dim, std::uint64_t seed);

/// Structured text round trip, lossless to 17 significant digits.
void save_world(const World& w, std::ostream& out);
World load_world(std::istream& in, double eps = default_eps());
void save_world_file(const World& w, const std::filesystem::path& path);
World load_world_file(const std::filesystem::path& path,
                      double eps = default_eps());

}  // namespace manyworlds
