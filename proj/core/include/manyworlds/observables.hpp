#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "manyworlds/worlds.hpp"

namespace manyworlds {

/// An observable relative to a world: the world plus one real
/// eigenvalue per basis vector. There is deliberately no constructor
/// from a bare matrix; an observable has no meaning without a world.
class DiagonalObservable {
public:
    DiagonalObservable(World world, std::vector<double> eigenvalues);

    const World& world() const { return world_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    Index dim() const { return world_.dim(); }

private:
    World world_;
    std::vector<double> eigenvalues_;
};

/// Sum of lambda_n |e_n><e_n| over the observable's world.
HermitianOperator materialize(const DiagonalObservable& obs);

/// If every off-diagonal element <e_j|M|e_k> has magnitude <= tol,
/// returns the diagonal <e_n|M|e_n> as the eigenvalue list; otherwise
/// nullopt.
std::optional<std::vector<double>> is_diagonal_in(const HermitianOperator& m,
                                                  const World& w,
                                                  double tol = 1e-8);

/// Product observable on a product world, eigenvalues
/// lambda^A_n * lambda^B_k at index n * dimB + k.
DiagonalObservable tensor_observable(const DiagonalObservable& oa,
                                     const DiagonalObservable& ob,
                                     const ProductWorld& pw);

/// Serializes as a world-file reference plus the eigenvalue list.
void save_observable(const DiagonalObservable& obs, std::ostream& out,
                     const std::string& world_ref);
/// Loads an observable; the embedded world reference is resolved
/// relative to base_dir.
DiagonalObservable load_observable(std::istream& in,
                                   const std::filesystem::path& base_dir,
                                   double eps = default_eps());
DiagonalObservable load_observable_file(const std::filesystem::path& path,
                                        double eps = default_eps());

}  // namespace manyworlds
