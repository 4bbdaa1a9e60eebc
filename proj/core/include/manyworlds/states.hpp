#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "manyworlds/observables.hpp"

namespace manyworlds {

/// A state on the diagonal algebra of a world: one probability weight
/// per basis vector. Pure states are point masses.
class DiagonalState {
public:
    DiagonalState(World world, Eigen::VectorXd weights,
                  double eps = default_eps());

    const World& world() const { return world_; }
    const Eigen::VectorXd& weights() const { return weights_; }
    Index dim() const { return world_.dim(); }

    bool is_pure(double eps = default_eps()) const;
    /// Index of the unit weight when pure, nullopt otherwise.
    std::optional<Index> pure_index(double eps = default_eps()) const;

private:
    World world_;
    Eigen::VectorXd weights_;
};

/// Point mass at basis vector n.
DiagonalState vector_state(const World& w, Index n);

/// Definite value sum p_n lambda_n; requires the state and the
/// observable to share a world.
double expectation_same_world(const DiagonalState& s,
                              const DiagonalObservable& obs);

/// T_{nk} = |<e_n|e'_k>|^2 between two worlds of equal dimension.
/// Rows and columns each sum to 1 (unistochastic, hence doubly
/// stochastic).
class TransitionMatrix {
public:
    explicit TransitionMatrix(Eigen::MatrixXd rows,
                              double eps = default_eps());
    const Eigen::MatrixXd& rows() const { return rows_; }
    Index dim() const { return rows_.rows(); }

private:
    Eigen::MatrixXd rows_;
};

TransitionMatrix transition_matrix(const World& w, const World& w2);

/// Expectation of an observable in another world:
/// sum_n p_n sum_k T_{nk} lambda_k. Reduces to expectation_same_world
/// when the worlds coincide.
double born_expectation(const DiagonalState& s, const DiagonalObservable& obs);

/// Outcome probabilities q = p^T T over the target world's basis.
Eigen::VectorXd outcome_distribution(const DiagonalState& s, const World& w2);

/// Information update on a world switch. This is the only
/// state-change operation; there is no projection or renormalization.
DiagonalState markov_update(const DiagonalState& s, const World& w2);

void save_state(const DiagonalState& s, std::ostream& out,
                const std::string& world_ref);
DiagonalState load_state(std::istream& in,
                         const std::filesystem::path& base_dir,
                         double eps = default_eps());
DiagonalState load_state_file(const std::filesystem::path& path,
                              double eps = default_eps());

}  // namespace manyworlds
