// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qmarkov {

/// Row-stochastic transition matrix of an n-state chain: at(i, j) is the
/// probability of moving from state i to state j.
class TransitionMatrix {
public:
  explicit TransitionMatrix(std::size_t n_states);
  TransitionMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t n_states() const { return n_; }
  double at(std::size_t from, std::size_t to) const {
    return entries_[from * n_ + to];
  }
  double& at(std::size_t from, std::size_t to) { return entries_[from * n_ + to]; }

private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// Occupation probabilities over the state space at one time step.
struct DistributionVector {
  std::vector<double> probs;
};

struct RowCheck {
  bool ok = true;
  std::size_t row = 0;    // first violating row when !ok
  double row_sum = 0.0;
  std::string message;
};

/// Accepts iff every entry is in [0, 1] and every row sums to 1 within tol;
/// otherwise reports the first violating row.
RowCheck validate(const TransitionMatrix& tm, double tol = 1e-12);

/// One chain transition: out[j] = sum_i dist[i] * tm(i, j).
DistributionVector step(const DistributionVector& dist,
                        const TransitionMatrix& tm);

/// Joint probability over full length-L trajectories of an n-state chain,
/// indexed with the first variable as the most significant base-n digit --
/// for binary chains the path index coincides with the simulator's basis
/// index, and path_string(i) with its printed bit string.
class PathDistribution {
public:
  PathDistribution(std::size_t length, std::size_t n_states,
                   std::vector<double> probs);

  std::size_t length() const { return length_; }
  std::size_t n_states() const { return n_states_; }
  std::size_t size() const { return probs_.size(); }

  double at(std::size_t path_index) const;
  double at(std::string_view digits) const;
  std::string path_string(std::size_t path_index) const;
  const std::vector<double>& probs() const { return probs_; }

private:
  std::size_t length_;
  std::size_t n_states_;
  std::vector<double> probs_;
};

/// Exhaustive path enumeration: P(x_0 .. x_{L-1}) = initial[x_0] *
/// prod_i steps[i](x_{i-1}, x_i) with L = steps.size() + 1. O(n^L); meant
/// for exact desk-scale comparison, not sampling.
PathDistribution path_distribution(const DistributionVector& initial,
                                   const std::vector<TransitionMatrix>& steps);

}  // namespace qmarkov
