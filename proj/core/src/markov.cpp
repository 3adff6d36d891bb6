// SPDX-License-Identifier: Apache-2.0
#include "qmarkov/markov.hpp"

#include <cmath>
#include <stdexcept>

namespace qmarkov {

TransitionMatrix::TransitionMatrix(std::size_t n_states)
    : n_(n_states), entries_(n_states * n_states, 0.0) {
  if (n_states == 0) {
    throw std::invalid_argument("TransitionMatrix needs at least one state");
  }
}

TransitionMatrix::TransitionMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : TransitionMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw std::invalid_argument("TransitionMatrix rows must be square");
    }
    std::size_t c = 0;
    for (double v : row) entries_[r * n_ + c++] = v;
    ++r;
  }
}

RowCheck validate(const TransitionMatrix& tm, double tol) {
  for (std::size_t r = 0; r < tm.n_states(); ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < tm.n_states(); ++c) {
      const double p = tm.at(r, c);
      if (p < -tol || p > 1.0 + tol) {
        return {false, r, p,
                "row " + std::to_string(r) + " has entry " + std::to_string(p) +
                    " outside [0, 1]"};
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      return {false, r, sum,
              "row " + std::to_string(r) + " sums to " + std::to_string(sum)};
    }
  }
  return {};
}

DistributionVector step(const DistributionVector& dist,
                        const TransitionMatrix& tm) {
  const std::size_t n = tm.n_states();
  if (dist.probs.size() != n) {
    throw std::invalid_argument("step: distribution/matrix dimension mismatch");
  }
  DistributionVector out;
  out.probs.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double pi = dist.probs[i];
    if (pi == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) out.probs[j] += pi * tm.at(i, j);
  }
  return out;
}

PathDistribution::PathDistribution(std::size_t length, std::size_t n_states,
                                   std::vector<double> probs)
    : length_(length), n_states_(n_states), probs_(std::move(probs)) {
  if (length == 0 || n_states < 2) {
    throw std::invalid_argument("PathDistribution needs length >= 1 and n >= 2");
  }
  std::size_t expected = 1;
  for (std::size_t i = 0; i < length; ++i) expected *= n_states;
  if (probs_.size() != expected) {
    throw std::invalid_argument("PathDistribution size must be n_states^length");
  }
}

double PathDistribution::at(std::size_t path_index) const {
  if (path_index >= probs_.size()) {
    throw std::out_of_range("path index out of range");
  }
  return probs_[path_index];
}

double PathDistribution::at(std::string_view digits) const {
  if (digits.size() != length_) {
    throw std::invalid_argument("path string length mismatch");
  }
  std::size_t index = 0;
  for (char d : digits) {
    if (d < '0' || d >= static_cast<char>('0' + n_states_)) {
      throw std::invalid_argument("path string digit out of range");
    }
    index = index * n_states_ + static_cast<std::size_t>(d - '0');
  }
  return probs_[index];
}

std::string PathDistribution::path_string(std::size_t path_index) const {
  if (path_index >= probs_.size()) {
    throw std::out_of_range("path index out of range");
  }
  std::string s(length_, '0');
  for (std::size_t pos = length_; pos-- > 0;) {
    s[pos] = static_cast<char>('0' + path_index % n_states_);
    path_index /= n_states_;
  }
  return s;
}

PathDistribution path_distribution(const DistributionVector& initial,
                                   const std::vector<TransitionMatrix>& steps) {
  const std::size_t n = initial.probs.size();
  if (n < 2) {
    throw std::invalid_argument("path_distribution needs at least two states");
  }
  for (const TransitionMatrix& tm : steps) {
    if (tm.n_states() != n) {
      throw std::invalid_argument(
          "path_distribution: matrix dimension mismatch");
    }
  }
  const std::size_t length = steps.size() + 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= n;

  std::vector<double> probs(total, 0.0);
  for (std::size_t path = 0; path < total; ++path) {
    // Decode base-n digits, first variable in the most significant slot.
    std::size_t rem = path;
    std::size_t divisor = total / n;
    std::size_t prev = rem / divisor;
    rem %= divisor;
    double p = initial.probs[prev];
    for (const TransitionMatrix& tm : steps) {
      if (p == 0.0) break;
      divisor /= n;
      const std::size_t next = rem / divisor;
      rem %= divisor;
      p *= tm.at(prev, next);
      prev = next;
    }
    probs[path] = p;
  }
  return PathDistribution(length, n, std::move(probs));
}

}  // namespace qmarkov
