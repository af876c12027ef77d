// Copyright 2026 coherence-lab developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Classical and quantum Tsallis alpha-divergences with explicit
 * support-condition handling. The relative entropy is the alpha -> 1 limit
 * and is dispatched whenever alpha falls inside kAlphaOneWindow of 1.
 */

#pragma once

#include <vector>

#include "cohlab/core.hpp"
#include "cohlab/hermitian.hpp"

namespace cohlab {

/// Nonnegative entries summing to 1 within kTraceTol.
class ProbabilityVector {
  public:
    explicit ProbabilityVector(std::vector<double> entries);

    const std::vector<double>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

  private:
    std::vector<double> entries_;
};

/// A divergence evaluation. Infinity is a typed sentinel, never a float
/// overflow: support violations are semantic, not numeric. The warning flag
/// marks borderline rank decisions (eigenvalues within a decade of the
/// support threshold).
struct DivergenceValue {
    double value = 0.0;
    bool infinite = false;
    bool support_warning = false;

    static DivergenceValue infinity(bool warn = false) { return {0.0, true, warn}; }
    static DivergenceValue finite(double v, bool warn = false) { return {v, false, warn}; }
};

/// Tsallis relative alpha-entropy of probability vectors; the alpha = 1
/// branch is the standard relative entropy. Terms with p_j = 0 contribute 0.
/// Infinite when some p_j > 0 meets q_j = 0 and alpha >= 1.
DivergenceValue classical_divergence(const ProbabilityVector& p, const ProbabilityVector& q,
                                     double alpha);

/// Same formula on raw nonnegative vectors (no normalization requirement);
/// used internally where sub-normalized weight vectors appear.
DivergenceValue tsallis_divergence_raw(const std::vector<double>& p,
                                       const std::vector<double>& q, double alpha);

/// Quantum Tsallis alpha-divergence of PSD operators,
/// (tr(A^alpha B^(1-alpha)) - tr A) / (alpha - 1), with the trace taken over
/// the range of B. For alpha >= 1 the support condition ran(A) <= ran(B) is
/// required, otherwise the result is the infinite sentinel; for
/// alpha in (0, 1) the expression is used without such conditions.
DivergenceValue quantum_divergence(const HermitianOperator& a, const HermitianOperator& b,
                                   double alpha);

/// von Neumann entropy -tr(rho ln rho) of a PSD operator (0 ln 0 := 0).
double von_neumann_entropy(const HermitianOperator& a);

/// Shannon entropy of a nonnegative vector (0 ln 0 := 0).
double shannon_entropy(const std::vector<double>& p);

}  // namespace cohlab
