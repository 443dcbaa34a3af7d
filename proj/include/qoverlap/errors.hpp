// Copyright 2026 The qoverlap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qoverlap {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    virtual const char *kind() const noexcept { return "error"; }
};

/// Shapes or dimensions that do not fit together, or a value that breaks a
/// type invariant.
class StructuralError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "structural"; }
};

/// An argument outside the domain where the operation is defined.
class DomainError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "domain"; }
};

class RangeError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "range"; }
};

/// The request is well formed but not supported (e.g. MUBs for d = 6).
class CapabilityError : public Error {
  public:
    using Error::Error;
    const char *kind() const noexcept override { return "capability"; }
};

/// The SDP solver could not certify the requested gap. Carries the best
/// primal (upper) and dual (lower) bounds on the minimum error sum.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &what, double best_primal, double best_dual)
        : Error(what), best_primal_(best_primal), best_dual_(best_dual) {}
    const char *kind() const noexcept override { return "convergence"; }
    double best_primal() const noexcept { return best_primal_; }
    double best_dual() const noexcept { return best_dual_; }

  private:
    double best_primal_;
    double best_dual_;
};

/// The S-witness ratio is undefined because the two mixtures are perfectly
/// distinguishable. Carries the computed S value.
class WitnessUndefined : public DomainError {
  public:
    WitnessUndefined(const std::string &what, double s) : DomainError(what), s_(s) {}
    const char *kind() const noexcept override { return "witness_undefined"; }
    double s() const noexcept { return s_; }

  private:
    double s_;
};

}  // namespace qoverlap
