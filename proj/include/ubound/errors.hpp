// Copyright 2026 The ubound Authors
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

namespace ubound {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class NotHermitian : public Error {
   public:
    using Error::Error;
};

class NotNormalized : public Error {
   public:
    using Error::Error;
};

class NotOrthogonal : public Error {
   public:
    using Error::Error;
};

class ZeroVector : public Error {
   public:
    using Error::Error;
};

/// ⟨ψ|A|ψ⟩ came out with a non-negligible imaginary part.
class NonRealExpectation : public Error {
   public:
    using Error::Error;
};

/// A normalized deviation vector was requested for an eigenstate.
class ZeroVariance : public Error {
   public:
    using Error::Error;
};

/// A witness deficit fell below the clamping window.
class NegativeDeficit : public Error {
   public:
    using Error::Error;
};

/// Quadratic coefficient vanishes while the linear one does not.
class DegenerateInconsistent : public Error {
   public:
    using Error::Error;
};

class NullPhiVector : public Error {
   public:
    using Error::Error;
};

}  // namespace ubound
