/*
 * Copyright 2026 The tfc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace tfc {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiplicative inverse requested for zero (or, in approximate fields,
/// for an element whose magnitude is below the singularity tolerance).
class ZeroInverseError : public Error {
public:
    using Error::Error;
};

/// Operands have incompatible shapes.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// A square matrix was required.
class NonSquareError : public Error {
public:
    using Error::Error;
};

/// Elimination found no admissible pivot: the support matrix is singular,
/// i.e. the chosen support functions cannot resolve the constraints.
class SingularSupportError : public Error {
public:
    using Error::Error;
};

/// Constraint and support function counts disagree.
class CountMismatchError : public Error {
public:
    using Error::Error;
};

/// Input value outside the documented domain.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// Example id not recognized by the verification front end.
class UnknownExampleError : public Error {
public:
    using Error::Error;
};

}  // namespace tfc
