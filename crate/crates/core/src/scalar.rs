// Copyright 2026 The qdense Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Scalar abstraction over the floating-point type backing amplitudes and rates.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the whole crate is generic over: `f32` or `f64`.
///
/// The associated tolerances scale with the precision of the type. All
/// tolerance values quoted elsewhere in the documentation are the `f64` ones;
/// `f32` uses correspondingly looser defaults.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum<Self> + Debug + Display + Send + Sync + 'static
{
    /// Tolerance for algebraic identities: norm preservation, unitarity,
    /// orthogonality of exactly-orthogonal states.
    fn algebraic_tol() -> Self;

    /// Default tolerance for deterministic readout: a single basis state must
    /// hold probability at least `1 - measure_tol()`.
    fn measure_tol() -> Self;

    /// Default tolerance for Gram-matrix orthonormality checks.
    fn gram_tol() -> Self;
}

impl Scalar for f64 {
    fn algebraic_tol() -> Self {
        1e-12
    }

    fn measure_tol() -> Self {
        1e-9
    }

    fn gram_tol() -> Self {
        1e-10
    }
}

impl Scalar for f32 {
    fn algebraic_tol() -> Self {
        1e-5
    }

    fn measure_tol() -> Self {
        1e-4
    }

    fn gram_tol() -> Self {
        1e-4
    }
}

/// Converts an `f64` literal into the scalar type.
pub(crate) fn lit<T: Scalar>(value: f64) -> T {
    T::from_f64(value).expect("f64 literal converts into every Scalar type")
}
