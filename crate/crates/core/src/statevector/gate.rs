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

//! The fixed single-qubit gate set.

use std::fmt;

use num_complex::Complex;

use crate::scalar::{lit, Scalar};

/// A named single-qubit gate with a fixed 2×2 matrix.
///
/// The set is exactly what dense coding needs: the Hadamard used in
/// preparation and decoding, plus the encoding set {I, X, Z, XZ}.
///
/// `Y` denotes the product X·Z = [[0, −1], [1, 0]], which equals the Pauli-Y
/// matrix up to the global phase i. Global phase cannot affect orthogonality
/// or any measurement outcome, and this convention keeps every matrix in the
/// gate set real.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingleQubitGate {
    /// Hadamard: (1/√2)[[1, 1], [1, −1]].
    H,
    /// Pauli X (bit flip): [[0, 1], [1, 0]].
    X,
    /// The product X·Z: [[0, −1], [1, 0]] (Pauli Y up to global phase).
    Y,
    /// Pauli Z (phase flip): [[1, 0], [0, −1]].
    Z,
    /// Identity: [[1, 0], [0, 1]].
    I,
}

impl SingleQubitGate {
    /// The conventional short name of the gate.
    pub fn name(self) -> &'static str {
        match self {
            SingleQubitGate::H => "H",
            SingleQubitGate::X => "X",
            SingleQubitGate::Y => "Y",
            SingleQubitGate::Z => "Z",
            SingleQubitGate::I => "I",
        }
    }

    /// The gate's 2×2 matrix, row-major.
    ///
    /// Every matrix in this set happens to be real under the X·Z convention
    /// for `Y`, so all imaginary parts are zero.
    pub fn matrix<T: Scalar>(self) -> [[Complex<T>; 2]; 2] {
        let m = self.real_matrix::<T>();
        let c = |x: T| Complex::new(x, T::zero());
        [[c(m[0][0]), c(m[0][1])], [c(m[1][0]), c(m[1][1])]]
    }

    /// Row-major real matrix entries; the gate kernels use these directly so
    /// gate application costs one real-by-complex multiply per term.
    pub(crate) fn real_matrix<T: Scalar>(self) -> [[T; 2]; 2] {
        let one = T::one();
        let zero = T::zero();
        match self {
            SingleQubitGate::H => {
                let h = lit::<T>(std::f64::consts::FRAC_1_SQRT_2);
                [[h, h], [h, -h]]
            }
            SingleQubitGate::X => [[zero, one], [one, zero]],
            SingleQubitGate::Y => [[zero, -one], [one, zero]],
            SingleQubitGate::Z => [[one, zero], [zero, -one]],
            SingleQubitGate::I => [[one, zero], [zero, one]],
        }
    }
}

impl fmt::Display for SingleQubitGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GATES: [SingleQubitGate; 5] = [
        SingleQubitGate::H,
        SingleQubitGate::X,
        SingleQubitGate::Y,
        SingleQubitGate::Z,
        SingleQubitGate::I,
    ];

    fn matmul(a: [[f64; 2]; 2], b: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
        let mut out = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for (k, bk) in b.iter().enumerate() {
                    out[i][j] += a[i][k] * bk[j];
                }
            }
        }
        out
    }

    #[test]
    fn all_matrices_are_unitary() {
        for gate in GATES {
            let m = gate.real_matrix::<f64>();
            // Real matrices: the conjugate transpose is the plain transpose.
            let mt = [[m[0][0], m[1][0]], [m[0][1], m[1][1]]];
            let prod = matmul(mt, m);
            for i in 0..2 {
                for j in 0..2 {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (prod[i][j] - expect).abs() < 1e-12,
                        "{gate}: product entry ({i},{j}) = {}",
                        prod[i][j]
                    );
                }
            }
        }
    }

    #[test]
    fn y_is_the_product_x_times_z() {
        let x = SingleQubitGate::X.real_matrix::<f64>();
        let z = SingleQubitGate::Z.real_matrix::<f64>();
        assert_eq!(matmul(x, z), SingleQubitGate::Y.real_matrix::<f64>());
        assert_eq!(SingleQubitGate::Y.real_matrix::<f64>(), [[0.0, -1.0], [1.0, 0.0]]);
    }

    #[test]
    fn complex_matrix_matches_real_entries() {
        for gate in GATES {
            let real = gate.real_matrix::<f64>();
            let complex = gate.matrix::<f64>();
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(complex[i][j].re, real[i][j]);
                    assert_eq!(complex[i][j].im, 0.0);
                }
            }
        }
    }

    #[test]
    fn names_render() {
        let names: Vec<&str> = GATES.iter().map(|g| g.name()).collect();
        assert_eq!(names, ["H", "X", "Y", "Z", "I"]);
        assert_eq!(SingleQubitGate::H.to_string(), "H");
    }
}
