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

//! Exact dense statevector engine: basis states, single-qubit gates, CNOT,
//! inner products, and deterministic readout.
//!
//! Qubit ordering is little-endian throughout: qubit 0 is the least
//! significant bit of a basis index, so basis index 5 of a 3-qubit register
//! is the state |101⟩ with qubits 0 and 2 set.
//!
//! All operations are pure: inputs are never mutated and every operation
//! returns a fresh state, so distinct states may be used from different
//! threads freely.

mod gate;

use num_complex::Complex;

pub use gate::SingleQubitGate;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Index of a qubit within a register; must be below the register's qubit
/// count (checked by every operation that takes one).
pub type QubitIndex = usize;

/// Hard cap on register width so the dense amplitude array stays allocatable
/// (2^24 complex doubles = 256 MiB). The protocols here never need more than
/// ~20 qubits.
pub const MAX_QUBITS: usize = 24;

/// A pure state of `num_qubits` qubits, stored as a dense array of
/// 2^`num_qubits` complex amplitudes.
///
/// Constructors and gate applications keep the squared norm equal to 1 within
/// the scalar's algebraic tolerance (1e-12 for `f64`).
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Scalar> {
    num_qubits: usize,
    amplitudes: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// The computational basis state |basis_index⟩ of a `num_qubits`-qubit
    /// register: amplitude 1 at `basis_index`, 0 elsewhere.
    pub fn basis_state(num_qubits: usize, basis_index: usize) -> Result<Self> {
        if num_qubits < 1 {
            return Err(Error::InvalidQubitCount);
        }
        if num_qubits > MAX_QUBITS {
            return Err(Error::RegisterTooLarge { qubits: num_qubits, max: MAX_QUBITS });
        }
        let dim = 1usize << num_qubits;
        if basis_index >= dim {
            return Err(Error::BasisIndexOutOfRange { index: basis_index, qubits: num_qubits });
        }
        let mut amplitudes = vec![Complex::new(T::zero(), T::zero()); dim];
        amplitudes[basis_index] = Complex::new(T::one(), T::zero());
        Ok(StateVector { num_qubits, amplitudes })
    }

    /// Builds a state from an explicit amplitude list.
    ///
    /// The list length must be a power of two (at least 2, at most
    /// 2^[`MAX_QUBITS`]) and the squared norm must equal 1 within a loose
    /// tolerance (1e-9 for `f64`) that absorbs accumulation error in long
    /// hand-built lists.
    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidAmplitudeCount { len });
        }
        let num_qubits = len.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::RegisterTooLarge { qubits: num_qubits, max: MAX_QUBITS });
        }
        let state = StateVector { num_qubits, amplitudes };
        let norm_sqr = state.norm_sqr();
        if (norm_sqr - T::one()).abs() > T::measure_tol() {
            return Err(Error::NotNormalized {
                norm_sqr: norm_sqr.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(state)
    }

    /// Number of qubits in the register.
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Dimension of the state space, 2^`num_qubits`.
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// The amplitudes in basis order (little-endian indexing).
    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    /// Squared norm Σ |amplitude|².
    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(Complex::norm_sqr).sum()
    }

    fn check_qubit(&self, qubit: QubitIndex) -> Result<()> {
        if qubit >= self.num_qubits {
            Err(Error::QubitOutOfRange { qubit, qubits: self.num_qubits })
        } else {
            Ok(())
        }
    }

    /// Applies `gate` to the `target` qubit (identity on every other qubit)
    /// and returns the transformed state.
    pub fn apply_gate(&self, gate: SingleQubitGate, target: QubitIndex) -> Result<Self> {
        self.check_qubit(target)?;
        let m = gate.real_matrix::<T>();
        let mask = 1usize << target;
        let mut out = self.amplitudes.clone();
        for i0 in 0..self.dim() {
            if i0 & mask != 0 {
                continue;
            }
            let i1 = i0 | mask;
            let a0 = self.amplitudes[i0];
            let a1 = self.amplitudes[i1];
            out[i0] = a0 * m[0][0] + a1 * m[0][1];
            out[i1] = a0 * m[1][0] + a1 * m[1][1];
        }
        Ok(StateVector { num_qubits: self.num_qubits, amplitudes: out })
    }

    /// Applies a CNOT: basis amplitudes whose `control` bit is 1 have their
    /// `target` bit flipped; all others are unchanged.
    pub fn apply_cnot(&self, control: QubitIndex, target: QubitIndex) -> Result<Self> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(Error::ControlEqualsTarget { qubit: control });
        }
        let cmask = 1usize << control;
        let tmask = 1usize << target;
        let mut out = self.amplitudes.clone();
        for i in 0..self.dim() {
            if i & cmask != 0 && i & tmask == 0 {
                out.swap(i, i | tmask);
            }
        }
        Ok(StateVector { num_qubits: self.num_qubits, amplitudes: out })
    }

    /// Inner product ⟨self|other⟩ = Σ conj(self_i)·other_i.
    pub fn inner_product(&self, other: &Self) -> Result<Complex<T>> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .fold(Complex::new(T::zero(), T::zero()), |acc, x| acc + x))
    }

    /// Reads out a state that is a computational basis state within `tol`:
    /// returns the basis index holding probability at least `1 - tol`.
    ///
    /// This is only meaningful where the circuit guarantees a deterministic
    /// outcome (as dense-coding decoders do); anything else returns a
    /// non-deterministic-outcome error carrying the largest probability
    /// found, which signals a circuit bug rather than a user error.
    pub fn measure_all_deterministic(&self, tol: T) -> Result<usize> {
        if !(tol > T::zero() && tol < T::one()) || !tol.is_finite() {
            return Err(Error::InvalidTolerance);
        }
        let mut best_index = 0usize;
        let mut best_prob = T::zero();
        for (index, amp) in self.amplitudes.iter().enumerate() {
            let p = amp.norm_sqr();
            if p > best_prob {
                best_prob = p;
                best_index = index;
            }
        }
        if best_prob >= T::one() - tol {
            Ok(best_index)
        } else {
            Err(Error::NonDeterministicOutcome {
                max_probability: best_prob.to_f64().unwrap_or(f64::NAN),
            })
        }
    }
}
