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

//! Error type shared by every operation in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while simulating, verifying, or computing
/// rates.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A register must hold at least one qubit.
    #[error("qubit count must be at least 1")]
    InvalidQubitCount,

    /// Registers are capped so a dense statevector stays allocatable.
    #[error("register of {qubits} qubits exceeds the supported maximum of {max}")]
    RegisterTooLarge {
        /// Requested register width.
        qubits: usize,
        /// Largest supported width.
        max: usize,
    },

    /// Basis index does not fit in the register.
    #[error("basis index {index} out of range for a {qubits}-qubit register")]
    BasisIndexOutOfRange {
        /// Offending index.
        index: usize,
        /// Register width.
        qubits: usize,
    },

    /// Qubit index does not address a qubit of the register.
    #[error("qubit {qubit} out of range for a {qubits}-qubit register")]
    QubitOutOfRange {
        /// Offending qubit.
        qubit: usize,
        /// Register width.
        qubits: usize,
    },

    /// A controlled gate needs two distinct qubits.
    #[error("control and target must differ (both are {qubit})")]
    ControlEqualsTarget {
        /// The shared index.
        qubit: usize,
    },

    /// Two states that should live in the same register do not.
    #[error("operands have different register sizes ({left} vs {right} qubits)")]
    DimensionMismatch {
        /// Qubits of the left operand.
        left: usize,
        /// Qubits of the right operand.
        right: usize,
    },

    /// Amplitude lists must have power-of-two length matching some register.
    #[error("amplitude list of length {len} is not a power-of-two register dimension")]
    InvalidAmplitudeCount {
        /// Offending length.
        len: usize,
    },

    /// A state expected to be normalized is not.
    #[error("state is not normalized (squared norm {norm_sqr})")]
    NotNormalized {
        /// Squared norm actually found, as `f64` for display.
        norm_sqr: f64,
    },

    /// Tolerances must be positive and finite.
    #[error("tolerance must be positive and finite")]
    InvalidTolerance,

    /// Deterministic readout was requested on a state that is not a basis
    /// state within tolerance.
    #[error(
        "state has no deterministic readout: largest basis-state probability is {max_probability}"
    )]
    NonDeterministicOutcome {
        /// Largest single-basis-state probability found, as `f64` for display.
        max_probability: f64,
    },

    /// Scheme sizes start at one pair / one receiver qubit.
    #[error("scheme order must be at least 1")]
    InvalidSchemeOrder,

    /// Message value exceeds what the scheme can carry.
    #[error("message {value} out of range: this configuration carries {capacity} messages")]
    MessageOutOfRange {
        /// Offending message value.
        value: u64,
        /// Number of distinct messages the configuration supports.
        capacity: u64,
    },

    /// A state handed to `decode` does not belong to the given configuration.
    #[error("state has {qubits} qubits but the configuration uses {expected}")]
    StateMismatch {
        /// Qubits of the state.
        qubits: usize,
        /// Qubits the configuration expects.
        expected: usize,
    },

    /// Gate times must be positive and finite.
    #[error("gate times must be positive and finite")]
    NonPositiveTiming,

    /// A brute-force verification or rate computation was asked to exceed its
    /// feasibility bound.
    #[error("{what} for the {scheme} scheme is limited to order {bound} (requested {n})")]
    CapacityLimit {
        /// Which computation hit its bound.
        what: &'static str,
        /// Scheme name.
        scheme: &'static str,
        /// Largest supported order.
        bound: usize,
        /// Requested order.
        n: usize,
    },

    /// Gram check needs at least one state.
    #[error("cannot check orthonormality of an empty state list")]
    EmptyStateList,

    /// A capacity certification failed: the encoded states are not mutually
    /// distinguishable, or a decode disagreed with the encoded message.
    #[error("capacity certification failed: {reason}")]
    CertificationFailed {
        /// Human-readable cause.
        reason: String,
    },

    /// Range sweeps need `n_min <= n_max`.
    #[error("empty range: n_min {n_min} exceeds n_max {n_max}")]
    EmptyRange {
        /// Lower bound.
        n_min: usize,
        /// Upper bound.
        n_max: usize,
    },
}
