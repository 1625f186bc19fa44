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

//! Exact statevector simulation and rate analysis for multiqubit dense
//! coding.
//!
//! Two ways of generalizing two-qubit dense coding to n units are
//! implemented and compared:
//!
//! * **Pairwise** ([`Scheme::Pairwise`]): Alice and Bob share n Bell pairs.
//!   Encoding one of the 4 Paulis {I, X, Z, XZ} per pair yields 4^n
//!   distinguishable messages — log₂ 4^n = **2n bits** (linear in n, a point
//!   easily miscounted as 2^n bits; see [`rates::erroneous_rate`]).
//! * **MaxEntangled** ([`Scheme::MaxEntangled`]): they share one (n+1)-qubit
//!   GHZ state, of which Bob keeps one qubit. Its encoding reaches the
//!   2^(n+1) GHZ basis states — **n+1 bits**.
//!
//! Both schemes physically transmit n qubits. The crate provides:
//!
//! * [`statevector`] — a minimal exact simulator (dense amplitudes,
//!   little-endian qubit order, pure operations);
//! * [`protocols`] — preparation, encoding, decoding, and an exact ledger of
//!   the decoding gates;
//! * [`verification`] — brute-force capacity certification, by full Gram
//!   matrix or by exhaustive round-trip decoding;
//! * [`rates`] — the transmission-rate formulas implied by the gate ledger,
//!   per unit time and per sent particle, plus the labeled erroneous
//!   exponential rate for side-by-side comparison.
//!
//! Everything is generic over the floating-point scalar through the
//! [`Scalar`] trait (`f64` or `f32`); the `*64`/`*32` aliases at the crate
//! root pick a concrete precision.
//!
//! # Quickstart
//!
//! ```
//! use qdense::{
//!     capacity, decode, encode, prepare_initial_state, CapacityMethod, Message, Scheme,
//!     SchemeConfig, TimingModel64,
//! };
//!
//! # fn main() -> qdense::Result<()> {
//! // Send message 11 through two Bell pairs.
//! let config = SchemeConfig::new(Scheme::Pairwise, 2)?;
//! let initial = prepare_initial_state::<f64>(config);
//! let encoded = encode(config, &initial, Message::new(config, 11)?)?;
//! let (decoded, ledger) = decode(config, &encoded)?;
//! assert_eq!(decoded, 11);
//!
//! // The decode circuit ran 2 Hadamards and 2 CNOTs: 4 time units at unit
//! // gate times.
//! let timing = TimingModel64::new(1.0, 1.0)?;
//! assert_eq!(ledger.decoding_time(&timing), 4.0);
//!
//! // Certify by brute force that the scheme carries 4² messages = 4 bits.
//! let report = capacity::<f64>(config, CapacityMethod::Gram, 1e-10)?;
//! assert_eq!(report.message_count, 16);
//! assert_eq!(report.bits, 4.0);
//! # Ok(())
//! # }
//! ```

pub mod error;
pub mod protocols;
pub mod rates;
pub mod scalar;
pub mod statevector;
pub mod verification;

pub use error::{Error, Result};
pub use protocols::{
    decode, decode_with_tolerance, encode, prepare_initial_state, GateLedger, Message, Owner,
    Scheme, SchemeConfig,
};
pub use rates::{
    compare_schemes, erroneous_rate, erroneous_rate_max_n, rate_eq1, rate_eq2, CapacitySource,
    RateReport, SchemeRatePair, TimingModel,
};
pub use scalar::Scalar;
pub use statevector::{QubitIndex, SingleQubitGate, StateVector, MAX_QUBITS};
pub use verification::{
    capacity, encoded_states, gram_check, CapacityMethod, CapacityReport,
    MAX_ENTANGLED_GRAM_MAX_N, MAX_ENTANGLED_ROUND_TRIP_MAX_N, PAIRWISE_GRAM_MAX_N,
    PAIRWISE_ROUND_TRIP_MAX_N,
};

/// Double-precision state.
pub type StateVector64 = StateVector<f64>;
/// Single-precision state.
pub type StateVector32 = StateVector<f32>;
/// Double-precision gate times.
pub type TimingModel64 = TimingModel<f64>;
/// Single-precision gate times.
pub type TimingModel32 = TimingModel<f32>;
/// Double-precision rate figures.
pub type RateReport64 = RateReport<f64>;
/// Single-precision rate figures.
pub type RateReport32 = RateReport<f32>;
/// Double-precision capacity certificate.
pub type CapacityReport64 = CapacityReport<f64>;
/// Single-precision capacity certificate.
pub type CapacityReport32 = CapacityReport<f32>;
