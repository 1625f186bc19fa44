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

//! Brute-force capacity verification.
//!
//! The claim under test: a Pairwise configuration of order n carries
//! exactly 4^n distinguishable messages (2n bits), and a MaxEntangled
//! configuration carries 2^(n+1) (n+1 bits). Notably the Pairwise bit count
//! is 2n, *not* 2^n — the counts grow linearly, never exponentially.
//!
//! Two independent certification methods are provided:
//!
//! * **Gram** — encode every message and check that the full Gram matrix of
//!   the encoded states is the identity within tolerance. Mutually
//!   orthogonal states are perfectly distinguishable in a single shot, so
//!   orthonormality of all 4^n (or 2^(n+1)) states certifies the capacity.
//! * **RoundTrip** — encode every message, run the decoder, and demand
//!   `decode(encode(m)) == m` with deterministic readout.
//!
//! Both methods enumerate the entire message space, so each is feasibility-
//! bounded in n (see the `*_MAX_N` constants); wherever both are feasible
//! they must agree.

use crate::error::{Error, Result};
use crate::protocols::{decode_with_tolerance, encode, prepare_initial_state, Message, Scheme, SchemeConfig};
use crate::scalar::{lit, Scalar};
use crate::statevector::StateVector;

/// Largest Pairwise order for the Gram method: 4^4 = 256 states of
/// dimension 256 keep the matrix at ~33k inner products.
pub const PAIRWISE_GRAM_MAX_N: usize = 4;

/// Largest MaxEntangled order for the Gram method: 2^13 = 8192 states of
/// dimension 8192 keep the matrix at ~3×10⁷ inner products.
pub const MAX_ENTANGLED_GRAM_MAX_N: usize = 12;

/// Largest Pairwise order for the RoundTrip method: 4^6 = 4096 full
/// encode/decode cycles on a 12-qubit register.
pub const PAIRWISE_ROUND_TRIP_MAX_N: usize = 6;

/// Largest MaxEntangled order for the RoundTrip method: 2^11 = 2048 cycles
/// on an 11-qubit register.
pub const MAX_ENTANGLED_ROUND_TRIP_MAX_N: usize = 10;

/// How a capacity claim is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacityMethod {
    /// Full pairwise-overlap (Gram matrix) orthonormality check.
    Gram,
    /// Exhaustive encode-then-decode over the whole message space.
    RoundTrip,
}

impl CapacityMethod {
    /// Lowercase name used by the command line: `"gram"` or `"roundtrip"`.
    pub fn name(self) -> &'static str {
        match self {
            CapacityMethod::Gram => "gram",
            CapacityMethod::RoundTrip => "roundtrip",
        }
    }
}

impl std::fmt::Display for CapacityMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a certified capacity computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityReport<T: Scalar> {
    /// Scheme that was verified.
    pub scheme: Scheme,
    /// Order of the configuration.
    pub n: usize,
    /// Number of distinguishable messages: 4^n or 2^(n+1).
    pub message_count: u64,
    /// log₂ of `message_count`: exactly 2n or n+1.
    pub bits: T,
    /// Certification method used.
    pub method: CapacityMethod,
    /// Largest off-diagonal overlap |⟨ψᵢ|ψⱼ⟩|, i≠j (Gram method only).
    pub max_off_diagonal: Option<T>,
}

/// Checks whether `states` form an orthonormal family.
///
/// Computes every pairwise inner product. The family is orthonormal iff
/// every diagonal entry is within `tol` of 1 and every off-diagonal
/// magnitude is below `tol`. Returns the verdict together with the largest
/// off-diagonal magnitude found (0 for a single state).
pub fn gram_check<T: Scalar>(states: &[StateVector<T>], tol: T) -> Result<(bool, T)> {
    if states.is_empty() {
        return Err(Error::EmptyStateList);
    }
    if !(tol > T::zero() && tol < T::one()) || !tol.is_finite() {
        return Err(Error::InvalidTolerance);
    }
    let qubits = states[0].num_qubits();
    for s in states {
        if s.num_qubits() != qubits {
            return Err(Error::DimensionMismatch { left: qubits, right: s.num_qubits() });
        }
    }

    let mut orthonormal = true;
    let mut max_off_diagonal = T::zero();
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate().skip(i) {
            let overlap = a.inner_product(b)?;
            if i == j {
                // ⟨ψ|ψ⟩ is real; compare against 1 in the complex plane.
                let deviation = (overlap - num_complex::Complex::new(T::one(), T::zero())).norm();
                if deviation > tol {
                    orthonormal = false;
                }
            } else {
                let magnitude = overlap.norm();
                if magnitude > max_off_diagonal {
                    max_off_diagonal = magnitude;
                }
                if magnitude >= tol {
                    orthonormal = false;
                }
            }
        }
    }
    Ok((orthonormal, max_off_diagonal))
}

/// Encodes every message of `config` against the shared initial state and
/// returns the full family, indexed by message value.
///
/// Memory grows as `message_count × 2^total_qubits` amplitudes; callers
/// enumerating large orders should respect the Gram feasibility bounds.
pub fn encoded_states<T: Scalar>(config: SchemeConfig) -> Result<Vec<StateVector<T>>> {
    let initial = prepare_initial_state::<T>(config);
    let mut states = Vec::with_capacity(config.message_capacity() as usize);
    for value in 0..config.message_capacity() {
        states.push(encode(config, &initial, Message::new(config, value)?)?);
    }
    Ok(states)
}

fn feasibility_bound(scheme: Scheme, method: CapacityMethod) -> usize {
    match (scheme, method) {
        (Scheme::Pairwise, CapacityMethod::Gram) => PAIRWISE_GRAM_MAX_N,
        (Scheme::MaxEntangled, CapacityMethod::Gram) => MAX_ENTANGLED_GRAM_MAX_N,
        (Scheme::Pairwise, CapacityMethod::RoundTrip) => PAIRWISE_ROUND_TRIP_MAX_N,
        (Scheme::MaxEntangled, CapacityMethod::RoundTrip) => MAX_ENTANGLED_ROUND_TRIP_MAX_N,
    }
}

fn method_label(method: CapacityMethod) -> &'static str {
    match method {
        CapacityMethod::Gram => "Gram-matrix verification",
        CapacityMethod::RoundTrip => "round-trip verification",
    }
}

/// Brute-force certifies the capacity of `config`: enumerates all messages,
/// encodes each, and checks distinguishability by `method`.
///
/// `tol` is the method's acceptance tolerance: the orthonormality tolerance
/// for [`CapacityMethod::Gram`] (default choice [`Scalar::gram_tol`]), the
/// deterministic-readout tolerance for [`CapacityMethod::RoundTrip`]
/// (default choice [`Scalar::measure_tol`]).
///
/// On success the report carries `message_count` = 4^n (Pairwise) or
/// 2^(n+1) (MaxEntangled) and `bits` = 2n or n+1. A certification failure —
/// which no valid configuration produces — is reported as an error rather
/// than a report, so a returned report *is* the certificate.
pub fn capacity<T: Scalar>(
    config: SchemeConfig,
    method: CapacityMethod,
    tol: T,
) -> Result<CapacityReport<T>> {
    if !(tol > T::zero() && tol < T::one()) || !tol.is_finite() {
        return Err(Error::InvalidTolerance);
    }
    let bound = feasibility_bound(config.scheme(), method);
    if config.n() > bound {
        return Err(Error::CapacityLimit {
            what: method_label(method),
            scheme: config.scheme().name(),
            bound,
            n: config.n(),
        });
    }

    let max_off_diagonal = match method {
        CapacityMethod::Gram => {
            let states = encoded_states::<T>(config)?;
            let (orthonormal, max_off) = gram_check(&states, tol)?;
            if !orthonormal {
                return Err(Error::CertificationFailed {
                    reason: format!(
                        "encoded states are not mutually orthonormal \
                         (largest off-diagonal overlap {max_off})"
                    ),
                });
            }
            Some(max_off)
        }
        CapacityMethod::RoundTrip => {
            let initial = prepare_initial_state::<T>(config);
            for value in 0..config.message_capacity() {
                let encoded = encode(config, &initial, Message::new(config, value)?)?;
                let (decoded, _) = decode_with_tolerance(config, &encoded, tol)?;
                if decoded != value {
                    return Err(Error::CertificationFailed {
                        reason: format!("message {value} decoded as {decoded}"),
                    });
                }
            }
            None
        }
    };

    Ok(CapacityReport {
        scheme: config.scheme(),
        n: config.n(),
        message_count: config.message_capacity(),
        bits: lit(config.message_bits() as f64),
        method,
        max_off_diagonal,
    })
}
