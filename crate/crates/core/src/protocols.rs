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

//! The two dense-coding protocols: entangled-state preparation, Alice-side
//! encoding, and Bob-side decoding with an exact gate-count ledger.
//!
//! Two schemes are implemented, both parameterized by an order `n`:
//!
//! * **Pairwise** — Alice and Bob share `n` Bell pairs. Pair `k` occupies
//!   qubits `2k` (Alice) and `2k+1` (Bob). Each pair carries one base-4
//!   digit, so the scheme transmits one of 4^n messages = 2n bits.
//! * **MaxEntangled** — Alice and Bob share one (n+1)-qubit GHZ state
//!   (|0…0⟩+|1…1⟩)/√2. Qubit 0 is Bob's retained qubit; qubits 1..=n are
//!   Alice's. The scheme transmits one of 2^(n+1) messages = n+1 bits.
//!
//! In both schemes Alice physically sends her `n` qubits, so the particle
//! count is identical; only the carried bits differ.
//!
//! # Message conventions
//!
//! * Pairwise: the message is read in base 4, little-endian over pairs.
//!   Digit `k` selects the unitary applied to Alice's qubit of pair `k`:
//!   0 → I, 1 → X, 2 → Z, 3 → XZ (the [`SingleQubitGate::Y`] matrix).
//! * MaxEntangled: the message is read as `n+1` bits. Bit 0 is the phase
//!   bit, realized as Z on Alice's qubit 1; bit `j` (for `j = 1..=n`) flips
//!   Alice's qubit `j` with an X. The phase gate is applied first; the
//!   relative order only affects an unobservable global sign.
//!
//! Any fixed bijection between messages and encoding unitaries works; this
//! one is the simplest to document and test.
//!
//! # Decoding circuits and time accounting
//!
//! The decoding circuits are the standard disentangling circuits, and their
//! gate ledgers are the source of the time denominators used by the rate
//! formulas:
//!
//! * Pairwise: for each pair `k`, CNOT(control `2k`, target `2k+1`) then
//!   H(`2k`) — ledger (n Hadamards, n CNOTs). The pairs are accounted
//!   sequentially, total time n·(t_h+t_c).
//! * MaxEntangled: CNOT(control 0, target `i`) for `i = 1..=n`, then H(0) —
//!   ledger (1 Hadamard, n CNOTs), total time t_h+n·t_c.
//!
//! Encoding Paulis are deliberately *not* counted: the rate denominators
//! contain only the decoding Hadamard and CNOT times.

use std::fmt;

use crate::error::{Error, Result};
use crate::rates::TimingModel;
use crate::scalar::{lit, Scalar};
use crate::statevector::{QubitIndex, SingleQubitGate, StateVector, MAX_QUBITS};

/// Which dense-coding scheme a configuration uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// `n` Bell pairs; 2n qubits; 4^n messages.
    Pairwise,
    /// One (n+1)-qubit GHZ state; 2^(n+1) messages.
    MaxEntangled,
}

impl Scheme {
    /// Short lowercase name used by the command line and in reports:
    /// `"pairwise"` or `"ghz"` (the conventional name of the maximally
    /// entangled scheme's state family).
    pub fn name(self) -> &'static str {
        match self {
            Scheme::Pairwise => "pairwise",
            Scheme::MaxEntangled => "ghz",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Who holds a given qubit of a configuration's register.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Owner {
    /// The sender; her qubits travel to Bob after encoding.
    Alice,
    /// The receiver; his qubits never move.
    Bob,
}

/// A validated scheme order: which scheme, and its `n` (number of Bell
/// pairs, or number of Alice's GHZ qubits).
///
/// Construction checks `n ≥ 1` and that the register fits the simulator
/// ([`MAX_QUBITS`]), so every other operation can assume a valid layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeConfig {
    scheme: Scheme,
    n: usize,
}

impl SchemeConfig {
    /// Creates a configuration of order `n` (the number of entangled pairs
    /// for [`Scheme::Pairwise`], the number of Alice-held qubits for
    /// [`Scheme::MaxEntangled`]).
    pub fn new(scheme: Scheme, n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidSchemeOrder);
        }
        let qubits = match scheme {
            Scheme::Pairwise => 2 * n,
            Scheme::MaxEntangled => n + 1,
        };
        if qubits > MAX_QUBITS {
            return Err(Error::RegisterTooLarge { qubits, max: MAX_QUBITS });
        }
        Ok(SchemeConfig { scheme, n })
    }

    /// The scheme this configuration instantiates.
    pub fn scheme(self) -> Scheme {
        self.scheme
    }

    /// The order `n`.
    pub fn n(self) -> usize {
        self.n
    }

    /// Total register width: 2n qubits (Pairwise) or n+1 (MaxEntangled).
    pub fn total_qubits(self) -> usize {
        match self.scheme {
            Scheme::Pairwise => 2 * self.n,
            Scheme::MaxEntangled => self.n + 1,
        }
    }

    /// Number of classical bits one message carries: 2n (Pairwise) or n+1
    /// (MaxEntangled).
    pub fn message_bits(self) -> u32 {
        match self.scheme {
            Scheme::Pairwise => 2 * self.n as u32,
            Scheme::MaxEntangled => self.n as u32 + 1,
        }
    }

    /// Number of distinct messages: 4^n (Pairwise) or 2^(n+1)
    /// (MaxEntangled). Always a power of two that fits `u64` because the
    /// register is capped at [`MAX_QUBITS`].
    pub fn message_capacity(self) -> u64 {
        1u64 << self.message_bits()
    }

    /// Who owns `qubit`: Pairwise alternates Alice (even) / Bob (odd);
    /// MaxEntangled gives qubit 0 to Bob and the rest to Alice.
    pub fn owner(self, qubit: QubitIndex) -> Result<Owner> {
        if qubit >= self.total_qubits() {
            return Err(Error::QubitOutOfRange { qubit, qubits: self.total_qubits() });
        }
        Ok(match self.scheme {
            Scheme::Pairwise => {
                if qubit % 2 == 0 {
                    Owner::Alice
                } else {
                    Owner::Bob
                }
            }
            Scheme::MaxEntangled => {
                if qubit == 0 {
                    Owner::Bob
                } else {
                    Owner::Alice
                }
            }
        })
    }
}

/// A classical message validated against a configuration's capacity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Message {
    value: u64,
    capacity: u64,
}

impl Message {
    /// Wraps `value` after checking `value < config.message_capacity()`.
    pub fn new(config: SchemeConfig, value: u64) -> Result<Self> {
        let capacity = config.message_capacity();
        if value >= capacity {
            return Err(Error::MessageOutOfRange { value, capacity });
        }
        Ok(Message { value, capacity })
    }

    /// The message value, in `[0, capacity)`.
    pub fn value(self) -> u64 {
        self.value
    }

    /// The capacity of the configuration this message was validated
    /// against: 4^n or 2^(n+1).
    pub fn capacity(self) -> u64 {
        self.capacity
    }
}

/// Exact count of the gates executed by a decoding circuit.
///
/// Only decoding gates are counted — the encoding Paulis do not enter the
/// time model — so the ledger is always (n, n) for Pairwise and (1, n) for
/// MaxEntangled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GateLedger {
    /// Hadamard applications.
    pub hadamard_count: u64,
    /// CNOT applications.
    pub cnot_count: u64,
}

impl GateLedger {
    /// Builds a ledger from explicit counts (handy for expected values in
    /// tests and reports).
    pub fn new(hadamard_count: u64, cnot_count: u64) -> Self {
        GateLedger { hadamard_count, cnot_count }
    }

    /// Total wall time of the counted gates under `timing`, executed
    /// sequentially: `hadamard_count·t_h + cnot_count·t_c`.
    ///
    /// For a Pairwise decode this evaluates to n·t_h + n·t_c = n(t_h+t_c);
    /// for MaxEntangled, t_h + n·t_c.
    pub fn decoding_time<T: Scalar>(&self, timing: &TimingModel<T>) -> T {
        lit::<T>(self.hadamard_count as f64) * timing.t_h()
            + lit::<T>(self.cnot_count as f64) * timing.t_c()
    }
}

/// The shared entangled resource before any encoding.
///
/// * Pairwise: the tensor product of `n` Bell states (|00⟩+|11⟩)/√2, one on
///   each pair's qubits.
/// * MaxEntangled: the (n+1)-qubit GHZ state (|0…0⟩+|1…1⟩)/√2.
///
/// Built by circuit (H then CNOTs on |0…0⟩), so normalization is exact to
/// working precision.
pub fn prepare_initial_state<T: Scalar>(config: SchemeConfig) -> StateVector<T> {
    let expect = "a validated SchemeConfig stays within register bounds";
    let mut state = StateVector::basis_state(config.total_qubits(), 0).expect(expect);
    match config.scheme() {
        Scheme::Pairwise => {
            for k in 0..config.n() {
                state = state.apply_gate(SingleQubitGate::H, 2 * k).expect(expect);
                state = state.apply_cnot(2 * k, 2 * k + 1).expect(expect);
            }
        }
        Scheme::MaxEntangled => {
            state = state.apply_gate(SingleQubitGate::H, 0).expect(expect);
            for i in 1..=config.n() {
                state = state.apply_cnot(0, i).expect(expect);
            }
        }
    }
    state
}

/// Alice's encoding: applies the message's unitary to her qubits of
/// `initial` and returns the encoded state (the input is untouched).
///
/// See the module documentation for the exact message-to-unitary map. The
/// output stays normalized: every encoding gate is unitary.
pub fn encode<T: Scalar>(
    config: SchemeConfig,
    initial: &StateVector<T>,
    message: Message,
) -> Result<StateVector<T>> {
    if initial.num_qubits() != config.total_qubits() {
        return Err(Error::StateMismatch {
            qubits: initial.num_qubits(),
            expected: config.total_qubits(),
        });
    }
    let value = message.value();
    if value >= config.message_capacity() {
        return Err(Error::MessageOutOfRange { value, capacity: config.message_capacity() });
    }

    let mut state = initial.clone();
    match config.scheme() {
        Scheme::Pairwise => {
            for k in 0..config.n() {
                let digit = (value >> (2 * k)) & 3;
                let qubit = 2 * k;
                state = match digit {
                    0 => state,
                    1 => state.apply_gate(SingleQubitGate::X, qubit)?,
                    2 => state.apply_gate(SingleQubitGate::Z, qubit)?,
                    // Digit 3 is the product X·Z, available as one gate.
                    _ => state.apply_gate(SingleQubitGate::Y, qubit)?,
                };
            }
        }
        Scheme::MaxEntangled => {
            if value & 1 == 1 {
                state = state.apply_gate(SingleQubitGate::Z, 1)?;
            }
            for j in 1..=config.n() {
                if (value >> j) & 1 == 1 {
                    state = state.apply_gate(SingleQubitGate::X, j)?;
                }
            }
        }
    }
    Ok(state)
}

/// Bob's decoding with the default deterministic-readout tolerance
/// (`Scalar::measure_tol()`, 1e-9 for `f64`). See [`decode_with_tolerance`].
pub fn decode<T: Scalar>(
    config: SchemeConfig,
    received: &StateVector<T>,
) -> Result<(u64, GateLedger)> {
    decode_with_tolerance(config, received, T::measure_tol())
}

/// Bob's decoding: runs the disentangling circuit, reads the register out,
/// and maps the readout back to the message value.
///
/// Returns the decoded message value together with the exact ledger of the
/// gates executed. On any validly encoded input the readout is analytically
/// deterministic; a non-deterministic-outcome error therefore signals a
/// malformed input state, not a user error.
pub fn decode_with_tolerance<T: Scalar>(
    config: SchemeConfig,
    received: &StateVector<T>,
    tol: T,
) -> Result<(u64, GateLedger)> {
    if received.num_qubits() != config.total_qubits() {
        return Err(Error::StateMismatch {
            qubits: received.num_qubits(),
            expected: config.total_qubits(),
        });
    }

    let n = config.n();
    let mut state = received.clone();
    let ledger = match config.scheme() {
        Scheme::Pairwise => {
            for k in 0..n {
                state = state.apply_cnot(2 * k, 2 * k + 1)?;
                state = state.apply_gate(SingleQubitGate::H, 2 * k)?;
            }
            GateLedger::new(n as u64, n as u64)
        }
        Scheme::MaxEntangled => {
            for i in 1..=n {
                state = state.apply_cnot(0, i)?;
            }
            state = state.apply_gate(SingleQubitGate::H, 0)?;
            GateLedger::new(1, n as u64)
        }
    };

    let index = state.measure_all_deterministic(tol)?;
    let value = match config.scheme() {
        // Pair k reads out digit k: Bob's qubit 2k+1 is the low bit,
        // Alice's qubit 2k the high bit, exactly undoing the encode map.
        Scheme::Pairwise => {
            let mut value = 0u64;
            for k in 0..n {
                let alice = (index >> (2 * k)) as u64 & 1;
                let bob = (index >> (2 * k + 1)) as u64 & 1;
                value |= ((alice << 1) | bob) << (2 * k);
            }
            value
        }
        // The disentangled register holds the message bits in place: the
        // phase bit lands on qubit 0 and bit j on qubit j.
        Scheme::MaxEntangled => index as u64,
    };
    Ok((value, ledger))
}

#[cfg(test)]
mod tests {
    use super::*;

    use num_complex::Complex;
    use proptest::prelude::*;

    const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn config(scheme: Scheme, n: usize) -> SchemeConfig {
        SchemeConfig::new(scheme, n).unwrap()
    }

    fn assert_amplitude(state: &StateVector<f64>, index: usize, expect: f64) {
        let amp = state.amplitudes()[index];
        assert!(
            (amp - Complex::new(expect, 0.0)).norm() < 1e-12,
            "amplitude {index}: {amp} != {expect}"
        );
    }

    /// Every amplitude must be zero except the listed (index, value) pairs.
    fn assert_support(state: &StateVector<f64>, support: &[(usize, f64)]) {
        for (i, amp) in state.amplitudes().iter().enumerate() {
            let expect = support
                .iter()
                .find(|(idx, _)| *idx == i)
                .map_or(0.0, |(_, v)| *v);
            assert!(
                (amp - Complex::new(expect, 0.0)).norm() < 1e-12,
                "amplitude {i}: {amp} != {expect}"
            );
        }
    }

    #[test]
    fn config_validation() {
        assert_eq!(SchemeConfig::new(Scheme::Pairwise, 0), Err(Error::InvalidSchemeOrder));
        assert_eq!(
            SchemeConfig::new(Scheme::Pairwise, 13),
            Err(Error::RegisterTooLarge { qubits: 26, max: MAX_QUBITS })
        );
        assert_eq!(
            SchemeConfig::new(Scheme::MaxEntangled, 24),
            Err(Error::RegisterTooLarge { qubits: 25, max: MAX_QUBITS })
        );

        let c = config(Scheme::Pairwise, 3);
        assert_eq!(c.total_qubits(), 6);
        assert_eq!(c.message_bits(), 6);
        assert_eq!(c.message_capacity(), 64);

        let c = config(Scheme::MaxEntangled, 3);
        assert_eq!(c.total_qubits(), 4);
        assert_eq!(c.message_bits(), 4);
        assert_eq!(c.message_capacity(), 16);
    }

    #[test]
    fn layout_ownership() {
        let c = config(Scheme::Pairwise, 2);
        let owners: Vec<Owner> = (0..4).map(|q| c.owner(q).unwrap()).collect();
        assert_eq!(owners, [Owner::Alice, Owner::Bob, Owner::Alice, Owner::Bob]);

        let c = config(Scheme::MaxEntangled, 2);
        let owners: Vec<Owner> = (0..3).map(|q| c.owner(q).unwrap()).collect();
        assert_eq!(owners, [Owner::Bob, Owner::Alice, Owner::Alice]);

        assert_eq!(c.owner(3), Err(Error::QubitOutOfRange { qubit: 3, qubits: 3 }));
    }

    #[test]
    fn message_validation() {
        let c = config(Scheme::Pairwise, 1);
        assert_eq!(Message::new(c, 3).unwrap().value(), 3);
        assert_eq!(
            Message::new(c, 4),
            Err(Error::MessageOutOfRange { value: 4, capacity: 4 })
        );
    }

    #[test]
    fn initial_states() {
        // One Bell pair: amplitudes 1/√2 at |00⟩ and |11⟩.
        let s = prepare_initial_state::<f64>(config(Scheme::Pairwise, 1));
        assert_support(&s, &[(0, SQRT_HALF), (3, SQRT_HALF)]);

        // Order-1 GHZ is the same Bell state.
        let s = prepare_initial_state::<f64>(config(Scheme::MaxEntangled, 1));
        assert_support(&s, &[(0, SQRT_HALF), (3, SQRT_HALF)]);

        // Order-2 GHZ: 1/√2 at |000⟩ and |111⟩.
        let s = prepare_initial_state::<f64>(config(Scheme::MaxEntangled, 2));
        assert_support(&s, &[(0, SQRT_HALF), (7, SQRT_HALF)]);

        // Two Bell pairs: equal weight on the four doubled bit patterns.
        let s = prepare_initial_state::<f64>(config(Scheme::Pairwise, 2));
        assert_support(&s, &[(0b0000, 0.5), (0b0011, 0.5), (0b1100, 0.5), (0b1111, 0.5)]);
    }

    #[test]
    fn encode_examples() {
        let c = config(Scheme::Pairwise, 1);
        let initial = prepare_initial_state::<f64>(c);

        // Identity message leaves the state untouched.
        let s = encode(c, &initial, Message::new(c, 0).unwrap()).unwrap();
        assert_eq!(s, initial);

        // X on Alice's qubit 0 turns (|00⟩+|11⟩)/√2 into (|01⟩+|10⟩)/√2.
        let s = encode(c, &initial, Message::new(c, 1).unwrap()).unwrap();
        assert_support(&s, &[(1, SQRT_HALF), (2, SQRT_HALF)]);

        // Phase bit alone: Z on qubit 1 negates the |111⟩ branch of the GHZ.
        let c = config(Scheme::MaxEntangled, 2);
        let ghz = prepare_initial_state::<f64>(c);
        let s = encode(c, &ghz, Message::new(c, 1).unwrap()).unwrap();
        assert_amplitude(&s, 0, SQRT_HALF);
        assert_amplitude(&s, 7, -SQRT_HALF);
    }

    #[test]
    fn encode_rejects_mismatches() {
        let c = config(Scheme::Pairwise, 1);
        let initial = prepare_initial_state::<f64>(c);

        let other = prepare_initial_state::<f64>(config(Scheme::Pairwise, 2));
        assert_eq!(
            encode(c, &other, Message::new(c, 0).unwrap()),
            Err(Error::StateMismatch { qubits: 4, expected: 2 })
        );

        // A message validated against a larger configuration is rejected.
        let big = config(Scheme::Pairwise, 2);
        let msg = Message::new(big, 9).unwrap();
        assert_eq!(
            encode(c, &initial, msg),
            Err(Error::MessageOutOfRange { value: 9, capacity: 4 })
        );
    }

    #[test]
    fn decode_examples() {
        // Unencoded Bell state decodes to message 0 with ledger (1 H, 1 CNOT).
        let c = config(Scheme::Pairwise, 1);
        let initial = prepare_initial_state::<f64>(c);
        let (value, ledger) = decode(c, &initial).unwrap();
        assert_eq!(value, 0);
        assert_eq!(ledger, GateLedger::new(1, 1));

        // GHZ with Z on qubit 1 is the phase-bit-only message.
        let c = config(Scheme::MaxEntangled, 2);
        let encoded =
            encode(c, &prepare_initial_state::<f64>(c), Message::new(c, 1).unwrap()).unwrap();
        let (value, ledger) = decode(c, &encoded).unwrap();
        assert_eq!(value, 1);
        assert_eq!(ledger, GateLedger::new(1, 2));
    }

    #[test]
    fn decode_rejects_malformed_states() {
        let c = config(Scheme::Pairwise, 1);
        let initial = prepare_initial_state::<f64>(c);
        assert_eq!(
            decode(config(Scheme::Pairwise, 2), &initial),
            Err(Error::StateMismatch { qubits: 2, expected: 4 })
        );

        // A state outside the encoded family has no deterministic readout.
        let garbled = initial.apply_gate(SingleQubitGate::H, 1).unwrap();
        match decode(c, &garbled) {
            Err(Error::NonDeterministicOutcome { max_probability }) => {
                assert!(max_probability < 1.0 - 1e-9);
            }
            other => panic!("expected non-deterministic outcome, got {other:?}"),
        }
    }

    #[test]
    fn exhaustive_round_trip_small() {
        for (scheme, max_n) in [(Scheme::Pairwise, 2), (Scheme::MaxEntangled, 4)] {
            for n in 1..=max_n {
                let c = config(scheme, n);
                let initial = prepare_initial_state::<f64>(c);
                for value in 0..c.message_capacity() {
                    let encoded = encode(c, &initial, Message::new(c, value).unwrap()).unwrap();
                    let (decoded, _) = decode(c, &encoded).unwrap();
                    assert_eq!(decoded, value, "{scheme} n={n}");
                }
            }
        }
    }

    #[test]
    fn ledger_counts_are_exact() {
        for n in 1..=6 {
            let c = config(Scheme::Pairwise, n);
            let initial = prepare_initial_state::<f64>(c);
            let (_, ledger) = decode(c, &initial).unwrap();
            assert_eq!(ledger, GateLedger::new(n as u64, n as u64));

            let c = config(Scheme::MaxEntangled, n);
            let initial = prepare_initial_state::<f64>(c);
            let (_, ledger) = decode(c, &initial).unwrap();
            assert_eq!(ledger, GateLedger::new(1, n as u64));
        }
    }

    #[test]
    fn decoding_time_examples() {
        let timing = TimingModel::new(1.0f64, 1.0).unwrap();

        let c = config(Scheme::Pairwise, 3);
        let (_, ledger) = decode(c, &prepare_initial_state::<f64>(c)).unwrap();
        assert_eq!(ledger.decoding_time(&timing), 6.0);

        let c = config(Scheme::MaxEntangled, 3);
        let (_, ledger) = decode(c, &prepare_initial_state::<f64>(c)).unwrap();
        assert_eq!(ledger.decoding_time(&timing), 4.0);

        assert_eq!(TimingModel::new(0.0f64, 1.0), Err(Error::NonPositiveTiming));
    }

    #[test]
    fn float32_round_trip() {
        // The whole pipeline works in single precision too.
        let c = config(Scheme::Pairwise, 2);
        let initial = prepare_initial_state::<f32>(c);
        for value in 0..c.message_capacity() {
            let encoded = encode(c, &initial, Message::new(c, value).unwrap()).unwrap();
            let (decoded, _) = decode(c, &encoded).unwrap();
            assert_eq!(decoded, value);
        }
    }

    proptest! {
        #[test]
        fn prop_round_trip_pairwise(value in 0u64..64) {
            let c = config(Scheme::Pairwise, 3);
            let initial = prepare_initial_state::<f64>(c);
            let encoded = encode(c, &initial, Message::new(c, value).unwrap()).unwrap();
            let (decoded, ledger) = decode(c, &encoded).unwrap();
            prop_assert_eq!(decoded, value);
            prop_assert_eq!(ledger, GateLedger::new(3, 3));
        }

        #[test]
        fn prop_round_trip_max_entangled(value in 0u64..128) {
            let c = config(Scheme::MaxEntangled, 6);
            let initial = prepare_initial_state::<f64>(c);
            let encoded = encode(c, &initial, Message::new(c, value).unwrap()).unwrap();
            let (decoded, ledger) = decode(c, &encoded).unwrap();
            prop_assert_eq!(decoded, value);
            prop_assert_eq!(ledger, GateLedger::new(1, 6));
        }

        #[test]
        fn prop_encoding_preserves_norm(value in 0u64..256) {
            let c = config(Scheme::Pairwise, 4);
            let initial = prepare_initial_state::<f64>(c);
            let encoded = encode(c, &initial, Message::new(c, value).unwrap()).unwrap();
            prop_assert!((encoded.norm_sqr() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn prop_distinct_messages_orthogonal(a in 0u64..16, b in 0u64..16) {
            prop_assume!(a != b);
            let c = config(Scheme::Pairwise, 2);
            let initial = prepare_initial_state::<f64>(c);
            let sa = encode(c, &initial, Message::new(c, a).unwrap()).unwrap();
            let sb = encode(c, &initial, Message::new(c, b).unwrap()).unwrap();
            prop_assert!(sa.inner_product(&sb).unwrap().norm() < 1e-12);
        }
    }
}
