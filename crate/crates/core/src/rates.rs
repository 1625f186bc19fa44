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

//! Transmission-rate analysis for the two schemes.
//!
//! With Hadamard time t_h and CNOT time t_c, the decoding circuits take
//! n·(t_h+t_c) (Pairwise) and t_h+n·t_c (MaxEntangled). Two rate measures
//! follow:
//!
//! * **bits per unit time** ([`rate_eq1`]):
//!   Pairwise 2n/(n·(t_h+t_c)) = 2/(t_h+t_c); MaxEntangled (n+1)/(t_h+n·t_c).
//! * **bits per unit time per sent particle** ([`rate_eq2`]): both schemes
//!   send exactly n particles, so this is [`rate_eq1`]/n.
//!
//! Two headline facts, each encoded as a test/property elsewhere:
//!
//! * When t_h = t_c = t, both schemes rate at exactly 1/t — neither wins.
//! * For any positive timings, the Pairwise/MaxEntangled ratio is bounded by
//!   max(1, 2·t_c/(t_h+t_c)) — below 2 always, so there is no exponential
//!   advantage in either direction.
//!
//! [`erroneous_rate`] computes the *incorrect* figure 2^n/(n·(t_h+t_c)) that
//! results from miscounting the Pairwise message space as 2^n messages
//! instead of 4^n messages = 2n bits. It is provided purely as a labeled
//! negative control for side-by-side tables; no circuit realizes it.

use crate::error::{Error, Result};
use crate::protocols::Scheme;
use crate::scalar::{lit, Scalar};
use crate::verification::{
    capacity, CapacityMethod, MAX_ENTANGLED_ROUND_TRIP_MAX_N, PAIRWISE_ROUND_TRIP_MAX_N,
};
use crate::protocols::SchemeConfig;

/// Gate operation times, strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingModel<T: Scalar> {
    t_h: T,
    t_c: T,
}

impl<T: Scalar> TimingModel<T> {
    /// Validates and wraps a Hadamard time `t_h` and a CNOT time `t_c`.
    pub fn new(t_h: T, t_c: T) -> Result<Self> {
        if !(t_h > T::zero() && t_c > T::zero()) || !t_h.is_finite() || !t_c.is_finite() {
            return Err(Error::NonPositiveTiming);
        }
        Ok(TimingModel { t_h, t_c })
    }

    /// Hadamard operation time.
    pub fn t_h(&self) -> T {
        self.t_h
    }

    /// CNOT operation time.
    pub fn t_c(&self) -> T {
        self.t_c
    }
}

/// Where a rate sweep takes its `bits` column from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacitySource {
    /// The closed forms 2n and n+1.
    Formula,
    /// Brute-force certification by exhaustive round-trip decoding; must
    /// match the closed form exactly, and is feasibility-bounded in n.
    Simulated,
}

impl CapacitySource {
    /// Lowercase name used by the command line: `"formula"` or
    /// `"simulated"`.
    pub fn name(self) -> &'static str {
        match self {
            CapacitySource::Formula => "formula",
            CapacitySource::Simulated => "simulated",
        }
    }
}

impl std::fmt::Display for CapacitySource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// All rate figures for one (scheme, n, timing) point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport<T: Scalar> {
    /// Scheme the row describes.
    pub scheme: Scheme,
    /// Order of the configuration.
    pub n: usize,
    /// Classical bits carried per protocol run: 2n or n+1.
    pub bits: T,
    /// Particles Alice physically sends: n for both schemes.
    pub particles_sent: u64,
    /// Decoding time: n·(t_h+t_c) or t_h+n·t_c.
    pub total_time: T,
    /// Bits per unit time.
    pub rate_per_time: T,
    /// Bits per unit time per sent particle (= `rate_per_time`/n).
    pub rate_per_time_per_particle: T,
    /// The labeled, non-physical 2^n/(n·(t_h+t_c)) figure. Pairwise rows
    /// only, and only while 2^n is representable in `T`; `None` otherwise.
    pub erroneous_rate_per_time: Option<T>,
}

impl<T: Scalar> RateReport<T> {
    /// Evaluates every rate figure for one (scheme, n) point.
    ///
    /// Unlike the simulation types, `n` is unbounded here (any `n ≥ 1`):
    /// the formulas cost nothing to evaluate at n = 10⁶.
    pub fn new(scheme: Scheme, n: usize, timing: &TimingModel<T>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidSchemeOrder);
        }
        let nf = lit::<T>(n as f64);
        let bits = match scheme {
            Scheme::Pairwise => lit::<T>((2 * n) as f64),
            Scheme::MaxEntangled => lit::<T>((n + 1) as f64),
        };
        let total_time = match scheme {
            Scheme::Pairwise => nf * timing.t_h() + nf * timing.t_c(),
            Scheme::MaxEntangled => timing.t_h() + nf * timing.t_c(),
        };
        let rate_per_time = rate_eq1(scheme, n, timing)?;
        let erroneous_rate_per_time = match scheme {
            Scheme::Pairwise if n <= erroneous_rate_max_n::<T>() => {
                Some(erroneous_rate(n, timing)?)
            }
            _ => None,
        };
        Ok(RateReport {
            scheme,
            n,
            bits,
            particles_sent: n as u64,
            total_time,
            rate_per_time,
            rate_per_time_per_particle: rate_per_time / nf,
            erroneous_rate_per_time,
        })
    }
}

/// One sweep point: both schemes' reports at the same n and timing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeRatePair<T: Scalar> {
    /// The shared order.
    pub n: usize,
    /// Pairwise figures.
    pub pairwise: RateReport<T>,
    /// MaxEntangled figures.
    pub max_entangled: RateReport<T>,
}

/// Bits per unit time.
///
/// Pairwise: (2n)/(n·(t_h+t_c)), which simplifies to 2/(t_h+t_c) — constant
/// in n. MaxEntangled: (n+1)/(t_h+n·t_c). The expressions are evaluated in
/// the unsimplified form so the two schemes agree bit-for-bit at n = 1.
pub fn rate_eq1<T: Scalar>(scheme: Scheme, n: usize, timing: &TimingModel<T>) -> Result<T> {
    if n < 1 {
        return Err(Error::InvalidSchemeOrder);
    }
    let nf = lit::<T>(n as f64);
    Ok(match scheme {
        Scheme::Pairwise => lit::<T>((2 * n) as f64) / (nf * (timing.t_h() + timing.t_c())),
        Scheme::MaxEntangled => (nf + T::one()) / (timing.t_h() + nf * timing.t_c()),
    })
}

/// Bits per unit time per sent particle: exactly [`rate_eq1`]/n, since both
/// schemes send n particles.
///
/// Closed forms: Pairwise 2/(n·(t_h+t_c)); MaxEntangled (n+1)/(n·(t_h+n·t_c)).
pub fn rate_eq2<T: Scalar>(scheme: Scheme, n: usize, timing: &TimingModel<T>) -> Result<T> {
    Ok(rate_eq1(scheme, n, timing)? / lit::<T>(n as f64))
}

/// Largest n for which 2^n is finite in `T` (1023 for `f64`, 127 for
/// `f32`): the validity bound of [`erroneous_rate`].
pub fn erroneous_rate_max_n<T: Scalar>() -> usize {
    let candidate = T::max_value()
        .log2()
        .floor()
        .to_usize()
        .expect("a Scalar's exponent range fits usize");
    // log2(max) sits just below an integer and can round up across it;
    // step back if the candidate power is not actually finite.
    if lit::<T>(2.0).powi(candidate as i32).is_finite() {
        candidate
    } else {
        candidate - 1
    }
}

/// The labeled NEGATIVE CONTROL: 2^n/(n·(t_h+t_c)), the rate the Pairwise
/// scheme would have if its message space held 2^n bits instead of the
/// actual 2n. No circuit realizes this figure; it exists to be tabulated
/// next to the correct rates and exhibit the spurious exponential gap.
///
/// 2^n is computed as an exact power of two, so requires
/// `n ≤ erroneous_rate_max_n::<T>()`.
pub fn erroneous_rate<T: Scalar>(n: usize, timing: &TimingModel<T>) -> Result<T> {
    if n < 1 {
        return Err(Error::InvalidSchemeOrder);
    }
    if n > erroneous_rate_max_n::<T>() {
        return Err(Error::CapacityLimit {
            what: "the labeled erroneous rate (2^n overflows the scalar type)",
            scheme: Scheme::Pairwise.name(),
            bound: erroneous_rate_max_n::<T>(),
            n,
        });
    }
    let nf = lit::<T>(n as f64);
    // Exact: every intermediate of powi on 2 is itself a power of two.
    let two_to_n = lit::<T>(2.0).powi(n as i32);
    Ok(two_to_n / (nf * (timing.t_h() + timing.t_c())))
}

fn round_trip_bound(scheme: Scheme) -> usize {
    match scheme {
        Scheme::Pairwise => PAIRWISE_ROUND_TRIP_MAX_N,
        Scheme::MaxEntangled => MAX_ENTANGLED_ROUND_TRIP_MAX_N,
    }
}

/// Evaluates both schemes over `n_min..=n_max` at the given timing.
///
/// With [`CapacitySource::Formula`], the `bits` columns come from the
/// closed forms and any `n ≥ 1` is accepted. With
/// [`CapacitySource::Simulated`], every row's bit count is instead taken
/// from brute-force round-trip certification — which bounds the sweep to
/// the round-trip feasibility limits — and checked to match the closed
/// form exactly.
pub fn compare_schemes<T: Scalar>(
    n_min: usize,
    n_max: usize,
    timing: &TimingModel<T>,
    source: CapacitySource,
) -> Result<Vec<SchemeRatePair<T>>> {
    if n_min < 1 {
        return Err(Error::InvalidSchemeOrder);
    }
    if n_min > n_max {
        return Err(Error::EmptyRange { n_min, n_max });
    }

    let mut rows = Vec::with_capacity(n_max - n_min + 1);
    for n in n_min..=n_max {
        let mut pairwise = RateReport::new(Scheme::Pairwise, n, timing)?;
        let mut max_entangled = RateReport::new(Scheme::MaxEntangled, n, timing)?;
        if source == CapacitySource::Simulated {
            pairwise.bits = certified_bits::<T>(Scheme::Pairwise, n, pairwise.bits)?;
            max_entangled.bits =
                certified_bits::<T>(Scheme::MaxEntangled, n, max_entangled.bits)?;
        }
        rows.push(SchemeRatePair { n, pairwise, max_entangled });
    }
    Ok(rows)
}

/// Runs round-trip certification for one (scheme, n) and demands the
/// certified bit count equal `formula_bits` exactly.
fn certified_bits<T: Scalar>(scheme: Scheme, n: usize, formula_bits: T) -> Result<T> {
    let bound = round_trip_bound(scheme);
    if n > bound {
        return Err(Error::CapacityLimit {
            what: "round-trip verification",
            scheme: scheme.name(),
            bound,
            n,
        });
    }
    let config = SchemeConfig::new(scheme, n)?;
    let report = capacity::<T>(config, CapacityMethod::RoundTrip, T::measure_tol())?;
    if report.bits != formula_bits {
        return Err(Error::CertificationFailed {
            reason: format!(
                "simulated capacity ({} bits) disagrees with the closed form ({} bits) \
                 for {} n={}",
                report.bits, formula_bits, scheme, n
            ),
        });
    }
    Ok(report.bits)
}
