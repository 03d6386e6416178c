//! Carrier phase estimation workbench for dispersion-unmanaged coherent
//! n-PSK links.
//!
//! The crate has three layers:
//!
//! * signal-level building blocks: Gray-coded differential n-PSK
//!   ([`modulation`]), a phase-noise/dispersion/AWGN channel emulator
//!   ([`channel`]) and the three feed-forward carrier phase estimators
//!   ([`cpe`]);
//! * closed-form predictions: phase-noise variances and the BER floors of
//!   each estimator ([`analytic`]);
//! * a seeded Monte-Carlo harness that runs the full
//!   encode → channel → estimate → decode → count pipeline and compares the
//!   measured BER against the matching analytic floor ([`harness`]).
//!
//! Everything is deterministic: all randomness flows from a single 64-bit
//! seed through the counter-based generator in [`rng`], so results are
//! bit-identical for any degree of parallelism.

pub mod analytic;
pub mod channel;
pub mod cpe;
mod error;
pub mod harness;
pub mod modulation;
pub mod rng;

pub use analytic::{FloorCurve, VarianceBreakdown};
pub use channel::{ChannelSeeds, LaserConfig, LinkConfig, SPEED_OF_LIGHT};
pub use cpe::{BwaConfig, NlmsConfig, PhaseEstimateSeries, VvConfig};
pub use error::Error;
pub use harness::{BerResult, CpeChoice, ScenarioConfig, SweepRow};
pub use modulation::{Constellation, ModulationFormat};

/// Complex baseband sample, one per symbol.
pub type Iq = num_complex::Complex64;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
