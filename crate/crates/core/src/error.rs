use thiserror::Error;

/// Errors produced by signal processing and simulation operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unsupported order {0}: n must be a power of two in 4..=64")]
    UnsupportedOrder(u32),

    #[error("bit count {count} is not divisible by {bits_per_symbol} bits per symbol")]
    BitCountMismatch { count: usize, bits_per_symbol: u32 },

    #[error("stream too short: got {got}, need at least {need} samples")]
    StreamTooShort { got: usize, need: usize },

    #[error("zero-magnitude sample has no decidable phase")]
    ZeroMagnitudeSample,

    #[error("negative variance {0} rad^2")]
    NegativeVariance(f64),

    #[error("fft size {0} must be a power of two >= 64")]
    InvalidFftSize(usize),

    #[error("length/guard mismatch: stream of {len} samples cannot carry a dispersion spread of {guard} samples")]
    LengthGuardMismatch { len: usize, guard: usize },

    #[error("step size {0} outside the stable range (0, 2)")]
    InvalidStepSize(f64),

    #[error("training requires {need} known symbols, got {got}")]
    TrainingTooShort { need: usize, got: usize },

    #[error("block size must be >= 1")]
    InvalidBlockSize,

    #[error("degenerate window: size {0} must be odd and >= 3")]
    DegenerateWindow(usize),

    #[error("position {p} outside block 1..={n}")]
    PositionOutOfRange { p: usize, n: usize },

    #[error("bit stream length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
}
