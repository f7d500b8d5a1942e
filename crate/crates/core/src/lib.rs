//! Numerical toolkit for weighted function spaces on `R^d` (`d ∈ {1, 2}`): sampled
//! Fourier and short-time Fourier transforms, partitions of unity, Wiener amalgam and
//! modulation norms, and finite tensors on the time-frequency plane.

pub mod bupu;
pub mod error;
mod fft;
pub mod grid;
pub mod norms;
pub mod ops;
pub mod space;
pub mod stft;
pub mod tensor;
pub mod transforms;
pub mod weight;
pub mod windows;

pub use bupu::{fl1_nu_norm, validate_bupu, Bupu, BupuReport};
pub use error::{Error, Result};
pub use grid::{GridSpec, SampledFunction, C64};
pub use norms::{
    amalgam_norm_continuous, amalgam_norm_discrete, c0_tail_profile, local_norm, lp_norm,
    mixed_norm, modulation_norm, modulation_norm_via_amalgam, shubin_norm, AmalgamSpec,
    GlobalSpec, Method, NormResult,
};
pub use ops::{modulate, translate};
pub use space::{operator_norm_modulation, operator_norm_translation, SpaceSpec};
pub use stft::{adjoint_stft, check_inversion, stft, stft_factorization_residual, TimeFrequencyArray};
pub use tensor::{
    decompose_mollified, decompose_splitting, eps_lower_bound, make_dual_samples, pi_upper_bound,
    synthesize, DualPair, FiniteTensor,
};
pub use transforms::{
    approximate_identity, convolve, flp_norm, fourier, hermite_functions, hermite_projector,
    inverse_fourier,
};
pub use weight::{make_power_weight, moderation_check, Weight};
