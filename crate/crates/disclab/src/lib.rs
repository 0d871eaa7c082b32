//! Numerical laboratory for the L² discrepancy of planar convex bodies.
//!
//! The crate measures, at desk scale, how well finite point sets on the unit
//! torus T² approximate area: the (t, λ)-averaged squared discrepancy
//!
//! ```text
//! D²(P) = ∫ ∫_{T²} | card(P ∩ (λC + t)) − λ² N |C| |² dt dλ
//! ```
//!
//! for a convex body C, together with the geometric and Fourier-analytic
//! machinery that controls it: chord functions γ_Θ(δ), profile (X-ray)
//! functions, the Fourier transform of the body indicator χ̂_C, the
//! concave-profile majorant μ_f, and second moduli of smoothness ω₂.
//!
//! Modules follow the pipeline:
//! - [`geometry`]: the body zoo (disk, polygons, the |x|^{1/σ} family C_σ and
//!   its σ = 1 corner variant C₁, lens bodies), chords, profiles, membership.
//! - [`fourier`]: profile transforms via Filon quadrature, closed forms for
//!   disk/polygon, bulk ray spectra, and the inequality verifiers.
//! - [`pointsets`]: anisotropic K×L grids, random/jittered generators, and
//!   exponential sums S(m).
//! - [`discrepancy`]: two independent discrepancy engines (Monte Carlo and a
//!   truncated Parseval lattice sum), the Cassels–Montgomery check, and the
//!   Γ-partition diagnostic.
//! - [`experiments`]: scaling-exponent sweeps, lower-bound envelopes, and
//!   brute-force root/chord asymptotics verifiers.
//! - [`cli`]: command-line front end, config parsing, spectrum cache, run
//!   manifests.

pub mod cli;
pub mod discrepancy;
pub mod error;
pub mod experiments;
pub mod fourier;
pub mod geometry;
pub mod pointsets;
pub mod rng;

pub use error::Error;

/// Crate version, echoed into run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
