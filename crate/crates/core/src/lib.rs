//! Primitive ideal spaces of the topological graph algebras `O(E)` for
//! `E = (X, Y, σ, ι)`, with `X` a finite permutative system or a one-sided
//! shift of finite type and `Y` a union of length-1 cylinders.
//!
//! The pipeline is:
//!
//! * [`sft`]: the presented system, cycles and periodic-point counts;
//! * [`inverse_limit`]: eventually periodic points of the dilation space
//!   `X∞` and the homeomorphism `γ₁`;
//! * [`quasi_orbit`]: orbit closures, isotropy and the quasi-orbit preorder;
//! * [`prim_space`]: circle families modulo `λ ~ η ⇔ λ^N = η^N`, aperiodic
//!   points and the specialization relation;
//! * [`rep_oracle`]: finite-dimensional matrix models checking the
//!   generator relations and kernel separation.

pub mod angle;
pub mod error;
pub mod inverse_limit;
pub mod prim_space;
pub mod quasi_orbit;
pub mod rep_oracle;
pub mod report;
pub mod sft;

pub use angle::Angle;
pub use error::{Error, Result};
pub use inverse_limit::{EvpPoint, Stratum};
pub use prim_space::{PrimPoint, PrimSpace};
pub use quasi_orbit::{OrbitClosure, QuasiOrbit, QuasiOrbitSpace};
pub use rep_oracle::{RepModel, Verdict};
pub use report::PrimReport;
pub use sft::{Cycle, SftSystem, Symbol, SystemKind};
