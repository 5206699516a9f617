//! Shared fixtures for the criterion benches.

use primsft::{Angle, SftSystem};

pub fn full_shift() -> SftSystem {
    SftSystem::full_shift(2, None).expect("full shift")
}

pub fn golden_mean() -> SftSystem {
    SftSystem::golden_mean(None).expect("golden mean")
}

/// A permutation of 6 points with one cycle of each length 1, 2 and 3.
pub fn mixed_permutation() -> SftSystem {
    SftSystem::permutation(&[0, 2, 1, 4, 5, 3]).expect("permutation")
}

pub fn twelfth_roots() -> Vec<Angle> {
    Angle::roots(12).expect("roots")
}
