use crate::scalar::Real;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
pub const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;
pub const LN_SQRT_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Mathematical constants used throughout the kernel, in the caller's scalar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants<T> {
    pub euler_gamma: T,
    pub ln_two_pi: T,
    pub pi: T,
}

impl<T: Real> Constants<T> {
    pub fn get() -> Self {
        Self {
            euler_gamma: T::lit(EULER_GAMMA),
            ln_two_pi: T::lit(LN_TWO_PI),
            pi: T::PI(),
        }
    }
}
