#![cfg_attr(not(feature = "std"), no_std)]
extern crate alloc;
pub mod clock;
pub mod error;
pub mod matrix;
pub mod softmax;
mod math;
mod rng;
pub use error::CoreError;
pub use matrix::Mat;

/// probe: force nalgebra + rng compilation
pub fn _probe() -> f64 {
    let m = nalgebra::DMatrix::<f64>::identity(3, 3);
    let eig = m.symmetric_eigen();
    let mut r = crate::rng::stream_rng(1, 2);
    eig.eigenvalues[0] + crate::rng::uniform(&mut r)
}
