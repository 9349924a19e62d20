//! Wall-clock abstraction so the (otherwise `no_std`) training loops can
//! report per-epoch timings when a host clock exists.

/// Monotone time source. `now` returns seconds from an arbitrary fixed origin.
pub trait Clock {
    fn now(&self) -> f64;
}

/// Always reports 0.0; use when no host clock is available or when timing
/// fields must be reproducible.
#[derive(Debug, Default, Clone, Copy)]
pub struct NullClock;

impl Clock for NullClock {
    fn now(&self) -> f64 {
        0.0
    }
}

#[cfg(feature = "std")]
#[derive(Debug, Clone, Copy)]
pub struct SystemClock(std::time::Instant);

#[cfg(feature = "std")]
impl SystemClock {
    pub fn new() -> Self {
        Self(std::time::Instant::now())
    }
}

#[cfg(feature = "std")]
impl Default for SystemClock {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(feature = "std")]
impl Clock for SystemClock {
    fn now(&self) -> f64 {
        self.0.elapsed().as_secs_f64()
    }
}
