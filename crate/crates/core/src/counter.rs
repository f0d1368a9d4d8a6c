//! Floating-point operation accounting.
//!
//! Numerical kernels take an `OpCounter` and route every data-path multiply,
//! add and transcendental call through it. `Uncounted` compiles down to the
//! bare operations; `OpCounts` tallies them. Both produce the same bits.
//! Index arithmetic and loop bookkeeping never go through the counter.

pub trait OpCounter {
    fn mul(&mut self, a: f64, b: f64) -> f64;
    fn add(&mut self, a: f64, b: f64) -> f64;
    /// `(sin(angle), cos(angle))` as a single transcendental call.
    fn sin_cos(&mut self, angle: f64) -> (f64, f64);

    /// `acc + a * b`, rounded twice (not fused).
    #[inline(always)]
    fn mul_acc(&mut self, acc: f64, a: f64, b: f64) -> f64 {
        let product = self.mul(a, b);
        self.add(acc, product)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Uncounted;

impl OpCounter for Uncounted {
    #[inline(always)]
    fn mul(&mut self, a: f64, b: f64) -> f64 {
        a * b
    }

    #[inline(always)]
    fn add(&mut self, a: f64, b: f64) -> f64 {
        a + b
    }

    #[inline(always)]
    fn sin_cos(&mut self, angle: f64) -> (f64, f64) {
        angle.sin_cos()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub multiplications: u64,
    pub additions: u64,
    pub transcendental_calls: u64,
}

impl OpCounter for OpCounts {
    #[inline]
    fn mul(&mut self, a: f64, b: f64) -> f64 {
        self.multiplications += 1;
        a * b
    }

    #[inline]
    fn add(&mut self, a: f64, b: f64) -> f64 {
        self.additions += 1;
        a + b
    }

    #[inline]
    fn sin_cos(&mut self, angle: f64) -> (f64, f64) {
        self.transcendental_calls += 1;
        angle.sin_cos()
    }
}

impl std::ops::AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.multiplications += rhs.multiplications;
        self.additions += rhs.additions;
        self.transcendental_calls += rhs.transcendental_calls;
    }
}
