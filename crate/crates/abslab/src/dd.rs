//! Minimal double-double arithmetic (~31 significant digits).
//!
//! Used where a check subtracts two nearly equal quantities whose true
//! difference sits below f64 resolution, e.g. the asymptotic-series tail of
//! `analytic::thm1_f` at s = 10^4 (true tail ~ 1.3e-28 against operands of
//! size 1.7e-4). Error-free transforms via `f64::mul_add`.

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Requires |a| >= |b|.
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn from_int(x: i64) -> Self {
        // i64 up to 2^53 is exact in f64; all constants here are small.
        Dd {
            hi: x as f64,
            lo: 0.0,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::from_f64(q1)));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul(Dd::from_f64(q2)));
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        let (hi, lo) = quick_two_sum(s, e + q3);
        Dd { hi, lo }
    }

    /// One dd Newton step on the f64 seed doubles its precision.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::from_f64(0.0);
        }
        let seed = Dd::from_f64(self.hi.sqrt());
        let half = Dd { hi: 0.5, lo: 0.0 };
        seed.add(self.div(seed)).mul(half)
    }

    pub fn ratio(num: i64, den: i64) -> Dd {
        Dd::from_int(num).div(Dd::from_int(den))
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    pub fn powi(self, n: u32) -> Dd {
        let mut acc = Dd::from_int(1);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}
