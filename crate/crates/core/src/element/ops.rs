use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use super::ZeonElement;
use crate::error::Result;

impl ZeonElement {
    pub fn try_add(&self, other: &ZeonElement) -> Result<ZeonElement> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.accumulate(i, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &ZeonElement) -> Result<ZeonElement> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.accumulate(i, -c);
        }
        Ok(out)
    }

    /// Blade product: `z_I z_J = z_{I u J}` when `I` and `J` are disjoint and
    /// zero otherwise.
    pub fn try_mul(&self, other: &ZeonElement) -> Result<ZeonElement> {
        self.check_same_n(other)?;
        let mut out = ZeonElement::zero(self.n);
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                if i.is_disjoint(j) {
                    out.accumulate(i.union(j), a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: impl Into<Complex64>) -> ZeonElement {
        let c = c.into();
        let mut out = ZeonElement::zero(self.n);
        for (i, a) in self.terms() {
            out.insert(i, a * c);
        }
        out
    }

    /// `u^k` by repeated squaring; `u^0 = 1`.
    pub fn pow(&self, mut k: u32) -> ZeonElement {
        let mut base = self.clone();
        let mut acc = ZeonElement::one(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&ZeonElement> for &ZeonElement {
            type Output = ZeonElement;
            fn $method(self, rhs: &ZeonElement) -> ZeonElement {
                self.$try(rhs).expect("zeon operands must share n")
            }
        }
        impl $trait<ZeonElement> for ZeonElement {
            type Output = ZeonElement;
            fn $method(self, rhs: ZeonElement) -> ZeonElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ZeonElement> for ZeonElement {
            type Output = ZeonElement;
            fn $method(self, rhs: &ZeonElement) -> ZeonElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<ZeonElement> for &ZeonElement {
            type Output = ZeonElement;
            fn $method(self, rhs: ZeonElement) -> ZeonElement {
                self.$method(&rhs)
            }
        }
    };
}

binary_op!(Add, add, try_add);
binary_op!(Sub, sub, try_sub);
binary_op!(Mul, mul, try_mul);

impl Mul<Complex64> for &ZeonElement {
    type Output = ZeonElement;
    fn mul(self, rhs: Complex64) -> ZeonElement {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for ZeonElement {
    type Output = ZeonElement;
    fn mul(self, rhs: Complex64) -> ZeonElement {
        self.scale(rhs)
    }
}

impl Mul<f64> for ZeonElement {
    type Output = ZeonElement;
    fn mul(self, rhs: f64) -> ZeonElement {
        self.scale(rhs)
    }
}

impl Mul<f64> for &ZeonElement {
    type Output = ZeonElement;
    fn mul(self, rhs: f64) -> ZeonElement {
        self.scale(rhs)
    }
}

impl Neg for &ZeonElement {
    type Output = ZeonElement;
    fn neg(self) -> ZeonElement {
        self.scale(-1.0)
    }
}

impl Neg for ZeonElement {
    type Output = ZeonElement;
    fn neg(self) -> ZeonElement {
        self.scale(-1.0)
    }
}

impl AddAssign<&ZeonElement> for ZeonElement {
    fn add_assign(&mut self, rhs: &ZeonElement) {
        self.check_same_n(rhs).expect("zeon operands must share n");
        for (i, c) in rhs.terms() {
            self.accumulate(i, c);
        }
    }
}

impl SubAssign<&ZeonElement> for ZeonElement {
    fn sub_assign(&mut self, rhs: &ZeonElement) {
        self.check_same_n(rhs).expect("zeon operands must share n");
        for (i, c) in rhs.terms() {
            self.accumulate(i, -c);
        }
    }
}
