use crate::error::{Error, Result};

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 16;
/// Maximum exponent of a single variable.
pub const MAX_EXP: u32 = 127;

const HIGH: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;
const LOW7: u128 = 0x7f7f_7f7f_7f7f_7f7f_7f7f_7f7f_7f7f_7f7f;
const LANE8: u128 = 0x00ff_00ff_00ff_00ff_00ff_00ff_00ff_00ff;
const LANE16: u128 = 0x0000_ffff_0000_ffff_0000_ffff_0000_ffff;
const LANE32: u128 = 0x0000_0000_ffff_ffff_0000_0000_ffff_ffff;

/// Exponent vector packed one byte per variable, variable `i` in byte `i`.
///
/// Every byte stays below 128, so byte-wise sums never carry and
/// divisibility, lcm and gcd reduce to a few word operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(i: usize) -> Monomial {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        Monomial(1u128 << (8 * i))
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Monomial> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: exps.len(),
            });
        }
        let mut bits = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXP {
                return Err(Error::ExponentOverflow(MAX_EXP));
            }
            bits |= (e as u128) << (8 * i);
        }
        Ok(Monomial(bits))
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0 == 0
    }

    /// Total (unweighted) degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        let x = (self.0 & LANE8) + ((self.0 >> 8) & LANE8);
        let x = (x & LANE16) + ((x >> 16) & LANE16);
        let x = (x & LANE32) + ((x >> 32) & LANE32);
        let x = (x & 0xffff_ffff_ffff_ffff) + (x >> 64);
        x as u32
    }

    /// Product; panics if an exponent would exceed `MAX_EXP`.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let s = self.0 + other.0;
        assert!(s & HIGH == 0, "exponent overflow");
        Monomial(s)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let s = self.0 + other.0;
        (s & HIGH == 0).then_some(Monomial(s))
    }

    /// True iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        ((other.0 | HIGH) - self.0) & HIGH == HIGH
    }

    /// `self / other`; caller guarantees divisibility.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0 - other.0)
    }

    #[inline]
    fn ge_mask(&self, other: &Monomial) -> u128 {
        let ge = ((self.0 | HIGH) - other.0) & HIGH;
        (ge >> 7) * 0xff
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial((self.0 & m) | (other.0 & !m))
    }

    #[inline]
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let m = self.ge_mask(other);
        Monomial((other.0 & m) | (self.0 & !m))
    }

    /// True iff no variable occurs in both.
    #[inline]
    pub fn coprime(&self, other: &Monomial) -> bool {
        let a = (self.0 + LOW7) & HIGH;
        let b = (other.0 + LOW7) & HIGH;
        a & b == 0
    }

    /// Keeps only the variables selected by `mask` (a byte mask).
    #[inline]
    pub(crate) fn masked(&self, mask: u128) -> Monomial {
        Monomial(self.0 & mask)
    }

    /// Raw packed bits; larger bits in a higher variable mean a larger value.
    #[inline]
    pub(crate) fn bits(&self) -> u128 {
        self.0
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut acc = Monomial::ONE;
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Byte mask selecting variables `lo..hi`.
pub(crate) fn var_mask(lo: usize, hi: usize) -> u128 {
    let mut m = 0u128;
    for i in lo..hi {
        m |= 0xffu128 << (8 * i);
    }
    m
}
