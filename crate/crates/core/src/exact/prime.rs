use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::{Error, Result};

/// The prime field `F_p` for a small prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u16,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || p > u16::MAX as u32 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p: p as u16 })
    }

    pub fn modulus(self) -> u32 {
        self.p as u32
    }

    pub fn elem(self, v: i64) -> Fp {
        let p = self.p as i64;
        Fp { v: v.rem_euclid(p) as u16, p: self.p }
    }

    pub fn zero(self) -> Fp {
        Fp { v: 0, p: self.p }
    }

    pub fn one(self) -> Fp {
        Fp { v: 1, p: self.p }
    }

    /// Image of a rational number; fails when `p` divides the denominator.
    pub fn reduce(self, x: &Rational) -> Result<Fp> {
        let p = BigInt::from(self.p);
        let den = x.denom().mod_floor(&p);
        if den.is_zero() {
            return Err(Error::InvalidInput(format!("{x} has no image in F_{}", self.p)));
        }
        let num = x.numer().mod_floor(&p);
        let n = self.elem(num.to_i64().expect("residue fits"));
        let d = self.elem(den.to_i64().expect("residue fits"));
        Ok(n.mul(d.inv().expect("nonzero")))
    }

    /// All elements `0, 1, …, p-1` in order.
    pub fn elements(self) -> impl Iterator<Item = Fp> {
        (0..self.p).map(move |v| Fp { v, p: self.p })
    }
}

impl TryFrom<u32> for PrimeField {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.modulus()
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u16,
    p: u16,
}

impl Fp {
    pub fn residue(self) -> u32 {
        self.v as u32
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    #[inline]
    pub fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u32 + o.v as u32;
        let p = self.p as u32;
        Fp { v: if s >= p { (s - p) as u16 } else { s as u16 }, p: self.p }
    }

    #[inline]
    pub fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let p = self.p as u32;
        let s = self.v as u32 + p - o.v as u32;
        Fp { v: if s >= p { (s - p) as u16 } else { s as u16 }, p: self.p }
    }

    #[inline]
    pub fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp { v: ((self.v as u32 * o.v as u32) % self.p as u32) as u16, p: self.p }
    }

    #[inline]
    pub fn neg(self) -> Fp {
        if self.v == 0 {
            self
        } else {
            Fp { v: self.p - self.v, p: self.p }
        }
    }

    pub fn inv(self) -> Option<Fp> {
        if self.v == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let p = self.p as u64;
        let mut base = self.v as u64;
        let mut e = p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Some(Fp { v: acc as u16, p: self.p })
    }

    pub fn is_zero(self) -> bool {
        self.v == 0
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(97).is_ok());
    }

    #[test]
    fn field_axioms_mod_7() {
        let f = PrimeField::new(7).unwrap();
        for a in f.elements() {
            assert_eq!(a.add(a.neg()), f.zero());
            if !a.is_zero() {
                assert_eq!(a.mul(a.inv().unwrap()), f.one());
            }
            for b in f.elements() {
                assert_eq!(a.sub(b).add(b), a);
                assert_eq!(a.mul(b), b.mul(a));
            }
        }
    }

    #[test]
    fn reduces_rationals() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.reduce(&crate::exact::q(3, 2)).unwrap().residue(), 4);
        assert_eq!(f.reduce(&crate::exact::q(-1, 1)).unwrap().residue(), 4);
        assert!(f.reduce(&crate::exact::q(1, 10)).is_err());
    }

    #[test]
    fn negative_lift() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.elem(-1).residue(), 2);
        assert_eq!(f.elem(7).residue(), 1);
    }
}
