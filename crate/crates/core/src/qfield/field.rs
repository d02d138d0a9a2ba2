use crate::error::{Error, Result};

pub type FieldElem = u32;

/// Arithmetic in `F_q` for a prime `q`, elements are residues `0..q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    q: u32,
    inverses: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldContext {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) || q > u64::from(u16::MAX) {
            return Err(Error::NonPrimeModulus(q));
        }
        let q32 = q as u32;
        let mut inverses = vec![0u32; q as usize];
        for a in 1..q32 {
            // Fermat: a^(q-2)
            inverses[a as usize] = Self::pow_mod(a, q32 - 2, q32);
        }
        Ok(Self { q: q32, inverses })
    }

    fn pow_mod(mut base: u32, mut exp: u32, m: u32) -> u32 {
        let mut acc: u64 = 1;
        let mut b = u64::from(base % m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % u64::from(m);
            }
            b = b * b % u64::from(m);
            exp >>= 1;
        }
        base = acc as u32;
        base
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        ((u64::from(a) * u64::from(b)) % u64::from(self.q)) as u32
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a == 0 {
            None
        } else {
            Some(self.inverses[a as usize])
        }
    }

    /// All field elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        0..self.q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(matches!(FieldContext::new(4), Err(Error::NonPrimeModulus(4))));
        assert!(FieldContext::new(1).is_err());
        assert!(FieldContext::new(0).is_err());
        assert!(FieldContext::new(9).is_err());
        assert!(FieldContext::new(7).is_ok());
    }

    #[test]
    fn inverses() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let f = FieldContext::new(q).unwrap();
            assert_eq!(f.inv(0), None);
            for a in 1..f.q() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in f.elements() {
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }
}
