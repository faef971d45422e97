use super::symbol::{Symbol, NSYM};

/// Dense exponent vector over the fixed alphabet.
///
/// The derived ordering is lexicographic in symbol order, which is the
/// canonical term order used by [`MultiPoly`](super::MultiPoly).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u16; NSYM]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NSYM]);

    pub fn var(s: Symbol, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[s.index()] = e;
        m
    }

    #[inline]
    pub fn exp(&self, s: Symbol) -> u16 {
        self.0[s.index()]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NSYM];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees `other.divides(self)`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NSYM];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i] - other.0[i];
        }
        Monomial(out)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NSYM];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i].min(other.0[i]);
        }
        Monomial(out)
    }

    pub fn with_exp(&self, s: Symbol, e: u16) -> Monomial {
        let mut m = *self;
        m.0[s.index()] = e;
        m
    }

    /// Bitmask of the symbols that occur.
    pub fn support(&self) -> u16 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u16, |acc, (i, _)| acc | (1 << i))
    }
}
