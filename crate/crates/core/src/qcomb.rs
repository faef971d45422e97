//! q-shifted factorials and Gaussian binomial coefficients.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::coeff::{int, qpow, sym, RationalFunction, Symbol};
use crate::error::{Error, Result};

/// `k(k-1)/2`, defined for every integer `k`.
pub fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// Finite q-shifted factorial `(a;q)_n = (1-a)(1-qa)...(1-q^{n-1}a)`.
pub fn qpochhammer(a: &RationalFunction, n: usize) -> RationalFunction {
    let mut acc = RationalFunction::one();
    let mut shifted = a.clone();
    let q = sym(Symbol::Q);
    for _ in 0..n {
        acc = acc.mul(&(int(1) - &shifted));
        shifted = shifted.mul(&q);
    }
    acc
}

/// `(a_1, ..., a_m; q)_n`.
pub fn qpochhammer_multi(args: &[RationalFunction], n: usize) -> RationalFunction {
    args.iter().map(|a| qpochhammer(a, n)).product()
}

fn qfactorial_cache() -> &'static Mutex<HashMap<usize, RationalFunction>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, RationalFunction>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `(q;q)_n`.
pub fn qfactorial(n: usize) -> RationalFunction {
    if let Some(v) = qfactorial_cache().lock().unwrap().get(&n) {
        return v.clone();
    }
    let v = qpochhammer(&sym(Symbol::Q), n);
    qfactorial_cache().lock().unwrap().insert(n, v.clone());
    v
}

fn qbinomial_cache() -> &'static Mutex<HashMap<(usize, usize), RationalFunction>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), RationalFunction>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gaussian binomial `(q;q)_n / ((q;q)_k (q;q)_{n-k})`; zero when `k` is
/// outside `0..=n`.
pub fn qbinomial(n: i64, k: i64) -> RationalFunction {
    if n < 0 || k < 0 || k > n {
        return RationalFunction::zero();
    }
    let key = (n as usize, k as usize);
    if let Some(v) = qbinomial_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let (n, k) = key;
    let num = qfactorial(n);
    let den = qfactorial(k).mul(&qfactorial(n - k));
    let v = num.div(&den).expect("(q;q)_k is never zero");
    debug_assert!(v.is_polynomial());
    qbinomial_cache().lock().unwrap().insert(key, v.clone());
    v
}

/// `((a;q)_n, (aq^n;q)_k)`, whose product is `(a;q)_{n+k}`.
pub fn pochhammer_shift_split(
    a: &RationalFunction,
    n: usize,
    k: usize,
) -> (RationalFunction, RationalFunction) {
    let left = qpochhammer(a, n);
    let right = qpochhammer(&a.mul(&qpow(n as i64)), k);
    (left, right)
}

/// `(a;q)_n / (a^{-1} q^{1-n};q)_k * (-q/a)^k * q^{binom(k,2) - nk}`,
/// which equals `(a;q)_{n-k}`.
pub fn pochhammer_reverse(a: &RationalFunction, n: usize, k: usize) -> Result<RationalFunction> {
    if k > n {
        return Err(Error::UnsupportedExpression(format!(
            "pochhammer_reverse needs k <= n, got k = {k}, n = {n}"
        )));
    }
    let a_inv = a.recip()?;
    let (n_i, k_i) = (n as i64, k as i64);
    let lower = qpochhammer(&a_inv.mul(&qpow(1 - n_i)), k);
    let sign_part = a_inv.mul(&qpow(1)).neg().pow(k_i)?;
    qpochhammer(a, n)
        .div(&lower)
        .map(|r| r.mul(&sign_part).mul(&qpow(binom2(k_i) - n_i * k_i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::sym;
    use Symbol::*;

    #[test]
    fn pochhammer_examples() {
        let a = sym(A);
        assert!(qpochhammer(&a, 0).is_one());
        let two = (int(1) - &a) * (int(1) - &(&sym(Q) * &a));
        assert_eq!(qpochhammer(&a, 2), two);
        // (q;q)_3 expanded by hand: 1 - q - q^2 + q^4 + q^5 - q^6
        assert_eq!(qpochhammer(&sym(Q), 3).to_string(), "1-q-q^2+q^4+q^5-q^6");
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(4, 2).to_string(), "1+q+2*q^2+q^3+q^4");
        assert!(qbinomial(5, 0).is_one());
        assert!(qbinomial(3, 4).is_zero());
        assert!(qbinomial(3, -1).is_zero());
    }

    #[test]
    fn split_examples() {
        let a = sym(A);
        let (l, r) = pochhammer_shift_split(&a, 1, 1);
        assert_eq!(l, int(1) - &a);
        assert_eq!(r, int(1) - &(&sym(Q) * &a));
        let (l, r) = pochhammer_shift_split(&a, 0, 3);
        assert!(l.is_one());
        assert_eq!(r, qpochhammer(&a, 3));
        let (l, r) = pochhammer_shift_split(&a, 2, 2);
        assert_eq!(l * r, qpochhammer(&a, 4));
    }

    #[test]
    fn reverse_examples() {
        let a = sym(A);
        assert_eq!(pochhammer_reverse(&a, 3, 0).unwrap(), qpochhammer(&a, 3));
        assert!(pochhammer_reverse(&a, 1, 1).unwrap().is_one());
        assert_eq!(pochhammer_reverse(&a, 3, 1).unwrap(), qpochhammer(&a, 2));
        assert_eq!(pochhammer_reverse(&int(0), 2, 1), Err(Error::DivisionByZero));
    }

    #[test]
    fn binom2_values() {
        assert_eq!(binom2(0), 0);
        assert_eq!(binom2(1), 0);
        assert_eq!(binom2(4), 6);
        assert_eq!(binom2(-1), 1);
    }
}
