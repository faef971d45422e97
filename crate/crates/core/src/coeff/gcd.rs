//! Multivariate polynomial gcd over `Q`.
//!
//! Recursive content / primitive-part reduction: variables that occur in
//! only one argument are eliminated by folding the gcd over that
//! argument's coefficients, univariate inputs use Euclid over `Q`, and the
//! general case runs a primitive pseudo-remainder sequence in one main
//! variable with coefficients in the remaining ones.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;
use super::poly::{MultiPoly, Q};
use super::symbol::{Symbol, NSYM};

/// gcd normalized to integer coefficients, unit content and positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.integer_primitive().1;
    }
    if b.is_zero() {
        return a.integer_primitive().1;
    }
    if coprime_by_images(a, b) {
        return MultiPoly::one();
    }
    gcd_nonzero(a, b).integer_primitive().1
}

fn gcd_nonzero(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a == b {
        return a.clone();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = if ma.is_one() { a.clone() } else { a.div_monomial(&ma) };
    let b1 = if mb.is_one() { b.clone() } else { b.div_monomial(&mb) };
    let g = gcd_no_monomial(&a1, &b1);
    if mg.is_one() {
        g
    } else {
        g.mul_monomial(&mg)
    }
}

fn symbols_in(mask: u16) -> impl Iterator<Item = Symbol> {
    (0..NSYM).filter(move |i| mask & (1 << i) != 0).map(Symbol::from_index)
}

fn gcd_no_monomial(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a == b {
        return a.clone();
    }
    // Cheap divisibility probes catch the common "one divides the other" case.
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return a.clone();
        }
    } else if a.div_exact(b).is_some() {
        return b.clone();
    }

    let sa = a.support();
    let sb = b.support();
    if sa != sb {
        let only_a = sa & !sb;
        if only_a != 0 {
            let v = symbols_in(only_a).next().unwrap();
            return gcd_with_coefficients(b, a.to_univariate(v));
        }
        let v = symbols_in(sb & !sa).next().unwrap();
        return gcd_with_coefficients(a, b.to_univariate(v));
    }
    if sa.count_ones() == 1 {
        let v = symbols_in(sa).next().unwrap();
        return univariate_gcd(a, b, v);
    }

    let main = symbols_in(sa)
        .min_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .unwrap();
    let ua = a.to_univariate(main);
    let ub = b.to_univariate(main);
    let ca = content(&ua);
    let cb = content(&ub);
    let c = gcd_nonzero(&ca, &cb);
    let mut pa = divide_coeffs(&ua, &ca);
    let mut pb = divide_coeffs(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        let r = pseudo_remainder(&pa, &pb);
        if r.is_empty() {
            break pb;
        }
        if r.len() == 1 {
            break vec![MultiPoly::one()];
        }
        let cr = content(&r);
        pa = pb;
        pb = divide_coeffs(&r, &cr);
    };
    let cg = content(&g);
    let g = divide_coeffs(&g, &cg);
    &MultiPoly::from_univariate(main, &g) * &c
}

const P: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mulp(x: u64, y: u64) -> u64 {
    ((x as u128 * y as u128) % P as u128) as u64
}

fn invp(x: u64) -> u64 {
    let (mut base, mut e, mut acc) = (x, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulp(acc, base);
        }
        base = mulp(base, base);
        e >>= 1;
    }
    acc
}

fn modp(c: &Q) -> u64 {
    let r = c.numer() % BigInt::from(P);
    let r = if r.is_negative() { r + BigInt::from(P) } else { r };
    r.to_u64().expect("reduced below P")
}

/// Sound coprimality certificate. With `a, b` scaled to primitive integer
/// polynomials, fix `v`, send the other symbols to small integers and reduce
/// mod `P`. Where `lc_v(a)` survives, the image of `g = gcd(a, b)` keeps its
/// `v`-degree and divides both images, so coprime images for every `v`
/// force `g` constant. `false` means "unknown".
fn coprime_by_images(a: &MultiPoly, b: &MultiPoly) -> bool {
    if a.is_constant() || b.is_constant() {
        return true;
    }
    let (a, b) = (a.integer_primitive().1, b.integer_primitive().1);
    symbols_in(a.support() | b.support()).all(|v| {
        let (ia, ib) = (image(&a, v), image(&b, v));
        if ia.len() != a.degree_in(v) as usize + 1 {
            return false;
        }
        let (mut x, mut y) = if ia.len() >= ib.len() { (ia, ib) } else { (ib, ia) };
        loop {
            if y.is_empty() {
                return x.len() == 1;
            }
            rem_modp(&mut x, &y);
            std::mem::swap(&mut x, &mut y);
        }
    })
}

/// Dense coefficients in `v` mod `P` after every other symbol `w` takes the
/// value `3 + 2 w`.
fn image(p: &MultiPoly, v: Symbol) -> Vec<u64> {
    let mut d = vec![0u64; p.degree_in(v) as usize + 1];
    for (m, c) in p.terms() {
        let mut t = modp(c);
        for w in symbols_in(m.support()).filter(|&w| w != v) {
            let base = 3 + 2 * w.index() as u64;
            for _ in 0..m.exp(w) {
                t = mulp(t, base);
            }
        }
        let slot = &mut d[m.exp(v) as usize];
        *slot = (*slot + t) % P;
    }
    while d.last() == Some(&0) {
        d.pop();
    }
    d
}

/// `x <- x mod y` over `F_P`, `y` nonempty with nonzero top coefficient.
fn rem_modp(x: &mut Vec<u64>, y: &[u64]) {
    let dy = y.len() - 1;
    let inv = invp(y[dy]);
    while x.len() > dy {
        let dx = x.len() - 1;
        let f = mulp(x[dx], inv);
        if f != 0 {
            let shift = dx - dy;
            for (i, &yc) in y.iter().enumerate() {
                x[i + shift] = (x[i + shift] + P - mulp(yc, f)) % P;
            }
        }
        x.pop();
    }
    while x.last() == Some(&0) {
        x.pop();
    }
}

/// gcd of `p` with every polynomial in `coeffs` (zeros ignored).
fn gcd_with_coefficients(p: &MultiPoly, mut coeffs: Vec<MultiPoly>) -> MultiPoly {
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(|c| c.len());
    let mut g = p.clone();
    for c in &coeffs {
        g = gcd_nonzero(&g, c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

fn content(coeffs: &[MultiPoly]) -> MultiPoly {
    let mut nz: Vec<&MultiPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nz.sort_by_key(|c| c.len());
    let mut it = nz.into_iter();
    let mut g = match it.next() {
        Some(c) => c.integer_primitive().1,
        None => return MultiPoly::one(),
    };
    for c in it {
        if g.is_constant() {
            return MultiPoly::one();
        }
        g = gcd_nonzero(&g, c);
    }
    if g.is_constant() {
        MultiPoly::one()
    } else {
        g
    }
}

fn divide_coeffs(coeffs: &[MultiPoly], by: &MultiPoly) -> Vec<MultiPoly> {
    if by.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(by).expect("content must divide every coefficient"))
        .collect()
}

fn trim(v: &mut Vec<MultiPoly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of `a` by `b` (dense, coefficients in the other
/// variables), without the final `lc(b)^e` scaling.
fn pseudo_remainder(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = bc * &lr;
            r[i + shift] = &r[i + shift] - &t;
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

/// Dense univariate Euclid over `Q`.
fn univariate_gcd(a: &MultiPoly, b: &MultiPoly, v: Symbol) -> MultiPoly {
    let to_dense = |p: &MultiPoly| -> Vec<Q> {
        let mut d = vec![Q::zero(); p.degree_in(v) as usize + 1];
        for (m, c) in p.terms() {
            d[m.exp(v) as usize] = c.clone();
        }
        d
    };
    let mut x = to_dense(a);
    let mut y = to_dense(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    make_monic(&mut y);
    loop {
        dense_rem(&mut x, &y);
        if x.is_empty() {
            break;
        }
        make_monic(&mut x);
        std::mem::swap(&mut x, &mut y);
    }
    MultiPoly::from_terms(
        y.into_iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(v, i as u16), c)),
    )
}

fn make_monic(p: &mut [Q]) {
    let lc = p.last().cloned().unwrap();
    if !lc.is_one() {
        let inv = lc.recip();
        for c in p.iter_mut() {
            *c *= &inv;
        }
    }
}

/// `x <- x mod y`, with `y` monic.
fn dense_rem(x: &mut Vec<Q>, y: &[Q]) {
    let dy = y.len() - 1;
    while x.len() > dy {
        let dx = x.len() - 1;
        let lc = x[dx].clone();
        if !lc.is_zero() {
            let shift = dx - dy;
            for (i, yc) in y.iter().enumerate() {
                x[i + shift] -= yc * &lc;
            }
        }
        x.pop();
    }
    while x.last().is_some_and(|c| c.is_zero()) {
        x.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: Symbol) -> MultiPoly {
        MultiPoly::var(s)
    }
    fn one() -> MultiPoly {
        MultiPoly::one()
    }

    #[test]
    fn univariate_cases() {
        let q = v(Symbol::Q);
        let a = &one() - &(&q * &q);
        let b = &one() - &q;
        // 1-q^2 and 1-q share 1-q, normalized with positive leading coefficient
        assert_eq!(gcd(&a, &b).to_string(), "1-q");
        assert!(gcd(&a, &one()).is_one());
        assert_eq!(gcd(&MultiPoly::zero(), &b).to_string(), "1-q");
    }

    #[test]
    fn multivariate_common_factor() {
        let q = v(Symbol::Q);
        let a = v(Symbol::A);
        let x = v(Symbol::X);
        let f1 = &one() - &(&a * &x);
        let f2 = &q + &a;
        let f3 = &x - &q;
        let p = &f1 * &(&f2 * &f2);
        let r = &(&f1 * &f2) * &f3;
        let g = gcd(&p, &r);
        let expected = (&f1 * &f2).integer_primitive().1;
        assert_eq!(g, expected);
    }

    #[test]
    fn coprime_and_monomial_content() {
        let q = v(Symbol::Q);
        let x = v(Symbol::X);
        let a = &(&q * &q) * &(&one() + &x);
        let b = &(&q * &x) * &(&one() - &x);
        assert_eq!(gcd(&a, &b).to_string(), "q");
    }

    #[test]
    fn coprime_trivariate_inputs_are_certified_quickly() {
        // once stalled the pseudo-remainder sequence for minutes
        let f = crate::parse::parse_rational("(-a^2*x-q^2-2*q^2*a)/(2*a-2*q)").unwrap();
        let g = crate::parse::parse_rational("(-x^2+3*q-3*q^2*a^2)/(3-4*x)").unwrap();
        let rep = crate::parse::parse_rational("(-3*q-2*q*b+2*q^2*b^2)/3").unwrap();
        let h = f.mul(&g).substitute(Symbol::X, &rep).unwrap();
        let back = h.mul(&f.substitute(Symbol::X, &rep).unwrap().recip().unwrap());
        assert_eq!(back, g.substitute(Symbol::X, &rep).unwrap());
    }

    #[test]
    fn shared_factor_survives_the_certificate() {
        let (q, a, x) = (v(Symbol::Q), v(Symbol::A), v(Symbol::X));
        let common = &(&one() - &(&q * &x)) + &a;
        let p = &common * &(&x + &a);
        let r = &common * &(&q - &a);
        assert_eq!(gcd(&p, &r), common.integer_primitive().1);
    }
}
