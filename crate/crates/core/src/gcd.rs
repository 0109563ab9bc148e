//! Greatest common divisors in `Q[x1, ..., xn]`.
//!
//! Recursive primitive remainder sequences: split off the content with
//! respect to the lowest-index variable present, recurse on the coefficients,
//! and run a pseudo-remainder sequence on the primitive parts. Results are
//! normalized so that the lexicographically leading coefficient is 1.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{self, Rational};

pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    gcd_rec(a, b).monic_normalized()
}

pub fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() || b.is_zero() {
        return MultiPoly::zero(a.ctx());
    }
    let g = gcd(a, b);
    (a * &b.div_exact(&g).expect("gcd divides")).monic_normalized()
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.ctx());
    }
    if a == b {
        return a.clone();
    }
    let n = a.ctx().len();
    let var = (0..n).find(|&v| a.involves(v) || b.involves(v)).unwrap();
    if !a.involves(var) {
        return gcd_rec(a, &content_in(b, var));
    }
    if !b.involves(var) {
        return gcd_rec(&content_in(a, var), b);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let c = gcd_rec(&ca, &cb);
    let mut p = integer_primitive(&a.div_exact(&ca).expect("content divides"));
    let mut q = integer_primitive(&b.div_exact(&cb).expect("content divides"));
    if coprime_by_evaluation(&p, &q, var) {
        return c;
    }
    if p.degree_in(var) < q.degree_in(var) {
        core::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        let (_, _, r) = p.pseudo_divmod(&q, var);
        if r.is_zero() {
            break q;
        }
        if r.degree_in(var) == Some(0) {
            break MultiPoly::one(a.ctx());
        }
        p = q;
        q = integer_primitive(&primitive_part(&r, var));
    };
    &c * &primitive_part(&g, var)
}

/// The multiple of `f` with coprime integer coefficients and positive
/// leading coefficient.
fn integer_primitive(f: &MultiPoly) -> MultiPoly {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for (_, c) in f.terms() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        return f.clone();
    }
    if f.leading_coefficient().is_negative() {
        num = -num;
    }
    f.scale(&Rational::new(den, num))
}

/// Sufficient test for `gcd(p, q)` to be free of `var`: the images under a
/// specialization of the other variables that keeps both leading
/// coefficients in `var` nonzero are coprime. A common factor involving
/// `var` would survive such a specialization with its degree.
fn coprime_by_evaluation(p: &MultiPoly, q: &MultiPoly, var: usize) -> bool {
    let others: Vec<usize> = (0..p.ctx().len()).filter(|&v| v != var && (p.involves(v) || q.involves(v))).collect();
    if others.is_empty() {
        return false;
    }
    let (lp, lq) = (p.lc_in(var), q.lc_in(var));
    for k in 1..=4i64 {
        let point: Vec<(usize, Rational)> =
            others.iter().enumerate().map(|(i, &v)| (v, rational::from_int(k * (i as i64 + 2) - 1))).collect();
        if lp.evaluate(&point).is_zero() || lq.evaluate(&point).is_zero() {
            continue;
        }
        return gcd_rec(&p.evaluate(&point), &q.evaluate(&point)).is_constant();
    }
    false
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `var`.
pub fn content_in(f: &MultiPoly, var: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(f.ctx());
    for c in f.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &c);
        if g.is_constant() {
            return MultiPoly::one(f.ctx());
        }
    }
    g.monic_normalized()
}

pub fn primitive_part(f: &MultiPoly, var: usize) -> MultiPoly {
    if f.is_zero() {
        return f.clone();
    }
    let c = content_in(f, var);
    f.div_exact(&c).expect("content divides")
}

/// Extended Euclid in `Q[var]` for polynomials involving only `var`:
/// returns `(g, s, t)` with `s·a + t·b = g` and `g` monic (or zero).
pub fn ext_gcd_univariate(
    a: &MultiPoly,
    b: &MultiPoly,
    var: usize,
) -> Result<(MultiPoly, MultiPoly, MultiPoly)> {
    if !a.only_involves(&[var]) || !b.only_involves(&[var]) {
        return Err(Error::InvalidInput("extended gcd needs univariate inputs".into()));
    }
    let ctx = a.ctx();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (MultiPoly::one(ctx), MultiPoly::zero(ctx));
    let (mut t0, mut t1) = (MultiPoly::zero(ctx), MultiPoly::one(ctx));
    while !r1.is_zero() {
        let lc = r1.lc_in(var).constant_value().unwrap();
        let monic = r1.scale(&lc.recip());
        let (q, r) = r0.divmod_monic(&monic, var)?;
        let q = q.scale(&lc.recip());
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = core::mem::replace(&mut r1, r);
        s0 = core::mem::replace(&mut s1, s2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if r0.is_zero() {
        return Ok((r0, s0, t0));
    }
    let inv = r0.lc_in(var).constant_value().unwrap().recip();
    Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
}

/// Coefficients `u` with `Σ u_i·r_i = gcd(r_1, ..., r_k)` in `Q[var]`.
pub fn bezout_univariate(rs: &[MultiPoly], var: usize) -> Result<(MultiPoly, Vec<MultiPoly>)> {
    let Some(first) = rs.first() else {
        return Err(Error::InvalidInput("empty Bezout input".into()));
    };
    let ctx = first.ctx();
    let mut g = MultiPoly::zero(ctx);
    let mut us: Vec<MultiPoly> = Vec::with_capacity(rs.len());
    for r in rs {
        let (g2, s, t) = ext_gcd_univariate(&g, r, var)?;
        for u in us.iter_mut() {
            *u = &*u * &s;
        }
        us.push(t);
        g = g2;
    }
    Ok((g, us))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::test_support::{ctx, p};

    #[test]
    fn bivariate_gcd() {
        let c = ctx(&["x", "y"]);
        let g = p(&c, "x*y + 1");
        let a = &g * &p(&c, "x - y^2");
        let b = &g * &p(&c, "x^2 + 3*y");
        assert_eq!(gcd(&a, &b), g);
        assert_eq!(gcd(&p(&c, "2*x"), &p(&c, "4*x*y")), p(&c, "x"));
        assert!(gcd(&p(&c, "x+1"), &p(&c, "y")).is_one());
        assert_eq!(gcd(&MultiPoly::zero(&c), &p(&c, "3*y+3")), p(&c, "y+1"));
    }

    #[test]
    fn content_is_coefficient_gcd() {
        let c = ctx(&["x", "y"]);
        let f2 = &p(&c, "y^2-1") * &p(&c, "x^2 + x");
        assert_eq!(content_in(&f2, 0), p(&c, "y^2-1"));
        assert_eq!(primitive_part(&f2, 0), p(&c, "x^2+x"));
    }

    #[test]
    fn ext_gcd_bezout_identity() {
        let c = ctx(&["y"]);
        let (g, s, t) = ext_gcd_univariate(&p(&c, "y"), &p(&c, "1-y"), 0).unwrap();
        assert!(g.is_one());
        assert!((&(&s * &p(&c, "y")) + &(&t * &p(&c, "1-y"))).is_one());
        let (g, us) = bezout_univariate(&[p(&c, "y^2-1"), p(&c, "y-1"), p(&c, "y+2")], 0).unwrap();
        assert!(g.is_one());
        let total = us
            .iter()
            .zip([p(&c, "y^2-1"), p(&c, "y-1"), p(&c, "y+2")])
            .fold(MultiPoly::zero(&c), |acc, (u, r)| &acc + &(u * &r));
        assert!(total.is_one());
    }
}
