//! Equivalence certificates between idempotent matrices.
//!
//! `E ~ F` is witnessed by `A`, `B` with `A·B = E` and `B·A = F`. A free
//! certificate is the case `F = I_m`: the rows of `B` are then a basis of the
//! row module `R^n·E`. [`verify_certificate`] is the acceptance oracle used
//! throughout the crate and the CLI.

use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceCertificate<T: Ring> {
    pub e: Mat<T>,
    pub f: Mat<T>,
    pub a: Mat<T>,
    pub b: Mat<T>,
}

/// The identities a certificate must satisfy, in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Shapes,
    EIdempotent,
    FIdempotent,
    ABEqualsE,
    BAEqualsF,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Shapes => "shapes",
            Identity::EIdempotent => "E*E = E",
            Identity::FIdempotent => "F*F = F",
            Identity::ABEqualsE => "A*B = E",
            Identity::BAEqualsF => "B*A = F",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    /// First identity that fails, with the offending entry when there is one.
    pub failure: Option<(Identity, String)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn into_result(self) -> Result<()> {
        match self.failure {
            None => Ok(()),
            Some((id, detail)) => Err(Error::VerificationFailed(alloc::format!("{id}: {detail}"))),
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "pass"),
            Some((id, detail)) => write!(f, "fail at {id} ({detail})"),
        }
    }
}

fn check_equal<T: Ring>(lhs: Result<Mat<T>>, rhs: &Mat<T>, id: Identity) -> Option<(Identity, String)> {
    match lhs {
        Err(e) => Some((id, alloc::format!("{e}"))),
        Ok(m) => m
            .first_difference(rhs)
            .map(|(i, j)| (id, alloc::format!("entry ({i}, {j}) differs"))),
    }
}

pub fn verify_certificate<T: Ring>(c: &EquivalenceCertificate<T>) -> VerifyReport {
    let (n, n2) = c.e.dims();
    let (m, m2) = c.f.dims();
    if n != n2 || m != m2 || c.a.dims() != (n, m) || c.b.dims() != (m, n) {
        return VerifyReport {
            failure: Some((
                Identity::Shapes,
                alloc::format!(
                    "E {:?}, F {:?}, A {:?}, B {:?}",
                    c.e.dims(),
                    c.f.dims(),
                    c.a.dims(),
                    c.b.dims()
                ),
            )),
        };
    }
    let failure = check_equal(c.e.mul(&c.e), &c.e, Identity::EIdempotent)
        .or_else(|| check_equal(c.f.mul(&c.f), &c.f, Identity::FIdempotent))
        .or_else(|| check_equal(c.a.mul(&c.b), &c.e, Identity::ABEqualsE))
        .or_else(|| check_equal(c.b.mul(&c.a), &c.f, Identity::BAEqualsF));
    VerifyReport { failure }
}

impl<T: Ring> EquivalenceCertificate<T> {
    pub fn verify(&self) -> VerifyReport {
        verify_certificate(self)
    }

    /// `F ~ E` from `E ~ F`.
    pub fn reversed(&self) -> Self {
        EquivalenceCertificate { e: self.f.clone(), f: self.e.clone(), a: self.b.clone(), b: self.a.clone() }
    }

    /// The identity certificate `E ~ E` with `A = B = E`.
    pub fn identity_of(e: &Mat<T>) -> Self {
        EquivalenceCertificate { e: e.clone(), f: e.clone(), a: e.clone(), b: e.clone() }
    }
}

/// From a split pair `T·S = I_m`, the idempotent `E = S·T` and its
/// certificate `E ~ I_m` with `A = S`, `B = T`.
pub fn make_idempotent<T: Ring>(s: &Mat<T>, t: &Mat<T>) -> Result<EquivalenceCertificate<T>> {
    let ts = t.mul(s)?;
    if !ts.is_identity() {
        return Err(Error::NotSplitPair);
    }
    let e = s.mul(t)?;
    let f = Mat::identity(s.ctx(), s.cols());
    Ok(EquivalenceCertificate { e, f, a: s.clone(), b: t.clone() })
}

/// `E ~ F` and `F ~ G` give `E ~ G` via `A = A1·A2`, `B = B2·B1`.
pub fn compose_certificates<T: Ring>(
    c1: &EquivalenceCertificate<T>,
    c2: &EquivalenceCertificate<T>,
) -> Result<EquivalenceCertificate<T>> {
    if c1.f != c2.e {
        return Err(Error::MiddleMismatch);
    }
    Ok(EquivalenceCertificate {
        e: c1.e.clone(),
        f: c2.f.clone(),
        a: c1.a.mul(&c2.a)?,
        b: c2.b.mul(&c1.b)?,
    })
}

/// `E ~ I_m`: `A·B = E`, `B·A = I_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeCertificate<T: Ring> {
    pub e: Mat<T>,
    pub a: Mat<T>,
    pub b: Mat<T>,
}

impl<T: Ring> FreeCertificate<T> {
    pub fn rank(&self) -> usize {
        self.b.rows()
    }

    pub fn to_equivalence(&self) -> EquivalenceCertificate<T> {
        EquivalenceCertificate {
            e: self.e.clone(),
            f: Mat::identity(self.e.ctx(), self.rank()),
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    pub fn verify(&self) -> VerifyReport {
        verify_certificate(&self.to_equivalence())
    }

    pub fn from_equivalence(c: EquivalenceCertificate<T>) -> Result<Self> {
        if !c.f.is_identity() {
            return Err(Error::InvalidInput("right-hand idempotent is not an identity".into()));
        }
        Ok(FreeCertificate { e: c.e, a: c.a, b: c.b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::test_support::pm;
    use crate::poly::test_support::ctx;
    use crate::poly::MultiPoly;

    fn uw() -> (Mat<MultiPoly>, Mat<MultiPoly>) {
        let c = ctx(&["x", "y"]);
        (pm(&c, &[&["1+x*y"], &["y^2"], &["x"]]), pm(&c, &[&["1", "0", "-y"]]))
    }

    #[test]
    fn identity_one_by_one_passes() {
        let i1 = Mat::<crate::Rational>::identity(&(), 1);
        let c = EquivalenceCertificate { e: i1.clone(), f: i1.clone(), a: i1.clone(), b: i1 };
        assert!(c.verify().passed());
    }

    #[test]
    fn uw_certificate_and_corruption() {
        let (u, w) = uw();
        let cert = make_idempotent(&u, &w).unwrap();
        assert!(cert.verify().passed());
        assert_eq!(cert.e.trace(), MultiPoly::one(u.ctx()));
        let mut bad = cert.clone();
        bad.b.set(0, 0, MultiPoly::zero(u.ctx()));
        let report = bad.verify();
        assert_eq!(report.failure.as_ref().unwrap().0, Identity::ABEqualsE);
        let mut bad_f = cert.clone();
        bad_f.f.set(0, 0, MultiPoly::from_int(u.ctx(), 2));
        assert_eq!(bad_f.verify().failure.unwrap().0, Identity::FIdempotent);
    }

    #[test]
    fn corrupting_b_so_only_ba_fails() {
        // E = diag(1, 0), A = (1, 0)^T, B = (1, 0); changing F to [0] breaks only B·A = F
        let c = ctx(&["x"]);
        let e = pm(&c, &[&["1", "0"], &["0", "0"]]);
        let cert = EquivalenceCertificate {
            e,
            f: pm(&c, &[&["0"]]),
            a: pm(&c, &[&["1"], &["0"]]),
            b: pm(&c, &[&["1", "0"]]),
        };
        assert_eq!(cert.verify().failure.unwrap().0, Identity::BAEqualsF);
    }

    #[test]
    fn make_idempotent_examples() {
        let c = ctx(&["x"]);
        let cert = make_idempotent(&pm(&c, &[&["1"], &["0"]]), &pm(&c, &[&["1", "0"]])).unwrap();
        assert_eq!(cert.e, pm(&c, &[&["1", "0"], &["0", "0"]]));
        let i3 = Mat::<MultiPoly>::identity(&c, 3);
        assert_eq!(make_idempotent(&i3, &i3).unwrap().e, i3);
        assert_eq!(
            make_idempotent(&pm(&c, &[&["x"]]), &pm(&c, &[&["1"]])),
            Err(Error::NotSplitPair)
        );
    }

    #[test]
    fn compose_examples() {
        let c = ctx(&["x"]);
        let cert = make_idempotent(&pm(&c, &[&["1"], &["0"]]), &pm(&c, &[&["1", "0"]])).unwrap();
        let id = EquivalenceCertificate::identity_of(&cert.f);
        let composed = compose_certificates(&cert, &id).unwrap();
        assert!(composed.verify().passed());
        assert_eq!(composed.e, cert.e);
        assert_eq!(
            compose_certificates(&cert, &cert).unwrap_err(),
            Error::MiddleMismatch
        );
        // E·A = A·F for every verified certificate
        let (u, w) = uw();
        let cert = make_idempotent(&u, &w).unwrap();
        assert_eq!(cert.e.mul(&cert.a).unwrap(), cert.a.mul(&cert.f).unwrap());
    }

    #[test]
    fn composing_random_split_pairs() {
        use rand::{Rng, SeedableRng};
        let c = ctx(&["x"]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            // S = (1, s)^T, T = (1, 0): T·S = 1 for any s
            let s: i64 = rng.gen_range(-3..4);
            let s_col = pm(&c, &[&["1"], &[&alloc::format!("{s}*x")]]);
            let t_row = pm(&c, &[&["1", "0"]]);
            let c1 = make_idempotent(&s_col, &t_row).unwrap();
            // E ~ [1] then [1] ~ [1] via the unit 1
            let one = Mat::<MultiPoly>::identity(&c, 1);
            let c2 = EquivalenceCertificate { e: one.clone(), f: one.clone(), a: one.clone(), b: one };
            let comp = compose_certificates(&c1, &c2).unwrap();
            assert!(comp.verify().passed());
            assert!(comp.reversed().verify().passed());
        }
    }
}
