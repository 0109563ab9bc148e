//! JSON encodings of polynomials, fractions, matrices, points and
//! certificates.
//!
//! Every structure carries its variable list, coefficients are exact `"p/q"`
//! strings and terms are written in descending lexicographic order, so
//! encoding is canonical and byte-for-byte deterministic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use qs_core::patching::TranslationCertificate;
use qs_core::rational::{self, Rational};
use qs_core::solver::{Cover, SolverConfig};
use qs_core::{EquivalenceCertificate, Error, Fraction, FreeCertificate, Mat, MultiPoly, PointIdeal, Result, VarContext};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FractionJson {
    pub num: PolyJson,
    pub den: PolyJson,
    /// The polynomial variable of the monic localization, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub var: Option<String>,
}

/// A matrix entry: a fraction, or a polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Fraction(FractionJson),
    Poly(PolyJson),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatJson {
    pub rows: usize,
    pub cols: usize,
    /// Context of the entries; optional on input unless the matrix is empty.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    pub point: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    #[serde(rename = "E")]
    pub e: MatJson,
    #[serde(rename = "F")]
    pub f: MatJson,
    #[serde(rename = "A")]
    pub a: MatJson,
    #[serde(rename = "B")]
    pub b: MatJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranslationJson {
    #[serde(rename = "E")]
    pub e: MatJson,
    pub j: PolyJson,
    #[serde(rename = "A")]
    pub a: MatJson,
    #[serde(rename = "B")]
    pub b: MatJson,
    /// The translated variable.
    pub x: String,
    /// The translation parameter.
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigJson {
    pub max_point_height: u64,
    pub degree_escalation_ceiling: u32,
    pub max_patch_points: usize,
    /// Report visited points on standard error.
    pub trace: bool,
}

impl Default for ConfigJson {
    fn default() -> Self {
        let c = SolverConfig::default();
        ConfigJson {
            max_point_height: c.max_point_height,
            degree_escalation_ceiling: c.degree_escalation_ceiling,
            max_patch_points: c.max_patch_points,
            trace: false,
        }
    }
}

impl ConfigJson {
    pub fn solver_config(&self) -> Result<SolverConfig> {
        if self.max_point_height == 0 || self.max_patch_points == 0 {
            return Err(Error::InvalidInput("configuration bounds must be positive".into()));
        }
        Ok(SolverConfig {
            max_point_height: self.max_point_height,
            degree_escalation_ceiling: self.degree_escalation_ceiling,
            max_patch_points: self.max_patch_points,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalJson {
    pub point: BTreeMap<String, String>,
    #[serde(rename = "A")]
    pub a: MatJson,
    #[serde(rename = "B")]
    pub b: MatJson,
}

/// Local free certificates of the input idempotent, with Bézout
/// coefficients for their patching denominators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverJson {
    pub var: String,
    pub locals: Vec<LocalJson>,
    pub bezout: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BezoutJson {
    pub coefficients: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsJson {
    pub generators: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HorrocksInputJson {
    #[serde(rename = "E")]
    pub e: MatJson,
    /// Trivialization over the monic localization; computed when omitted.
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<MatJson>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<MatJson>,
    pub var: String,
}

pub fn poly_to_json(p: &MultiPoly) -> PolyJson {
    PolyJson {
        vars: p.ctx().names().to_vec(),
        terms: p.terms().rev().map(|(e, c)| TermJson { c: rational::format(c), e: e.clone() }).collect(),
    }
}

pub fn context(vars: &[String]) -> Result<VarContext> {
    VarContext::new(vars)
}

/// Decodes a polynomial; with `ctx` given, it is embedded there.
pub fn poly_from_json(j: &PolyJson, ctx: Option<&VarContext>) -> Result<MultiPoly> {
    let own = context(&j.vars)?;
    let terms = j
        .terms
        .iter()
        .map(|t| Ok((t.e.clone(), rational::parse(&t.c)?)))
        .collect::<Result<Vec<_>>>()?;
    let p = MultiPoly::from_terms(&own, terms)?;
    match ctx {
        Some(c) if *c != own => p.embed(c),
        _ => Ok(p),
    }
}

pub fn fraction_to_json(f: &Fraction, var: Option<&str>) -> EntryJson {
    if f.is_polynomial() {
        return EntryJson::Poly(poly_to_json(f.num()));
    }
    EntryJson::Fraction(FractionJson {
        num: poly_to_json(f.num()),
        den: poly_to_json(f.den()),
        var: var.map(str::to_string),
    })
}

fn entry_to_fraction(j: &EntryJson, ctx: &VarContext) -> Result<Fraction> {
    match j {
        EntryJson::Poly(p) => Ok(Fraction::from_poly(poly_from_json(p, Some(ctx))?)),
        EntryJson::Fraction(f) => {
            if let Some(v) = &f.var {
                ctx.index_of(v)?;
            }
            Fraction::new(poly_from_json(&f.num, Some(ctx))?, poly_from_json(&f.den, Some(ctx))?)
        }
    }
}

fn matrix_context(j: &MatJson) -> Result<VarContext> {
    if let Some(vars) = &j.vars {
        return context(vars);
    }
    match j.entries.first() {
        Some(EntryJson::Poly(p)) => context(&p.vars),
        Some(EntryJson::Fraction(f)) => context(&f.num.vars),
        None => Err(Error::Parse("an empty matrix needs a \"vars\" list".into())),
    }
}

pub fn poly_mat_to_json(m: &Mat<MultiPoly>) -> MatJson {
    MatJson {
        rows: m.rows(),
        cols: m.cols(),
        vars: Some(m.ctx().names().to_vec()),
        entries: m.entries().iter().map(|p| EntryJson::Poly(poly_to_json(p))).collect(),
    }
}

pub fn fraction_mat_to_json(m: &Mat<Fraction>, var: Option<&str>) -> MatJson {
    MatJson {
        rows: m.rows(),
        cols: m.cols(),
        vars: Some(m.ctx().names().to_vec()),
        entries: m.entries().iter().map(|f| fraction_to_json(f, var)).collect(),
    }
}

/// Decodes a matrix of fractions, in `ctx` when given.
pub fn fraction_mat_from_json(j: &MatJson, ctx: Option<&VarContext>) -> Result<Mat<Fraction>> {
    let ctx = match ctx {
        Some(c) => c.clone(),
        None => matrix_context(j)?,
    };
    if j.entries.len() != j.rows * j.cols {
        return Err(Error::Parse(format!("{}x{} matrix with {} entries", j.rows, j.cols, j.entries.len())));
    }
    let entries = j.entries.iter().map(|e| entry_to_fraction(e, &ctx)).collect::<Result<Vec<_>>>()?;
    Mat::from_vec(&ctx, j.rows, j.cols, entries)
}

pub fn poly_mat_from_json(j: &MatJson, ctx: Option<&VarContext>) -> Result<Mat<MultiPoly>> {
    fraction_mat_from_json(j, ctx)?
        .to_polys()
        .ok_or_else(|| Error::InvalidInput("expected a polynomial matrix".into()))
}

pub fn point_to_json(p: &PointIdeal) -> PointJson {
    let ctx = p.ctx();
    PointJson { point: p.point().iter().map(|(i, v)| (ctx.name(*i).to_string(), rational::format(v))).collect() }
}

pub fn point_from_map(point: &BTreeMap<String, String>, ctx: &VarContext) -> Result<PointIdeal> {
    let parsed = point.iter().map(|(k, v)| Ok((k.as_str(), rational::parse(v)?))).collect::<Result<Vec<(&str, Rational)>>>()?;
    PointIdeal::new(ctx, &parsed)
}

pub fn certificate_to_json(c: &EquivalenceCertificate<MultiPoly>) -> CertificateJson {
    CertificateJson {
        e: poly_mat_to_json(&c.e),
        f: poly_mat_to_json(&c.f),
        a: poly_mat_to_json(&c.a),
        b: poly_mat_to_json(&c.b),
    }
}

pub fn fraction_certificate_to_json(c: &FreeCertificate<Fraction>, var: Option<&str>) -> CertificateJson {
    let c = c.to_equivalence();
    CertificateJson {
        e: fraction_mat_to_json(&c.e, var),
        f: fraction_mat_to_json(&c.f, var),
        a: fraction_mat_to_json(&c.a, var),
        b: fraction_mat_to_json(&c.b, var),
    }
}

/// Decodes a certificate over the fraction field; all four matrices share
/// the context of `E`.
pub fn certificate_from_json(j: &CertificateJson) -> Result<EquivalenceCertificate<Fraction>> {
    let ctx = matrix_context(&j.e)?;
    let m = |x: &MatJson| fraction_mat_from_json(x, Some(&ctx));
    Ok(EquivalenceCertificate { e: m(&j.e)?, f: m(&j.f)?, a: m(&j.a)?, b: m(&j.b)? })
}

pub fn translation_to_json(t: &TranslationCertificate) -> TranslationJson {
    TranslationJson {
        e: poly_mat_to_json(&t.e),
        j: poly_to_json(&t.j),
        a: poly_mat_to_json(&t.a),
        b: poly_mat_to_json(&t.b),
        x: t.ctx().name(t.x).to_string(),
        y: t.ctx().name(t.y).to_string(),
    }
}

pub fn translation_from_json(j: &TranslationJson) -> Result<TranslationCertificate> {
    let ctx = matrix_context(&j.e)?;
    let m = |x: &MatJson| poly_mat_from_json(x, Some(&ctx));
    Ok(TranslationCertificate {
        e: m(&j.e)?,
        j: poly_from_json(&j.j, Some(&ctx))?,
        a: m(&j.a)?,
        b: m(&j.b)?,
        x: ctx.index_of(&j.x)?,
        y: ctx.index_of(&j.y)?,
    })
}

/// Decodes a cover of the idempotent `e`.
pub fn cover_from_json(j: &CoverJson, e: &Mat<MultiPoly>) -> Result<Cover> {
    let ctx = e.ctx();
    let ef = e.to_fractions();
    let locals = j
        .locals
        .iter()
        .map(|l| {
            let local = FreeCertificate {
                e: ef.clone(),
                a: fraction_mat_from_json(&l.a, Some(ctx))?,
                b: fraction_mat_from_json(&l.b, Some(ctx))?,
            };
            Ok((point_from_map(&l.point, ctx)?, local))
        })
        .collect::<Result<Vec<_>>>()?;
    let bezout = j.bezout.iter().map(|u| poly_from_json(u, Some(ctx))).collect::<Result<Vec<_>>>()?;
    Ok(Cover { var: ctx.index_of(&j.var)?, locals, bezout })
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}
