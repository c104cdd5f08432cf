//! JSON documents for every value the command line and the C ABI exchange.
//!
//! Cyclotomic numbers are `{"n": conductor, "terms": [[exponent, "num/den"], ...]}`
//! in the canonical power basis, so equal numbers always print identically.
//! Representations carry their group inline; when a document is read with a
//! group already in hand, an embedded group must agree with it.

use std::str::FromStr;

use num_rational::BigRational;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::brauer::{BrauerDecomposition, BrauerTerm, CertificateReport, DevissageCertificate, Trichotomy};
use crate::cyclo::{CycError, CycNum, GaloisAut, SubfieldSpec};
use crate::descent::{ClassScan, DescentWitness, HomDimCheck, MultOneWitness};
use crate::grp::{FiniteGroup, Group, GroupError, Perm, Subgroup, DEFAULT_ORDER_BOUND};
use crate::harness::{HarnessReport, HarnessStatus};
use crate::linalg::Matrix;
use crate::rep::{Character, MatrixRep, RepError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Malformed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

fn bad(msg: impl Into<String>) -> IoError {
    IoError::Malformed(msg.into())
}

pub fn parse(text: &str) -> Result<Value, IoError> {
    serde_json::from_str(text).map_err(|e| bad(e.to_string()))
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, IoError> {
    v.get(key).ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64, IoError> {
    v.as_u64().ok_or_else(|| bad(format!("{what} must be a non-negative integer")))
}

fn as_i64(v: &Value, what: &str) -> Result<i64, IoError> {
    v.as_i64().ok_or_else(|| bad(format!("{what} must be an integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, IoError> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn as_bool(v: &Value, what: &str) -> Result<bool, IoError> {
    v.as_bool().ok_or_else(|| bad(format!("{what} must be a boolean")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, IoError> {
    Ok(as_u64(v, what)? as usize)
}

// ---- numbers and fields ----

pub fn cyc_to_json(a: &CycNum) -> Value {
    let terms: Vec<Value> = a.terms().into_iter().map(|(e, c)| json!([e, c.to_string()])).collect();
    json!({"n": a.conductor(), "terms": terms})
}

/// Integers and `"num/den"` strings are accepted as rational shorthands.
pub fn cyc_from_json(v: &Value) -> Result<CycNum, IoError> {
    if let Some(i) = v.as_i64() {
        return Ok(CycNum::from(i));
    }
    if let Some(s) = v.as_str() {
        return Ok(CycNum::from_rational(parse_rational(s)?));
    }
    let n = as_u64(field(v, "n")?, "n")?;
    if n == 0 {
        return Err(bad("conductor must be positive"));
    }
    let mut terms = Vec::new();
    let mut last: Option<u64> = None;
    for t in as_array(field(v, "terms")?, "terms")? {
        let pair = as_array(t, "term")?;
        if pair.len() != 2 {
            return Err(bad("a term is [exponent, \"num/den\"]"));
        }
        let e = as_u64(&pair[0], "exponent")?;
        if e >= n || last.is_some_and(|l| l >= e) {
            return Err(bad("exponents must be strictly increasing and below the conductor"));
        }
        last = Some(e);
        let c = match &pair[1] {
            Value::String(s) => parse_rational(s)?,
            other => BigRational::from_integer(as_i64(other, "coefficient")?.into()),
        };
        terms.push((e, c));
    }
    Ok(CycNum::from_terms(n, &terms))
}

fn parse_rational(s: &str) -> Result<BigRational, IoError> {
    let q = BigRational::from_str(s.trim()).map_err(|_| bad(format!("not a rational number: {s:?}")))?;
    Ok(q)
}

pub fn aut_to_json(s: &GaloisAut) -> Value {
    json!({"n": s.conductor(), "k": s.unit()})
}

pub fn aut_from_json(v: &Value) -> Result<GaloisAut, IoError> {
    let n = as_u64(field(v, "n")?, "n")?;
    let k = as_i64(field(v, "k")?, "k")?;
    Ok(GaloisAut::new(n, k)?)
}

pub fn subfield_to_json(k: &SubfieldSpec) -> Value {
    json!({"n": k.conductor(), "stabilizer": k.stabilizer()})
}

/// `{"n": n, "stabilizer": [...]}`; the list may be any generating set.
/// The strings `"Q"` and `"Q(zeta_n)"` are accepted as shorthands.
pub fn subfield_from_json(v: &Value) -> Result<SubfieldSpec, IoError> {
    if let Some(s) = v.as_str() {
        let s = s.trim();
        if s == "Q" {
            return Ok(SubfieldSpec::rationals());
        }
        if let Some(n) = s.strip_prefix("Q(zeta_").and_then(|r| r.strip_suffix(')')) {
            let n: u64 = n.parse().map_err(|_| bad(format!("bad field name {s:?}")))?;
            if n == 0 {
                return Err(bad("conductor must be positive"));
            }
            return Ok(SubfieldSpec::cyclotomic(n));
        }
        return Err(bad(format!("bad field name {s:?}")));
    }
    let n = as_u64(field(v, "n")?, "n")?;
    let gens = as_array(field(v, "stabilizer")?, "stabilizer")?
        .iter()
        .map(|x| as_u64(x, "stabilizer entry"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubfieldSpec::new(n, &gens)?)
}

// ---- groups ----

pub fn perm_to_json(p: &Perm) -> Value {
    json!(p.images())
}

pub fn perm_from_json(v: &Value) -> Result<Perm, IoError> {
    let images = as_array(v, "permutation")?
        .iter()
        .map(|x| as_usize(x, "permutation image"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Perm::new(images)?)
}

pub fn group_to_json(g: &Group) -> Value {
    let mut m = Map::new();
    m.insert("degree".into(), json!(g.degree()));
    m.insert("generators".into(), Value::Array(g.generator_perms().iter().map(perm_to_json).collect()));
    if let Some(name) = g.name() {
        m.insert("name".into(), json!(name));
    }
    Value::Object(m)
}

/// `{"degree", "generators", "name"?}`, or a bare name such as `"S3"`.
pub fn group_from_json(v: &Value, bound: usize) -> Result<Group, IoError> {
    if let Some(name) = v.as_str() {
        let g = crate::grp::named::by_name(name).ok_or_else(|| bad(format!("unknown group name {name:?}")))?;
        if g.order() > bound {
            return Err(GroupError::OrderBoundExceeded(bound).into());
        }
        return Ok(g);
    }
    let degree = as_usize(field(v, "degree")?, "degree")?;
    let gens = as_array(field(v, "generators")?, "generators")?
        .iter()
        .map(perm_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    let name = match v.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(bad("name must be a string")),
    };
    Ok(FiniteGroup::from_generators_bounded(degree, gens, name, bound)?)
}

/// Reads an embedded group, or falls back to `ctx` when the document only
/// names a group by reference (a string) or omits it.
fn group_in_context(v: Option<&Value>, ctx: Option<&Group>) -> Result<Group, IoError> {
    match (v, ctx) {
        (Some(obj @ Value::Object(_)), ctx) => {
            let g = group_from_json(obj, ctx.map_or(DEFAULT_ORDER_BOUND, |c| c.order().max(1)))?;
            match ctx {
                Some(c) if !c.same_as(&g) => Err(bad("embedded group differs from the group supplied")),
                Some(c) => Ok(c.clone()),
                None => Ok(g),
            }
        }
        (Some(name @ Value::String(_)), None) => group_from_json(name, DEFAULT_ORDER_BOUND),
        (_, Some(c)) => Ok(c.clone()),
        (_, None) => Err(bad("missing field \"group\"")),
    }
}

pub fn subgroup_to_json(h: &Subgroup) -> Value {
    json!({
        "group": group_to_json(h.parent()),
        "generators": h.generator_perms().iter().map(perm_to_json).collect::<Vec<_>>(),
    })
}

pub fn subgroup_from_json(v: &Value, ctx: Option<&Group>) -> Result<Subgroup, IoError> {
    let parent = group_in_context(v.get("group"), ctx)?;
    let gens = as_array(field(v, "generators")?, "generators")?
        .iter()
        .map(perm_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Subgroup::from_perms(&parent, &gens)?)
}

// ---- matrices, representations, characters ----

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(cyc_to_json).collect())).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix, IoError> {
    let rows = as_array(v, "matrix")?
        .iter()
        .map(|r| as_array(r, "matrix row")?.iter().map(cyc_from_json).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(first) = rows.first() {
        if rows.iter().any(|r| r.len() != first.len()) {
            return Err(bad("matrix rows have different lengths"));
        }
    }
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn rep_to_json(rho: &MatrixRep) -> Value {
    let images: Map<String, Value> = rho
        .generator_images()
        .iter()
        .enumerate()
        .map(|(i, m)| (i.to_string(), matrix_to_json(m)))
        .collect();
    json!({"group": group_to_json(rho.group()), "rank": rho.rank(), "images": images})
}

/// The images are checked to define a homomorphism.
pub fn rep_from_json(v: &Value, ctx: Option<&Group>) -> Result<MatrixRep, IoError> {
    let g = group_in_context(v.get("group"), ctx)?;
    let rank = as_usize(field(v, "rank")?, "rank")?;
    let images = field(v, "images")?;
    let ngens = g.generators().len();
    let mut gens = Vec::with_capacity(ngens);
    for i in 0..ngens {
        let m = match images {
            Value::Object(map) => map.get(&i.to_string()),
            Value::Array(list) => list.get(i),
            _ => return Err(bad("images must be an object keyed by generator index")),
        }
        .ok_or_else(|| bad(format!("no image for generator {i}")))?;
        let m = matrix_from_json(m)?;
        gens.push(if rank == 0 { Matrix::zeros(0, 0) } else { m });
    }
    let count = match images {
        Value::Object(map) => map.len(),
        Value::Array(list) => list.len(),
        _ => 0,
    };
    if count != ngens {
        return Err(bad(format!("expected {ngens} generator images, found {count}")));
    }
    Ok(MatrixRep::with_rank(&g, rank, gens)?)
}

pub fn character_to_json(chi: &Character) -> Value {
    Value::Array(chi.values().iter().map(cyc_to_json).collect())
}

pub fn character_from_json(v: &Value, g: &Group) -> Result<Character, IoError> {
    let values = as_array(v, "character")?.iter().map(cyc_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(Character::new(g, values)?)
}

/// Class representatives (as permutations), sizes and the full table.
pub fn char_table_to_json(g: &Group, table: &[Character]) -> Value {
    json!({
        "group": group_to_json(g),
        "class_reps": g.class_reps().iter().map(|&r| perm_to_json(g.element(r))).collect::<Vec<_>>(),
        "class_sizes": g.class_sizes(),
        "characters": table.iter().map(character_to_json).collect::<Vec<_>>(),
    })
}

// ---- Brauer and dévissage ----

pub fn decomposition_to_json(d: &BrauerDecomposition) -> Value {
    let terms: Vec<Value> = d
        .terms
        .iter()
        .map(|t| json!({"H": subgroup_to_json(&t.h), "psi": character_to_json(&t.psi), "coeff": t.coeff}))
        .collect();
    json!({"group": group_to_json(d.target.group()), "target": character_to_json(&d.target), "terms": terms})
}

pub fn decomposition_from_json(v: &Value, ctx: Option<&Group>) -> Result<BrauerDecomposition, IoError> {
    let g = group_in_context(v.get("group"), ctx)?;
    let target = character_from_json(field(v, "target")?, &g)?;
    let terms = as_array(field(v, "terms")?, "terms")?
        .iter()
        .map(|t| {
            let h = subgroup_from_json(field(t, "H")?, Some(&g))?;
            let psi = character_from_json(field(t, "psi")?, &h.group())?;
            let coeff = as_i64(field(t, "coeff")?, "coeff")?;
            Ok(BrauerTerm { h, psi, coeff })
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    Ok(BrauerDecomposition { target, terms })
}

pub fn trichotomy_to_json(t: &Trichotomy) -> Value {
    match t {
        Trichotomy::I { constituents } => json!({
            "case": "I",
            "t": constituents.len(),
            "constituents": constituents.iter().map(character_to_json).collect::<Vec<_>>(),
        }),
        Trichotomy::II { constituent } => json!({"case": "II", "constituent": character_to_json(constituent)}),
        Trichotomy::III { constituent, e } => {
            json!({"case": "III", "e": e, "constituent": character_to_json(constituent)})
        }
    }
}

pub fn certificate_to_json(c: &DevissageCertificate) -> Value {
    let pairs: Vec<Value> = c
        .pairs
        .iter()
        .map(|(h, sigma)| json!({"H": subgroup_to_json(h), "sigma": rep_to_json(sigma)}))
        .collect();
    json!({
        "group": group_to_json(c.group()),
        "rho": rep_to_json(&c.rho),
        "N": subgroup_to_json(&c.n),
        "t": c.t,
        "s": c.s,
        "pairs": pairs,
    })
}

/// Reads a certificate without checking any of its mathematical claims;
/// that is the job of `verify_certificate`.
pub fn certificate_from_json(v: &Value, ctx: Option<&Group>) -> Result<DevissageCertificate, IoError> {
    let g = group_in_context(v.get("group"), ctx)?;
    let rho = rep_from_json(field(v, "rho")?, Some(&g))?;
    let n = subgroup_from_json(field(v, "N")?, Some(&g))?;
    let t = as_usize(field(v, "t")?, "t")?;
    let s = as_usize(field(v, "s")?, "s")?;
    let pairs = as_array(field(v, "pairs")?, "pairs")?
        .iter()
        .map(|p| {
            let h = subgroup_from_json(field(p, "H")?, Some(&g))?;
            let sigma = rep_from_json(field(p, "sigma")?, Some(&h.group()))?;
            Ok((h, sigma))
        })
        .collect::<Result<Vec<_>, IoError>>()?;
    if pairs.len() != s || t > s {
        return Err(bad(format!("need t ≤ s = number of pairs; got t={t}, s={s}, {} pairs", pairs.len())));
    }
    Ok(DevissageCertificate { rho, n, pairs, t, s })
}

pub fn certificate_report_to_json(r: &CertificateReport) -> Value {
    json!({
        "ok": r.ok(),
        "contains_n": r.contains_n,
        "irreducible": r.irreducible,
        "restriction_irreducible": r.restriction_irreducible,
        "identity": r.identity,
        "failures": r.failures,
    })
}

pub fn certificate_report_from_json(v: &Value) -> Result<CertificateReport, IoError> {
    Ok(CertificateReport {
        contains_n: as_bool(field(v, "contains_n")?, "contains_n")?,
        irreducible: as_bool(field(v, "irreducible")?, "irreducible")?,
        restriction_irreducible: as_bool(field(v, "restriction_irreducible")?, "restriction_irreducible")?,
        identity: as_bool(field(v, "identity")?, "identity")?,
        failures: as_array(field(v, "failures")?, "failures")?
            .iter()
            .map(|f| f.as_str().map(str::to_string).ok_or_else(|| bad("failures must be strings")))
            .collect::<Result<Vec<_>, _>>()?,
    })
}

// ---- descent ----

pub fn mult_one_to_json(w: &MultOneWitness) -> Value {
    json!({"class_rep": perm_to_json(&w.element), "alpha": cyc_to_json(&w.alpha)})
}

pub fn mult_one_from_json(v: &Value, g: &Group) -> Result<MultOneWitness, IoError> {
    let element = perm_from_json(field(v, "class_rep")?)?;
    let class_rep = g.index_of(&element).ok_or_else(|| bad("class_rep is not an element of the group"))?;
    let alpha = cyc_from_json(field(v, "alpha")?)?;
    Ok(MultOneWitness { class_rep, element, alpha })
}

pub fn scan_to_json(scan: &[ClassScan]) -> Value {
    let classes: Vec<Value> = scan
        .iter()
        .map(|c| {
            json!({
                "class_rep": perm_to_json(&c.element),
                "has_simple_root": c.has_simple_root,
                "simple_eigenvalues": c.simple_eigenvalues.iter().map(cyc_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    let found = scan.iter().any(|c| c.has_simple_root);
    let verdict = if found {
        "multiplicity-one eigenvalue found"
    } else {
        "no multiplicity-one eigenvalue in any class"
    };
    json!({"classes": classes, "found": found, "report": verdict})
}

pub fn descent_to_json(d: &DescentWitness) -> Value {
    json!({
        "b": matrix_to_json(&d.b),
        "base": subfield_to_json(&d.base),
        "original": rep_to_json(&d.original),
        "descended": rep_to_json(&d.descended),
    })
}

pub fn descent_from_json(v: &Value, ctx: Option<&Group>) -> Result<DescentWitness, IoError> {
    let descended = rep_from_json(field(v, "descended")?, ctx)?;
    let g = descended.group().clone();
    let b = matrix_from_json(field(v, "b")?)?;
    let original = match v.get("original") {
        Some(o) => rep_from_json(o, Some(&g))?,
        None => {
            let inv = b.inverse().ok_or_else(|| bad("b is not invertible"))?;
            descended.conjugate_by(&inv)?
        }
    };
    Ok(DescentWitness { original, base: subfield_from_json(field(v, "base")?)?, b, descended })
}

pub fn hom_check_to_json(h: &HomDimCheck) -> Value {
    json!({"dim_base": h.dim_base, "dim_extension": h.dim_extension, "holds": h.holds()})
}

// ---- harness ----

pub fn harness_report_to_json(r: &HarnessReport) -> Value {
    let status = match &r.status {
        HarnessStatus::Complete => json!({"state": "complete"}),
        HarnessStatus::WitnessUnavailable { pairs } => json!({"state": "WitnessUnavailable", "pairs": pairs}),
    };
    json!({
        "passed": r.passed(),
        "status": status,
        "certificate": certificate_to_json(&r.certificate),
        "certificate_report": certificate_report_to_json(&r.certificate_report),
        "trace_fields": r.trace_fields.iter().map(subfield_to_json).collect::<Vec<_>>(),
        "witnesses": r.witnesses.iter().map(|w| w.as_ref().map_or(Value::Null, mult_one_to_json)).collect::<Vec<_>>(),
        "field": subfield_to_json(&r.field),
        "twist": aut_to_json(&r.twist),
        "identity_check": r.identity_check,
        "twisted_identity_check": r.twisted_identity_check,
        "descents": r.descents.iter().map(descent_to_json).collect::<Vec<_>>(),
        "final_rep": r.final_rep.as_ref().map_or(Value::Null, rep_to_json),
        "final_check": r.final_check,
    })
}

pub fn harness_report_from_json(v: &Value) -> Result<HarnessReport, IoError> {
    let certificate = certificate_from_json(field(v, "certificate")?, None)?;
    let g = certificate.group().clone();
    let status_v = field(v, "status")?;
    let status = match field(status_v, "state")?.as_str() {
        Some("complete") => HarnessStatus::Complete,
        Some("WitnessUnavailable") => HarnessStatus::WitnessUnavailable {
            pairs: as_array(field(status_v, "pairs")?, "pairs")?
                .iter()
                .map(|p| as_usize(p, "pair index"))
                .collect::<Result<Vec<_>, _>>()?,
        },
        _ => return Err(bad("unknown harness state")),
    };
    let witnesses = as_array(field(v, "witnesses")?, "witnesses")?
        .iter()
        .zip(&certificate.pairs)
        .map(|(w, (h, _))| if w.is_null() { Ok(None) } else { mult_one_from_json(w, &h.group()).map(Some) })
        .collect::<Result<Vec<_>, _>>()?;
    let descents = as_array(field(v, "descents")?, "descents")?
        .iter()
        .zip(&certificate.pairs)
        .map(|(d, (h, _))| descent_from_json(d, Some(&h.group())))
        .collect::<Result<Vec<_>, _>>()?;
    let final_rep = match field(v, "final_rep")? {
        Value::Null => None,
        other => Some(rep_from_json(other, Some(&g))?),
    };
    Ok(HarnessReport {
        certificate_report: certificate_report_from_json(field(v, "certificate_report")?)?,
        trace_fields: as_array(field(v, "trace_fields")?, "trace_fields")?
            .iter()
            .map(subfield_from_json)
            .collect::<Result<Vec<_>, _>>()?,
        witnesses,
        field: subfield_from_json(field(v, "field")?)?,
        twist: aut_from_json(field(v, "twist")?)?,
        identity_check: as_bool(field(v, "identity_check")?, "identity_check")?,
        twisted_identity_check: as_bool(field(v, "twisted_identity_check")?, "twisted_identity_check")?,
        descents,
        final_rep,
        final_check: as_bool(field(v, "final_check")?, "final_check")?,
        status,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::named;

    #[test]
    fn cyc_round_trip_and_format() {
        let a = &CycNum::zeta(3) + &CycNum::from_ratio(1, 2);
        let v = cyc_to_json(&a);
        assert_eq!(v, json!({"n": 3, "terms": [[0, "1/2"], [1, "1"]]}));
        assert_eq!(cyc_from_json(&v).unwrap(), a);
        assert_eq!(cyc_from_json(&json!({"n": 1, "terms": []})).unwrap(), CycNum::zero());
        assert!(cyc_from_json(&json!({"n": 3, "terms": [[1, "1"], [0, "1"]]})).is_err());
        assert!(cyc_from_json(&json!({"n": 3, "terms": [[0, "x"]]})).is_err());
    }

    #[test]
    fn group_and_rep_round_trip() {
        let g = named::s3();
        let g2 = group_from_json(&group_to_json(&g), 100).unwrap();
        assert!(g.same_as(&g2));
        let a3 = named::alternating_in(&g);
        assert_eq!(subgroup_from_json(&subgroup_to_json(&a3), Some(&g)).unwrap(), a3);
        let rho = MatrixRep::permutation(&g);
        let back = rep_from_json(&rep_to_json(&rho), None).unwrap();
        assert!(back.same_matrices(&rho));
        assert!(matches!(
            group_from_json(&group_to_json(&named::symmetric(4)), 10),
            Err(IoError::Group(GroupError::OrderBoundExceeded(10)))
        ));
    }

    #[test]
    fn rep_images_must_be_a_homomorphism() {
        let g = named::s3();
        let mut v = rep_to_json(&MatrixRep::permutation(&g));
        v["images"]["0"] = json!([[1, 0, 0], [0, 1, 0], [0, 0, 2]]);
        assert!(matches!(rep_from_json(&v, None), Err(IoError::Rep(_))));
    }
}
