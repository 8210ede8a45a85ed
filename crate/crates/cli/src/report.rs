//! JSON encodings of library values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use symcirc::alexander::TwistedAlexander;
use symcirc::covers::FiniteHom;
use symcirc::exactalg::LaurentPoly;
use symcirc::homology::{BundleInvariants, H1Data, PositiveTerm};
use symcirc::obstruction::{QuotientRecord, Verdict};
use symcirc::swbridge::{coefficient_sum, SwPolynomial, SwScale};

pub const SCHEMA_VERSION: u32 = 1;

/// Integers that fit in `i64` become numbers, larger ones decimal strings.
pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn bigs(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

pub fn rational(x: &BigRational) -> Value {
    json!(x.to_string())
}

/// Sorted `(exponent vector, coefficient)` terms.
pub fn poly(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p.terms().iter().map(|(e, c)| json!([e.to_vec(), big(c)])).collect();
    json!({
        "vars": p.vars().to_vec(),
        "terms": terms,
        "text": p.to_string(),
    })
}

pub fn sw(s: &SwPolynomial) -> Value {
    let support: Vec<Value> = s.support().iter().map(|(pt, c)| json!([pt, big(c)])).collect();
    json!({
        "moduli": s.moduli(),
        "scale": match s.scale() {
            SwScale::Half => "half",
            SwScale::Full => "full",
        },
        "support": support,
        "coefficient_sum": big(&coefficient_sum(s)),
    })
}

pub fn hom(a: &FiniteHom) -> Value {
    json!({
        "group": a.target.name(),
        "order": a.order(),
        "images": a.images,
    })
}

pub fn h1(h: &H1Data) -> Value {
    json!({
        "free_rank": h.free_rank(),
        "torsion": bigs(h.torsion()),
    })
}

pub fn bundle(b: &BundleInvariants) -> Value {
    json!({
        "b1": b.b1,
        "b2": b.b2,
        "b2_plus": b.b2_plus,
        "b2_minus": b.b2_minus,
        "signature": b.signature,
    })
}

pub fn twisted(t: &TwistedAlexander) -> Value {
    match t {
        TwistedAlexander::Polynomial(p) => json!({ "polynomial": poly(p) }),
        TwistedAlexander::Indeterminate {
            delta_j,
            delta_0,
            det_block,
        } => json!({
            "indeterminate": {
                "delta_j": poly(delta_j),
                "delta_0": poly(delta_0),
                "det_block": poly(det_block),
            }
        }),
    }
}

pub fn record(r: &QuotientRecord) -> Value {
    let mut v = json!({
        "quotient": hom(&r.hom),
        "monic": r.monic,
        "degree": r.degree,
        "div_phi_g": r.div_phi_g,
        "implied_zeta_phi": r.implied_zeta_phi.as_ref().map(rational),
        "cover_b1": r.cover_b1,
    });
    if let (Value::Object(m), Value::Object(t)) = (&mut v, twisted(&r.poly)) {
        m.extend(t);
    }
    v
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "status": v.status.to_string(),
        "interpretation": v.interpretation(),
        "flags": {
            "graph_manifold": v.flags.graph_manifold,
            "k_zero": v.flags.k_zero,
        },
        "witness": v.witness.as_ref().map(|w| json!({
            "index": w.index,
            "reason": w.reason.to_string(),
            "record": record(&w.record),
        })),
    })
}

pub fn positive_term(t: &PositiveTerm) -> Value {
    json!({
        "coefficient": rational(&t.coefficient),
        "class": bigs(&t.class),
    })
}
