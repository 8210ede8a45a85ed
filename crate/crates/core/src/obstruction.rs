//! Obstructions from twisted Alexander polynomials. If a circle bundle over N
//! carries a symplectic form whose class pushes forward to `φ`, every
//! `Δ^α_{N,φ}` is monic of degree `|G| ζ·φ + 2 div φ_G`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::alexander::{twisted_alexander, TwistedAlexander};
use crate::covers::{enumerate_epimorphisms, induced_class, reidemeister_schreier, FiniteGroup, FiniteHom};
use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::homology::{divisibility, CohClass1};
use crate::presentations::Presentation;

/// Nonzero with both extreme coefficients `±1`.
pub fn is_monic(p: &LaurentPoly) -> Result<bool> {
    if p.nvars() != 1 {
        return Err(Error::NotUnivariate(p.nvars()));
    }
    match (p.leading_term(), p.trailing_term()) {
        (Some((_, a)), Some((_, b))) => Ok(a.abs().is_one() && b.abs().is_one()),
        _ => Ok(false),
    }
}

/// Twisted polynomial and degree data for one finite quotient.
#[derive(Clone, Debug)]
pub struct QuotientRecord {
    pub hom: FiniteHom,
    pub poly: TwistedAlexander,
    pub monic: bool,
    /// Laurent degree; `None` for zero or indeterminate polynomials.
    pub degree: Option<i64>,
    pub div_phi_g: u64,
    /// `(degree − 2 div φ_G) / |G|`.
    pub implied_zeta_phi: Option<BigRational>,
    /// First Betti number of the cover.
    pub cover_b1: usize,
}

impl QuotientRecord {
    pub fn group_name(&self) -> &str {
        self.hom.target.name()
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self.poly, TwistedAlexander::Indeterminate { .. })
    }

    pub fn is_zero(&self) -> bool {
        self.poly.polynomial().is_some_and(|p| p.is_zero())
    }
}

/// Record for a single quotient `α`.
pub fn quotient_record(p: &Presentation, phi: &CohClass1, hom: FiniteHom) -> Result<QuotientRecord> {
    let cover = reidemeister_schreier(p, &hom)?;
    let induced = induced_class(p, &cover, phi)?;
    let poly = twisted_alexander(p, &hom, phi)?;
    let order = hom.order() as i64;
    let (monic, degree) = match poly.polynomial() {
        Some(q) if !q.is_zero() => (is_monic(q)?, Some(q.degree_span(0) as i64)),
        _ => (false, None),
    };
    let implied_zeta_phi = degree.map(|d| {
        BigRational::new(
            BigInt::from(d - 2 * induced.divisibility as i64),
            BigInt::from(order),
        )
    });
    Ok(QuotientRecord {
        hom,
        poly,
        monic,
        degree,
        div_phi_g: induced.divisibility,
        implied_zeta_phi,
        cover_b1: induced.cover_h1.free_rank(),
    })
}

/// Records for the trivial quotient and every epimorphism onto each group.
pub fn degree_report(p: &Presentation, phi: &CohClass1, groups: &[FiniteGroup]) -> Result<Vec<QuotientRecord>> {
    match divisibility(phi) {
        0 => return Err(Error::ZeroClass),
        1 => {}
        d => return Err(Error::NotPrimitive(d)),
    }
    let mut homs = vec![FiniteHom::trivial(p)];
    for g in groups.iter().filter(|g| g.order() > 1) {
        homs.extend(enumerate_epimorphisms(p, g));
    }
    homs.into_par_iter().map(|a| quotient_record(p, phi, a)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Passes,
    Fails,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Passes => "PASSES",
            Status::Fails => "FAILS",
            Status::Indeterminate => "INDETERMINATE",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Flags {
    /// User assertion that N is a graph manifold.
    pub graph_manifold: bool,
    /// Test whether the canonical class can vanish.
    pub k_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailReason {
    Zero,
    NonMonic,
    /// Implied `ζ·φ` disagrees with the record at this index.
    Inconsistent { with: usize },
    NonzeroZeta,
    CoverBetti(usize),
}

impl fmt::Display for FailReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailReason::Zero => write!(f, "twisted polynomial is zero"),
            FailReason::NonMonic => write!(f, "twisted polynomial is not monic"),
            FailReason::Inconsistent { with } => {
                write!(f, "implied zeta.phi differs from record {with}")
            }
            FailReason::NonzeroZeta => write!(f, "K = 0 requires zeta.phi = 0"),
            FailReason::CoverBetti(b) => write!(f, "K = 0 requires b1 <= 3 for every cover, found {b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub index: usize,
    pub record: QuotientRecord,
    pub reason: FailReason,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub flags: Flags,
}

impl Verdict {
    /// `PASSES` only ever means no obstruction was found, unless the
    /// graph-manifold flag was asserted.
    pub fn interpretation(&self) -> &'static str {
        match self.status {
            Status::Fails => "obstruction found",
            Status::Indeterminate => "some quotients could not be decided",
            Status::Passes if self.flags.graph_manifold => "consistent with fibered",
            Status::Passes => "no obstruction found",
        }
    }
}

pub fn verdict(records: &[QuotientRecord], flags: Flags) -> Verdict {
    let fail = |i: usize, reason| Verdict {
        status: Status::Fails,
        witness: Some(Witness {
            index: i,
            record: records[i].clone(),
            reason,
        }),
        flags,
    };
    for (i, r) in records.iter().enumerate() {
        if r.is_zero() {
            return fail(i, FailReason::Zero);
        }
        if !r.is_indeterminate() && !r.monic {
            return fail(i, FailReason::NonMonic);
        }
    }
    let mut first: Option<(usize, &BigRational)> = None;
    for (i, r) in records.iter().enumerate() {
        if let Some(z) = &r.implied_zeta_phi {
            match first {
                None => first = Some((i, z)),
                Some((j, z0)) if z0 != z => return fail(i, FailReason::Inconsistent { with: j }),
                _ => {}
            }
        }
    }
    if flags.k_zero {
        for (i, r) in records.iter().enumerate() {
            if r.implied_zeta_phi.as_ref().is_some_and(|z| !z.is_zero()) {
                return fail(i, FailReason::NonzeroZeta);
            }
            if r.cover_b1 > 3 {
                return fail(i, FailReason::CoverBetti(r.cover_b1));
            }
        }
    }
    let status = if records.is_empty() || records.iter().any(|r| r.is_indeterminate()) {
        Status::Indeterminate
    } else {
        Status::Passes
    };
    Verdict {
        status,
        witness: None,
        flags,
    }
}
