//! Built-in knots and the closed manifolds built from them.
//!
//! Knot groups are Wirtinger presentations read off closed braid diagrams
//! (one arc generator per arc, crossings in braid order, the last crossing
//! relator omitted since it follows from the others). Longitudes are the
//! parallel read along the closure and corrected by a power of the meridian
//! to have zero exponent sum.
//!
//! | knot | braid | arcs |
//! |------|-------|------|
//! | 3₁ | σ₁³ | 3 |
//! | 4₁ | σ₁σ₂⁻¹σ₁σ₂⁻¹ | 4 |
//! | 5₂ | σ₁³σ₂σ₁⁻¹σ₂ | 6 |

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{parse_presentation, Presentation, Word};
use crate::error::{Error, Result};
use crate::exactalg::{integer_kernel, smith_normal_form, LaurentPoly};

#[derive(Clone, Debug)]
pub struct KnotData {
    pub name: String,
    /// Knot group with meridian and longitude words.
    pub presentation: Presentation,
    /// Reference Alexander polynomial in `t`.
    pub alexander: LaurentPoly,
}

fn knot(name: &str, src: &str, low: i32, alex: &[i64]) -> KnotData {
    KnotData {
        name: name.to_string(),
        presentation: parse_presentation(src).expect("built-in knot presentation parses"),
        alexander: LaurentPoly::univariate("t", low, alex),
    }
}

pub fn unknot() -> KnotData {
    knot("unknot", "< m | > @meridian=m, @longitude=1", 0, &[1])
}

pub fn trefoil() -> KnotData {
    knot(
        "trefoil",
        "< x_1, x_2, x_3 | x_3^-1 x_1 x_2 x_1^-1, x_2^-1 x_3 x_1 x_3^-1 > \
         @meridian=x_1, @longitude=x_3^-1 x_1^-1 x_2^-1 x_1^3",
        0,
        &[1, -1, 1],
    )
}

pub fn figure_eight() -> KnotData {
    knot(
        "figure-eight",
        "< x_1, x_2, x_3, x_4 | x_4^-1 x_1 x_2 x_1^-1, x_2^-1 x_3^-1 x_1 x_3, \
         x_1^-1 x_4 x_3 x_4^-1 > @meridian=x_1, @longitude=x_3 x_1^-1 x_2 x_4^-1",
        0,
        &[1, -3, 1],
    )
}

pub fn five_two() -> KnotData {
    knot(
        "5_2",
        "< x_1, x_2, x_3, x_4, x_5, x_6 | x_4^-1 x_1 x_2 x_1^-1, x_5^-1 x_4 x_1 x_4^-1, \
         x_6^-1 x_5 x_4 x_5^-1, x_1^-1 x_5 x_3 x_5^-1, x_3^-1 x_1^-1 x_6 x_1 > \
         @meridian=x_1, @longitude=x_4^-1 x_3^-1 x_1^-1 x_5^-1 x_1 x_5^-1 x_1^4",
        0,
        &[2, -3, 2],
    )
}

pub fn builtin_knots() -> Vec<KnotData> {
    vec![unknot(), trefoil(), figure_eight(), five_two()]
}

/// Look up a built-in knot by name (`unknot`, `trefoil`/`3_1`, `figure-eight`/`4_1`, `5_2`).
pub fn builtin_knot(name: &str) -> Option<KnotData> {
    match name.to_ascii_lowercase().as_str() {
        "unknot" | "0_1" => Some(unknot()),
        "trefoil" | "3_1" => Some(trefoil()),
        "figure-eight" | "figure_eight" | "figure8" | "4_1" => Some(figure_eight()),
        "5_2" | "52" => Some(five_two()),
        _ => None,
    }
}

/// Check the knot invariants: H₁ is infinite cyclic, generated by the
/// meridian, and the longitude is null-homologous.
pub fn check_knot(k: &KnotData) -> Result<()> {
    let p = &k.presentation;
    let per = p.peripheral().ok_or(Error::MissingPeripheral)?;
    let s = smith_normal_form(&p.relator_matrix());
    let n = p.ngens();
    let rank = s.rank();
    let torsion = s.invariant_factors().iter().any(|d| !d.is_one());
    if n - rank != 1 || torsion {
        return Err(Error::InvalidPresentation(format!(
            "{}: abelianization is not infinite cyclic",
            k.name
        )));
    }
    // H₁ → ℤ is pairing with the primitive generator of the right kernel
    let f = integer_kernel(&p.relator_matrix());
    let f = &f[0];
    let pairing = |w: &Word| -> BigInt {
        w.abelianize(n).iter().zip(f).map(|(&e, c)| BigInt::from(e) * c).sum()
    };
    if !pairing(&per.meridian).abs().is_one() {
        return Err(Error::InvalidPresentation(format!(
            "{}: meridian does not generate H₁",
            k.name
        )));
    }
    if !pairing(&per.longitude).is_zero() {
        return Err(Error::InvalidPresentation(format!(
            "{}: longitude is not null-homologous",
            k.name
        )));
    }
    Ok(())
}

/// 0-surgery: the knot group with the longitude appended as a relator.
pub fn zero_surgery(k: &KnotData) -> Result<Presentation> {
    let p = &k.presentation;
    let per = p.peripheral().ok_or(Error::MissingPeripheral)?;
    let mut rels = p.relators().to_vec();
    rels.push(per.longitude.clone());
    Presentation::new(p.names().to_vec(), rels)
}

/// Splice of the knot exterior with `T³ \ ν(circle)`: generators `a, b` and the
/// knot generators; relators are the knot relators with `[a, μ]`, `[b, μ]` and
/// `λ·[a,b]⁻¹`.
pub fn splice_t3(k: &KnotData) -> Result<Presentation> {
    let p = &k.presentation;
    let per = p.peripheral().ok_or(Error::MissingPeripheral)?;
    let mut names = vec!["a".to_string(), "b".to_string()];
    for n in p.names() {
        if n == "a" || n == "b" {
            return Err(Error::InvalidPresentation(format!(
                "knot generator name `{n}` clashes with the splice generators"
            )));
        }
        names.push(n.clone());
    }
    let shift = |w: &Word| Word::from_letters(w.letters().iter().map(|&(g, e)| (g + 2, e)));
    let a = Word::gen(0);
    let b = Word::gen(1);
    let mu = shift(&per.meridian);
    let lam = shift(&per.longitude);
    let mut rels: Vec<Word> = p.relators().iter().map(shift).collect();
    rels.push(Word::commutator(&a, &mu));
    rels.push(Word::commutator(&b, &mu));
    rels.push(lam.mul(&Word::commutator(&a, &b).inverse()));
    Presentation::new(names, rels)
}

/// `⟨x, y, z | [x,y], [x,z], [y,z]⟩`
pub fn three_torus() -> Presentation {
    parse_presentation("< x, y, z | [x,y], [x,z], [y,z] >").expect("torus presentation parses")
}
