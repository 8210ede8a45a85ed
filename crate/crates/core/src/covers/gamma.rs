//! The quotient `γ = (α, β): π → G × T` with `T` the torsion of H₁.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::group::FiniteGroup;
use super::hom::FiniteHom;
use crate::error::{Error, Result};
use crate::homology::h1;
use crate::presentations::{Presentation, Word};

/// `γ` onto its image `Γ ⊆ G × T`, where `β` reads the torsion coordinates of
/// H₁ in Smith form.
pub fn gamma_quotient(p: &Presentation, a: &FiniteHom) -> Result<FiniteHom> {
    a.validate(p)?;
    let h = h1(p);
    let moduli: Vec<u64> = h
        .torsion()
        .iter()
        .map(|d| d.to_u64().ok_or_else(|| Error::InvalidGroup("torsion too large".into())))
        .collect::<Result<_>>()?;
    let g = &a.target;
    let n = p.ngens();
    let beta: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            h.word_torsion_coords(&Word::gen(j))
                .iter()
                .map(|x: &BigInt| x.to_u64().expect("reduced coordinate"))
                .collect()
        })
        .collect();
    type Elt = (usize, Vec<u64>);
    let mul = |x: &Elt, y: &Elt| -> Elt {
        (
            g.mul(x.0, y.0),
            x.1.iter().zip(&y.1).zip(&moduli).map(|((u, v), d)| (u + v) % d).collect(),
        )
    };
    let gens: Vec<Elt> = (0..n).map(|j| (a.images[j], beta[j].clone())).collect();
    let id: Elt = (g.identity(), vec![0; moduli.len()]);
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Elt, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for s in &gens {
            let e = mul(&elems[i], s);
            if !index.contains_key(&e) {
                index.insert(e.clone(), elems.len());
                elems.push(e);
            }
        }
        i += 1;
    }
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|x| elems.iter().map(|y| index[&mul(x, y)]).collect())
        .collect();
    let images: Vec<usize> = gens.iter().map(|s| index[s]).collect();
    let mut group_gens = images.clone();
    group_gens.sort_unstable();
    group_gens.dedup();
    let name = if moduli.is_empty() {
        g.name().to_string()
    } else {
        let t: Vec<String> = moduli.iter().map(|d| format!("Z/{d}")).collect();
        format!("Gamma({} x {})", g.name(), t.join(" x "))
    };
    let target = Arc::new(FiniteGroup::from_table(&name, table, group_gens)?);
    FiniteHom::new(p, target, images)
}
