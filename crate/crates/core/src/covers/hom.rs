//! Homomorphisms from a presented group onto a finite group.

use std::sync::Arc;

use rayon::prelude::*;

use super::group::FiniteGroup;
use crate::error::{Error, Result};
use crate::presentations::{Presentation, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteHom {
    pub target: Arc<FiniteGroup>,
    /// Image of each presentation generator.
    pub images: Vec<usize>,
}

impl FiniteHom {
    /// Checked constructor: relators map to the identity and images generate.
    pub fn new(p: &Presentation, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        let h = FiniteHom { target, images };
        h.validate(p)?;
        Ok(h)
    }

    pub fn trivial(p: &Presentation) -> Self {
        let g = Arc::new(FiniteGroup::trivial());
        FiniteHom {
            images: vec![g.identity(); p.ngens()],
            target: g,
        }
    }

    pub fn validate(&self, p: &Presentation) -> Result<()> {
        let g = &self.target;
        if self.images.len() != p.ngens() {
            return Err(Error::InvalidHom(format!(
                "{} images for {} generators",
                self.images.len(),
                p.ngens()
            )));
        }
        if self.images.iter().any(|&x| x >= g.order()) {
            return Err(Error::InvalidHom("image index out of range".into()));
        }
        for (i, r) in p.relators().iter().enumerate() {
            if self.eval(r) != g.identity() {
                return Err(Error::InvalidHom(format!("relator {i} does not map to the identity")));
            }
        }
        if g.generated_subgroup(&self.images).len() != g.order() {
            return Err(Error::InvalidHom("not surjective".into()));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.target.order()
    }

    pub fn eval(&self, w: &Word) -> usize {
        eval_word(&self.target, &self.images, w)
    }
}

pub(crate) fn eval_word(g: &FiniteGroup, images: &[usize], w: &Word) -> usize {
    let mut acc = g.identity();
    for &(x, e) in w.letters() {
        acc = g.mul(acc, g.pow(images[x], e as i64));
    }
    acc
}

/// All epimorphisms onto `g`, by depth-first search over generator images with
/// relators checked as soon as all their generators are assigned. Ordered
/// lexicographically by image vector.
pub fn enumerate_epimorphisms(p: &Presentation, g: &FiniteGroup) -> Vec<FiniteHom> {
    let n = p.ngens();
    let target = Arc::new(g.clone());
    if n == 0 {
        return if g.order() == 1 {
            vec![FiniteHom { target, images: vec![] }]
        } else {
            vec![]
        };
    }
    // relators grouped by the last generator they involve
    let mut by_last: Vec<Vec<&Word>> = vec![Vec::new(); n];
    for r in p.relators() {
        if let Some(m) = r.max_generator() {
            by_last[m].push(r);
        }
    }
    let found: Vec<Vec<Vec<usize>>> = (0..g.order())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut images = vec![0usize; n];
            images[0] = first;
            if by_last[0].iter().all(|r| eval_word(g, &images, r) == g.identity()) {
                dfs(g, &by_last, &mut images, 1, &mut out);
            }
            out
        })
        .collect();
    found
        .into_iter()
        .flatten()
        .filter(|im| g.generated_subgroup(im).len() == g.order())
        .map(|images| FiniteHom {
            target: target.clone(),
            images,
        })
        .collect()
}

fn dfs(g: &FiniteGroup, by_last: &[Vec<&Word>], images: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
    if i == images.len() {
        out.push(images.clone());
        return;
    }
    for x in 0..g.order() {
        images[i] = x;
        if by_last[i].iter().all(|r| eval_word(g, images, r) == g.identity()) {
            dfs(g, by_last, images, i + 1, out);
        }
    }
}
