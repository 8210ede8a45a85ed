//! Free-group words, finite presentations, and the manifolds built from knots.

mod knots;
mod parse;

use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

pub use knots::{
    builtin_knot, builtin_knots, check_knot, figure_eight, five_two, splice_t3, three_torus,
    trefoil, unknot, zero_surgery, KnotData,
};
pub use parse::parse_presentation;

/// A letter `x_g^e` with `e ≠ 0`.
pub type Letter = (usize, i32);

/// A freely reduced word in the free group on the presentation generators.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn gen(g: usize) -> Word {
        Word { letters: vec![(g, 1)] }
    }

    pub fn letter(g: usize, e: i32) -> Word {
        free_reduce_letters(vec![(g, e)])
    }

    /// Reducing constructor.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        free_reduce_letters(letters.into_iter().collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Length in the free group (sum of |exponent|).
    pub fn length(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut v = self.letters.clone();
        v.extend_from_slice(&other.letters);
        free_reduce_letters(v)
    }

    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.letters);
        }
        free_reduce_letters(v)
    }

    /// `u v u⁻¹ v⁻¹`
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    /// `c w c⁻¹`
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.mul(self).mul(&c.inverse())
    }

    /// Rotate the syllable sequence; `k` counts unit letters from the left.
    pub fn cyclic_shift(&self, k: usize) -> Word {
        let flat: Vec<Letter> = self
            .letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
            .collect();
        if flat.is_empty() {
            return Word::identity();
        }
        let k = k % flat.len();
        let mut v = flat[k..].to_vec();
        v.extend_from_slice(&flat[..k]);
        free_reduce_letters(v)
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.letters.iter().filter(|l| l.0 == g).map(|l| l.1 as i64).sum()
    }

    /// Exponent-sum vector over `n` generators.
    pub fn abelianize(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for &(g, e) in &self.letters {
            v[g] += e as i64;
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.0).max()
    }

    /// Apply a substitution `x_g ↦ images[g]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut v = Vec::new();
        for &(g, e) in &self.letters {
            let w = images[g].pow(e);
            v.extend_from_slice(&w.letters);
        }
        free_reduce_letters(v)
    }

    /// Render with generator names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.word.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.names[g])?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| if e == 1 { format!("x{g}") } else { format!("x{g}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn free_reduce_letters(letters: Vec<Letter>) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for (g, e) in letters {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    Word { letters: out }
}

/// Free reduction: merges adjacent syllables on the same generator.
pub fn free_reduce(w: &Word) -> Word {
    free_reduce_letters(w.letters.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Peripheral {
    pub meridian: Word,
    pub longitude: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
    peripheral: Option<Peripheral>,
}

impl Presentation {
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Presentation> {
        let n = names.len();
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{a}`")));
            }
        }
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= n {
                    return Err(Error::InvalidPresentation(format!(
                        "relator uses generator index {g} but only {n} generators exist"
                    )));
                }
            }
        }
        Ok(Presentation {
            names,
            relators: relators.iter().map(free_reduce).collect(),
            peripheral: None,
        })
    }

    pub fn from_names(names: &[&str], relators: Vec<Word>) -> Result<Presentation> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), relators)
    }

    pub fn with_peripheral(mut self, meridian: Word, longitude: Word) -> Result<Presentation> {
        let n = self.names.len();
        for w in [&meridian, &longitude] {
            if w.max_generator().is_some_and(|g| g >= n) {
                return Err(Error::InvalidPresentation("peripheral word out of range".into()));
            }
        }
        self.peripheral = Some(Peripheral { meridian, longitude });
        Ok(self)
    }

    pub fn without_peripheral(mut self) -> Presentation {
        self.peripheral = None;
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn nrels(&self) -> usize {
        self.relators.len()
    }

    pub fn peripheral(&self) -> Option<&Peripheral> {
        self.peripheral.as_ref()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Generators minus relators.
    pub fn deficiency(&self) -> i64 {
        self.ngens() as i64 - self.nrels() as i64
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relator_matrix(&self) -> IntMatrix {
        let n = self.ngens();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.abelianize(n)).collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, n);
        }
        IntMatrix::from_rows(&rows)
    }

    /// Replace the relator list (indices validated).
    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Presentation> {
        let mut p = Presentation::new(self.names.clone(), relators)?;
        p.peripheral = self.peripheral.clone();
        Ok(p)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.display_with(&self.names).to_string()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.names.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        if !rels.is_empty() {
            write!(f, " {}", rels.join(", "))?;
        }
        write!(f, " >")?;
        if let Some(p) = &self.peripheral {
            write!(
                f,
                " @meridian={}, @longitude={}",
                self.format_word(&p.meridian),
                self.format_word(&p.longitude)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let w = Word { letters: vec![(0, 1), (0, -1), (1, 1)] };
        assert_eq!(free_reduce(&w), Word::gen(1));
        assert_eq!(free_reduce(&Word::identity()), Word::identity());
        let w = Word { letters: vec![(0, 2), (0, -3)] };
        assert_eq!(free_reduce(&w), Word::letter(0, -1));
    }

    #[test]
    fn word_algebra() {
        let x = Word::gen(0);
        let y = Word::gen(1);
        let c = Word::commutator(&x, &y);
        assert_eq!(c.syllables(), 4);
        assert_eq!(c.mul(&c.inverse()), Word::identity());
        assert_eq!(c.abelianize(2), vec![0, 0]);
        assert_eq!(x.pow(3).pow(-2), x.pow(-6));
        assert_eq!(c.cyclic_shift(1), Word::from_letters([(1, 1), (0, -1), (1, -1), (0, 1)]));
        let s = c.substitute(&[x.mul(&y), y.clone()]);
        assert_eq!(s, Word::from_letters([(0, 1), (1, 1), (0, -1), (1, -1)]));
    }
}
