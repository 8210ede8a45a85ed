//! Random Tietze moves that carry the values of classes on generators along.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use symcirc::alexander::{alexander_one_variable_fox, check_fundamental_formula};
use symcirc::exactalg::LaurentPoly;
use symcirc::homology::{h1, CohClass1};
use symcirc::presentations::{Presentation, Word};

const MAX_LEN: usize = 48;

/// Presentation with the values of a class on each generator.
#[derive(Clone)]
struct State {
    names: Vec<String>,
    relators: Vec<Word>,
    values: Vec<Vec<i64>>,
    fresh: usize,
}

fn value(f: &[i64], w: &Word) -> i64 {
    w.letters().iter().map(|&(g, e)| f[g] * e as i64).sum()
}

fn random_word(rng: &mut StdRng, n: usize, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| (rng.gen_range(0..n), if rng.gen_bool(0.5) { 1 } else { -1 })))
}

fn occurrences(w: &Word, g: usize) -> usize {
    w.letters().iter().filter(|l| l.0 == g).map(|l| l.1.unsigned_abs() as usize).sum()
}

impl State {
    fn new(p: &Presentation, classes: &[CohClass1]) -> State {
        let h = h1(p);
        let images = h.generator_images();
        State {
            names: p.names().to_vec(),
            relators: p.relators().to_vec(),
            values: classes.iter().map(|c| images.iter().map(|g| c.pair(g)).collect()).collect(),
            fresh: 0,
        }
    }

    fn presentation(&self) -> Presentation {
        Presentation::new(self.names.clone(), self.relators.clone()).unwrap()
    }

    fn ngens(&self) -> usize {
        self.names.len()
    }

    /// One random move; returns false if the chosen move did not apply.
    fn step(&mut self, rng: &mut StdRng) -> bool {
        let n = self.ngens();
        let m = self.relators.len();
        match rng.gen_range(0..7) {
            0 if m > 0 => {
                let i = rng.gen_range(0..m);
                let c = random_word(rng, n, 1);
                self.relators[i] = self.relators[i].conjugate_by(&c);
            }
            1 if m > 0 => {
                let i = rng.gen_range(0..m);
                self.relators[i] = self.relators[i].inverse();
            }
            2 if m > 0 => {
                let i = rng.gen_range(0..m);
                let k = rng.gen_range(0..=self.relators[i].length());
                self.relators[i] = self.relators[i].cyclic_shift(k);
            }
            3 if m > 1 => {
                let i = rng.gen_range(0..m);
                let k = (i + rng.gen_range(1..m)) % m;
                let len = rng.gen_range(0..2);
                let c = random_word(rng, n, len);
                let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                let r = self.relators[i].mul(&self.relators[k].pow(e).conjugate_by(&c));
                if r.length() > MAX_LEN {
                    return false;
                }
                self.relators[i] = r;
            }
            4 if n < 8 => {
                let len = rng.gen_range(1..4);
                let w = random_word(rng, n, len);
                self.fresh += 1;
                self.names.push(format!("u_{}", self.fresh));
                self.relators.push(Word::gen(n).inverse().mul(&w));
                for f in &mut self.values {
                    let v = value(f, &w);
                    f.push(v);
                }
            }
            5 if n > 1 => {
                let j = rng.gen_range(0..n);
                let k = (j + rng.gen_range(1..n)) % n;
                let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                let images: Vec<Word> = (0..n)
                    .map(|g| if g == j { Word::gen(j).mul(&Word::letter(k, e)) } else { Word::gen(g) })
                    .collect();
                let rels: Vec<Word> = self.relators.iter().map(|r| r.substitute(&images)).collect();
                if rels.iter().any(|r| r.length() > MAX_LEN) {
                    return false;
                }
                self.relators = rels;
                for f in &mut self.values {
                    f[j] -= e as i64 * f[k];
                }
            }
            6 => return self.eliminate(),
            _ => return false,
        }
        true
    }

    /// Remove a generator occurring exactly once in some relator.
    fn eliminate(&mut self) -> bool {
        let n = self.ngens();
        if n <= 1 {
            return false;
        }
        for (i, r) in self.relators.iter().enumerate() {
            for j in 0..n {
                if occurrences(r, j) != 1 {
                    continue;
                }
                let pos = r.letters().iter().position(|l| l.0 == j).unwrap();
                let offset: usize = r.letters()[..pos].iter().map(|l| l.1.unsigned_abs() as usize).sum();
                let s = r.cyclic_shift(offset);
                let (g, e) = s.letters()[0];
                assert_eq!(g, j);
                let rest = Word::from_letters(s.letters()[1..].iter().copied());
                let expr = if e > 0 { rest.inverse() } else { rest };
                let reindex = |g: usize| if g < j { g } else { g - 1 };
                let images: Vec<Word> = (0..n)
                    .map(|g| {
                        if g == j {
                            Word::from_letters(expr.letters().iter().map(|&(h, e)| (reindex(h), e)))
                        } else {
                            Word::gen(reindex(g))
                        }
                    })
                    .collect();
                let rels: Vec<Word> = self
                    .relators
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i)
                    .map(|(_, r)| r.substitute(&images))
                    .collect();
                if rels.iter().any(|r| r.length() > MAX_LEN) {
                    continue;
                }
                self.relators = rels;
                self.names.remove(j);
                for f in &mut self.values {
                    f.remove(j);
                }
                return true;
            }
        }
        false
    }
}

struct Invariants {
    b1: usize,
    torsion: Vec<BigInt>,
    deltas: Vec<LaurentPoly>,
}

fn invariants(s: &State) -> Result<Invariants, String> {
    let p = s.presentation();
    if !check_fundamental_formula(&p) {
        return Err("Fox fundamental formula fails".into());
    }
    let h = h1(&p);
    let deltas = s
        .values
        .iter()
        .map(|f| {
            let phi = h.class_from_generator_values(f).map_err(|e| e.to_string())?;
            alexander_one_variable_fox(&p, &phi)
                .map(|d| d.unit_normalize())
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    Ok(Invariants {
        b1: h.free_rank(),
        torsion: h.torsion().to_vec(),
        deltas,
    })
}

/// Apply `moves` random moves, comparing invariants every ten moves.
pub fn check_tietze(p: &Presentation, classes: &[CohClass1], seed: u64, moves: usize) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut s = State::new(p, classes);
    let base = invariants(&s)?;
    let mut done = 0;
    while done < moves {
        if s.step(&mut rng) {
            done += 1;
            if done % 10 == 0 || done == moves {
                let inv = invariants(&s)?;
                if inv.b1 != base.b1 || inv.torsion != base.torsion {
                    return Err(format!("H1 changed after {done} moves"));
                }
                if inv.deltas != base.deltas {
                    return Err(format!("Alexander polynomial changed after {done} moves"));
                }
            }
        }
    }
    Ok(())
}

/// A fiber-dual class and a generic one.
pub fn classes(b: usize) -> Vec<CohClass1> {
    vec![
        CohClass1::dual_basis(b, b - 1),
        CohClass1::new((1..=b as i64).collect()),
    ]
}
