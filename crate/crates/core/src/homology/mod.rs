//! First homology of a presentation, cohomology and Euler classes, and the
//! Gysin-sequence invariants of circle bundles.

mod cone;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{column_hermite, integer_kernel, smith_normal_form, IntMatrix};
use crate::presentations::{Presentation, Word};

pub use cone::{decompose_positive, positive_basis, PositiveTerm, RealClass2, RealCoord};

/// H₁ of a presentation in Smith coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Data {
    ngens: usize,
    free_rank: usize,
    torsion: Vec<BigInt>,
    /// `n × b`: generator exponent row vector ↦ free coordinates.
    free_map: IntMatrix,
    /// `n × t`: generator exponent row vector ↦ torsion coordinates (mod `torsion`).
    torsion_map: IntMatrix,
}

/// Smith normal form of the abelianized relator matrix.
pub fn h1(p: &Presentation) -> H1Data {
    let n = p.ngens();
    let r = p.relator_matrix();
    let s = smith_normal_form(&r);
    let inv = s.invariant_factors();
    let rank = inv.len();
    let b = n - rank;
    let torsion_idx: Vec<usize> = (0..rank).filter(|&i| inv[i] > BigInt::from(1)).collect();
    let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| inv[i].clone()).collect();
    let mut torsion_map = s.v.select_columns(&torsion_idx);
    for (k, d) in torsion.iter().enumerate() {
        for i in 0..n {
            let v = torsion_map[(i, k)].mod_floor(d);
            torsion_map[(i, k)] = v;
        }
    }
    // canonical free basis: column Hermite form of the free columns of V
    let free_cols: Vec<usize> = (rank..n).collect();
    let (free_map, _) = column_hermite(&s.v.select_columns(&free_cols));
    H1Data {
        ngens: n,
        free_rank: b,
        torsion,
        free_map,
        torsion_map,
    }
}

impl H1Data {
    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// `n × (b + t)` projection: free coordinates, then torsion coordinates.
    pub fn projection(&self) -> IntMatrix {
        let n = self.ngens;
        let b = self.free_rank;
        let t = self.torsion.len();
        let mut m = IntMatrix::zeros(n, b + t);
        for i in 0..n {
            for j in 0..b {
                m[(i, j)] = self.free_map[(i, j)].clone();
            }
            for j in 0..t {
                m[(i, b + j)] = self.torsion_map[(i, j)].clone();
            }
        }
        m
    }

    /// Free coordinates of a generator exponent vector.
    pub fn free_coords(&self, exps: &[i64]) -> Vec<i64> {
        assert_eq!(exps.len(), self.ngens);
        let v: Vec<BigInt> = exps.iter().map(|&e| BigInt::from(e)).collect();
        self.free_map
            .left_apply(&v)
            .iter()
            .map(|x| x.to_i64().expect("H₁ coordinate fits in i64"))
            .collect()
    }

    /// Torsion coordinates of a generator exponent vector, reduced.
    pub fn torsion_coords(&self, exps: &[i64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = exps.iter().map(|&e| BigInt::from(e)).collect();
        self.torsion_map
            .left_apply(&v)
            .into_iter()
            .zip(&self.torsion)
            .map(|(x, d)| x.mod_floor(d))
            .collect()
    }

    pub fn word_free_coords(&self, w: &Word) -> Vec<i64> {
        self.free_coords(&w.abelianize(self.ngens))
    }

    pub fn word_torsion_coords(&self, w: &Word) -> Vec<BigInt> {
        self.torsion_coords(&w.abelianize(self.ngens))
    }

    /// Free coordinates of each generator.
    pub fn generator_images(&self) -> Vec<Vec<i64>> {
        (0..self.ngens)
            .map(|i| {
                (0..self.free_rank)
                    .map(|j| self.free_map[(i, j)].to_i64().expect("fits"))
                    .collect()
            })
            .collect()
    }

    /// Express a class given by its values on the generators in the free
    /// dual basis. Errors if the values do not vanish on relators.
    pub fn class_from_generator_values(&self, values: &[i64]) -> Result<CohClass1> {
        if values.len() != self.ngens {
            return Err(Error::Dimension {
                expected: self.ngens,
                found: values.len(),
            });
        }
        // the free map has a lower-echelon column form: solve row by row
        let b = self.free_rank;
        let mut c = vec![BigInt::zero(); b];
        let mut col = 0;
        for i in 0..self.ngens {
            if col < b && !self.free_map[(i, col)].is_zero() {
                let mut rhs = BigInt::from(values[i]);
                for (j, cj) in c.iter().enumerate().take(col) {
                    rhs -= &self.free_map[(i, j)] * cj;
                }
                let piv = &self.free_map[(i, col)];
                if !rhs.is_multiple_of(piv) {
                    return Err(Error::InvalidHom("values are not an integral class".into()));
                }
                c[col] = rhs / piv;
                col += 1;
            }
        }
        let phi = CohClass1::new(c.iter().map(|x| x.to_i64().expect("fits")).collect());
        for (i, g) in self.generator_images().iter().enumerate() {
            if phi.pair(g) != values[i] {
                return Err(Error::InvalidHom("values do not factor through H₁".into()));
            }
        }
        Ok(phi)
    }
}

/// A class in H¹(N; ℤ) = Hom(H₁ / torsion, ℤ).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CohClass1 {
    pub values: Vec<i64>,
}

impl CohClass1 {
    pub fn new(values: Vec<i64>) -> Self {
        CohClass1 { values }
    }

    /// Dual of the `i`-th free basis element of H₁.
    pub fn dual_basis(b: usize, i: usize) -> Self {
        let mut v = vec![0; b];
        v[i] = 1;
        CohClass1 { values: v }
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    /// Pairing with free H₁ coordinates.
    pub fn pair(&self, h: &[i64]) -> i64 {
        assert_eq!(h.len(), self.values.len());
        self.values.iter().zip(h).map(|(a, b)| a * b).sum()
    }

    /// Value on a word of the presentation.
    pub fn eval_word(&self, h: &H1Data, w: &Word) -> i64 {
        self.pair(&h.word_free_coords(w))
    }

    pub fn divisibility(&self) -> u64 {
        divisibility(self)
    }
}

/// Gcd of the entries; 0 for the zero class.
pub fn divisibility(phi: &CohClass1) -> u64 {
    phi.values.iter().fold(0i64, |g, &x| g.gcd(&x)).unsigned_abs()
}

/// An Euler class in H²(N) ≅ H₁(N), stored through Poincaré duality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerClass {
    pub free: Vec<i64>,
    pub torsion: Vec<BigInt>,
}

impl EulerClass {
    /// Validate dimensions and reduce torsion coordinates.
    pub fn new(h: &H1Data, free: Vec<i64>, torsion: Vec<BigInt>) -> Result<EulerClass> {
        if free.len() != h.free_rank {
            return Err(Error::Dimension {
                expected: h.free_rank,
                found: free.len(),
            });
        }
        if torsion.len() != h.torsion.len() {
            return Err(Error::Dimension {
                expected: h.torsion.len(),
                found: torsion.len(),
            });
        }
        let torsion = torsion.iter().zip(&h.torsion).map(|(x, d)| x.mod_floor(d)).collect();
        Ok(EulerClass { free, torsion })
    }

    /// Class with the given free part and zero torsion part.
    pub fn pd(h: &H1Data, free: Vec<i64>) -> Result<EulerClass> {
        let t = vec![BigInt::zero(); h.torsion.len()];
        Self::new(h, free, t)
    }

    pub fn is_torsion(&self) -> bool {
        self.free.iter().all(|&x| x == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.is_torsion() && self.torsion.iter().all(|x| x.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleInvariants {
    pub b1: usize,
    pub b2: usize,
    pub b2_plus: usize,
    pub b2_minus: usize,
    pub signature: i64,
}

/// Betti numbers and signature of the circle bundle with Euler class `e`.
pub fn circle_bundle_invariants(h: &H1Data, e: &EulerClass) -> Result<BundleInvariants> {
    let b = h.free_rank;
    if e.free.len() != b {
        return Err(Error::Dimension {
            expected: b,
            found: e.free.len(),
        });
    }
    if e.is_zero() {
        return Ok(BundleInvariants {
            b1: b + 1,
            b2: 2 * b,
            b2_plus: b,
            b2_minus: b,
            signature: 0,
        });
    }
    if e.is_torsion() {
        return Err(Error::UnsupportedEulerClass(
            "nonzero torsion Euler class".into(),
        ));
    }
    Ok(BundleInvariants {
        b1: b,
        b2: 2 * b - 2,
        b2_plus: b - 1,
        b2_minus: b - 1,
        signature: 0,
    })
}

/// Entry of the intersection form of the total space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormEntry {
    Int(i64),
    /// `Φᵢ · Φⱼ`, not determined by the homological data.
    Unknown(usize, usize),
}

/// Block structure `[[0, I], [I, A]]` of the intersection form on H²(M) / torsion
/// for a nontorsion Euler class, in a basis of lifted classes followed by
/// pull-backs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub half: usize,
    pub entries: Vec<Vec<FormEntry>>,
}

pub fn intersection_form(h: &H1Data, e: &EulerClass) -> Result<IntersectionForm> {
    let inv = circle_bundle_invariants(h, e)?;
    if e.is_zero() {
        return Err(Error::UnsupportedEulerClass(
            "product bundle: form is not of block type".into(),
        ));
    }
    let k = inv.b2 / 2;
    let mut entries = vec![vec![FormEntry::Int(0); 2 * k]; 2 * k];
    for i in 0..k {
        entries[i][k + i] = FormEntry::Int(1);
        entries[k + i][i] = FormEntry::Int(1);
        for j in 0..k {
            entries[k + i][k + j] = FormEntry::Unknown(i.min(j), i.max(j));
        }
    }
    Ok(IntersectionForm { half: k, entries })
}

impl IntersectionForm {
    /// Instantiate the unknown block with a symmetric rational matrix.
    pub fn instantiate(&self, a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| match x {
                        FormEntry::Int(v) => BigRational::from_integer(BigInt::from(*v)),
                        FormEntry::Unknown(i, j) => a[*i][*j].clone(),
                    })
                    .collect()
            })
            .collect()
    }
}

/// Inertia `(positive, negative, zero)` of a symmetric rational matrix by
/// congruence diagonalization.
pub fn inertia(m: &[Vec<BigRational>]) -> (usize, usize, usize) {
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut n = a.len();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    while n > 0 {
        let mut p = (0..n).find(|&i| !a[i][i].is_zero());
        if p.is_none() {
            // make a diagonal entry nonzero by e_i ↦ e_i ± e_j
            let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !a[i][j].is_zero());
            match off {
                None => {
                    zero += n;
                    break;
                }
                Some((i, j)) => {
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for k in 0..n {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                    p = Some(i);
                }
            }
        }
        let p = p.expect("pivot");
        a.swap(p, n - 1);
        for row in a.iter_mut() {
            row.swap(p, n - 1);
        }
        let d = a[n - 1][n - 1].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in 0..n - 1 {
            let f = &a[i][n - 1] / &d;
            if f.is_zero() {
                continue;
            }
            for j in 0..n - 1 {
                let v = &f * &a[n - 1][j];
                a[i][j] -= v;
            }
        }
        a.truncate(n - 1);
        for row in a.iter_mut() {
            row.truncate(n - 1);
        }
        n -= 1;
    }
    (pos, neg, zero)
}

/// Basis of `{φ : φ(PD(e)) = 0}`, saturated, in row Hermite form.
pub fn ker_pairing(h: &H1Data, e: &EulerClass) -> Result<Vec<CohClass1>> {
    let b = h.free_rank;
    if b == 0 {
        return Err(Error::UnsupportedBetti {
            b1: 0,
            reason: "kernel pairing needs b₁ ≥ 1".into(),
        });
    }
    if e.free.len() != b {
        return Err(Error::Dimension {
            expected: b,
            found: e.free.len(),
        });
    }
    let m = IntMatrix::from_rows(std::slice::from_ref(&e.free));
    Ok(integer_kernel(&m)
        .into_iter()
        .map(|v| CohClass1::new(v.iter().map(|x| x.to_i64().expect("fits")).collect()))
        .collect())
}

/// A class with `φ ∪ e = 0` and `φ(z) ≠ 0`, if one exists.
pub fn find_transverse_class(h: &H1Data, e: &EulerClass, z: &[i64]) -> Result<Option<CohClass1>> {
    if z.len() != h.free_rank {
        return Err(Error::Dimension {
            expected: h.free_rank,
            found: z.len(),
        });
    }
    Ok(ker_pairing(h, e)?.into_iter().find(|phi| phi.pair(z) != 0))
}
