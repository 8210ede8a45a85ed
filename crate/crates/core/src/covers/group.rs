//! Finite groups given by multiplication tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Validate a multiplication table (`table[a][b] = a·b`) and generator list.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>, generators: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!("entry {x} out of range")));
                }
                flat.push(x);
            }
        }
        let mul = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul(a, b);
                for c in 0..n {
                    if mul(ab, c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let g = FiniteGroup {
            name: name.to_string(),
            order: n,
            table: flat,
            identity,
            inverses,
            generators,
        };
        if g.generators.iter().any(|&x| x >= n) {
            return Err(Error::InvalidGroup("generator index out of range".into()));
        }
        if g.generated_subgroup(&g.generators).len() != n {
            return Err(Error::InvalidGroup("generators do not generate the group".into()));
        }
        Ok(g)
    }

    /// Group generated by permutations of `0..d` (images lists); element 0 is
    /// the identity and elements are numbered in breadth-first order.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Result<Self> {
        let d = gens.first().map_or(0, |g| g.len());
        for g in gens {
            let mut seen = vec![false; d];
            if g.len() != d || g.iter().any(|&x| x >= d || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidGroup("not a permutation".into()));
            }
        }
        let id: Vec<usize> = (0..d).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut i = 0;
        // compose as functions applied left to right: (p·q)(x) = q(p(x))
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&x| q[x]).collect() };
        while i < elems.len() {
            for g in gens {
                let h = compose(&elems[i], g);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elems.len());
                    elems.push(h);
                }
            }
            i += 1;
        }
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|p| elems.iter().map(|q| index[&compose(p, q)]).collect())
            .collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        Self::from_table(name, table, generators)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// ℤ/n with generator 1.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let gens = if n == 1 { vec![] } else { vec![1] };
        Self::from_table(&format!("Z/{n}"), table, gens).expect("cyclic group")
    }

    pub fn symmetric(k: usize) -> Self {
        assert!(k >= 1);
        if k == 1 {
            return Self::trivial();
        }
        let mut gens = Vec::new();
        let swap: Vec<usize> = (0..k).map(|i| match i { 0 => 1, 1 => 0, _ => i }).collect();
        gens.push(swap);
        if k > 2 {
            gens.push((0..k).map(|i| (i + 1) % k).collect());
        }
        Self::from_permutations(&format!("S{k}"), &gens).expect("symmetric group")
    }

    /// Dihedral group of order `2k` acting on a `k`-gon.
    pub fn dihedral(k: usize) -> Self {
        assert!(k >= 3);
        let r: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        let s: Vec<usize> = (0..k).map(|i| (k - i) % k).collect();
        Self::from_permutations(&format!("D{k}"), &[r, s]).expect("dihedral group")
    }

    /// Quaternion group as permutations of its 8 elements.
    pub fn quaternion() -> Self {
        // elements ±1, ±i, ±j, ±k as 0..8: (sign, unit) with unit 0=1,1=i,2=j,3=k
        let mul_unit = |a: usize, b: usize| -> (bool, usize) {
            const T: [[(bool, usize); 4]; 4] = [
                [(false, 0), (false, 1), (false, 2), (false, 3)],
                [(false, 1), (true, 0), (false, 3), (true, 2)],
                [(false, 2), (true, 3), (true, 0), (false, 1)],
                [(false, 3), (false, 2), (true, 1), (true, 0)],
            ];
            T[a][b]
        };
        let enc = |neg: bool, u: usize| u + if neg { 4 } else { 0 };
        let right = |g: usize| -> Vec<usize> {
            (0..8)
                .map(|x| {
                    let (nx, ux) = (x >= 4, x % 4);
                    let (ng, ug) = (g >= 4, g % 4);
                    let (n, u) = mul_unit(ux, ug);
                    enc(nx ^ ng ^ n, u)
                })
                .collect()
        };
        Self::from_permutations("Q8", &[right(1), right(2)]).expect("quaternion group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut r = self.identity;
        for _ in 0..e.unsigned_abs() {
            r = self.mul(r, base);
        }
        r
    }

    /// Elements of the subgroup generated by `gens`, in discovery order.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut out = vec![self.identity];
        let mut i = 0;
        while i < out.len() {
            for &g in gens {
                let h = self.mul(out[i], g);
                if !seen[h] {
                    seen[h] = true;
                    out.push(h);
                }
            }
            i += 1;
        }
        out
    }

    /// Multiplication table rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Text form: order, table row-major, generator indices.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.order);
        for row in self.table() {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&r.join(" "));
            s.push('\n');
        }
        let g: Vec<String> = self.generators.iter().map(|x| x.to_string()).collect();
        s.push_str(&g.join(" "));
        s.push('\n');
        s
    }
}

/// Parse the text table format (whitespace separated; `#` comments).
pub fn parse_group_text(name: &str, text: &str) -> Result<FiniteGroup> {
    let mut nums = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::InvalidGroup(format!("not a number: `{tok}`")))?;
            nums.push(v);
        }
    }
    let Some((&n, rest)) = nums.split_first() else {
        return Err(Error::InvalidGroup("empty group file".into()));
    };
    if n == 0 || rest.len() < n * n {
        return Err(Error::InvalidGroup("table is truncated".into()));
    }
    let table = rest[..n * n].chunks(n).map(|c| c.to_vec()).collect();
    let gens = rest[n * n..].to_vec();
    FiniteGroup::from_table(name, table, gens)
}

/// Built-in groups: `Z/n` (n ≤ 12), `S3`, `S4`, `D4`, `Q8`, `trivial`.
pub fn builtin_group(name: &str) -> Option<FiniteGroup> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_uppercase();
    match key.as_str() {
        "1" | "TRIVIAL" => return Some(FiniteGroup::trivial()),
        "S3" => return Some(FiniteGroup::symmetric(3)),
        "S4" => return Some(FiniteGroup::symmetric(4)),
        "D4" => return Some(FiniteGroup::dihedral(4)),
        "Q8" => return Some(FiniteGroup::quaternion()),
        _ => {}
    }
    let digits = key
        .strip_prefix("Z/")
        .or_else(|| key.strip_prefix("Z_"))
        .or_else(|| key.strip_prefix('Z'))?;
    let n: usize = digits.parse().ok()?;
    (1..=12).contains(&n).then(|| FiniteGroup::cyclic(n))
}
