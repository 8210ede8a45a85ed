use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use symcirc::alexander::{alexander_multivariable, alexander_one_variable, alexander_one_variable_fox};
use symcirc::covers::FiniteGroup;
use symcirc::exactalg::{vars, LaurentPoly};
use symcirc::homology::{
    circle_bundle_invariants, decompose_positive, find_transverse_class, h1, inertia, intersection_form,
    ker_pairing, BundleInvariants, CohClass1, EulerClass, RealClass2, RealCoord,
};
use symcirc::obstruction::{degree_report, verdict, FailReason, Flags, Status};
use symcirc::presentations::{five_two, parse_presentation, splice_t3, three_torus, trefoil, Presentation};

fn torus(b: usize) -> Presentation {
    let names: Vec<String> = (1..=b).map(|i| format!("x_{i}")).collect();
    let mut rels = Vec::new();
    for i in 0..b {
        for j in i + 1..b {
            rels.push(format!("[{}, {}]", names[i], names[j]));
        }
    }
    parse_presentation(&format!("< {} | {} >", names.join(", "), rels.join(", "))).unwrap()
}

fn t_pow_minus_one_squared(d: i32) -> LaurentPoly {
    let t = vars(&["t"]);
    let f = &LaurentPoly::monomial(t.clone(), [d].into_iter().collect(), 1) - &LaurentPoly::one(t);
    &f * &f
}

#[test]
fn three_torus_alexander() {
    let p = three_torus();
    assert!(alexander_multivariable(&p).unwrap().is_one());
    for (phi, d) in [(vec![0, 0, 1], 1), (vec![1, -2, 3], 1), (vec![0, 2, 0], 2), (vec![2, 4, -2], 2)] {
        let phi = CohClass1::new(phi);
        let want = t_pow_minus_one_squared(d);
        assert!(alexander_one_variable(&p, &phi).unwrap().associated(&want));
        assert!(alexander_one_variable_fox(&p, &phi).unwrap().associated(&want));
    }
}

#[test]
fn trefoil_splice_is_monic_of_consistent_degree() {
    let p = splice_t3(&trefoil()).unwrap();
    let phi = CohClass1::new(vec![0, 0, 1]);
    let groups = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)];
    let recs = degree_report(&p, &phi, &groups).unwrap();
    assert_eq!(recs.len(), 1 + 7 + 26);
    let two = BigRational::from_integer(BigInt::from(2));
    assert_eq!(recs[0].degree, Some(4));
    assert_eq!(recs[0].div_phi_g, 1);
    for r in &recs {
        assert!(r.monic, "{} {:?}", r.group_name(), r.hom.images);
        assert_eq!(r.implied_zeta_phi.as_ref(), Some(&two));
    }
    assert_eq!(verdict(&recs, Flags::default()).status, Status::Passes);
}

#[test]
fn five_two_splice_fails_at_trivial_quotient() {
    let p = splice_t3(&five_two()).unwrap();
    let phi = CohClass1::new(vec![0, 0, 1]);
    let recs = degree_report(&p, &phi, &[FiniteGroup::cyclic(2)]).unwrap();
    let v = verdict(&recs, Flags::default());
    assert_eq!(v.status, Status::Fails);
    let w = v.witness.unwrap();
    assert_eq!(w.index, 0);
    assert_eq!(w.record.hom.order(), 1);
    assert_eq!(w.reason, FailReason::NonMonic);
    let d = w.record.poly.polynomial().unwrap();
    assert!(LaurentPoly::univariate("t", 0, &[2, -3, 2]).divides(d));
}

#[test]
fn verdict_is_monotone() {
    let good = degree_report(&splice_t3(&trefoil()).unwrap(), &CohClass1::new(vec![0, 0, 1]), &[]).unwrap();
    let bad = degree_report(&splice_t3(&five_two()).unwrap(), &CohClass1::new(vec![0, 0, 1]), &[]).unwrap();
    let mut all = bad.clone();
    all.extend(good.iter().cloned());
    assert_eq!(verdict(&all, Flags::default()).status, Status::Fails);
    let mut all = good.clone();
    all.extend(bad);
    assert_eq!(verdict(&all, Flags::default()).status, Status::Fails);
}

#[test]
fn k_zero_mode_on_three_torus() {
    let p = three_torus();
    let phi = CohClass1::new(vec![1, 0, 0]);
    let recs = degree_report(&p, &phi, &[FiniteGroup::cyclic(2)]).unwrap();
    for r in &recs {
        assert!(r.implied_zeta_phi.as_ref().unwrap().is_zero());
        assert_eq!(r.cover_b1, 3);
    }
    let flags = Flags {
        k_zero: true,
        ..Flags::default()
    };
    assert_eq!(verdict(&recs, flags).status, Status::Passes);
    let tref = degree_report(&splice_t3(&trefoil()).unwrap(), &CohClass1::new(vec![0, 0, 1]), &[]).unwrap();
    assert_eq!(verdict(&tref, flags).witness.unwrap().reason, FailReason::NonzeroZeta);
}

#[test]
fn bundle_invariants() {
    let h = h1(&three_torus());
    let e = EulerClass::pd(&h, vec![0, 0, 1]).unwrap();
    let want = BundleInvariants {
        b1: 3,
        b2: 4,
        b2_plus: 2,
        b2_minus: 2,
        signature: 0,
    };
    assert_eq!(circle_bundle_invariants(&h, &e).unwrap(), want);
    let mut rng = StdRng::seed_from_u64(11);
    for b in 1..=6 {
        let h = h1(&torus(b));
        for _ in 0..5 {
            let mut v: Vec<i64> = (0..b).map(|_| rng.gen_range(-3..=3)).collect();
            v[rng.gen_range(0..b)] = rng.gen_range(1..=3);
            let e = EulerClass::pd(&h, v).unwrap();
            let inv = circle_bundle_invariants(&h, &e).unwrap();
            assert_eq!(inv.signature, 0);
            assert_eq!(inv.b2_plus, inv.b2_minus);
            assert_eq!(inv.b2_plus, b - 1);
            let form = intersection_form(&h, &e).unwrap();
            let k = form.half;
            let a: Vec<Vec<BigRational>> = (0..k)
                .map(|i| (0..k).map(|j| BigRational::from_integer(BigInt::from(((i + j) % 3) as i64 - 1))).collect())
                .collect();
            let (pos, neg, zero) = inertia(&form.instantiate(&a));
            assert_eq!((pos, neg, zero), (b - 1, b - 1, 0));
        }
    }
}

/// Rank of a set of integer vectors over ℚ.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut r = 0;
    let cols = m.first().map_or(0, |x| x.len());
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for k in 0..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn kernel_pairing_and_transverse_classes() {
    let h = h1(&three_torus());
    let z = [0, 0, 1];
    let mut grid = Vec::new();
    for x in -2..=2 {
        for y in -1..=1 {
            for w in -2..=2 {
                if (x, y, w) != (0, 0, 0) {
                    grid.push([x, y, w]);
                }
            }
        }
    }
    grid.truncate(50);
    assert_eq!(grid.len(), 50);
    assert!(grid.iter().any(|v| v[0] == 0 && v[1] == 0));
    for v in grid {
        let e = EulerClass::pd(&h, v.to_vec()).unwrap();
        let ker = ker_pairing(&h, &e).unwrap();
        let rows: Vec<Vec<i64>> = ker.iter().map(|c| c.values.clone()).collect();
        assert_eq!(ker.len(), 2, "{v:?}");
        assert_eq!(rank(&rows), 2);
        for c in &ker {
            assert_eq!(c.pair(&v), 0);
        }
        let parallel = rank(&[v.to_vec(), z.to_vec()]) == 1;
        let t = find_transverse_class(&h, &e, &z).unwrap();
        assert_eq!(t.is_none(), parallel, "{v:?}");
        if let Some(phi) = t {
            assert_eq!(phi.pair(&v), 0);
            assert_ne!(phi.pair(&z), 0);
        }
    }
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn check_terms(terms: &[symcirc::homology::PositiveTerm], a: &[BigInt]) -> Vec<BigRational> {
    let mut sum = vec![BigRational::zero(); a.len()];
    for t in terms {
        assert!(t.coefficient.is_positive());
        let p: BigInt = t.class.iter().zip(a).map(|(x, y)| x * y).sum();
        assert!(p.is_positive());
        for (s, c) in sum.iter_mut().zip(&t.class) {
            *s += &t.coefficient * BigRational::from_integer(c.clone());
        }
    }
    sum
}

#[test]
fn positive_decomposition_rational() {
    let mut rng = StdRng::seed_from_u64(5);
    let mut done = 0;
    while done < 1000 {
        let n = rng.gen_range(1..=4);
        let a: Vec<BigInt> = (0..n).map(|_| big(rng.gen_range(-5..=5))).collect();
        let v: Vec<BigRational> = (0..n)
            .map(|_| BigRational::new(big(rng.gen_range(-20..=20)), big(rng.gen_range(1..=12))))
            .collect();
        let pairing: BigRational = v.iter().zip(&a).map(|(x, y)| x * BigRational::from_integer(y.clone())).sum();
        let h = RealClass2::rational(v.clone());
        if !pairing.is_positive() {
            assert!(decompose_positive(&h, &a).is_err());
            continue;
        }
        let terms = decompose_positive(&h, &a).unwrap();
        assert_eq!(check_terms(&terms, &a), v);
        done += 1;
    }
}

/// Rational bracket of `√k` of width at most `2^-bits`.
fn sqrt_bracket(k: u64, bits: u32) -> (BigRational, BigRational) {
    let scale = BigInt::one() << bits;
    let target = BigInt::from(k) * &scale * &scale;
    let r = target.sqrt();
    (BigRational::new(r.clone(), scale.clone()), BigRational::new(r + 1, scale))
}

#[test]
fn positive_decomposition_interval() {
    let mut rng = StdRng::seed_from_u64(9);
    let mut done = 0;
    let primes = [2u64, 3, 5, 7, 11, 13];
    while done < 100 {
        let n = rng.gen_range(2..=4);
        let a: Vec<BigInt> = (0..n).map(|_| big(rng.gen_range(-5..=5))).collect();
        let coords: Vec<RealCoord> = (0..n)
            .map(|_| {
                let (lo, hi) = sqrt_bracket(primes[rng.gen_range(0..primes.len())], 40);
                let s = BigRational::from_integer(big(rng.gen_range(-3..=3)));
                let o = BigRational::from_integer(big(rng.gen_range(-2..=2)));
                if s.is_negative() {
                    RealCoord::Interval { lo: &s * &hi + &o, hi: &s * &lo + &o }
                } else if s.is_zero() {
                    RealCoord::Exact(o)
                } else {
                    RealCoord::Interval { lo: &s * &lo + &o, hi: &s * &hi + &o }
                }
            })
            .collect();
        let lower: BigRational = coords
            .iter()
            .zip(&a)
            .map(|(x, y)| {
                let y = BigRational::from_integer(y.clone());
                if y.is_negative() { x.hi() * &y } else { x.lo() * &y }
            })
            .sum();
        if !lower.is_positive() {
            continue;
        }
        let h = RealClass2 { coords: coords.clone() };
        let terms = decompose_positive(&h, &a).unwrap();
        let sum = check_terms(&terms, &a);
        for (s, c) in sum.iter().zip(&coords) {
            assert!(c.lo() <= s && s <= c.hi(), "{s} outside [{}, {}]", c.lo(), c.hi());
        }
        done += 1;
    }
}
