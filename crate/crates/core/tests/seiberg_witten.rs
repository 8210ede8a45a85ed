use num_bigint::BigInt;
use proptest::prelude::*;
use symcirc::alexander::alexander_multivariable;
use symcirc::homology::{h1, EulerClass};
use symcirc::presentations::{builtin_knots, five_two, splice_t3, three_torus, trefoil};
use symcirc::swbridge::{
    baldridge_pushforward, coefficient_sum, splice_sw, sw_from_alexander, SwPolynomial, SwScale,
};
use symcirc::exactalg::{vars, LaurentPoly};

fn euler(v: [i64; 3]) -> EulerClass {
    EulerClass::pd(&h1(&three_torus()), v.to_vec()).unwrap()
}

fn single_class_one(s: &SwPolynomial) -> bool {
    s.len() == 1 && s.support().values().all(|c| *c == BigInt::from(1))
}

#[test]
fn product_splice_has_one_basic_class() {
    let one = LaurentPoly::one(vars(&["z"]));
    for e in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [2, -3, 0], [1, 1, 7]] {
        assert!(single_class_one(&splice_sw(&one, &euler(e)).unwrap()), "{e:?}");
    }
}

#[test]
fn trefoil_splice_collapses_along_z() {
    let d = LaurentPoly::univariate("z", 0, &[1, -1, 1]);
    for e in [[0, 0, 1], [0, 0, -1], [0, 0, 2], [0, 0, -2]] {
        assert!(single_class_one(&splice_sw(&d, &euler(e)).unwrap()), "{e:?}");
    }
    for e in [[0, 1, 0], [1, 0, 0], [0, 0, 3], [1, 1, 1]] {
        assert_eq!(splice_sw(&d, &euler(e)).unwrap().len(), 3, "{e:?}");
    }
}

#[test]
fn fast_path_matches_full_pipeline() {
    let es = [[0, 0, 1], [0, 0, 2], [1, 0, 0], [0, 1, 1], [2, 1, 3]];
    for k in builtin_knots() {
        let p = splice_t3(&k).unwrap();
        let h = h1(&p);
        let full = sw_from_alexander(&alexander_multivariable(&p).unwrap(), &h).unwrap();
        assert!(full.is_symmetric());
        let dk = k.alexander.with_vars(vars(&["z"]));
        for e in es {
            let e = EulerClass::pd(&h, e.to_vec()).unwrap();
            let a = baldridge_pushforward(&full, &e).unwrap();
            let b = splice_sw(&dk, &e).unwrap();
            assert_eq!(a, b, "{}", k.name);
            assert!(a.is_symmetric());
        }
    }
}

#[test]
fn coefficient_sums_of_splices() {
    for k in [trefoil(), five_two()] {
        let p = splice_t3(&k).unwrap();
        let s = sw_from_alexander(&alexander_multivariable(&p).unwrap(), &h1(&p)).unwrap();
        assert_eq!(coefficient_sum(&s), BigInt::from(1), "{}", k.name);
    }
    assert_eq!(coefficient_sum(&SwPolynomial::free(3, SwScale::Half, [])), BigInt::from(0));
}

#[test]
fn torsion_euler_class_rejected() {
    let s = SwPolynomial::free(3, SwScale::Half, [(vec![0, 0, 0], BigInt::from(1))]);
    assert!(baldridge_pushforward(&s, &euler([0, 0, 0])).is_err());
}

fn sw_strategy() -> impl Strategy<Value = SwPolynomial> {
    (
        prop::collection::vec((prop::collection::vec(-4i64..=4, 3), -5i64..=5), 0..8),
        any::<bool>(),
    )
        .prop_map(|(terms, half)| {
            let scale = if half { SwScale::Half } else { SwScale::Full };
            let sym = terms.into_iter().flat_map(|(p, c)| {
                let q: Vec<i64> = p.iter().map(|x| -x).collect();
                [(p, BigInt::from(c)), (q, BigInt::from(c))]
            });
            SwPolynomial::free(3, scale, sym)
        })
}

proptest! {
    #[test]
    fn pushforward_preserves_coefficient_sum(
        s in sw_strategy(),
        e in prop::collection::vec(-4i64..=4, 3).prop_filter("nontorsion", |v| v.iter().any(|&x| x != 0)),
    ) {
        let m = baldridge_pushforward(&s, &euler([e[0], e[1], e[2]])).unwrap();
        prop_assert_eq!(coefficient_sum(&m), coefficient_sum(&s));
        prop_assert!(m.is_symmetric());
        prop_assert!(m.len() <= s.len());
    }
}
