use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use symcirc::alexander::{
    alexander_multivariable, alexander_one_variable_fox, fundamental_formula_holds, is_symmetric,
};
use symcirc::exactalg::{gcd2, smith_normal_form, standard_vars, Exponent, IntMatrix, LaurentPoly};
use symcirc::homology::{h1, CohClass1};
use symcirc::presentations::{builtin_knots, free_reduce, splice_t3, three_torus, zero_surgery, Word};

fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, prop_oneof![Just(1i32), Just(-1i32), -3i32..=3]), 0..max_len)
        .prop_map(|v| Word::from_letters(v.into_iter().filter(|l| l.1 != 0)))
}

fn poly_strategy(b: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, b), -4i64..=4), 0..5).prop_map(move |terms| {
        LaurentPoly::from_terms(
            standard_vars(b),
            terms.into_iter().map(|(e, c)| (e.into_iter().collect::<Exponent>(), c)),
        )
    })
}

proptest! {
    #[test]
    fn smith_form_is_a_valid_factorization(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 4), 1..5)) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs() == BigInt::from(1));
        prop_assert!(s.v.determinant().abs() == BigInt::from(1));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!(!w[0].is_zero());
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn gcd_divides_both(a in poly_strategy(2), b in poly_strategy(2), c in poly_strategy(2)) {
        let (x, y) = (&a * &c, &b * &c);
        let g = gcd2(&x, &y);
        if !(x.is_zero() && y.is_zero()) {
            prop_assert!(g.divides(&x));
            prop_assert!(g.divides(&y));
            if !c.is_zero() {
                prop_assert!(c.divides(&g));
            }
        }
    }

    #[test]
    fn unit_normalize_is_idempotent(p in poly_strategy(3), shift in prop::collection::vec(-3i32..=3, 3), neg in any::<bool>()) {
        let n = p.unit_normalize();
        prop_assert_eq!(n.unit_normalize(), n.clone());
        let q = p.shift(&shift);
        let q = if neg { -q } else { q };
        prop_assert_eq!(q.unit_normalize(), n);
    }

    #[test]
    fn free_reduce_is_idempotent(w in word_strategy(3, 20)) {
        let r = free_reduce(&w);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert!(w.mul(&w.inverse()).is_identity());
        for l in r.letters().windows(2) {
            prop_assert!(l[0].0 != l[1].0);
        }
    }

    #[test]
    fn fox_fundamental_formula(w in word_strategy(4, 16)) {
        prop_assert!(fundamental_formula_holds(&w, 4));
    }
}

#[test]
fn alexander_polynomials_are_symmetric() {
    let mut closed = vec![three_torus()];
    for k in builtin_knots() {
        closed.push(splice_t3(&k).unwrap());
        closed.push(zero_surgery(&k).unwrap());
    }
    for p in &closed {
        let d = alexander_multivariable(p).unwrap();
        assert!(is_symmetric(&d), "{p}: {d}");
        let b = h1(p).free_rank();
        for phi in [CohClass1::dual_basis(b, b - 1), CohClass1::new((1..=b as i64).collect())] {
            let d = alexander_one_variable_fox(p, &phi).unwrap();
            assert!(is_symmetric(&d), "{p}: {d}");
        }
    }
}
