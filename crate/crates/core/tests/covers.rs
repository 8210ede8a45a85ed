use symcirc::alexander::{
    admissible_blocks, alexander_one_variable, alexander_one_variable_fox, twisted_alexander,
    twisted_alexander_at,
};
use symcirc::covers::{
    enumerate_epimorphisms, gamma_quotient, induced_class, reidemeister_schreier, FiniteGroup, FiniteHom,
};
use symcirc::homology::{h1, CohClass1};
use symcirc::presentations::{splice_t3, three_torus, trefoil, zero_surgery, Presentation};

fn cases() -> Vec<(&'static str, Presentation, CohClass1)> {
    vec![
        ("T3", three_torus(), CohClass1::new(vec![0, 0, 1])),
        ("T3", three_torus(), CohClass1::new(vec![1, 2, 0])),
        ("splice 3_1", splice_t3(&trefoil()).unwrap(), CohClass1::new(vec![0, 0, 1])),
        ("splice 3_1", splice_t3(&trefoil()).unwrap(), CohClass1::new(vec![1, 0, 1])),
    ]
}

fn homs(p: &Presentation) -> Vec<FiniteHom> {
    [2, 3].iter().flat_map(|&n| enumerate_epimorphisms(p, &FiniteGroup::cyclic(n))).collect()
}

#[test]
fn twisted_equals_cover_polynomial() {
    for (name, p, phi) in cases() {
        let all = homs(&p);
        assert!(!all.is_empty());
        for a in all {
            let tw = twisted_alexander(&p, &a, &phi).unwrap();
            let tw = tw.polynomial().expect("exact quotient").clone();
            let cover = reidemeister_schreier(&p, &a).unwrap();
            let ic = induced_class(&p, &cover, &phi).unwrap();
            let direct = alexander_one_variable_fox(&cover.presentation, &ic.class).unwrap();
            assert!(tw.associated(&direct), "{name} {:?}: {tw} vs {direct}", a.images);
            if ic.cover_h1.free_rank() >= 2 {
                let formula = alexander_one_variable(&cover.presentation, &ic.class).unwrap();
                assert!(tw.associated(&formula), "{name} {:?}: {tw} vs {formula}", a.images);
            }
        }
    }
}

#[test]
fn column_blocks_agree() {
    for (name, p, phi) in cases() {
        for a in homs(&p).into_iter().take(6) {
            let blocks = admissible_blocks(&p, &a, &phi).unwrap();
            let first = twisted_alexander(&p, &a, &phi).unwrap();
            for j in blocks {
                let other = twisted_alexander_at(&p, &a, &phi, j).unwrap().unwrap();
                assert_eq!(other, first, "{name} block {j}");
            }
        }
    }
}

#[test]
fn cover_bookkeeping() {
    let surg = zero_surgery(&trefoil()).unwrap();
    let mut all: Vec<(Presentation, FiniteHom)> = Vec::new();
    for (_, p, _) in cases().into_iter().step_by(2) {
        for a in homs(&p) {
            all.push((p.clone(), a));
        }
    }
    for a in enumerate_epimorphisms(&surg, &FiniteGroup::symmetric(3)) {
        all.push((surg.clone(), a));
    }
    for (p, a) in all {
        let cover = reidemeister_schreier(&p, &a).unwrap();
        let g = a.order() as i64;
        assert_eq!(cover.presentation.deficiency(), g * (p.deficiency() - 1) + 1);
        assert_eq!(cover.presentation.ngens() as i64, g * (p.ngens() as i64 - 1) + 1);
        assert!(h1(&cover.presentation).free_rank() >= h1(&p).free_rank());
        for (w, &(c, j)) in cover.words.iter().zip(&cover.labels) {
            assert_eq!(a.eval(w), a.target.identity());
            assert_eq!(a.eval(&cover.transversal[c]), c);
            assert!(j < p.ngens());
        }
    }
}

#[test]
fn gamma_contains_torsion() {
    let surg = zero_surgery(&trefoil()).unwrap();
    let a = FiniteHom::trivial(&surg);
    assert_eq!(gamma_quotient(&surg, &a).unwrap().order(), 1);
    let p = symcirc::presentations::parse_presentation("< x, y | [x, y], y^4 >").unwrap();
    let a = enumerate_epimorphisms(&p, &FiniteGroup::cyclic(2)).into_iter().next().unwrap();
    let g = gamma_quotient(&p, &a).unwrap();
    assert!(g.order().is_multiple_of(4) && g.order() <= 8);
}
