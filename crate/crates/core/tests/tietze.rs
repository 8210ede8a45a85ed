mod support;

use support::tietze_moves::{check_tietze, classes};
use symcirc::homology::CohClass1;
use symcirc::presentations::{figure_eight, splice_t3, three_torus, trefoil, zero_surgery, Presentation};

fn check(p: &Presentation, classes: &[CohClass1], seed: u64) {
    if let Err(e) = check_tietze(p, classes, seed, 50) {
        panic!("{p}: {e}");
    }
}

#[test]
fn three_torus_stable() {
    check(&three_torus(), &classes(3), 1);
}

#[test]
fn zero_surgery_stable() {
    check(&zero_surgery(&trefoil()).unwrap(), &classes(1), 2);
}

#[test]
fn trefoil_splice_stable() {
    check(&splice_t3(&trefoil()).unwrap(), &classes(3), 3);
}

#[test]
fn figure_eight_splice_stable() {
    check(&splice_t3(&figure_eight()).unwrap(), &classes(3), 4);
}
