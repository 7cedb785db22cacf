use itertools::Itertools;

use g2_crystal::cartan::Weight;
use g2_crystal::monomial::Variant;
use g2_crystal::xalgebra::{canonical_violation, normal_form, xword_monomial, FactorTable, XLetter, XWord};

fn rows(len: usize) -> Vec<Vec<XLetter>> {
    XLetter::ALL.into_iter().combinations_with_replacement(len).collect()
}

/// Every word of shape λ whose product lies in the component rewrites to
/// that product's canonical word.
fn normal_form_is_canonical(m: usize, n: usize) -> (usize, usize) {
    let table = FactorTable::new(Weight::new(m as i32, n as i32), Variant::Standard).unwrap();
    let (mut inside, mut outside) = (0, 0);
    for top in rows(n) {
        for bottom in rows(m + n) {
            let w = XWord::standard(&top, &bottom);
            let Some(canon) = table.factorize(&xword_monomial(&w)) else {
                outside += 1;
                continue;
            };
            let nf = normal_form(&w).unwrap();
            assert_eq!(&nf, canon, "start {w}");
            assert_eq!(canonical_violation(&nf), None);
            inside += 1;
        }
    }
    (inside, outside)
}

#[test]
fn normal_form_lambda2() {
    let (inside, _) = normal_form_is_canonical(0, 1);
    assert!(inside >= 14);
}

#[test]
fn normal_form_small_weights() {
    for (m, n) in [(1, 1), (0, 2), (2, 1), (1, 2)] {
        let (inside, outside) = normal_form_is_canonical(m, n);
        assert!(inside > 0 && outside > 0, "({m},{n})");
    }
}

#[test]
fn normal_form_is_idempotent_on_canonical_words() {
    for (m, n) in [(0, 3), (2, 2)] {
        let lam = Weight::new(m, n);
        for w in g2_crystal::xalgebra::enumerate_canonical(lam, Variant::Standard).unwrap() {
            assert_eq!(normal_form(&w).unwrap(), w);
        }
    }
}
