//! Maps between realizations: the direct correspondence between canonical
//! words and tableaux, transport of elements along f-words, and a
//! label-preserving isomorphism check for crystal graphs.

use std::collections::VecDeque;
use std::fmt;

use itertools::Itertools;

use crate::cartan::Index;
use crate::error::{Error, Result};
use crate::graph::{Crystal, CrystalGraph};
use crate::monomial::{Monomial, Variant};
use crate::tableaux::{Kind, Tableau};
use crate::xalgebra::{canonical_violation, xword_monomial, XWord};

/// Canonical word to tableau. Standard words give right-justified
/// S-tableaux (rows read `a_n … a_1` over `b_{m+n} … b_1`); negative words
/// give left-justified T-tableaux (rows `a_1 … a_{m+n}` over `b_1 … b_n`).
pub fn psi(w: &XWord) -> Result<Tableau> {
    if let Some(v) = canonical_violation(w) {
        return Err(Error::NonCanonical(format!("{w}: {v}")));
    }
    let shape = w.shape()?;
    let (m, n) = (shape.c1 as usize, shape.c2 as usize);
    match w.variant() {
        Variant::Standard => {
            let rev = |r: &[_]| r.iter().rev().copied().collect::<Vec<_>>();
            Tableau::new(Kind::S, m, n, rev(w.top()), rev(w.bottom()))
        }
        Variant::Negative => Tableau::new(Kind::T, m, n, w.top().to_vec(), w.bottom().to_vec()),
    }
}

/// Tableau back to its canonical word.
pub fn psi_inv_word(t: &Tableau) -> Result<XWord> {
    t.validate().map_err(|v| Error::InvalidTableau(format!("{t}: {v}")))?;
    Ok(match t.kind() {
        Kind::S => XWord::new(Variant::Standard, t.top().to_vec(), t.bottom().to_vec()),
        Kind::T => XWord::new(Variant::Negative, t.top().to_vec(), t.bottom().to_vec()),
    })
}

/// Tableau to monomial: the product over its canonical word.
pub fn psi_inv(t: &Tableau) -> Result<Monomial> {
    psi_inv_word(t).map(|w| xword_monomial(&w))
}

fn render_word(word: &[Index]) -> String {
    if word.is_empty() {
        return "(empty)".into();
    }
    word.iter().map(|i| format!("f{i}")).join(" ")
}

/// Applies `f̃_{w_1}, f̃_{w_2}, …` in order to `start`.
pub fn apply_word<C: Crystal>(target: &C, start: &C::Elem, word: &[Index]) -> Result<C::Elem> {
    let mut cur = start.clone();
    for (k, &i) in word.iter().enumerate() {
        cur = target
            .f(i, &cur)?
            .ok_or_else(|| Error::Transport { prefix: render_word(&word[..=k]) })?;
    }
    Ok(cur)
}

/// Image of `source_vertex` under the unique isomorphism sending the
/// highest vertex of `source` to `target_hw`: the BFS-tree f-word reaching
/// the vertex is replayed on the target.
pub fn transport<P, C: Crystal>(
    source: &CrystalGraph<P>,
    source_vertex: usize,
    target: &C,
    target_hw: &C::Elem,
) -> Result<C::Elem> {
    apply_word(target, target_hw, &source.word_to(source_vertex))
}

/// Images of every vertex of `source`, indexed like `source.vertices()`.
/// Walks the BFS tree once, so the whole component costs one operator
/// application per vertex.
pub fn transport_all<P, C: Crystal>(source: &CrystalGraph<P>, target: &C, target_hw: &C::Elem) -> Result<Vec<C::Elem>> {
    let mut images: Vec<Option<C::Elem>> = vec![None; source.len()];
    images[0] = Some(target_hw.clone());
    // vertices are stored by depth, so parents come first
    for v in 1..source.len() {
        let word = source.word_to(v);
        let last = *word.last().expect("non-highest vertex has a parent");
        let parent = source
            .e_edge(v, last)
            .expect("tree edge is a graph edge");
        let img = images[parent].as_ref().expect("parent visited first");
        let next = target.f(last, img)?.ok_or_else(|| Error::Transport { prefix: render_word(&word) })?;
        images[v] = Some(next);
    }
    Ok(images.into_iter().map(|x| x.expect("all vertices visited")).collect())
}

/// A bijection between the vertex sets of two crystal graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    forward: Vec<usize>,
}

impl VertexMap {
    pub fn image(&self, v: usize) -> usize {
        self.forward[v]
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.forward.iter().copied().enumerate()
    }

    pub fn inverse(&self) -> VertexMap {
        let mut back = vec![0; self.forward.len()];
        for (a, b) in self.pairs() {
            back[b] = a;
        }
        VertexMap { forward: back }
    }
}

/// Where two graphs first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub left: String,
    pub right: String,
    pub label: Option<Index>,
    pub reason: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Some(i) => write!(f, "at {} ~ {} (label {i}): {}", self.left, self.right, self.reason),
            None => write!(f, "at {} ~ {}: {}", self.left, self.right, self.reason),
        }
    }
}

/// Simultaneous BFS from the two highest vertices, matching labelled
/// out-edges. Returns the bijection or the first divergence.
pub fn check_isomorphic<P, Q>(a: &CrystalGraph<P>, b: &CrystalGraph<Q>) -> std::result::Result<VertexMap, Mismatch> {
    let key_a = |v: usize| a.vertex(v).key.clone();
    let key_b = |v: usize| b.vertex(v).key.clone();
    let mismatch = |u: usize, w: usize, label, reason: String| Mismatch { left: key_a(u), right: key_b(w), label, reason };
    if a.len() != b.len() {
        return Err(mismatch(0, 0, None, format!("vertex counts differ: {} vs {}", a.len(), b.len())));
    }
    let mut fwd: Vec<Option<usize>> = vec![None; a.len()];
    let mut back: Vec<Option<usize>> = vec![None; b.len()];
    fwd[0] = Some(0);
    back[0] = Some(0);
    let mut queue = VecDeque::from([(0, 0)]);
    while let Some((u, w)) = queue.pop_front() {
        for i in Index::ALL {
            match (a.f_edge(u, i), b.f_edge(w, i)) {
                (None, None) => {}
                (Some(_), None) => return Err(mismatch(u, w, Some(i), "only the left side has an edge".into())),
                (None, Some(_)) => return Err(mismatch(u, w, Some(i), "only the right side has an edge".into())),
                (Some(u2), Some(w2)) => match (fwd[u2], back[w2]) {
                    (None, None) => {
                        fwd[u2] = Some(w2);
                        back[w2] = Some(u2);
                        queue.push_back((u2, w2));
                    }
                    (Some(x), Some(y)) if x == w2 && y == u2 => {}
                    _ => {
                        return Err(mismatch(u2, w2, Some(i), "edge targets are matched inconsistently".into()));
                    }
                },
            }
        }
    }
    let forward = fwd
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| mismatch(v, 0, None, "vertex not reached from the highest vertex".into())))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(VertexMap { forward })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Weight;
    use crate::graph::DEFAULT_VERTEX_CAP;
    use crate::monomial::{generate_component, highest_monomial, CrystalConfig, MonomialCrystal};
    use crate::tableaux::{generate_tableaux, highest_tableau, TableauCrystal};
    use crate::xalgebra::{enumerate_canonical, XLetter::*};

    fn std_component(m: i32, n: i32) -> CrystalGraph<Monomial> {
        let hw = highest_monomial(Weight::new(m, n), Variant::Standard).unwrap();
        generate_component(&hw, CrystalConfig::default()).unwrap()
    }

    #[test]
    fn psi_worked_example() {
        let w = XWord::standard(&[Zero, Two, Two], &[Bar2, Bar3, Zero, Three]);
        let t = psi(&w).unwrap();
        assert_eq!(t.to_string(), "kind=S; shape=1,3; top=2,2,0; bottom=3,0,3b,2b");
        assert_eq!(psi_inv(&t).unwrap().to_string(), "Y1(2)^3 Y1(3)^-3 Y1(4)^-1 Y2(2)^2 Y2(3)^-1");
        assert_eq!(psi_inv_word(&t).unwrap(), w);
    }

    #[test]
    fn psi_of_highest_words() {
        let t = psi(&XWord::standard(&[One], &[Two])).unwrap();
        assert_eq!(t, highest_tableau(Weight::new(0, 1), Kind::S).unwrap());
        for (m, n) in [(1, 0), (2, 3), (0, 2)] {
            let lam = Weight::new(m, n);
            assert_eq!(
                psi_inv(&highest_tableau(lam, Kind::S).unwrap()).unwrap(),
                highest_monomial(lam, Variant::Standard).unwrap()
            );
            assert_eq!(
                psi_inv(&highest_tableau(lam, Kind::T).unwrap()).unwrap(),
                highest_monomial(lam, Variant::Negative).unwrap()
            );
        }
    }

    #[test]
    fn psi_rejects_non_canonical() {
        assert!(matches!(psi(&XWord::standard(&[One], &[Zero])), Err(Error::NonCanonical(_))));
        let bad: Tableau = "kind=S; shape=0,1; top=1; bottom=0".parse().unwrap();
        assert!(matches!(psi_inv(&bad), Err(Error::InvalidTableau(_))));
    }

    #[test]
    fn psi_roundtrip_and_weight() {
        for (m, n) in [(1, 1), (2, 1), (0, 2)] {
            for variant in [Variant::Standard, Variant::Negative] {
                for w in enumerate_canonical(Weight::new(m, n), variant).unwrap() {
                    let t = psi(&w).unwrap();
                    assert!(t.is_valid());
                    assert_eq!(psi_inv_word(&t).unwrap(), w);
                    assert_eq!(t.weight(), xword_monomial(&w).weight());
                }
            }
        }
    }

    #[test]
    fn transport_of_highest_is_target_highest() {
        let g = std_component(1, 1);
        let hw = highest_tableau(Weight::new(1, 1), Kind::T).unwrap();
        assert_eq!(transport(&g, 0, &TableauCrystal, &hw).unwrap(), hw);
    }

    #[test]
    fn transport_lambda2_agrees_with_psi() {
        let g = std_component(0, 1);
        let table = crate::xalgebra::FactorTable::new(Weight::new(0, 1), Variant::Standard).unwrap();
        let hw = highest_tableau(Weight::new(0, 1), Kind::S).unwrap();
        for v in 0..g.len() {
            let img = transport(&g, v, &TableauCrystal, &hw).unwrap();
            let w = table.factorize(&g.vertex(v).payload).unwrap();
            assert_eq!(img, psi(w).unwrap());
        }
    }

    #[test]
    fn transport_reports_failing_prefix() {
        // Λ2 words do not all apply inside Λ1
        let big = std_component(0, 1);
        let small = highest_monomial(Weight::new(1, 0), Variant::Standard).unwrap();
        let deepest = big.len() - 1;
        let err = transport(&big, deepest, &MonomialCrystal::default(), &small).unwrap_err();
        assert!(matches!(err, Error::Transport { .. }));
    }

    #[test]
    fn isomorphism_checks() {
        let m2 = std_component(0, 1);
        let s2 = generate_tableaux(Weight::new(0, 1), Kind::S, DEFAULT_VERTEX_CAP).unwrap();
        let map = check_isomorphic(&m2, &s2).unwrap();
        assert_eq!(map.len(), 14);
        let back = check_isomorphic(&s2, &m2).unwrap();
        assert_eq!(back, map.inverse());

        let m1 = std_component(1, 0);
        let err = check_isomorphic(&m1, &m2).unwrap_err();
        assert!(err.reason.contains("7 vs 14"));
    }

    #[test]
    fn transport_is_path_independent() {
        let g = std_component(1, 2);
        let hw = highest_tableau(Weight::new(1, 2), Kind::T).unwrap();
        let images = transport_all(&g, &TableauCrystal, &hw).unwrap();
        for e in g.edges() {
            let via = TableauCrystal.f(e.i, &images[e.from]).unwrap();
            assert_eq!(via.as_ref(), Some(&images[e.to]));
        }
        for v in 0..g.len() {
            assert_eq!(transport(&g, v, &TableauCrystal, &hw).unwrap(), images[v]);
        }
    }
}
