//! The four realizations of `B(λ)` behind one name, element mapping
//! between them, and the cross-checks run by `g2crystal verify`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::cartan::{pairing, simple_root, weyl_dim, Index, Weight};
use crate::error::{Error, Result};
use crate::graph::{Crystal, CrystalGraph, GraphDoc};
use crate::iso::{apply_word, check_isomorphic, psi, transport_all};
use crate::monomial::{generate_component_capped, highest_monomial, CrystalConfig, Monomial, MonomialCrystal, Variant};
use crate::tableaux::{generate_tableaux, highest_tableau, Kind, Tableau, TableauCrystal};
use crate::xalgebra::{enumerate_canonical, xword_monomial, FactorTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Realization {
    Monomial,
    MonomialNeg,
    TableauS,
    TableauT,
}

impl Realization {
    pub const ALL: [Realization; 4] =
        [Realization::Monomial, Realization::MonomialNeg, Realization::TableauS, Realization::TableauT];

    pub fn name(self) -> &'static str {
        match self {
            Realization::Monomial => "monomial",
            Realization::MonomialNeg => "monomial-neg",
            Realization::TableauS => "tableau-s",
            Realization::TableauT => "tableau-t",
        }
    }

    fn variant(self) -> Option<Variant> {
        match self {
            Realization::Monomial => Some(Variant::Standard),
            Realization::MonomialNeg => Some(Variant::Negative),
            _ => None,
        }
    }

    fn kind(self) -> Option<Kind> {
        match self {
            Realization::TableauS => Some(Kind::S),
            Realization::TableauT => Some(Kind::T),
            _ => None,
        }
    }

    /// The connected component of highest weight `lam`, serialized.
    pub fn generate_doc(self, lam: Weight, cfg: CrystalConfig, cap: usize) -> Result<GraphDoc> {
        let doc = match (self.variant(), self.kind()) {
            (Some(v), _) => monomial_graph(lam, v, cfg, cap)?.to_doc(self.name(), cfg.doc()),
            (_, Some(k)) => generate_tableaux(lam, k, cap)?.to_doc(self.name(), cfg.doc()),
            _ => unreachable!(),
        };
        Ok(doc)
    }

    /// Canonical text of an element given in this realization's grammar.
    pub fn canonical_text(self, input: &str) -> Result<String> {
        Ok(match self.kind() {
            Some(_) => input.parse::<Tableau>()?.to_string(),
            None => input.parse::<Monomial>()?.to_string(),
        })
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Realization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Realization::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown realization {s:?} (expected monomial, monomial-neg, tableau-s or tableau-t)")))
    }
}

fn monomial_graph(lam: Weight, variant: Variant, cfg: CrystalConfig, cap: usize) -> Result<CrystalGraph<Monomial>> {
    generate_component_capped(&highest_monomial(lam.dominant()?, variant)?, cfg, cap)
}

/// Raises `b` with e-operators until neither applies.
fn raise<C: Crystal>(c: &C, b: &C::Elem) -> Result<C::Elem> {
    let mut cur = b.clone();
    'outer: loop {
        for i in Index::ALL {
            if let Some(up) = c.e(i, &cur)? {
                cur = up;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

/// Locates `input` in the `from` component and returns its image in the
/// `to` component, both of highest weight `lam`.
pub fn map_element(
    input: &str,
    from: Realization,
    to: Realization,
    lam: Weight,
    cfg: CrystalConfig,
    cap: usize,
) -> Result<String> {
    let lam = lam.dominant()?;
    let word = match (from.variant(), from.kind()) {
        (Some(v), _) => {
            let m: Monomial = input.parse()?;
            let hw = highest_monomial(lam, v)?;
            let top = raise(&MonomialCrystal::new(cfg), &m)?;
            if top != hw {
                return Err(Error::NotInComponent(format!(
                    "raising {m} to highest weight gives {top} (weight {}), not {hw}",
                    top.weight()
                )));
            }
            let g = monomial_graph(lam, v, cfg, cap)?;
            let v = g.find(&m.to_string()).expect("connected to the highest monomial");
            g.word_to(v)
        }
        (_, Some(k)) => {
            let t: Tableau = input.parse()?;
            if t.kind() != k {
                return Err(Error::NotInComponent(format!("{t} is not a {} tableau", from.name())));
            }
            if t.shape() != lam {
                return Err(Error::NotInComponent(format!("shape {} differs from weight {lam}", t.shape())));
            }
            t.validate().map_err(|v| Error::NotInComponent(format!("{t}: {v}")))?;
            let g = generate_tableaux(lam, k, cap)?;
            let v = g.find(&t.to_string()).ok_or_else(|| Error::NotInComponent(format!("{t} not reached from the highest tableau")))?;
            g.word_to(v)
        }
        _ => unreachable!(),
    };
    match (to.variant(), to.kind()) {
        (Some(v), _) => Ok(apply_word(&MonomialCrystal::new(cfg), &highest_monomial(lam, v)?, &word)?.to_string()),
        (_, Some(k)) => Ok(apply_word(&TableauCrystal, &highest_tableau(lam, k)?, &word)?.to_string()),
        _ => unreachable!(),
    }
}

/// First failure of the crystal axioms on a generated graph: `ẽf̃ = id`,
/// weight, `ε`/`φ` shifts, `φ − ε = ⟨h_i, wt⟩`, and string lengths.
pub fn axiom_violation<C: Crystal>(c: &C, g: &CrystalGraph<C::Elem>) -> Result<Option<String>> {
    for (v, vert) in g.vertices().iter().enumerate() {
        let b = &vert.payload;
        let wt = c.weight(b);
        for i in Index::ALL {
            let (eps, phi) = (c.epsilon(i, b), c.phi(i, b));
            let bad = |why: String| Ok(Some(format!("{} (i={i}): {why}", vert.key)));
            if phi as i64 - eps as i64 != pairing(i, wt) as i64 {
                return bad(format!("phi {phi} - epsilon {eps} != <h_i, wt {wt}>"));
            }
            if g.forward_string(v, i) != phi as usize || g.backward_string(v, i) != eps as usize {
                return bad(format!(
                    "string lengths {}/{} differ from phi {phi} / epsilon {eps}",
                    g.forward_string(v, i),
                    g.backward_string(v, i)
                ));
            }
            match c.f(i, b)? {
                None if phi > 0 => return bad("f kills an element with phi > 0".into()),
                None => {}
                Some(b2) => {
                    if c.e(i, &b2)?.map(|x| c.key(&x)) != Some(vert.key.clone()) {
                        return bad("e(f(b)) != b".into());
                    }
                    if c.weight(&b2) != wt - simple_root(i) {
                        return bad("wt(f(b)) != wt(b) - alpha_i".into());
                    }
                    if c.epsilon(i, &b2) != eps + 1 || c.phi(i, &b2) + 1 != phi {
                        return bad("epsilon/phi do not shift by one under f".into());
                    }
                }
            }
            match c.e(i, b)? {
                None if eps > 0 => return bad("e kills an element with epsilon > 0".into()),
                None => {}
                Some(b2) if c.f(i, &b2)?.map(|x| c.key(&x)) != Some(vert.key.clone()) => {
                    return bad("f(e(b)) != b".into());
                }
                Some(_) => {}
            }
        }
    }
    Ok(None)
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub lambda: [i32; 2],
    pub rows: Vec<CheckRow>,
}

impl Report {
    fn push(&mut self, name: impl Into<String>, detail: impl Into<String>, counterexample: Option<String>) {
        self.rows.push(CheckRow {
            name: name.into(),
            passed: counterexample.is_none(),
            detail: detail.into(),
            counterexample,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckRow> {
        self.rows.iter().find(|r| !r.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.rows {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark}  {:width$}  {}", r.name, r.detail)?;
        }
        Ok(())
    }
}

fn set_difference(a: &[String], b: &[String]) -> Option<String> {
    let bs: HashSet<&String> = b.iter().collect();
    a.iter().find(|k| !bs.contains(k)).cloned()
}

fn keys<P>(g: &CrystalGraph<P>) -> Vec<String> {
    g.vertices().iter().map(|v| v.key.clone()).collect()
}

/// Every check for one highest weight. Errors only on bad input or when a
/// component exceeds `cap`; failed checks are report rows.
pub fn verify(lam: Weight, cfg: CrystalConfig, cap: usize) -> Result<Report> {
    let lam = lam.dominant()?;
    let dim = weyl_dim(lam)?;
    let mut report = Report { lambda: [lam.c1, lam.c2], rows: Vec::new() };

    let mono = MonomialCrystal::new(cfg);
    let m = monomial_graph(lam, Variant::Standard, cfg, cap)?;
    let mneg = monomial_graph(lam, Variant::Negative, cfg, cap)?;
    let s = generate_tableaux(lam, Kind::S, cap)?;
    let t = generate_tableaux(lam, Kind::T, cap)?;

    for (name, v) in [("monomial", axiom_violation(&mono, &m)?), ("monomial-neg", axiom_violation(&mono, &mneg)?)] {
        report.push(format!("axioms {name}"), "ẽf̃ = id, wt, ε/φ shifts, strings", v);
    }
    for (name, v) in [("tableau-s", axiom_violation(&TableauCrystal, &s)?), ("tableau-t", axiom_violation(&TableauCrystal, &t)?)] {
        report.push(format!("axioms {name}"), "ẽf̃ = id, wt, ε/φ shifts, strings", v);
    }

    let counts = [m.len(), mneg.len(), s.len(), t.len()];
    let bad = Realization::ALL
        .iter()
        .zip(counts)
        .find(|&(_, c)| c as u64 != dim)
        .map(|(r, c)| format!("{r} has {c} vertices"));
    report.push("dimension", format!("{} vertices, Weyl dimension {dim}", m.len()), bad);

    for (variant, g, label) in [(Variant::Standard, &m, "standard"), (Variant::Negative, &mneg, "negative")] {
        let words = enumerate_canonical(lam, variant)?;
        let images: Vec<String> = words.iter().map(|w| xword_monomial(w).to_string()).collect();
        let distinct: HashSet<&String> = images.iter().collect();
        let bfs = keys(g);
        let bad = if distinct.len() != images.len() {
            let dup = images.iter().duplicates().next().cloned().unwrap_or_default();
            Some(format!("two canonical words give {dup}"))
        } else if let Some(k) = set_difference(&images, &bfs) {
            Some(format!("canonical monomial {k} not in the component"))
        } else {
            set_difference(&bfs, &images).map(|k| format!("{k} has no canonical word"))
        };
        report.push(format!("enumeration {label}"), format!("{} canonical words", words.len()), bad);
    }

    let iso_row = |r: &mut Report, name: &str, res: std::result::Result<usize, String>| match res {
        Ok(n) => r.push(name, format!("bijection of size {n}"), None),
        Err(e) => r.push(name, "mismatch", Some(e)),
    };
    iso_row(&mut report, "iso monomial ~ tableau-s", check_isomorphic(&m, &s).map(|x| x.len()).map_err(|e| e.to_string()));
    iso_row(&mut report, "iso monomial-neg ~ tableau-t", check_isomorphic(&mneg, &t).map(|x| x.len()).map_err(|e| e.to_string()));
    let via = transport_all(&m, &TableauCrystal, &highest_tableau(lam, Kind::T)?)
        .map_err(|e| e.to_string())
        .and_then(|imgs| {
            let img_keys: Vec<String> = imgs.iter().map(|x| x.to_string()).collect();
            let distinct: HashSet<&String> = img_keys.iter().collect();
            if distinct.len() != img_keys.len() {
                return Err("transport is not injective".into());
            }
            if let Some(k) = set_difference(&keys(&t), &img_keys) {
                return Err(format!("{k} is not an image"));
            }
            check_isomorphic(&m, &t).map(|x| x.len()).map_err(|e| e.to_string())
        });
    iso_row(&mut report, "iso monomial ~ tableau-t (transport)", via);

    for (variant, g, target, label) in [
        (Variant::Standard, &m, &s, "psi standard"),
        (Variant::Negative, &mneg, &t, "psi negative"),
    ] {
        let table = FactorTable::new(lam, variant)?;
        let bad = match check_isomorphic(g, target) {
            Err(e) => Some(e.to_string()),
            Ok(map) => map.pairs().find_map(|(a, b)| {
                let mono = &g.vertex(a).payload;
                let expected = &target.vertex(b).payload;
                match table.factorize(mono).map(psi) {
                    Some(Ok(tab)) if &tab == expected => None,
                    Some(Ok(tab)) => Some(format!("psi({mono}) = {tab}, isomorphism gives {expected}")),
                    Some(Err(e)) => Some(e.to_string()),
                    None => Some(format!("{mono} has no canonical word")),
                }
            }),
        };
        report.push(label, "psi agrees with the graph isomorphism", bad);
    }

    let mu = if lam.c1 > 0 {
        Weight::fundamental(Index::One)
    } else if lam.c2 > 0 {
        Weight::fundamental(Index::Two)
    } else {
        Weight::ZERO
    };
    let tau = lam - mu;
    let gm = monomial_graph(mu, Variant::Standard, cfg, cap)?;
    let gt = monomial_graph(tau, Variant::Standard, cfg, cap)?;
    let products: Vec<String> = gm
        .vertices()
        .iter()
        .cartesian_product(gt.vertices())
        .map(|(a, b)| (&a.payload * &b.payload).to_string())
        .unique()
        .collect();
    let bad = set_difference(&products, &keys(&m))
        .map(|k| format!("product {k} not in the component"))
        .or_else(|| set_difference(&keys(&m), &products).map(|k| format!("{k} is not a product")));
    report.push(format!("product {mu} + {tau}"), format!("{} distinct products", products.len()), bad);

    let configs = [(1, 0), (0, 1), (2, -1)];
    let graphs = configs
        .iter()
        .map(|&(a, b)| monomial_graph(lam, Variant::Standard, CrystalConfig::new(a, b)?, cap))
        .collect::<Result<Vec<_>>>()?;
    let bad = (0..graphs.len()).tuple_combinations().find_map(|(x, y)| {
        check_isomorphic(&graphs[x], &graphs[y])
            .err()
            .map(|e| format!("c12={} vs c12={}: {e}", configs[x].0, configs[y].0))
    });
    report.push("config robustness", "c12 in {1, 0, 2}", bad);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_VERTEX_CAP;

    const CAP: usize = DEFAULT_VERTEX_CAP;

    #[test]
    fn realization_names() {
        for r in Realization::ALL {
            assert_eq!(r.name().parse::<Realization>().unwrap(), r);
        }
        assert!("tableau".parse::<Realization>().is_err());
    }

    #[test]
    fn generate_doc_sizes() {
        let cfg = CrystalConfig::default();
        let d = Realization::Monomial.generate_doc(Weight::new(1, 0), cfg, CAP).unwrap();
        assert_eq!(d.vertices.len(), 7);
        assert_eq!(d.highest, "Y1(1)");
        let d = Realization::TableauS.generate_doc(Weight::new(0, 1), cfg, CAP).unwrap();
        assert_eq!(d.vertices.len(), 14);
        let d = Realization::MonomialNeg.generate_doc(Weight::new(1, 1), cfg, CAP).unwrap();
        assert_eq!(d.vertices.len(), 64);
        assert!(matches!(
            Realization::TableauT.generate_doc(Weight::new(1, 1), cfg, 10),
            Err(Error::VertexCapExceeded { cap: 10 })
        ));
        assert!(matches!(
            Realization::Monomial.generate_doc(Weight::new(-1, 0), cfg, CAP),
            Err(Error::NonDominant(_))
        ));
    }

    #[test]
    fn verify_small_weights() {
        for (m, n) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let r = verify(Weight::new(m, n), CrystalConfig::default(), CAP).unwrap();
            assert!(r.all_passed(), "{r}");
            assert!(r.rows.len() >= 12);
        }
    }

    #[test]
    fn map_worked_examples() {
        let cfg = CrystalConfig::default();
        let lam = Weight::new(1, 3);
        let m = "Y1(2)^3 Y1(3)^-3 Y1(4)^-1 Y2(2)^2 Y2(3)^-1";
        let t = map_element(m, Realization::Monomial, Realization::TableauT, lam, cfg, CAP).unwrap();
        assert_eq!(t, "kind=T; shape=1,3; top=1,2,3,1b; bottom=3,3b,3b");
        let s = "kind=S; shape=1,3; top=2,2,0; bottom=3,0,3b,2b";
        assert_eq!(map_element(s, Realization::TableauS, Realization::Monomial, lam, cfg, CAP).unwrap(), m);
        assert_eq!(map_element(m, Realization::Monomial, Realization::TableauS, lam, cfg, CAP).unwrap(), s);
    }

    #[test]
    fn map_highest_round_trips() {
        let cfg = CrystalConfig::default();
        let lam = Weight::new(1, 1);
        let highs = [
            highest_monomial(lam, Variant::Standard).unwrap().to_string(),
            highest_monomial(lam, Variant::Negative).unwrap().to_string(),
            highest_tableau(lam, Kind::S).unwrap().to_string(),
            highest_tableau(lam, Kind::T).unwrap().to_string(),
        ];
        for (a, ha) in Realization::ALL.iter().zip(&highs) {
            for (b, hb) in Realization::ALL.iter().zip(&highs) {
                assert_eq!(&map_element(ha, *a, *b, lam, cfg, CAP).unwrap(), hb);
            }
        }
    }

    #[test]
    fn map_rejects_outsiders() {
        let cfg = CrystalConfig::default();
        let lam = Weight::new(1, 0);
        let err = map_element("Y1(5)", Realization::Monomial, Realization::TableauS, lam, cfg, CAP).unwrap_err();
        assert!(matches!(err, Error::NotInComponent(_)));
        let bad = "kind=S; shape=0,1; top=1; bottom=0";
        let err = map_element(bad, Realization::TableauS, Realization::Monomial, Weight::new(0, 1), cfg, CAP).unwrap_err();
        assert!(err.to_string().contains("column"), "{err}");
        let err = map_element(bad, Realization::TableauS, Realization::Monomial, lam, cfg, CAP).unwrap_err();
        assert!(err.to_string().contains("shape"), "{err}");
    }
}
