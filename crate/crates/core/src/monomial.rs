//! Nakajima monomials in the commuting variables `Y_i(n)` and the
//! Kashiwara crystal structure on them.
//!
//! A monomial is stored as an exponent function on `(i, n)` with no zero
//! entries, so factors in the same slot are always merged.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::cartan::{Index, Weight};
use crate::error::{Error, Result};
use crate::graph::{self, ConfigDoc, Crystal, CrystalGraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: BTreeMap<(Index, i32), i32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// `Y_i(n)^a`.
    pub fn y_pow(i: Index, n: i32, a: i32) -> Self {
        Monomial::from_factors([(i, n, a)])
    }

    pub fn y(i: Index, n: i32) -> Self {
        Monomial::y_pow(i, n, 1)
    }

    /// Multiplies out arbitrary factors, merging repeats and dropping zeros.
    pub fn from_factors(factors: impl IntoIterator<Item = (Index, i32, i32)>) -> Self {
        let mut m = Monomial::one();
        for (i, n, a) in factors {
            m.bump(i, n, a);
        }
        m
    }

    fn bump(&mut self, i: Index, n: i32, a: i32) {
        if a == 0 {
            return;
        }
        let e = self.exps.entry((i, n)).or_insert(0);
        *e += a;
        if *e == 0 {
            self.exps.remove(&(i, n));
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, i: Index, n: i32) -> i32 {
        self.exps.get(&(i, n)).copied().unwrap_or(0)
    }

    /// `(i, n, a)` triples sorted by `(i, n)`.
    pub fn factors(&self) -> impl Iterator<Item = (Index, i32, i32)> + '_ {
        self.exps.iter().map(|(&(i, n), &a)| (i, n, a))
    }

    pub fn inverse(&self) -> Self {
        Monomial { exps: self.exps.iter().map(|(&k, &a)| (k, -a)).collect() }
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|(&key, &a)| (key, a * k)).collect() }
    }

    /// Slots `n` with a nonzero `Y_i(n)` exponent, in increasing order,
    /// paired with the running sum of i-exponents through that slot.
    fn profile(&self, i: Index) -> Vec<(i32, i32)> {
        let mut sum = 0;
        self.exps
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(&(_, n), &a)| {
                sum += a;
                (n, sum)
            })
            .collect()
    }

    /// `wt(M) = Σ a Λ_i`.
    pub fn weight(&self) -> Weight {
        self.factors().map(|(i, _, a)| Weight::fundamental(i) * a).sum()
    }

    /// Largest prefix sum of i-exponents in slot order, floored at 0.
    pub fn phi(&self, i: Index) -> u32 {
        self.profile(i).iter().map(|&(_, p)| p).max().unwrap_or(0).max(0) as u32
    }

    /// Largest negated suffix sum of i-exponents in slot order, floored at 0.
    pub fn epsilon(&self, i: Index) -> u32 {
        let mut best = 0;
        let mut suffix = 0;
        for (_, a) in self.exps.range((i, i32::MIN)..=(i, i32::MAX)).rev() {
            suffix += a;
            best = best.max(-suffix);
        }
        best as u32
    }

    /// Smallest slot where the prefix sum reaches `phi_i`; `None` if `phi_i = 0`.
    fn slot_f(&self, i: Index) -> Option<i32> {
        let phi = self.phi(i) as i32;
        if phi == 0 {
            return None;
        }
        self.profile(i).into_iter().find(|&(_, p)| p == phi).map(|(n, _)| n)
    }

    /// Largest integer `n` whose prefix sum (all slots `≤ n`) equals `phi_i`;
    /// `None` if `epsilon_i = 0`. The prefix sum is constant between
    /// consecutive occupied slots, so this is one less than the occupied
    /// slot right after the last attainment.
    fn slot_e(&self, i: Index) -> Option<i32> {
        if self.epsilon(i) == 0 {
            return None;
        }
        let phi = self.phi(i) as i32;
        let profile = self.profile(i);
        // position 0 stands for "before the first occupied slot", prefix 0
        let prefixes: Vec<i32> = std::iter::once(0).chain(profile.iter().map(|&(_, p)| p)).collect();
        let last = prefixes
            .iter()
            .rposition(|&p| p == phi)
            .expect("phi is attained by some prefix");
        Some(profile[last].0 - 1)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (i, n, a) in rhs.factors() {
            out.bump(i, n, a);
        }
        out
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl std::iter::Product for Monomial {
    fn product<I: Iterator<Item = Monomial>>(iter: I) -> Monomial {
        iter.fold(Monomial::one(), |acc, m| &acc * &m)
    }
}

/// Monomial product; exponentwise sum.
pub fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    a * b
}

impl fmt::Display for Monomial {
    /// `Y1(2)^3 Y1(3)^-3 Y2(2)^2`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (i, n, a)) in self.factors().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Y{i}({n})")?;
            if a != 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

/// Splits `<head>(<int>)[^<int>]` into its parts.
pub(crate) fn parse_factor(tok: &str, head: char) -> Result<(&str, i32, i32)> {
    let bad = || Error::Parse(format!("malformed factor `{tok}`"));
    let rest = tok.strip_prefix(head).ok_or_else(bad)?;
    let open = rest.find('(').ok_or_else(bad)?;
    let close = rest.find(')').ok_or_else(bad)?;
    if close < open {
        return Err(bad());
    }
    let sym = &rest[..open];
    let slot: i32 = rest[open + 1..close].parse().map_err(|_| bad())?;
    let tail = &rest[close + 1..];
    let exp = if tail.is_empty() {
        1
    } else {
        tail.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
    };
    Ok((sym, slot, exp))
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Monomial::one());
        }
        let mut m = Monomial::one();
        for tok in s.split_whitespace() {
            let (sym, n, a) = parse_factor(tok, 'Y')?;
            let i = sym
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad variable index in `{tok}`")))
                .and_then(Index::try_from)?;
            m.bump(i, n, a);
        }
        Ok(m)
    }
}

/// The choice of integers `c12 + c21 = 1` entering `A_i(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrystalConfig {
    c12: i32,
    c21: i32,
}

impl CrystalConfig {
    pub fn new(c12: i32, c21: i32) -> Result<Self> {
        if c12 + c21 != 1 {
            return Err(Error::InvalidConfig { c12, c21 });
        }
        Ok(CrystalConfig { c12, c21 })
    }

    pub fn from_c12(c12: i32) -> Self {
        CrystalConfig { c12, c21: 1 - c12 }
    }

    pub fn c12(&self) -> i32 {
        self.c12
    }

    pub fn c21(&self) -> i32 {
        self.c21
    }

    pub fn doc(&self) -> ConfigDoc {
        ConfigDoc { c12: self.c12, c21: self.c21 }
    }
}

impl Default for CrystalConfig {
    fn default() -> Self {
        CrystalConfig { c12: 1, c21: 0 }
    }
}

/// `A_1(n) = Y_1(n) Y_1(n+1) Y_2(n+c21)^-1`, `A_2(n) = Y_2(n) Y_2(n+1) Y_1(n+c12)^-3`.
pub fn a_var(i: Index, n: i32, cfg: CrystalConfig) -> Monomial {
    let j = i.other();
    let (shift, cartan) = match i {
        Index::One => (cfg.c21, -1),
        Index::Two => (cfg.c12, -3),
    };
    Monomial::from_factors([(i, n, 1), (i, n + 1, 1), (j, n + shift, cartan)])
}

pub fn weight(m: &Monomial) -> Weight {
    m.weight()
}

pub fn phi(i: Index, m: &Monomial) -> u32 {
    m.phi(i)
}

pub fn epsilon(i: Index, m: &Monomial) -> u32 {
    m.epsilon(i)
}

/// `f̃_i M = A_i(n_f)^-1 M`, or `None` when `phi_i(M) = 0`.
pub fn f_op(i: Index, m: &Monomial, cfg: CrystalConfig) -> Option<Monomial> {
    m.slot_f(i).map(|n| m * &a_var(i, n, cfg).inverse())
}

/// `ẽ_i M = A_i(n_e) M`, or `None` when `epsilon_i(M) = 0`.
pub fn e_op(i: Index, m: &Monomial, cfg: CrystalConfig) -> Option<Monomial> {
    m.slot_e(i).map(|n| m * &a_var(i, n, cfg))
}

/// Which of the two highest-weight seeds (and slot conventions) to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Seed `Y_1(1)^m Y_2(1)^n`; X-letters in slots 2 and 1.
    Standard,
    /// Seed `Y_1(-1)^m Y_2(-2)^n`; X-letters in slots -1 and -2.
    Negative,
}

pub fn highest_monomial(w: Weight, variant: Variant) -> Result<Monomial> {
    let w = w.dominant()?;
    let (s1, s2) = match variant {
        Variant::Standard => (1, 1),
        Variant::Negative => (-1, -2),
    };
    Ok(Monomial::from_factors([(Index::One, s1, w.c1), (Index::Two, s2, w.c2)]))
}

/// The monomial crystal `M` for a fixed choice of `(c12, c21)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MonomialCrystal {
    pub cfg: CrystalConfig,
}

impl MonomialCrystal {
    pub fn new(cfg: CrystalConfig) -> Self {
        MonomialCrystal { cfg }
    }
}

impl Crystal for MonomialCrystal {
    type Elem = Monomial;

    fn weight(&self, b: &Monomial) -> Weight {
        b.weight()
    }

    fn epsilon(&self, i: Index, b: &Monomial) -> u32 {
        b.epsilon(i)
    }

    fn phi(&self, i: Index, b: &Monomial) -> u32 {
        b.phi(i)
    }

    fn f(&self, i: Index, b: &Monomial) -> Result<Option<Monomial>> {
        Ok(f_op(i, b, self.cfg))
    }

    fn e(&self, i: Index, b: &Monomial) -> Result<Option<Monomial>> {
        Ok(e_op(i, b, self.cfg))
    }
}

/// Connected component of `M` containing the highest-weight monomial `m0`.
pub fn generate_component(m0: &Monomial, cfg: CrystalConfig) -> Result<CrystalGraph<Monomial>> {
    generate_component_capped(m0, cfg, graph::DEFAULT_VERTEX_CAP)
}

pub fn generate_component_capped(m0: &Monomial, cfg: CrystalConfig, cap: usize) -> Result<CrystalGraph<Monomial>> {
    graph::generate(&MonomialCrystal::new(cfg), m0.clone(), cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    const I1: Index = Index::One;
    const I2: Index = Index::Two;

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn dflt() -> CrystalConfig {
        CrystalConfig::default()
    }

    #[test]
    fn multiplication() {
        assert!((mono("Y1(0)") * mono("Y1(0)^-1")).is_one());
        let a10 = a_var(I1, 0, dflt());
        assert_eq!(&mono("Y1(1)^-1 Y2(0)") * &a10, mono("Y1(0)"));
        assert_eq!(mono("Y1(2)^3") * mono("Y1(2)^-1"), mono("Y1(2)^2"));
    }

    #[test]
    fn parse_merges_and_drops_zeros() {
        assert_eq!(mono("Y1(2) Y1(2)^2 Y2(0)^0"), mono("Y1(2)^3"));
        assert!(mono("Y1(3) Y1(3)^-1").is_one());
        assert_eq!(mono("Y1(2)^3 Y1(3)^-3 Y2(2)^2").to_string(), "Y1(2)^3 Y1(3)^-3 Y2(2)^2");
        assert_eq!(Monomial::one().to_string(), "1");
        assert!("Y3(0)".parse::<Monomial>().is_err());
        assert!("Y1(x)".parse::<Monomial>().is_err());
        assert!("Y1(0)^".parse::<Monomial>().is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(mono("Y1(0)").weight(), Weight::new(1, 0));
        assert_eq!(mono("Y1(1)^-1 Y2(0)").weight(), Weight::new(-1, 1));
        assert_eq!(mono("Y1(1)^4 Y2(1)^5").weight(), Weight::new(4, 5));
    }

    #[test]
    fn phi_and_epsilon_examples() {
        assert_eq!(mono("Y1(0)").phi(I1), 1);
        assert_eq!(mono("Y1(1) Y1(2)^-1").phi(I1), 1);
        assert_eq!(mono("Y1(3)^-1").phi(I1), 0);
        assert_eq!(mono("Y1(1)^2 Y2(1)^-1").phi(I2), 0);
        assert_eq!(mono("Y1(0)").epsilon(I1), 0);
        assert_eq!(mono("Y1(3)^-1").epsilon(I1), 1);
        assert_eq!(mono("Y1(1) Y1(2)^-1").epsilon(I1), 1);
    }

    #[test]
    fn a_var_default_config() {
        assert_eq!(a_var(I1, 0, dflt()), mono("Y1(0) Y1(1) Y2(0)^-1"));
        assert_eq!(a_var(I2, 0, dflt()), mono("Y2(0) Y2(1) Y1(1)^-3"));
    }

    #[test]
    fn a_var_has_simple_root_weight() {
        for c12 in -3..=3 {
            let cfg = CrystalConfig::from_c12(c12);
            for n in -5..=5 {
                for i in Index::ALL {
                    assert_eq!(a_var(i, n, cfg).weight(), crate::cartan::simple_root(i));
                }
            }
        }
    }

    #[test]
    fn config_must_sum_to_one() {
        assert!(CrystalConfig::new(1, 0).is_ok());
        assert!(CrystalConfig::new(2, -1).is_ok());
        assert!(matches!(CrystalConfig::new(1, 1), Err(Error::InvalidConfig { .. })));
    }

    #[test]
    fn operator_examples() {
        let c = dflt();
        assert_eq!(f_op(I1, &mono("Y1(0)"), c), Some(mono("Y1(1)^-1 Y2(0)")));
        assert_eq!(f_op(I2, &mono("Y1(0)"), c), None);
        assert_eq!(f_op(I1, &mono("Y1(1) Y1(2)^-1"), c), Some(mono("Y1(2)^-2 Y2(1)")));
        assert_eq!(e_op(I1, &mono("Y1(1)^-1 Y2(0)"), c), Some(mono("Y1(0)")));
        assert_eq!(e_op(I1, &mono("Y1(1) Y1(2)^-1"), c), Some(mono("Y1(1)^2 Y2(1)^-1")));
        let hw = mono("Y1(1)^2 Y2(1)^3");
        assert_eq!(e_op(I1, &hw, c), None);
        assert_eq!(e_op(I2, &hw, c), None);
    }

    #[test]
    fn raising_into_an_emptied_slot() {
        // The last arrow of the Λ1 chain empties slot 2 entirely; raising
        // must still land on slot 2.
        let c = dflt();
        assert_eq!(e_op(I1, &mono("Y1(3)^-1"), c), Some(mono("Y1(2) Y2(2)^-1")));
    }

    #[test]
    fn highest_monomials() {
        assert_eq!(highest_monomial(Weight::new(1, 0), Variant::Standard).unwrap(), mono("Y1(1)"));
        assert_eq!(highest_monomial(Weight::new(0, 1), Variant::Standard).unwrap(), mono("Y2(1)"));
        assert_eq!(highest_monomial(Weight::new(1, 3), Variant::Negative).unwrap(), mono("Y1(-1) Y2(-2)^3"));
        assert!(matches!(highest_monomial(Weight::new(0, -1), Variant::Standard), Err(Error::NonDominant(_))));
        for v in [Variant::Standard, Variant::Negative] {
            let hw = highest_monomial(Weight::new(2, 3), v).unwrap();
            for i in Index::ALL {
                assert_eq!(e_op(i, &hw, dflt()), None);
            }
        }
    }

    #[test]
    fn lambda1_chain() {
        let g = generate_component(&mono("Y1(0)"), dflt()).unwrap();
        assert_eq!(g.len(), 7);
        let labels: Vec<u8> = g.edges().iter().map(|e| e.i.as_u8()).collect();
        assert_eq!(labels, [1, 2, 1, 1, 2, 1]);
    }

    #[test]
    fn component_sizes() {
        let g = generate_component(&mono("Y2(1)"), dflt()).unwrap();
        assert_eq!(g.len(), 14);
        let g = generate_component(&mono("Y1(1) Y2(1)"), dflt()).unwrap();
        assert_eq!(g.len(), 64);
    }

    #[test]
    fn generation_rejects_bad_seeds() {
        let err = generate_component(&mono("Y1(1)^-1 Y2(0)"), dflt()).unwrap_err();
        assert!(matches!(err, Error::NotHighestWeight(_)));
        let err = generate_component_capped(&mono("Y1(1) Y2(1)"), dflt(), 10).unwrap_err();
        assert!(matches!(err, Error::VertexCapExceeded { cap: 10 }));
    }

    #[test]
    fn string_lengths_match_statistics() {
        let g = generate_component(&mono("Y1(1) Y2(1)^2"), dflt()).unwrap();
        for (v, vx) in g.vertices().iter().enumerate() {
            for i in Index::ALL {
                assert_eq!(g.forward_string(v, i), vx.payload.phi(i) as usize);
                assert_eq!(g.backward_string(v, i), vx.payload.epsilon(i) as usize);
            }
        }
    }

    use proptest::prelude::*;

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        prop::collection::vec((prop::bool::ANY, -4i32..5, -3i32..4), 0..8).prop_map(|fs| {
            Monomial::from_factors(fs.into_iter().map(|(b, n, a)| (if b { I1 } else { I2 }, n, a)))
        })
    }

    proptest! {
        #[test]
        fn phi_minus_epsilon_is_pairing(m in arb_monomial()) {
            for i in Index::ALL {
                prop_assert_eq!(
                    m.phi(i) as i32 - m.epsilon(i) as i32,
                    crate::cartan::pairing(i, m.weight())
                );
            }
        }

        #[test]
        fn text_roundtrip(m in arb_monomial()) {
            prop_assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m);
        }

        #[test]
        fn operators_are_mutually_inverse(m in arb_monomial(), c12 in -2i32..3) {
            let cfg = CrystalConfig::from_c12(c12);
            for i in Index::ALL {
                if let Some(fm) = f_op(i, &m, cfg) {
                    prop_assert_eq!(e_op(i, &fm, cfg), Some(m.clone()));
                    prop_assert_eq!(fm.phi(i) + 1, m.phi(i));
                    prop_assert_eq!(fm.epsilon(i), m.epsilon(i) + 1);
                }
                if let Some(em) = e_op(i, &m, cfg) {
                    prop_assert_eq!(f_op(i, &em, cfg), Some(m.clone()));
                }
            }
        }
    }
}
