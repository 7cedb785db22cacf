//! X-letter calculus: the monomials `X_a(m)` indexed by the G2 alphabet,
//! two-row factorizations of component elements, the rewriting algorithm
//! producing the canonical factorization, and the membership conditions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::cartan::{Index, Weight};
use crate::error::{Error, Result};
use crate::monomial::{parse_factor, Monomial, Variant};
use crate::tableaux::dist;

/// A letter of the alphabet `1 ≺ 2 ≺ 3 ≺ 0 ≺ 3̄ ≺ 2̄ ≺ 1̄`. The derived
/// `Ord` is this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XLetter {
    One,
    Two,
    Three,
    Zero,
    Bar3,
    Bar2,
    Bar1,
}

use XLetter::*;

impl XLetter {
    pub const ALL: [XLetter; 7] = [One, Two, Three, Zero, Bar3, Bar2, Bar1];

    /// 1-based position in the order.
    pub fn rank(self) -> u8 {
        self as u8 + 1
    }

    pub fn succ(self) -> Option<XLetter> {
        XLetter::ALL.get(self.rank() as usize).copied()
    }

    pub fn pred(self) -> Option<XLetter> {
        (self.rank() as usize).checked_sub(2).map(|k| XLetter::ALL[k])
    }

    pub fn as_str(self) -> &'static str {
        match self {
            One => "1",
            Two => "2",
            Three => "3",
            Zero => "0",
            Bar3 => "3b",
            Bar2 => "2b",
            Bar1 => "1b",
        }
    }

    /// `wt(X_a(m))`, independent of `m`.
    pub fn weight(self) -> Weight {
        x_monomial(self, 0).weight()
    }
}

impl fmt::Display for XLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for XLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        XLetter::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown letter `{s}` (expected 1,2,3,0,3b,2b,1b)")))
    }
}

/// The Laurent monomial `X_a(m)` (with `Y_0 = 1`).
pub fn x_monomial(a: XLetter, m: i32) -> Monomial {
    use Index::{One as Y1, Two as Y2};
    let f: &[(Index, i32, i32)] = match a {
        One => &[(Y1, m, 1)],
        Two => &[(Y1, m + 1, -1), (Y2, m, 1)],
        Three => &[(Y1, m + 1, 2), (Y2, m + 1, -1)],
        Zero => &[(Y1, m + 1, 1), (Y1, m + 2, -1)],
        Bar3 => &[(Y1, m + 2, -2), (Y2, m + 1, 1)],
        Bar2 => &[(Y1, m + 2, 1), (Y2, m + 2, -1)],
        Bar1 => &[(Y1, m + 3, -1)],
    };
    Monomial::from_factors(f.iter().copied())
}

/// A two-row product of X-letters.
///
/// `top` sits in the higher slot. In the standard realization the top row
/// is `a_1 ⪰ … ⪰ a_n` in slot 2 and the bottom row `b_1 ⪰ … ⪰ b_{m+n}` in
/// slot 1. In the negative realization the top row is
/// `a_1 ⪯ … ⪯ a_{m+n}` in slot -1 and the bottom row `b_1 ⪯ … ⪯ b_n` in
/// slot -2. Column `j` pairs `top[j-1]` with `bottom[j-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XWord {
    variant: Variant,
    top: Vec<XLetter>,
    bottom: Vec<XLetter>,
}

impl XWord {
    /// Builds a word, sorting each row into the variant's order (the
    /// letters commute, only the multisets matter).
    pub fn new(variant: Variant, mut top: Vec<XLetter>, mut bottom: Vec<XLetter>) -> Self {
        match variant {
            Variant::Standard => {
                top.sort_by(|a, b| b.cmp(a));
                bottom.sort_by(|a, b| b.cmp(a));
            }
            Variant::Negative => {
                top.sort();
                bottom.sort();
            }
        }
        XWord { variant, top, bottom }
    }

    pub fn standard(top: &[XLetter], bottom: &[XLetter]) -> Self {
        XWord::new(Variant::Standard, top.to_vec(), bottom.to_vec())
    }

    pub fn negative(top: &[XLetter], bottom: &[XLetter]) -> Self {
        XWord::new(Variant::Negative, top.to_vec(), bottom.to_vec())
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn top(&self) -> &[XLetter] {
        &self.top
    }

    pub fn bottom(&self) -> &[XLetter] {
        &self.bottom
    }

    /// `(top slot, bottom slot)`.
    pub fn slots(&self) -> (i32, i32) {
        slots(self.variant)
    }

    /// Number of two-letter columns.
    pub fn columns(&self) -> usize {
        self.top.len().min(self.bottom.len())
    }

    /// `(m, n)` such that the word has shape `mΛ1 + nΛ2`.
    pub fn shape(&self) -> Result<Weight> {
        let (short, long) = match self.variant {
            Variant::Standard => (self.top.len(), self.bottom.len()),
            Variant::Negative => (self.bottom.len(), self.top.len()),
        };
        if long < short {
            return Err(Error::ShapeMismatch(format!(
                "long row has {long} letters but short row has {short}"
            )));
        }
        Ok(Weight::new((long - short) as i32, short as i32))
    }

    fn sorted(&self) -> XWord {
        XWord::new(self.variant, self.top.clone(), self.bottom.clone())
    }
}

fn slots(variant: Variant) -> (i32, i32) {
    match variant {
        Variant::Standard => (2, 1),
        Variant::Negative => (-1, -2),
    }
}

fn fmt_row(f: &mut fmt::Formatter<'_>, row: &[XLetter], slot: i32, first: &mut bool) -> fmt::Result {
    for (a, run) in &row.iter().chunk_by(|a| **a) {
        let k = run.count();
        if !*first {
            f.write_str(" ")?;
        }
        *first = false;
        write!(f, "X{a}({slot})")?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for XWord {
    /// Top row then bottom row, runs of equal letters folded into `^k`:
    /// `X0(2) X2(2)^2 X2b(1) X3b(1) X0(1) X3(1)`. The empty word is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.top.is_empty() && self.bottom.is_empty() {
            return f.write_str("1");
        }
        let (ts, bs) = self.slots();
        let mut first = true;
        fmt_row(f, &self.top, ts, &mut first)?;
        fmt_row(f, &self.bottom, bs, &mut first)
    }
}

impl FromStr for XWord {
    type Err = Error;

    /// Parses whitespace-separated `X<sym>(<slot>)[^k]` factors. The slots
    /// decide the realization: `{2, 1}` is standard, `{-1, -2}` negative.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(XWord::new(Variant::Standard, vec![], vec![]));
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (sym, slot, k) = parse_factor(tok, 'X')?;
            if k < 0 {
                return Err(Error::Parse(format!("negative exponent in `{tok}`")));
            }
            let a: XLetter = sym.parse()?;
            letters.extend(std::iter::repeat_n((a, slot), k as usize));
        }
        let standard = letters.iter().all(|&(_, s)| s == 1 || s == 2);
        let negative = letters.iter().all(|&(_, s)| s == -1 || s == -2);
        let variant = match (standard, negative) {
            (true, _) => Variant::Standard,
            (_, true) => Variant::Negative,
            _ => {
                return Err(Error::Parse(
                    "slots must all lie in {2,1} or all in {-1,-2}".into(),
                ))
            }
        };
        let (ts, _) = slots(variant);
        let (top, bottom): (Vec<_>, Vec<_>) = letters.into_iter().partition(|&(_, s)| s == ts);
        Ok(XWord::new(
            variant,
            top.into_iter().map(|(a, _)| a).collect(),
            bottom.into_iter().map(|(a, _)| a).collect(),
        ))
    }
}

/// Product of `X_a(slot)` over every letter of the word.
pub fn xword_monomial(w: &XWord) -> Monomial {
    let (ts, bs) = w.slots();
    w.top
        .iter()
        .map(|&a| x_monomial(a, ts))
        .chain(w.bottom.iter().map(|&b| x_monomial(b, bs)))
        .product()
}

/// A two-letter identity `X_α(m) X_β(m-1) = X_γ(m) X_δ(m-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairIdentity {
    pub left: (XLetter, XLetter),
    pub right: (XLetter, XLetter),
}

const PAIR_IDENTITIES: [PairIdentity; 8] = [
    PairIdentity { left: (One, Zero), right: (Two, Three) },
    PairIdentity { left: (One, Bar3), right: (Two, Zero) },
    PairIdentity { left: (One, Bar2), right: (Three, Zero) },
    PairIdentity { left: (One, Bar1), right: (Zero, Zero) },
    PairIdentity { left: (Two, Bar2), right: (Three, Bar3) },
    PairIdentity { left: (Two, Bar1), right: (Zero, Bar3) },
    PairIdentity { left: (Three, Bar1), right: (Zero, Bar2) },
    PairIdentity { left: (Zero, Bar1), right: (Bar3, Bar2) },
];

/// The eight adjacent-slot exchange identities.
pub fn pair_identities() -> [PairIdentity; 8] {
    PAIR_IDENTITIES
}

/// Checks `X_0(m)^2 = X_3(m) X_3̄(m)` as an exact monomial identity.
pub fn square_identity_check(m: i32) -> bool {
    x_monomial(Zero, m).pow(2) == &x_monomial(Three, m) * &x_monomial(Bar3, m)
}

pub const DEFAULT_REWRITE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Left-hand pair with the slot-1 letter at or left of the slot-2 letter.
    Al1,
    /// Right-hand pair with the slot-1 letter strictly right of the slot-2 letter.
    Al2,
    /// `(X_0, X_0)` in one row becomes `(X_3, X_3̄)`.
    Al3,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Al1 => "al-1",
            Rule::Al2 => "al-2",
            Rule::Al3 => "al-3",
        })
    }
}

/// One rewrite of the normal-form algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    pub rule: Rule,
    pub before: XWord,
    pub after: XWord,
}

/// Canonical factorization `[M]` together with the rewrites that produced it.
#[derive(Debug, Clone)]
pub struct NormalForm {
    pub word: XWord,
    pub steps: Vec<Rewrite>,
}

struct Candidate {
    rule: Rule,
    distance: usize,
    top_col: usize,
    bottom_col: usize,
    replacement: (XLetter, XLetter),
}

/// Finds the next pair rewrite on the right-justified grid. Column `j`
/// (1-based, counted from the right) holds `a_j` above `b_j`.
fn next_pair_rewrite(w: &XWord) -> Option<Candidate> {
    let mut best: Option<Candidate> = None;
    for (ja, &a) in w.top.iter().enumerate() {
        for (jb, &b) in w.bottom.iter().enumerate() {
            let found = if jb >= ja {
                PAIR_IDENTITIES.iter().find(|p| p.left == (a, b)).map(|p| (Rule::Al1, p.right))
            } else {
                PAIR_IDENTITIES.iter().find(|p| p.right == (a, b)).map(|p| (Rule::Al2, p.left))
            };
            let Some((rule, replacement)) = found else { continue };
            let c = Candidate { rule, distance: ja.abs_diff(jb), top_col: ja, bottom_col: jb, replacement };
            let better = match &best {
                None => true,
                Some(o) => (c.distance, std::cmp::Reverse(c.top_col)) > (o.distance, std::cmp::Reverse(o.top_col)),
            };
            if better {
                best = Some(c);
            }
        }
    }
    best
}

fn replace_double_zero(row: &mut [XLetter]) -> bool {
    let zeros: Vec<usize> = row.iter().positions(|&a| a == Zero).take(2).collect();
    if zeros.len() < 2 {
        return false;
    }
    row[zeros[0]] = Three;
    row[zeros[1]] = Bar3;
    true
}

/// `[M]` for a standard-slot word, with the default rewrite cap.
pub fn normal_form(w: &XWord) -> Result<XWord> {
    normal_form_traced(w, DEFAULT_REWRITE_CAP).map(|nf| nf.word)
}

/// Runs the three rewriting rules until none applies.
///
/// Pair rules go first; among applicable pairs the one with the largest
/// column distance wins, ties broken by the rightmost top-row position
/// (smallest column index). The double-zero rule runs only when no pair
/// rule applies, top row before bottom row. Rows are re-sorted after every
/// rewrite.
pub fn normal_form_traced(w: &XWord, cap: usize) -> Result<NormalForm> {
    if w.variant != Variant::Standard {
        return Err(Error::ShapeMismatch("normal form is defined for slots (2,1) only".into()));
    }
    let mut cur = w.sorted();
    let mut steps = Vec::new();
    loop {
        let mut next = cur.clone();
        let rule = if let Some(c) = next_pair_rewrite(&cur) {
            next.top[c.top_col] = c.replacement.0;
            next.bottom[c.bottom_col] = c.replacement.1;
            c.rule
        } else if replace_double_zero(&mut next.top) || replace_double_zero(&mut next.bottom) {
            Rule::Al3
        } else {
            return Ok(NormalForm { word: cur, steps });
        };
        if steps.len() >= cap {
            return Err(Error::RewriteCapExceeded { cap, last: cur.to_string() });
        }
        let next = next.sorted();
        steps.push(Rewrite { rule, before: cur, after: next.clone() });
        cur = next;
    }
}

/// Which membership condition a word fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanonicalViolation {
    /// (i) a row repeats the letter 0.
    RepeatedZero,
    /// (ii) column `j` has top letter not below the bottom letter.
    ColumnOrder(usize),
    /// (iii) column `j` is too wide.
    ColumnDistance(usize),
    /// (iv) adjacent columns at `j` are too close.
    AdjacentDistance(usize),
}

impl fmt::Display for CanonicalViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalViolation::RepeatedZero => write!(f, "condition (i): 0 repeated within a row"),
            CanonicalViolation::ColumnOrder(j) => write!(f, "condition (ii): column {j} is not strictly increasing"),
            CanonicalViolation::ColumnDistance(j) => write!(f, "condition (iii): column {j} exceeds the distance bound"),
            CanonicalViolation::AdjacentDistance(j) => {
                write!(f, "condition (iv): columns {j} and its neighbour are closer than allowed")
            }
        }
    }
}

/// Column bound: `dist(a, b) ≤ 2` when the top letter is 1 or 0, else `≤ 3`.
pub(crate) fn column_ok(a: XLetter, b: XLetter) -> bool {
    let bound = if matches!(a, One | Zero) { 2 } else { 3 };
    dist(a, b) <= bound
}

/// Adjacency bound between a top letter and the bottom letter of the
/// neighbouring column on its right.
pub(crate) fn adjacent_ok(a: XLetter, d: XLetter) -> bool {
    match a {
        Two | Three | Zero => dist(a, d) >= 3,
        Bar3 => dist(a, d) >= 2,
        _ => true,
    }
}

pub(crate) fn column_strict(a: XLetter, b: XLetter) -> bool {
    a < b || (a == Zero && b == Zero)
}

/// First failed membership condition, if any. Rows are sorted by
/// construction.
pub fn canonical_violation(w: &XWord) -> Option<CanonicalViolation> {
    let zeros = |row: &[XLetter]| row.iter().filter(|&&a| a == Zero).count() > 1;
    if zeros(&w.top) || zeros(&w.bottom) {
        return Some(CanonicalViolation::RepeatedZero);
    }
    let cols = w.columns();
    for j in 0..cols {
        if !column_strict(w.top[j], w.bottom[j]) {
            return Some(CanonicalViolation::ColumnOrder(j + 1));
        }
    }
    for j in 0..cols {
        if !column_ok(w.top[j], w.bottom[j]) {
            return Some(CanonicalViolation::ColumnDistance(j + 1));
        }
    }
    for j in 1..cols {
        // standard: dist(a_j, b_{j-1}); negative: dist(a_j, b_{j+1})
        let ok = match w.variant {
            Variant::Standard => adjacent_ok(w.top[j], w.bottom[j - 1]),
            Variant::Negative => adjacent_ok(w.top[j - 1], w.bottom[j]),
        };
        if !ok {
            let at = match w.variant {
                Variant::Standard => j + 1,
                Variant::Negative => j,
            };
            return Some(CanonicalViolation::AdjacentDistance(at));
        }
    }
    None
}

/// Whether `w` satisfies conditions (i)-(iv) for the shape `lam`.
pub fn is_canonical(w: &XWord, lam: Weight) -> Result<bool> {
    let shape = w.shape()?;
    if shape != lam {
        return Err(Error::ShapeMismatch(format!("word has shape {shape}, expected {lam}")));
    }
    Ok(canonical_violation(w).is_none())
}

fn sorted_rows(len: usize, variant: Variant) -> Vec<Vec<XLetter>> {
    XLetter::ALL
        .into_iter()
        .combinations_with_replacement(len)
        .map(|mut row| {
            if variant == Variant::Standard {
                row.reverse();
            }
            row
        })
        .collect()
}

/// Every canonical word of shape `lam`, sorted.
pub fn enumerate_canonical(lam: Weight, variant: Variant) -> Result<Vec<XWord>> {
    let lam = lam.dominant()?;
    let (m, n) = (lam.c1 as usize, lam.c2 as usize);
    let (top_len, bottom_len) = match variant {
        Variant::Standard => (n, m + n),
        Variant::Negative => (m + n, n),
    };
    let tops = sorted_rows(top_len, variant);
    let bottoms = sorted_rows(bottom_len, variant);
    let mut out: Vec<XWord> = tops
        .iter()
        .cartesian_product(bottoms.iter())
        .map(|(t, b)| XWord { variant, top: t.clone(), bottom: b.clone() })
        .filter(|w| canonical_violation(w).is_none())
        .collect();
    out.sort();
    Ok(out)
}

/// Lookup from component monomials to their canonical factorization.
#[derive(Debug, Clone)]
pub struct FactorTable {
    lam: Weight,
    variant: Variant,
    words: HashMap<Monomial, XWord>,
}

impl FactorTable {
    pub fn new(lam: Weight, variant: Variant) -> Result<Self> {
        let words = enumerate_canonical(lam, variant)?
            .into_iter()
            .map(|w| (xword_monomial(&w), w))
            .collect();
        Ok(FactorTable { lam, variant, words })
    }

    pub fn lam(&self) -> Weight {
        self.lam
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// The canonical word whose product is `m`, if any.
    pub fn factorize(&self, m: &Monomial) -> Option<&XWord> {
        self.words.get(m)
    }
}
