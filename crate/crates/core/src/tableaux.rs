//! Two-row G2 tableaux over the alphabet `1 ≺ 2 ≺ 3 ≺ 0 ≺ 3̄ ≺ 2̄ ≺ 1̄`.
//!
//! A tableau of shape `mΛ1 + nΛ2` has `n` columns of height two and `m`
//! boxes of height one. In an S-tableau the rows are right-justified (top
//! row of length `n` over a bottom row of length `m+n`); in a T-tableau
//! they are left-justified (top row `m+n`, bottom row `n`).
//!
//! Kashiwara operators act through the tensor-product rule, reading the
//! columns from right to left: the rightmost column is the leftmost tensor
//! factor. Column statistics and column operators come from the monomial
//! crystals of `Λ1` and `Λ2`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::cartan::{Index, Weight};
use crate::error::{Error, Result};
use crate::graph::{self, Crystal, CrystalGraph};
use crate::monomial::{self, highest_monomial, CrystalConfig, Variant};
use crate::xalgebra::{adjacent_ok, column_ok, column_strict, FactorTable, XLetter};

/// Integer separation of two letters.
pub fn dist(a: XLetter, b: XLetter) -> u8 {
    enum L {
        Plain(u8),
        Zero,
        Bar(u8),
    }
    fn classify(a: XLetter) -> L {
        match a {
            XLetter::One => L::Plain(1),
            XLetter::Two => L::Plain(2),
            XLetter::Three => L::Plain(3),
            XLetter::Zero => L::Zero,
            XLetter::Bar3 => L::Bar(3),
            XLetter::Bar2 => L::Bar(2),
            XLetter::Bar1 => L::Bar(1),
        }
    }
    if a == b {
        return 0;
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    match (classify(lo), classify(hi)) {
        (L::Plain(i), L::Plain(j)) => j - i,
        (L::Plain(i), L::Zero) | (L::Zero, L::Bar(i)) => 4 - i,
        (L::Plain(i), L::Bar(j)) => 8 - (i + j),
        // j̄ ≺ ī means j > i
        (L::Bar(j), L::Bar(i)) => j - i,
        _ => unreachable!("lo precedes hi"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Right-justified rows.
    S,
    /// Left-justified rows.
    T,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::S => "S",
            Kind::T => "T",
        })
    }
}

/// A column of a two-row tableau, read top to bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Column {
    Single(XLetter),
    Double(XLetter, XLetter),
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Column::Single(a) => write!(f, "[{a}]"),
            Column::Double(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    kind: Kind,
    m: usize,
    n: usize,
    top: Vec<XLetter>,
    bottom: Vec<XLetter>,
}

/// Which validity condition a tableau fails. Column positions are 1-based
/// from the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauViolation {
    /// (i) a row decreases somewhere.
    RowOrder,
    /// (i) a row repeats 0.
    RowZero,
    /// (ii) a column does not strictly increase.
    ColumnOrder(usize),
    /// (iii) a column exceeds its distance bound.
    ColumnDistance(usize),
    /// (iv) two adjacent height-two columns, the left one at this position.
    Adjacent(usize),
}

impl fmt::Display for TableauViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauViolation::RowOrder => write!(f, "condition (i): rows must weakly increase"),
            TableauViolation::RowZero => write!(f, "condition (i): 0 appears twice in a row"),
            TableauViolation::ColumnOrder(c) => write!(f, "condition (ii): column {c} does not strictly increase"),
            TableauViolation::ColumnDistance(c) => write!(f, "condition (iii): column {c} exceeds the distance bound"),
            TableauViolation::Adjacent(c) => write!(f, "condition (iv): columns {c} and {} are too close", c + 1),
        }
    }
}

impl Tableau {
    pub fn new(kind: Kind, m: usize, n: usize, top: Vec<XLetter>, bottom: Vec<XLetter>) -> Result<Self> {
        let (tl, bl) = match kind {
            Kind::S => (n, m + n),
            Kind::T => (m + n, n),
        };
        if top.len() != tl || bottom.len() != bl {
            return Err(Error::ShapeMismatch(format!(
                "{kind}-tableau of shape ({m},{n}) needs rows of length {tl} and {bl}, got {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        Ok(Tableau { kind, m, n, top, bottom })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// `(m, n)` as the weight `mΛ1 + nΛ2`.
    pub fn shape(&self) -> Weight {
        Weight::new(self.m as i32, self.n as i32)
    }

    pub fn top(&self) -> &[XLetter] {
        &self.top
    }

    pub fn bottom(&self) -> &[XLetter] {
        &self.bottom
    }

    /// Columns from left to right.
    pub fn columns(&self) -> Vec<Column> {
        match self.kind {
            Kind::S => {
                let singles = self.bottom[..self.m].iter().map(|&a| Column::Single(a));
                let doubles = self.top.iter().zip(&self.bottom[self.m..]).map(|(&a, &b)| Column::Double(a, b));
                singles.chain(doubles).collect()
            }
            Kind::T => {
                let doubles = self.top.iter().zip(&self.bottom).map(|(&a, &b)| Column::Double(a, b));
                let singles = self.top[self.n..].iter().map(|&a| Column::Single(a));
                doubles.chain(singles).collect()
            }
        }
    }

    /// Rebuilds a tableau from its columns, which must follow the layout
    /// of `kind`.
    pub fn from_columns(kind: Kind, cols: &[Column]) -> Result<Self> {
        let is_double = |c: &Column| matches!(c, Column::Double(..));
        // S: boxes then height-two columns; T: the reverse
        let split = cols.iter().position(|c| is_double(c) == (kind == Kind::S)).unwrap_or(cols.len());
        let (head, tail) = cols.split_at(split);
        if tail.iter().any(|c| is_double(c) != (kind == Kind::S)) {
            return Err(Error::ShapeMismatch(format!("columns do not fit a {kind}-tableau")));
        }
        let (singles, doubles) = match kind {
            Kind::S => (head, tail),
            Kind::T => (tail, head),
        };
        let boxes: Vec<XLetter> = singles
            .iter()
            .filter_map(|c| match *c {
                Column::Single(a) => Some(a),
                Column::Double(..) => None,
            })
            .collect();
        let (mut top, mut bottom): (Vec<XLetter>, Vec<XLetter>) = doubles
            .iter()
            .filter_map(|c| match *c {
                Column::Double(a, b) => Some((a, b)),
                Column::Single(_) => None,
            })
            .unzip();
        let (m, n) = (boxes.len(), doubles.len());
        match kind {
            Kind::S => bottom = boxes.into_iter().chain(bottom).collect(),
            Kind::T => top.extend(boxes),
        }
        Tableau::new(kind, m, n, top, bottom)
    }

    /// Sum of the letter weights.
    pub fn weight(&self) -> Weight {
        self.top.iter().chain(&self.bottom).map(|a| a.weight()).sum()
    }

    pub fn validate(&self) -> std::result::Result<(), TableauViolation> {
        for row in [&self.top, &self.bottom] {
            if row.windows(2).any(|p| p[0] > p[1]) {
                return Err(TableauViolation::RowOrder);
            }
            if row.iter().filter(|&&a| a == XLetter::Zero).count() > 1 {
                return Err(TableauViolation::RowZero);
            }
        }
        let cols = self.columns();
        for (k, c) in cols.iter().enumerate() {
            if let Column::Double(a, b) = *c {
                if !column_strict(a, b) {
                    return Err(TableauViolation::ColumnOrder(k + 1));
                }
            }
        }
        for (k, c) in cols.iter().enumerate() {
            if let Column::Double(a, b) = *c {
                if !column_ok(a, b) {
                    return Err(TableauViolation::ColumnDistance(k + 1));
                }
            }
        }
        for (k, pair) in cols.windows(2).enumerate() {
            if let [Column::Double(a, _), Column::Double(_, d)] = *pair {
                if !adjacent_ok(a, d) {
                    return Err(TableauViolation::Adjacent(k + 1));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

pub fn valid(t: &Tableau) -> bool {
    t.is_valid()
}

fn join(row: &[XLetter]) -> String {
    row.iter().map(|a| a.as_str()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Tableau {
    /// `kind=S; shape=1,3; top=2,2,0; bottom=3,0,3b,2b`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "kind={}; shape={},{}; top={}; bottom={}",
            self.kind,
            self.m,
            self.n,
            join(&self.top),
            join(&self.bottom)
        )
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut kind = None;
        let mut shape = None;
        let mut top = None;
        let mut bottom = None;
        let row = |v: &str| -> Result<Vec<XLetter>> {
            let v = v.trim();
            if v.is_empty() {
                return Ok(vec![]);
            }
            v.split(',').map(|t| t.trim().parse()).collect()
        };
        for field in s.split(';') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let (k, v) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{field}`")))?;
            match k.trim() {
                "kind" => {
                    kind = Some(match v.trim() {
                        "S" => Kind::S,
                        "T" => Kind::T,
                        other => return Err(Error::Parse(format!("unknown tableau kind `{other}`"))),
                    })
                }
                "shape" => shape = Some(v.trim().parse::<Weight>()?.dominant()?),
                "top" => top = Some(row(v)?),
                "bottom" => bottom = Some(row(v)?),
                other => return Err(Error::Parse(format!("unknown tableau field `{other}`"))),
            }
        }
        let missing = |f: &str| Error::Parse(format!("tableau is missing `{f}`"));
        let shape = shape.ok_or_else(|| missing("shape"))?;
        Tableau::new(
            kind.ok_or_else(|| missing("kind"))?,
            shape.c1 as usize,
            shape.c2 as usize,
            top.ok_or_else(|| missing("top"))?,
            bottom.ok_or_else(|| missing("bottom"))?,
        )
    }
}

/// The tableau with every height-two column `[1,2]` and every box `1`.
pub fn highest_tableau(lam: Weight, kind: Kind) -> Result<Tableau> {
    let lam = lam.dominant()?;
    let (m, n) = (lam.c1 as usize, lam.c2 as usize);
    let (tl, bl) = match kind {
        Kind::S => (n, m + n),
        Kind::T => (m + n, n),
    };
    let bottom = match kind {
        Kind::S => std::iter::repeat_n(XLetter::One, m).chain(std::iter::repeat_n(XLetter::Two, n)).collect(),
        Kind::T => vec![XLetter::Two; bl],
    };
    Tableau::new(kind, m, n, vec![XLetter::One; tl], bottom)
}

/// One of the two fundamental column crystals, stored as tables.
#[derive(Debug, Clone)]
pub struct ColumnTable {
    cols: Vec<Column>,
    index: HashMap<Column, usize>,
    weight: Vec<Weight>,
    eps: Vec<[u32; 2]>,
    phi: Vec<[u32; 2]>,
    f: Vec<[Option<usize>; 2]>,
    e: Vec<[Option<usize>; 2]>,
}

fn ix(i: Index) -> usize {
    i.as_u8() as usize - 1
}

impl ColumnTable {
    /// Generates the monomial component of `Λ_k` and relabels each vertex
    /// by its canonical column.
    fn build(lam: Weight) -> Result<Self> {
        let cfg = CrystalConfig::default();
        let g = monomial::generate_component(&highest_monomial(lam, Variant::Standard)?, cfg)?;
        let table = FactorTable::new(lam, Variant::Standard)?;
        let cols = g
            .vertices()
            .iter()
            .map(|v| {
                let w = table
                    .factorize(&v.payload)
                    .ok_or_else(|| Error::NotInComponent(v.key.clone()))?;
                Ok(match (w.top(), w.bottom()) {
                    ([], [a]) => Column::Single(*a),
                    ([a], [b]) => Column::Double(*a, *b),
                    _ => unreachable!("fundamental shapes have one column"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let index = cols.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        let stat = |f: fn(&monomial::Monomial, Index) -> u32| {
            g.vertices().iter().map(|v| [f(&v.payload, Index::One), f(&v.payload, Index::Two)]).collect()
        };
        let n = g.len();
        Ok(ColumnTable {
            index,
            weight: g.weights().collect(),
            eps: stat(|m, i| m.epsilon(i)),
            phi: stat(|m, i| m.phi(i)),
            f: (0..n).map(|v| [g.f_edge(v, Index::One), g.f_edge(v, Index::Two)]).collect(),
            e: (0..n).map(|v| [g.e_edge(v, Index::One), g.e_edge(v, Index::Two)]).collect(),
            cols,
        })
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn columns(&self) -> &[Column] {
        &self.cols
    }

    fn lookup(&self, c: Column) -> Result<usize> {
        self.index
            .get(&c)
            .copied()
            .ok_or_else(|| Error::InvalidTableau(format!("column {c} is not a vertex of its column crystal")))
    }
}

#[derive(Debug, Clone)]
pub struct ColumnCrystals {
    pub single: ColumnTable,
    pub double: ColumnTable,
}

impl ColumnCrystals {
    fn table(&self, c: Column) -> &ColumnTable {
        match c {
            Column::Single(_) => &self.single,
            Column::Double(..) => &self.double,
        }
    }

    pub fn epsilon(&self, i: Index, c: Column) -> Result<u32> {
        let t = self.table(c);
        Ok(t.eps[t.lookup(c)?][ix(i)])
    }

    pub fn phi(&self, i: Index, c: Column) -> Result<u32> {
        let t = self.table(c);
        Ok(t.phi[t.lookup(c)?][ix(i)])
    }

    pub fn f(&self, i: Index, c: Column) -> Result<Option<Column>> {
        let t = self.table(c);
        Ok(t.f[t.lookup(c)?][ix(i)].map(|k| t.cols[k]))
    }

    pub fn e(&self, i: Index, c: Column) -> Result<Option<Column>> {
        let t = self.table(c);
        Ok(t.e[t.lookup(c)?][ix(i)].map(|k| t.cols[k]))
    }

    pub fn weight(&self, c: Column) -> Result<Weight> {
        let t = self.table(c);
        Ok(t.weight[t.lookup(c)?])
    }
}

/// The shared column tables, built on first use.
pub fn columns() -> &'static ColumnCrystals {
    static CELL: OnceLock<ColumnCrystals> = OnceLock::new();
    CELL.get_or_init(|| ColumnCrystals {
        single: ColumnTable::build(Weight::new(1, 0)).expect("Λ1 column crystal"),
        double: ColumnTable::build(Weight::new(0, 1)).expect("Λ2 column crystal"),
    })
}

/// A column crystal viewed on its own, for graph export.
struct ColumnCrystal<'a>(&'a ColumnCrystals);

impl Crystal for ColumnCrystal<'_> {
    type Elem = Column;

    fn weight(&self, b: &Column) -> Weight {
        self.0.weight(*b).expect("column from its own table")
    }
    fn epsilon(&self, i: Index, b: &Column) -> u32 {
        self.0.epsilon(i, *b).expect("column from its own table")
    }
    fn phi(&self, i: Index, b: &Column) -> u32 {
        self.0.phi(i, *b).expect("column from its own table")
    }
    fn f(&self, i: Index, b: &Column) -> Result<Option<Column>> {
        self.0.f(i, *b)
    }
    fn e(&self, i: Index, b: &Column) -> Result<Option<Column>> {
        self.0.e(i, *b)
    }
}

/// The crystal graphs of `B(Λ1)` (7 columns) and `B(Λ2)` (14 columns).
pub fn column_crystals() -> Result<(CrystalGraph<Column>, CrystalGraph<Column>)> {
    let cc = ColumnCrystal(columns());
    Ok((
        graph::generate(&cc, Column::Single(XLetter::One), graph::DEFAULT_VERTEX_CAP)?,
        graph::generate(&cc, Column::Double(XLetter::One, XLetter::Two), graph::DEFAULT_VERTEX_CAP)?,
    ))
}

/// Outcome of the signature rule on a tensor of columns.
struct Signature {
    /// Factor positions of the uncancelled `-` signs, left to right.
    minus: Vec<usize>,
    /// Factor positions of the uncancelled `+` signs, left to right.
    plus: Vec<usize>,
}

/// Tensor factors, leftmost first: the columns read right to left.
fn factors(t: &Tableau) -> Vec<Column> {
    let mut cols = t.columns();
    cols.reverse();
    cols
}

/// Writes `-`^ε `+`^φ for each factor and cancels `+ -` pairs. With this
/// convention `f̃` acts on the left factor of `b1 ⊗ b2` iff
/// `φ(b1) > ε(b2)`.
fn signature(cc: &ColumnCrystals, i: Index, fs: &[Column]) -> Result<Signature> {
    let mut minus = Vec::new();
    let mut plus: Vec<usize> = Vec::new();
    for (k, &c) in fs.iter().enumerate() {
        for _ in 0..cc.epsilon(i, c)? {
            if plus.pop().is_none() {
                minus.push(k);
            }
        }
        plus.extend(std::iter::repeat_n(k, cc.phi(i, c)? as usize));
    }
    Ok(Signature { minus, plus })
}

fn checked(t: &Tableau) -> Result<()> {
    t.validate().map_err(|v| Error::InvalidTableau(format!("{t}: {v}")))
}

fn act(t: &Tableau, i: Index, raise: bool) -> Result<Option<Tableau>> {
    checked(t)?;
    let cc = columns();
    let mut fs = factors(t);
    let sig = signature(cc, i, &fs)?;
    let pos = if raise { sig.minus.last() } else { sig.plus.first() };
    let Some(&k) = pos else { return Ok(None) };
    let moved = if raise { cc.e(i, fs[k])? } else { cc.f(i, fs[k])? };
    fs[k] = moved.expect("signature picks a factor the operator acts on");
    fs.reverse();
    let out = Tableau::from_columns(t.kind, &fs)?;
    checked(&out)?;
    Ok(Some(out))
}

pub fn f_tab(i: Index, t: &Tableau) -> Result<Option<Tableau>> {
    act(t, i, false)
}

pub fn e_tab(i: Index, t: &Tableau) -> Result<Option<Tableau>> {
    act(t, i, true)
}

/// Tableaux as a crystal (for either kind).
#[derive(Debug, Clone, Copy, Default)]
pub struct TableauCrystal;

impl Crystal for TableauCrystal {
    type Elem = Tableau;

    fn weight(&self, b: &Tableau) -> Weight {
        b.weight()
    }

    fn epsilon(&self, i: Index, b: &Tableau) -> u32 {
        signature(columns(), i, &factors(b)).map(|s| s.minus.len() as u32).unwrap_or(0)
    }

    fn phi(&self, i: Index, b: &Tableau) -> u32 {
        signature(columns(), i, &factors(b)).map(|s| s.plus.len() as u32).unwrap_or(0)
    }

    fn f(&self, i: Index, b: &Tableau) -> Result<Option<Tableau>> {
        f_tab(i, b)
    }

    fn e(&self, i: Index, b: &Tableau) -> Result<Option<Tableau>> {
        e_tab(i, b)
    }
}

/// The connected component of the highest tableau of `lam`.
pub fn generate_tableaux(lam: Weight, kind: Kind, cap: usize) -> Result<CrystalGraph<Tableau>> {
    graph::generate(&TableauCrystal, highest_tableau(lam, kind)?, cap)
}
