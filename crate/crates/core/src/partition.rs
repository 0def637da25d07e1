//! Partitions, Frobenius coordinates, skew shapes and semi-standard tableaux.
//!
//! Cells are addressed `(row, col)` with both coordinates starting at 1.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// `col - row`
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A weakly decreasing sequence of positive integers. Serializes as a JSON array.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped; any other violation of monotonicity is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Domain(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook `(arm + 1, 1^leg)`.
    pub fn hook(arm: usize, leg: usize) -> Self {
        let mut parts = vec![arm + 1];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition { parts }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row(c.row)
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.row(i) <= self.row(i))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Length of the main diagonal, `#{i : λ_i ≥ i}`.
    pub fn diagonal_length(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    pub fn to_frobenius(&self) -> Result<FrobeniusForm> {
        if self.is_empty() {
            return Err(Error::Domain("the empty partition has no Frobenius form".into()));
        }
        let n = self.diagonal_length();
        let conj = self.conjugate();
        let arms = (1..=n).map(|i| self.row(i) - i).collect();
        let legs = (1..=n).map(|i| conj.row(i) - i).collect();
        Ok(FrobeniusForm { arms, legs })
    }

    pub fn from_frobenius(f: &FrobeniusForm) -> Result<Partition> {
        f.validate()?;
        let n = f.arms.len();
        let mut parts: Vec<usize> = f.arms.iter().enumerate().map(|(i, a)| a + i + 1).collect();
        let cols: Vec<usize> = f.legs.iter().enumerate().map(|(j, b)| b + j + 1).collect();
        let depth = cols.first().copied().unwrap_or(0);
        for i in n + 1..=depth {
            parts.push(cols.iter().filter(|&&c| c >= i).count());
        }
        Partition::new(parts)
    }

    /// Removable boxes `(i, λ_i)` with `λ_{i+1} < λ_i`, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.row(i + 1) < self.row(i))
            .map(|i| Cell::new(i, self.row(i)))
            .collect()
    }

    /// All boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Arm plus leg plus one.
    pub fn hook_length(&self, c: Cell) -> usize {
        let arm = self.row(c.row) - c.col;
        let leg = self.conjugate().row(c.col) - c.row;
        arm + leg + 1
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Frobenius coordinates `(p_1..p_N | q_1..q_N)`: arm and leg lengths along the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusForm {
    #[serde(rename = "p")]
    pub arms: Vec<usize>,
    #[serde(rename = "q")]
    pub legs: Vec<usize>,
}

impl FrobeniusForm {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let f = FrobeniusForm { arms, legs };
        f.validate()?;
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    fn validate(&self) -> Result<()> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if self.arms.len() != self.legs.len() {
            return Err(Error::Domain("Frobenius arms and legs differ in length".into()));
        }
        if !strict(&self.arms) || !strict(&self.legs) {
            return Err(Error::Domain(format!(
                "Frobenius coordinates must be strictly decreasing: {:?} | {:?}",
                self.arms, self.legs
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(f, "({} | {})", join(&self.arms), join(&self.legs))
    }
}

/// The cells of `outer` not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ShapeRepr {
    Straight(Partition),
    #[serde(rename_all = "lowercase")]
    Skew {
        outer: Partition,
        #[serde(default)]
        inner: Partition,
    },
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match ShapeRepr::deserialize(d)? {
            ShapeRepr::Straight(p) => Ok(SkewShape::straight(p)),
            ShapeRepr::Skew { outer, inner } => {
                SkewShape::new(outer, inner).map_err(serde::de::Error::custom)
            }
        }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Domain(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.outer.contains_cell(c) && !self.inner.contains_cell(c)
    }

    /// Skew cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.rows())
            .flat_map(|i| (self.inner.row(i) + 1..=self.outer.row(i)).map(move |j| Cell::new(i, j)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Corners of the outer diagram that belong to the skew diagram.
    pub fn corners(&self) -> Vec<Cell> {
        self.outer
            .corners()
            .into_iter()
            .filter(|c| !self.inner.contains_cell(*c))
            .collect()
    }

    pub fn enumerate_ssyt(&self, max_entry: u32) -> SsytIter {
        SsytIter::new(self.clone(), max_entry)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A filling of a skew shape by positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    /// Row `i` holds the entries of columns `inner_i + 1 ..= outer_i`.
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entry(&self, c: Cell) -> Option<u32> {
        if !self.shape.contains_cell(c) {
            return None;
        }
        Some(self.rows[c.row - 1][c.col - 1 - self.shape.inner.row(c.row)])
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.shape.cells().into_iter().map(move |c| (c, self.entry(c).unwrap()))
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.iter().all(|(c, m)| {
            let left = self.entry(Cell::new(c.row, c.col.wrapping_sub(1)));
            let up = self.entry(Cell::new(c.row.wrapping_sub(1), c.col));
            m >= 1 && left.is_none_or(|l| l <= m) && up.is_none_or(|u| u < m)
        })
    }
}

/// Depth-first, row-major enumeration of semi-standard fillings with entries in
/// `1..=max_entry`, in lexicographic order of the row-major entry sequence.
pub struct SsytIter {
    shape: SkewShape,
    max_entry: u32,
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    /// Largest admissible entry, leaving room for the cells below in the column.
    upper: Vec<u32>,
    entries: Vec<u32>,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn new(shape: SkewShape, max_entry: u32) -> Self {
        let cells = shape.cells();
        let index = |c: Cell| cells.iter().position(|&d| d == c);
        let left = cells
            .iter()
            .map(|c| if c.col > 1 { index(Cell::new(c.row, c.col - 1)) } else { None })
            .collect();
        let up = cells
            .iter()
            .map(|c| if c.row > 1 { index(Cell::new(c.row - 1, c.col)) } else { None })
            .collect();
        let upper = cells
            .iter()
            .map(|c| {
                let below = cells.iter().filter(|d| d.col == c.col && d.row > c.row).count() as u32;
                max_entry.saturating_sub(below)
            })
            .collect();
        let n = cells.len();
        SsytIter {
            shape,
            max_entry,
            cells,
            left,
            up,
            upper,
            entries: vec![0; n],
            started: false,
            done: false,
        }
    }

    pub fn max_entry(&self) -> u32 {
        self.max_entry
    }

    fn lower(&self, pos: usize) -> u32 {
        let l = self.left[pos].map_or(1, |k| self.entries[k]);
        let u = self.up[pos].map_or(1, |k| self.entries[k] + 1);
        l.max(u).max(1)
    }

    fn advance(&mut self, mut pos: usize, mut increment: bool) -> bool {
        let n = self.cells.len();
        loop {
            if pos == n {
                return true;
            }
            let cand = if increment { self.entries[pos] + 1 } else { self.lower(pos) };
            if cand <= self.upper[pos] {
                self.entries[pos] = cand;
                pos += 1;
                increment = false;
            } else if pos == 0 {
                return false;
            } else {
                pos -= 1;
                increment = true;
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut rows = vec![Vec::new(); self.shape.rows()];
        for (c, &m) in self.cells.iter().zip(&self.entries) {
            rows[c.row - 1].push(m);
        }
        Tableau { shape: self.shape.clone(), rows }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.advance(0, false)
        } else if self.cells.is_empty() {
            false
        } else {
            self.advance(self.cells.len() - 1, true)
        };
        if ok {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}
