//! Exact linear algebra over finite chain rings `GR(p^k, m)`.
//!
//! Row modules are kept in Howell normal form: one row per pivot column, the
//! pivot entry is exactly `p^v`, entries above a pivot have power-basis
//! coordinates in `[0, p^v)`, and every element of the span whose first `c`
//! entries vanish lies in the span of the rows pivoting at or after `c`. That
//! last property makes reduction against the rows a complete membership test.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, RingElem};

pub type Row = Vec<RingElem>;

pub fn zero_row(ring: &CoeffRing, dim: usize) -> Row {
    vec![ring.zero(); dim]
}

pub fn is_zero_row(ring: &CoeffRing, row: &[RingElem]) -> bool {
    row.iter().all(|&x| ring.is_zero(x))
}

/// `target += scale * source`.
pub fn axpy(ring: &CoeffRing, target: &mut [RingElem], scale: RingElem, source: &[RingElem]) {
    if ring.is_zero(scale) {
        return;
    }
    for (t, &s) in target.iter_mut().zip(source) {
        if !ring.is_zero(s) {
            *t = ring.add(*t, ring.mul(scale, s));
        }
    }
}

pub fn scale_row(ring: &CoeffRing, scale: RingElem, row: &[RingElem]) -> Row {
    row.iter().map(|&x| ring.mul(scale, x)).collect()
}

pub fn add_rows(ring: &CoeffRing, a: &[RingElem], b: &[RingElem]) -> Row {
    a.iter().zip(b).map(|(&x, &y)| ring.add(x, y)).collect()
}

pub fn sub_rows(ring: &CoeffRing, a: &[RingElem], b: &[RingElem]) -> Row {
    a.iter().zip(b).map(|(&x, &y)| ring.sub(x, y)).collect()
}

/// A submodule of `ring^dim`, stored as its Howell form.
#[derive(Clone, PartialEq, Eq)]
pub struct Submodule {
    ring: CoeffRing,
    dim: usize,
    rows: Vec<Row>,
    /// `(column, valuation)` of each row's pivot.
    pivots: Vec<(usize, u32)>,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Submodule of {:?}^{}", self.ring, self.dim)?;
        for row in &self.rows {
            let entries: Vec<String> = row.iter().map(|&x| self.ring.format(x)).collect();
            writeln!(f, "  [{}]", entries.join(" "))?;
        }
        Ok(())
    }
}

/// Howell form of the span of `rows` inside `ring^dim`.
pub fn howell_form(rows: &[Row], dim: usize, ring: &CoeffRing) -> Submodule {
    let k = ring.k();
    let mut pending: Vec<Row> = rows
        .iter()
        .inspect(|r| assert_eq!(r.len(), dim, "row length differs from ambient dimension"))
        .filter(|r| !is_zero_row(ring, r))
        .cloned()
        .collect();
    let mut out_rows: Vec<Row> = Vec::new();
    let mut pivots = Vec::new();

    for col in 0..dim {
        if pending.is_empty() {
            break;
        }
        let mut best: Option<(usize, u32)> = None;
        for (i, row) in pending.iter().enumerate() {
            let x = row[col];
            if !ring.is_zero(x) {
                let v = ring.valuation(x);
                if best.map_or(true, |(_, bv)| v < bv) {
                    best = Some((i, v));
                }
            }
        }
        let Some((index, v)) = best else { continue };
        let mut pivot = pending.swap_remove(index);
        let unit = ring.div_p_pow(pivot[col], v);
        let unit_inv = ring.inv(unit).expect("minimal valuation leaves a unit");
        if unit_inv != ring.one() {
            for x in pivot.iter_mut().skip(col) {
                *x = ring.mul(unit_inv, *x);
            }
        }
        debug_assert_eq!(pivot[col], ring.int(ring.p_pow(v) as i64));

        for row in pending.iter_mut() {
            let x = row[col];
            if !ring.is_zero(x) {
                let t = ring.div_p_pow(x, v);
                axpy(ring, &mut row[col..], ring.neg(t), &pivot[col..]);
                debug_assert!(ring.is_zero(row[col]));
            }
        }
        if v > 0 {
            let annihilator = ring.int(ring.p_pow(k - v) as i64);
            let saturated = scale_row(ring, annihilator, &pivot);
            pending.push(saturated);
        }
        pending.retain(|r| !is_zero_row(ring, &r[col..]));
        out_rows.push(pivot);
        pivots.push((col, v));
    }

    for i in 0..out_rows.len() {
        let (col, v) = pivots[i];
        let (upper, lower) = out_rows.split_at_mut(i);
        let pivot = &lower[0];
        for row in upper.iter_mut() {
            let (quo, _) = ring.divmod_p_pow(row[col], v);
            if !ring.is_zero(quo) {
                axpy(ring, &mut row[col..], ring.neg(quo), &pivot[col..]);
            }
        }
    }

    Submodule {
        ring: ring.clone(),
        dim,
        rows: out_rows,
        pivots,
    }
}

impl Submodule {
    pub fn zero(ring: &CoeffRing, dim: usize) -> Submodule {
        Submodule {
            ring: ring.clone(),
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ring: &CoeffRing, dim: usize) -> Submodule {
        let rows: Vec<Row> = (0..dim)
            .map(|i| {
                let mut r = zero_row(ring, dim);
                r[i] = ring.one();
                r
            })
            .collect();
        howell_form(&rows, dim, ring)
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Composition length over the coefficient ring.
    pub fn length(&self) -> u32 {
        let k = self.ring.k();
        self.pivots.iter().map(|&(_, v)| k - v).sum()
    }

    /// Canonical coset representative of `v` modulo the submodule, with the
    /// coefficients `q` such that `v = sum q_i rows_i + remainder`.
    pub fn reduce_with_witness(&self, v: &[RingElem]) -> (Row, Row) {
        let ring = &self.ring;
        let mut rem = v.to_vec();
        let mut witness = Vec::with_capacity(self.rows.len());
        for (row, &(col, val)) in self.rows.iter().zip(&self.pivots) {
            let (quo, _) = ring.divmod_p_pow(rem[col], val);
            if !ring.is_zero(quo) {
                axpy(ring, &mut rem[col..], ring.neg(quo), &row[col..]);
            }
            witness.push(quo);
        }
        (rem, witness)
    }

    pub fn reduce(&self, v: &[RingElem]) -> Row {
        self.reduce_with_witness(v).0
    }

    pub fn contains(&self, v: &[RingElem]) -> bool {
        is_zero_row(&self.ring, &self.reduce(v))
    }

    /// Coefficients on [`Submodule::rows`] expressing `v`, or `None` if `v` is outside.
    pub fn membership(&self, v: &[RingElem]) -> Result<Option<Row>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let (rem, witness) = self.reduce_with_witness(v);
        Ok(is_zero_row(&self.ring, &rem).then_some(witness))
    }

    /// Linear combination of the Howell rows.
    pub fn combine(&self, coeffs: &[RingElem]) -> Row {
        let mut out = zero_row(&self.ring, self.dim);
        for (row, &c) in self.rows.iter().zip(coeffs) {
            axpy(&self.ring, &mut out, c, row);
        }
        out
    }

    pub fn contains_module(&self, other: &Submodule) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        howell_form(&rows, self.dim, &self.ring)
    }

    pub fn with_rows(&self, extra: &[Row]) -> Submodule {
        let mut rows = self.rows.clone();
        rows.extend(extra.iter().cloned());
        howell_form(&rows, self.dim, &self.ring)
    }

    /// Image under `x -> x * matrix`, where `matrix` has `dim` rows.
    pub fn image(&self, matrix: &[Row], target_dim: usize) -> Submodule {
        let rows: Vec<Row> = self
            .rows
            .iter()
            .map(|r| apply_matrix(&self.ring, r, matrix, target_dim))
            .collect();
        howell_form(&rows, target_dim, &self.ring)
    }
}

/// Row vector times matrix.
pub fn apply_matrix(ring: &CoeffRing, v: &[RingElem], matrix: &[Row], target_dim: usize) -> Row {
    let mut out = zero_row(ring, target_dim);
    for (&x, row) in v.iter().zip(matrix) {
        axpy(ring, &mut out, x, row);
    }
    out
}

/// `ring^dim` modulo a relation submodule.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    relations: Submodule,
}

pub fn quotient(ambient_dim: usize, relations: Submodule) -> QuotientModule {
    assert_eq!(ambient_dim, relations.dim(), "relations live in a different ambient");
    QuotientModule { relations }
}

impl QuotientModule {
    pub fn ring(&self) -> &CoeffRing {
        self.relations.ring()
    }

    pub fn dim(&self) -> usize {
        self.relations.dim()
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn reduce(&self, v: &[RingElem]) -> Row {
        self.relations.reduce(v)
    }

    pub fn is_zero(&self, v: &[RingElem]) -> bool {
        self.relations.contains(v)
    }

    /// Composition length of the quotient.
    pub fn length(&self) -> u32 {
        self.dim() as u32 * self.ring().k() - self.relations.length()
    }

    /// Length of the image of a submodule of the ambient.
    pub fn image_length(&self, sub: &Submodule) -> u32 {
        self.relations.sum(sub).length() - self.relations.length()
    }
}

/// One invariant `p^exponent` of a finite module; `saturated` marks a free
/// summand, whose true invariant is only known to be at least `p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct Divisor {
    pub exponent: u32,
    pub saturated: bool,
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.saturated {
            write!(f, ">=p^{}", self.exponent)
        } else {
            write!(f, "p^{}", self.exponent)
        }
    }
}

/// Invariants of `B / A` for `A ⊆ B`, in increasing order; trivial factors omitted.
pub fn elementary_divisors(a: &Submodule, b: &Submodule) -> Result<Vec<Divisor>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: a.dim(),
        });
    }
    if !b.contains_module(a) {
        return Err(Error::NotContained);
    }
    let ring = b.ring();
    let n = b.dim();
    let r = b.rows().len();
    // kernel of ring^r -> B -> B/A
    let mut stacked: Vec<Row> = Vec::with_capacity(r + a.rows().len());
    for (i, row) in b.rows().iter().enumerate() {
        let mut ext = row.clone();
        ext.extend(zero_row(ring, r));
        ext[n + i] = ring.one();
        stacked.push(ext);
    }
    for row in a.rows() {
        let mut ext = row.clone();
        ext.extend(zero_row(ring, r));
        stacked.push(ext);
    }
    let h = howell_form(&stacked, n + r, ring);
    let kernel: Vec<Row> = h
        .rows()
        .iter()
        .zip(h.pivots())
        .filter(|(_, &(col, _))| col >= n)
        .map(|(row, _)| row[n..].to_vec())
        .collect();
    let diagonal = smith_diagonal(ring, kernel, r);
    let k = ring.k();
    let mut out: Vec<Divisor> = diagonal
        .into_iter()
        .filter(|&e| e > 0)
        .map(|e| Divisor {
            exponent: e,
            saturated: e >= k,
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Valuations of the Smith diagonal of `rows` padded to `cols` entries, with
/// `k` standing for a zero diagonal entry.
fn smith_diagonal(ring: &CoeffRing, mut rows: Vec<Row>, cols: usize) -> Vec<u32> {
    let k = ring.k();
    let mut diagonal = Vec::with_capacity(cols);
    let mut active_cols: Vec<usize> = (0..cols).collect();
    loop {
        let mut best: Option<(usize, usize, u32)> = None;
        for (i, row) in rows.iter().enumerate() {
            for (j, &c) in active_cols.iter().enumerate() {
                let x = row[c];
                if !ring.is_zero(x) {
                    let v = ring.valuation(x);
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((i, j, v)) = best else { break };
        let pivot_row = rows.swap_remove(i);
        let col = active_cols.remove(j);
        let unit = ring.div_p_pow(pivot_row[col], v);
        let unit_inv = ring.inv(unit).expect("minimal valuation leaves a unit");
        let pivot_row = scale_row(ring, unit_inv, &pivot_row);
        // clear the pivot column from the other rows
        for row in rows.iter_mut() {
            let x = row[col];
            if !ring.is_zero(x) {
                let t = ring.div_p_pow(x, v);
                axpy(ring, row, ring.neg(t), &pivot_row);
            }
        }
        // clearing the pivot row's other columns only adds multiples of the
        // pivot column, which no longer meets the remaining rows
        diagonal.push(v);
        rows.retain(|r| !is_zero_row(ring, r));
    }
    diagonal.resize(cols, k);
    diagonal
}
