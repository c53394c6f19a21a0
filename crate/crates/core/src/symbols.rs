//! Finite presentations of level-`N` modular-symbol spaces.
//!
//! Generators are unimodular pairs `[u:v]` modulo `N`, identified with
//! `[-u:-v]` at the index level. Relations are the two-term rows
//! `[u:v] + [-v:u]` and the three-term rows `[u:v] - [u:u+v] - [u+v:v]`; the
//! cuspidal-at-zero variant drops pairs with a zero coordinate and keeps the
//! three-term row only when `u + v` is nonzero.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{gcd, modulo};
use crate::error::{Error, Result};
use crate::linalg::{howell_form, quotient, QuotientModule, Row, Submodule};
use crate::ring::{CoeffRing, RingElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    #[serde(rename = "full")]
    Full,
    #[serde(rename = "cusp0")]
    CuspZero,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::CuspZero => "cusp0",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "full" => Ok(Variant::Full),
            "cusp0" => Ok(Variant::CuspZero),
            other => Err(Error::Config(format!("unknown variant `{other}` (expected full or cusp0)"))),
        }
    }
}

/// Canonical representative of `{(u, v), (-u, -v)}`: the lexicographically smaller pair.
pub fn canonical_pair(n: u64, u: i64, v: i64) -> (u64, u64) {
    let a = (modulo(u, n), modulo(v, n));
    let b = (modulo(-u, n), modulo(-v, n));
    a.min(b)
}

fn is_unimodular(n: u64, u: u64, v: u64) -> bool {
    gcd(gcd(u, v), n) == 1
}

/// Canonical generators in increasing lexicographic order.
pub fn enumerate_symbols(n: u64, variant: Variant) -> Result<Vec<(u64, u64)>> {
    if n < 4 {
        return Err(Error::LevelTooSmall(n));
    }
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if !is_unimodular(n, u, v) || canonical_pair(n, u as i64, v as i64) != (u, v) {
                continue;
            }
            if variant == Variant::CuspZero && (u == 0 || v == 0) {
                continue;
            }
            out.push((u, v));
        }
    }
    Ok(out)
}

/// Sparse vector in the free module on the generators of a space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolVector(BTreeMap<usize, RingElem>);

impl SymbolVector {
    pub fn new() -> SymbolVector {
        SymbolVector::default()
    }

    pub fn add_term(&mut self, ring: &CoeffRing, index: usize, coeff: RingElem) {
        let entry = self.0.entry(index).or_insert_with(|| ring.zero());
        *entry = ring.add(*entry, coeff);
        if ring.is_zero(*entry) {
            self.0.remove(&index);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, RingElem)> + '_ {
        self.0.iter().map(|(&i, &c)| (i, c))
    }

    pub fn get(&self, index: usize) -> Option<RingElem> {
        self.0.get(&index).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_dense(&self, ring: &CoeffRing, dim: usize) -> Row {
        let mut row = vec![ring.zero(); dim];
        for (i, c) in self.terms() {
            row[i] = c;
        }
        row
    }

    pub fn scaled(&self, ring: &CoeffRing, c: RingElem) -> SymbolVector {
        let mut out = SymbolVector::new();
        for (i, x) in self.terms() {
            out.add_term(ring, i, ring.mul(c, x));
        }
        out
    }

    pub fn add(&mut self, ring: &CoeffRing, other: &SymbolVector) {
        for (i, x) in other.terms() {
            self.add_term(ring, i, x);
        }
    }
}

/// Generators, relation rows and diamond permutations of a symbol space.
#[derive(Clone)]
pub struct SymbolSpace {
    level: u64,
    variant: Variant,
    ring: CoeffRing,
    symbols: Vec<(u64, u64)>,
    /// `index[u * N + v]` is the generator index of `[u:v]`, or `usize::MAX`.
    index: Vec<usize>,
    relations: Vec<SymbolVector>,
    /// `diamonds[a]` permutes generator indices for each unit `a`.
    diamonds: Vec<Option<Vec<usize>>>,
}

impl fmt::Debug for SymbolSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymbolSpace")
            .field("level", &self.level)
            .field("variant", &self.variant)
            .field("generators", &self.symbols.len())
            .field("relations", &self.relations.len())
            .finish()
    }
}

pub fn build_presentation(n: u64, variant: Variant, ring: &CoeffRing) -> Result<SymbolSpace> {
    let symbols = enumerate_symbols(n, variant)?;
    let mut index = vec![usize::MAX; (n * n) as usize];
    for (i, &(u, v)) in symbols.iter().enumerate() {
        index[(u * n + v) as usize] = i;
        let (nu, nv) = (modulo(-(u as i64), n), modulo(-(v as i64), n));
        index[(nu * n + nv) as usize] = i;
    }
    let mut space = SymbolSpace {
        level: n,
        variant,
        ring: ring.clone(),
        symbols,
        index,
        relations: Vec::new(),
        diamonds: Vec::new(),
    };
    space.relations = space.presentation_relations();
    space.diamonds = (0..n)
        .map(|a| {
            (gcd(a, n) == 1).then(|| {
                space
                    .symbols
                    .iter()
                    .map(|&(u, v)| {
                        space
                            .index_of((a * u) as i64, (a * v) as i64)
                            .expect("units permute symbols")
                    })
                    .collect()
            })
        })
        .collect();
    Ok(space)
}

impl SymbolSpace {
    fn presentation_relations(&self) -> Vec<SymbolVector> {
        let ring = &self.ring;
        let one = ring.one();
        let minus_one = ring.neg(one);
        let mut rows = Vec::new();
        for &(u, v) in &self.symbols {
            let (u, v) = (u as i64, v as i64);
            let mut two = SymbolVector::new();
            self.add_symbol(&mut two, u, v, one);
            self.add_symbol(&mut two, -v, u, one);
            rows.push(two);
            if self.variant == Variant::CuspZero && modulo(u + v, self.level) == 0 {
                continue;
            }
            let mut three = SymbolVector::new();
            self.add_symbol(&mut three, u, v, one);
            self.add_symbol(&mut three, u, u + v, minus_one);
            self.add_symbol(&mut three, u + v, v, minus_one);
            rows.push(three);
        }
        rows.retain(|r| !r.is_zero());
        rows
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    pub fn symbols(&self) -> &[(u64, u64)] {
        &self.symbols
    }

    pub fn dim(&self) -> usize {
        self.symbols.len()
    }

    pub fn relations(&self) -> &[SymbolVector] {
        &self.relations
    }

    /// Generator index of `[u:v]`, if it is a generator of this space.
    pub fn index_of(&self, u: i64, v: i64) -> Option<usize> {
        let n = self.level;
        let i = self.index[(modulo(u, n) * n + modulo(v, n)) as usize];
        (i != usize::MAX).then_some(i)
    }

    /// Add `coeff * [u:v]`; panics if the pair is not a generator.
    pub fn add_symbol(&self, vec: &mut SymbolVector, u: i64, v: i64, coeff: RingElem) {
        let i = self
            .index_of(u, v)
            .unwrap_or_else(|| panic!("[{u}:{v}] is not a generator at level {}", self.level));
        vec.add_term(&self.ring, i, coeff);
    }

    pub fn symbol(&self, u: i64, v: i64) -> Result<SymbolVector> {
        let i = self.index_of(u, v).ok_or(Error::NotASymbol { u, v })?;
        let mut vec = SymbolVector::new();
        vec.add_term(&self.ring, i, self.ring.one());
        Ok(vec)
    }

    /// Permutation of generator indices induced by `<a>[u:v] = [au:av]`.
    pub fn diamond_action(&self, a: i64) -> Result<&[usize]> {
        let r = modulo(a, self.level);
        self.diamonds[r as usize]
            .as_deref()
            .ok_or(Error::NotAUnit { a, n: self.level })
    }

    pub fn apply_diamond(&self, a: i64, vec: &SymbolVector) -> Result<SymbolVector> {
        let perm = self.diamond_action(a)?;
        let mut out = SymbolVector::new();
        for (i, c) in vec.terms() {
            out.add_term(&self.ring, perm[i], c);
        }
        Ok(out)
    }

    /// `c^2 d^2 [u:v] - c^2 [u:dv] - d^2 [cu:v] + [cu:dv]`.
    pub fn cd_symbol(&self, c: u64, d: u64, u: i64, v: i64) -> Result<SymbolVector> {
        let six_n = 6 * self.level;
        if c <= 1 || d <= 1 || gcd(c, six_n) != 1 || gcd(d, six_n) != 1 {
            return Err(Error::BadCd { c, d, six_n });
        }
        self.index_of(u, v).ok_or(Error::NotASymbol { u, v })?;
        let ring = &self.ring;
        let q = ring.characteristic();
        let c2 = ring.int(((c % q) * (c % q) % q) as i64);
        let d2 = ring.int(((d % q) * (d % q) % q) as i64);
        let (cn, dn) = ((c % self.level) as i64, (d % self.level) as i64);
        let mut out = SymbolVector::new();
        self.add_symbol(&mut out, u, v, ring.mul(c2, d2));
        self.add_symbol(&mut out, u, dn * v, ring.neg(c2));
        self.add_symbol(&mut out, cn * u, v, ring.neg(d2));
        self.add_symbol(&mut out, cn * u, dn * v, ring.one());
        Ok(out)
    }

    pub fn dense(&self, vec: &SymbolVector) -> Row {
        vec.to_dense(&self.ring, self.dim())
    }

    /// Howell form of the relation rows.
    pub fn relation_module(&self) -> Submodule {
        let rows: Vec<Row> = self.relations.iter().map(|r| self.dense(r)).collect();
        howell_form(&rows, self.dim(), &self.ring)
    }

    /// The presented module `free / relations`.
    pub fn quotient(&self) -> QuotientModule {
        quotient(self.dim(), self.relation_module())
    }
}

/// Outcome of comparing the cuspidal-at-zero presentation with the span of
/// the symbols `[u:v]`, `u, v != 0`, inside the full space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CuspZeroComparison {
    pub presented_length: u32,
    pub image_length: u32,
    /// The natural map from the presentation onto the image is an isomorphism.
    pub agree: bool,
}

pub fn compare_cusp_zero(n: u64, ring: &CoeffRing) -> Result<CuspZeroComparison> {
    let full = build_presentation(n, Variant::Full, ring)?;
    let cusp = build_presentation(n, Variant::CuspZero, ring)?;
    let presented_length = cusp.quotient().length();
    let rows: Vec<Row> = cusp
        .symbols()
        .iter()
        .map(|&(u, v)| full.dense(&full.symbol(u as i64, v as i64).expect("cusp0 symbols are full symbols")))
        .collect();
    let span = howell_form(&rows, full.dim(), ring);
    let image_length = full.quotient().image_length(&span);
    Ok(CuspZeroComparison {
        presented_length,
        image_length,
        // the map is onto its image, so equal lengths mean it is injective
        agree: presented_length == image_length,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_coeff_ring;

    fn brute_count(n: u64, nonzero: bool) -> usize {
        let mut pairs = std::collections::BTreeSet::new();
        for u in 0..n {
            for v in 0..n {
                if gcd(gcd(u, v), n) == 1 && !(nonzero && (u == 0 || v == 0)) {
                    let w = ((n - u) % n, (n - v) % n);
                    pairs.insert((u, v).min(w));
                }
            }
        }
        pairs.len()
    }

    #[test]
    fn symbol_counts() {
        assert_eq!(enumerate_symbols(5, Variant::Full).unwrap().len(), 12);
        assert_eq!(enumerate_symbols(5, Variant::CuspZero).unwrap().len(), 8);
        assert_eq!(enumerate_symbols(4, Variant::Full).unwrap().len(), 6);
        assert_eq!(enumerate_symbols(3, Variant::Full), Err(Error::LevelTooSmall(3)));
        for n in 4..40 {
            assert_eq!(enumerate_symbols(n, Variant::Full).unwrap().len(), brute_count(n, false));
            assert_eq!(enumerate_symbols(n, Variant::CuspZero).unwrap().len(), brute_count(n, true));
        }
    }

    #[test]
    fn presentation_dimensions() {
        let r5 = make_coeff_ring(5, 1, 2).unwrap();
        assert_eq!(build_presentation(5, Variant::Full, &r5).unwrap().quotient().length(), 3);
        // the abstract presentation is larger than the span of the same symbols in the full space
        assert_eq!(build_presentation(5, Variant::CuspZero, &r5).unwrap().quotient().length(), 2);
        let r7 = make_coeff_ring(7, 1, 2).unwrap();
        assert_eq!(build_presentation(7, Variant::Full, &r7).unwrap().quotient().length(), 5);
    }

    #[test]
    fn diamond_examples() {
        let r = make_coeff_ring(5, 1, 2).unwrap();
        let space = build_presentation(12, Variant::Full, &r).unwrap();
        let id: Vec<usize> = (0..space.dim()).collect();
        assert_eq!(space.diamond_action(1).unwrap(), &id[..]);
        assert_eq!(space.diamond_action(-1).unwrap(), &id[..]);
        assert_eq!(space.diamond_action(2), Err(Error::NotAUnit { a: 2, n: 12 }));
        for a in [1i64, 5, 7, 11] {
            for b in [1i64, 5, 7, 11] {
                let pa = space.diamond_action(a).unwrap();
                let pb = space.diamond_action(b).unwrap();
                let pab = space.diamond_action(a * b).unwrap();
                let composed: Vec<usize> = (0..space.dim()).map(|i| pa[pb[i]]).collect();
                assert_eq!(composed, pab);
            }
        }
    }

    #[test]
    fn cd_symbol_examples() {
        let r = make_coeff_ring(5, 1, 2).unwrap();
        let space = build_presentation(5, Variant::Full, &r).unwrap();
        // c = 11 is 1 mod 5 and 1 mod 5
        assert!(space.cd_symbol(11, 7, 1, 2).unwrap().is_zero());
        assert!(space.cd_symbol(2, 7, 1, 2).is_err());
        assert!(space.cd_symbol(1, 7, 1, 2).is_err());
        assert!(space.cd_symbol(7, 7, 0, 0).is_err());

        // c = d = 7 at N = 5, p = 5, k = 1: c^2 = d^2 = 4, c = d = 2 mod 5
        let vec = space.cd_symbol(7, 7, 1, 2).unwrap();
        let mut expected = SymbolVector::new();
        space.add_symbol(&mut expected, 1, 2, r.int(16));
        space.add_symbol(&mut expected, 1, 4, r.int(-4));
        space.add_symbol(&mut expected, 2, 2, r.int(-4));
        space.add_symbol(&mut expected, 2, 4, r.int(1));
        assert_eq!(vec, expected);
    }

    #[test]
    fn cusp_zero_comparison_small_levels() {
        let r = make_coeff_ring(5, 1, 2).unwrap();
        let cmp = compare_cusp_zero(5, &r).unwrap();
        assert_eq!(cmp.presented_length, 2);
        assert_eq!(cmp.image_length, 1);
        assert!(!cmp.agree);
        let r7 = make_coeff_ring(7, 1, 2).unwrap();
        let cmp = compare_cusp_zero(7, &r7).unwrap();
        assert_eq!((cmp.presented_length, cmp.image_length), (4, 2));
    }
}
