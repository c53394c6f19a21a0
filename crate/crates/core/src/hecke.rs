//! Hecke-type quotient relations: trivial `U_ℓ` operators and the `T_2`
//! Eisenstein condition on the `ω²`-component.

use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, is_prime, modulo};
use crate::eigen::EigenContext;
use crate::error::{Error, Result};
use crate::linalg::Row;
use crate::symbols::{SymbolSpace, SymbolVector, Variant};

/// Where the `T_2` relations are imposed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum T2Mode {
    /// Projected to the `ω²`-component only.
    Eigen,
    /// The raw six-term vectors, imposed on every component.
    Global,
}

/// Conditions defining a quotient of a symbol space.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuotientSpec {
    /// Primes `ℓ` with `U_ℓ = 1` imposed.
    pub trivial_u: Vec<u64>,
    pub t2: Option<T2Mode>,
}

impl QuotientSpec {
    pub fn none() -> QuotientSpec {
        QuotientSpec::default()
    }

    pub fn is_empty(&self) -> bool {
        self.trivial_u.is_empty() && self.t2.is_none()
    }

    /// Each `ℓ` is a prime dividing `N`; `T_2` needs odd `N`.
    pub fn validate(&self, n: u64) -> Result<()> {
        for &l in &self.trivial_u {
            if !is_prime(l) || n % l != 0 {
                return Err(Error::InvalidQuotient(format!("{l} is not a prime dividing N = {n}")));
            }
        }
        if self.t2.is_some() && n % 2 == 0 {
            return Err(Error::InvalidQuotient(format!("T2 condition needs odd N, got {n}")));
        }
        Ok(())
    }
}

impl fmt::Display for QuotientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.trivial_u.is_empty() {
            let ls: Vec<String> = self.trivial_u.iter().map(|l| l.to_string()).collect();
            parts.push(format!("trivU:{}", ls.join(",")));
        }
        match self.t2 {
            Some(T2Mode::Eigen) => parts.push("t2eis".into()),
            Some(T2Mode::Global) => parts.push("t2eis:global".into()),
            None => {}
        }
        if parts.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

impl FromStr for QuotientSpec {
    type Err = Error;

    /// `none`, `trivU:L1,L2`, `t2eis`, `t2eis:global`, joined by `+`.
    fn from_str(s: &str) -> Result<QuotientSpec> {
        let mut spec = QuotientSpec::none();
        let s = s.trim();
        if s.is_empty() || s == "none" {
            return Ok(spec);
        }
        for part in s.split('+') {
            let part = part.trim();
            if let Some(list) = part.strip_prefix("trivU:") {
                for l in list.split(',') {
                    let l: u64 = l
                        .trim()
                        .parse()
                        .map_err(|_| Error::InvalidQuotient(format!("bad prime `{l}` in `{part}`")))?;
                    if !spec.trivial_u.contains(&l) {
                        spec.trivial_u.push(l);
                    }
                }
            } else if part == "t2eis" {
                spec.t2 = Some(T2Mode::Eigen);
            } else if part == "t2eis:global" {
                spec.t2 = Some(T2Mode::Global);
            } else {
                return Err(Error::InvalidQuotient(format!("unknown condition `{part}`")));
            }
        }
        spec.trivial_u.sort_unstable();
        Ok(spec)
    }
}

/// `[ℓu:v] - Σ_k [u + kN/ℓ : v]` for every admissible `(u, v)`.
pub fn trivial_ul_relations(space: &SymbolSpace, l: u64) -> Result<Vec<SymbolVector>> {
    let n = space.level();
    if !is_prime(l) || n % l != 0 {
        return Err(Error::InvalidQuotient(format!("{l} is not a prime dividing N = {n}")));
    }
    let ring = space.ring();
    let step = (n / l) as i64;
    let mut rows = Vec::new();
    for u in 0..n as i64 {
        let lu = modulo(l as i64 * u, n);
        if space.variant() == Variant::CuspZero && lu == 0 {
            continue;
        }
        for v in 0..n as i64 {
            if gcd(gcd(lu, v as u64), n) != 1 {
                continue;
            }
            let mut row = SymbolVector::new();
            space.add_symbol(&mut row, lu as i64, v, ring.one());
            for k in 0..l as i64 {
                space.add_symbol(&mut row, u + k * step, v, ring.neg(ring.one()));
            }
            if !row.is_zero() {
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// `[2u:v] + [2u:u+v] + [u+v:2v] + [u:2v] - 2[u:v] - [2u:2v]` for every
/// generator `[u:v]` (with `u + v` nonzero in the cuspidal-at-zero variant).
pub fn t2_vectors(space: &SymbolSpace) -> Result<Vec<SymbolVector>> {
    let n = space.level();
    if n % 2 == 0 {
        return Err(Error::InvalidQuotient(format!("T2 condition needs odd N, got {n}")));
    }
    let ring = space.ring();
    let one = ring.one();
    let mut rows = Vec::new();
    for &(u, v) in space.symbols() {
        let (u, v) = (u as i64, v as i64);
        if space.variant() == Variant::CuspZero && modulo(u + v, n) == 0 {
            continue;
        }
        rows.push(t2_vector(space, u, v, one));
    }
    Ok(rows)
}

fn t2_vector(space: &SymbolSpace, u: i64, v: i64, one: crate::ring::RingElem) -> SymbolVector {
    let ring = space.ring();
    let mut row = SymbolVector::new();
    space.add_symbol(&mut row, 2 * u, v, one);
    space.add_symbol(&mut row, 2 * u, u + v, one);
    space.add_symbol(&mut row, u + v, 2 * v, one);
    space.add_symbol(&mut row, u, 2 * v, one);
    space.add_symbol(&mut row, u, v, ring.int(-2));
    space.add_symbol(&mut row, 2 * u, 2 * v, ring.neg(one));
    row
}

/// `T_2` relations in the orbit coordinates of an `ω²`-component.
pub fn t2_eisenstein_relations(ctx: &EigenContext) -> Result<Vec<Row>> {
    let omega2 = ctx.group().teichmuller()?.pow(2);
    if ctx.theta() != &omega2 {
        return Err(Error::InvalidQuotient("T2 relations live in the omega^2 component".into()));
    }
    Ok(t2_vectors(ctx.space())?.iter().map(|r| ctx.project(r)).collect())
}

/// The θ-component of the quotient described by `spec`.
///
/// The `T_2` condition is rejected in the full variant unless
/// `allow_full_t2` is set.
pub fn apply_quotient(ctx: &EigenContext, spec: &QuotientSpec, allow_full_t2: bool) -> Result<EigenContext> {
    let space = ctx.space();
    spec.validate(space.level())?;
    let mut extra = Vec::new();
    for &l in &spec.trivial_u {
        extra.extend(trivial_ul_relations(space, l)?);
    }
    let mut out = ctx.with_relations(&extra);
    if let Some(mode) = spec.t2 {
        if space.variant() == Variant::Full && !allow_full_t2 {
            return Err(Error::InvalidQuotient(
                "T2 condition applies to the cuspidal-at-zero variant".into(),
            ));
        }
        match mode {
            T2Mode::Global => out = out.with_relations(&t2_vectors(space)?),
            T2Mode::Eigen => {
                let omega2 = ctx.group().teichmuller()?.pow(2);
                if ctx.theta() == &omega2 {
                    out = out.with_eigen_relations(&t2_eisenstein_relations(ctx)?);
                }
            }
        }
    }
    Ok(out)
}
