//! θ-eigenspaces of symbol spaces, eigensymbols and the span of (c,d)-symbols.
//!
//! For an even character θ the image `e_θ F` of the free module on the
//! generators has a basis indexed by Δ-orbits of generators on whose
//! stabilizer θ is trivial: choosing a representative `s` per orbit,
//! `e_θ[a s] = θ(a) e_θ[s]`. Every vector is handled through these orbit
//! coordinates, so `H^θ = O^r / π_θ(R)` with `π_θ` the induced projection.

use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::{gcd, lcm, modulo};
use crate::character::{CharacterGroup, DirichletCharacter};
use crate::error::{Error, Result};
use crate::linalg::{apply_matrix, axpy, howell_form, is_zero_row, zero_row, Row, Submodule};
use crate::ring::{CoeffRing, RingElem};
use crate::symbols::{SymbolSpace, SymbolVector, Variant};

/// Which `(c, d)` pairs generate the (c,d)-span.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CdRange {
    /// One integer per residue class modulo `lcm(6N, p^k)` prime to `6N`.
    Exhaustive,
    /// Integers `2..=bound` prime to `6N` only.
    Bound(u64),
}

impl CdRange {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, CdRange::Exhaustive)
    }
}

/// Representative integers `c > 1` prime to `6N`, one for each value of
/// `(c mod N, c^2 mod p^k)` reachable in the range.
pub fn cd_representatives(n: u64, q: u64, range: CdRange) -> Vec<u64> {
    let six_n = 6 * n;
    let top = match range {
        CdRange::Exhaustive => lcm(six_n, q) + 1,
        CdRange::Bound(b) => b,
    };
    let mut seen = std::collections::HashSet::new();
    (2..=top)
        .filter(|&c| gcd(c, six_n) == 1)
        .filter(|&c| seen.insert((c % n, c % q * (c % q) % q)))
        .collect()
}

/// Coprime divisor pairs `(g, h)` of `N`.
pub fn coprime_divisor_pairs(n: u64) -> Vec<(u64, u64)> {
    let divs = crate::arith::divisors(n);
    let mut out = Vec::new();
    for &g in &divs {
        for &h in &divs {
            if gcd(g, h) == 1 {
                out.push((g, h));
            }
        }
    }
    out
}

/// Units `a, b` mod `N` with `ag + bh = δ`, where `δ = 2` exactly when `N` is
/// even and `gh` is odd. Searches `a`, then `b`, upward from 2.
pub fn bezout_units(n: u64, g: u64, h: u64) -> Result<(u64, u64, u64)> {
    if n % g != 0 || n % h != 0 || gcd(g, h) != 1 {
        return Err(Error::BadDivisors { g, h, n });
    }
    let delta = if n % 2 == 1 || (g * h) % 2 == 0 { 1 } else { 2 };
    for a in 2..=n + 1 {
        if gcd(a, n) != 1 {
            continue;
        }
        for b in 2..=n + 1 {
            if gcd(b, n) == 1 && (a * g + b * h) % n == delta % n {
                return Ok((a, b, delta));
            }
        }
    }
    unreachable!("coprime divisors always admit unit Bezout coefficients")
}

/// The θ-component of a symbol space, in orbit coordinates.
#[derive(Clone)]
pub struct EigenContext {
    space: Arc<SymbolSpace>,
    theta: DirichletCharacter,
    /// `π_θ` of each generator: coordinate and coefficient, `None` when killed.
    coords: Vec<Option<(usize, RingElem)>>,
    /// Generator index of the representative for each coordinate.
    reps: Vec<usize>,
    relations: Submodule,
    phi_inv: RingElem,
}

impl std::fmt::Debug for EigenContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EigenContext")
            .field("space", &self.space)
            .field("theta", &self.theta)
            .field("rank", &self.rank())
            .finish()
    }
}

fn check_theta(space: &SymbolSpace, theta: &DirichletCharacter) -> Result<()> {
    let n = space.level();
    if theta.modulus() != n {
        return Err(Error::CharacterModulus {
            expected: n,
            got: theta.modulus(),
        });
    }
    if theta.ring() != space.ring() {
        return Err(Error::Config("character and symbol space use different rings".into()));
    }
    let phi = theta.group().unit_group().order();
    if phi % space.ring().p() == 0 {
        return Err(Error::PDividesPhiN(phi));
    }
    if !theta.is_even() {
        return Err(Error::OddCharacter);
    }
    Ok(())
}

impl EigenContext {
    pub fn new(space: Arc<SymbolSpace>, theta: DirichletCharacter) -> Result<EigenContext> {
        check_theta(&space, &theta)?;
        let ring = space.ring().clone();
        let units: Vec<u64> = theta.group().unit_group().units().collect();
        let mut coords: Vec<Option<(usize, RingElem)>> = vec![None; space.dim()];
        let mut visited = vec![false; space.dim()];
        let mut reps = Vec::new();
        for s in 0..space.dim() {
            if visited[s] {
                continue;
            }
            let mut members: Vec<(usize, RingElem)> = Vec::new();
            let mut factor_of = std::collections::HashMap::new();
            let mut killed = false;
            for &a in &units {
                let t = space.diamond_action(a as i64)?[s];
                let value = theta.value(a as i64);
                match factor_of.get(&t) {
                    None => {
                        factor_of.insert(t, value);
                        members.push((t, value));
                    }
                    Some(&f) if f != value => killed = true,
                    Some(_) => {}
                }
            }
            for &(t, _) in &members {
                visited[t] = true;
            }
            if !killed {
                let coord = reps.len();
                reps.push(s);
                for (t, value) in members {
                    coords[t] = Some((coord, value));
                }
            }
        }
        let phi = units.len() as i64;
        let phi_inv = ring.inv(ring.int(phi)).ok_or(Error::PDividesPhiN(phi as u64))?;
        let mut ctx = EigenContext {
            space,
            theta,
            coords,
            reps,
            relations: Submodule::zero(&ring, 0),
            phi_inv,
        };
        let rows: Vec<Row> = ctx.space.relations().iter().map(|r| ctx.project(r)).collect();
        ctx.relations = howell_form(&rows, ctx.rank(), &ring);
        Ok(ctx)
    }

    /// The same component of the quotient by further relations of the free module.
    pub fn with_relations(&self, extra: &[SymbolVector]) -> EigenContext {
        let rows: Vec<Row> = extra.iter().map(|r| self.project(r)).collect();
        self.with_eigen_relations(&rows)
    }

    /// The same component with further relations given in orbit coordinates.
    pub fn with_eigen_relations(&self, rows: &[Row]) -> EigenContext {
        let mut ctx = self.clone();
        ctx.relations = self.relations.with_rows(rows);
        ctx
    }

    pub fn space(&self) -> &SymbolSpace {
        &self.space
    }

    pub fn theta(&self) -> &DirichletCharacter {
        &self.theta
    }

    pub fn group(&self) -> &Arc<CharacterGroup> {
        self.theta.group()
    }

    pub fn ring(&self) -> &CoeffRing {
        self.space.ring()
    }

    pub fn level(&self) -> u64 {
        self.space.level()
    }

    /// Number of orbit coordinates.
    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    /// Orbit representatives `[u:v]`, one per coordinate.
    pub fn representatives(&self) -> Vec<(u64, u64)> {
        self.reps.iter().map(|&s| self.space.symbols()[s]).collect()
    }

    /// `π_θ(R)`, the relations of `H^θ` in orbit coordinates.
    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    pub fn phi_inverse(&self) -> RingElem {
        self.phi_inv
    }

    /// `ψ = θ χ^{-1}`.
    pub fn psi(&self, chi: &DirichletCharacter) -> DirichletCharacter {
        self.theta.mul(&chi.inv())
    }

    /// Orbit coordinates of `e_θ v`.
    pub fn project(&self, v: &SymbolVector) -> Row {
        let ring = self.ring();
        let mut out = zero_row(ring, self.rank());
        for (i, c) in v.terms() {
            if let Some((j, f)) = self.coords[i] {
                out[j] = ring.add(out[j], ring.mul(c, f));
            }
        }
        out
    }

    fn add_projected(&self, out: &mut [RingElem], generator: usize, coeff: RingElem) {
        if let Some((j, f)) = self.coords[generator] {
            let ring = self.ring();
            out[j] = ring.add(out[j], ring.mul(coeff, f));
        }
    }

    /// Orbit coordinates of `e_θ[u:v]`.
    pub fn project_symbol(&self, u: i64, v: i64) -> Result<Row> {
        Ok(self.project(&self.space.symbol(u, v)?))
    }

    /// Length of `H^θ`.
    pub fn h_length(&self) -> u32 {
        self.rank() as u32 * self.ring().k() - self.relations.length()
    }

    /// Length of the image in `H^θ` of a submodule of `O^r`.
    pub fn image_length(&self, sub: &Submodule) -> u32 {
        self.relations.sum(sub).length() - self.relations.length()
    }

    /// Whether the submodule maps onto `H^θ`.
    pub fn generates(&self, sub: &Submodule) -> bool {
        self.image_length(sub) == self.h_length()
    }

    pub fn is_zero_in_h(&self, v: &[RingElem]) -> bool {
        self.relations.contains(v)
    }

    /// Canonical representative in `H^θ`.
    pub fn reduce(&self, v: &[RingElem]) -> Row {
        self.relations.reduce(v)
    }

    fn check_divisors(&self, g: u64, h: u64) -> Result<()> {
        let n = self.level();
        if n % g != 0 || n % h != 0 || gcd(g, h) != 1 {
            return Err(Error::BadDivisors { g, h, n });
        }
        Ok(())
    }

    fn check_character(&self, chi: &DirichletCharacter) -> Result<()> {
        if chi.modulus() != self.level() || chi.ring() != self.ring() {
            return Err(Error::CharacterModulus {
                expected: self.level(),
                got: chi.modulus(),
            });
        }
        Ok(())
    }

    /// `(1/φ(N)^2) Σ_{a,b} χ^{-1}(a) ψ^{-1}(b) w(ga, hb)` for a symbol-valued `w`.
    fn average(
        &self,
        chi: &DirichletCharacter,
        g: u64,
        h: u64,
        mut term: impl FnMut(&mut Row, i64, i64, RingElem),
    ) -> Result<Row> {
        self.check_divisors(g, h)?;
        self.check_character(chi)?;
        let ring = self.ring().clone();
        let n = self.level();
        let mut out = zero_row(&ring, self.rank());
        if self.space.variant() == Variant::CuspZero && (g == n || h == n) {
            return Ok(out);
        }
        let chi_inv = chi.inv();
        let psi_inv = self.psi(chi).inv();
        let units: Vec<u64> = self.group().unit_group().units().collect();
        let psi_values: Vec<RingElem> = units.iter().map(|&b| psi_inv.value(b as i64)).collect();
        for &a in &units {
            let x = chi_inv.value(a as i64);
            for (&b, &y) in units.iter().zip(&psi_values) {
                term(&mut out, (g * a) as i64, (h * b) as i64, ring.mul(x, y));
            }
        }
        let scale = ring.mul(self.phi_inv, self.phi_inv);
        Ok(out.into_iter().map(|z| ring.mul(scale, z)).collect())
    }

    /// The eigensymbol `α_{χ,ψ}^{g,h}` in orbit coordinates.
    pub fn eigensymbol(&self, chi: &DirichletCharacter, g: u64, h: u64) -> Result<Row> {
        let space = self.space.clone();
        self.average(chi, g, h, |out, u, v, coeff| {
            let i = space.index_of(u, v).expect("[ga:hb] is a generator");
            self.add_projected(out, i, coeff);
        })
    }

    /// The (c,d)-eigensymbol `_{c,d}α_{χ,ψ}^{g,h}` in orbit coordinates.
    pub fn cd_eigensymbol(&self, c: u64, d: u64, chi: &DirichletCharacter, g: u64, h: u64) -> Result<Row> {
        let six_n = 6 * self.level();
        if c <= 1 || d <= 1 || gcd(c, six_n) != 1 || gcd(d, six_n) != 1 {
            return Err(Error::BadCd { c, d, six_n });
        }
        let space = self.space.clone();
        let ring = self.ring().clone();
        self.average(chi, g, h, |out, u, v, coeff| {
            let cd = space.cd_symbol(c, d, u, v).expect("validated (c, d)");
            for (i, x) in cd.terms() {
                self.add_projected(out, i, ring.mul(coeff, x));
            }
        })
    }

    /// Matrix of `[u:v] -> [cu:v]` (first) or `[u:v] -> [u:cv]` (second) on orbit coordinates.
    fn scaling_matrix(&self, c: u64, first: bool) -> Vec<Row> {
        let n = self.level();
        let c = (c % n) as i64;
        self.representatives()
            .into_iter()
            .map(|(u, v)| {
                let (u, v) = (u as i64, v as i64);
                let (x, y) = if first { (c * u, v) } else { (u, c * v) };
                self.project_symbol(x, y).expect("units preserve generators")
            })
            .collect()
    }

    /// `c^2 - A` for the scaling matrix `A`.
    fn cd_factor(&self, c: u64, first: bool) -> Vec<Row> {
        let ring = self.ring();
        let q = ring.characteristic();
        let c2 = ring.int((c % q * (c % q) % q) as i64);
        let mut m = self.scaling_matrix(c, first);
        for (i, row) in m.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x = ring.neg(*x);
            }
            row[i] = ring.add(row[i], c2);
        }
        m
    }

    /// `C^θ` before reduction by the relations, as a submodule of `O^r`.
    ///
    /// The (c,d)-symbol of `[u:v]` is `(c^2 - A_c)(d^2 - B_d)[u:v]` with
    /// commuting Δ-equivariant scalings `A_c`, `B_d`, so the span over all
    /// generators is `Σ_c (c^2 - A_c)(Σ_d (d^2 - B_d) O^r)`.
    pub fn cd_span(&self, range: CdRange) -> Submodule {
        let ring = self.ring().clone();
        let r = self.rank();
        let reps = cd_representatives(self.level(), ring.characteristic(), range);
        let d_rows: Vec<Row> = reps
            .par_iter()
            .flat_map_iter(|&d| self.cd_factor(d, false))
            .collect();
        let w = howell_form(&d_rows, r, &ring);
        let c_rows: Vec<Row> = reps
            .par_iter()
            .flat_map_iter(|&c| {
                let p_c = self.cd_factor(c, true);
                w.rows()
                    .iter()
                    .map(|row| apply_matrix(&ring, row, &p_c, r))
                    .collect::<Vec<_>>()
            })
            .collect();
        howell_form(&c_rows, r, &ring)
    }

    /// `C^θ` from every (c,d)-symbol of every generator, without factoring.
    pub fn cd_span_direct(&self, range: CdRange) -> Submodule {
        let ring = self.ring().clone();
        let reps = cd_representatives(self.level(), ring.characteristic(), range);
        let mut rows = Vec::new();
        for &c in &reps {
            for &d in &reps {
                for &(u, v) in self.space.symbols() {
                    let cd = self
                        .space
                        .cd_symbol(c, d, u as i64, v as i64)
                        .expect("representatives are admissible");
                    let row = self.project(&cd);
                    if !is_zero_row(&ring, &row) {
                        rows.push(row);
                    }
                }
            }
        }
        howell_form(&rows, self.rank(), &ring)
    }

    /// Span of all eigensymbols `α_{χ,ψ}^{g,h}`.
    pub fn eigensymbol_span(&self) -> Result<Submodule> {
        let mut rows = Vec::new();
        for chi in self.group().enumerate() {
            for (g, h) in coprime_divisor_pairs(self.level()) {
                rows.push(self.eigensymbol(&chi, g, h)?);
            }
        }
        Ok(howell_form(&rows, self.rank(), self.ring()))
    }
}

/// Matrix of `e_θ = (1/φ(N)) Σ θ^{-1}(a)<a>` on the free module of generators
/// (row-vector convention); it preserves the relations, so it also acts on the
/// presented module.
pub fn idempotent_projector(space: &SymbolSpace, theta: &DirichletCharacter) -> Result<Vec<Row>> {
    let n = space.level();
    if theta.modulus() != n {
        return Err(Error::CharacterModulus {
            expected: n,
            got: theta.modulus(),
        });
    }
    let ring = space.ring();
    let phi = theta.group().unit_group().order();
    let phi_inv = ring.inv(ring.int(phi as i64)).ok_or(Error::PDividesPhiN(phi))?;
    if !theta.is_even() {
        return Err(Error::OddCharacter);
    }
    Ok(character_average(space, theta, phi_inv))
}

/// `(1/φ(N)) Σ χ^{-1}(a)<a>` for any character, odd ones included.
pub fn character_average(space: &SymbolSpace, chi: &DirichletCharacter, phi_inv: RingElem) -> Vec<Row> {
    let ring = space.ring();
    let dim = space.dim();
    let mut m = vec![zero_row(ring, dim); dim];
    let chi_inv = chi.inv();
    for a in chi.group().unit_group().units() {
        let perm = space.diamond_action(a as i64).expect("units act");
        let value = ring.mul(phi_inv, chi_inv.value(a as i64));
        for (i, &j) in perm.iter().enumerate() {
            m[i][j] = ring.add(m[i][j], value);
        }
    }
    m
}

/// `D^θ` lifted to the free module: the span of `e_θ F` and the relations.
pub fn eigenspace(space: &SymbolSpace, theta: &DirichletCharacter) -> Result<Submodule> {
    let projector = idempotent_projector(space, theta)?;
    let mut rows = projector;
    rows.extend(space.relations().iter().map(|r| space.dense(r)));
    Ok(howell_form(&rows, space.dim(), space.ring()))
}

/// Multiply two square matrices in the row-vector convention.
pub fn mat_mul(ring: &CoeffRing, a: &[Row], b: &[Row]) -> Vec<Row> {
    let dim = b.first().map_or(0, |r| r.len());
    a.iter().map(|row| apply_matrix(ring, row, b, dim)).collect()
}

/// `Σ_i coeffs_i rows_i`.
pub fn combination(ring: &CoeffRing, dim: usize, terms: &[(RingElem, &Row)]) -> Row {
    let mut out = zero_row(ring, dim);
    for &(c, row) in terms {
        axpy(ring, &mut out, c, row);
    }
    out
}

/// Residue of an integer modulo `N` as a signed value.
pub fn signed(n: u64, a: i64) -> i64 {
    modulo(a, n) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;
    use crate::character::teichmuller_character;
    use crate::ring::make_coeff_ring;
    use crate::symbols::build_presentation;

    fn context(p: u64, k: u32, n: u64, variant: Variant, theta: &[i64]) -> EigenContext {
        let ring = make_coeff_ring(p, k, euler_phi(n)).unwrap();
        let space = Arc::new(build_presentation(n, variant, &ring).unwrap());
        let group = CharacterGroup::new(n, &ring).unwrap();
        EigenContext::new(space, group.character(theta).unwrap()).unwrap()
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(bezout_units(15, 3, 1).unwrap(), (4, 4, 1));
        assert_eq!(bezout_units(12, 1, 1).unwrap(), (7, 7, 2));
        let (a, b, delta) = bezout_units(35, 1, 1).unwrap();
        assert_eq!(((a + b) % 35, delta), (1, 1));
        assert!(bezout_units(12, 2, 4).is_err());
        for n in 4..60u64 {
            for (g, h) in coprime_divisor_pairs(n) {
                let (a, b, delta) = bezout_units(n, g, h).unwrap();
                assert_eq!(gcd(a, n), 1);
                assert_eq!(gcd(b, n), 1);
                assert_eq!((a * g + b * h) % n, delta % n);
            }
        }
    }

    #[test]
    fn cd_representatives_cover_classes() {
        let reps = cd_representatives(5, 5, CdRange::Exhaustive);
        assert_eq!(reps.len(), 4);
        assert!(reps.iter().all(|&c| c > 1 && gcd(c, 30) == 1));
        let bounded = cd_representatives(5, 5, CdRange::Bound(10));
        assert_eq!(bounded, vec![7]);
    }

    #[test]
    fn rejects_bad_inputs() {
        let ring = make_coeff_ring(5, 1, 4).unwrap();
        let space = Arc::new(build_presentation(5, Variant::Full, &ring).unwrap());
        let group = CharacterGroup::new(5, &ring).unwrap();
        let odd = group.character(&[1]).unwrap();
        assert_eq!(EigenContext::new(space.clone(), odd).unwrap_err(), Error::OddCharacter);
        let ctx = EigenContext::new(space, group.trivial()).unwrap();
        assert!(ctx.eigensymbol(&group.trivial(), 5, 5).is_err());
        assert!(ctx.cd_eigensymbol(5, 7, &group.trivial(), 1, 1).is_err());
    }

    #[test]
    fn projector_is_identity_when_delta_is_trivial() {
        let ring = make_coeff_ring(5, 1, 2).unwrap();
        let space = build_presentation(4, Variant::Full, &ring).unwrap();
        let group = CharacterGroup::new(4, &ring).unwrap();
        let e = idempotent_projector(&space, &group.trivial()).unwrap();
        for (i, row) in e.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { ring.one() } else { ring.zero() });
            }
        }
    }

    #[test]
    fn projectors_at_level_five() {
        let ring = make_coeff_ring(5, 1, 4).unwrap();
        let space = build_presentation(5, Variant::Full, &ring).unwrap();
        let group = CharacterGroup::new(5, &ring).unwrap();
        let phi_inv = ring.inv(ring.int(4)).unwrap();
        let mut total = vec![zero_row(&ring, space.dim()); space.dim()];
        let mut evens = Vec::new();
        for chi in group.enumerate() {
            let e = character_average(&space, &chi, phi_inv);
            if chi.is_even() {
                assert_eq!(mat_mul(&ring, &e, &e), e);
                evens.push(e.clone());
            } else {
                assert!(e.iter().all(|r| is_zero_row(&ring, r)));
            }
            for (t, r) in total.iter_mut().zip(&e) {
                *t = crate::linalg::add_rows(&ring, t, r);
            }
        }
        let zero = vec![zero_row(&ring, space.dim()); space.dim()];
        assert_eq!(mat_mul(&ring, &evens[0], &evens[1]), zero);
        for (i, row) in total.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { ring.one() } else { ring.zero() });
            }
        }
        // eigenspace lengths add up to the presented length
        let relations = space.relation_module().length();
        let lengths: u32 = group
            .enumerate()
            .iter()
            .filter(|c| c.is_even())
            .map(|c| eigenspace(&space, c).unwrap().length() - relations)
            .sum();
        assert_eq!(lengths, 3);
    }

    #[test]
    fn orbit_coordinates_match_projector() {
        for (p, n) in [(5u64, 5u64), (5, 12), (7, 5), (3, 4), (11, 15)] {
            let ring = make_coeff_ring(p, 1, euler_phi(n)).unwrap();
            for variant in [Variant::Full, Variant::CuspZero] {
                let space = Arc::new(build_presentation(n, variant, &ring).unwrap());
                let group = CharacterGroup::new(n, &ring).unwrap();
                let relations = space.relation_module().length();
                for theta in group.enumerate().into_iter().filter(|c| c.is_even()) {
                    let via_projector = eigenspace(&space, &theta).unwrap().length() - relations;
                    let ctx = EigenContext::new(space.clone(), theta).unwrap();
                    assert_eq!(ctx.h_length(), via_projector);
                }
            }
        }
    }

    #[test]
    fn factored_cd_span_matches_direct() {
        for (p, k, n, variant, theta) in [
            (5u64, 1u32, 5u64, Variant::Full, vec![0i64]),
            (5, 2, 5, Variant::Full, vec![2]),
            (5, 1, 5, Variant::CuspZero, vec![2]),
            (3, 1, 12, Variant::Full, vec![1, 1]),
            (5, 1, 12, Variant::CuspZero, vec![0, 0]),
        ] {
            let ctx = context(p, k, n, variant, &theta);
            assert_eq!(ctx.cd_span(CdRange::Exhaustive), ctx.cd_span_direct(CdRange::Exhaustive));
        }
    }

    #[test]
    fn level_five_trivial_character_is_generated() {
        let ctx = context(5, 1, 5, Variant::Full, &[0]);
        let c = ctx.cd_span(CdRange::Exhaustive);
        assert!(ctx.generates(&c));
    }

    #[test]
    fn eigensymbols_span_and_vanish() {
        let ctx = context(5, 1, 5, Variant::Full, &[2]);
        let span = ctx.eigensymbol_span().unwrap();
        assert!(ctx.generates(&span));
        // p = 5, M = 1, θ = ω^4 = 1: α_{ω², ω²} vanishes
        let ctx = context(5, 1, 5, Variant::Full, &[0]);
        let ring = ctx.ring().clone();
        let omega = teichmuller_character(1, 5, &ring).unwrap();
        let omega2 = CharacterGroup::new(5, &ring).unwrap().extend(&omega.pow(2)).unwrap();
        let alpha = ctx.eigensymbol(&omega2, 1, 1).unwrap();
        assert!(ctx.is_zero_in_h(&alpha));
    }

    #[test]
    fn cusp_zero_convention() {
        let ctx = context(5, 1, 5, Variant::CuspZero, &[0]);
        let group = ctx.group().clone();
        for chi in group.enumerate() {
            assert!(is_zero_row(ctx.ring(), &ctx.eigensymbol(&chi, 5, 1).unwrap()));
        }
    }
}
