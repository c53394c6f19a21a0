//! Unit groups of `Z/NZ` and Dirichlet characters with values in a [`CoeffRing`].
//!
//! A character is stored by its exponent vector on the canonical CRT generator
//! list of `(Z/NZ)^x`: generator `g_i` of order `n_i` is sent to
//! `zeta_{n_i}^{e_i}`, where `zeta_{n_i}` is a fixed power of the ring's
//! deterministic primitive root of unity.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::{crt, divisors, factorize, gcd, lcm, legendre, modulo, mul_order};
use crate::error::{Error, Result};
use crate::ring::{CoeffRing, RingElem};

/// CRT decomposition of `(Z/NZ)^x` with a discrete-log table.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    modulus: u64,
    generators: Vec<(u64, u64)>,
    logs: Vec<Option<Vec<u32>>>,
}

/// Canonical generators of `(Z/NZ)^x`, prime by prime, lifted through CRT.
pub fn unit_group(n: u64) -> Result<UnitGroup> {
    if n < 2 {
        return Err(Error::ModulusTooSmall(n));
    }
    Ok(UnitGroup::build(n))
}

impl UnitGroup {
    fn build(n: u64) -> UnitGroup {
        let mut generators = Vec::new();
        for (l, e) in factorize(n) {
            let part = l.pow(e);
            let rest = n / part;
            let mut local: Vec<(u64, u64)> = Vec::new();
            if l == 2 {
                if e >= 2 {
                    local.push((part - 1, 2));
                }
                if e >= 3 {
                    local.push((5, part / 4));
                }
            } else {
                let order = part / l * (l - 1);
                let g = (2..part)
                    .find(|&g| mul_order(g, part) == Some(order))
                    .expect("odd prime powers have primitive roots");
                local.push((g, order));
            }
            for (g, order) in local {
                let lifted = if rest == 1 { g } else { crt(g, part, 1, rest) };
                generators.push((lifted, order));
            }
        }

        let mut logs = vec![None; n as usize];
        let mut exps = vec![0u32; generators.len()];
        loop {
            let mut x = 1 % n;
            for (&(g, _), &e) in generators.iter().zip(&exps) {
                x = x * crate::arith::mod_pow(g, e as u64, n) % n;
            }
            debug_assert!(logs[x as usize].is_none());
            logs[x as usize] = Some(exps.clone());
            if !odometer_step(&mut exps, generators.iter().map(|g| g.1)) {
                break;
            }
        }
        UnitGroup {
            modulus: n,
            generators,
            logs,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `(residue, order)` for each generator.
    pub fn generators(&self) -> &[(u64, u64)] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.generators.iter().map(|g| g.1).product()
    }

    /// Least common multiple of the generator orders.
    pub fn exponent(&self) -> u64 {
        self.generators.iter().fold(1, |acc, g| lcm(acc, g.1))
    }

    pub fn log(&self, a: i64) -> Option<&[u32]> {
        self.logs[modulo(a, self.modulus) as usize].as_deref()
    }

    pub fn is_unit(&self, a: i64) -> bool {
        self.log(a).is_some()
    }

    /// Units in increasing order of their least residue.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.modulus).filter(move |&a| self.logs[a as usize].is_some())
    }
}

/// Advance a mixed-radix counter, last digit fastest; false once it wraps.
fn odometer_step(digits: &mut [u32], radices: impl DoubleEndedIterator<Item = u64> + ExactSizeIterator) -> bool {
    let radices: Vec<u64> = radices.collect();
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if (digits[i] as u64) < radices[i] {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// Character group `Hom((Z/NZ)^x, ring^x)` for a fixed ring.
pub struct CharacterGroup {
    group: UnitGroup,
    ring: CoeffRing,
    exponent: u64,
    zeta_powers: Vec<RingElem>,
    dlog: HashMap<RingElem, u32>,
}

impl fmt::Debug for CharacterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterGroup")
            .field("modulus", &self.group.modulus)
            .field("ring", &self.ring)
            .finish()
    }
}

impl CharacterGroup {
    /// Requires the ring to contain the `phi(N)`-th roots of unity.
    pub fn new(n: u64, ring: &CoeffRing) -> Result<Arc<CharacterGroup>> {
        let group = unit_group(n)?;
        Self::from_group(group, ring)
    }

    fn from_group(group: UnitGroup, ring: &CoeffRing) -> Result<Arc<CharacterGroup>> {
        let order = ring.residue_units_order();
        let phi = group.order();
        if order % phi != 0 {
            return Err(Error::RingTooSmall { order, needed: phi });
        }
        let exponent = group.exponent();
        let zeta = ring.root_of_unity(exponent)?;
        let mut zeta_powers = Vec::with_capacity(exponent as usize);
        let mut dlog = HashMap::new();
        let mut x = ring.one();
        for i in 0..exponent {
            zeta_powers.push(x);
            dlog.insert(x, i as u32);
            x = ring.mul(x, zeta);
        }
        Ok(Arc::new(CharacterGroup {
            group,
            ring: ring.clone(),
            exponent,
            zeta_powers,
            dlog,
        }))
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn unit_group(&self) -> &UnitGroup {
        &self.group
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.ring
    }

    /// Character with the given exponent vector (reduced mod each generator order).
    pub fn character(self: &Arc<Self>, exps: &[i64]) -> Result<DirichletCharacter> {
        let gens = self.group.generators();
        if exps.len() != gens.len() {
            return Err(Error::CharacterSpec {
                spec: format!("{exps:?}"),
                reason: format!("expected {} exponents", gens.len()),
            });
        }
        let exps: Vec<u32> = exps
            .iter()
            .zip(gens)
            .map(|(&e, &(_, order))| modulo(e, order) as u32)
            .collect();
        Ok(DirichletCharacter::from_exponents(self.clone(), exps))
    }

    pub fn trivial(self: &Arc<Self>) -> DirichletCharacter {
        DirichletCharacter::from_exponents(self.clone(), vec![0; self.group.generators().len()])
    }

    /// All `phi(N)` characters; the last generator's exponent varies fastest.
    pub fn enumerate(self: &Arc<Self>) -> Vec<DirichletCharacter> {
        let gens = self.group.generators();
        let mut exps = vec![0u32; gens.len()];
        let mut out = Vec::with_capacity(self.group.order() as usize);
        loop {
            out.push(DirichletCharacter::from_exponents(self.clone(), exps.clone()));
            if !odometer_step(&mut exps, gens.iter().map(|g| g.1)) {
                break;
            }
        }
        out
    }

    /// Build a character from its values on units; `None` if some value is not
    /// a root of unity of the right order (the map is assumed multiplicative).
    pub fn from_values(self: &Arc<Self>, value: impl Fn(u64) -> RingElem) -> Option<DirichletCharacter> {
        let mut exps = Vec::new();
        for &(g, order) in self.group.generators() {
            let t = *self.dlog.get(&value(g))? as u64;
            let step = self.exponent / order;
            if t % step != 0 {
                return None;
            }
            exps.push((t / step) as u32);
        }
        Some(DirichletCharacter::from_exponents(self.clone(), exps))
    }

    /// The Teichmüller character, for `N` divisible by `p`.
    pub fn teichmuller(self: &Arc<Self>) -> Result<DirichletCharacter> {
        let p = self.ring.p();
        if self.modulus() % p != 0 {
            return Err(Error::CharacterSpec {
                spec: "omega".into(),
                reason: format!("p = {p} does not divide the modulus {}", self.modulus()),
            });
        }
        let ring = self.ring.clone();
        Ok(self
            .from_values(|a| ring.teichmuller(a as i64).expect("units are nonzero mod p"))
            .expect("Teichmüller values are roots of unity"))
    }

    /// Legendre symbol modulo an odd prime `q` dividing `N`, viewed mod `N`.
    pub fn quadratic(self: &Arc<Self>, q: u64) -> Result<DirichletCharacter> {
        if q == 2 || !crate::arith::is_prime(q) || self.modulus() % q != 0 {
            return Err(Error::CharacterSpec {
                spec: format!("quad{q}"),
                reason: format!("{q} is not an odd prime dividing {}", self.modulus()),
            });
        }
        let ring = self.ring.clone();
        Ok(self
            .from_values(|a| ring.int(legendre(a, q) as i64))
            .expect("quadratic values are roots of unity"))
    }

    /// Extend a character mod a divisor `D` of `N` to `N`.
    pub fn extend(self: &Arc<Self>, chi: &DirichletCharacter) -> Result<DirichletCharacter> {
        let d = chi.modulus();
        if self.modulus() % d != 0 || chi.ring() != &self.ring {
            return Err(Error::CharacterModulus {
                expected: self.modulus(),
                got: d,
            });
        }
        Ok(self
            .from_values(|a| chi.value(a as i64))
            .expect("values of a character are roots of unity"))
    }
}

/// A homomorphism `(Z/NZ)^x -> ring^x`, extended by zero to non-units.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<CharacterGroup>,
    exps: Vec<u32>,
    /// Exponent of the group's root of unity at each residue; `None` off the units.
    table: Arc<Vec<Option<u32>>>,
    conductor: u64,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exps == other.exps && self.ring() == other.ring()
    }
}

impl Eq for DirichletCharacter {}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi mod {} {}", self.modulus(), self.label())
    }
}

impl DirichletCharacter {
    fn from_exponents(group: Arc<CharacterGroup>, exps: Vec<u32>) -> DirichletCharacter {
        let n = group.exponent;
        let weights: Vec<u64> = group
            .group
            .generators()
            .iter()
            .zip(&exps)
            .map(|(&(_, order), &e)| (n / order) * e as u64)
            .collect();
        let table: Vec<Option<u32>> = group
            .group
            .logs
            .iter()
            .map(|log| {
                log.as_ref().map(|log| {
                    let t: u64 = log.iter().zip(&weights).map(|(&l, &w)| l as u64 * w).sum();
                    (t % n) as u32
                })
            })
            .collect();
        let mut chi = DirichletCharacter {
            group,
            exps,
            table: Arc::new(table),
            conductor: 0,
        };
        chi.conductor = chi.compute_conductor();
        chi
    }

    /// Conductor as a product of local conductors at each prime power of `N`.
    fn compute_conductor(&self) -> u64 {
        let n = self.modulus();
        let mut f = 1;
        for (l, e) in factorize(n) {
            let part = l.pow(e);
            let rest = n / part;
            let mut local = part;
            for j in 0..e {
                let level = l.pow(j);
                // units that are 1 mod l^j and 1 away from l
                let trivial = (0..part)
                    .filter(|&x| gcd(x, part) == 1 && x % level == 1 % level)
                    .all(|x| {
                        let lifted = if rest == 1 { x } else { crt(x, part, 1, rest) };
                        self.table[lifted as usize] == Some(0)
                    });
                if trivial {
                    local = level;
                    break;
                }
            }
            f *= local;
        }
        f
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn ring(&self) -> &CoeffRing {
        &self.group.ring
    }

    pub fn group(&self) -> &Arc<CharacterGroup> {
        &self.group
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Canonical exponent-vector label, e.g. `[1,0]`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.exps.iter().map(|e| e.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Position in [`CharacterGroup::enumerate`].
    pub fn index(&self) -> usize {
        self.group
            .group
            .generators()
            .iter()
            .zip(&self.exps)
            .fold(0, |acc, (&(_, order), &e)| acc * order as usize + e as usize)
    }

    pub fn value(&self, a: i64) -> RingElem {
        match self.value_exponent(a) {
            Some(t) => self.group.zeta_powers[t as usize],
            None => self.ring().zero(),
        }
    }

    /// `t` with `chi(a) = zeta^t`, for units `a`.
    pub fn value_exponent(&self, a: i64) -> Option<u32> {
        self.table[modulo(a, self.modulus()) as usize]
    }

    /// Value of the associated primitive character; zero when `a` is not
    /// prime to the conductor.
    pub fn primitive_value(&self, a: i64) -> RingElem {
        let (n, f) = (self.modulus(), self.conductor);
        let a = modulo(a, f);
        if gcd(a, f) != 1 {
            return self.ring().zero();
        }
        let lift = (0..n / f).map(|j| a + j * f).find(|&x| gcd(x, n) == 1);
        self.value(lift.expect("a unit mod f lifts to a unit mod N") as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_even(&self) -> bool {
        self.value_exponent(-1) == Some(0)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn mul(&self, other: &DirichletCharacter) -> DirichletCharacter {
        assert_eq!(self.modulus(), other.modulus(), "characters of different moduli");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .zip(self.group.group.generators())
            .map(|((&a, &b), &(_, order))| ((a as u64 + b as u64) % order) as u32)
            .collect();
        DirichletCharacter::from_exponents(self.group.clone(), exps)
    }

    pub fn pow(&self, k: i64) -> DirichletCharacter {
        let exps = self
            .exps
            .iter()
            .zip(self.group.group.generators())
            .map(|(&a, &(_, order))| modulo(a as i64 * k, order) as u32)
            .collect();
        DirichletCharacter::from_exponents(self.group.clone(), exps)
    }

    pub fn inv(&self) -> DirichletCharacter {
        self.pow(-1)
    }

    /// Order of the character in the character group.
    pub fn order(&self) -> u64 {
        self.exps
            .iter()
            .zip(self.group.group.generators())
            .fold(1, |acc, (&e, &(_, order))| lcm(acc, order / gcd(e as u64, order)))
    }
}

/// The characters mod `N`, requiring `phi(N) | p^m - 1`.
pub fn enumerate_characters(n: u64, ring: &CoeffRing) -> Result<Vec<DirichletCharacter>> {
    Ok(CharacterGroup::new(n, ring)?.enumerate())
}

/// Teichmüller character on `(Z/MpZ)^x`.
pub fn teichmuller_character(m: u64, p: u64, ring: &CoeffRing) -> Result<DirichletCharacter> {
    if ring.p() != p {
        return Err(Error::InvalidPrime(p));
    }
    if m % p == 0 {
        return Err(Error::PDividesM(m));
    }
    CharacterGroup::new(m * p, ring)?.teichmuller()
}

/// CRT component of `chi` on `(Z/DZ)^x` for a unitary divisor `D` of `N`.
pub fn restrict_to_part(chi: &DirichletCharacter, d: u64) -> Result<DirichletCharacter> {
    let n = chi.modulus();
    if d < 2 || n % d != 0 || gcd(d, n / d) != 1 {
        return Err(Error::NotUnitaryDivisor { d, n });
    }
    let group = CharacterGroup::new(d, chi.ring())?;
    let rest = n / d;
    Ok(group
        .from_values(|x| {
            let lifted = if rest == 1 { x } else { crt(x, d, 1, rest) };
            chi.value(lifted as i64)
        })
        .expect("restriction of a character is a character"))
}

/// Parse a character specifier against the canonical generators mod `N`.
///
/// Accepted forms, joined by `*`, each optionally raised to `^k`:
/// `1`, `[e1,...,er]`, `omega`, `omega<k>`, `quad<q>` (Legendre symbol mod an
/// odd prime `q`), and `chi<D>[e1,...]` (a character mod a unitary divisor
/// `D`, given by exponents on the generators of `(Z/DZ)^x`). A leading
/// `theta=` is ignored.
pub fn parse_character(spec: &str, group: &Arc<CharacterGroup>) -> Result<DirichletCharacter> {
    let err = |reason: String| Error::CharacterSpec {
        spec: spec.to_string(),
        reason,
    };
    let body = spec.trim();
    let body = body.strip_prefix("theta=").unwrap_or(body).trim();
    if body.is_empty() {
        return Err(err("empty specifier".into()));
    }
    let mut result = group.trivial();
    for factor in split_factors(body) {
        let factor = factor.trim();
        let (base, power) = split_power(factor).map_err(err)?;
        let chi = parse_factor(base, group).map_err(|e| match e {
            Error::CharacterSpec { reason, .. } => err(reason),
            other => other,
        })?;
        result = result.mul(&chi.pow(power));
    }
    Ok(result)
}

/// Split on `*` outside brackets.
fn split_factors(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn split_power(factor: &str) -> std::result::Result<(&str, i64), String> {
    match factor.rsplit_once('^') {
        Some((base, exp)) if !base.ends_with('[') => exp
            .trim()
            .parse::<i64>()
            .map(|e| (base.trim(), e))
            .map_err(|_| format!("bad exponent `{exp}`")),
        _ => Ok((factor, 1)),
    }
}

fn parse_exponent_list(s: &str) -> std::result::Result<Vec<i64>, String> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| format!("expected `[...]`, got `{s}`"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad exponent `{t}`")))
        .collect()
}

fn parse_factor(base: &str, group: &Arc<CharacterGroup>) -> Result<DirichletCharacter> {
    let bad = |reason: String| Error::CharacterSpec {
        spec: base.to_string(),
        reason,
    };
    if base == "1" {
        return Ok(group.trivial());
    }
    if base.starts_with('[') {
        let exps = parse_exponent_list(base).map_err(bad)?;
        return group.character(&exps).map_err(|_| {
            bad(format!(
                "expected {} exponents",
                group.unit_group().generators().len()
            ))
        });
    }
    if let Some(rest) = base.strip_prefix("omega") {
        let omega = group.teichmuller()?;
        if rest.is_empty() {
            return Ok(omega);
        }
        let k: i64 = rest.parse().map_err(|_| bad(format!("bad power `{rest}`")))?;
        return Ok(omega.pow(k));
    }
    if let Some(rest) = base.strip_prefix("quad") {
        let q: u64 = rest.parse().map_err(|_| bad(format!("bad prime `{rest}`")))?;
        return group.quadratic(q);
    }
    if let Some(rest) = base.strip_prefix("chi") {
        let open = rest.find('[').ok_or_else(|| bad("expected chi<D>[...]".into()))?;
        let d: u64 = rest[..open]
            .parse()
            .map_err(|_| bad(format!("bad divisor `{}`", &rest[..open])))?;
        let n = group.modulus();
        if d < 2 || n % d != 0 || gcd(d, n / d) != 1 {
            return Err(bad(format!("{d} is not a unitary divisor of {n}")));
        }
        let local = CharacterGroup::new(d, group.ring())?;
        let exps = parse_exponent_list(&rest[open..]).map_err(bad)?;
        let chi = local.character(&exps).map_err(|_| {
            bad(format!(
                "expected {} exponents for modulus {d}",
                local.unit_group().generators().len()
            ))
        })?;
        return group.extend(&chi);
    }
    Err(bad("unknown character name".into()))
}

/// Conductor by the definition: least divisor `f` of `N` with `chi` trivial
/// on units congruent to 1 mod `f`.
pub fn conductor_by_search(chi: &DirichletCharacter) -> u64 {
    let n = chi.modulus();
    let group = chi.group().unit_group();
    divisors(n)
        .into_iter()
        .find(|&f| {
            group
                .units()
                .filter(|&a| a % f == 1 % f)
                .all(|a| chi.value_exponent(a as i64) == Some(0))
        })
        .unwrap_or(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;
    use crate::ring::make_coeff_ring;

    fn group(n: u64, p: u64) -> Arc<CharacterGroup> {
        let ring = make_coeff_ring(p, 1, euler_phi(n)).unwrap();
        CharacterGroup::new(n, &ring).unwrap()
    }

    #[test]
    fn unit_group_examples() {
        assert_eq!(unit_group(5).unwrap().generators(), &[(2, 4)]);
        let g12 = unit_group(12).unwrap();
        assert_eq!(g12.generators().iter().map(|g| g.1).collect::<Vec<_>>(), vec![2, 2]);
        assert_eq!(g12.generators(), &[(7, 2), (5, 2)]);
        let g2 = unit_group(2).unwrap();
        assert!(g2.generators().is_empty());
        assert_eq!(g2.order(), 1);
        assert_eq!(unit_group(1).unwrap_err(), Error::ModulusTooSmall(1));
        let g16 = unit_group(16).unwrap();
        assert_eq!(g16.generators(), &[(15, 2), (5, 4)]);
    }

    #[test]
    fn unit_group_logs_are_unique() {
        for n in 2..60 {
            let g = unit_group(n).unwrap();
            assert_eq!(g.order(), euler_phi(n));
            assert_eq!(g.units().count() as u64, euler_phi(n));
        }
    }

    #[test]
    fn enumeration_counts() {
        let g5 = group(5, 5);
        let chars = g5.enumerate();
        assert_eq!(chars.len(), 4);
        assert_eq!(chars.iter().filter(|c| c.is_even()).count(), 2);
        assert!(chars[0].is_trivial());
        for (i, c) in chars.iter().enumerate() {
            assert_eq!(c.index(), i);
        }
        assert_eq!(group(12, 5).enumerate().len(), 4);
    }

    #[test]
    fn ring_too_small_is_rejected() {
        let ring = make_coeff_ring(7, 1, 6).unwrap();
        assert!(matches!(
            enumerate_characters(35, &ring),
            Err(Error::RingTooSmall { .. })
        ));
    }

    #[test]
    fn conductor_examples() {
        let g12 = group(12, 5);
        assert_eq!(g12.trivial().conductor(), 1);
        let chi4 = g12.character(&[1, 0]).unwrap();
        assert_eq!(chi4.conductor(), 4);
        assert_eq!(conductor_by_search(&chi4), 4);
        let g35 = group(35, 7);
        let omega = g35.teichmuller().unwrap();
        assert_eq!(omega.conductor(), 7);
    }

    #[test]
    fn conductor_matches_search() {
        for (n, p) in [(12, 5), (35, 11), (16, 17), (45, 7), (24, 7), (20, 3)] {
            for chi in group(n, p).enumerate() {
                let f = chi.conductor();
                assert_eq!(f, conductor_by_search(&chi), "{chi:?}");
                if f % 2 == 0 {
                    assert_eq!(f % 4, 0);
                }
            }
        }
    }

    #[test]
    fn teichmuller_character_parity() {
        let ring = make_coeff_ring(7, 2, 24).unwrap();
        let omega = teichmuller_character(5, 7, &ring).unwrap();
        assert_eq!(omega.value(-1), ring.int(-1));
        assert_eq!(omega.pow(2).value(-1), ring.one());
        assert!(!omega.is_even());
        assert!(omega.pow(2).is_even());
        assert_eq!(omega.conductor(), 7);

        let ring1 = make_coeff_ring(7, 1, 6).unwrap();
        let omega7 = teichmuller_character(1, 7, &ring1).unwrap();
        assert_eq!(omega7.value(2), ring1.int(2));
    }

    #[test]
    fn restriction_examples() {
        let g35 = group(35, 7);
        let trivial = restrict_to_part(&g35.trivial(), 5).unwrap();
        assert!(trivial.is_trivial());
        let omega = g35.teichmuller().unwrap();
        let omega7 = restrict_to_part(&omega, 7).unwrap();
        assert_eq!(omega7.modulus(), 7);
        assert_eq!(omega7.conductor(), 7);
        for a in 1..7 {
            assert_eq!(omega7.value(a), omega.value(crt(a as u64, 7, 1, 5) as i64));
        }
        let chi2 = g35.quadratic(5).unwrap();
        let theta = omega.pow(2).mul(&chi2);
        let part = restrict_to_part(&theta, 5).unwrap();
        assert_eq!(g35.extend(&part).unwrap(), chi2);
        assert!(matches!(
            restrict_to_part(&theta, 1),
            Err(Error::NotUnitaryDivisor { .. })
        ));
        let g12 = group(12, 5);
        assert!(matches!(
            restrict_to_part(&g12.trivial(), 2),
            Err(Error::NotUnitaryDivisor { .. })
        ));
    }

    #[test]
    fn primitive_values() {
        let g35 = group(35, 7);
        let chi2 = g35.quadratic(5).unwrap();
        let ring = chi2.ring().clone();
        // chi2 has conductor 5, so its primitive value at 7 is (7/5) = -1
        assert_eq!(chi2.value(7), ring.zero());
        assert_eq!(chi2.primitive_value(7), ring.int(-1));
        assert_eq!(chi2.primitive_value(5), ring.zero());
        let omega = g35.teichmuller().unwrap();
        assert_eq!(omega.primitive_value(5), restrict_to_part(&omega, 7).unwrap().value(5));
        assert_eq!(g35.trivial().primitive_value(35), ring.one());
    }

    #[test]
    fn parse_specifiers() {
        let ring = make_coeff_ring(7, 1, 24).unwrap();
        let g35 = CharacterGroup::new(35, &ring).unwrap();
        let omega = g35.teichmuller().unwrap();
        let chi2 = g35.quadratic(5).unwrap();
        let theta = parse_character("theta=omega2*quad5", &g35).unwrap();
        assert_eq!(theta, omega.pow(2).mul(&chi2));
        assert_eq!(parse_character("omega^2*quad5", &g35).unwrap(), theta);
        assert_eq!(parse_character(&theta.label(), &g35).unwrap(), theta);
        assert_eq!(parse_character("omega^-2", &g35).unwrap(), omega.pow(-2));
        assert!(parse_character("quad5*chi5[2]", &g35).unwrap().is_trivial());
        assert!(parse_character("", &g35).is_err());
        assert!(parse_character("[1]", &g35).is_err());
        assert!(parse_character("psi", &g35).is_err());
        assert!(parse_character("quad3", &g35).is_err());
        assert!(parse_character("chi5[1,1]", &g35).is_err());
    }

    #[test]
    fn orthogonality() {
        let ring = make_coeff_ring(7, 2, 24).unwrap();
        let g = CharacterGroup::new(35, &ring).unwrap();
        for chi in g.enumerate() {
            let sum = g
                .unit_group()
                .units()
                .fold(ring.zero(), |acc, a| ring.add(acc, chi.value(a as i64)));
            let expected = if chi.is_trivial() { ring.int(24) } else { ring.zero() };
            assert_eq!(sum, expected);
        }
    }
}
