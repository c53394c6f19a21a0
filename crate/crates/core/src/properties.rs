//! Seeded property suites over the algebraic layers, with coordinate-wise
//! shrinking of failing cases.

use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{euler_phi, gcd, lcm, valuation};
use crate::character::{conductor_by_search, CharacterGroup, DirichletCharacter};
use crate::eigen::{bezout_units, cd_representatives, coprime_divisor_pairs, CdRange, EigenContext};
use crate::hecke::{apply_quotient, QuotientSpec};
use crate::linalg::{add_rows, howell_form, is_zero_row, scale_row, sub_rows, Row};
use crate::ring::{integers_mod, make_coeff_ring, CoeffRing, RingElem};
use crate::symbols::{build_presentation, Variant};

/// Range of each raw case coordinate; checks reduce coordinates modulo
/// the size of whatever they index.
const COORD_RANGE: u64 = 1 << 16;

type Check = Box<dyn Fn(&[u64]) -> Outcome + Send + Sync>;

/// Result of one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The hypotheses do not hold for this case.
    Vacuous,
    Fail(String),
}

pub struct Property {
    pub name: &'static str,
    arity: usize,
    check: Check,
}

impl Property {
    pub fn new(name: &'static str, arity: usize, check: impl Fn(&[u64]) -> Outcome + Send + Sync + 'static) -> Property {
        Property {
            name,
            arity,
            check: Box::new(check),
        }
    }

    pub fn check(&self, coords: &[u64]) -> Outcome {
        (self.check)(coords)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub coords: Vec<u64>,
    pub minimized: Vec<u64>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub drawn: usize,
    /// Drawn cases whose hypotheses held.
    pub exercised: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub cases: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl PropertyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Shrink each coordinate toward zero while the case keeps failing.
pub fn shrink(property: &Property, coords: &[u64]) -> (Vec<u64>, String) {
    let mut best = coords.to_vec();
    let mut message = match property.check(&best) {
        Outcome::Fail(m) => m,
        _ => return (best, String::new()),
    };
    loop {
        let mut changed = false;
        for i in 0..best.len() {
            let x = best[i];
            let mut candidates = vec![0, x / 2, x.saturating_sub(1)];
            candidates.dedup();
            for cand in candidates.into_iter().filter(|&c| c < x) {
                let mut trial = best.clone();
                trial[i] = cand;
                if let Outcome::Fail(m) = property.check(&trial) {
                    best = trial;
                    message = m;
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            return (best, message);
        }
    }
}

/// Cap on drawn cases, as a multiple of the requested number of exercised cases.
const MAX_DRAWS_PER_CASE: usize = 20;

/// Draw cases until `cases` of them satisfy the hypotheses (or the draw cap
/// is hit), stopping at the first failure.
pub fn run_property(property: &Property, seed: u64, stream: u64, cases: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut exercised = 0;
    let mut drawn = 0;
    while exercised < cases && drawn < cases * MAX_DRAWS_PER_CASE {
        let coords: Vec<u64> = (0..property.arity).map(|_| rng.gen_range(0..COORD_RANGE)).collect();
        drawn += 1;
        match property.check(&coords) {
            Outcome::Pass => exercised += 1,
            Outcome::Vacuous => {}
            Outcome::Fail(_) => {
                let (minimized, message) = shrink(property, &coords);
                return SuiteReport {
                    name: property.name.to_string(),
                    drawn,
                    exercised,
                    passed: false,
                    failure: Some(Failure {
                        case: drawn - 1,
                        coords,
                        minimized,
                        message,
                    }),
                };
            }
        }
    }
    SuiteReport {
        name: property.name.to_string(),
        drawn,
        exercised,
        passed: exercised == cases,
        failure: None,
    }
}

/// Run every suite on `cases` exercised cases each; the report depends
/// only on `seed` and `cases`.
pub fn run_properties(seed: u64, cases: usize) -> PropertyReport {
    let suites = all_properties();
    let reports: Vec<SuiteReport> = suites
        .par_iter()
        .enumerate()
        .map(|(i, prop)| run_property(prop, seed, i as u64, cases))
        .collect();
    PropertyReport {
        seed,
        cases,
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    }
}

pub fn suite_names() -> Vec<&'static str> {
    all_properties().iter().map(|p| p.name).collect()
}

pub fn property(name: &str) -> Option<Property> {
    all_properties().into_iter().find(|p| p.name == name)
}

pub fn all_properties() -> Vec<Property> {
    let eigen = Arc::new(vec![
        EigenFixture::new(5, 5),
        EigenFixture::new(5, 12),
        EigenFixture::new(5, 15),
        EigenFixture::new(7, 35),
    ]);
    let u_fixtures = Arc::new(vec![
        UFixture::new(7, 35, 7),
        UFixture::new(7, 35, 5),
        UFixture::new(5, 45, 3),
        UFixture::new(3, 12, 2),
    ]);
    vec![
        multconst(eigen.clone()),
        eigrestrict(eigen.clone()),
        antisymmetry(eigen.clone()),
        relatesym(eigen.clone()),
        gensumeq(eigen.clone()),
        zero_terms(eigen),
        u_operator(u_fixtures),
        howell_oracle(),
        ring_axioms(),
        character_laws(),
    ]
}

fn pick<T>(items: &[T], coord: u64) -> &T {
    &items[(coord % items.len() as u64) as usize]
}

fn fail_unless(ok: bool, message: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(message())
    }
}

/// Symbol spaces at one level in both variants, with the contexts of every
/// even character.
struct EigenFixture {
    p: u64,
    n: u64,
    ring: CoeffRing,
    characters: Vec<DirichletCharacter>,
    /// Indexed by variant (full, cusp0), then by even character.
    contexts: [Vec<EigenContext>; 2],
    pairs: Vec<(u64, u64)>,
    units: Vec<u64>,
}

impl EigenFixture {
    fn new(p: u64, n: u64) -> EigenFixture {
        let ring = make_coeff_ring(p, 1, euler_phi(n)).expect("fixture ring");
        let group = CharacterGroup::new(n, &ring).expect("fixture characters");
        let characters = group.enumerate();
        let contexts = [Variant::Full, Variant::CuspZero].map(|variant| {
            let space = Arc::new(build_presentation(n, variant, &ring).expect("fixture space"));
            characters
                .iter()
                .filter(|c| c.is_even())
                .map(|theta| EigenContext::new(space.clone(), theta.clone()).expect("fixture context"))
                .collect()
        });
        EigenFixture {
            p,
            n,
            units: group.unit_group().units().collect(),
            ring,
            characters,
            contexts,
            pairs: coprime_divisor_pairs(n),
        }
    }

    fn context(&self, variant: u64, theta: u64) -> &EigenContext {
        pick(&self.contexts[(variant % 2) as usize], theta)
    }

    /// Pairs `(g, h)` whose eigensymbols are built from generators.
    fn pairs_for(&self, ctx: &EigenContext) -> Vec<(u64, u64)> {
        self.pairs
            .iter()
            .copied()
            .filter(|&(g, h)| ctx.space().variant() == Variant::Full || (g != self.n && h != self.n))
            .collect()
    }

    fn describe(&self, ctx: &EigenContext) -> String {
        format!(
            "p={} N={} {} theta={}",
            self.p,
            self.n,
            ctx.space().variant(),
            ctx.theta().label()
        )
    }
}

fn alpha(ctx: &EigenContext, chi: &DirichletCharacter, g: u64, h: u64) -> Row {
    ctx.eigensymbol(chi, g, h).expect("admissible eigensymbol")
}

fn weighted_sum(ring: &CoeffRing, dim: usize, terms: impl IntoIterator<Item = (RingElem, Row)>) -> Row {
    terms
        .into_iter()
        .fold(vec![ring.zero(); dim], |acc, (c, row)| add_rows(ring, &acc, &scale_row(ring, c, &row)))
}

fn multconst(fixtures: Arc<Vec<EigenFixture>>) -> Property {
    Property::new("multconst", 6, move |c| {
        let fx = pick(&fixtures, c[0]);
        let ctx = fx.context(c[1], c[2]);
        let ring = &fx.ring;
        let (u, v) = (*pick(&fx.units, c[3]), *pick(&fx.units, c[4]));
        let (g, h) = *pick(&fx.pairs_for(ctx), c[5]);
        let lhs = ctx.project_symbol((g * u) as i64, (h * v) as i64).expect("generator");
        let rhs = weighted_sum(
            ring,
            ctx.rank(),
            fx.characters.iter().map(|chi| {
                let psi = ctx.psi(chi);
                (ring.mul(chi.value(u as i64), psi.value(v as i64)), alpha(ctx, chi, g, h))
            }),
        );
        fail_unless(lhs == rhs, || format!("{} u={u} v={v} g={g} h={h}", fx.describe(ctx)))
    })
}

fn eigrestrict(fixtures: Arc<Vec<EigenFixture>>) -> Property {
    Property::new("eigrestrict", 5, move |c| {
        let fx = pick(&fixtures, c[0]);
        let ctx = fx.context(c[1], c[2]);
        let chi = pick(&fx.characters, c[3]);
        let psi = ctx.psi(chi);
        let (g, h) = *pick(&fx.pairs, c[4]);
        if (fx.n / g) % chi.conductor() == 0 && (fx.n / h) % psi.conductor() == 0 {
            return Outcome::Vacuous;
        }
        let a = alpha(ctx, chi, g, h);
        fail_unless(is_zero_row(&fx.ring, &a), || {
            format!("{} chi={} g={g} h={h}", fx.describe(ctx), chi.label())
        })
    })
}

fn antisymmetry(fixtures: Arc<Vec<EigenFixture>>) -> Property {
    Property::new("antisymmetry", 5, move |c| {
        let fx = pick(&fixtures, c[0]);
        let ctx = fx.context(c[1], c[2]);
        let chi = pick(&fx.characters, c[3]);
        let psi = ctx.psi(chi);
        let (g, h) = *pick(&fx.pairs, c[4]);
        let ring = &fx.ring;
        let lhs = alpha(ctx, chi, g, h);
        let swapped = scale_row(ring, chi.value(-1), &alpha(ctx, &psi, h, g));
        fail_unless(ctx.is_zero_in_h(&add_rows(ring, &lhs, &swapped)), || {
            format!("{} chi={} g={g} h={h}", fx.describe(ctx), chi.label())
        })
    })
}

fn relatesym(fixtures: Arc<Vec<EigenFixture>>) -> Property {
    Property::new("relatesym", 7, move |c| {
        let fx = pick(&fixtures, c[0]);
        let ctx = fx.context(c[1], c[2]);
        let chi = pick(&fx.characters, c[3]);
        let psi = ctx.psi(chi);
        let (g, h) = *pick(&fx.pairs, c[4]);
        let reps = cd_representatives(fx.n, fx.p, CdRange::Bound(6 * fx.n + 60));
        let (cc, d) = (*pick(&reps, c[5]), *pick(&reps, c[6]));
        let ring = &fx.ring;
        let cd = ctx.cd_eigensymbol(cc, d, chi, g, h).expect("admissible (c,d)");
        let left = ring.sub(ring.int((cc * cc) as i64), chi.value(cc as i64));
        let right = ring.sub(ring.int((d * d) as i64), psi.value(d as i64));
        let expected = scale_row(ring, ring.mul(left, right), &alpha(ctx, chi, g, h));
        fail_unless(cd == expected, || {
            format!("{} chi={} g={g} h={h} c={cc} d={d}", fx.describe(ctx), chi.label())
        })
    })
}

fn gensumeq(fixtures: Arc<Vec<EigenFixture>>) -> Property {
    Property::new("gensumeq", 4, move |c| {
        let fx = pick(&fixtures, c[0]);
        let ctx = fx.context(c[1], c[2]);
        let (g, h) = *pick(&fx.pairs_for(ctx), c[3]);
        let (a, b, delta) = bezout_units(fx.n, g, h).expect("bezout units");
        let ring = &fx.ring;
        let dim = ctx.rank();
        let (a, b) = (a as i64, b as i64);
        let lhs = weighted_sum(
            ring,
            dim,
            fx.characters
                .iter()
                .map(|chi| (ring.mul(chi.value(a), ctx.psi(chi).value(b)), alpha(ctx, chi, g, h))),
        );
        let first = weighted_sum(ring, dim, fx.characters.iter().map(|chi| (chi.value(a), alpha(ctx, chi, g, delta))));
        let second = weighted_sum(
            ring,
            dim,
            fx.characters
                .iter()
                .map(|chi| (ctx.psi(chi).value(b), alpha(ctx, chi, delta, h))),
        );
        let diff = sub_rows(ring, &lhs, &add_rows(ring, &first, &second));
        fail_unless(ctx.is_zero_in_h(&diff), || {
            format!("{} g={g} h={h} a={a} b={b} delta={delta}", fx.describe(ctx))
        })
    })
}

fn zero_terms(fixtures: Arc<Vec<EigenFixture>>) -> Property {
    Property::new("zero_terms", 4, move |c| {
        let levels: Vec<&EigenFixture> = fixtures.iter().filter(|f| f.p >= 5 && f.n % f.p == 0).collect();
        let fx = *pick(&levels, c[0]);
        let ctx = fx.context(c[1], c[2]);
        let (p, n) = (fx.p, fx.n);
        let m = n / p;
        let omega = ctx.group().teichmuller().expect("p divides N");
        let omega2 = omega.pow(2);
        let f = ctx.theta().mul(&omega.pow(-2)).conductor();
        if f % m != 0 {
            return Outcome::Vacuous;
        }
        let (g, h) = *pick(&fx.pairs, c[3]);
        let may_survive = g % p != 0 && (h == 1 || (f == m && h == p));
        if may_survive {
            return Outcome::Vacuous;
        }
        let beta = alpha(ctx, &omega2, g, h);
        fail_unless(is_zero_row(&fx.ring, &beta), || {
            format!("{} f={f} g={g} h={h}", fx.describe(ctx))
        })
    })
}

/// Trivial-`U_ℓ` quotients at one level.
struct UFixture {
    n: u64,
    l: u64,
    /// `ℓ^s` exactly divides `N`.
    s: u32,
    characters: Vec<DirichletCharacter>,
    contexts: [Vec<EigenContext>; 2],
    /// Coprime divisor pairs prime to `ℓ`.
    pairs: Vec<(u64, u64)>,
}

impl UFixture {
    fn new(p: u64, n: u64, l: u64) -> UFixture {
        let ring = make_coeff_ring(p, 1, euler_phi(n)).expect("fixture ring");
        let group = CharacterGroup::new(n, &ring).expect("fixture characters");
        let characters = group.enumerate();
        let spec = QuotientSpec {
            trivial_u: vec![l],
            t2: None,
        };
        let contexts = [Variant::Full, Variant::CuspZero].map(|variant| {
            let space = Arc::new(build_presentation(n, variant, &ring).expect("fixture space"));
            characters
                .iter()
                .filter(|c| c.is_even())
                .map(|theta| {
                    let ctx = EigenContext::new(space.clone(), theta.clone()).expect("fixture context");
                    apply_quotient(&ctx, &spec, false).expect("fixture quotient")
                })
                .collect()
        });
        UFixture {
            n,
            l,
            s: valuation(n, l),
            characters,
            contexts,
            pairs: coprime_divisor_pairs(n)
                .into_iter()
                .filter(|&(g, h)| g % l != 0 && h % l != 0)
                .collect(),
        }
    }
}

fn u_operator(fixtures: Arc<Vec<UFixture>>) -> Property {
    Property::new("u_operator", 6, move |c| {
        let fx = pick(&fixtures, c[0]);
        let ctx = pick(&fx.contexts[(c[1] % 2) as usize], c[2]);
        let chi = pick(&fx.characters, c[3]);
        let (g, h) = *pick(&fx.pairs, c[4]);
        let t = 1 + (c[5] % fx.s as u64) as u32;
        let (l, n) = (fx.l, fx.n);
        if (n / l.pow(t)) % chi.conductor() != 0 {
            return Outcome::Vacuous;
        }
        let ring = ctx.ring();
        let upper = alpha(ctx, chi, l.pow(t) * g, h);
        let lower = alpha(ctx, chi, l.pow(t - 1) * g, h);
        let diff = if t < fx.s {
            sub_rows(ring, &upper, &scale_row(ring, ring.int(l as i64), &lower))
        } else {
            if ctx.space().variant() == Variant::CuspZero && l.pow(t) * g == n {
                return Outcome::Vacuous;
            }
            let factor = ring.sub(ring.one(), chi.inv().primitive_value(l as i64));
            sub_rows(
                ring,
                &scale_row(ring, factor, &upper),
                &scale_row(ring, ring.int(l as i64 - 1), &lower),
            )
        };
        fail_unless(ctx.is_zero_in_h(&diff), || {
            format!(
                "N={n} l={l} {} theta={} chi={} g={g} h={h} t={t}",
                ctx.space().variant(),
                ctx.theta().label(),
                chi.label()
            )
        })
    })
}

/// All `Z/q`-combinations of `rows`, as residue vectors.
fn enumerate_span(rows: &[Vec<u64>], dim: usize, q: u64) -> HashSet<Vec<u64>> {
    let mut span: HashSet<Vec<u64>> = HashSet::from([vec![0; dim]]);
    for row in rows {
        let mut next = HashSet::with_capacity(span.len() * q as usize);
        for v in &span {
            for c in 0..q {
                next.insert((0..dim).map(|i| (v[i] + c * row[i]) % q).collect());
            }
        }
        span = next;
    }
    span
}

fn howell_oracle() -> Property {
    const MODULI: [(u64, u32); 4] = [(2, 2), (2, 3), (3, 2), (5, 2)];
    Property::new("howell_oracle", 20, move |c| {
        let (p, k) = *pick(&MODULI, c[0]);
        let q = p.pow(k);
        let nrows = 1 + (c[1] % 4) as usize;
        let dim = 1 + (c[2] % 4) as usize;
        let ints: Vec<Vec<u64>> = (0..nrows)
            .map(|r| (0..dim).map(|j| c[4 + 4 * r + j] % q).collect())
            .collect();
        let ring = integers_mod(p, k).expect("Z/q");
        let rows: Vec<Row> = ints
            .iter()
            .map(|r| r.iter().map(|&x| ring.int(x as i64)).collect())
            .collect();
        let howell = howell_form(&rows, dim, &ring);
        let span = enumerate_span(&ints, dim, q);
        let describe = || format!("Z/{q} rows={ints:?}");
        if span.len() as u64 != p.pow(howell.length()) {
            return Outcome::Fail(format!("{}: |span|={} length={}", describe(), span.len(), howell.length()));
        }
        let as_ints = |row: &Row| -> Vec<u64> { row.iter().map(|x| ring.coeffs(x)[0] as u64).collect() };
        if !howell.rows().iter().all(|r| span.contains(&as_ints(r))) {
            return Outcome::Fail(format!("{}: basis row outside span", describe()));
        }
        if !rows.iter().all(|r| howell.contains(r)) {
            return Outcome::Fail(format!("{}: generator not contained", describe()));
        }
        let mut shuffled = rows.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(c[3]);
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        fail_unless(howell_form(&shuffled, dim, &ring).rows() == howell.rows(), || {
            format!("{}: canonical form changed under shuffle", describe())
        })
    })
}

fn ring_axioms() -> Property {
    // GR(9, 2), GR(25, 2), GR(49, 3)
    const RINGS: [(u64, u32, u64); 3] = [(3, 2, 8), (5, 2, 12), (7, 2, 9)];
    Property::new("ring_axioms", 13, move |c| {
        let &(p, k, e) = pick(&RINGS, c[0]);
        let ring = make_coeff_ring(p, k, e).expect("fixture ring");
        let q = ring.characteristic();
        let elem = |off: usize| -> RingElem {
            let coeffs: Vec<u64> = (0..ring.m()).map(|i| c[off + i] % q).collect();
            ring.from_coeffs(&coeffs)
        };
        let (a, b, d) = (elem(1), elem(5), elem(9));
        let describe = || format!("GR({q},{}) a={} b={} c={}", ring.m(), ring.format(a), ring.format(b), ring.format(d));
        if ring.mul(ring.mul(a, b), d) != ring.mul(a, ring.mul(b, d)) {
            return Outcome::Fail(format!("{}: associativity", describe()));
        }
        if ring.mul(a, ring.add(b, d)) != ring.add(ring.mul(a, b), ring.mul(a, d)) {
            return Outcome::Fail(format!("{}: distributivity", describe()));
        }
        if ring.mul(a, b) != ring.mul(b, a) {
            return Outcome::Fail(format!("{}: commutativity", describe()));
        }
        let expected = (ring.valuation(a) + ring.valuation(b)).min(k);
        if ring.valuation(ring.mul(a, b)) != expected {
            return Outcome::Fail(format!("{}: valuation", describe()));
        }
        match ring.inv(a) {
            Some(inv) => fail_unless(ring.mul(a, inv) == ring.one(), || format!("{}: inverse", describe())),
            None => fail_unless(!ring.is_unit(a), || format!("{}: unit without inverse", describe())),
        }
    })
}

fn character_laws() -> Property {
    const LEVELS: [(u64, u64); 5] = [(5, 3), (12, 5), (16, 3), (35, 11), (45, 7)];
    let groups: Vec<Arc<CharacterGroup>> = LEVELS
        .iter()
        .map(|&(n, p)| {
            let ring = make_coeff_ring(p, 1, euler_phi(n)).expect("fixture ring");
            CharacterGroup::new(n, &ring).expect("fixture characters")
        })
        .collect();
    Property::new("character_laws", 5, move |c| {
        let group = pick(&groups, c[0]);
        let chars = group.enumerate();
        let (chi, psi) = (pick(&chars, c[1]), pick(&chars, c[2]));
        let n = group.modulus();
        let ring = group.ring();
        let (a, b) = ((c[3] % n) as i64, (c[4] % n) as i64);
        let describe = || format!("N={n} chi={} psi={} a={a} b={b}", chi.label(), psi.label());
        let units = gcd(a as u64, n) == 1 && gcd(b as u64, n) == 1;
        if units && chi.value(a * b) != ring.mul(chi.value(a), chi.value(b)) {
            return Outcome::Fail(format!("{}: multiplicativity", describe()));
        }
        if chi.mul(psi).value(a) != ring.mul(chi.value(a), psi.value(a)) {
            return Outcome::Fail(format!("{}: product", describe()));
        }
        if !chi.pow(chi.order() as i64).is_trivial() || chi.mul(&chi.inv()) != group.trivial() {
            return Outcome::Fail(format!("{}: order", describe()));
        }
        let f = chi.conductor();
        if f != conductor_by_search(chi) || lcm(f, psi.conductor()) % chi.mul(psi).conductor() != 0 {
            return Outcome::Fail(format!("{}: conductor", describe()));
        }
        Outcome::Pass
    })
}
