use proptest::prelude::*;

use modsym::character::{conductor_by_search, CharacterGroup};
use modsym::linalg::{elementary_divisors, howell_form, Row, Submodule};
use modsym::{integers_mod, make_coeff_ring, CoeffRing, RingElem};

fn gr25() -> CoeffRing {
    make_coeff_ring(5, 2, 24).unwrap()
}

fn elem(ring: &CoeffRing, coeffs: &[u64]) -> RingElem {
    ring.from_coeffs(coeffs)
}

fn coeffs() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..25, 2)
}

fn matrix(rows: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0i64..8, dim), 0..=rows)
}

fn to_rows(ring: &CoeffRing, m: &[Vec<i64>]) -> Vec<Row> {
    m.iter().map(|r| r.iter().map(|&x| ring.int(x)).collect()).collect()
}

proptest! {
    #[test]
    fn galois_ring_is_a_commutative_ring(a in coeffs(), b in coeffs(), c in coeffs()) {
        let r = gr25();
        let (a, b, c) = (elem(&r, &a), elem(&r, &b), elem(&r, &c));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.sub(r.add(a, b), b), a);
    }

    #[test]
    fn units_are_exactly_the_invertible_elements(a in coeffs()) {
        let r = gr25();
        let a = elem(&r, &a);
        match r.inv(a) {
            Some(b) => {
                prop_assert!(r.is_unit(a));
                prop_assert_eq!(r.mul(a, b), r.one());
            }
            None => prop_assert!(r.valuation(a) > 0),
        }
    }

    #[test]
    fn teichmuller_is_multiplicative(a in 1i64..25, b in 1i64..25) {
        let r = gr25();
        prop_assume!(a % 5 != 0 && b % 5 != 0);
        let ta = r.teichmuller(a).unwrap();
        let tb = r.teichmuller(b).unwrap();
        prop_assert_eq!(r.mul(ta, tb), r.teichmuller(a * b).unwrap());
        prop_assert_eq!(r.pow(ta, 4), r.one());
    }

    #[test]
    fn howell_form_is_canonical(m in matrix(5, 3), seed in any::<u64>()) {
        let r = integers_mod(2, 3).unwrap();
        let rows = to_rows(&r, &m);
        let h = howell_form(&rows, 3, &r);
        let mut shuffled = rows.clone();
        let n = shuffled.len();
        for i in 0..n {
            shuffled.swap(i, (seed as usize).wrapping_add(i * 7) % n);
        }
        prop_assert_eq!(&howell_form(&shuffled, 3, &r), &h);
        prop_assert_eq!(&howell_form(h.rows(), 3, &r), &h);
        for row in &rows {
            prop_assert!(h.contains(row));
        }
    }

    #[test]
    fn membership_witness_recombines(m in matrix(4, 3), v in prop::collection::vec(0i64..9, 3)) {
        let r = integers_mod(3, 2).unwrap();
        let h = howell_form(&to_rows(&r, &m), 3, &r);
        let v: Row = v.iter().map(|&x| r.int(x)).collect();
        if let Some(coeffs) = h.membership(&v).unwrap() {
            prop_assert_eq!(h.combine(&coeffs), v);
        } else {
            prop_assert!(!h.contains(&v));
        }
    }

    #[test]
    fn divisors_account_for_length(m in matrix(4, 3), extra in matrix(2, 3)) {
        let r = integers_mod(5, 2).unwrap();
        let a = howell_form(&to_rows(&r, &m), 3, &r);
        let b = a.with_rows(&to_rows(&r, &extra));
        let divs = elementary_divisors(&a, &b).unwrap();
        let total: u32 = divs.iter().map(|d| d.exponent).sum();
        prop_assert_eq!(total, b.length() - a.length());
        prop_assert!(elementary_divisors(&b, &b).unwrap().is_empty());
        prop_assert_eq!(elementary_divisors(&Submodule::zero(&r, 3), &Submodule::full(&r, 3)).unwrap().len(), 3);
    }

    #[test]
    fn characters_are_multiplicative(i in 0usize..64, j in 0usize..64, a in 1i64..240, b in 1i64..240) {
        let ring = make_coeff_ring(7, 1, 48).unwrap();
        let group = CharacterGroup::new(35, &ring).unwrap();
        let all = group.enumerate();
        let (chi, psi) = (&all[i % all.len()], &all[j % all.len()]);
        prop_assume!(group.unit_group().is_unit(a) && group.unit_group().is_unit(b));
        prop_assert_eq!(chi.value(a * b), ring.mul(chi.value(a), chi.value(b)));
        prop_assert_eq!(chi.mul(psi).value(a), ring.mul(chi.value(a), psi.value(a)));
        prop_assert_eq!(chi.conductor(), conductor_by_search(chi));
    }
}
