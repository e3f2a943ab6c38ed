//! Monomials `x^a y^b z^c` with `x > y > z` under degree-reverse-lexicographic
//! order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    pub fn exponents(&self) -> [u32; 3] {
        [self.x, self.y, self.z]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.x + other.x, self.y + other.y, self.z + other.z)
    }
}

/// Degrevlex with `x > y > z`: higher degree wins; on a tie the monomial with
/// the smaller exponent in the last variable where they differ is larger.
pub fn degrevlex_compare(u: &Monomial, v: &Monomial) -> Ordering {
    u.degree().cmp(&v.degree()).then_with(|| {
        for (a, b) in u.exponents().iter().zip(v.exponents()).rev() {
            if *a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    })
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex_compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x^a*y^b*z^c`, zero exponents omitted, exponent 1 written bare, `1` for the unit.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [("x", self.x), ("y", self.y), ("z", self.z)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// All monomials of degree `d` in the first `nvars` variables (2 or 3),
/// largest first.
pub fn monomials_of_degree(d: u32, nvars: usize) -> Vec<Monomial> {
    assert!(nvars == 2 || nvars == 3, "nvars must be 2 or 3");
    let max_z = if nvars == 3 { d } else { 0 };
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for z in 0..=max_z {
        for y in 0..=d - z {
            out.push(Monomial::new(d - z - y, y, z));
        }
    }
    out
}

pub type MonomialSet = BTreeSet<Monomial>;

pub fn ideal_contains(gens: &MonomialSet, m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Whether the ideal generated by `gens` is closed under `y → x` and `z → y`.
/// Single moves on generators suffice.
pub fn is_strongly_stable(gens: &MonomialSet) -> bool {
    gens.iter().all(|g| {
        let y_to_x = g.y == 0 || ideal_contains(gens, &Monomial::new(g.x + 1, g.y - 1, g.z));
        let z_to_y = g.z == 0 || ideal_contains(gens, &Monomial::new(g.x, g.y + 1, g.z - 1));
        y_to_x && z_to_y
    })
}

/// Elements of `gens` not divisible by another element of `gens`.
pub fn minimal_generators(gens: &MonomialSet) -> MonomialSet {
    // in ascending order every proper divisor is visited first
    let mut kept: Vec<Monomial> = Vec::new();
    for m in gens {
        if !kept.iter().any(|k| k.divides(m)) {
            kept.push(*m);
        }
    }
    kept.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const fn m(x: u32, y: u32, z: u32) -> Monomial {
        Monomial::new(x, y, z)
    }

    fn set(v: &[Monomial]) -> MonomialSet {
        v.iter().copied().collect()
    }

    #[test]
    fn degrevlex_examples() {
        assert_eq!(degrevlex_compare(&m(2, 0, 0), &m(1, 1, 0)), Ordering::Greater);
        assert_eq!(degrevlex_compare(&m(1, 0, 1), &m(0, 2, 0)), Ordering::Less);
        assert_eq!(degrevlex_compare(&m(3, 0, 0), &m(0, 2, 0)), Ordering::Greater);
        assert_eq!(degrevlex_compare(&m(1, 1, 1), &m(1, 1, 1)), Ordering::Equal);
    }

    #[test]
    fn monomials_of_degree_examples() {
        assert_eq!(monomials_of_degree(0, 3), vec![Monomial::ONE]);
        let d2 = monomials_of_degree(2, 3);
        assert_eq!(d2.len(), 6);
        assert_eq!(d2[0], m(2, 0, 0));
        assert_eq!(d2[5], m(0, 0, 2));
        assert_eq!(monomials_of_degree(3, 2), vec![m(3, 0, 0), m(2, 1, 0), m(1, 2, 0), m(0, 3, 0)]);
    }

    #[test]
    fn strong_stability_examples() {
        assert!(is_strongly_stable(&set(&[m(2, 0, 0), m(1, 1, 0), m(0, 3, 0)])));
        assert!(!is_strongly_stable(&set(&[m(0, 2, 0)])));
        assert!(is_strongly_stable(&set(&[m(1, 0, 0)])));
        // z -> y move missing
        assert!(!is_strongly_stable(&set(&[m(1, 0, 0), m(0, 0, 1)])));
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(minimal_generators(&set(&[m(2, 0, 0), m(3, 0, 0), m(1, 1, 0)])), set(&[m(2, 0, 0), m(1, 1, 0)]));
        let antichain = set(&[m(0, 5, 0), m(1, 4, 0), m(2, 2, 0)]);
        assert_eq!(minimal_generators(&antichain), antichain);
        assert!(minimal_generators(&MonomialSet::new()).is_empty());
    }

    #[test]
    fn display_form() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        assert_eq!(m(2, 1, 0).to_string(), "x^2*y");
        assert_eq!(m(0, 0, 3).to_string(), "z^3");
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        (0u32..5, 0u32..5, 0u32..5).prop_map(|(a, b, c)| m(a, b, c))
    }

    proptest! {
        #[test]
        fn degrevlex_is_a_total_order(u in arb_monomial(), v in arb_monomial(), w in arb_monomial()) {
            prop_assert_eq!(degrevlex_compare(&u, &v), degrevlex_compare(&v, &u).reverse());
            prop_assert_eq!(degrevlex_compare(&u, &v) == Ordering::Equal, u == v);
            if u <= v && v <= w {
                prop_assert!(u <= w);
            }
        }

        #[test]
        fn degree_lists_strictly_decrease(d in 0u32..12, three in any::<bool>()) {
            let nvars = if three { 3 } else { 2 };
            let list = monomials_of_degree(d, nvars);
            let expected = if three { (d + 1) * (d + 2) / 2 } else { d + 1 };
            prop_assert_eq!(list.len() as u32, expected);
            prop_assert!(list.windows(2).all(|w| w[0] > w[1]));
        }

        #[test]
        fn minimal_generators_idempotent(gens in proptest::collection::btree_set(arb_monomial(), 0..10)) {
            let once = minimal_generators(&gens);
            prop_assert_eq!(minimal_generators(&once), once.clone());
            for g in &gens {
                prop_assert!(ideal_contains(&once, g));
            }
        }
    }
}
