use hyperpoly::assoc::polynomials_up_to;
use hyperpoly::carriers::{rat, Element, Hyperfield};
use hyperpoly::divide::{is_root, mult_at, quotients};
use hyperpoly::polyalg::{parse_poly, Polynomial};
use proptest::prelude::*;

fn finite_carriers() -> Vec<Hyperfield> {
    vec![
        Hyperfield::krasner(),
        Hyperfield::signs(),
        Hyperfield::weak_signs(),
        Hyperfield::by_name("W(Z3,0)").unwrap(),
        Hyperfield::prime(2).unwrap(),
        Hyperfield::prime(3).unwrap(),
    ]
}

/// `0 ∈ p(a)` exactly when some `q` has `p ∈ (T - a) ⊡ q`; multiplicity is
/// positive exactly at roots and never exceeds the degree.
#[test]
fn root_definitions_and_multiplicity_bounds_agree() {
    for hf in finite_carriers() {
        for p in polynomials_up_to(&hf, 3, false).unwrap().iter().filter(|p| p.degree() >= 1) {
            for a in hf.elements().unwrap() {
                let zero_in_value = p.eval(&a).unwrap().contains(&hf.zero());
                let divisible = !quotients(p, &a).unwrap().is_empty();
                assert_eq!(zero_in_value, divisible, "{}: {p} at {}", hf.name(), hf.format_element(&a));
                assert_eq!(is_root(p, &a).unwrap(), zero_in_value);
                let m = mult_at(p, &a).unwrap();
                assert_eq!(m >= 1, zero_in_value, "{}: mult of {p} at {}", hf.name(), hf.format_element(&a));
                assert!(m <= p.degree());
            }
        }
    }
}

/// Classical multiplicity of `a` by repeated synthetic division mod `p`.
fn classical_multiplicity(p: u64, coeffs: &[u64], a: u64) -> usize {
    let mut c = coeffs.to_vec();
    let mut m = 0;
    while c.len() > 1 {
        let n = c.len() - 1;
        let mut q = vec![0u64; n];
        let mut carry = 0u64;
        for i in (0..=n).rev() {
            let v = (c[i] + carry) % p;
            if i == 0 {
                if v != 0 {
                    return m;
                }
            } else {
                q[i - 1] = v;
                carry = v * a % p;
            }
        }
        m += 1;
        c = q;
    }
    m
}

fn cubic_mod() -> impl Strategy<Value = (u64, Vec<u64>, u64)> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_flat_map(|p| {
        (Just(p), prop::collection::vec(0..p, 3), 1..p, 0..p).prop_map(|(p, mut v, lead, a)| {
            v.push(lead);
            (p, v, a)
        })
    })
}

fn viro_poly() -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(0i64..8, 1..=3), 1i64..4).prop_map(|(low, lead)| {
        let v = Hyperfield::viro();
        let mut coeffs: Vec<Element> = low.into_iter().map(|c| Element::viro(rat(c, 1))).collect();
        coeffs.push(Element::viro(rat(lead, 1)));
        Polynomial::new(&v, coeffs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn prime_field_multiplicity_is_classical((p, coeffs, a) in cubic_mod()) {
        let hf = Hyperfield::prime(p).unwrap();
        let poly = Polynomial::new(&hf, coeffs.iter().map(|&c| Element::Mod(c)).collect()).unwrap();
        prop_assert_eq!(mult_at(&poly, &Element::Mod(a)).unwrap(), classical_multiplicity(p, &coeffs, a));
    }

    #[test]
    fn viro_roots_ignore_sign(p in viro_poly(), n in 0i64..16, d in 1i64..4) {
        let v = Hyperfield::viro();
        let a = Element::viro(rat(n, d));
        prop_assert_eq!(is_root(&p, &a).unwrap(), is_root(&p, &v.neg(&a).unwrap()).unwrap());
    }
}

#[test]
fn classical_multiplicity_oracle() {
    // (T-1)^2 (T-2) = T^3 - 4T^2 + 5T - 2 over GF(5)
    assert_eq!(classical_multiplicity(5, &[3, 0, 1, 1], 1), 2);
    assert_eq!(classical_multiplicity(5, &[3, 0, 1, 1], 2), 1);
    assert_eq!(classical_multiplicity(5, &[3, 0, 1, 1], 3), 0);
    let gf5 = Hyperfield::prime(5).unwrap();
    assert_eq!(mult_at(&parse_poly("T^3+T^2+3", &gf5).unwrap(), &Element::Mod(1)).unwrap(), 2);
}
