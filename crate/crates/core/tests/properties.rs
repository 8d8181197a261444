use bso_motivic::gf2linalg::{F2Matrix, F2Vector};
use bso_motivic::grammar::{format_w, format_x, ClassExpr};
use bso_motivic::milnor::apply_q;
use bso_motivic::polyring::{
    expand_w, monomial_symmetric, to_monomial_basis, to_w_basis, ExponentVector, F2Polynomial,
    Partition,
};
use bso_motivic::weightfilt::{weight_by_search, weight_of_symmetric};
use proptest::prelude::*;

const NVARS: usize = 4;

fn poly(nvars: usize, max_exp: u16) -> impl Strategy<Value = F2Polynomial> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, nvars), 0..6).prop_map(move |terms| {
        F2Polynomial::from_terms(nvars, terms.iter().map(|e| ExponentVector::new(e)))
    })
}

fn partition(max_len: usize, max_part: u16) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|p| Partition::new(&p))
}

fn symmetric(n: usize) -> impl Strategy<Value = F2Polynomial> {
    prop::collection::vec(partition(n, 4), 0..4).prop_map(move |ps| {
        ps.iter()
            .map(|p| monomial_symmetric(p, n).unwrap())
            .fold(F2Polynomial::zero(n), |a, b| a.add(&b).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(NVARS, 4), b in poly(NVARS, 4), c in poly(NVARS, 4)) {
        let one = F2Polynomial::one(NVARS);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert!(a.add(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&one).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.square(), a.mul(&a).unwrap());
    }

    #[test]
    fn milnor_derivation(a in poly(NVARS, 6), b in poly(NVARS, 6), k in 0u32..4, i in 0u32..4) {
        let ab = a.mul(&b).unwrap();
        let rhs = apply_q(k, &a).mul(&b).unwrap().add(&a.mul(&apply_q(k, &b)).unwrap()).unwrap();
        prop_assert_eq!(apply_q(k, &ab), rhs);
        prop_assert!(apply_q(k, &apply_q(k, &a)).is_zero());
        prop_assert_eq!(apply_q(i, &apply_q(k, &a)), apply_q(k, &apply_q(i, &a)));
    }

    #[test]
    fn symmetric_round_trips(p in symmetric(NVARS)) {
        let w = to_w_basis(&p).unwrap();
        prop_assert_eq!(expand_w(&w, NVARS).unwrap(), p.clone());
        let m = to_monomial_basis(&p).unwrap();
        let back = m.iter().map(|l| monomial_symmetric(l, NVARS).unwrap())
            .fold(F2Polynomial::zero(NVARS), |a, b| a.add(&b).unwrap());
        prop_assert_eq!(back, p.clone());
        let wtext = format_w(&w);
        prop_assert_eq!(ClassExpr::parse(&wtext).unwrap().to_w(NVARS).unwrap(), w);
        let xtext = format_x(&p);
        prop_assert_eq!(ClassExpr::parse(&xtext).unwrap().to_x(NVARS).unwrap(), p);
    }

    #[test]
    fn weight_is_odd_part_count_and_subadditive(a in symmetric(3), b in symmetric(3)) {
        let wa = weight_of_symmetric(&a).unwrap();
        let wb = weight_of_symmetric(&b).unwrap();
        let parity = to_monomial_basis(&a).unwrap().iter().map(|l| l.odd_parts()).max().unwrap_or(0);
        prop_assert_eq!(wa, parity);
        prop_assert!(weight_by_search(&a, 4).unwrap() <= wa);
        let ab = a.mul(&b).unwrap();
        prop_assert!(weight_of_symmetric(&ab).unwrap() <= wa + wb);
        prop_assert!(weight_of_symmetric(&a.add(&b).unwrap()).unwrap() <= wa.max(wb));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity(rows in 1usize..12, cols in 1usize..12, bits in prop::collection::vec(any::<bool>(), 144)) {
        let m = F2Matrix::from_fn(rows, cols, |r, c| bits[r * 12 + c]);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        prop_assert_eq!(m.transpose().rank(), m.rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
        let b = m.mul_vec(&F2Vector::from_bits((0..cols).map(|c| bits[c * 5 % 144]))).unwrap();
        let x = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
    }
}
