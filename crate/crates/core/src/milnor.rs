//! Milnor operations `Q_k` as derivations over GF(2).
//!
//! On `H*((Bμ_2)^n) = Z/2[x_1..x_n]` each `Q_k` is the derivation with
//! `Q_k x_i = x_i^{2^{k+1}}`, so on a monomial it raises one odd exponent
//! by `2^{k+1} - 1` at a time and kills even powers. Everything else in
//! this module (the action on `H*(BO_n)` and `H*(BSO_n)`) is derived from
//! that rule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{elementary, Expander, ExponentVector, F2Polynomial, WPolynomial};

/// The Milnor primitive `Q_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MilnorOp {
    index: u32,
}

impl MilnorOp {
    pub fn new(index: u32) -> Self {
        MilnorOp { index }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    /// `2^{k+1} - 1`, the topological degree of `Q_k`.
    pub fn degree_shift(self) -> u32 {
        (1u32 << (self.index + 1)) - 1
    }

    /// `(2^{k+1} - 1, 2^k - 1)`: degree and twist added by the motivic `Q_k`.
    pub fn motivic_bidegree_shift(self) -> (u32, u32) {
        (self.degree_shift(), (1u32 << self.index) - 1)
    }

    pub fn apply(self, p: &F2Polynomial) -> F2Polynomial {
        apply_q(self.index, p)
    }
}

/// `Q_k p`, computed from the derivation rule on variables.
///
/// Panics if an exponent would exceed 16 bits.
pub fn apply_q(k: u32, p: &F2Polynomial) -> F2Polynomial {
    let bump = u16::try_from((1u32 << (k + 1)) - 1).expect("Q_k degree shift exceeds 16 bits");
    let n = p.nvars();
    let mut out = Vec::new();
    for t in p.terms() {
        for i in 0..n {
            let a = t.get(i);
            if a % 2 == 1 {
                let mut e = t.clone();
                e.set(
                    i,
                    a.checked_add(bump)
                        .expect("exponent overflow: exceeds 16 bits"),
                );
                out.push(e);
            }
        }
    }
    F2Polynomial::from_terms(n, out)
}

/// `Q_{k_1} ⋯ Q_{k_s} p` for a strictly increasing index list; the
/// rightmost operation is applied first.
pub fn apply_q_sequence(ks: &[u32], p: &F2Polynomial) -> Result<F2Polynomial> {
    if ks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::input(format!(
            "Q-sequence {ks:?} is not strictly increasing"
        )));
    }
    let mut out = p.clone();
    for &k in ks.iter().rev() {
        if out.is_zero() {
            break;
        }
        out = apply_q(k, &out);
    }
    Ok(out)
}

/// True iff `Q_k(e_1)` is divisible by `e_1` in `n` variables, which makes
/// the ideal `(w_1)` stable under `Q_k`.
pub fn e1_ideal_is_stable(k: u32, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let e1 = elementary(1, n);
    let (_, r) = apply_q(k, &e1)
        .div_rem(&e1)
        .expect("same arity, nonzero divisor");
    r.is_zero()
}

/// `Q_k` on `H*(BSO_n) = H*(BO_n)/(w_1)`.
///
/// `p` must be a polynomial in `w_2..w_n` (rank `n`, no `w_1`). The class
/// is expanded into `n` variables, `Q_k` is applied there, the result is
/// rewritten in the `w`'s and the multiple of `w_1` is discarded after
/// checking by exact division that it really is one.
pub fn apply_q_so(k: u32, p: &WPolynomial, n: usize) -> Result<WPolynomial> {
    let mut expander = Expander::new(n);
    apply_q_so_with(k, p, &mut expander)
}

pub(crate) fn apply_q_so_with(
    k: u32,
    p: &WPolynomial,
    expander: &mut Expander,
) -> Result<WPolynomial> {
    let n = expander.n();
    let p = p.with_rank(n)?;
    if p.terms().iter().any(|t| n > 0 && t.get(0) > 0) {
        return Err(Error::input(
            "class mentions w1, which is zero in H*(BSO_n)",
        ));
    }
    let image = apply_q(k, &expander.expand(&p)?);
    let w = expander.to_w_basis(&image)?;
    let (with_w1, without_w1): (Vec<ExponentVector>, Vec<ExponentVector>) = w
        .terms()
        .iter()
        .cloned()
        .partition(|t| n > 0 && t.get(0) > 0);
    if !with_w1.is_empty() {
        let part = expander.expand(&WPolynomial::from_poly(F2Polynomial::from_terms(
            n, with_w1,
        )))?;
        let (_, r) = part.div_rem(&elementary(1, n))?;
        if !r.is_zero() {
            return Err(Error::internal(format!(
                "w1-part of Q_{k} image is not divisible by e1"
            )));
        }
    }
    Ok(WPolynomial::from_poly(F2Polynomial::from_terms(
        n, without_w1,
    )))
}

/// A random polynomial in `n` variables with up to `max_terms` terms of
/// total degree at most `max_degree`.
pub fn random_polynomial(
    rng: &mut impl Rng,
    n: usize,
    max_terms: usize,
    max_degree: u32,
) -> F2Polynomial {
    let terms = rng.gen_range(0..=max_terms);
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let budget = rng.gen_range(0..=max_degree);
        let mut e = ExponentVector::zeros(n);
        let mut left = budget;
        for i in 0..n {
            let a = if i + 1 == n {
                left
            } else {
                rng.gen_range(0..=left)
            };
            e.set(i, a as u16);
            left -= a;
        }
        out.push(e);
    }
    F2Polynomial::from_terms(n, out)
}

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub seed: u64,
    pub samples: usize,
    pub derivation_failures: usize,
    pub square_failures: usize,
    pub commutation_failures: usize,
    pub pass: bool,
}

/// Checks on seeded random polynomials (`n <= max_vars`, degree `<= max_degree`,
/// indices `<= max_index`) that `Q_k` is a derivation, `Q_k^2 = 0` and
/// `Q_i Q_j = Q_j Q_i`.
pub fn check_milnor_laws(
    seed: u64,
    samples: usize,
    max_vars: usize,
    max_degree: u32,
    max_index: u32,
) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = LawReport {
        seed,
        samples,
        derivation_failures: 0,
        square_failures: 0,
        commutation_failures: 0,
        pass: false,
    };
    for _ in 0..samples {
        let n = rng.gen_range(1..=max_vars);
        let p = random_polynomial(&mut rng, n, 6, max_degree);
        let q = random_polynomial(&mut rng, n, 6, max_degree);
        let k = rng.gen_range(0..=max_index);
        let l = rng.gen_range(0..=max_index);
        let lhs = apply_q(k, &p.mul_same(&q));
        let rhs = apply_q(k, &p)
            .mul_same(&q)
            .add_same(&p.mul_same(&apply_q(k, &q)));
        r.derivation_failures += usize::from(lhs != rhs);
        r.square_failures += usize::from(!apply_q(k, &apply_q(k, &p)).is_zero());
        r.commutation_failures +=
            usize::from(apply_q(k, &apply_q(l, &p)) != apply_q(l, &apply_q(k, &p)));
    }
    r.pass = r.derivation_failures + r.square_failures + r.commutation_failures == 0;
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct Q0Entry {
    pub n: usize,
    pub l: usize,
    pub image: String,
    pub expected: String,
    pub ok: bool,
}

/// `Q_0 w_{2l} = w_{2l+1}` in `H*(BSO_n)` for `2 <= n <= max_n`, with `w_{n+1} = 0`.
pub fn verify_q0_even_classes(max_n: usize) -> Result<Vec<Q0Entry>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut ex = Expander::new(n);
        for l in 1..=n / 2 {
            let image = apply_q_so_with(0, &WPolynomial::w(n, 2 * l)?, &mut ex)?;
            let expected = if 2 * l < n {
                WPolynomial::w(n, 2 * l + 1)?
            } else {
                WPolynomial::zero(n)
            };
            out.push(Q0Entry {
                n,
                l,
                image: crate::grammar::format_w(&image),
                expected: crate::grammar::format_w(&expected),
                ok: image == expected,
            });
        }
    }
    Ok(out)
}
