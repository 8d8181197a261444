//! Polynomials over GF(2) and symmetric functions.
//!
//! [`F2Polynomial`] is a set of monomials in `x_1..x_n`; addition is
//! symmetric difference. Symmetric polynomials are converted between the
//! monomial basis `m[λ]` and the Stiefel-Whitney basis, where `w_l` is the
//! `l`-th elementary symmetric polynomial. A polynomial in the `w_l`
//! is a [`WPolynomial`]; it is an ordinary polynomial whose `i`-th
//! variable stands for `w_{i+1}` and has degree `i + 1`.

use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponent = u16;

/// Exponents of one monomial, one entry per variable.
///
/// Ordering is lexicographic with `x_1` most significant, which is the
/// monomial order used by every leading-term algorithm in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[Exponent; 8]>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    pub fn new(exponents: &[Exponent]) -> Self {
        ExponentVector(SmallVec::from_slice(exponents))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Exponent] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree when variable `i` has weight `i + 1`, as for `w_{i+1}`.
    pub fn weighted_degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e as u32)
            .sum()
    }

    pub fn get(&self, i: usize) -> Exponent {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, e: Exponent) {
        self.0[i] = e;
    }

    /// Number of variables carrying an odd exponent.
    pub fn odd_count(&self) -> usize {
        self.0.iter().filter(|&&e| e % 2 == 1).count()
    }

    pub fn is_non_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Option<ExponentVector> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = self.clone();
        for (a, &b) in out.0.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(b)?;
        }
        Some(out)
    }

    pub(crate) fn add(&self, other: &ExponentVector) -> ExponentVector {
        self.checked_add(other)
            .expect("exponent overflow: exceeds 16 bits")
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub(crate) fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A polynomial over GF(2) in a fixed number of variables.
///
/// Terms are kept sorted and duplicate-free; a coefficient is either
/// present (1) or absent (0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Polynomial {
    nvars: usize,
    terms: Vec<ExponentVector>,
}

impl F2Polynomial {
    pub fn zero(nvars: usize) -> Self {
        F2Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        F2Polynomial {
            nvars,
            terms: vec![ExponentVector::zeros(nvars)],
        }
    }

    pub fn monomial(e: ExponentVector) -> Self {
        F2Polynomial {
            nvars: e.len(),
            terms: vec![e],
        }
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = ExponentVector::zeros(nvars);
        e.set(i, 1);
        F2Polynomial::monomial(e)
    }

    /// Builds a polynomial from terms, cancelling repeated terms in pairs.
    pub fn from_terms<I: IntoIterator<Item = ExponentVector>>(nvars: usize, terms: I) -> Self {
        let mut terms: Vec<ExponentVector> = terms.into_iter().collect();
        assert!(
            terms.iter().all(|t| t.len() == nvars),
            "term arity mismatch"
        );
        cancel_pairs(&mut terms);
        F2Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> &[ExponentVector] {
        &self.terms
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.terms.binary_search(e).is_ok()
    }

    /// The lexicographically largest term.
    pub fn leading_term(&self) -> Option<&ExponentVector> {
        self.terms.last()
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(ExponentVector::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(ExponentVector::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn check_arity(&self, other: &F2Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::input(format!(
                "polynomials live in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &F2Polynomial) -> Result<F2Polynomial> {
        self.check_arity(other)?;
        Ok(self.add_same(other))
    }

    pub(crate) fn add_same(&self, other: &F2Polynomial) -> F2Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        // merge of two sorted sets, dropping common terms
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        F2Polynomial {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub(crate) fn add_assign_same(&mut self, other: &F2Polynomial) {
        *self = self.add_same(other);
    }

    pub fn mul(&self, other: &F2Polynomial) -> Result<F2Polynomial> {
        self.check_arity(other)?;
        Ok(self.mul_same(other))
    }

    pub(crate) fn mul_same(&self, other: &F2Polynomial) -> F2Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.add(b));
            }
        }
        cancel_pairs(&mut terms);
        F2Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul_monomial(&self, e: &ExponentVector) -> F2Polynomial {
        // adding a fixed vector preserves the order, so no re-sort is needed
        F2Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|t| t.add(e)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> F2Polynomial {
        let mut out = F2Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.mul_same(self);
        }
        out
    }

    /// The square, computed as the Frobenius map (double every exponent).
    pub fn square(&self) -> F2Polynomial {
        let terms = self.terms.iter().map(|t| t.add(t)).collect();
        F2Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Applies a permutation of the variables: `x_i ↦ x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> F2Polynomial {
        assert_eq!(perm.len(), self.nvars);
        let terms = self.terms.iter().map(|t| {
            let mut e = ExponentVector::zeros(self.nvars);
            for (i, &p) in perm.iter().enumerate() {
                e.set(p, t.get(i));
            }
            e
        });
        F2Polynomial::from_terms(self.nvars, terms)
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&ExponentVector) -> bool) -> F2Polynomial {
        F2Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|t| keep(t)).cloned().collect(),
        }
    }

    /// Exact division with remainder by a single divisor, lex order.
    ///
    /// Returns `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and no term of the remainder divisible by the divisor's leading term.
    pub fn div_rem(&self, divisor: &F2Polynomial) -> Result<(F2Polynomial, F2Polynomial)> {
        self.check_arity(divisor)?;
        let lead = divisor
            .leading_term()
            .ok_or_else(|| Error::input("division by the zero polynomial"))?
            .clone();
        let mut p = self.clone();
        let mut q = F2Polynomial::zero(self.nvars);
        let mut r = F2Polynomial::zero(self.nvars);
        while let Some(t) = p.leading_term().cloned() {
            if lead.divides(&t) {
                let f = t.sub(&lead);
                q.add_assign_same(&F2Polynomial::monomial(f.clone()));
                p.add_assign_same(&divisor.mul_monomial(&f));
            } else {
                let m = F2Polynomial::monomial(t);
                r.add_assign_same(&m);
                p.add_assign_same(&m);
            }
        }
        Ok((q, r))
    }
}

fn cancel_pairs(terms: &mut Vec<ExponentVector>) {
    terms.sort_unstable();
    let mut out: Vec<ExponentVector> = Vec::with_capacity(terms.len());
    let mut i = 0;
    while i < terms.len() {
        let mut j = i + 1;
        while j < terms.len() && terms[j] == terms[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(terms[i].clone());
        }
        i = j;
    }
    *terms = out;
}

impl fmt::Debug for F2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::grammar::format_x(self))
    }
}

/// A partition: a non-increasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<Exponent>);

impl Partition {
    /// Sorts the parts into non-increasing order and drops zeros.
    pub fn new(parts: &[Exponent]) -> Self {
        let mut v: Vec<Exponent> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `[1^l]`, the exponent pattern of `w_l`.
    pub fn ones(l: usize) -> Self {
        Partition(vec![1; l])
    }

    pub fn parts(&self) -> &[Exponent] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&p| p as u32).sum()
    }

    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|&p| p % 2 == 0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<ExponentVector> {
        if self.length() > n {
            return Err(Error::input(format!(
                "partition {self} has more than {n} parts"
            )));
        }
        let mut e = ExponentVector::zeros(n);
        for (i, &p) in self.0.iter().enumerate() {
            e.set(i, p);
        }
        Ok(e)
    }

    pub fn from_exponents(e: &ExponentVector) -> Self {
        Partition::new(e.as_slice())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Partitions of `d` with at most `max_len` parts, each at most `max_part`,
/// in ascending lexicographic order of their part sequences.
pub fn partitions(d: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(
        rem: u32,
        max_part: u32,
        slots: usize,
        cur: &mut Vec<Exponent>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in 1..=max_part.min(rem) {
            cur.push(p as Exponent);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, max_part, max_len, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Which enumeration [`basis_of_degree`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// `m[λ]` for partitions with at most `n` parts.
    Monomial,
    /// `w_{λ_1} w_{λ_2} ⋯` for partitions with every part at most `n`.
    WMonomial,
}

/// The degree-`d` basis of `Z/2[x_1..x_n]^{Σ_n}` in the requested form.
pub fn basis_of_degree(n: usize, d: u32, kind: BasisKind) -> Vec<Partition> {
    match kind {
        BasisKind::Monomial => partitions(d, n, d),
        BasisKind::WMonomial => partitions(d, d as usize, n as u32),
    }
}

/// All distinct permutations of `e`, via lexicographic next-permutation.
fn orbit(e: &ExponentVector) -> Vec<ExponentVector> {
    let mut v: Vec<Exponent> = e.as_slice().to_vec();
    v.sort_unstable();
    let mut out = vec![ExponentVector::new(&v)];
    // next permutation in ascending lexicographic order
    while let Some(i) = (0..v.len().saturating_sub(1))
        .rev()
        .find(|&i| v[i] < v[i + 1])
    {
        let j = (i + 1..v.len())
            .rev()
            .find(|&j| v[j] > v[i])
            .expect("exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(ExponentVector::new(&v));
    }
    out
}

/// `m[λ]` in `n` variables: the orbit sum of the exponent pattern `λ`.
pub fn monomial_symmetric(lambda: &Partition, n: usize) -> Result<F2Polynomial> {
    let e = lambda.padded(n)?;
    Ok(F2Polynomial::from_terms(n, orbit(&e)))
}

/// The elementary symmetric polynomial `e_l = w_l` in `n` variables.
pub fn elementary(l: usize, n: usize) -> F2Polynomial {
    if l > n {
        return F2Polynomial::zero(n);
    }
    monomial_symmetric(&Partition::ones(l), n).expect("l <= n")
}

/// True iff `p` is fixed by every adjacent transposition.
pub fn is_symmetric(p: &F2Polynomial) -> bool {
    let n = p.nvars();
    (0..n.saturating_sub(1)).all(|i| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        p.permute(&perm) == *p
    })
}

/// The partitions `λ` with `p = Σ m[λ]`.
///
/// Each `m[λ]` contains exactly one non-increasing monomial, so the
/// coefficient of `m[λ]` is read off the term with exponent vector `λ`.
pub fn to_monomial_basis(p: &F2Polynomial) -> Result<Vec<Partition>> {
    if !is_symmetric(p) {
        return Err(Error::input("polynomial is not symmetric"));
    }
    Ok(monomial_coordinates(p))
}

/// Like [`to_monomial_basis`] without the symmetry check.
pub(crate) fn monomial_coordinates(p: &F2Polynomial) -> Vec<Partition> {
    let mut out: Vec<Partition> = p
        .terms()
        .iter()
        .filter(|t| t.is_non_increasing())
        .map(Partition::from_exponents)
        .collect();
    out.sort();
    out
}

/// A polynomial in the Stiefel-Whitney classes `w_1..w_rank`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WPolynomial {
    poly: F2Polynomial,
}

impl WPolynomial {
    pub fn zero(rank: usize) -> Self {
        WPolynomial {
            poly: F2Polynomial::zero(rank),
        }
    }

    pub fn one(rank: usize) -> Self {
        WPolynomial {
            poly: F2Polynomial::one(rank),
        }
    }

    /// `w_l` (1-based).
    pub fn w(rank: usize, l: usize) -> Result<Self> {
        if l == 0 || l > rank {
            return Err(Error::input(format!(
                "w{l} is not a generator among w1..w{rank}"
            )));
        }
        Ok(WPolynomial {
            poly: F2Polynomial::variable(rank, l - 1),
        })
    }

    /// The w-monomial `w_{λ_1} w_{λ_2} ⋯`.
    pub fn from_partition(rank: usize, lambda: &Partition) -> Result<Self> {
        let mut e = ExponentVector::zeros(rank);
        for &p in lambda.parts() {
            let p = p as usize;
            if p > rank {
                return Err(Error::input(format!(
                    "w{p} is not a generator among w1..w{rank}"
                )));
            }
            e.set(p - 1, e.get(p - 1) + 1);
        }
        Ok(WPolynomial {
            poly: F2Polynomial::monomial(e),
        })
    }

    pub fn from_poly(poly: F2Polynomial) -> Self {
        WPolynomial { poly }
    }

    pub fn poly(&self) -> &F2Polynomial {
        &self.poly
    }

    pub fn into_poly(self) -> F2Polynomial {
        self.poly
    }

    pub fn rank(&self) -> usize {
        self.poly.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> &[ExponentVector] {
        self.poly.terms()
    }

    /// Cohomological degree of the highest-degree term.
    pub fn degree(&self) -> Option<u32> {
        self.poly
            .terms()
            .iter()
            .map(ExponentVector::weighted_degree)
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .poly
            .terms()
            .iter()
            .map(ExponentVector::weighted_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Highest generator index with a nonzero exponent.
    pub fn max_generator(&self) -> usize {
        self.poly
            .terms()
            .iter()
            .filter_map(|t| (0..t.len()).rev().find(|&i| t.get(i) > 0))
            .map(|i| i + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &WPolynomial) -> Result<WPolynomial> {
        Ok(WPolynomial {
            poly: self.poly.add(&other.poly)?,
        })
    }

    pub fn mul(&self, other: &WPolynomial) -> Result<WPolynomial> {
        Ok(WPolynomial {
            poly: self.poly.mul(&other.poly)?,
        })
    }

    /// Re-expresses the polynomial with `rank` generators; fails if a
    /// generator beyond the new rank occurs.
    pub fn with_rank(&self, rank: usize) -> Result<WPolynomial> {
        if self.max_generator() > rank {
            return Err(Error::input(format!(
                "w{} does not exist among w1..w{rank}",
                self.max_generator()
            )));
        }
        let terms = self.poly.terms().iter().map(|t| {
            let mut e = ExponentVector::zeros(rank);
            for i in 0..t.len().min(rank) {
                e.set(i, t.get(i));
            }
            e
        });
        Ok(WPolynomial {
            poly: F2Polynomial::from_terms(rank, terms),
        })
    }

    /// Substitutes a polynomial for each generator: `w_{i+1} ↦ images[i]`.
    pub fn substitute(&self, images: &[F2Polynomial], target_nvars: usize) -> F2Polynomial {
        assert_eq!(images.len(), self.rank());
        let mut cache: HashMap<ExponentVector, F2Polynomial> = HashMap::new();
        let mut out = F2Polynomial::zero(target_nvars);
        for t in self.poly.terms() {
            out.add_assign_same(&eval_monomial(t, images, target_nvars, &mut cache));
        }
        out
    }
}

/// Evaluates a monomial under a substitution, memoizing every prefix product.
fn eval_monomial(
    e: &ExponentVector,
    images: &[F2Polynomial],
    nvars: usize,
    cache: &mut HashMap<ExponentVector, F2Polynomial>,
) -> F2Polynomial {
    if let Some(p) = cache.get(e) {
        return p.clone();
    }
    let Some(i) = (0..e.len()).rev().find(|&i| e.get(i) > 0) else {
        return F2Polynomial::one(nvars);
    };
    let mut smaller = e.clone();
    smaller.set(i, e.get(i) - 1);
    let p = eval_monomial(&smaller, images, nvars, cache).mul_same(&images[i]);
    cache.insert(e.clone(), p.clone());
    p
}

impl fmt::Debug for WPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::grammar::format_w(self))
    }
}

/// Expands w-polynomials into `n` variables, caching monomial expansions.
#[derive(Debug)]
pub struct Expander {
    n: usize,
    elementary: Vec<F2Polynomial>,
    cache: HashMap<ExponentVector, F2Polynomial>,
}

impl Expander {
    pub fn new(n: usize) -> Self {
        Expander {
            n,
            elementary: (1..=n).map(|l| elementary(l, n)).collect(),
            cache: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn expand(&mut self, p: &WPolynomial) -> Result<F2Polynomial> {
        let p = p.with_rank(self.n)?;
        let mut out = F2Polynomial::zero(self.n);
        for t in p.terms() {
            let m = eval_monomial(t, &self.elementary, self.n, &mut self.cache);
            out.add_assign_same(&m);
        }
        Ok(out)
    }

    /// Expansion of the w-monomial with exponent vector `e` (length `n`).
    pub fn expand_monomial(&mut self, e: &ExponentVector) -> F2Polynomial {
        eval_monomial(e, &self.elementary, self.n, &mut self.cache)
    }

    /// Inverse of [`Expander::expand`] by leading-term elimination.
    pub fn to_w_basis(&mut self, p: &F2Polynomial) -> Result<WPolynomial> {
        if p.nvars() != self.n {
            return Err(Error::input(format!(
                "expected {} variables, got {}",
                self.n,
                p.nvars()
            )));
        }
        if !is_symmetric(p) {
            return Err(Error::input("polynomial is not symmetric"));
        }
        let mut rest = p.clone();
        let mut out = F2Polynomial::zero(self.n);
        while let Some(lead) = rest.leading_term().cloned() {
            // the lex-leading term of a symmetric polynomial is non-increasing,
            // and it is the leading term of w_1^{a1-a2} w_2^{a2-a3} ⋯ w_n^{an}
            debug_assert!(lead.is_non_increasing());
            let mut e = ExponentVector::zeros(self.n);
            for i in 0..self.n {
                let next = if i + 1 < self.n { lead.get(i + 1) } else { 0 };
                e.set(i, lead.get(i) - next);
            }
            let m = self.expand_monomial(&e);
            debug_assert_eq!(m.leading_term(), Some(&lead));
            rest.add_assign_same(&m);
            out.add_assign_same(&F2Polynomial::monomial(e));
        }
        Ok(WPolynomial { poly: out })
    }
}

/// Substitutes `w_l ↦ e_l` in `n` variables.
pub fn expand_w(p: &WPolynomial, n: usize) -> Result<F2Polynomial> {
    Expander::new(n).expand(p)
}

/// The unique w-polynomial whose expansion is the symmetric polynomial `p`.
pub fn to_w_basis(p: &F2Polynomial) -> Result<WPolynomial> {
    Expander::new(p.nvars()).to_w_basis(p)
}
