//! Weights of classes and the weight filtration on each presented ring.
//!
//! The weight of a symmetric polynomial is the length of the longest
//! nonvanishing string of Milnor operations on it. On `H*(BO_n)` the
//! monomial symmetric functions `m[λ]` form a weighted basis: the weight
//! of `m[λ]` is its number of odd parts. For `BSO_n` the filtration is
//! pulled back along `κ*`, and quotients carry the image filtration.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2linalg::{preimage, F2Matrix, F2Vector, Subspace};
use crate::milnor::{apply_q, apply_q_sequence};
use crate::polyring::{
    is_symmetric, monomial_coordinates, monomial_symmetric, partitions, Expander, F2Polynomial,
    Partition, WPolynomial,
};
use crate::rings::{
    exterior_identification, kappa_star, kappa_star_unreduced, Flavor, GradedPiece, RingKind,
    RingMap, RingPresentation,
};

/// Weight of a symmetric polynomial by the Milnor-operation criterion.
///
/// The operations are taken with indices above the exponent range, where
/// no two terms of `Q_{k_1} ⋯ Q_{k_s} p` can cancel; the result is then
/// nonzero exactly when some term of `p` has `s` odd exponents, so this
/// string is as long as any. The zero polynomial gets weight 0.
pub fn weight_of_symmetric(p: &F2Polynomial) -> Result<usize> {
    if !is_symmetric(p) {
        return Err(Error::input(
            "weight is defined for symmetric polynomials only",
        ));
    }
    let max_exp = p
        .terms()
        .iter()
        .flat_map(|t| t.as_slice().iter().copied())
        .max()
        .unwrap_or(0) as u32;
    let mut base = 0u32;
    while (1u32 << (base + 1)) <= max_exp + 1 {
        base += 1;
    }
    let n = p.nvars() as u32;
    if max_exp + (1u32 << (base + n + 1)) > u16::MAX as u32 {
        return Err(Error::input(
            "exponents too large for the Milnor-operation test",
        ));
    }
    let mut cur = p.clone();
    let mut s = 0;
    while !cur.is_zero() && s < p.nvars() {
        let next = apply_q(base + s as u32, &cur);
        if next.is_zero() {
            break;
        }
        cur = next;
        s += 1;
    }
    Ok(s)
}

/// `weight_bo`: the weight of a class of `H*(BO_n)` given in the `w`'s.
pub fn weight_bo(p: &WPolynomial, n: usize) -> Result<usize> {
    let mut ex = Expander::new(n);
    weight_of_symmetric(&ex.expand(p)?)
}

/// Longest nonvanishing `Q_{k_1} ⋯ Q_{k_s} p` with `k_1 < ⋯ < k_s <= max_index`,
/// by exhaustive search. Agrees with [`weight_of_symmetric`] once
/// `max_index` leaves room above the exponents.
pub fn weight_by_search(p: &F2Polynomial, max_index: u32) -> Result<usize> {
    if !is_symmetric(p) {
        return Err(Error::input(
            "weight is defined for symmetric polynomials only",
        ));
    }
    fn go(cur: &F2Polynomial, below: u32, depth: usize, best: &mut usize, cap: usize) {
        *best = (*best).max(depth);
        if *best == cap {
            return;
        }
        for k in (0..below).rev() {
            let next = apply_q(k, cur);
            if !next.is_zero() {
                go(&next, k, depth + 1, best, cap);
            }
        }
    }
    let mut best = 0;
    if !p.is_zero() {
        go(p, max_index + 1, 0, &mut best, p.nvars());
    }
    Ok(best)
}

/// One vector of a weighted basis: coordinates in the piece's basis.
#[derive(Clone, Debug)]
pub struct WeightedVector {
    pub coords: F2Vector,
    pub weight: usize,
}

/// A basis of one graded piece adapted to the weight filtration:
/// `F^ω` is spanned by the entries of weight at most `ω`.
#[derive(Clone, Debug)]
pub struct WeightedBasis {
    ring: RingPresentation,
    degree: u32,
    dim: usize,
    entries: Vec<WeightedVector>,
    levels: Vec<Subspace>,
}

impl WeightedBasis {
    fn from_entries(
        ring: RingPresentation,
        degree: u32,
        dim: usize,
        mut entries: Vec<WeightedVector>,
    ) -> Result<Self> {
        entries.sort_by_key(|e| e.weight);
        let top = entries.last().map_or(0, |e| e.weight);
        let mut levels = Vec::with_capacity(top + 1);
        let mut s = Subspace::zero(dim);
        let mut it = entries.iter().peekable();
        for w in 0..=top {
            while let Some(e) = it.next_if(|e| e.weight == w) {
                if !s.insert(e.coords.clone()) {
                    return Err(Error::internal("weighted basis vectors are dependent"));
                }
            }
            levels.push(s.clone());
        }
        if s.dim() != dim {
            return Err(Error::internal(format!(
                "weighted basis of {ring} in degree {degree} is incomplete"
            )));
        }
        Ok(WeightedBasis {
            ring,
            degree,
            dim,
            entries,
            levels,
        })
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[WeightedVector] {
        &self.entries
    }

    pub fn max_weight(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// `F^ω` of this piece.
    pub fn filtration(&self, omega: i64) -> Subspace {
        if omega < 0 {
            return Subspace::zero(self.dim);
        }
        match self.levels.get(omega as usize) {
            Some(s) => s.clone(),
            None => self
                .levels
                .last()
                .cloned()
                .unwrap_or_else(|| Subspace::zero(self.dim)),
        }
    }

    /// `dim F^ω`, zero for negative `ω`.
    pub fn dim_at_most(&self, omega: i64) -> usize {
        if omega < 0 {
            return 0;
        }
        self.entries
            .iter()
            .filter(|e| e.weight as i64 <= omega)
            .count()
    }

    /// Smallest `ω` with `v ∈ F^ω` (0 for the zero vector).
    pub fn weight_of(&self, v: &F2Vector) -> Result<usize> {
        if v.len() != self.dim {
            return Err(Error::input("coordinate vector has the wrong length"));
        }
        if v.is_zero() {
            return Ok(0);
        }
        self.levels
            .iter()
            .position(|s| s.contains(v))
            .ok_or_else(|| Error::internal("vector outside the top filtration level"))
    }

    /// Number of basis vectors of each weight, indexed by weight.
    pub fn weight_counts(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_weight() + 1];
        for e in &self.entries {
            out[e.weight] += 1;
        }
        out
    }
}

/// Computes and caches weighted bases, expansions and pieces.
#[derive(Default)]
pub struct WeightEngine {
    expanders: HashMap<usize, Expander>,
    pieces: HashMap<(RingPresentation, u32), Arc<GradedPiece>>,
    bases: HashMap<(RingPresentation, u32), Arc<WeightedBasis>>,
}

impl WeightEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn expander(&mut self, n: usize) -> &mut Expander {
        self.expanders.entry(n).or_insert_with(|| Expander::new(n))
    }

    pub fn piece(&mut self, ring: &RingPresentation, d: u32) -> Result<Arc<GradedPiece>> {
        if let Some(p) = self.pieces.get(&(ring.clone(), d)) {
            return Ok(p.clone());
        }
        let p = Arc::new(ring.piece(d)?);
        self.pieces.insert((ring.clone(), d), p.clone());
        Ok(p)
    }

    /// Matrix of `f` in degree `d`, through cached pieces.
    pub fn map_matrix(&mut self, f: &RingMap, d: u32) -> Result<F2Matrix> {
        let src = self.piece(f.source(), d)?;
        let tgt = self.piece(f.target(), d)?;
        f.matrix_between(&src, &tgt)
    }

    pub fn weighted_basis(
        &mut self,
        ring: &RingPresentation,
        d: u32,
    ) -> Result<Arc<WeightedBasis>> {
        if let Some(b) = self.bases.get(&(ring.clone(), d)) {
            return Ok(b.clone());
        }
        let b = Arc::new(self.compute_basis(ring, d)?);
        self.bases.insert((ring.clone(), d), b.clone());
        Ok(b)
    }

    fn compute_basis(&mut self, ring: &RingPresentation, d: u32) -> Result<WeightedBasis> {
        if ring.quotient().is_some() {
            let free = self.weighted_basis(&ring.free(), d)?;
            let piece = self.piece(ring, d)?;
            return pushforward(ring.clone(), &piece, &free);
        }
        let n = ring.n();
        match ring.kind() {
            RingKind::Bo => self.bo_basis(n, d),
            RingKind::Bso if n <= 2 => {
                // BSO_2 = BGL_1 and BSO_1 = point: everything has weight 0
                let dim = self.piece(ring, d)?.dim();
                let entries = (0..dim)
                    .map(|i| WeightedVector {
                        coords: F2Vector::unit(dim, i),
                        weight: 0,
                    })
                    .collect();
                WeightedBasis::from_entries(ring.clone(), d, dim, entries)
            }
            RingKind::Bso => {
                let k = kappa_star_unreduced(n)?;
                let m = self.map_matrix(&k, d)?;
                let target = self.weighted_basis(k.target(), d)?;
                pullback(ring.clone(), d, &m, &target)
            }
            RingKind::Exterior => {
                let s = exterior_identification(n)?;
                let m = self.map_matrix(&s, d)?;
                let target = self.weighted_basis(s.target(), d)?;
                pullback(ring.clone(), d, &m, &target)
            }
        }
    }

    /// `m`-coordinates of the `w`-monomial basis of `H^d(BO_n)`: columns are
    /// the monomials of `bo:n` in degree `d`, rows the partitions of `d`
    /// with at most `n` parts (ascending lexicographic order).
    pub fn m_matrix(&mut self, n: usize, d: u32) -> Result<(F2Matrix, Vec<Partition>)> {
        let rows = partitions(d, n, d);
        let index: HashMap<&Partition, usize> =
            rows.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let monos = RingPresentation::bo(n).monomials(d);
        let ex = self.expander(n);
        let mut cols = Vec::with_capacity(monos.len());
        for e in &monos {
            let x = ex.expand_monomial(e);
            let mut v = F2Vector::zeros(rows.len());
            for lam in monomial_coordinates(&x) {
                let i = index
                    .get(&lam)
                    .ok_or_else(|| Error::internal("partition outside the basis"))?;
                v.flip(*i);
            }
            cols.push(v);
        }
        Ok((F2Matrix::from_columns(rows.len(), &cols), rows))
    }

    fn bo_basis(&mut self, n: usize, d: u32) -> Result<WeightedBasis> {
        let (e, rows) = self.m_matrix(n, d)?;
        let dim = e.cols();
        if e.rows() != dim {
            return Err(Error::internal("w-monomials and m-basis differ in size"));
        }
        let mut entries = Vec::with_capacity(dim);
        for (i, lam) in rows.iter().enumerate() {
            let x = e
                .solve(&F2Vector::unit(dim, i))?
                .ok_or_else(|| Error::internal("w-monomials do not span H*(BO_n)"))?;
            entries.push(WeightedVector {
                coords: x,
                weight: lam.odd_parts(),
            });
        }
        WeightedBasis::from_entries(RingPresentation::bo(n), d, dim, entries)
    }

    /// Weight of a class of `ring`: the largest weight of its homogeneous
    /// components (0 for zero).
    pub fn weight(&mut self, ring: &RingPresentation, p: &WPolynomial) -> Result<usize> {
        let p = p.with_rank(ring.n())?;
        if !ring.contains(&p) {
            return Err(Error::input(format!("class is not an element of {ring}")));
        }
        let mut by_degree: HashMap<u32, Vec<_>> = HashMap::new();
        for t in p.terms() {
            by_degree
                .entry(t.weighted_degree())
                .or_default()
                .push(t.clone());
        }
        let mut best = 0;
        for (d, terms) in by_degree {
            let part = WPolynomial::from_poly(F2Polynomial::from_terms(ring.n(), terms));
            let piece = self.piece(ring, d)?;
            let v = piece.coords(&part)?;
            best = best.max(self.weighted_basis(ring, d)?.weight_of(&v)?);
        }
        Ok(best)
    }
}

/// `F^ω(source) = M^{-1}(F^ω(target))` for an injective `M`.
pub fn pullback(
    ring: RingPresentation,
    d: u32,
    m: &F2Matrix,
    target: &WeightedBasis,
) -> Result<WeightedBasis> {
    if m.rank() != m.cols() {
        return Err(Error::verification(format!(
            "map out of {ring} is not injective in degree {d}"
        )));
    }
    let dim = m.cols();
    let mut entries = Vec::new();
    let mut span = Subspace::zero(dim);
    for w in 0..=target.max_weight() {
        let level = preimage(m, &target.filtration(w as i64));
        for v in level.basis() {
            if span.insert(v.clone()) {
                entries.push(WeightedVector {
                    coords: v.clone(),
                    weight: w,
                });
            }
        }
    }
    WeightedBasis::from_entries(ring, d, dim, entries)
}

/// Image filtration on a quotient piece.
pub fn pushforward(
    ring: RingPresentation,
    piece: &GradedPiece,
    free: &WeightedBasis,
) -> Result<WeightedBasis> {
    let dim = piece.dim();
    let mut span = Subspace::zero(dim);
    let mut entries = Vec::new();
    for e in free.entries() {
        let v = piece.reduce_ambient(&e.coords);
        if span.insert(v.clone()) {
            entries.push(WeightedVector {
                coords: v,
                weight: e.weight,
            });
        }
    }
    WeightedBasis::from_entries(ring, piece.degree(), dim, entries)
}

/// `weight_in_quotient`: weight of the class of `p` in a presented ring.
pub fn weight_in_quotient(ring: &RingPresentation, p: &WPolynomial) -> Result<usize> {
    WeightEngine::new().weight(ring, p)
}

/// `weight_bso`: the weight of a class of `H*(BSO_n)` modulo `c_n`, read
/// off its image under `κ*` in `H*(BO_{n-1})/c_1`.
pub fn weight_bso(n: usize, p: &WPolynomial) -> Result<usize> {
    let p = p.with_rank(n)?;
    if !RingPresentation::bso(n).contains(&p) {
        return Err(Error::input(
            "class mentions w1, which is zero in H*(BSO_n)",
        ));
    }
    if n <= 2 {
        return Ok(0);
    }
    let k = kappa_star(n)?;
    let img = k.apply(&p)?;
    WeightEngine::new().weight(k.target(), &img)
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightTableEntry {
    pub group: String,
    pub l: usize,
    pub weight: usize,
    pub expected: usize,
    pub ok: bool,
}

/// Weights of the Stiefel-Whitney classes: `w_l` has weight `l` in `BO_n`;
/// in `BSO_n` (`n >= 3`) it has weight `l` for even `l < n` and `l - 2`
/// otherwise. Both the `κ*` route and the filtration on the full ring are
/// checked for `BSO_n`.
pub fn stiefel_whitney_weight_table(max_n: usize) -> Result<Vec<WeightTableEntry>> {
    let mut out = Vec::new();
    let mut engine = WeightEngine::new();
    for n in 1..=max_n {
        for l in 1..=n {
            let w = weight_bo(&WPolynomial::w(n, l)?, n)?;
            out.push(WeightTableEntry {
                group: format!("BO_{n}"),
                l,
                weight: w,
                expected: l,
                ok: w == l,
            });
        }
    }
    for n in 3..=max_n {
        let ring = RingPresentation::bso(n);
        for l in 2..=n {
            let class = WPolynomial::w(n, l)?;
            let expected = if l % 2 == 0 && l < n { l } else { l - 2 };
            let via_kappa = weight_bso(n, &class)?;
            let full = engine.weight(&ring, &class)?;
            out.push(WeightTableEntry {
                group: format!("BSO_{n}"),
                l,
                weight: via_kappa,
                expected,
                ok: via_kappa == expected && full == expected,
            });
        }
    }
    Ok(out)
}

/// Outcome of comparing `F^ω(source)` with the preimage of `F^ω(target)`.
#[derive(Clone, Debug, Serialize)]
pub struct StrictnessEntry {
    pub degree: u32,
    pub weight: usize,
    pub source_dim: usize,
    pub preimage_dim: usize,
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StrictnessReport {
    pub map: String,
    pub injective: bool,
    pub entries: Vec<StrictnessEntry>,
    pub pass: bool,
}

impl StrictnessReport {
    /// Degrees where strictness fails.
    pub fn failing_degrees(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .entries
            .iter()
            .filter(|e| !e.strict)
            .map(|e| e.degree)
            .collect();
        v.dedup();
        v
    }
}

/// Checks `F^ω(source) = f^{-1}(F^ω(target))` for every weight and every
/// degree up to `max_degree`, together with injectivity of `f`.
pub fn check_strictness(
    engine: &mut WeightEngine,
    f: &RingMap,
    max_degree: u32,
) -> Result<StrictnessReport> {
    let mut entries = Vec::new();
    let mut injective = true;
    for d in 0..=max_degree {
        let m = engine.map_matrix(f, d)?;
        injective &= m.rank() == m.cols();
        let src = engine.weighted_basis(f.source(), d)?;
        let tgt = engine.weighted_basis(f.target(), d)?;
        let top = src.max_weight().max(tgt.max_weight());
        for w in 0..=top {
            let own = src.filtration(w as i64);
            let pre = preimage(&m, &tgt.filtration(w as i64));
            entries.push(StrictnessEntry {
                degree: d,
                weight: w,
                source_dim: own.dim(),
                preimage_dim: pre.dim(),
                strict: own == pre,
            });
        }
    }
    let pass = injective && entries.iter().all(|e| e.strict);
    Ok(StrictnessReport {
        map: f.name().to_string(),
        injective,
        entries,
        pass,
    })
}

/// Strictness of `κ*: H*(BSO_n)/c_n → H*(BO_{n-1})/c_1`, where the source
/// filtration is the image of the one on `H*(BSO_n)`.
pub fn verify_strictness(n: usize, max_degree: u32) -> Result<StrictnessReport> {
    let mut engine = WeightEngine::new();
    check_strictness(&mut engine, &kappa_star(n)?, max_degree)
}

/// The same comparison for `ι*: H*(BSO_{2m+1}) → H*(BSO_{2m})`, which is
/// not strict: `w_{2m}` has weight `2m` upstairs and `2m - 2` downstairs.
pub fn verify_iota_strictness(m: usize, max_degree: u32) -> Result<StrictnessReport> {
    let mut engine = WeightEngine::new();
    let f = crate::rings::iota_star(2 * m + 1, Flavor::SO)?;
    let mut r = check_strictness(&mut engine, &f, max_degree)?;
    // ι* is not injective; only the filtration comparison is meaningful
    r.pass = r.entries.iter().all(|e| e.strict);
    Ok(r)
}

/// A candidate basis element `Q_I m[λ]` of `H*(BO_n)`.
///
/// `λ` has odd parts `2 s_1 + 1 ≤ ⋯ ≤ 2 s_k + 1` and even parts `2 t`;
/// `I ⊆ {0..k-1}` lists the operations applied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WilsonElement {
    pub odd: Vec<u16>,
    pub even: Vec<u16>,
    pub applied: Vec<u32>,
}

impl WilsonElement {
    pub fn k(&self) -> usize {
        self.odd.len()
    }

    pub fn partition(&self) -> Partition {
        let parts: Vec<u16> = self
            .odd
            .iter()
            .map(|s| 2 * s + 1)
            .chain(self.even.iter().map(|t| 2 * t))
            .collect();
        Partition::new(&parts)
    }

    pub fn degree(&self) -> u32 {
        self.partition().degree()
            + self
                .applied
                .iter()
                .map(|i| (1u32 << (i + 1)) - 1)
                .sum::<u32>()
    }

    /// `k - |I|`.
    pub fn weight(&self) -> usize {
        self.k() - self.applied.len()
    }

    /// For every even part `2t` of odd multiplicity some `v ∈ 1..=k` has
    /// `2 s_v + 2^v < 2t < 2 s_v + 2^{v+1}`.
    pub fn is_admissible(&self) -> bool {
        let mut i = 0;
        while i < self.even.len() {
            let t = self.even[i];
            let run = self.even[i..].iter().take_while(|&&x| x == t).count();
            i += run;
            if run % 2 == 0 {
                continue;
            }
            let tt = 2 * t as u64;
            let ok = self.odd.iter().enumerate().any(|(v0, &s)| {
                let v = v0 as u32 + 1;
                let a = 2 * s as u64;
                a + (1u64 << v) < tt && tt < a + (1u64 << (v + 1))
            });
            if !ok {
                return false;
            }
        }
        true
    }

    pub fn polynomial(&self, n: usize) -> Result<F2Polynomial> {
        let m = monomial_symmetric(&self.partition(), n)?;
        apply_q_sequence(&self.applied, &m)
    }
}

/// Non-decreasing sequences of `len` integers `>= min` summing to `sum`.
fn multisets(len: usize, sum: u32, min: u32) -> Vec<Vec<u16>> {
    fn go(len: usize, sum: u32, min: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if len == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut v = min;
        while v * len as u32 <= sum {
            cur.push(v as u16);
            go(len - 1, sum - v, v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    go(len, sum, min, &mut Vec::new(), &mut out);
    out
}

/// All elements of degree `d` with `k + q <= n`, before (`admissible_only
/// = false`) or after the admissibility filter.
pub fn wilson_candidates(n: usize, d: u32, admissible_only: bool) -> Vec<WilsonElement> {
    let mut out = Vec::new();
    for k in 0..=n {
        for q in 0..=(n - k) {
            for mask in 0u32..(1 << k) {
                let applied: Vec<u32> = (0..k as u32).filter(|i| mask >> i & 1 == 1).collect();
                let qdeg: u32 = applied.iter().map(|i| (1u32 << (i + 1)) - 1).sum();
                let Some(rest) = d.checked_sub(qdeg + k as u32) else {
                    continue;
                };
                if rest % 2 == 1 {
                    continue;
                }
                let half = rest / 2;
                for ssum in 0..=half {
                    for odd in multisets(k, ssum, 0) {
                        for even in multisets(q, half - ssum, 1) {
                            let e = WilsonElement {
                                odd: odd.clone(),
                                even,
                                applied: applied.clone(),
                            };
                            if !admissible_only || e.is_admissible() {
                                out.push(e);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The admissible elements of degree `d`.
pub fn wilson_basis(n: usize, d: u32) -> Vec<WilsonElement> {
    wilson_candidates(n, d, true)
}

#[derive(Clone, Debug, Serialize)]
pub struct WilsonReport {
    pub n: usize,
    pub degree: u32,
    pub count: usize,
    pub rank: usize,
    pub dim: usize,
    /// every element has Milnor-operation weight `k - |I|`
    pub weights_match: bool,
    /// elements of weight `<= ω` span `F^ω` for every `ω`
    pub filtration_match: bool,
    pub pass: bool,
}

/// Checks that the candidates form a basis of `H^d(BO_n)` adapted to the
/// weight filtration.
pub fn verify_wilson_decomposition(
    n: usize,
    d: u32,
    admissible_only: bool,
) -> Result<WilsonReport> {
    let elems = wilson_candidates(n, d, admissible_only);
    let rows = partitions(d, n, d);
    let index: HashMap<&Partition, usize> = rows.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut vectors = Vec::with_capacity(elems.len());
    let mut weights_match = true;
    for e in &elems {
        let p = e.polynomial(n)?;
        weights_match &= weight_of_symmetric(&p)? == e.weight();
        let mut v = F2Vector::zeros(rows.len());
        for lam in monomial_coordinates(&p) {
            v.flip(
                *index
                    .get(&lam)
                    .ok_or_else(|| Error::internal("partition outside the basis"))?,
            );
        }
        vectors.push((v, e.weight()));
    }
    let rank = Subspace::spanned_by(rows.len(), vectors.iter().map(|(v, _)| v.clone())).dim();
    let mut filtration_match = true;
    for w in 0..=n {
        let span = Subspace::spanned_by(
            rows.len(),
            vectors
                .iter()
                .filter(|(_, x)| *x <= w)
                .map(|(v, _)| v.clone()),
        );
        let expected = Subspace::spanned_by(
            rows.len(),
            rows.iter()
                .enumerate()
                .filter(|(_, l)| l.odd_parts() <= w)
                .map(|(i, _)| F2Vector::unit(rows.len(), i)),
        );
        filtration_match &= span == expected;
    }
    let dim = rows.len();
    let pass = elems.len() == dim && rank == dim && weights_match && filtration_match;
    Ok(WilsonReport {
        n,
        degree: d,
        count: elems.len(),
        rank,
        dim,
        weights_match,
        filtration_match,
        pass,
    })
}
