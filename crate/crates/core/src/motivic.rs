//! Bigraded (motivic) mod 2 cohomology of `BO_n` and `BSO_n`.
//!
//! Every group is `τ`-free part plus `τ`-torsion. The `τ`-free part in
//! bidegree `(d, j)` is `F^{2j-d} H^d`, the weight filtration of the
//! topological ring. Torsion only occurs for `BSO_{2m}`, `m >= 2`, where it
//! is a module `Y_m` computed degree by degree from the cokernels of
//! `ι*: H*(BSO_{2k+1}) → H*(BSO_{2k})`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2linalg::{image, F2Matrix, F2Vector, Subspace};
use crate::polyring::{monomial_symmetric, partitions, F2Polynomial, Partition, WPolynomial};
use crate::rings::{iota_star, kappa_star, Boundary, Flavor, RingKind, RingPresentation};
use crate::weightfilt::{weight_of_symmetric, WeightEngine};

/// `ω = 2j - d`.
pub fn weight_index(d: u32, j: u32) -> i64 {
    2 * j as i64 - d as i64
}

/// A torsion class `c_2^{a_1} c_4^{a_2} ⋯ c_{2m}^{a_m} · y_{i,m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorsionClass {
    pub m: usize,
    pub i: usize,
    /// exponent of `c_{2r}` at index `r - 1`
    pub chern: Vec<u32>,
}

/// What a torsion class may be multiplied by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Tau,
    /// the Chern class `c_k`
    Chern(usize),
    Torsion(TorsionClass),
}

impl TorsionClass {
    pub fn generator(m: usize, i: usize) -> Result<Self> {
        if m < 2 || i + 2 > m {
            return Err(Error::input(format!(
                "y_{{{i},{m}}} needs m >= 2 and 0 <= i <= m - 2"
            )));
        }
        Ok(TorsionClass {
            m,
            i,
            chern: vec![0; m],
        })
    }

    pub fn bidegree(&self) -> (u32, u32) {
        let mut d = 2 * self.m as u32;
        let mut j = (self.i + self.m) as u32;
        for (r, &a) in self.chern.iter().enumerate() {
            let r = r as u32 + 1;
            d += 4 * r * a;
            j += 2 * r * a;
        }
        (d, j)
    }

    /// The product, or `None` when it vanishes: `τ`, the odd Chern classes,
    /// `c_k` with `k > 2m` and other torsion classes all annihilate `Y_m`.
    pub fn times(&self, f: &Factor) -> Option<TorsionClass> {
        match f {
            Factor::Chern(k) if k % 2 == 0 && *k >= 2 && *k <= 2 * self.m => {
                let mut out = self.clone();
                out.chern[k / 2 - 1] += 1;
                Some(out)
            }
            _ => None,
        }
    }

    /// Torsion classes vanish under realization.
    pub fn realization(&self) -> Option<WPolynomial> {
        None
    }
}

/// The closed-form module `Z/2[c_2, c_4, …, c_{2m}]{y_{0,m}, …, y_{m-2,m}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorsionModule {
    pub m: usize,
}

impl TorsionModule {
    pub fn new(m: usize) -> Self {
        TorsionModule { m }
    }

    /// Bidegrees of `y_{i,m}`: `(2m, i + m)`.
    pub fn generators(&self) -> Vec<(u32, u32)> {
        if self.m < 2 {
            return Vec::new();
        }
        (0..=self.m - 2)
            .map(|i| (2 * self.m as u32, (i + self.m) as u32))
            .collect()
    }

    /// Basis of the bidegree `(d, j)` part, by direct enumeration.
    pub fn basis(&self, d: u32, j: u32) -> Vec<TorsionClass> {
        let mut out = Vec::new();
        for (i, &(gd, gj)) in self.generators().iter().enumerate() {
            let (Some(rd), Some(rj)) = (d.checked_sub(gd), j.checked_sub(gj)) else {
                continue;
            };
            // every c_{2r} sits on the line twist = degree / 2
            if rd != 2 * rj || rd % 4 != 0 {
                continue;
            }
            for lam in partitions(rd / 4, rd as usize, self.m as u32) {
                let mut chern = vec![0; self.m];
                for &p in lam.parts() {
                    chern[p as usize - 1] += 1;
                }
                out.push(TorsionClass {
                    m: self.m,
                    i,
                    chern,
                });
            }
        }
        out
    }

    pub fn hilbert(&self, d: u32, j: u32) -> usize {
        self.basis(d, j).len()
    }
}

/// A class of the bigraded ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BigradedClass {
    /// `τ^e x̄` for a topological class `x` of the given weight.
    Free {
        degree: u32,
        weight: usize,
        tau: u32,
        class: WPolynomial,
    },
    Torsion(TorsionClass),
}

impl BigradedClass {
    pub fn degree(&self) -> u32 {
        match self {
            BigradedClass::Free { degree, .. } => *degree,
            BigradedClass::Torsion(t) => t.bidegree().0,
        }
    }

    /// A weight-`ω` class first appears at twist `⌈(d + ω)/2⌉`.
    pub fn twist(&self) -> u32 {
        match self {
            BigradedClass::Free {
                degree,
                weight,
                tau,
                ..
            } => (degree + *weight as u32).div_ceil(2) + tau,
            BigradedClass::Torsion(t) => t.bidegree().1,
        }
    }

    pub fn times_tau(&self) -> Option<BigradedClass> {
        match self {
            BigradedClass::Free {
                degree,
                weight,
                tau,
                class,
            } => Some(BigradedClass::Free {
                degree: *degree,
                weight: *weight,
                tau: tau + 1,
                class: class.clone(),
            }),
            BigradedClass::Torsion(t) => t.times(&Factor::Tau).map(BigradedClass::Torsion),
        }
    }

    pub fn realization(&self) -> Option<WPolynomial> {
        match self {
            BigradedClass::Free { class, .. } => Some(class.clone()),
            BigradedClass::Torsion(t) => t.realization(),
        }
    }
}

/// Dimensions of `\bar Y` and `Y` for one `m`, with the intermediate
/// cokernels, over degrees `0..=max_degree`.
#[derive(Clone, Debug, Serialize)]
pub struct TorsionTable {
    pub m: usize,
    pub max_degree: u32,
    /// `(d, j) -> dim Y_m^{d,j}`, nonzero entries only
    pub y: BTreeMap<(u32, u32), usize>,
    /// `(d, j) -> dim \bar Y_m^{d,j}`, nonzero entries only
    pub y_bar: BTreeMap<(u32, u32), usize>,
}

impl TorsionTable {
    pub fn y(&self, d: u32, j: u32) -> usize {
        self.y.get(&(d, j)).copied().unwrap_or(0)
    }

    pub fn y_bar(&self, d: u32, j: u32) -> usize {
        self.y_bar.get(&(d, j)).copied().unwrap_or(0)
    }

    fn zero(m: usize, max_degree: u32) -> Self {
        TorsionTable {
            m,
            max_degree,
            y: BTreeMap::new(),
            y_bar: BTreeMap::new(),
        }
    }
}

/// Bidegrees `(d, j)` with `d <= max_degree` and `0 <= 2j - d <= d + 2`.
fn bidegrees(max_degree: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=max_degree).flat_map(|d| (d.div_ceil(2)..=d + 1).map(move |j| (d, j)))
}

/// `dim coker(ι*: F^ω H^d(BSO_{2k+1}) → F^ω H^d(BSO_{2k}))`.
pub fn coker_iota_dim(engine: &mut WeightEngine, k: usize, d: u32, omega: i64) -> Result<usize> {
    if omega < 0 {
        return Ok(0);
    }
    let f = iota_star(2 * k + 1, Flavor::SO)?;
    let m = engine.map_matrix(&f, d)?;
    let src = engine.weighted_basis(f.source(), d)?.filtration(omega);
    let tgt = engine.weighted_basis(f.target(), d)?.filtration(omega);
    let img = image(&m, &src);
    if !tgt.contains_subspace(&img) {
        return Err(Error::verification(format!(
            "ι*_{} raises weight in degree {d}",
            2 * k + 1
        )));
    }
    Ok(tgt.dim() - img.dim())
}

/// A basis of the cokernel of `ι*` on `F^ω`, by representatives in
/// `H^d(BSO_{2m})`. Representatives divisible by `w_{2m}` are preferred
/// and flagged.
#[derive(Clone, Debug)]
pub struct CokerBasis {
    pub degree: u32,
    pub twist: u32,
    pub reps: Vec<(WPolynomial, bool)>,
}

/// `coker_iota_odd`: the cokernel of `ι*: F^ω H^d(BSO_{2m+1}) → F^ω H^d(BSO_{2m})`
/// with `ω = 2j - d`.
pub fn coker_iota_odd(engine: &mut WeightEngine, m: usize, d: u32, j: u32) -> Result<CokerBasis> {
    let omega = weight_index(d, j);
    let mut reps = Vec::new();
    if omega >= 0 {
        let f = iota_star(2 * m + 1, Flavor::SO)?;
        let mat = engine.map_matrix(&f, d)?;
        let src = engine.weighted_basis(f.source(), d)?.filtration(omega);
        let tgt = engine.weighted_basis(f.target(), d)?.filtration(omega);
        let piece = engine.piece(f.target(), d)?;
        let mut span = image(&mat, &src);
        let top = 2 * m as u32;
        let mut divisible = Subspace::zero(piece.dim());
        if d >= top {
            let w = WPolynomial::w(2 * m, 2 * m)?;
            for z in RingPresentation::bso(2 * m).monomials(d - top) {
                let zp = WPolynomial::from_poly(F2Polynomial::monomial(z));
                divisible.insert(piece.coords(&w.mul(&zp)?)?);
            }
        }
        let divisible_in_f = intersect(&divisible, &tgt);
        for (vs, flag) in [
            (divisible_in_f.basis().to_vec(), true),
            (tgt.basis().to_vec(), false),
        ] {
            for v in vs {
                if span.insert(v.clone()) {
                    reps.push((piece.element(&v), flag));
                }
            }
        }
    }
    Ok(CokerBasis {
        degree: d,
        twist: j,
        reps,
    })
}

fn intersect(a: &Subspace, b: &Subspace) -> Subspace {
    // a ∩ b = kernel of [A | B] projected to the A part
    let n = a.ambient();
    let mut cols: Vec<F2Vector> = a.basis().to_vec();
    cols.extend(b.basis().iter().cloned());
    let m = F2Matrix::from_columns(n, &cols);
    let ka = a.dim();
    let mut out = Subspace::zero(n);
    for k in m.kernel_basis() {
        let mut v = F2Vector::zeros(n);
        for i in k.support().filter(|&i| i < ka) {
            v.add_assign(&a.basis()[i]);
        }
        out.insert(v);
    }
    out
}

/// `Y_m` from `Y_1 = 0` by the recursion
/// `\bar Y_{k+1}^{d,j} = Y_k^{d-2,j-1} ⊕ coker(ι*_{2k+1})^{d-2,j-1}` and
/// `Y_{k+1} = ⊕_a c_{2k+2}^a \bar Y_{k+1}`.
pub fn compute_y(engine: &mut WeightEngine, m: usize, max_degree: u32) -> Result<TorsionTable> {
    if m == 0 {
        return Err(Error::input("m must be positive"));
    }
    let mut prev = TorsionTable::zero(1, max_degree);
    for k in 1..m {
        prev = step_y(engine, &prev, k, max_degree)?;
    }
    Ok(prev)
}

fn step_y(
    engine: &mut WeightEngine,
    prev: &TorsionTable,
    k: usize,
    max_degree: u32,
) -> Result<TorsionTable> {
    let mut next = TorsionTable::zero(k + 1, max_degree);
    for (d, j) in bidegrees(max_degree) {
        if d < 2 {
            continue;
        }
        let (d2, j2) = (d - 2, j - 1);
        let c = coker_iota_dim(engine, k, d2, weight_index(d2, j2))?;
        let v = prev.y(d2, j2) + c;
        if v > 0 {
            next.y_bar.insert((d, j), v);
        }
    }
    let (cd, cj) = (4 * (k as u32 + 1), 2 * (k as u32 + 1));
    for (d, j) in bidegrees(max_degree) {
        let mut total = 0;
        let (mut dd, mut jj) = (d, j);
        loop {
            total += next.y_bar(dd, jj);
            if dd < cd || jj < cj {
                break;
            }
            dd -= cd;
            jj -= cj;
        }
        if total > 0 {
            next.y.insert((d, j), total);
        }
    }
    Ok(next)
}

/// `\bar Y_{k+1}` the other way: the cokernel of the boundary
/// `δ: F^{ω+1}(H^{d-1}(BO_{2k+1})/c_1) → F^ω H^{d-2}(BSO_{2k})` plus `Y_k^{d-2,j-1}`.
pub fn y_bar_via_boundary(
    engine: &mut WeightEngine,
    prev: &TorsionTable,
    k: usize,
    d: u32,
    j: u32,
) -> Result<usize> {
    if d < 2 {
        return Ok(0);
    }
    let omega = weight_index(d, j);
    if omega < 0 {
        return Ok(0);
    }
    let target = engine
        .weighted_basis(&RingPresentation::bso(2 * k), d - 2)?
        .filtration(omega);
    let bd = Boundary::new(2 * k + 2, d - 1)?;
    let src_ring = bd.source().ring().clone();
    let src = engine
        .weighted_basis(&src_ring, d - 1)?
        .filtration(omega + 1);
    let img = image(bd.matrix(), &src);
    if !target.contains_subspace(&img) {
        return Err(Error::verification(format!(
            "δ does not lower weight by one in degree {}",
            d - 1
        )));
    }
    Ok(target.dim() - img.dim() + prev.y(d - 2, j - 1))
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremEntry {
    pub degree: u32,
    pub twist: u32,
    pub computed: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub m: usize,
    pub max_degree: u32,
    /// every bidegree of every step agrees between the two computations of `\bar Y`
    pub routes_agree: bool,
    pub mismatches: Vec<TheoremEntry>,
    pub nonzero: Vec<TheoremEntry>,
    pub pass: bool,
}

/// Computes `Y_m` both ways through every step and compares with the
/// closed form, for `d <= max_degree` and `ceil(d/2) <= j <= d`.
pub fn verify_main_theorem(m: usize, max_degree: u32) -> Result<TheoremReport> {
    let mut engine = WeightEngine::new();
    let mut prev = TorsionTable::zero(1, max_degree);
    let mut routes_agree = true;
    for k in 1..m {
        let next = step_y(&mut engine, &prev, k, max_degree)?;
        for (d, j) in bidegrees(max_degree) {
            routes_agree &= y_bar_via_boundary(&mut engine, &prev, k, d, j)? == next.y_bar(d, j);
        }
        prev = next;
    }
    Ok(compare_with_closed_form(
        m,
        max_degree,
        routes_agree,
        |d, j| prev.y(d, j),
    ))
}

fn compare_with_closed_form(
    m: usize,
    max_degree: u32,
    routes_agree: bool,
    computed: impl Fn(u32, u32) -> usize,
) -> TheoremReport {
    let module = TorsionModule::new(m);
    let mut mismatches = Vec::new();
    let mut nonzero = Vec::new();
    for d in 0..=max_degree {
        for j in d.div_ceil(2)..=d {
            let e = TheoremEntry {
                degree: d,
                twist: j,
                computed: computed(d, j),
                expected: module.hilbert(d, j),
            };
            if e.computed != e.expected {
                mismatches.push(e.clone());
            }
            if e.computed > 0 || e.expected > 0 {
                nonzero.push(e);
            }
        }
    }
    let pass = routes_agree && mismatches.is_empty();
    TheoremReport {
        m,
        max_degree,
        routes_agree,
        mismatches,
        nonzero,
        pass,
    }
}

/// The recursion with the weight bookkeeping dropped: each class of
/// `Y_k ⊕ coker` is taken as a free generator over `Z/2[c_2, …, c_{2k+2}]`.
/// Does not reproduce the closed form.
pub fn verify_main_theorem_without_weight_comparison(
    m: usize,
    max_degree: u32,
) -> Result<TheoremReport> {
    let mut engine = WeightEngine::new();
    let mut prev = TorsionTable::zero(1, max_degree);
    for k in 1..m {
        let mut gens: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for (d, j) in bidegrees(max_degree) {
            if d < 2 {
                continue;
            }
            let c = coker_iota_dim(&mut engine, k, d - 2, weight_index(d - 2, j - 1))?;
            let v = prev.y(d - 2, j - 1) + c;
            if v > 0 {
                gens.insert((d, j), v);
            }
        }
        let mut next = TorsionTable::zero(k + 1, max_degree);
        for (d, j) in bidegrees(max_degree) {
            let mut total = 0;
            for (&(gd, gj), &g) in &gens {
                let (Some(rd), Some(rj)) = (d.checked_sub(gd), j.checked_sub(gj)) else {
                    continue;
                };
                if rd == 2 * rj && rd % 4 == 0 {
                    total += g * partitions(rd / 4, rd as usize, k as u32 + 1).len();
                }
            }
            if total > 0 {
                next.y.insert((d, j), total);
            }
        }
        prev = next;
    }
    Ok(compare_with_closed_form(m, max_degree, true, |d, j| {
        prev.y(d, j)
    }))
}

/// The torsion part of a supported group.
#[derive(Clone, Debug)]
pub enum Torsion {
    None,
    /// `Y_m` for `BSO_{2m}`
    Full(TorsionTable),
    /// `\bar Y_m` for `BSO_{2m}` modulo `c_{2m}`
    Reduced(TorsionTable),
}

impl Torsion {
    pub fn dim(&self, d: u32, j: u32) -> usize {
        match self {
            Torsion::None => 0,
            Torsion::Full(t) => t.y(d, j),
            Torsion::Reduced(t) => t.y_bar(d, j),
        }
    }
}

/// The torsion of `ring` up to `max_degree`.
pub fn torsion_for(
    engine: &mut WeightEngine,
    ring: &RingPresentation,
    max_degree: u32,
) -> Result<Torsion> {
    let n = ring.n();
    if ring.kind() != RingKind::Bso || n % 2 == 1 || n < 4 {
        return Ok(Torsion::None);
    }
    let t = compute_y(engine, n / 2, max_degree)?;
    match ring.quotient() {
        None => Ok(Torsion::Full(t)),
        Some(q) if q.chern_index == n => Ok(Torsion::Reduced(t)),
        Some(_) => Err(Error::input(format!("no torsion model for {ring}"))),
    }
}

/// `dim H^{d,j}` of `ring`: `dim F^{2j-d} H^d` plus torsion.
pub fn motivic_dim(ring: &RingPresentation, d: u32, j: u32) -> Result<usize> {
    let mut engine = WeightEngine::new();
    let t = torsion_for(&mut engine, ring, d)?;
    let free = engine
        .weighted_basis(ring, d)?
        .dim_at_most(weight_index(d, j));
    Ok(free + t.dim(d, j))
}

/// The realization `H^{d,j} → H^d` as a matrix: `F^{2j-d}` includes, torsion
/// columns are zero.
pub fn realization_matrix(ring: &RingPresentation, d: u32, j: u32) -> Result<F2Matrix> {
    let mut engine = WeightEngine::new();
    let t = torsion_for(&mut engine, ring, d)?;
    let wb = engine.weighted_basis(ring, d)?;
    let omega = weight_index(d, j);
    let mut cols: Vec<F2Vector> = wb
        .entries()
        .iter()
        .filter(|e| e.weight as i64 <= omega)
        .map(|e| e.coords.clone())
        .collect();
    cols.extend((0..t.dim(d, j)).map(|_| F2Vector::zeros(wb.dim())));
    Ok(F2Matrix::from_columns(wb.dim(), &cols))
}

#[derive(Clone, Debug, Serialize)]
pub struct DimEntry {
    pub degree: u32,
    pub twist: u32,
    pub dim: usize,
    pub torsion_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimTable {
    pub group: String,
    pub entries: Vec<DimEntry>,
}

/// Dimensions for `d <= max_degree` and `ceil(d/2) <= j <= min(d, max_twist)`.
pub fn dimension_table(
    ring: &RingPresentation,
    max_degree: u32,
    max_twist: Option<u32>,
) -> Result<DimTable> {
    let mut engine = WeightEngine::new();
    let t = torsion_for(&mut engine, ring, max_degree)?;
    let mut entries = Vec::new();
    for d in 0..=max_degree {
        let wb = engine.weighted_basis(ring, d)?;
        let top = max_twist.map_or(d, |m| m.min(d));
        for j in d.div_ceil(2)..=top {
            let torsion = t.dim(d, j);
            entries.push(DimEntry {
                degree: d,
                twist: j,
                dim: wb.dim_at_most(weight_index(d, j)) + torsion,
                torsion_dim: torsion,
            });
        }
    }
    Ok(DimTable {
        group: ring.group_name(),
        entries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SesEntry {
    pub degree: u32,
    pub weight: i64,
    pub left: usize,
    pub middle: usize,
    pub right: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SesReport {
    pub m: usize,
    pub entries: Vec<SesEntry>,
    pub pass: bool,
}

/// The weight-filtered sequence
/// `0 → F^ω(H^d(BSO_{2m+1})/c) → F^ω(H^d(BO_{2m})/c_1) → F^{ω-1} H^{d-1}(BSO_{2m-1}) → 0`
/// for every `ω`, checked for exactness.
pub fn ses_odd(m: usize, max_degree: u32) -> Result<SesReport> {
    if m == 0 {
        return Err(Error::input("m must be positive"));
    }
    let mut engine = WeightEngine::new();
    let kappa = kappa_star(2 * m + 1)?;
    let mut entries = Vec::new();
    for d in 0..=max_degree {
        let km = engine.map_matrix(&kappa, d)?;
        let bd = Boundary::new(2 * m + 1, d)?;
        let a_wb = engine.weighted_basis(kappa.source(), d)?;
        let b_wb = engine.weighted_basis(kappa.target(), d)?;
        let c_wb = if d >= 1 {
            Some(engine.weighted_basis(&RingPresentation::bso(2 * m - 1), d - 1)?)
        } else {
            None
        };
        for omega in 0..=(d as i64 + 1) {
            let a = a_wb.filtration(omega);
            let b = b_wb.filtration(omega);
            let c = c_wb
                .as_ref()
                .map_or(Subspace::zero(0), |w| w.filtration(omega - 1));
            let ka = image(&km, &a);
            let db = image(bd.matrix(), &b);
            let exact = ka.dim() == a.dim()
                && b.contains_subspace(&ka)
                && db == c
                && bd
                    .matrix()
                    .mul(&F2Matrix::from_columns(km.rows(), ka.basis()))?
                    .is_zero()
                && a.dim() + c.dim() == b.dim();
            entries.push(SesEntry {
                degree: d,
                weight: omega,
                left: a.dim(),
                middle: b.dim(),
                right: c.dim(),
                exact,
            });
        }
    }
    let pass = entries.iter().all(|e| e.exact);
    Ok(SesReport { m, entries, pass })
}

/// The unfiltered localization sequence
/// `0 → H^d(BSO_n)/c_n → H^d(BO_{n-1})/c_1 → H^{d-1}(BSO_{n-2}) → 0`.
pub fn verify_topological_exactness(n: usize, max_degree: u32) -> Result<bool> {
    let mut engine = WeightEngine::new();
    let kappa = kappa_star(n)?;
    for d in 0..=max_degree {
        let km = engine.map_matrix(&kappa, d)?;
        let bd = Boundary::new(n, d)?;
        let comp = bd.matrix().mul(&km)?;
        let ok = comp.is_zero()
            && km.rank() == km.cols()
            && bd.matrix().rank() == bd.matrix().rows()
            && km.rank() + bd.matrix().rank() == km.rows();
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComparisonCase {
    /// `z` all even: weights `(2m, 2m - 2)`
    AllEven,
    /// `z = m[2i+1]`: both `2m - 1`
    SingleOdd,
    /// `z = m[2i+1, 2l+1]`: top `2m - 2`, mixed larger
    TwoOdd,
    /// anything else: top `<=` mixed
    General,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonEntry {
    pub z: String,
    pub case: ComparisonCase,
    pub weight_top: usize,
    pub weight_mixed: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub m: usize,
    pub entries: Vec<ComparisonEntry>,
    /// the all-even, single-odd and two-odd cases
    pub special_cases_pass: bool,
    /// `weight(z w_{2m}) <= weight(z w_1 w_{2m-1})` for the remaining `z`
    pub general_inequality_pass: bool,
    pub pass: bool,
}

impl ComparisonReport {
    pub fn failures(&self) -> impl Iterator<Item = &ComparisonEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }
}

/// Weights in `H*(BO_{2m})` of `z·w_{2m}` (top) and `z·w_1 w_{2m-1}` (mixed)
/// for every `z = m[μ]` with `|μ| <= max_degree - 2m`; see [`ComparisonCase`]
/// for what is expected of each `z`.
pub fn verify_weight_comparison(m: usize, max_degree: u32) -> Result<ComparisonReport> {
    if m == 0 {
        return Err(Error::input("m must be positive"));
    }
    let n = 2 * m;
    let top = monomial_symmetric(&Partition::ones(n), n)?;
    let mixed = monomial_symmetric(&Partition::ones(1), n)?
        .mul(&monomial_symmetric(&Partition::ones(n - 1), n)?)?;
    let mut entries = Vec::new();
    let bound = max_degree.saturating_sub(n as u32);
    for d in 0..=bound {
        for mu in partitions(d, n, d) {
            let z = monomial_symmetric(&mu, n)?;
            let a = weight_of_symmetric(&z.mul(&top)?)?;
            let b = weight_of_symmetric(&z.mul(&mixed)?)?;
            let odd = mu.odd_parts();
            let (case, ok) = if mu.all_even() {
                (ComparisonCase::AllEven, (a, b) == (n, n - 2))
            } else if mu.length() == 1 {
                (ComparisonCase::SingleOdd, a == n - 1 && b == n - 1)
            } else if mu.length() == 2 && odd == 2 {
                (ComparisonCase::TwoOdd, a == n - 2 && b > n - 2)
            } else {
                (ComparisonCase::General, a <= b)
            };
            entries.push(ComparisonEntry {
                z: format!("m{mu}"),
                case,
                weight_top: a,
                weight_mixed: b,
                ok,
            });
        }
    }
    let special_cases_pass = entries
        .iter()
        .filter(|e| e.case != ComparisonCase::General)
        .all(|e| e.ok);
    let general_inequality_pass = entries
        .iter()
        .filter(|e| e.case == ComparisonCase::General)
        .all(|e| e.ok);
    Ok(ComparisonReport {
        m,
        entries,
        special_cases_pass,
        general_inequality_pass,
        pass: special_cases_pass && general_inequality_pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionSanityReport {
    pub m: usize,
    pub max_degree: u32,
    /// computed classes in degree `2m`, by twist
    pub bottom_twists: Vec<u32>,
    /// every computed class has twist `<= degree - 2`
    pub below_diagonal: bool,
    /// the computed classes in degree `2m` sit exactly at the generators `(2m, i+m)`
    pub generator_law: bool,
    /// `τ`, odd Chern classes and torsion classes annihilate every basis class;
    /// `c_{2r}` moves it by `(4r, 2r)`
    pub products: bool,
    pub pass: bool,
}

/// Structural checks on the computed `Y_m`.
pub fn verify_torsion_sanity(m: usize, max_degree: u32) -> Result<TorsionSanityReport> {
    let mut engine = WeightEngine::new();
    let t = compute_y(&mut engine, m, max_degree)?;
    let module = TorsionModule::new(m);
    let bottom = 2 * m as u32;
    let mut bottom_twists: Vec<u32> = Vec::new();
    for (&(d, j), &v) in &t.y {
        if d == bottom {
            bottom_twists.extend(std::iter::repeat_n(j, v));
        }
    }
    let below_diagonal = t.y.keys().all(|&(d, j)| j + 2 <= d);
    let generator_law =
        bottom_twists == module.generators().iter().map(|g| g.1).collect::<Vec<_>>();
    let mut products = true;
    for d in 0..=max_degree {
        for j in d.div_ceil(2)..=d {
            for y in module.basis(d, j) {
                products &= y.times(&Factor::Tau).is_none();
                products &= y.times(&Factor::Torsion(y.clone())).is_none();
                for k in 1..=2 * m + 2 {
                    let p = y.times(&Factor::Chern(k));
                    if k % 2 == 0 && k <= 2 * m {
                        let r = (k / 2) as u32;
                        products &= p.map(|c| c.bidegree()) == Some((d + 4 * r, j + 2 * r));
                    } else {
                        products &= p.is_none();
                    }
                }
            }
        }
    }
    let pass = below_diagonal && generator_law && products;
    Ok(TorsionSanityReport {
        m,
        max_degree,
        bottom_twists,
        below_diagonal,
        generator_law,
        products,
        pass,
    })
}
