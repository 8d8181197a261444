//! Presented cohomology rings and the maps between them.
//!
//! Every ring here is a quotient of a polynomial ring in Stiefel-Whitney
//! classes. Elements are [`WPolynomial`]s of rank `n` whose slot `i`
//! holds `w_{i+1}`:
//!
//! * `bo:N`  is `Z/2[w_1..w_N]`,
//! * `bso:N` is `Z/2[w_2..w_N]` (slot 0 unused),
//! * `ext:N` is `Z/2[w_2..w_N]{1, x}` with `x` of degree 1 in slot 0 and `x^2 = 0`,
//!
//! optionally divided by a Chern class `c_i = w_i^2`. Each graded piece
//! is realized as a GF(2) vector space with an explicit basis, so every
//! ring map becomes a matrix per degree.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2linalg::{F2Matrix, F2Vector, Subspace};
use crate::polyring::{partitions, ExponentVector, F2Polynomial, Partition, WPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    /// `H*(BO_n)`
    Bo,
    /// `H*(BSO_n)`
    Bso,
    /// `H*(BSO_n){1, x}` with `x` in degree 1 and `x^2 = 0`
    Exterior,
}

/// The Chern class a presentation is divided by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quotient {
    pub chern_index: usize,
    /// `w_i^2`, the topological image of `c_i`.
    pub class: WPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    kind: RingKind,
    n: usize,
    quotient: Option<Quotient>,
}

impl RingPresentation {
    pub fn bo(n: usize) -> Self {
        assert!(n >= 1, "BO_0 is a point; use n >= 1");
        RingPresentation {
            kind: RingKind::Bo,
            n,
            quotient: None,
        }
    }

    /// `H*(BSO_n)`; `n = 1` is the point.
    pub fn bso(n: usize) -> Self {
        assert!(n >= 1, "use n >= 1");
        RingPresentation {
            kind: RingKind::Bso,
            n,
            quotient: None,
        }
    }

    pub fn exterior(n: usize) -> Self {
        assert!(n >= 1, "use n >= 1");
        RingPresentation {
            kind: RingKind::Exterior,
            n,
            quotient: None,
        }
    }

    /// Divides by `c_i`, realized as `w_i^2`.
    pub fn modulo_chern(&self, i: usize) -> Result<Self> {
        if self.quotient.is_some() {
            return Err(Error::input("presentation is already a quotient"));
        }
        if !self.generator_indices().contains(&i) || (self.kind == RingKind::Exterior && i == 1) {
            return Err(Error::input(format!("c{i} is not a Chern class of {self}")));
        }
        let w = WPolynomial::w(self.n, i)?;
        let class = w.mul(&w)?;
        Ok(RingPresentation {
            kind: self.kind,
            n: self.n,
            quotient: Some(Quotient {
                chern_index: i,
                class,
            }),
        })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn quotient(&self) -> Option<&Quotient> {
        self.quotient.as_ref()
    }

    /// The presentation without its quotient.
    pub fn free(&self) -> RingPresentation {
        RingPresentation {
            kind: self.kind,
            n: self.n,
            quotient: None,
        }
    }

    /// Indices `i` of the generators `w_i` (1 stands for `x` in the exterior case).
    pub fn generator_indices(&self) -> Vec<usize> {
        match self.kind {
            RingKind::Bo | RingKind::Exterior => (1..=self.n).collect(),
            RingKind::Bso => (2..=self.n).collect(),
        }
    }

    /// Parses `bo:N`, `bso:N`, `ext:N`, each with an optional `/cK`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (base, quot) = match s.split_once('/') {
            Some((b, q)) => (b.trim(), Some(q.trim())),
            None => (s, None),
        };
        let (kind, rest) = base.split_once(':').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected bo:N or bso:N, got {s:?}"),
        })?;
        let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
            pos: kind.len() + 1,
            msg: format!("bad rank {rest:?}"),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                pos: kind.len() + 1,
                msg: "rank must be positive".into(),
            });
        }
        let ring = match kind.trim().to_ascii_lowercase().as_str() {
            "bo" => RingPresentation::bo(n),
            "bso" => RingPresentation::bso(n),
            "ext" => RingPresentation::exterior(n),
            other => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown group {other:?}"),
                })
            }
        };
        match quot {
            None => Ok(ring),
            Some(q) => {
                let pos = base.len() + 1;
                let idx = q
                    .strip_prefix('c')
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse {
                        pos,
                        msg: format!("expected cK after '/', got {q:?}"),
                    })?;
                ring.modulo_chern(idx).map_err(|e| Error::Parse {
                    pos,
                    msg: e.to_string(),
                })
            }
        }
    }

    /// Human-readable group name, e.g. `BSO_6` or `BO_3/c1`.
    pub fn group_name(&self) -> String {
        let base = match self.kind {
            RingKind::Bo => format!("BO_{}", self.n),
            RingKind::Bso => format!("BSO_{}", self.n),
            RingKind::Exterior => format!("BSO_{}{{1,x}}", self.n),
        };
        match &self.quotient {
            Some(q) => format!("{base}/c{}", q.chern_index),
            None => base,
        }
    }

    /// Monomials of degree `d` of the free (unquotiented) ring.
    pub fn monomials(&self, d: u32) -> Vec<ExponentVector> {
        let min_part = if self.kind == RingKind::Bo { 1 } else { 2 };
        let base = |d: u32| -> Vec<Partition> {
            partitions(d, d as usize, self.n as u32)
                .into_iter()
                .filter(|p| p.parts().iter().all(|&a| a as usize >= min_part))
                .collect()
        };
        let to_exp = |p: &Partition, x: u16| {
            let mut e = ExponentVector::zeros(self.n);
            for &a in p.parts() {
                e.set(a as usize - 1, e.get(a as usize - 1) + 1);
            }
            if x > 0 {
                e.set(0, x);
            }
            e
        };
        let mut out: Vec<ExponentVector> = base(d).iter().map(|p| to_exp(p, 0)).collect();
        if self.kind == RingKind::Exterior && d >= 1 {
            out.extend(base(d - 1).iter().map(|p| to_exp(p, 1)));
        }
        out
    }

    /// Imposes `x^2 = 0` in the exterior case; identity otherwise.
    pub fn normalize(&self, p: F2Polynomial) -> F2Polynomial {
        match self.kind {
            RingKind::Exterior => p.filter(|t| t.get(0) <= 1),
            _ => p,
        }
    }

    pub fn contains(&self, p: &WPolynomial) -> bool {
        p.rank() == self.n
            && p.terms().iter().all(|t| match self.kind {
                RingKind::Bo => true,
                RingKind::Bso => t.get(0) == 0,
                RingKind::Exterior => t.get(0) <= 1,
            })
    }

    /// The degree-`d` piece, with a basis of coset representatives when
    /// the presentation is a quotient.
    pub fn piece(&self, d: u32) -> Result<GradedPiece> {
        GradedPiece::new(self, d)
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.kind {
            RingKind::Bo => "bo",
            RingKind::Bso => "bso",
            RingKind::Exterior => "ext",
        };
        write!(f, "{base}:{}", self.n)?;
        if let Some(q) = &self.quotient {
            write!(f, "/c{}", q.chern_index)?;
        }
        Ok(())
    }
}

/// One graded piece of a presented ring as an explicit vector space.
///
/// Coordinates are taken in `reps`, a set of monomials complementary to
/// the ideal generated by the quotient class. The complement is the set
/// of non-pivot columns of the reduced echelon basis of the ideal, so it
/// is the same on every run.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    ring: RingPresentation,
    degree: u32,
    monomials: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
    ideal: Subspace,
    reps: Vec<usize>,
    rep_pos: Vec<Option<usize>>,
}

impl GradedPiece {
    fn new(ring: &RingPresentation, d: u32) -> Result<Self> {
        let monomials = ring.monomials(d);
        let index: HashMap<ExponentVector, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let ambient = monomials.len();
        let mut ideal = Subspace::zero(ambient);
        if let Some(q) = &ring.quotient {
            let e = q.class.degree().expect("nonzero class");
            if d >= e {
                let lower = ring.monomials(d - e);
                for m in &lower {
                    let prod = ring.normalize(q.class.poly().mul_monomial(m));
                    let v = coords_in(&index, ambient, &prod)?;
                    if !ideal.insert(v) {
                        return Err(Error::verification(format!(
                            "c{} is a zero-divisor in degree {d} of {}",
                            q.chern_index,
                            ring.free()
                        )));
                    }
                }
            }
        }
        let reps = ideal.complement_indices();
        let mut rep_pos = vec![None; ambient];
        for (i, &r) in reps.iter().enumerate() {
            rep_pos[r] = Some(i);
        }
        Ok(GradedPiece {
            ring: ring.clone(),
            degree: d,
            monomials,
            index,
            ideal,
            reps,
            rep_pos,
        })
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Dimension of the piece (of the quotient, when there is one).
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Dimension before dividing by the quotient class.
    pub fn ambient_dim(&self) -> usize {
        self.monomials.len()
    }

    /// Dimension of the ideal generated by the quotient class in this degree.
    pub fn ideal_dim(&self) -> usize {
        self.ideal.dim()
    }

    /// The `i`-th coset representative.
    pub fn rep(&self, i: usize) -> WPolynomial {
        WPolynomial::from_poly(F2Polynomial::monomial(self.monomials[self.reps[i]].clone()))
    }

    pub fn reps(&self) -> Vec<WPolynomial> {
        (0..self.dim()).map(|i| self.rep(i)).collect()
    }

    /// Coordinates in the free monomial basis, before reduction.
    pub fn ambient_coords(&self, p: &WPolynomial) -> Result<F2Vector> {
        let p = self.ring.normalize(p.poly().clone());
        coords_in(&self.index, self.monomials.len(), &p)
    }

    /// Coordinates of the coset of `p` in the representative basis.
    pub fn coords(&self, p: &WPolynomial) -> Result<F2Vector> {
        let v = self.ambient_coords(p)?;
        Ok(self.reduce_ambient(&v))
    }

    pub(crate) fn reduce_ambient(&self, v: &F2Vector) -> F2Vector {
        let r = self.ideal.reduce(v);
        let mut out = F2Vector::zeros(self.reps.len());
        for i in r.support() {
            let pos = self.rep_pos[i].expect("reduced vectors vanish on pivots");
            out.set(pos, true);
        }
        out
    }

    /// The element with the given coordinates, as a sum of representatives.
    pub fn element(&self, v: &F2Vector) -> WPolynomial {
        assert_eq!(v.len(), self.dim());
        let terms = v.support().map(|i| self.monomials[self.reps[i]].clone());
        WPolynomial::from_poly(F2Polynomial::from_terms(self.ring.n, terms))
    }

    /// True iff the class of `p` lies in the ideal, i.e. vanishes here.
    pub fn is_zero_class(&self, p: &WPolynomial) -> Result<bool> {
        Ok(self.coords(p)?.is_zero())
    }
}

fn coords_in(
    index: &HashMap<ExponentVector, usize>,
    ambient: usize,
    p: &F2Polynomial,
) -> Result<F2Vector> {
    let mut v = F2Vector::zeros(ambient);
    for t in p.terms() {
        let i = index.get(t).ok_or_else(|| {
            Error::input(format!("term {t:?} does not belong to this graded piece"))
        })?;
        v.flip(*i);
    }
    Ok(v)
}

/// `quotient_basis`: coset representatives for the degree-`d` piece.
pub fn quotient_basis(ring: &RingPresentation, d: u32) -> Result<GradedPiece> {
    ring.piece(d)
}

/// A ring homomorphism given by the images of the generators.
#[derive(Clone, Debug)]
pub struct RingMap {
    name: String,
    source: RingPresentation,
    target: RingPresentation,
    images: Vec<F2Polynomial>,
}

impl RingMap {
    /// `images[i]` is the image of source slot `i` (`w_{i+1}`, or `x` for slot 0
    /// of an exterior ring). Checks degrees and, for a quotient source, that
    /// the quotient class lands in the target's ideal.
    pub fn new(
        name: impl Into<String>,
        source: RingPresentation,
        target: RingPresentation,
        images: Vec<WPolynomial>,
    ) -> Result<Self> {
        if images.len() != source.n() {
            return Err(Error::input("one image per source slot is required"));
        }
        let gens = source.generator_indices();
        for (slot, img) in images.iter().enumerate() {
            if !target.contains(img) {
                return Err(Error::input(format!(
                    "image of slot {slot} is not an element of {target}"
                )));
            }
            if gens.contains(&(slot + 1)) {
                let d = slot as u32 + 1;
                if !img.is_zero() && (!img.is_homogeneous() || img.degree() != Some(d)) {
                    return Err(Error::input(format!(
                        "image of generator {} is not of degree {d}",
                        slot + 1
                    )));
                }
            }
        }
        let map = RingMap {
            name: name.into(),
            images: images.into_iter().map(WPolynomial::into_poly).collect(),
            source,
            target,
        };
        if let Some(q) = map.source.quotient() {
            let img = map.apply(&q.class)?;
            let d = q.class.degree().expect("nonzero");
            if !map.target.piece(d)?.is_zero_class(&img)? {
                return Err(Error::input(format!(
                    "{}: image of c{} is not in the ideal of {}",
                    map.name, q.chern_index, map.target
                )));
            }
        }
        Ok(map)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &RingPresentation {
        &self.source
    }

    pub fn target(&self) -> &RingPresentation {
        &self.target
    }

    pub fn image_of_generator(&self, i: usize) -> WPolynomial {
        WPolynomial::from_poly(self.images[i - 1].clone())
    }

    /// Image of a polynomial representative (not reduced modulo the target quotient).
    pub fn apply(&self, p: &WPolynomial) -> Result<WPolynomial> {
        let p = p.with_rank(self.source.n())?;
        if !self.source.contains(&p) {
            return Err(Error::input(format!(
                "{p:?} is not an element of {}",
                self.source
            )));
        }
        let out = p.substitute(&self.images, self.target.n());
        Ok(WPolynomial::from_poly(self.target.normalize(out)))
    }

    /// Image reduced to the target's representative basis.
    pub fn apply_reduced(&self, p: &WPolynomial) -> Result<WPolynomial> {
        let img = self.apply(p)?;
        match img.degree() {
            None => Ok(img),
            Some(d) => {
                let piece = self.target.piece(d)?;
                Ok(piece.element(&piece.coords(&img)?))
            }
        }
    }

    /// The matrix of the map in degree `d`, between representative bases.
    pub fn matrix(&self, d: u32) -> Result<F2Matrix> {
        let src = self.source.piece(d)?;
        let tgt = self.target.piece(d)?;
        self.matrix_between(&src, &tgt)
    }

    pub(crate) fn matrix_between(&self, src: &GradedPiece, tgt: &GradedPiece) -> Result<F2Matrix> {
        let cols: Vec<F2Vector> = (0..src.dim())
            .map(|i| tgt.coords(&self.apply(&src.rep(i))?))
            .collect::<Result<_>>()?;
        Ok(F2Matrix::from_columns(tgt.dim(), &cols))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RingMap) -> Result<RingMap> {
        if other.target.free() != self.source.free() {
            return Err(Error::input(format!(
                "cannot compose {} after {}",
                self.name, other.name
            )));
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(&WPolynomial::from_poly(img.clone())))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(
            format!("{}∘{}", self.name, other.name),
            other.source.clone(),
            self.target.clone(),
            images,
        )
    }
}

/// `map_matrix`: the matrix of `f` in degree `d`.
pub fn map_matrix(f: &RingMap, d: u32) -> Result<F2Matrix> {
    f.matrix(d)
}

fn w(n: usize, i: usize) -> WPolynomial {
    WPolynomial::w(n, i).expect("generator in range")
}

fn kappa_images(n: usize) -> Vec<WPolynomial> {
    let r = n - 1;
    let mut images = vec![WPolynomial::zero(r)];
    for i in 2..n {
        let img = w(r, i).add(&w(r, 1).mul(&w(r, i - 1)).unwrap()).unwrap();
        images.push(img);
    }
    images.push(w(r, 1).mul(&w(r, n - 1)).unwrap());
    images
}

/// `κ*: H*(BSO_n)/c_n → H*(BO_{n-1})/c_1`, the restriction along
/// `g ↦ diag(det g, g)`: `w_i ↦ w_i + w_1 w_{i-1}` for `i < n`, `w_n ↦ w_1 w_{n-1}`.
pub fn kappa_star(n: usize) -> Result<RingMap> {
    if n < 3 {
        return Err(Error::input(format!("kappa_star needs n >= 3, got {n}")));
    }
    RingMap::new(
        format!("kappa*_{n}"),
        RingPresentation::bso(n).modulo_chern(n)?,
        RingPresentation::bo(n - 1).modulo_chern(1)?,
        kappa_images(n),
    )
}

/// The same restriction before dividing by `c_n` and `c_1`.
pub fn kappa_star_unreduced(n: usize) -> Result<RingMap> {
    if n < 3 {
        return Err(Error::input(format!("kappa_star needs n >= 3, got {n}")));
    }
    RingMap::new(
        format!("kappa*_{n}"),
        RingPresentation::bso(n),
        RingPresentation::bo(n - 1),
        kappa_images(n),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    O,
    SO,
}

/// Restriction to the subgroup fixing the last coordinate: `w_n ↦ 0`.
pub fn iota_star(n: usize, flavor: Flavor) -> Result<RingMap> {
    let (source, target) = match flavor {
        Flavor::O if n >= 2 => (RingPresentation::bo(n), RingPresentation::bo(n - 1)),
        Flavor::SO if n >= 3 => (RingPresentation::bso(n), RingPresentation::bso(n - 1)),
        _ => return Err(Error::input(format!("iota_star undefined for n = {n}"))),
    };
    iota_between(n, source, target)
}

/// `ι*` between quotients `H*(BSO_n)/c_n → H*(BSO_{n-1})/c_{n-1}` or the
/// `O`-analogue `H*(BO_n)/c_1 → H*(BO_{n-1})/c_1`.
pub fn iota_star_quotient(n: usize, flavor: Flavor) -> Result<RingMap> {
    let (source, target) = match flavor {
        Flavor::O if n >= 2 => (
            RingPresentation::bo(n).modulo_chern(1)?,
            RingPresentation::bo(n - 1).modulo_chern(1)?,
        ),
        Flavor::SO if n >= 4 => (
            RingPresentation::bso(n).modulo_chern(n)?,
            RingPresentation::bso(n - 1).modulo_chern(n - 1)?,
        ),
        _ => return Err(Error::input(format!("iota_star undefined for n = {n}"))),
    };
    iota_between(n, source, target)
}

fn iota_between(n: usize, source: RingPresentation, target: RingPresentation) -> Result<RingMap> {
    let r = n - 1;
    let mut images: Vec<WPolynomial> = (1..n).map(|i| w(r, i)).collect();
    if source.kind() == RingKind::Bso {
        images[0] = WPolynomial::zero(r);
    }
    images.push(WPolynomial::zero(r));
    RingMap::new(format!("iota*_{n}"), source, target, images)
}

/// `ε*: H*(BO_n) → H*(BSO_n)`, `w_1 ↦ 0`.
pub fn epsilon_star(n: usize) -> Result<RingMap> {
    if n < 2 {
        return Err(Error::input(format!("epsilon_star needs n >= 2, got {n}")));
    }
    let mut images: Vec<WPolynomial> = (1..=n).map(|i| w(n, i)).collect();
    images[0] = WPolynomial::zero(n);
    RingMap::new(
        format!("epsilon*_{n}"),
        RingPresentation::bo(n),
        RingPresentation::bso(n),
        images,
    )
}

/// The identification `H*(BSO_n){1, x} ≅ H*(BO_n)/c_1` for odd `n`,
/// sending `x ↦ w_1` and `w_i` to the class of `det ⊗ γ_n`, which modulo
/// `w_1^2` is `w_i + i·w_1 w_{i-1}`.
pub fn exterior_identification(n: usize) -> Result<RingMap> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::input(format!(
            "the splitting needs odd n >= 3, got {n}"
        )));
    }
    let mut images = vec![w(n, 1)];
    for i in 2..=n {
        let mut img = w(n, i);
        if i % 2 == 1 {
            img = img.add(&w(n, 1).mul(&w(n, i - 1)).unwrap()).unwrap();
        }
        images.push(img);
    }
    RingMap::new(
        format!("split_{n}"),
        RingPresentation::exterior(n),
        RingPresentation::bo(n).modulo_chern(1)?,
        images,
    )
}

/// The boundary `δ: (H*(BO_{n-1})/c_1)^d → H*(BSO_{n-2})^{d-1}` of the
/// localization sequence, in one degree.
///
/// The middle term splits as `κ*(H*(BSO_n)/c_n) ⊕ w_1·Z/2[w_2..w_{n-2}]`;
/// `δ` kills the first summand and sends `z w_1 ↦ z`. The splitting is
/// verified before use.
#[derive(Clone, Debug)]
pub struct Boundary {
    n: usize,
    degree: u32,
    /// rows: `H*(BSO_{n-2})^{d-1}` monomials, cols: `(H*(BO_{n-1})/c_1)^d` reps
    matrix: F2Matrix,
    kappa: F2Matrix,
    source: GradedPiece,
    target: GradedPiece,
}

impl Boundary {
    pub fn new(n: usize, d: u32) -> Result<Self> {
        let kappa = kappa_star(n)?;
        let source = kappa.target().piece(d)?;
        let kappa_source = kappa.source().piece(d)?;
        let kappa_matrix = kappa.matrix_between(&kappa_source, &source)?;
        let target_ring = RingPresentation::bso(n - 2);
        let target = if d >= 1 {
            target_ring.piece(d - 1)?
        } else {
            // nothing lives in degree -1
            empty_piece(&target_ring)
        };
        let mut columns = kappa_matrix.columns();
        let kappa_rank = kappa_matrix.rank();
        if kappa_rank != kappa_source.dim() {
            return Err(Error::verification(format!(
                "kappa*_{n} is not injective in degree {d}"
            )));
        }
        // w_1·z for z running over the target basis, in the same order
        let r = n - 1;
        let w1 = w(r, 1);
        for z in target.reps() {
            let lifted = z.with_rank(r)?;
            columns.push(source.coords(&w1.mul(&lifted)?)?);
        }
        let split = F2Matrix::from_columns(source.dim(), &columns);
        if columns.len() != source.dim() || split.rank() != source.dim() {
            return Err(Error::verification(format!(
                "degree {d}: image(kappa*_{n}) + w1·H*(BSO_{}) does not split the middle term ({} + {} vs {})",
                n - 2,
                kappa_source.dim(),
                target.dim(),
                source.dim()
            )));
        }
        // δ(v) = the w_1·z-coordinates of v in the split basis
        let mut matrix = F2Matrix::zero(target.dim(), source.dim());
        for c in 0..source.dim() {
            let x = split
                .solve(&F2Vector::unit(source.dim(), c))?
                .ok_or_else(|| Error::internal("split basis is invertible"))?;
            for (row, k) in (kappa_source.dim()..columns.len()).enumerate() {
                if x.get(k) {
                    matrix.set(row, c, true);
                }
            }
        }
        Ok(Boundary {
            n,
            degree: d,
            matrix,
            kappa: kappa_matrix,
            source,
            target,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.matrix
    }

    /// The matrix of `κ*` into the same middle term.
    pub fn kappa_matrix(&self) -> &F2Matrix {
        &self.kappa
    }

    pub fn source(&self) -> &GradedPiece {
        &self.source
    }

    pub fn target(&self) -> &GradedPiece {
        &self.target
    }

    pub fn apply(&self, v: &WPolynomial) -> Result<WPolynomial> {
        let x = self.source.coords(v)?;
        Ok(self.target.element(&self.matrix.mul_vec(&x)?))
    }
}

fn empty_piece(ring: &RingPresentation) -> GradedPiece {
    GradedPiece {
        ring: ring.clone(),
        degree: 0,
        monomials: Vec::new(),
        index: HashMap::new(),
        ideal: Subspace::zero(0),
        reps: Vec::new(),
        rep_pos: Vec::new(),
    }
}

/// `δ(v)` for `v` homogeneous of degree `d` in `H*(BO_{n-1})/c_1`.
pub fn delta_top(n: usize, v: &WPolynomial, d: u32) -> Result<WPolynomial> {
    Boundary::new(n, d)?.apply(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{format_w, ClassExpr};

    fn wp(s: &str, n: usize) -> WPolynomial {
        ClassExpr::parse(s).unwrap().to_w(n).unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["bo:3", "bso:4", "bo:5/c1", "bso:6/c6", "ext:5"] {
            assert_eq!(RingPresentation::parse(s).unwrap().to_string(), s);
        }
        assert!(matches!(
            RingPresentation::parse("bso:4/c1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            RingPresentation::parse("bx:4"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            RingPresentation::parse("bo:0"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(
            RingPresentation::parse("bso:6").unwrap().group_name(),
            "BSO_6"
        );
    }

    #[test]
    fn bso_has_no_w1() {
        let r = RingPresentation::bso(4);
        assert_eq!(r.generator_indices(), vec![2, 3, 4]);
        assert!(r.monomials(7).iter().all(|m| m.get(0) == 0));
        assert_eq!(r.monomials(4).len(), 2); // w2^2, w4
    }

    #[test]
    fn kappa_examples() {
        for n in 3..=7 {
            let k = kappa_star(n).unwrap();
            assert_eq!(format_w(&k.image_of_generator(n)), format!("w1*w{}", n - 1));
            let img = k.apply(&wp("w2", n)).unwrap();
            assert_eq!(img, wp("w2 + w1^2", n - 1));
            let cn = wp(&format!("w{n}^2"), n);
            assert_eq!(
                k.apply(&cn).unwrap(),
                wp(&format!("w1^2*w{}^2", n - 1), n - 1)
            );
        }
        assert!(kappa_star(2).is_err());
    }

    #[test]
    fn iota_examples() {
        let i = iota_star(5, Flavor::O).unwrap();
        assert!(i.apply(&wp("w5", 5)).unwrap().is_zero());
        assert_eq!(i.apply(&wp("w2*w5 + w3", 5)).unwrap(), wp("w3", 4));
        // BO_3 -> BO_2 in degree 3: w1^3, w1w2, w3 onto w1^3, w1w2
        let m = iota_star(3, Flavor::O).unwrap().matrix(3).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        assert_eq!(m.rank(), 2);
        assert!(iota_star(2, Flavor::SO).is_err());
    }

    #[test]
    fn iota_is_surjective() {
        for n in 2..=6 {
            let i = iota_star(n, Flavor::O).unwrap();
            for d in 0..=12 {
                let m = i.matrix(d).unwrap();
                assert_eq!(m.rank(), m.rows(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn epsilon_kernel_is_the_w1_ideal() {
        let e = epsilon_star(3).unwrap();
        assert!(e.apply(&wp("w1", 3)).unwrap().is_zero());
        assert_eq!(e.apply(&wp("w2 + w1^2", 3)).unwrap(), wp("w2", 3));
        for n in 2..=5 {
            let e = epsilon_star(n).unwrap();
            let bo = RingPresentation::bo(n);
            for d in 1..=10 {
                let m = e.matrix(d).unwrap();
                assert_eq!(m.rank(), m.rows(), "surjective n={n} d={d}");
                // dimension of w1·H^{d-1}(BO_n)
                let w1_ideal = bo.monomials(d - 1).len();
                assert_eq!(m.cols() - m.rank(), w1_ideal, "n={n} d={d}");
                for k in m.kernel_basis() {
                    let p = bo.piece(d).unwrap().element(&k);
                    assert!(p.terms().iter().all(|t| t.get(0) > 0));
                }
            }
        }
    }

    #[test]
    fn quotient_basis_examples() {
        let r = RingPresentation::bo(2).modulo_chern(1).unwrap();
        let p2 = r.piece(2).unwrap();
        assert_eq!(p2.dim(), 2 - 1);
        assert_eq!(p2.reps(), vec![wp("w2", 2)]);
        for ring in ["bo:3/c1", "bso:4/c4", "bso:5/c5"] {
            let r = RingPresentation::parse(ring).unwrap();
            assert_eq!(r.piece(0).unwrap().reps(), vec![WPolynomial::one(r.n())]);
        }
        let r = RingPresentation::bso(4).modulo_chern(4).unwrap();
        assert_eq!(r.piece(4).unwrap().dim(), 2);
        // oracle: dim H^d - dim H^{d - deg c} when c is a nonzerodivisor
        for ring in ["bo:3/c1", "bo:4/c1", "bso:4/c4", "bso:5/c5", "bso:6/c6"] {
            let r = RingPresentation::parse(ring).unwrap();
            let e = 2 * r.quotient().unwrap().chern_index as u32;
            for d in 0..=12 {
                let lower = if d >= e { r.monomials(d - e).len() } else { 0 };
                assert_eq!(
                    r.piece(d).unwrap().dim(),
                    r.monomials(d).len() - lower,
                    "{ring} d={d}"
                );
            }
        }
    }

    #[test]
    fn kappa_matrix_in_degree_two() {
        // SO_3: basis {w2}; image w2 + w1^2 ≡ w2 in BO_2/c1
        let k = kappa_star(3).unwrap();
        let m = k.matrix(2).unwrap();
        let tgt = k.target().piece(2).unwrap();
        assert_eq!(tgt.reps(), vec![wp("w2", 2)]);
        assert_eq!(m, F2Matrix::from_rows(&[&[1]]));
    }

    #[test]
    fn kappa_is_injective_on_quotients() {
        for n in 3..=6 {
            let k = kappa_star(n).unwrap();
            for d in 0..=12 {
                let m = k.matrix(d).unwrap();
                assert_eq!(m.rank(), m.cols(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn boundary_examples() {
        for n in 3..=7 {
            assert_eq!(
                delta_top(n, &wp("w1", n - 1), 1).unwrap(),
                WPolynomial::one(n - 2)
            );
            assert!(delta_top(n, &wp("w2 + w1^2", n - 1), 2).unwrap().is_zero());
        }
        for n in 5..=7 {
            assert_eq!(
                delta_top(n, &wp("w3*w1", n - 1), 4).unwrap(),
                wp("w3", n - 2)
            );
        }
    }

    #[test]
    fn exterior_splitting_is_an_isomorphism() {
        for n in [3, 5, 7] {
            let s = exterior_identification(n).unwrap();
            for d in 0..=10 {
                let m = s.matrix(d).unwrap();
                assert_eq!(m.rows(), m.cols(), "n={n} d={d}");
                assert_eq!(m.rank(), m.cols(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn compose_and_commuting_square() {
        // ι* ∘ κ*_{n+1} = κ*_n ∘ ι* on quotients
        for n in 3..=6 {
            let left = iota_star_quotient(n, Flavor::O)
                .unwrap()
                .compose(&kappa_star(n + 1).unwrap())
                .unwrap();
            let right = kappa_star(n)
                .unwrap()
                .compose(&iota_star_quotient(n + 1, Flavor::SO).unwrap())
                .unwrap();
            for d in 0..=10 {
                assert_eq!(
                    left.matrix(d).unwrap(),
                    right.matrix(d).unwrap(),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn map_rejects_bad_images() {
        let bad = RingMap::new(
            "bad",
            RingPresentation::bo(2),
            RingPresentation::bo(2),
            vec![wp("w2", 2), wp("w2", 2)],
        );
        assert!(bad.is_err());
        // c_2 must land in the target ideal
        let bad = RingMap::new(
            "bad",
            RingPresentation::bo(2).modulo_chern(2).unwrap(),
            RingPresentation::bo(2),
            vec![wp("w1", 2), wp("w2", 2)],
        );
        assert!(bad.is_err());
    }
}
