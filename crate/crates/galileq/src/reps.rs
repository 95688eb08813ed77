//! Representations of the homogeneous Galilei algebra hg(1,3).
//!
//! The algebra has rotation generators S_a and commuting nilpotent boost
//! generators η_a with [S_a,S_b] = iε_abc S_c, [η_a,S_b] = iε_abc η_c,
//! [η_a,η_b] = 0. On vector/scalar fields every finite-dimensional
//! indecomposable realization is determined by a triple of multiplicity
//! matrices (A, B, C) satisfying AB = 0, CA = 0, A² + BC = 0; the ten
//! admissible triples are tabulated in `table1_abc`. Spin-1/2 fields add two
//! spinor realizations.
//!
//! Sign conventions: we take (s_a)_{bc} = −i ε_abc so that [s_1,s_2] = i s_3
//! holds exactly (the commutator fixes the sign; `verify_hg` is the
//! authority), and k_a = i e_aᵀ.

use crate::matrix::Mat;
use crate::poly::Poly;
use crate::scalar::Gaussian;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

pub fn levi_civita(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Spin-one matrices, (s_a)_{bc} = −i ε_abc.
pub fn spin_one(a: usize) -> Mat {
    Mat::from_fn(3, 3, |b, c| {
        let e = levi_civita(a, b, c);
        if e == 0 {
            Poly::zero()
        } else {
            Poly::constant(Gaussian::ratio_i(-e, 1))
        }
    })
}

/// Row matrices k_a = i e_aᵀ coupling the vector and scalar sectors.
pub fn k_row(a: usize) -> Mat {
    Mat::from_fn(1, 3, |_, c| {
        if c == a {
            Poly::i()
        } else {
            Poly::zero()
        }
    })
}

pub fn pauli(a: usize) -> Mat {
    match a {
        0 => Mat::from_ints(2, 2, &[0, 1, 1, 0]),
        1 => Mat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 1) => Poly::constant(Gaussian::ratio_i(-1, 1)),
            (1, 0) => Poly::i(),
            _ => Poly::zero(),
        }),
        2 => Mat::from_ints(2, 2, &[1, 0, 0, -1]),
        _ => panic!("pauli index out of range"),
    }
}

/// Multi-index (n, k, λ) of an indecomposable vector/scalar realization:
/// n vector multiplets, k scalar multiplets, λ = rank of the B block.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RowQ {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
}

impl fmt::Debug for RowQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{},{})", self.n, self.k, self.lambda)
    }
}

impl fmt::Display for RowQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{},{})", self.n, self.k, self.lambda)
    }
}

pub const fn q(n: usize, k: usize, lambda: usize) -> RowQ {
    RowQ { n, k, lambda }
}

/// Multiplicity matrices of one indecomposable realization. Absent blocks
/// (n = 0 or k = 0) are carried as zero-dimensional matrices.
#[derive(Clone, PartialEq)]
pub struct AbcTriple {
    pub n: usize,
    pub k: usize,
    pub a: Mat,
    pub b: Mat,
    pub c: Mat,
}

impl AbcTriple {
    pub fn new(n: usize, k: usize, a: Mat, b: Mat, c: Mat) -> Self {
        assert_eq!((a.rows, a.cols), (n, n));
        assert_eq!((b.rows, b.cols), (n, k));
        assert_eq!((c.rows, c.cols), (k, n));
        AbcTriple { n, k, a, b, c }
    }

    /// Residuals of AB = 0, CA = 0, A² + BC = 0.
    pub fn residuals(&self) -> [Mat; 3] {
        [
            self.a.mul(&self.b),
            self.c.mul(&self.a),
            self.a.mul(&self.a).add(&self.b.mul(&self.c)),
        ]
    }

    pub fn satisfies_constraints(&self) -> bool {
        self.residuals().iter().all(|m| m.is_zero())
    }
}

impl fmt::Debug for AbcTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbcTriple(n={}, k={})\nA={:?}B={:?}C={:?}", self.n, self.k, self.a, self.b, self.c)
    }
}

pub fn table1_rows() -> Vec<RowQ> {
    vec![
        q(0, 1, 0),
        q(1, 0, 0),
        q(1, 1, 0),
        q(1, 1, 1),
        q(1, 2, 1),
        q(2, 0, 0),
        q(2, 1, 0),
        q(2, 1, 1),
        q(2, 2, 1),
        q(3, 1, 1),
    ]
}

/// Lower shift matrix (e1 → e2 → … → 0).
fn lower_shift(n: usize) -> Mat {
    Mat::from_fn(n, n, |r, c| {
        if r == c + 1 {
            Poly::one()
        } else {
            Poly::zero()
        }
    })
}

/// The exact multiplicity matrices of the ten tabulated realizations.
///
/// For (2,1,1) the B column must lie in ker A, so B = (0,1)ᵀ; the circulated
/// text prints (1,0)ᵀ there, which fails AB = 0.
pub fn table1_abc(row: RowQ) -> Option<AbcTriple> {
    let t = |n: usize, k: usize, a: Mat, b: Mat, c: Mat| Some(AbcTriple::new(n, k, a, b, c));
    match (row.n, row.k, row.lambda) {
        (0, 1, 0) => t(0, 1, Mat::zeros(0, 0), Mat::zeros(0, 1), Mat::zeros(1, 0)),
        (1, 0, 0) => t(1, 0, Mat::zeros(1, 1), Mat::zeros(1, 0), Mat::zeros(0, 1)),
        (1, 1, 0) => t(1, 1, Mat::zeros(1, 1), Mat::zeros(1, 1), Mat::identity(1)),
        (1, 1, 1) => t(1, 1, Mat::zeros(1, 1), Mat::identity(1), Mat::zeros(1, 1)),
        (1, 2, 1) => t(
            1,
            2,
            Mat::zeros(1, 1),
            Mat::from_ints(1, 2, &[1, 0]),
            Mat::from_ints(2, 1, &[0, 1]),
        ),
        (2, 0, 0) => t(2, 0, lower_shift(2), Mat::zeros(2, 0), Mat::zeros(0, 2)),
        (2, 1, 0) => t(
            2,
            1,
            lower_shift(2),
            Mat::zeros(2, 1),
            Mat::from_ints(1, 2, &[1, 0]),
        ),
        (2, 1, 1) => t(
            2,
            1,
            lower_shift(2),
            Mat::from_ints(2, 1, &[0, 1]),
            Mat::zeros(1, 2),
        ),
        (2, 2, 1) => t(2, 2, lower_shift(2), lower_shift(2), lower_shift(2)),
        (3, 1, 1) => t(
            3,
            1,
            lower_shift(3),
            Mat::from_ints(3, 1, &[0, 0, -1]),
            Mat::from_ints(1, 3, &[1, 0, 0]),
        ),
        _ => None,
    }
}

/// A direct sum of tabulated realizations in the sector layout used by the
/// wave-operator machinery: all vector multiplets first (multiplicity ⊗
/// spatial index), then all scalars.
#[derive(Clone, Debug)]
pub struct SectorRep {
    pub rows: Vec<RowQ>,
    /// total vector multiplicity
    pub nn: usize,
    /// total scalar multiplicity
    pub kk: usize,
    pub a: Mat,
    pub b: Mat,
    pub c: Mat,
}

impl SectorRep {
    pub fn from_rows(rows: &[RowQ]) -> Self {
        let triples: Vec<AbcTriple> = rows
            .iter()
            .map(|r| table1_abc(*r).expect("unknown multi-index"))
            .collect();
        let nn: usize = triples.iter().map(|t| t.n).sum();
        let kk: usize = triples.iter().map(|t| t.k).sum();
        let mut a = Mat::zeros(nn, nn);
        let mut b = Mat::zeros(nn, kk);
        let mut c = Mat::zeros(kk, nn);
        let (mut ro, mut co) = (0, 0);
        for t in &triples {
            a.set_block(ro, ro, &t.a);
            b.set_block(ro, co, &t.b);
            c.set_block(co, ro, &t.c);
            ro += t.n;
            co += t.k;
        }
        SectorRep { rows: rows.to_vec(), nn, kk, a, b, c }
    }

    pub fn dim(&self) -> usize {
        3 * self.nn + self.kk
    }

    /// Offset of summand `i`'s vector multiplets in the multiplicity space.
    pub fn vec_offset(&self, i: usize) -> usize {
        self.rows[..i].iter().map(|r| r.n).sum()
    }

    pub fn scal_offset(&self, i: usize) -> usize {
        self.rows[..i].iter().map(|r| r.k).sum()
    }

    pub fn spin(&self, axis: usize) -> Mat {
        let sa = spin_one(axis);
        Mat::from_blocks(&[
            vec![Mat::identity(self.nn).kron(&sa), Mat::zeros(3 * self.nn, self.kk)],
            vec![Mat::zeros(self.kk, 3 * self.nn), Mat::zeros(self.kk, self.kk)],
        ])
    }

    pub fn boost(&self, axis: usize) -> Mat {
        let sa = spin_one(axis);
        let ka = k_row(axis);
        Mat::from_blocks(&[
            vec![self.a.kron(&sa), self.b.kron(&ka.dagger())],
            vec![self.c.kron(&ka), Mat::zeros(self.kk, self.kk)],
        ])
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RepDescriptor {
    TableRow(RowQ),
    /// Irreducible spin-1/2 with vanishing boosts.
    SpinorHalf,
    /// The four-component spinor realization with nilpotent boosts.
    Bispinor,
    DirectSum(Vec<RepDescriptor>),
    TensorProduct(Box<RepDescriptor>, Box<RepDescriptor>),
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepDescriptor::TableRow(q) => write!(f, "{q}"),
            RepDescriptor::SpinorHalf => write!(f, "D1(1/2)"),
            RepDescriptor::Bispinor => write!(f, "D2(1/2)"),
            RepDescriptor::DirectSum(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", s.join("(+)"))
            }
            RepDescriptor::TensorProduct(a, b) => write!(f, "({a})(x)({b})"),
        }
    }
}

/// A realized representation: matrices S_a and η_a plus the descriptor.
/// `sector` is present exactly when the carrier is a direct sum of
/// tabulated vector/scalar rows in sector layout.
#[derive(Clone)]
pub struct GalileiRep {
    pub descriptor: RepDescriptor,
    pub dim: usize,
    pub s: [Mat; 3],
    pub eta: [Mat; 3],
    pub sector: Option<SectorRep>,
}

impl GalileiRep {
    pub fn eta_dot(&self, u: &[Gaussian; 3]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for a in 0..3 {
            m = m.add(&self.eta[a].scale_gauss(&u[a]));
        }
        m
    }

    pub fn spin_squared(&self) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for a in 0..3 {
            m = m.add(&self.s[a].mul(&self.s[a]));
        }
        m
    }
}

impl fmt::Debug for GalileiRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GalileiRep({}, dim {})", self.descriptor, self.dim)
    }
}

fn spinor_half() -> GalileiRep {
    GalileiRep {
        descriptor: RepDescriptor::SpinorHalf,
        dim: 2,
        s: std::array::from_fn(|a| pauli(a).scale(&Poly::ratio(1, 2))),
        eta: std::array::from_fn(|_| Mat::zeros(2, 2)),
        sector: None,
    }
}

fn bispinor() -> GalileiRep {
    let half = Poly::ratio(1, 2);
    let s = std::array::from_fn(|a| Mat::identity(2).kron(&pauli(a)).scale(&half));
    let e21 = Mat::from_ints(2, 2, &[0, 0, 1, 0]);
    let eta = std::array::from_fn(|a| {
        e21.kron(&pauli(a)).scale(&Poly::i().mul(&half))
    });
    GalileiRep { descriptor: RepDescriptor::Bispinor, dim: 4, s, eta, sector: None }
}

/// Collects table rows if the descriptor is (a sum of) table rows only.
fn flatten_rows(d: &RepDescriptor) -> Option<Vec<RowQ>> {
    match d {
        RepDescriptor::TableRow(q) => Some(vec![*q]),
        RepDescriptor::DirectSum(parts) => {
            let mut rows = Vec::new();
            for p in parts {
                rows.extend(flatten_rows(p)?);
            }
            Some(rows)
        }
        _ => None,
    }
}

/// Realizes a descriptor as explicit S_a, η_a matrices.
///
/// Direct sums of table rows are merged into the sector layout; mixed sums
/// stack blockwise; tensor products use S⊗I + I⊗S and η⊗I + I⊗η.
pub fn build_rep(d: &RepDescriptor) -> GalileiRep {
    if let Some(rows) = flatten_rows(d) {
        for r in &rows {
            assert!(table1_abc(*r).is_some(), "unknown multi-index {r}");
        }
        let sec = SectorRep::from_rows(&rows);
        return GalileiRep {
            descriptor: d.clone(),
            dim: sec.dim(),
            s: std::array::from_fn(|a| sec.spin(a)),
            eta: std::array::from_fn(|a| sec.boost(a)),
            sector: Some(sec),
        };
    }
    match d {
        RepDescriptor::SpinorHalf => spinor_half(),
        RepDescriptor::Bispinor => bispinor(),
        RepDescriptor::DirectSum(parts) => {
            assert!(!parts.is_empty());
            let built: Vec<GalileiRep> = parts.iter().map(build_rep).collect();
            let dim = built.iter().map(|r| r.dim).sum();
            let stack = |pick: &dyn Fn(&GalileiRep) -> &Mat| {
                let mut m = Mat::zeros(dim, dim);
                let mut off = 0;
                for r in &built {
                    m.set_block(off, off, pick(r));
                    off += r.dim;
                }
                m
            };
            GalileiRep {
                descriptor: d.clone(),
                dim,
                s: std::array::from_fn(|a| stack(&|r| &r.s[a])),
                eta: std::array::from_fn(|a| stack(&|r| &r.eta[a])),
                sector: None,
            }
        }
        RepDescriptor::TensorProduct(da, db) => {
            let ra = build_rep(da);
            let rb = build_rep(db);
            let dim = ra.dim * rb.dim;
            let comb = |x: &Mat, y: &Mat| {
                x.kron(&Mat::identity(rb.dim)).add(&Mat::identity(ra.dim).kron(y))
            };
            GalileiRep {
                descriptor: d.clone(),
                dim,
                s: std::array::from_fn(|a| comb(&ra.s[a], &rb.s[a])),
                eta: std::array::from_fn(|a| comb(&ra.eta[a], &rb.eta[a])),
                sector: None,
            }
        }
        RepDescriptor::TableRow(_) => unreachable!("handled by flatten_rows"),
    }
}

/// One failed identity with its residual matrix.
#[derive(Clone, Debug)]
pub struct IdentityFailure {
    pub identity: String,
    pub residual: Mat,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub failures: Vec<IdentityFailure>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&mut self, identity: impl Into<String>, residual: Mat) {
        if !residual.is_zero() {
            self.failures.push(IdentityFailure { identity: identity.into(), residual });
        }
    }
}

/// Checks every commutator of the algebra exactly.
pub fn verify_hg(rep: &GalileiRep) -> VerifyReport {
    let mut rep_out = VerifyReport::default();
    for a in 0..3 {
        for b in 0..3 {
            let mut ss = rep.s[a].commutator(&rep.s[b]);
            let mut es = rep.eta[a].commutator(&rep.s[b]);
            for c in 0..3 {
                let e = levi_civita(a, b, c);
                if e != 0 {
                    let f = Gaussian::ratio_i(-e, 1); // subtract iε X_c
                    ss = ss.add(&rep.s[c].scale_gauss(&f));
                    es = es.add(&rep.eta[c].scale_gauss(&f));
                }
            }
            rep_out.check(format!("[S_{},S_{}] = i eps S", a + 1, b + 1), ss);
            rep_out.check(format!("[eta_{},S_{}] = i eps eta", a + 1, b + 1), es);
            if a < b {
                rep_out.check(
                    format!("[eta_{},eta_{}] = 0", a + 1, b + 1),
                    rep.eta[a].commutator(&rep.eta[b]),
                );
            }
        }
    }
    rep_out
}

/// Smallest N with (η·u)^N = 0, or None if no power up to dim+1 vanishes.
pub fn nilpotency_index(rep: &GalileiRep, u: &[Gaussian; 3]) -> Option<usize> {
    assert!(!(u[0].is_zero() && u[1].is_zero() && u[2].is_zero()), "direction must be nonzero");
    let m = rep.eta_dot(u);
    let mut p = Mat::identity(rep.dim);
    for n in 1..=rep.dim + 1 {
        p = p.mul(&m);
        if p.is_zero() {
            return Some(n);
        }
    }
    None
}

/// Nilpotency index on several pseudorandom rational directions; all samples
/// must agree.
pub fn nilpotency_index_generic(rep: &GalileiRep, rng: &mut impl Rng) -> Option<usize> {
    let mut result = None;
    for _ in 0..3 {
        let u: [Gaussian; 3] = std::array::from_fn(|_| {
            Gaussian::ratio(rng.gen_range(1..=9), rng.gen_range(1..=4))
        });
        let n = nilpotency_index(rep, &u)?;
        match result {
            None => result = Some(n),
            Some(prev) => assert_eq!(prev, n, "nilpotency index depends on direction"),
        }
    }
    result
}

/// Finite boost exp(i η·v); inverse is the boost at −v.
pub fn boost_matrix(rep: &GalileiRep, v: &[Gaussian; 3]) -> Mat {
    rep.eta_dot(v).scale_gauss(&Gaussian::i()).exp_nilpotent()
}

// ---------------------------------------------------------------------------
// Exhaustive solution of the multiplicity constraints at desk scale.
// ---------------------------------------------------------------------------

/// All nilpotent lower-shift Jordan forms on n letters (block sizes ≤ 3;
/// A³ = 0 is forced by the constraints).
fn jordan_forms(n: usize) -> Vec<Mat> {
    fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(n)).rev() {
            for rest in partitions(n - first, first) {
                let mut p = vec![first];
                p.extend(rest);
                out.push(p);
            }
        }
        out
    }
    partitions(n, 3)
        .into_iter()
        .map(|blocks| {
            let mut m = Mat::zeros(n, n);
            let mut off = 0;
            for b in blocks {
                m.set_block(off, off, &lower_shift(b));
                off += b;
            }
            m
        })
        .collect()
}

/// Tests whether two triples with identical A are related by basis changes
/// (U, V) with UA = AU, UB = BV, VC = CU. Sampling-based: the constraint
/// space is linear, and a generic element is invertible iff any is.
pub fn triples_equivalent(x: &AbcTriple, y: &AbcTriple, rng: &mut impl Rng) -> bool {
    if x.n != y.n || x.k != y.k || x.a != y.a {
        return false;
    }
    let (n, k) = (x.n, x.k);
    let nu = n * n + k * k; // unknowns: entries of U then V
    if nu == 0 {
        return true;
    }
    // rows: UA − AU = 0, UB − B'V = 0, VC − C'U = 0 (prime = y)
    let mut rows: Vec<Vec<Gaussian>> = Vec::new();
    let mut push_eq = |coef: Vec<(usize, Gaussian)>| {
        let mut row = vec![Gaussian::zero(); nu];
        for (idx, c) in coef {
            row[idx] += c;
        }
        rows.push(row);
    };
    let uidx = |r: usize, c: usize| r * n + c;
    let vidx = |r: usize, c: usize| n * n + r * k + c;
    for r in 0..n {
        for c in 0..n {
            // (UA − AU)[r][c] = Σ_j U[r][j]A[j][c] − A[r][j]U[j][c]
            let mut eq = Vec::new();
            for j in 0..n {
                eq.push((uidx(r, j), x.a.entry_const(j, c)));
                eq.push((uidx(j, c), -x.a.entry_const(r, j)));
            }
            push_eq(eq);
        }
    }
    for r in 0..n {
        for c in 0..k {
            // (UB − B'V)[r][c]
            let mut eq = Vec::new();
            for j in 0..n {
                eq.push((uidx(r, j), x.b.entry_const(j, c)));
            }
            for j in 0..k {
                eq.push((vidx(j, c), -y.b.entry_const(r, j)));
            }
            push_eq(eq);
        }
    }
    for r in 0..k {
        for c in 0..n {
            // (VC − C'U)[r][c]
            let mut eq = Vec::new();
            for j in 0..k {
                eq.push((vidx(r, j), x.c.entry_const(j, c)));
            }
            for j in 0..n {
                eq.push((uidx(j, c), -y.c.entry_const(r, j)));
            }
            push_eq(eq);
        }
    }
    let sys = Mat::from_fn(rows.len(), nu, |r, c| Poly::constant(rows[r][c].clone()));
    let null = sys.nullspace();
    if null.cols == 0 {
        return false;
    }
    for _ in 0..12 {
        let mut u = Mat::zeros(n, n);
        let mut v = Mat::zeros(k, k);
        for j in 0..null.cols {
            let w = Gaussian::from_int(rng.gen_range(-5..=5));
            for r in 0..n {
                for c in 0..n {
                    let t = null.entry_const(uidx(r, c), j).clone() * w.clone();
                    u[(r, c)] = u[(r, c)].add(&Poly::constant(t));
                }
            }
            for r in 0..k {
                for c in 0..k {
                    let t = null.entry_const(vidx(r, c), j).clone() * w.clone();
                    v[(r, c)] = v[(r, c)].add(&Poly::constant(t));
                }
            }
        }
        let u_ok = n == 0 || !u.det_const().is_zero();
        let v_ok = k == 0 || !v.det_const().is_zero();
        if u_ok && v_ok {
            return true;
        }
    }
    false
}

/// Coordinate-subspace decomposability check.
fn coordinate_decomposable(t: &AbcTriple) -> bool {
    let (n, k) = (t.n, t.k);
    let total = n + k;
    if total < 2 {
        return false;
    }
    // subset over the joint index set {vector mults} ∪ {scalar mults}
    for mask in 1..(1u32 << total) - 1 {
        let in_v = |i: usize| mask & (1 << i) != 0;
        let in_w = |i: usize| mask & (1 << (n + i)) != 0;
        let mut ok = true;
        'check: for part in [true, false] {
            for r in 0..n {
                for c in 0..n {
                    if !t.a.entry_const(r, c).is_zero() && in_v(c) == part && in_v(r) != part {
                        ok = false;
                        break 'check;
                    }
                }
            }
            for r in 0..n {
                for c in 0..k {
                    if !t.b.entry_const(r, c).is_zero() && in_w(c) == part && in_v(r) != part {
                        ok = false;
                        break 'check;
                    }
                }
            }
            for r in 0..k {
                for c in 0..n {
                    if !t.c.entry_const(r, c).is_zero() && in_v(c) == part && in_w(r) != part {
                        ok = false;
                        break 'check;
                    }
                }
            }
        }
        if ok {
            return true;
        }
    }
    false
}

/// All direct sums of table rows with total multiplicities (n, k), as
/// canonical decomposable triples (at least two summands).
fn table_sums(n: usize, k: usize) -> Vec<AbcTriple> {
    let rows = table1_rows();
    let mut out = Vec::new();
    fn rec(
        rows: &[RowQ],
        start: usize,
        n_left: usize,
        k_left: usize,
        acc: &mut Vec<RowQ>,
        out: &mut Vec<Vec<RowQ>>,
    ) {
        if n_left == 0 && k_left == 0 {
            if acc.len() >= 2 {
                out.push(acc.clone());
            }
            return;
        }
        for i in start..rows.len() {
            let r = rows[i];
            if r.n <= n_left && r.k <= k_left {
                acc.push(r);
                rec(rows, i, n_left - r.n, k_left - r.k, acc, out);
                acc.pop();
            }
        }
    }
    let mut combos = Vec::new();
    rec(&rows, 0, n, k, &mut Vec::new(), &mut combos);
    for combo in combos {
        let sec = SectorRep::from_rows(&combo);
        out.push(AbcTriple::new(n, k, sec.a, sec.b, sec.c));
    }
    out
}

/// Exhaustively solves AB = 0, CA = 0, A² + BC = 0 at desk scale (n ≤ 3,
/// k ≤ 2) and returns the indecomposable triples up to equivalence.
///
/// For each nilpotent Jordan form A the bilinear system reduces to a matrix
/// factorization through the kernel coordinates; representatives are searched
/// over entries in {−1, 0, 1}, which suffices at this scale because the
/// diagonal part of the basis-change group rescales any nonzero entry.
pub fn solve_abc(n: usize, k: usize, rng: &mut impl Rng) -> Vec<AbcTriple> {
    assert!(n <= 3 && k <= 2, "solver is desk-scale only");
    let mut found: Vec<AbcTriple> = Vec::new();
    let decomposables = table_sums(n, k);
    for a in jordan_forms(n) {
        // B columns ∈ ker A, C rows ∈ left-kernel of A
        let ker = a.nullspace(); // n × dk
        let lker = a.transpose().nullspace().transpose(); // dl × n
        let dk = ker.cols;
        let dl = lker.rows;
        let target = a.mul(&a).neg(); // required BC

        // grid over β (dk×k) and γ (k×dl): B = ker·β, C = γ·lker
        let nb = dk * k;
        let nc = k * dl;
        let grid = |len: usize| -> Vec<Vec<i64>> {
            let mut out = vec![vec![]];
            for _ in 0..len {
                let mut next = Vec::new();
                for v in &out {
                    for x in [-1i64, 0, 1] {
                        let mut w = v.clone();
                        w.push(x);
                        next.push(w);
                    }
                }
                out = next;
            }
            out
        };
        for beta_e in grid(nb) {
            let beta = Mat::from_ints(dk.max(0), k, &beta_e);
            let b = ker.mul(&beta);
            for gamma_e in grid(nc) {
                let gamma = Mat::from_ints(k, dl, &gamma_e);
                let c = gamma.mul(&lker);
                if !b.mul(&c).sub(&target).is_zero() {
                    continue;
                }
                let t = AbcTriple::new(n, k, a.clone(), b.clone(), c.clone());
                debug_assert!(t.satisfies_constraints());
                if coordinate_decomposable(&t) {
                    continue;
                }
                if decomposables.iter().any(|d| triples_equivalent(&t, d, rng)) {
                    continue;
                }
                if found.iter().any(|f| triples_equivalent(&t, f, rng)) {
                    continue;
                }
                found.push(t);
            }
        }
    }
    // prefer tabulated representatives where equivalent
    for f in &mut found {
        for row in table1_rows() {
            if row.n == n && row.k == k {
                let tab = table1_abc(row).unwrap();
                if triples_equivalent(f, &tab, rng) {
                    *f = tab;
                    break;
                }
            }
        }
    }
    found.dedup_by(|a, b| a.a == b.a && a.b == b.b && a.c == b.c);
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn table1_satisfies_constraints() {
        for row in table1_rows() {
            let t = table1_abc(row).unwrap();
            assert!(t.satisfies_constraints(), "constraints fail for {row}");
            assert_eq!(t.b.rank(), row.lambda, "rank of B for {row}");
        }
        assert!(table1_abc(q(3, 2, 1)).is_none());
    }

    #[test]
    fn spin_one_commutators() {
        // [s_1, s_2] = i s_3 under our sign convention
        let comm = spin_one(0).commutator(&spin_one(1));
        assert_eq!(comm, spin_one(2).scale_gauss(&Gaussian::i()));
    }

    #[test]
    fn all_table_reps_satisfy_algebra() {
        for row in table1_rows() {
            let rep = build_rep(&RepDescriptor::TableRow(row));
            assert_eq!(rep.dim, 3 * row.n + row.k);
            let report = verify_hg(&rep);
            assert!(report.is_ok(), "{row}: {:?}", report.failures.first().map(|f| &f.identity));
        }
    }

    #[test]
    fn spinor_reps_satisfy_algebra() {
        for d in [RepDescriptor::SpinorHalf, RepDescriptor::Bispinor] {
            let rep = build_rep(&d);
            assert!(verify_hg(&rep).is_ok());
        }
    }

    #[test]
    fn direct_sum_and_tensor_product_pass() {
        let sum = RepDescriptor::DirectSum(vec![
            RepDescriptor::TableRow(q(2, 1, 0)),
            RepDescriptor::TableRow(q(1, 1, 1)),
        ]);
        assert!(verify_hg(&build_rep(&sum)).is_ok());
        let prod = RepDescriptor::TensorProduct(
            Box::new(RepDescriptor::TableRow(q(1, 2, 1))),
            Box::new(RepDescriptor::Bispinor),
        );
        let rep = build_rep(&prod);
        assert_eq!(rep.dim, 20);
        assert!(verify_hg(&rep).is_ok());
    }

    #[test]
    fn sign_flip_breaks_algebra() {
        let mut rep = build_rep(&RepDescriptor::TableRow(q(1, 0, 0)));
        rep.s[0] = rep.s[0].neg();
        let report = verify_hg(&rep);
        assert!(!report.is_ok());
        assert!(report.failures.iter().any(|f| f.identity.contains("S_1")));
    }

    #[test]
    fn nilpotency_indices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut expect = |row: RowQ, n: usize| {
            let rep = build_rep(&RepDescriptor::TableRow(row));
            assert_eq!(nilpotency_index_generic(&rep, &mut rng), Some(n), "{row}");
        };
        expect(q(3, 1, 1), 3);
        expect(q(1, 2, 1), 3);
        expect(q(1, 1, 0), 2);
        expect(q(2, 2, 1), 2);
        expect(q(1, 0, 0), 1); // vanishing boosts
    }

    #[test]
    fn boost_matrices_compose() {
        let rep = build_rep(&RepDescriptor::TableRow(q(3, 1, 1)));
        let v: [Gaussian; 3] = [Gaussian::ratio(1, 2), Gaussian::from_int(-2), Gaussian::ratio(3, 5)];
        let w: [Gaussian; 3] = [Gaussian::from_int(1), Gaussian::ratio(1, 3), Gaussian::from_int(0)];
        let bv = boost_matrix(&rep, &v);
        let bw = boost_matrix(&rep, &w);
        let vw: [Gaussian; 3] = std::array::from_fn(|i| v[i].clone() + &w[i]);
        assert_eq!(bv.mul(&bw), boost_matrix(&rep, &vw));
        let neg: [Gaussian; 3] = std::array::from_fn(|i| -v[i].clone());
        assert_eq!(bv.mul(&boost_matrix(&rep, &neg)), Mat::identity(rep.dim));
    }

    #[test]
    fn bispinor_boost_terminates_at_first_order() {
        let rep = build_rep(&RepDescriptor::Bispinor);
        let v: [Gaussian; 3] = [Gaussian::from_int(2), Gaussian::from_int(-1), Gaussian::from_int(3)];
        let b = boost_matrix(&rep, &v);
        let linear = Mat::identity(4).add(&rep.eta_dot(&v).scale_gauss(&Gaussian::i()));
        assert_eq!(b, linear);
    }

    #[test]
    fn solve_abc_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        // (1,1): exactly the two tabulated rows
        let sols = solve_abc(1, 1, &mut rng);
        assert_eq!(sols.len(), 2);
        for row in [q(1, 1, 0), q(1, 1, 1)] {
            let tab = table1_abc(row).unwrap();
            assert!(sols.iter().any(|s| triples_equivalent(s, &tab, &mut rng)), "{row} missing");
        }
        // (1,0): A = 0 only
        let sols = solve_abc(1, 0, &mut rng);
        assert_eq!(sols.len(), 1);
        assert!(sols[0].a.is_zero());
        // (2,1): rows (2,1,0) and (2,1,1)
        let sols = solve_abc(2, 1, &mut rng);
        assert_eq!(sols.len(), 2, "{sols:?}");
        for row in [q(2, 1, 0), q(2, 1, 1)] {
            let tab = table1_abc(row).unwrap();
            assert!(sols.iter().any(|s| triples_equivalent(s, &tab, &mut rng)), "{row} missing");
        }
    }

    #[test]
    fn solve_abc_matches_table_at_larger_sizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for (n, k) in [(2, 2), (3, 1), (3, 2), (2, 0), (3, 0)] {
            let sols = solve_abc(n, k, &mut rng);
            let table: Vec<RowQ> = table1_rows().into_iter().filter(|r| r.n == n && r.k == k).collect();
            assert_eq!(sols.len(), table.len(), "count mismatch at ({n},{k}): {sols:?}");
            for row in table {
                let tab = table1_abc(row).unwrap();
                assert!(sols.iter().any(|s| triples_equivalent(s, &tab, &mut rng)), "{row} missing");
            }
        }
    }
}
