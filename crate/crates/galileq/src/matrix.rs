//! Dense matrices with polynomial entries, all arithmetic exact.
//!
//! One type covers both symbolic matrices (entries in several indeterminates)
//! and plain Gaussian-rational matrices (constant entries); elimination-based
//! routines require constant entries and panic otherwise. Determinants of
//! symbolic matrices go through fraction-free Bareiss elimination with exact
//! polynomial division.

use crate::poly::{var_name, Poly, Var};
use crate::scalar::Gaussian;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    e: Vec<Poly>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, e: vec![Poly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Poly) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Builds from integer entries, row-major.
    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat::from_fn(rows, cols, |r, c| Poly::from_int(data[r * cols + c]))
    }

    pub fn diag(entries: &[Poly]) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = entries[i].clone();
        }
        m
    }

    /// Assembles a block matrix; every row of blocks must agree in height,
    /// every column in width.
    pub fn from_blocks(blocks: &[Vec<Mat>]) -> Self {
        let block_rows: Vec<usize> = blocks.iter().map(|br| br[0].rows).collect();
        let block_cols: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for br in blocks {
            assert_eq!(br.len(), block_cols.len(), "ragged block row");
            for (j, b) in br.iter().enumerate() {
                assert_eq!(b.cols, block_cols[j], "block width mismatch");
            }
            for b in br {
                assert_eq!(b.rows, br[0].rows, "block height mismatch");
            }
        }
        let rows: usize = block_rows.iter().sum();
        let cols: usize = block_cols.iter().sum();
        let mut m = Mat::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, br) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for b in br {
                for r in 0..b.rows {
                    for c in 0..b.cols {
                        m[(r0 + r, c0 + c)] = b[(r, c)].clone();
                    }
                }
                c0 += b.cols;
            }
            r0 += block_rows[bi];
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols);
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        Mat::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn column(&self, c: usize) -> Mat {
        self.block(0, c, self.rows, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|p| p.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self[(r, c)].add(&o[(r, c)]))
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self[(r, c)].sub(&o[(r, c)]))
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self[(r, c)].neg())
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut m = Mat::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self[(r, k)].is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    if o[(k, c)].is_zero() {
                        continue;
                    }
                    let t = self[(r, k)].mul(&o[(k, c)]);
                    m[(r, c)] = m[(r, c)].add(&t);
                }
            }
        }
        m
    }

    pub fn scale(&self, p: &Poly) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self[(r, c)].mul(p))
    }

    pub fn scale_gauss(&self, c: &Gaussian) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, co| self[(r, co)].scale(c))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Conjugate transpose; indeterminates are real, only the imaginary unit
    /// is conjugated.
    pub fn dagger(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.dagger()
    }

    pub fn kron(&self, o: &Mat) -> Mat {
        let mut m = Mat::zeros(self.rows * o.rows, self.cols * o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self[(r, c)].is_zero() {
                    continue;
                }
                for or in 0..o.rows {
                    for oc in 0..o.cols {
                        if o[(or, oc)].is_zero() {
                            continue;
                        }
                        m[(r * o.rows + or, c * o.cols + oc)] = self[(r, c)].mul(&o[(or, oc)]);
                    }
                }
            }
        }
        m
    }

    pub fn trace(&self) -> Poly {
        assert!(self.is_square());
        let mut t = Poly::zero();
        for i in 0..self.rows {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn anticommutator(&self, o: &Mat) -> Mat {
        self.mul(o).add(&o.mul(self))
    }

    pub fn map(&self, mut f: impl FnMut(&Poly) -> Poly) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| f(&self[(r, c)]))
    }

    pub fn subst(&self, v: Var, rep: &Poly) -> Mat {
        self.map(|p| p.subst(v, rep))
    }

    pub fn subst_gauss(&self, v: Var, value: &Gaussian) -> Mat {
        self.map(|p| p.subst_gauss(v, value))
    }

    /// All entries constant?
    pub fn is_constant(&self) -> bool {
        self.e.iter().all(|p| p.is_constant())
    }

    pub fn entry_const(&self, r: usize, c: usize) -> Gaussian {
        self[(r, c)].as_constant().expect("constant entry required")
    }

    /// Matrix exponential for nilpotent arguments, exp(N) = Σ N^k/k!.
    /// Panics if the series has not terminated after `rows` steps.
    pub fn exp_nilpotent(&self) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.rows);
        let mut term = Mat::identity(self.rows);
        let mut k: i64 = 1;
        loop {
            term = term.mul(self).map(|p| p.scale(&Gaussian::ratio(1, k)));
            if term.is_zero() {
                return acc;
            }
            acc = acc.add(&term);
            assert!(k as usize <= self.rows + 1, "exp argument is not nilpotent");
            k += 1;
        }
    }

    // ---- elimination-based routines over constant entries ----

    fn const_data(&self) -> Vec<Gaussian> {
        self.e
            .iter()
            .map(|p| p.as_constant().expect("constant matrix required"))
            .collect()
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut a = self.const_data();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &Vec<Gaussian>, r: usize, c: usize| a[r * cols + c].clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !at(&a, i, c).is_zero()) else {
                continue;
            };
            for j in 0..cols {
                a.swap(r * cols + j, pr * cols + j);
            }
            let inv = at(&a, r, c).inv();
            for j in 0..cols {
                let v = at(&a, r, j) * inv.clone();
                a[r * cols + j] = v;
            }
            for i in 0..rows {
                if i != r && !at(&a, i, c).is_zero() {
                    let f = at(&a, i, c);
                    for j in 0..cols {
                        let v = at(&a, i, j) - f.clone() * at(&a, r, j);
                        a[i * cols + j] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let m = Mat::from_fn(rows, cols, |r, c| Poly::constant(a[r * cols + c].clone()));
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the right null space of a constant matrix, one basis
    /// vector per column of the result. Full rank gives a 0-column matrix.
    pub fn nullspace(&self) -> Mat {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = Poly::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = rref[(pr, fc)].neg();
            }
        }
        basis
    }

    /// Solves A·X = B exactly over constant entries; None if inconsistent.
    /// When the system is underdetermined, free variables are set to zero.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows);
        let aug = Mat::from_blocks(&[vec![self.clone(), b.clone()]]);
        let (rref, pivots) = aug.rref();
        // any pivot in the B-part means inconsistency
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.cols, b.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(pc, j)] = rref[(pr, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    /// Inverse of a constant matrix; None if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let inv = self.solve(&Mat::identity(self.rows))?;
        if self.mul(&inv) == Mat::identity(self.rows) {
            Some(inv)
        } else {
            None
        }
    }

    /// Determinant of a constant matrix by ordinary elimination.
    pub fn det_const(&self) -> Gaussian {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.const_data();
        let mut det = Gaussian::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !a[i * n + c].is_zero()) else {
                return Gaussian::zero();
            };
            if pr != c {
                for j in 0..n {
                    a.swap(c * n + j, pr * n + j);
                }
                det = -det;
            }
            let pivot = a[c * n + c].clone();
            det = det * pivot.clone();
            let pinv = pivot.inv();
            for i in (c + 1)..n {
                if a[i * n + c].is_zero() {
                    continue;
                }
                let f = a[i * n + c].clone() * pinv.clone();
                for j in c..n {
                    let v = a[i * n + j].clone() - f.clone() * a[c * n + j].clone();
                    a[i * n + j] = v;
                }
            }
        }
        det
    }

    /// Fraction-free determinant (Bareiss). Pivoting picks the first row with
    /// a nonzero entry in the current column; exact divisions by the previous
    /// pivot are guaranteed by the algorithm.
    pub fn det_bareiss(&self) -> Poly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut a: Vec<Poly> = self.e.clone();
        let mut sign = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            let Some(pr) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
                return Poly::zero();
            };
            if pr != k {
                for j in 0..n {
                    a.swap(k * n + j, pr * n + j);
                }
                sign = !sign;
            }
            let pivot = a[k * n + k].clone();
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let t = a[i * n + j].mul(&pivot).sub(&a[i * n + k].mul(&a[k * n + j]));
                    a[i * n + j] = t.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i * n + k] = Poly::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }

    /// Cofactor-expansion determinant; exponential, for cross-checks only.
    pub fn det_cofactor(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut det = Poly::zero();
        for c in 0..n {
            if self[(0, c)].is_zero() {
                continue;
            }
            let minor = Mat::from_fn(n - 1, n - 1, |r, cc| {
                let col = if cc < c { cc } else { cc + 1 };
                self[(r + 1, col)].clone()
            });
            let t = self[(0, c)].mul(&minor.det_cofactor());
            det = if c % 2 == 0 { det.add(&t) } else { det.sub(&t) };
        }
        det
    }

    /// Determinant of a matrix whose entries are univariate polynomials in
    /// `v` (constants allowed), by evaluation and Lagrange interpolation.
    pub fn det_univariate(&self, v: Var) -> Poly {
        assert!(self.is_square());
        for p in &self.e {
            for w in p.vars() {
                assert!(w == v, "det_univariate: entry contains {}", var_name(w));
            }
        }
        let deg_bound: usize = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self[(r, c)].degree_in(v).max(0) as usize)
                    .max()
                    .unwrap_or(0)
            })
            .sum();
        let npts = deg_bound + 1;
        let mut xs = Vec::with_capacity(npts);
        let mut ys = Vec::with_capacity(npts);
        for k in 0..npts {
            let x = Gaussian::from_int(k as i64);
            let m = self.subst_gauss(v, &x);
            ys.push(m.det_const());
            xs.push(x);
        }
        lagrange_interpolate(v, &xs, &ys)
    }
}

/// Interpolates the unique polynomial of degree < xs.len() through the points.
pub fn lagrange_interpolate(v: Var, xs: &[Gaussian], ys: &[Gaussian]) -> Poly {
    let n = xs.len();
    let mut acc = Poly::zero();
    for i in 0..n {
        if ys[i].is_zero() {
            continue;
        }
        let mut basis = Poly::constant(ys[i].clone());
        for j in 0..n {
            if j == i {
                continue;
            }
            let denom = (xs[i].clone() - xs[j].clone()).inv();
            let factor = Poly::var(v)
                .sub(&Poly::constant(xs[j].clone()))
                .scale(&denom);
            basis = basis.mul(&factor);
        }
        acc = acc.add(&basis);
    }
    acc
}

/// Operator `op` restricted to the column span of `basis`: the matrix X with
/// op·basis = basis·X. None if the span is not invariant.
pub fn restrict_operator(op: &Mat, basis: &Mat) -> Option<Mat> {
    let image = op.mul(basis);
    basis.solve(&image).filter(|x| basis.mul(x) == image)
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Poly;
    fn index(&self, (r, c): (usize, usize)) -> &Poly {
        &self.e[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Poly {
        &mut self.e[r * self.cols + c]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].pretty()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Multiplicity-tagged rational roots of a univariate polynomial, plus the
/// degree of the root-free remainder factor.
#[derive(Debug, Clone)]
pub struct RootReport {
    pub roots: Vec<(Gaussian, usize)>,
    pub remainder_degree: usize,
    pub remainder: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    NotUnivariate(String),
    CoefficientTooLarge,
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::NotUnivariate(v) => write!(f, "polynomial is not univariate (contains {v})"),
            RootError::CoefficientTooLarge => write!(f, "coefficient too large for exact root search"),
        }
    }
}

/// All rational roots of `p` as a polynomial in `v`, with multiplicities.
/// Complex (Gaussian) coefficients are allowed; a rational root must kill
/// both the real and imaginary parts.
pub fn rational_roots(p: &Poly, v: Var) -> Result<RootReport, RootError> {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, Zero};

    for w in p.vars() {
        if w != v {
            return Err(RootError::NotUnivariate(var_name(w)));
        }
    }
    assert!(p.min_degree_in(v) >= 0, "Laurent polynomial in root search");
    assert!(!p.is_zero(), "zero polynomial in root search");

    let deg = p.degree_in(v) as usize;
    let coeffs: Vec<Gaussian> = (0..=deg as i32).map(|k| {
        p.coeff_of(v, k).as_constant().unwrap()
    }).collect();

    // factor out x^k
    let zero_mult = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut work: Vec<Gaussian> = coeffs[zero_mult..].to_vec();

    let mut roots: Vec<(Gaussian, usize)> = Vec::new();
    if zero_mult > 0 {
        roots.push((Gaussian::zero(), zero_mult));
    }

    // candidates from the real part (or imaginary if real vanishes)
    let eval = |cs: &[Gaussian], x: &Gaussian| -> Gaussian {
        let mut acc = Gaussian::zero();
        for c in cs.iter().rev() {
            acc = acc * x.clone() + c;
        }
        acc
    };
    let deflate = |cs: &[Gaussian], r: &Gaussian| -> Vec<Gaussian> {
        // synthetic division by (x - r); exactness checked by caller via eval
        let n = cs.len();
        let mut out = vec![Gaussian::zero(); n - 1];
        let mut carry = cs[n - 1].clone();
        for k in (1..n).rev() {
            out[k - 1] = carry.clone();
            if k >= 2 {
                carry = cs[k - 1].clone() + carry * r.clone();
            }
        }
        out
    };

    'outer: while work.len() > 1 {
        let use_re = work.iter().any(|c| !c.re.is_zero());
        let part: Vec<num_rational::BigRational> = work
            .iter()
            .map(|c| if use_re { c.re.clone() } else { c.im.clone() })
            .collect();
        // integerize
        let mut lcm = BigInt::one();
        for r in &part {
            lcm = num_integer::Integer::lcm(&lcm, r.denom());
        }
        let ints: Vec<BigInt> = part.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
        let a0 = ints.iter().find(|x| !x.is_zero()).unwrap().abs();
        let an = ints.last().unwrap().abs();
        if a0.bits() > 52 || an.bits() > 52 {
            return Err(RootError::CoefficientTooLarge);
        }
        let divs = |n: u64| -> Vec<u64> {
            let mut d = Vec::new();
            let mut k = 1u64;
            while k * k <= n {
                if n % k == 0 {
                    d.push(k);
                    d.push(n / k);
                }
                k += 1;
            }
            d
        };
        use num_traits::ToPrimitive;
        let ps = divs(a0.to_u64().unwrap().max(1));
        let qs = divs(an.to_u64().unwrap().max(1));
        for p_ in &ps {
            for q_ in &qs {
                for sign in [1i64, -1] {
                    let cand = Gaussian::ratio(sign * *p_ as i64, *q_ as i64);
                    if eval(&work, &cand).is_zero() {
                        let mut mult = 0;
                        while work.len() > 1 && eval(&work, &cand).is_zero() {
                            work = deflate(&work, &cand);
                            mult += 1;
                        }
                        roots.push((cand, mult));
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }

    let remainder_degree = work.len() - 1;
    let mut remainder = Poly::zero();
    for (k, c) in work.iter().enumerate() {
        remainder = remainder.add(&Poly::var_pow(v, k as i32).scale(c));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RootReport { roots, remainder_degree, remainder })
}

/// Eigenvalues of a constant square matrix, required to be all rational;
/// returns (eigenvalue, algebraic multiplicity) pairs or the irreducible
/// remainder of the characteristic polynomial.
pub fn rational_eigenvalues(m: &Mat) -> Result<Vec<(Gaussian, usize)>, RootReport> {
    assert!(m.is_square() && m.is_constant());
    let t = crate::poly::var("_eig_t");
    let pencil = Mat::from_fn(m.rows, m.cols, |r, c| {
        let mut p = m[(r, c)].clone();
        if r == c {
            p = p.sub(&Poly::var(t));
        }
        p
    });
    let charpoly = pencil.det_univariate(t);
    let report = rational_roots(&charpoly, t).expect("char poly root search");
    if report.remainder_degree > 0 {
        return Err(report);
    }
    Ok(report.roots)
}

/// Eigenvalue/eigenspace-dimension pairs via kernel ranks.
pub fn eigen_spectrum(m: &Mat) -> Result<BTreeMap<Gaussian, usize>, RootReport> {
    let eigs = rational_eigenvalues(m)?;
    let mut out = BTreeMap::new();
    for (lambda, _alg) in eigs {
        let shifted = Mat::from_fn(m.rows, m.cols, |r, c| {
            if r == c {
                m[(r, c)].sub(&Poly::constant(lambda.clone()))
            } else {
                m[(r, c)].clone()
            }
        });
        let geo = shifted.nullspace().cols;
        out.insert(lambda, geo);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var;

    #[test]
    fn kron_identity_factor() {
        let s = Mat::from_ints(3, 3, &[0, 1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(Mat::identity(1).kron(&s), s);
        let block = Mat::identity(2).kron(&s);
        assert_eq!(block.rows, 6);
        assert_eq!(block.block(0, 0, 3, 3), s);
        assert_eq!(block.block(3, 3, 3, 3), s);
        assert!(block.block(0, 3, 3, 3).is_zero());
    }

    #[test]
    fn nullspace_basics() {
        assert_eq!(Mat::identity(3).nullspace().cols, 0);
        let z = Mat::zeros(2, 2);
        assert_eq!(z.nullspace().cols, 2);
        let m = Mat::from_ints(2, 3, &[1, 2, 3, 2, 4, 6]);
        let ns = m.nullspace();
        assert_eq!(ns.cols, 2);
        assert!(m.mul(&ns).is_zero());
        assert_eq!(m.rank() + ns.cols, m.cols);
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let x = var("bx");
        let y = var("by");
        let m = Mat::from_fn(3, 3, |r, c| {
            Poly::var_pow(x, r as i32)
                .mul(&Poly::var_pow(y, c as i32))
                .add(&Poly::from_int((r + 2 * c) as i64))
        });
        assert_eq!(m.det_bareiss(), m.det_cofactor());
    }

    #[test]
    fn det_univariate_interpolation() {
        let t = var("bt");
        let m = Mat::from_fn(4, 4, |r, c| {
            if r == c {
                Poly::var(t).sub(&Poly::from_int(r as i64))
            } else {
                Poly::from_int(((r * 7 + c * 3) % 5) as i64)
            }
        });
        assert_eq!(m.det_univariate(t), m.det_bareiss());
    }

    #[test]
    fn rational_root_extraction() {
        let t = var("rt");
        // (t - 1/2)^2 (t + 3) t
        let p = Poly::var(t)
            .sub(&Poly::ratio(1, 2))
            .pow(2)
            .mul(&Poly::var(t).add(&Poly::from_int(3)))
            .mul(&Poly::var(t));
        let rep = rational_roots(&p, t).unwrap();
        assert_eq!(rep.remainder_degree, 0);
        let got: Vec<(String, usize)> = rep
            .roots
            .iter()
            .map(|(r, m)| (r.to_exact_string(), *m))
            .collect();
        assert!(got.contains(&("1/2".into(), 2)));
        assert!(got.contains(&("-3".into(), 1)));
        assert!(got.contains(&("0".into(), 1)));
    }

    #[test]
    fn exp_nilpotent_inverse_pair() {
        let n = Mat::from_ints(3, 3, &[0, 0, 0, 1, 0, 0, 2, 1, 0]);
        let e = n.exp_nilpotent();
        let einv = n.neg().exp_nilpotent();
        assert_eq!(e.mul(&einv), Mat::identity(3));
    }
}
