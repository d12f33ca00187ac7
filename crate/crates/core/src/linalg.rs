//! Exact linear algebra over the coefficient domains: rank, kernel,
//! determinant, SL_n completion, and the rank-deficiency counting formula.
//!
//! Prime-field matrices are reduced with fast `i64` Gauss-Jordan elimination;
//! integer-ring matrices go through arbitrary-precision rationals so ranks and
//! determinants are exact with no overflow concerns.

use crate::field::FieldSpec;
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Zero};

/// Exact reduced rational (gcd 1, positive denominator — maintained by the
/// underlying representation).
pub type Rational = BigRational;

/// Dense row-major matrix over one [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn new(spec: FieldSpec, rows: usize, cols: usize, data: Vec<i64>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        let data = data.into_iter().map(|v| spec.canon(v)).collect();
        Ok(Matrix {
            spec,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(spec: FieldSpec, rows: Vec<Vec<i64>>) -> Result<Matrix> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(spec, m, n, rows.into_iter().flatten().collect())
    }

    pub fn zero(spec: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            spec,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zero(spec, n, n);
        for i in 0..n {
            m.data[i * n + i] = spec.canon(1);
        }
        m
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = self.spec.canon(v);
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.spec, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// Matrix-vector product over the matrix's domain.
    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = vec![0i64; self.rows];
        for r in 0..self.rows {
            let mut acc = 0i64;
            for c in 0..self.cols {
                acc = self.spec.add(acc, self.spec.mul(self.get(r, c), self.spec.canon(v[c]))?)?;
            }
            out[r] = acc;
        }
        Ok(out)
    }

    /// Rank by exact row reduction.
    pub fn rank(&self) -> usize {
        match self.spec {
            FieldSpec::Prime(p) => {
                let mut data = self.data.clone();
                rref_prime(p as i64, self.rows, self.cols, &mut data).0
            }
            FieldSpec::Integer => {
                let mut data: Vec<Rational> =
                    self.data.iter().map(|&v| Rational::from(BigInt::from(v))).collect();
                rref_rational(self.rows, self.cols, &mut data).0
            }
        }
    }

    /// A basis of `{v : Mv = 0}`. The basis vectors are linearly independent
    /// and there are exactly `cols - rank` of them; over the integer ring they
    /// are scaled to integer entries.
    pub fn kernel_basis(&self) -> Vec<Vec<i64>> {
        match self.spec {
            FieldSpec::Prime(p) => {
                let p = p as i64;
                let mut data = self.data.clone();
                let (_, pivots) = rref_prime(p, self.rows, self.cols, &mut data);
                let mut basis = Vec::new();
                let mut is_pivot = vec![false; self.cols];
                for &c in &pivots {
                    is_pivot[c] = true;
                }
                for free in 0..self.cols {
                    if is_pivot[free] {
                        continue;
                    }
                    let mut v = vec![0i64; self.cols];
                    v[free] = 1;
                    for (i, &pc) in pivots.iter().enumerate() {
                        v[pc] = (-data[i * self.cols + free]).rem_euclid(p);
                    }
                    basis.push(v);
                }
                basis
            }
            FieldSpec::Integer => {
                let mut data: Vec<Rational> =
                    self.data.iter().map(|&v| Rational::from(BigInt::from(v))).collect();
                let (_, pivots) = rref_rational(self.rows, self.cols, &mut data);
                let mut is_pivot = vec![false; self.cols];
                for &c in &pivots {
                    is_pivot[c] = true;
                }
                let mut basis = Vec::new();
                for free in 0..self.cols {
                    if is_pivot[free] {
                        continue;
                    }
                    let mut v = vec![Rational::one(); 0];
                    v.resize(self.cols, Rational::zero());
                    v[free] = Rational::one();
                    for (i, &pc) in pivots.iter().enumerate() {
                        v[pc] = -data[i * self.cols + free].clone();
                    }
                    // Clear denominators to land back in the integer ring.
                    let lcm = v
                        .iter()
                        .fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()));
                    let ints: Vec<i64> = v
                        .iter()
                        .map(|x| {
                            let scaled = x.numer() * (&lcm / x.denom());
                            i64::try_from(scaled).expect("kernel entry fits i64")
                        })
                        .collect();
                    basis.push(ints);
                }
                basis
            }
        }
    }

    /// Determinant of a square matrix by exact elimination.
    pub fn det(&self) -> Result<i64> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        match self.spec {
            FieldSpec::Prime(p) => Ok(det_prime(p as i64, self.rows, self.data.clone())),
            FieldSpec::Integer => {
                let data: Vec<Rational> =
                    self.data.iter().map(|&v| Rational::from(BigInt::from(v))).collect();
                let d = det_rational(self.rows, data);
                debug_assert!(d.denom().is_one());
                i64::try_from(d.numer().clone()).map_err(|_| Error::IntegerOverflow("det"))
            }
        }
    }
}

fn rref_prime(p: i64, rows: usize, cols: usize, data: &mut [i64]) -> (usize, Vec<usize>) {
    let spec = FieldSpec::Prime(p as u32);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            data.swap(r * cols + j, pr * cols + j);
        }
        let inv = spec.inv(data[r * cols + c]).expect("nonzero pivot");
        for j in 0..cols {
            data[r * cols + j] = data[r * cols + j] * inv % p;
        }
        for i in 0..rows {
            if i != r && data[i * cols + c] != 0 {
                let f = data[i * cols + c];
                for j in 0..cols {
                    data[i * cols + j] = (data[i * cols + j] - f * data[r * cols + j]).rem_euclid(p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (r, pivots)
}

fn rref_rational(rows: usize, cols: usize, data: &mut [Rational]) -> (usize, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        for j in 0..cols {
            data.swap(r * cols + j, pr * cols + j);
        }
        let inv = data[r * cols + c].recip();
        for j in 0..cols {
            data[r * cols + j] = &data[r * cols + j] * &inv;
        }
        for i in 0..rows {
            if i != r && !data[i * cols + c].is_zero() {
                let f = data[i * cols + c].clone();
                for j in 0..cols {
                    let sub = &f * &data[r * cols + j];
                    data[i * cols + j] = &data[i * cols + j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (r, pivots)
}

fn det_prime(p: i64, n: usize, mut data: Vec<i64>) -> i64 {
    let mut det = 1i64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| data[i * n + c] != 0) else {
            return 0;
        };
        if pr != c {
            for j in 0..n {
                data.swap(c * n + j, pr * n + j);
            }
            det = (p - det) % p;
        }
        let pivot = data[c * n + c];
        det = det * pivot % p;
        let inv = FieldSpec::Prime(p as u32).inv(pivot).expect("nonzero pivot");
        for i in c + 1..n {
            if data[i * n + c] != 0 {
                let f = data[i * n + c] * inv % p;
                for j in c..n {
                    data[i * n + j] = (data[i * n + j] - f * data[c * n + j]).rem_euclid(p);
                }
            }
        }
    }
    det
}

fn det_rational(n: usize, mut data: Vec<Rational>) -> Rational {
    let mut det = Rational::one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !data[i * n + c].is_zero()) else {
            return Rational::zero();
        };
        if pr != c {
            for j in 0..n {
                data.swap(c * n + j, pr * n + j);
            }
            det = -det;
        }
        let pivot = data[c * n + c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if !data[i * n + c].is_zero() {
                let f = &data[i * n + c] / &pivot;
                for j in c..n {
                    let sub = &f * &data[c * n + j];
                    data[i * n + j] = &data[i * n + j] - sub;
                }
            }
        }
    }
    det
}

/// Standard basis vector e_i (0-based) in dimension `n`.
pub fn std_basis_vector(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v
}

/// Completes linearly independent `vectors` (columns-to-be) to a matrix
/// A in SL_n with A e_i = v_i for the given vectors. The completion appends
/// greedily chosen standard basis vectors and rescales the last column so
/// det(A) = 1; when k = n the prescribed last column itself absorbs the
/// rescaling.
pub fn complete_to_sl(spec: FieldSpec, n: usize, vectors: &[Vec<i64>]) -> Result<Matrix> {
    if !spec.is_prime_field() {
        return Err(Error::PrimeFieldRequired(spec.to_string()));
    }
    let k = vectors.len();
    if k > n {
        return Err(Error::DimensionMismatch(format!(
            "{k} vectors cannot be independent in dimension {n}"
        )));
    }
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vector {} has length {}, expected {}",
                i + 1,
                v.len(),
                n
            )));
        }
        let stacked = Matrix::from_rows(spec, vectors[..=i].to_vec())?;
        if stacked.rank() != i + 1 {
            return Err(Error::DependentVector { index: i + 1 });
        }
    }

    let mut cols: Vec<Vec<i64>> = vectors.iter().map(|v| v.to_vec()).collect();
    for j in 0..n {
        if cols.len() == n {
            break;
        }
        let mut candidate = cols.clone();
        candidate.push(std_basis_vector(n, j));
        let rank = Matrix::from_rows(spec, candidate.clone())?.rank();
        if rank == cols.len() + 1 {
            cols = candidate;
        }
    }
    debug_assert_eq!(cols.len(), n);

    let mut a = Matrix::zero(spec, n, n);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            a.set(i, j, col[i]);
        }
    }
    let g = a.det()?;
    if g != spec.canon(1) {
        let ginv = spec.inv(g)?;
        for i in 0..n {
            let v = spec.mul(a.get(i, n - 1), ginv)?;
            a.set(i, n - 1, v);
        }
    }
    debug_assert_eq!(a.det().unwrap(), spec.canon(1));
    Ok(a)
}

/// Exact probability that a uniform m x n matrix over a size-q alphabet-field
/// has rank < m, namely 1 - prod_{i=0}^{m-1} (1 - q^{i-n}). `q` may be any
/// integer >= 2 (the counting argument only needs a field of that size to
/// exist, and the consumers instantiate prime q).
pub fn rank_deficient_probability(m: u32, n: u32, q: u64) -> Result<Rational> {
    if m > n {
        return Err(Error::DimensionMismatch(format!(
            "m = {m} exceeds n = {n}"
        )));
    }
    if m == 0 || q < 2 {
        return Err(Error::DimensionMismatch(format!(
            "need m >= 1 and q >= 2, got m = {m}, q = {q}"
        )));
    }
    let q = BigInt::from(q);
    let mut full_rank = Rational::one();
    for i in 0..m {
        let qpow = q.pow(n - i);
        full_rank *= Rational::new(&qpow - 1, qpow);
    }
    Ok(Rational::one() - full_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use rand::{Rng, SeedableRng};

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rank_identity_and_zero() {
        for n in 1..5 {
            assert_eq!(Matrix::identity(f(3), n).rank(), n);
            assert_eq!(Matrix::zero(f(3), n, n).rank(), 0);
        }
        assert_eq!(Matrix::identity(FieldSpec::integer(), 4).rank(), 4);
    }

    // Brute-force oracle: rank = max size of a square submatrix with nonzero
    // permutation-sum determinant.
    fn rank_oracle(m: &Matrix) -> usize {
        let spec = m.spec();
        let mut best = 0;
        for s in 1..=m.rows().min(m.cols()) {
            for rows in (0..m.rows()).combinations(s) {
                for cols in (0..m.cols()).combinations(s) {
                    let mut det = 0i64;
                    for perm in (0..s).permutations(s) {
                        let mut sign = 1i64;
                        for i in 0..s {
                            for j in i + 1..s {
                                if perm[i] > perm[j] {
                                    sign = -sign;
                                }
                            }
                        }
                        let mut prod = spec.canon(sign);
                        for i in 0..s {
                            prod = spec.mul(prod, m.get(rows[i], cols[perm[i]])).unwrap();
                        }
                        det = spec.add(det, prod).unwrap();
                    }
                    if det != 0 {
                        best = best.max(s);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn rank_matches_submatrix_oracle_f3() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        for _ in 0..20 {
            let data: Vec<i64> = (0..20).map(|_| rng.gen_range(0..3)).collect();
            let m = Matrix::new(f(3), 4, 5, data).unwrap();
            assert_eq!(m.rank(), rank_oracle(&m));
        }
    }

    #[test]
    fn kernel_extremes() {
        let z = Matrix::zero(f(2), 2, 3);
        assert_eq!(z.kernel_basis().len(), 3);
        let id = Matrix::identity(f(5), 3);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_equals_enumeration_over_f2() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        for n in 1..=4usize {
            for _ in 0..30 {
                let rows = rng.gen_range(1..=4);
                let data: Vec<i64> = (0..rows * n).map(|_| rng.gen_range(0..2)).collect();
                let m = Matrix::new(f(2), rows, n, data).unwrap();
                let basis = m.kernel_basis();
                assert_eq!(basis.len(), n - m.rank());
                // Span of the basis over F_2.
                let mut span = std::collections::BTreeSet::new();
                for mask in 0..(1u32 << basis.len()) {
                    let mut v = vec![0i64; n];
                    for (b, vec) in basis.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            for j in 0..n {
                                v[j] = (v[j] + vec[j]) % 2;
                            }
                        }
                    }
                    span.insert(v);
                }
                let brute: std::collections::BTreeSet<Vec<i64>> = (0..(1u32 << n))
                    .map(|mask| (0..n).map(|j| (mask >> j & 1) as i64).collect::<Vec<_>>())
                    .filter(|v| m.mul_vec(v).unwrap().iter().all(|&x| x == 0))
                    .collect();
                assert_eq!(span, brute);
            }
        }
    }

    #[test]
    fn rank_nullity_randomized() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let (r, c) = (rng.gen_range(1..5), rng.gen_range(1..6));
            let data: Vec<i64> = (0..r * c).map(|_| rng.gen_range(0..5)).collect();
            let m = Matrix::new(f(5), r, c, data).unwrap();
            assert_eq!(m.rank() + m.kernel_basis().len(), c);
        }
    }

    #[test]
    fn complete_to_sl_examples() {
        // v1 = e1 in F_2^3.
        let a = complete_to_sl(f(2), 3, &[vec![1, 0, 0]]).unwrap();
        assert_eq!(a.det().unwrap(), 1);
        assert_eq!(a.column(0), vec![1, 0, 0]);

        // v1 = (1,1,0), v2 = (0,1,1) over F_2.
        let a = complete_to_sl(f(2), 3, &[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(a.det().unwrap(), 1);
        assert_eq!(a.column(0), vec![1, 1, 0]);
        assert_eq!(a.column(1), vec![0, 1, 1]);

        // k = n with nontrivial determinant: last column gets rescaled.
        let a = complete_to_sl(f(5), 2, &[vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(a.det().unwrap(), 1);
        assert_eq!(a.column(0), vec![2, 0]);

        let err = complete_to_sl(f(2), 3, &[vec![1, 1, 0], vec![1, 1, 0]]);
        assert_eq!(err, Err(Error::DependentVector { index: 2 }));
    }

    #[test]
    fn complete_to_sl_randomized_property() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        for _ in 0..100 {
            let n = rng.gen_range(2..6);
            let k = rng.gen_range(1..=n);
            let p = [2u64, 3, 5][rng.gen_range(0..3)];
            let spec = f(p);
            // Rejection-sample an independent tuple.
            let vectors: Vec<Vec<i64>> = loop {
                let cand: Vec<Vec<i64>> = (0..k)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..p as i64)).collect())
                    .collect();
                if Matrix::from_rows(spec, cand.clone()).unwrap().rank() == k {
                    break cand;
                }
            };
            let a = complete_to_sl(spec, n, &vectors).unwrap();
            assert_eq!(a.det().unwrap(), 1);
            let upto = if k == n { n - 1 } else { k };
            for (i, v) in vectors.iter().enumerate().take(upto) {
                assert_eq!(&a.column(i), v, "column {i}");
            }
        }
    }

    #[test]
    fn integer_matrix_rank_and_det() {
        let m = Matrix::from_rows(
            FieldSpec::integer(),
            vec![vec![2, 4, 1], vec![1, 2, 0], vec![3, 6, 1]],
        )
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det().unwrap(), 0);
        let m2 = Matrix::from_rows(FieldSpec::integer(), vec![vec![3, 1], vec![1, 2]]).unwrap();
        assert_eq!(m2.det().unwrap(), 5);
        assert_eq!(m2.kernel_basis().len(), 0);
    }

    #[test]
    fn rank_deficient_trivial_and_enumerated() {
        assert_eq!(
            rank_deficient_probability(1, 2, 2).unwrap(),
            Rational::new(1.into(), 4.into())
        );
        // All 64 binary 2x3 matrices: count rank < 2 by enumeration.
        let mut deficient = 0u32;
        for bits in 0..64u32 {
            let data: Vec<i64> = (0..6).map(|i| (bits >> i & 1) as i64).collect();
            if Matrix::new(f(2), 2, 3, data).unwrap().rank() < 2 {
                deficient += 1;
            }
        }
        assert_eq!(deficient, 22);
        assert_eq!(
            rank_deficient_probability(2, 3, 2).unwrap(),
            Rational::new(11.into(), 32.into())
        );
        assert!(rank_deficient_probability(3, 2, 2).is_err());
    }

    #[test]
    fn rank_deficient_paper_bounds_small() {
        // 1 <= Pr / q^{-(n-m+1)} < 1 + 1/(q-1), spot-checked here; the full
        // sweep lives in the acceptance suite.
        for (m, n, q) in [(1u32, 1u32, 2u64), (2, 4, 3), (3, 5, 5)] {
            let pr = rank_deficient_probability(m, n, q).unwrap();
            let scale = Rational::from(BigInt::from(q).pow(n - m + 1));
            let ratio = pr * scale;
            assert!(ratio >= Rational::one());
            let bound = Rational::one() + Rational::new(1.into(), (q - 1).into());
            assert!(ratio < bound);
        }
    }
}
