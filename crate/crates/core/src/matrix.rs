//! Dense/sparse complex operator matrices.
//!
//! Generator matrices and blade images are scaled permutation matrices, so
//! they get a dedicated flat storage (`Monomial`) whose products and
//! Kronecker factors compose in O(dim) with no per-row allocation. Sums of a
//! few of those live in general row-sparse storage; a result only densifies
//! when it actually fills in. Eigensolves and matrix exponentials
//! materialize a dense copy on entry.

use faer::linalg::solvers::Solve;
use faer::Mat;
use num_complex::Complex64;
use thiserror::Error;

/// Fraction of nonzero entries beyond which a sparse result is densified.
const DENSIFY_FILL: f64 = 0.25;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

#[derive(Clone, Debug)]
enum Storage {
    Dense(Mat<Complex64>),
    /// `rows[i]` holds `(column, value)` pairs sorted by column, no zeros.
    Sparse(Vec<Vec<(u32, Complex64)>>),
    /// Scaled permutation: row `i` has `vals[i]` at `cols[i]` (a zero value
    /// means the row is empty).
    Monomial {
        cols: Vec<u32>,
        vals: Vec<Complex64>,
    },
}

fn monomial_rows(cols: &[u32], vals: &[Complex64]) -> Vec<Vec<(u32, Complex64)>> {
    cols.iter()
        .zip(vals)
        .map(|(&c, &v)| {
            if v == Complex64::ZERO {
                Vec::new()
            } else {
                vec![(c, v)]
            }
        })
        .collect()
}

/// A square complex matrix representing an operator on the spinor or blade
/// basis.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    dim: usize,
    storage: Storage,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> OperatorMatrix {
        OperatorMatrix {
            dim,
            storage: Storage::Sparse(vec![Vec::new(); dim]),
        }
    }

    pub fn identity(dim: usize) -> OperatorMatrix {
        OperatorMatrix::scaled_permutation(
            (0..dim as u32).collect(),
            vec![Complex64::new(1.0, 0.0); dim],
        )
    }

    /// Scaled permutation matrix: row `i` has `values[i]` at `columns[i]`.
    pub fn scaled_permutation(columns: Vec<u32>, values: Vec<Complex64>) -> OperatorMatrix {
        assert_eq!(columns.len(), values.len());
        let dim = columns.len();
        OperatorMatrix {
            dim,
            storage: Storage::Monomial {
                cols: columns,
                vals: values,
            },
        }
    }

    /// Builds from unsorted triplets, summing duplicates.
    pub fn from_triplets(
        dim: usize,
        triplets: impl IntoIterator<Item = (u32, u32, Complex64)>,
    ) -> OperatorMatrix {
        let mut rows: Vec<Vec<(u32, Complex64)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            rows[r as usize].push((c, v));
        }
        for row in &mut rows {
            normalize_row(row);
        }
        OperatorMatrix {
            dim,
            storage: Storage::Sparse(rows),
        }
        .maybe_densified()
    }

    pub fn from_dense(mat: Mat<Complex64>) -> OperatorMatrix {
        assert_eq!(mat.nrows(), mat.ncols());
        OperatorMatrix {
            dim: mat.nrows(),
            storage: Storage::Dense(mat),
        }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> OperatorMatrix {
        OperatorMatrix::from_dense(Mat::from_fn(dim, dim, f))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_sparse(&self) -> bool {
        !matches!(self.storage, Storage::Dense(_))
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(m) => {
                let mut count = 0;
                for j in 0..self.dim {
                    for i in 0..self.dim {
                        if m[(i, j)] != Complex64::ZERO {
                            count += 1;
                        }
                    }
                }
                count
            }
            Storage::Sparse(rows) => rows.iter().map(|r| r.len()).sum(),
            Storage::Monomial { vals, .. } => {
                vals.iter().filter(|&&v| v != Complex64::ZERO).count()
            }
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        match &self.storage {
            Storage::Dense(m) => m[(i, j)],
            Storage::Sparse(rows) => rows[i]
                .binary_search_by_key(&(j as u32), |&(c, _)| c)
                .map(|k| rows[i][k].1)
                .unwrap_or(Complex64::ZERO),
            Storage::Monomial { cols, vals } => {
                if cols[i] as usize == j {
                    vals[i]
                } else {
                    Complex64::ZERO
                }
            }
        }
    }

    /// Materializes a dense copy.
    pub fn to_dense(&self) -> Mat<Complex64> {
        match &self.storage {
            Storage::Dense(m) => m.clone(),
            Storage::Sparse(rows) => {
                let mut out = Mat::zeros(self.dim, self.dim);
                for (i, row) in rows.iter().enumerate() {
                    for &(c, v) in row {
                        out[(i, c as usize)] = v;
                    }
                }
                out
            }
            Storage::Monomial { cols, vals } => {
                let mut out = Mat::zeros(self.dim, self.dim);
                for (i, (&c, &v)) in cols.iter().zip(vals).enumerate() {
                    out[(i, c as usize)] = v;
                }
                out
            }
        }
    }

    fn to_rows(&self) -> Vec<Vec<(u32, Complex64)>> {
        match &self.storage {
            Storage::Sparse(rows) => rows.clone(),
            Storage::Monomial { cols, vals } => monomial_rows(cols, vals),
            Storage::Dense(_) => unreachable!("dense operands never take the sparse path"),
        }
    }

    fn maybe_densified(self) -> OperatorMatrix {
        if let Storage::Sparse(_) = &self.storage {
            let budget =
                ((self.dim as f64 * self.dim as f64 * DENSIFY_FILL) as usize).max(4 * self.dim);
            if self.nnz() > budget {
                return OperatorMatrix::from_dense(self.to_dense());
            }
        }
        self
    }

    pub fn scale(&self, factor: Complex64) -> OperatorMatrix {
        match &self.storage {
            Storage::Dense(m) => {
                OperatorMatrix::from_dense(Mat::from_fn(self.dim, self.dim, |i, j| {
                    m[(i, j)] * factor
                }))
            }
            Storage::Sparse(rows) => {
                if factor == Complex64::ZERO {
                    return OperatorMatrix::zeros(self.dim);
                }
                let rows = rows
                    .iter()
                    .map(|row| row.iter().map(|&(c, v)| (c, v * factor)).collect())
                    .collect();
                OperatorMatrix {
                    dim: self.dim,
                    storage: Storage::Sparse(rows),
                }
            }
            Storage::Monomial { cols, vals } => OperatorMatrix {
                dim: self.dim,
                storage: Storage::Monomial {
                    cols: cols.clone(),
                    vals: vals.iter().map(|&v| v * factor).collect(),
                },
            },
        }
    }

    pub fn add(&self, other: &OperatorMatrix) -> OperatorMatrix {
        self.zip_add(other, Complex64::new(1.0, 0.0))
    }

    pub fn sub(&self, other: &OperatorMatrix) -> OperatorMatrix {
        self.zip_add(other, Complex64::new(-1.0, 0.0))
    }

    fn zip_add(&self, other: &OperatorMatrix, factor: Complex64) -> OperatorMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        if matches!(self.storage, Storage::Dense(_)) || matches!(other.storage, Storage::Dense(_)) {
            let a = self.to_dense();
            let b = other.to_dense();
            return OperatorMatrix::from_dense(Mat::from_fn(self.dim, self.dim, |i, j| {
                a[(i, j)] + b[(i, j)] * factor
            }));
        }
        let a = self.to_rows();
        let b = other.to_rows();
        let rows = a
            .into_iter()
            .zip(b)
            .map(|(mut row, rb)| {
                row.extend(rb.into_iter().map(|(c, v)| (c, v * factor)));
                normalize_row(&mut row);
                row
            })
            .collect();
        OperatorMatrix {
            dim: self.dim,
            storage: Storage::Sparse(rows),
        }
        .maybe_densified()
    }

    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        match (&self.storage, &other.storage) {
            (
                Storage::Monomial { cols: ca, vals: va },
                Storage::Monomial { cols: cb, vals: vb },
            ) => {
                let mut cols = Vec::with_capacity(self.dim);
                let mut vals = Vec::with_capacity(self.dim);
                for (&through, &v) in ca.iter().zip(va) {
                    cols.push(cb[through as usize]);
                    vals.push(v * vb[through as usize]);
                }
                OperatorMatrix {
                    dim: self.dim,
                    storage: Storage::Monomial { cols, vals },
                }
            }
            (Storage::Monomial { cols, vals }, Storage::Sparse(b)) => {
                let rows = cols
                    .iter()
                    .zip(vals)
                    .map(|(&through, &v)| {
                        if v == Complex64::ZERO {
                            return Vec::new();
                        }
                        b[through as usize]
                            .iter()
                            .map(|&(c, w)| (c, v * w))
                            .collect()
                    })
                    .collect();
                OperatorMatrix {
                    dim: self.dim,
                    storage: Storage::Sparse(rows),
                }
                .maybe_densified()
            }
            (Storage::Sparse(a), Storage::Monomial { cols, vals }) => {
                let rows = a
                    .iter()
                    .map(|row| {
                        let mut out: Vec<(u32, Complex64)> = row
                            .iter()
                            .filter_map(|&(k, v)| {
                                let w = vals[k as usize];
                                (w != Complex64::ZERO).then(|| (cols[k as usize], v * w))
                            })
                            .collect();
                        normalize_row(&mut out);
                        out
                    })
                    .collect();
                OperatorMatrix {
                    dim: self.dim,
                    storage: Storage::Sparse(rows),
                }
                .maybe_densified()
            }
            (Storage::Sparse(a), Storage::Sparse(b)) => {
                let rows = a
                    .iter()
                    .map(|ra| {
                        let mut row = Vec::new();
                        for &(k, va) in ra {
                            for &(c, vb) in &b[k as usize] {
                                row.push((c, va * vb));
                            }
                        }
                        normalize_row(&mut row);
                        row
                    })
                    .collect();
                OperatorMatrix {
                    dim: self.dim,
                    storage: Storage::Sparse(rows),
                }
                .maybe_densified()
            }
            (Storage::Dense(a), Storage::Dense(b)) => OperatorMatrix::from_dense(a * b),
            (_, Storage::Dense(b)) => {
                // sparse-times-dense: combine rows of b
                let mut out = Mat::zeros(self.dim, self.dim);
                for (i, row) in self.to_rows().into_iter().enumerate() {
                    for (k, v) in row {
                        for j in 0..self.dim {
                            out[(i, j)] += v * b[(k as usize, j)];
                        }
                    }
                }
                OperatorMatrix::from_dense(out)
            }
            (Storage::Dense(a), _) => {
                // dense-times-sparse: scatter columns of a
                let mut out = Mat::zeros(self.dim, self.dim);
                for (k, row) in other.to_rows().into_iter().enumerate() {
                    for (j, v) in row {
                        for i in 0..self.dim {
                            out[(i, j as usize)] += a[(i, k)] * v;
                        }
                    }
                }
                OperatorMatrix::from_dense(out)
            }
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> OperatorMatrix {
        match &self.storage {
            Storage::Dense(m) => {
                OperatorMatrix::from_dense(Mat::from_fn(self.dim, self.dim, |i, j| {
                    m[(j, i)].conj()
                }))
            }
            Storage::Sparse(rows) => {
                let mut out: Vec<Vec<(u32, Complex64)>> = vec![Vec::new(); self.dim];
                for (i, row) in rows.iter().enumerate() {
                    for &(c, v) in row {
                        out[c as usize].push((i as u32, v.conj()));
                    }
                }
                for row in &mut out {
                    row.sort_unstable_by_key(|&(c, _)| c);
                }
                OperatorMatrix {
                    dim: self.dim,
                    storage: Storage::Sparse(out),
                }
            }
            Storage::Monomial { cols, vals } => {
                let mut out_cols = vec![0u32; self.dim];
                let mut out_vals = vec![Complex64::ZERO; self.dim];
                for (i, (&c, &v)) in cols.iter().zip(vals).enumerate() {
                    if v != Complex64::ZERO {
                        out_cols[c as usize] = i as u32;
                        out_vals[c as usize] = v.conj();
                    }
                }
                OperatorMatrix {
                    dim: self.dim,
                    storage: Storage::Monomial {
                        cols: out_cols,
                        vals: out_vals,
                    },
                }
            }
        }
    }

    /// Kronecker product.
    pub fn kron(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let dim = self.dim * other.dim;
        match (&self.storage, &other.storage) {
            (
                Storage::Monomial { cols: ca, vals: va },
                Storage::Monomial { cols: cb, vals: vb },
            ) => {
                let mut cols = Vec::with_capacity(dim);
                let mut vals = Vec::with_capacity(dim);
                for (&c1, &v1) in ca.iter().zip(va) {
                    for (&c2, &v2) in cb.iter().zip(vb) {
                        cols.push(c1 * other.dim as u32 + c2);
                        vals.push(v1 * v2);
                    }
                }
                OperatorMatrix {
                    dim,
                    storage: Storage::Monomial { cols, vals },
                }
            }
            (Storage::Dense(_), _) | (_, Storage::Dense(_)) => {
                let a = self.to_dense();
                let b = other.to_dense();
                OperatorMatrix::from_dense(Mat::from_fn(dim, dim, |i, j| {
                    a[(i / other.dim, j / other.dim)] * b[(i % other.dim, j % other.dim)]
                }))
            }
            _ => {
                let a = self.to_rows();
                let b = other.to_rows();
                let mut rows: Vec<Vec<(u32, Complex64)>> = Vec::with_capacity(dim);
                for ra in &a {
                    for rb in &b {
                        let mut row = Vec::with_capacity(ra.len() * rb.len());
                        for &(ca, va) in ra {
                            for &(cb, vb) in rb {
                                row.push((ca * other.dim as u32 + cb, va * vb));
                            }
                        }
                        row.sort_unstable_by_key(|&(c, _)| c);
                        rows.push(row);
                    }
                }
                OperatorMatrix {
                    dim,
                    storage: Storage::Sparse(rows),
                }
            }
        }
    }

    /// Max entry modulus.
    pub fn inf_norm(&self) -> f64 {
        match &self.storage {
            Storage::Dense(m) => {
                let mut max = 0.0f64;
                for j in 0..self.dim {
                    for i in 0..self.dim {
                        max = max.max(m[(i, j)].norm());
                    }
                }
                max
            }
            Storage::Sparse(rows) => rows
                .iter()
                .flatten()
                .map(|&(_, v)| v.norm())
                .fold(0.0, f64::max),
            Storage::Monomial { vals, .. } => vals.iter().map(|v| v.norm()).fold(0.0, f64::max),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    /// Frobenius inner product `sum conj(a_ij) b_ij`.
    pub fn frob_inner(&self, other: &OperatorMatrix) -> Complex64 {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        match &self.storage {
            Storage::Dense(a) => {
                let mut acc = Complex64::ZERO;
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        acc += a[(i, j)].conj() * other.entry(i, j);
                    }
                }
                acc
            }
            Storage::Sparse(rows) => {
                let mut acc = Complex64::ZERO;
                for (i, row) in rows.iter().enumerate() {
                    for &(c, v) in row {
                        acc += v.conj() * other.entry(i, c as usize);
                    }
                }
                acc
            }
            Storage::Monomial { cols, vals } => {
                let mut acc = Complex64::ZERO;
                for (i, (&c, &v)) in cols.iter().zip(vals).enumerate() {
                    if v != Complex64::ZERO {
                        acc += v.conj() * other.entry(i, c as usize);
                    }
                }
                acc
            }
        }
    }

    /// `max |A - A^H|`.
    pub fn hermitian_deviation(&self) -> f64 {
        self.sub(&self.adjoint()).inf_norm()
    }

    /// `max |A + A^H|`.
    pub fn anti_hermitian_deviation(&self) -> f64 {
        self.add(&self.adjoint()).inf_norm()
    }

    /// `max |A A^H - A^H A|`.
    pub fn normality_deviation(&self) -> f64 {
        let adj = self.adjoint();
        self.mul(&adj).sub(&adj.mul(self)).inf_norm()
    }

    pub fn max_imag(&self) -> f64 {
        match &self.storage {
            Storage::Dense(m) => {
                let mut max = 0.0f64;
                for j in 0..self.dim {
                    for i in 0..self.dim {
                        max = max.max(m[(i, j)].im.abs());
                    }
                }
                max
            }
            Storage::Sparse(rows) => rows
                .iter()
                .flatten()
                .map(|&(_, v)| v.im.abs())
                .fold(0.0, f64::max),
            Storage::Monomial { vals, .. } => vals.iter().map(|v| v.im.abs()).fold(0.0, f64::max),
        }
    }

    pub fn is_finite(&self) -> bool {
        match &self.storage {
            Storage::Dense(m) => {
                (0..self.dim).all(|j| (0..self.dim).all(|i| m[(i, j)].is_finite()))
            }
            Storage::Sparse(rows) => rows.iter().flatten().all(|(_, v)| v.is_finite()),
            Storage::Monomial { vals, .. } => vals.iter().all(|v| v.is_finite()),
        }
    }

    /// Matrix exponential by scaling and squaring with a degree-13 Pade
    /// approximant.
    pub fn expm(&self) -> OperatorMatrix {
        OperatorMatrix::from_dense(expm_dense(&self.to_dense()))
    }
}

fn normalize_row(row: &mut Vec<(u32, Complex64)>) {
    if row.is_empty() {
        return;
    }
    row.sort_unstable_by_key(|&(c, _)| c);
    let mut out: Vec<(u32, Complex64)> = Vec::with_capacity(row.len());
    for &(c, v) in row.iter() {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != Complex64::ZERO);
    *row = out;
}

fn one_norm(m: &Mat<Complex64>) -> f64 {
    let mut max = 0.0f64;
    for j in 0..m.ncols() {
        let mut col = 0.0;
        for i in 0..m.nrows() {
            col += m[(i, j)].norm();
        }
        max = max.max(col);
    }
    max
}

fn mat_scale(m: &Mat<Complex64>, s: f64) -> Mat<Complex64> {
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)] * s)
}

fn mat_lincomb(terms: &[(f64, &Mat<Complex64>)], dim: usize) -> Mat<Complex64> {
    let mut out = Mat::<Complex64>::zeros(dim, dim);
    for &(coeff, m) in terms {
        for j in 0..dim {
            for i in 0..dim {
                out[(i, j)] += m[(i, j)] * coeff;
            }
        }
    }
    out
}

/// Degree-13 Pade coefficients.
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn expm_dense(a: &Mat<Complex64>) -> Mat<Complex64> {
    let dim = a.nrows();
    if dim == 0 {
        return Mat::zeros(0, 0);
    }
    let theta13 = 5.371920351148152;
    let norm = one_norm(a);
    let squarings = if norm > theta13 {
        (norm / theta13).log2().ceil().max(0.0) as u32
    } else {
        0
    };
    let a = mat_scale(a, 0.5f64.powi(squarings as i32));

    let ident: Mat<Complex64> = Mat::identity(dim, dim);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let b = &PADE13;

    let u_inner = mat_lincomb(&[(b[13], &a6), (b[11], &a4), (b[9], &a2)], dim);
    let u_rest = mat_lincomb(
        &[(b[7], &a6), (b[5], &a4), (b[3], &a2), (b[1], &ident)],
        dim,
    );
    let u = &a * &(&a6 * &u_inner + u_rest);

    let v_inner = mat_lincomb(&[(b[12], &a6), (b[10], &a4), (b[8], &a2)], dim);
    let v = &a6 * &v_inner
        + mat_lincomb(
            &[(b[6], &a6), (b[4], &a4), (b[2], &a2), (b[0], &ident)],
            dim,
        );

    // (V - U) X = (V + U)
    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut x = lhs.partial_piv_lu().solve(&rhs);
    for _ in 0..squarings {
        x = &x * &x;
    }
    x
}
