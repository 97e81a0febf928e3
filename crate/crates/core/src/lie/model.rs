//! Matrix models of sl(n) and the split orthogonal algebras o(n), with structure constants,
//! invariant form, Casimir element, and the tensor operations built on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::roots::{RootSystem, RootType};
use super::tensor::{Tensor2, Tensor3};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{GaussRat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Sl,
    O,
}

impl ModelKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl" => Some(ModelKind::Sl),
            "o" | "so" => Some(ModelKind::O),
            _ => None,
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Sl => "sl",
            ModelKind::O => "o",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    /// Root vector of the positive root with this index.
    Positive(usize),
    /// Root vector of the negative of the positive root with this index.
    Negative(usize),
    /// Cartan generator.
    Cartan(usize),
}

type Sparse = Vec<(usize, usize, GaussRat)>;

/// Basis order: positive root vectors, negative root vectors (same root order), Cartan.
#[derive(Clone, Debug)]
pub struct LieModel {
    pub kind: ModelKind,
    pub n: usize,
    pub roots: RootSystem,
    basis: Vec<Matrix<GaussRat>>,
    sparse: Vec<Sparse>,
    labels: Vec<BasisLabel>,
    form_factor: GaussRat,
    gram: Matrix<GaussRat>,
    gram_inv: Matrix<GaussRat>,
    /// Sparse matrices `factor · x^k` so that coordinate k of M is `tr(dual[k] · M)`.
    dual: Vec<Sparse>,
    structure: Vec<Vec<Vec<(usize, GaussRat)>>>,
    /// `cartan_values[r][k] = α_r(h_k)` for positive root r and Cartan generator k.
    cartan_values: Vec<Vec<GaussRat>>,
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix<GaussRat> {
    Matrix::from_fn(n, n, |a, b| if (a, b) == (i, j) { GaussRat::one() } else { GaussRat::zero() })
}

fn to_sparse(m: &Matrix<GaussRat>) -> Sparse {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                out.push((i, j, m.get(i, j).clone()));
            }
        }
    }
    out
}

/// The antidiagonal permutation matrix S with `S_{i, n+1−i} = 1`.
pub fn antidiagonal(n: usize) -> Matrix<GaussRat> {
    Matrix::from_fn(n, n, |i, j| if i + j == n - 1 { GaussRat::one() } else { GaussRat::zero() })
}

impl LieModel {
    pub fn new(kind: ModelKind, n: usize) -> Result<Self> {
        match kind {
            ModelKind::Sl if n >= 2 => {}
            ModelKind::O if n >= 4 => {}
            _ => return Err(Error::UnsupportedRank(format!("{kind}({n})"))),
        }
        let (roots, form_factor) = match kind {
            ModelKind::Sl => (RootSystem::new(RootType::A, n - 1)?, GaussRat::one()),
            ModelKind::O if n % 2 == 0 => (RootSystem::new(RootType::D, n / 2)?, GaussRat::ratio(1, 2)),
            ModelKind::O => (RootSystem::new(RootType::B, n / 2)?, GaussRat::ratio(1, 2)),
        };
        let half = n / 2;
        // matrix position of the root vector for ε-vector `eps`
        let position = |eps: &[i64]| -> (usize, usize) {
            let nz: Vec<(usize, i64)> = eps.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
            match kind {
                ModelKind::Sl => {
                    let p = nz.iter().find(|x| x.1 == 1).unwrap().0;
                    let q = nz.iter().find(|x| x.1 == -1).unwrap().0;
                    (p, q)
                }
                ModelKind::O => match nz.as_slice() {
                    [(i, 1)] => (*i, half),
                    [(i, 1), (j, -1)] => (*i, *j),
                    [(i, 1), (j, 1)] => (*i, n - 1 - *j),
                    _ => unreachable!("not a positive root"),
                },
            }
        };
        let root_matrix = |p: usize, q: usize| -> Matrix<GaussRat> {
            match kind {
                ModelKind::Sl => unit_matrix(n, p, q),
                // F_pq = e_pq − e_{n+1−q, n+1−p}
                ModelKind::O => unit_matrix(n, p, q).sub(&unit_matrix(n, n - 1 - q, n - 1 - p)),
            }
        };

        let mut basis = Vec::new();
        let mut labels = Vec::new();
        for (r, root) in roots.positive_roots.iter().enumerate() {
            let (p, q) = position(&root.eps);
            basis.push(root_matrix(p, q));
            labels.push(BasisLabel::Positive(r));
        }
        for (r, root) in roots.positive_roots.iter().enumerate() {
            let (p, q) = position(&root.eps);
            basis.push(root_matrix(q, p));
            labels.push(BasisLabel::Negative(r));
        }
        match kind {
            ModelKind::Sl => {
                for i in 0..n - 1 {
                    basis.push(unit_matrix(n, i, i).sub(&unit_matrix(n, i + 1, i + 1)));
                    labels.push(BasisLabel::Cartan(i));
                }
            }
            ModelKind::O => {
                for i in 0..half {
                    basis.push(root_matrix(i, i));
                    labels.push(BasisLabel::Cartan(i));
                }
            }
        }
        let dim = basis.len();
        let expected = match kind {
            ModelKind::Sl => n * n - 1,
            ModelKind::O => n * (n - 1) / 2,
        };
        assert_eq!(dim, expected, "basis size");

        let sparse: Vec<Sparse> = basis.iter().map(to_sparse).collect();
        let trace_prod = |a: &Sparse, b: &Sparse| -> GaussRat {
            let mut acc = GaussRat::zero();
            for (i, j, x) in a {
                for (k, l, y) in b {
                    if j == k && l == i {
                        acc = &acc + &(x * y);
                    }
                }
            }
            acc
        };
        let gram = Matrix::from_fn(dim, dim, |a, b| &form_factor * &trace_prod(&sparse[a], &sparse[b]));
        let gram_inv = gram.inverse().expect("invariant form is nondegenerate");
        let dual: Vec<Sparse> = (0..dim)
            .map(|k| {
                let mut m = Matrix::zeros_like(&GaussRat::zero(), n, n);
                for l in 0..dim {
                    let c = gram_inv.get(k, l);
                    if !c.is_zero() {
                        m = m.add(&basis[l].scale(&(c * &form_factor)));
                    }
                }
                // coordinate k of M = factor · tr(x^k M) = tr(m M)
                to_sparse(&m)
            })
            .collect();

        let mut model = LieModel {
            kind,
            n,
            roots,
            basis,
            sparse,
            labels,
            form_factor,
            gram,
            gram_inv,
            dual,
            structure: Vec::new(),
            cartan_values: Vec::new(),
        };

        let mut structure = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let m = model.basis[a].mul(&model.basis[b]).sub(&model.basis[b].mul(&model.basis[a]));
                let c = model.coordinates(&m).expect("bracket closes on the basis");
                structure[a][b] = c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            }
        }
        model.structure = structure;

        let npos = model.num_positive();
        let cartan_values = (0..npos)
            .map(|r| {
                (0..model.rank())
                    .map(|k| {
                        let h = model.cartan_index(k);
                        model.structure[h][r].iter().find(|(i, _)| *i == r).map_or(GaussRat::zero(), |x| x.1.clone())
                    })
                    .collect()
            })
            .collect();
        model.cartan_values = cartan_values;

        for r in 0..npos {
            assert!(
                model.form(model.positive_index(r), model.negative_index(r)).is_one(),
                "root vectors normalized against the form"
            );
        }
        Ok(model)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank
    }

    pub fn num_positive(&self) -> usize {
        self.roots.num_positive()
    }

    pub fn basis(&self) -> &[Matrix<GaussRat>] {
        &self.basis
    }

    pub fn basis_sparse(&self, i: usize) -> &[(usize, usize, GaussRat)] {
        &self.sparse[i]
    }

    pub fn label(&self, i: usize) -> BasisLabel {
        self.labels[i]
    }

    pub fn positive_index(&self, root: usize) -> usize {
        root
    }

    pub fn negative_index(&self, root: usize) -> usize {
        self.num_positive() + root
    }

    pub fn cartan_index(&self, k: usize) -> usize {
        2 * self.num_positive() + k
    }

    pub fn is_cartan(&self, i: usize) -> bool {
        i >= 2 * self.num_positive()
    }

    /// Cartan generators indices.
    pub fn cartan_indices(&self) -> std::ops::Range<usize> {
        2 * self.num_positive()..self.dim()
    }

    pub fn form_factor(&self) -> &GaussRat {
        &self.form_factor
    }

    /// `B(x_a, x_b)`.
    pub fn form(&self, a: usize, b: usize) -> GaussRat {
        self.gram.get(a, b).clone()
    }

    pub fn gram(&self) -> &Matrix<GaussRat> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix<GaussRat> {
        &self.gram_inv
    }

    /// `[x_a, x_b] = Σ c_k x_k` as sparse `(k, c_k)`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, GaussRat)] {
        &self.structure[a][b]
    }

    /// `α_r(h_k)` for positive root `r` and Cartan generator `k`.
    pub fn root_value(&self, r: usize, k: usize) -> &GaussRat {
        &self.cartan_values[r][k]
    }

    /// Value of the simple root `α_i` on Cartan generator `k`.
    pub fn simple_root_value(&self, i: usize, k: usize) -> &GaussRat {
        self.root_value(self.roots.simple_index(i), k)
    }

    /// Coordinates of a matrix in the basis, checking that it lies in the algebra.
    pub fn coordinates<T: Scalar>(&self, m: &Matrix<T>) -> Result<Vec<T>> {
        let c = self.coordinates_unchecked(m);
        let back = self.element(&c, m.get(0, 0));
        if back.sub(m).is_zero() {
            Ok(c)
        } else {
            Err(Error::NotInAlgebra)
        }
    }

    /// Coordinates assuming `m` lies in the algebra.
    pub fn coordinates_unchecked<T: Scalar>(&self, m: &Matrix<T>) -> Vec<T> {
        let proto = m.get(0, 0);
        self.dual
            .iter()
            .map(|d| {
                let mut acc = proto.zero_like();
                for (i, j, c) in d {
                    let x = m.get(*j, *i);
                    if !x.is_zero() {
                        acc = acc + proto.embed(c) * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// The matrix `Σ c_k x_k`; `proto` fixes the scalar domain.
    pub fn element<T: Scalar>(&self, coords: &[T], proto: &T) -> Matrix<T> {
        let mut m = Matrix::zeros_like(proto, self.n, self.n);
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, j, b) in &self.sparse[k] {
                let v = m.get(*i, *j).clone() + c.clone() * proto.embed(b);
                m.set(*i, *j, v);
            }
        }
        m
    }

    /// Bracket of elements given in coordinates.
    pub fn bracket<T: Scalar>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let proto = x.iter().chain(y).next().expect("nonempty coordinates");
        let mut out = vec![proto.zero_like(); self.dim()];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let xy = xa.clone() * yb.clone();
                for (k, c) in &self.structure[a][b] {
                    out[*k] = out[*k].clone() + proto.embed(c) * xy.clone();
                }
            }
        }
        out
    }

    /// `B(x, y)` for elements in coordinates.
    pub fn form_eval<T: Scalar>(&self, x: &[T], y: &[T]) -> T {
        let proto = &x[0];
        let mut acc = proto.zero_like();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                let g = self.gram.get(a, b);
                if !g.is_zero() && !yb.is_zero() {
                    acc = acc + proto.embed(g) * xa.clone() * yb.clone();
                }
            }
        }
        acc
    }

    /// Unit coordinate vector of basis element `i`.
    pub fn basis_vector<T: Scalar>(&self, i: usize, proto: &T) -> Vec<T> {
        let mut v = vec![proto.zero_like(); self.dim()];
        v[i] = proto.one_like();
        v
    }

    /// Casimir element `Ω = Σ G⁻¹_{ab} x_a ⊗ x_b` and its Cartan–Cartan part `Ω₀`.
    pub fn casimir(&self) -> (Tensor2<GaussRat>, Tensor2<GaussRat>) {
        let dim = self.dim();
        let mut omega = Tensor2::new();
        for a in 0..dim {
            for b in 0..dim {
                omega.add_term(a, b, self.gram_inv.get(a, b).clone());
            }
        }
        let omega0 = omega.filter(|i| self.is_cartan(i));
        (omega, omega0)
    }

    /// `CYB(r) = [r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.
    pub fn cybe<T: Scalar>(&self, r: &Tensor2<T>) -> Tensor3<T> {
        let mut out = Tensor3::new();
        let Some(proto) = r.proto() else { return out };
        let terms: Vec<(usize, usize, &T)> = r.iter().collect();
        for &(a, b, x) in &terms {
            for &(c, d, y) in &terms {
                let xy = x.clone() * y.clone();
                // [x_a, x_c] ⊗ x_b ⊗ x_d
                for (k, s) in &self.structure[a][c] {
                    out.add_term(*k, b, d, proto.embed(s) * xy.clone());
                }
                // x_a ⊗ [x_b, x_c] ⊗ x_d
                for (k, s) in &self.structure[b][c] {
                    out.add_term(a, *k, d, proto.embed(s) * xy.clone());
                }
                // x_a ⊗ x_c ⊗ [x_b, x_d]
                for (k, s) in &self.structure[b][d] {
                    out.add_term(a, c, *k, proto.embed(s) * xy.clone());
                }
            }
        }
        out
    }

    /// `[t, a⊗1 + 1⊗a] = Σ t_{xy} ([x, a]⊗y + x⊗[y, a])`.
    pub fn act_on_tensor<T: Scalar>(&self, t: &Tensor2<T>, a: &[T]) -> Tensor2<T> {
        let mut out = Tensor2::new();
        for (x, y, c) in t.iter() {
            for (k, ak) in a.iter().enumerate() {
                if ak.is_zero() {
                    continue;
                }
                let w = c.clone() * ak.clone();
                for (m, s) in &self.structure[x][k] {
                    out.add_term(*m, y, c.embed(s) * w.clone());
                }
                for (m, s) in &self.structure[y][k] {
                    out.add_term(x, *m, c.embed(s) * w.clone());
                }
            }
        }
        out
    }

    /// Coboundary cobracket `δ(a) = [r, a⊗1 + 1⊗a]`.
    pub fn cobracket<T: Scalar>(&self, r: &Tensor2<T>, a: &[T]) -> Tensor2<T> {
        self.act_on_tensor(r, a)
    }

    /// `(δ ⊗ id)(t)` for a 2-tensor `t`, as a 3-tensor.
    pub fn cobracket_first_leg<T: Scalar>(&self, r: &Tensor2<T>, t: &Tensor2<T>) -> Tensor3<T> {
        let mut out = Tensor3::new();
        let Some(proto) = t.proto() else { return out };
        for (x, y, c) in t.iter() {
            let d = self.cobracket(r, &self.basis_vector(x, proto));
            for (p, q, v) in d.iter() {
                out.add_term(p, q, y, c.clone() * v.clone());
            }
        }
        out
    }

    /// Matrix of `F(r): x ↦ Σ r′ B(r″, x)` in the basis (`R · G`).
    pub fn f_operator<T: Scalar>(&self, r: &Tensor2<T>, proto: &T) -> Matrix<T> {
        let dim = self.dim();
        let mut m = Matrix::zeros_like(proto, dim, dim);
        for (a, b, v) in r.iter() {
            for c in 0..dim {
                let g = self.gram.get(b, c);
                if !g.is_zero() {
                    let x = m.get(a, c).clone() + v.clone() * proto.embed(g);
                    m.set(a, c, x);
                }
            }
        }
        m
    }

    /// `x ↦ X x X⁻¹` in coordinates, one column per basis element.
    pub fn adjoint_matrix<T: Scalar>(&self, x: &Matrix<T>) -> Result<Matrix<T>> {
        let xi = x.inverse()?;
        let dim = self.dim();
        let mut cols = Vec::with_capacity(dim);
        for a in 0..dim {
            let m = self.conjugate_basis(a, x, &xi);
            cols.push(self.coordinates(&m)?);
        }
        Ok(Matrix::from_fn(dim, dim, |i, j| cols[j][i].clone()))
    }

    /// `X x_a X⁻¹` using the sparsity of `x_a`.
    fn conjugate_basis<T: Scalar>(&self, a: usize, x: &Matrix<T>, xi: &Matrix<T>) -> Matrix<T> {
        let proto = x.get(0, 0);
        let n = self.n;
        let mut m = Matrix::zeros_like(proto, n, n);
        for (i, j, c) in &self.sparse[a] {
            let c = proto.embed(c);
            for p in 0..n {
                let xp = x.get(p, *i);
                if xp.is_zero() {
                    continue;
                }
                let f = c.clone() * xp.clone();
                for q in 0..n {
                    let y = xi.get(*j, q);
                    if !y.is_zero() {
                        let v = m.get(p, q).clone() + f.clone() * y.clone();
                        m.set(p, q, v);
                    }
                }
            }
        }
        m
    }

    /// `(Ad_X ⊗ Ad_X)(t)`.
    pub fn adjoint_act<T: Scalar>(&self, x: &Matrix<T>, t: &Tensor2<T>) -> Result<Tensor2<T>> {
        if x.is_diagonal() {
            if let Some(out) = self.diagonal_adjoint_act(x, t)? {
                return Ok(out);
            }
        }
        let xi = x.inverse()?;
        let mut images: std::collections::BTreeMap<usize, Vec<T>> = Default::default();
        for (a, b, _) in t.iter() {
            for i in [a, b] {
                if !images.contains_key(&i) {
                    let m = self.conjugate_basis(i, x, &xi);
                    images.insert(i, self.coordinates(&m)?);
                }
            }
        }
        let mut out = Tensor2::new();
        for (a, b, v) in t.iter() {
            let (ia, ib) = (&images[&a], &images[&b]);
            for (p, xp) in ia.iter().enumerate() {
                if xp.is_zero() {
                    continue;
                }
                let f = v.clone() * xp.clone();
                for (q, yq) in ib.iter().enumerate() {
                    if !yq.is_zero() {
                        out.add_term(p, q, f.clone() * yq.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Torus action: each basis element whose entries all scale by the same `x_i / x_j`
    /// is an eigenvector. Returns `None` when some needed basis element is not.
    fn diagonal_adjoint_act<T: Scalar>(&self, x: &Matrix<T>, t: &Tensor2<T>) -> Result<Option<Tensor2<T>>> {
        let d = x.diag();
        let inv: Vec<T> = d.iter().map(|v| v.inverse().ok_or(Error::Singular)).collect::<Result<_>>()?;
        let mut eigen: std::collections::BTreeMap<usize, T> = Default::default();
        for (a, b, _) in t.iter() {
            for i in [a, b] {
                if eigen.contains_key(&i) {
                    continue;
                }
                let mut ratios = self.sparse[i].iter().map(|(p, q, _)| d[*p].clone() * inv[*q].clone());
                let Some(first) = ratios.next() else { return Ok(None) };
                if ratios.any(|r| !(r - first.clone()).is_zero()) {
                    return Ok(None);
                }
                eigen.insert(i, first);
            }
        }
        Ok(Some(Tensor2::from_terms(
            t.iter().map(|(a, b, v)| (a, b, v.clone() * eigen[&a].clone() * eigen[&b].clone())),
        )))
    }

    /// Checks bracket closure, antisymmetry, Jacobi and form invariance on all basis triples.
    pub fn verify(&self) -> bool {
        let dim = self.dim();
        let one = GaussRat::one();
        let e = |i: usize| self.basis_vector(i, &one);
        for a in 0..dim {
            for b in 0..dim {
                let ab = self.bracket(&e(a), &e(b));
                let ba = self.bracket(&e(b), &e(a));
                if ab.iter().zip(&ba).any(|(x, y)| !(x + y).is_zero()) {
                    return false;
                }
                for c in 0..dim {
                    // B([x,y],z) = B(x,[y,z])
                    let lhs = self.form_eval(&ab, &e(c));
                    let rhs = self.form_eval(&e(a), &self.bracket(&e(b), &e(c)));
                    if lhs != rhs {
                        return false;
                    }
                    let j1 = self.bracket(&e(a), &self.bracket(&e(b), &e(c)));
                    let j2 = self.bracket(&e(b), &self.bracket(&e(c), &e(a)));
                    let j3 = self.bracket(&e(c), &self.bracket(&e(a), &e(b)));
                    if (0..dim).any(|k| !(&(&j1[k] + &j2[k]) + &j3[k]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// A short name for basis element `i`, e.g. `e[1,0]`, `f[0,1]`, `h2`.
    pub fn basis_name(&self, i: usize) -> String {
        let coeffs = |r: usize| {
            let c: Vec<String> = self.roots.positive_roots[r].coeffs.iter().map(|x| x.to_string()).collect();
            c.join(",")
        };
        match self.labels[i] {
            BasisLabel::Positive(r) => format!("e[{}]", coeffs(r)),
            BasisLabel::Negative(r) => format!("f[{}]", coeffs(r)),
            BasisLabel::Cartan(k) => format!("h{}", k + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_basis_and_form() {
        let m = LieModel::new(ModelKind::Sl, 2).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.basis()[0], unit_matrix(2, 0, 1));
        assert_eq!(m.basis()[1], unit_matrix(2, 1, 0));
        assert!(m.form(0, 1).is_one());
        assert_eq!(m.form(2, 2), GaussRat::from_int(2));
        assert!(m.verify());
    }

    #[test]
    fn dimensions_and_closure() {
        for (kind, n, dim) in [(ModelKind::Sl, 3, 8), (ModelKind::O, 4, 6), (ModelKind::O, 5, 10), (ModelKind::O, 6, 15)] {
            let m = LieModel::new(kind, n).unwrap();
            assert_eq!(m.dim(), dim);
            assert!(m.verify(), "{kind}({n})");
        }
        assert!(LieModel::new(ModelKind::O, 3).is_err());
        assert!(LieModel::new(ModelKind::Sl, 1).is_err());
    }

    #[test]
    fn orthogonal_basis_is_skew_for_split_form() {
        for n in [4, 5, 7, 8] {
            let m = LieModel::new(ModelKind::O, n).unwrap();
            let s = antidiagonal(n);
            for b in m.basis() {
                assert!(b.transpose().mul(&s).add(&s.mul(b)).is_zero());
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let m = LieModel::new(ModelKind::Sl, 3).unwrap();
        let x = Matrix::from_rows(vec![
            vec![GaussRat::from_int(1), GaussRat::from_int(2), GaussRat::from_int(3)],
            vec![GaussRat::from_int(4), GaussRat::from_int(5), GaussRat::from_int(6)],
            vec![GaussRat::from_int(7), GaussRat::from_int(8), GaussRat::from_int(-6)],
        ]);
        let c = m.coordinates(&x).unwrap();
        assert_eq!(m.element(&c, &GaussRat::zero()), x);
        let bad = Matrix::identity_like(&GaussRat::one(), 3);
        assert!(matches!(m.coordinates(&bad), Err(Error::NotInAlgebra)));
    }
}
