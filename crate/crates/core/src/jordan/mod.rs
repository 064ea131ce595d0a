//! Simple complex Jordan algebras in coordinates: symmetric matrices, full
//! matrices and spin factors, with trace form, norm and adjugate.

mod calculus;
mod elem;

pub use calculus::{invariant_checks, random_invertible_point, random_point, verify_jordan_calculus};
pub use elem::{Coeff, JElem};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg;
use crate::ring::{LocFn, RingCtx, Scalar, ZPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JordanError {
    #[error("element is not invertible (norm vanishes)")]
    NotInvertible,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("bad algebra selector `{0}` (expected sym:<r>, full:<r> or spin:<p>)")]
    BadSelector(String),
    #[error("{0}")]
    BadParameter(String),
    #[error("element is not a primitive idempotent")]
    NotPrimitiveIdempotent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Sym(usize),
    Full(usize),
    Spin(usize),
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Sym(r) => write!(f, "sym:{r}"),
            Kind::Full(r) => write!(f, "full:{r}"),
            Kind::Spin(p) => write!(f, "spin:{p}"),
        }
    }
}

impl FromStr for Kind {
    type Err = JordanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || JordanError::BadSelector(s.to_string());
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        let v: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "sym" => Ok(Kind::Sym(v)),
            "full" => Ok(Kind::Full(v)),
            "spin" => Ok(Kind::Spin(v)),
            _ => Err(bad()),
        }
    }
}

/// Sparse structure constants: `table[i][j]` lists `(k, c)` with `bᵢ∘bⱼ = Σ c b_k`.
type Table = Vec<Vec<Vec<(usize, Scalar)>>>;

#[derive(Debug)]
pub struct JordanAlgebra {
    kind: Kind,
    name: String,
    n: usize,
    r: usize,
    m: Scalar,
    labels: Vec<String>,
    table: Table,
    identity: Vec<Scalar>,
    trace_vec: Vec<Scalar>,
    gram: Vec<Vec<Scalar>>,
    dual_gram: Vec<Vec<Scalar>>,
    norm: ZPoly,
    adjugate: Vec<ZPoly>,
    ctx: Arc<RingCtx>,
    idempotent: Vec<Scalar>,
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let r = a.len();
    (0..r)
        .map(|i| (0..r).map(|j| (0..r).fold(Scalar::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))).collect())
        .collect()
}

/// Determinant by Laplace expansion along the first row.
fn det(m: &[Vec<ZPoly>]) -> ZPoly {
    let r = m.len();
    let nv = m[0][0].nvars();
    if r == 1 {
        return m[0][0].clone();
    }
    let mut acc = ZPoly::zero(nv);
    for j in 0..r {
        if m[0][j].is_zero() {
            continue;
        }
        let term = &m[0][j] * &det(&minor(m, 0, j));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn minor(m: &[Vec<ZPoly>], row: usize, col: usize) -> Vec<Vec<ZPoly>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// Classical adjugate: `adj[i][j] = (−1)^{i+j} det(minor(j, i))`.
fn adjugate_matrix(m: &[Vec<ZPoly>]) -> Vec<Vec<ZPoly>> {
    let r = m.len();
    let nv = m[0][0].nvars();
    if r == 1 {
        return vec![vec![ZPoly::one(nv)]];
    }
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let d = det(&minor(m, j, i));
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        -d
                    }
                })
                .collect()
        })
        .collect()
}

struct MatrixModel {
    r: usize,
    labels: Vec<String>,
    basis: Vec<Vec<Vec<Scalar>>>,
    /// `(row, col)` read off a matrix to get each coordinate.
    readout: Vec<(usize, usize)>,
}

impl MatrixModel {
    fn full(r: usize) -> Self {
        let mut labels = Vec::new();
        let mut basis = Vec::new();
        let mut readout = Vec::new();
        for i in 0..r {
            for j in 0..r {
                labels.push(format!("E{}{}", i + 1, j + 1));
                basis.push(unit(r, &[(i, j)]));
                readout.push((i, j));
            }
        }
        MatrixModel { r, labels, basis, readout }
    }

    fn sym(r: usize) -> Self {
        let mut labels = Vec::new();
        let mut basis = Vec::new();
        let mut readout = Vec::new();
        for i in 0..r {
            labels.push(format!("E{}{}", i + 1, i + 1));
            basis.push(unit(r, &[(i, i)]));
            readout.push((i, i));
        }
        for i in 0..r {
            for j in i + 1..r {
                labels.push(format!("S{}{}", i + 1, j + 1));
                basis.push(unit(r, &[(i, j), (j, i)]));
                readout.push((i, j));
            }
        }
        MatrixModel { r, labels, basis, readout }
    }

    fn decompose(&self, m: &[Vec<Scalar>]) -> Vec<(usize, Scalar)> {
        self.readout
            .iter()
            .enumerate()
            .filter(|&(_k, &(i, j))| !m[i][j].is_zero())
            .map(|(k, &(i, j))| (k, m[i][j].clone()))
            .collect()
    }

    fn table(&self) -> Table {
        let half = Scalar::frac(1, 2);
        let n = self.basis.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let ab = mat_mul(&self.basis[i], &self.basis[j]);
                        let ba = mat_mul(&self.basis[j], &self.basis[i]);
                        let sym: Vec<Vec<Scalar>> = ab
                            .iter()
                            .zip(&ba)
                            .map(|(x, y)| x.iter().zip(y).map(|(a, b)| &(a + b) * &half).collect())
                            .collect();
                        self.decompose(&sym)
                    })
                    .collect()
            })
            .collect()
    }

    /// The generic matrix `Σ zᵢ Bᵢ`.
    fn generic(&self) -> Vec<Vec<ZPoly>> {
        let n = self.basis.len();
        let mut q = vec![vec![ZPoly::zero(n); self.r]; self.r];
        for (k, b) in self.basis.iter().enumerate() {
            for i in 0..self.r {
                for j in 0..self.r {
                    if !b[i][j].is_zero() {
                        q[i][j] = &q[i][j] + &ZPoly::var(n, k).scale(&b[i][j]);
                    }
                }
            }
        }
        q
    }
}

fn unit(r: usize, entries: &[(usize, usize)]) -> Vec<Vec<Scalar>> {
    let mut m = vec![vec![Scalar::zero(); r]; r];
    for &(i, j) in entries {
        m[i][j] = Scalar::one();
    }
    m
}

impl JordanAlgebra {
    pub fn new(kind: Kind) -> Result<Self, JordanError> {
        match kind {
            Kind::Sym(r) => Self::make_sym(r),
            Kind::Full(r) => Self::make_full(r),
            Kind::Spin(p) => Self::make_spin(p),
        }
    }

    pub fn from_selector(s: &str) -> Result<Self, JordanError> {
        Self::new(s.parse()?)
    }

    pub fn make_sym(r: usize) -> Result<Self, JordanError> {
        if r == 0 {
            return Err(JordanError::BadParameter("sym rank must be at least 1".into()));
        }
        Ok(Self::from_matrix_model(Kind::Sym(r), MatrixModel::sym(r)))
    }

    pub fn make_full(r: usize) -> Result<Self, JordanError> {
        if r == 0 {
            return Err(JordanError::BadParameter("full rank must be at least 1".into()));
        }
        Ok(Self::from_matrix_model(Kind::Full(r), MatrixModel::full(r)))
    }

    fn from_matrix_model(kind: Kind, model: MatrixModel) -> Self {
        let r = model.r;
        let n = model.basis.len();
        let table = model.table();
        let q = model.generic();
        let norm = det(&q);
        let adj = adjugate_matrix(&q);
        let adjugate = model.readout.iter().map(|&(i, j)| adj[i][j].clone()).collect();
        let trace_vec = model.basis.iter().map(|b| (0..r).fold(Scalar::zero(), |acc, i| &acc + &b[i][i])).collect();
        let mut identity = vec![Scalar::zero(); n];
        for i in 0..r {
            let k = model.readout.iter().position(|&p| p == (i, i)).expect("diagonal coordinate");
            identity[k] = Scalar::one();
        }
        let mut idempotent = vec![Scalar::zero(); n];
        idempotent[0] = Scalar::one();
        Self::assemble(kind, r, model.labels, table, identity, trace_vec, norm, adjugate, idempotent)
    }

    pub fn make_spin(p: usize) -> Result<Self, JordanError> {
        if p < 2 {
            return Err(JordanError::BadParameter("spin factor needs p >= 2".into()));
        }
        let n = p;
        let one = Scalar::one();
        let mut table: Table = vec![vec![Vec::new(); n]; n];
        table[0][0].push((0, one.clone()));
        for i in 1..n {
            table[0][i].push((i, one.clone()));
            table[i][0].push((i, one.clone()));
            table[i][i].push((0, one.clone()));
        }
        let z = |i| ZPoly::var(n, i);
        let mut norm = &z(0) * &z(0);
        for i in 1..n {
            norm = &norm - &(&z(i) * &z(i));
        }
        let adjugate = (0..n).map(|i| if i == 0 { z(0) } else { -z(i) }).collect();
        let mut identity = vec![Scalar::zero(); n];
        identity[0] = one;
        let mut trace_vec = vec![Scalar::zero(); n];
        trace_vec[0] = Scalar::from_int(2);
        let mut idempotent = vec![Scalar::zero(); n];
        idempotent[0] = Scalar::frac(1, 2);
        idempotent[1] = Scalar::frac(1, 2);
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        Ok(Self::assemble(Kind::Spin(p), 2, labels, table, identity, trace_vec, norm, adjugate, idempotent))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        kind: Kind,
        r: usize,
        labels: Vec<String>,
        table: Table,
        identity: Vec<Scalar>,
        trace_vec: Vec<Scalar>,
        norm: ZPoly,
        adjugate: Vec<ZPoly>,
        idempotent: Vec<Scalar>,
    ) -> Self {
        let n = labels.len();
        let ctx = RingCtx::new(n, r, norm.clone());
        let mut alg = JordanAlgebra {
            kind,
            name: kind.to_string(),
            n,
            r,
            m: Scalar::frac(n as i64, r as i64),
            labels,
            table,
            identity,
            trace_vec,
            gram: Vec::new(),
            dual_gram: Vec::new(),
            norm,
            adjugate,
            ctx,
            idempotent,
        };
        alg.refresh_gram();
        alg
    }

    fn refresh_gram(&mut self) {
        let n = self.n;
        self.gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        self.table[i][j].iter().fold(Scalar::zero(), |acc, (k, c)| &acc + &(c * &self.trace_vec[*k]))
                    })
                    .collect()
            })
            .collect();
        self.dual_gram = linalg::invert(&self.gram).unwrap_or_else(|| vec![vec![Scalar::zero(); n]; n]);
    }

    /// A copy with `c_{ij}^k` (and `c_{ji}^k`) shifted by `delta`.
    pub fn with_perturbed_constant(&self, i: usize, j: usize, k: usize, delta: Scalar) -> Self {
        let mut table = self.table.clone();
        for (a, b) in [(i, j), (j, i)] {
            let entry = &mut table[a][b];
            match entry.iter_mut().find(|(kk, _)| *kk == k) {
                Some((_, c)) => *c += &delta,
                None => entry.push((k, delta.clone())),
            }
            entry.retain(|(_, c)| !c.is_zero());
            if i == j {
                break;
            }
        }
        let mut alg = Self::assemble(
            self.kind,
            self.r,
            self.labels.clone(),
            table,
            self.identity.clone(),
            self.trace_vec.clone(),
            self.norm.clone(),
            self.adjugate.clone(),
            self.idempotent.clone(),
        );
        alg.name = format!("{}~c[{i},{j}->{k}]", self.name);
        alg
    }

    /// A copy that reports `m` as the given value instead of `n / r`.
    pub fn with_m_override(&self, m: Scalar) -> Self {
        let mut alg = Self::assemble(
            self.kind,
            self.r,
            self.labels.clone(),
            self.table.clone(),
            self.identity.clone(),
            self.trace_vec.clone(),
            self.norm.clone(),
            self.adjugate.clone(),
            self.idempotent.clone(),
        );
        alg.name = format!("{}~m={m}", self.name);
        alg.m = m;
        alg
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> &Scalar {
        &self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> JElem<Scalar> {
        JElem::new(self.identity.clone())
    }

    pub fn trace_vec(&self) -> &[Scalar] {
        &self.trace_vec
    }

    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    pub fn dual_gram(&self) -> &[Vec<Scalar>] {
        &self.dual_gram
    }

    pub fn norm(&self) -> &ZPoly {
        &self.norm
    }

    pub fn adjugate(&self) -> JElem<ZPoly> {
        JElem::new(self.adjugate.clone())
    }

    pub fn ctx(&self) -> &Arc<RingCtx> {
        &self.ctx
    }

    pub fn structure_constants(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    /// Canonical primitive idempotent: `E₁₁` for matrix kinds, `(½, ½, 0, …)` for spin.
    pub fn idempotent(&self) -> JElem<Scalar> {
        JElem::new(self.idempotent.clone())
    }

    pub fn basis(&self, i: usize) -> JElem<Scalar> {
        JElem::basis(self.n, i)
    }

    /// `bⁱ = Σⱼ (G⁻¹)ᵢⱼ bⱼ`.
    pub fn dual_basis(&self, i: usize) -> JElem<Scalar> {
        JElem::new(self.dual_gram[i].clone())
    }

    /// The generic element `q = Σ zᵢ bᵢ`.
    pub fn generic(&self) -> JElem<ZPoly> {
        JElem::new((0..self.n).map(|i| ZPoly::var(self.n, i)).collect())
    }

    pub fn lambda_0(&self) -> Scalar {
        Scalar::frac(1, 2) - (Scalar::from_int(4) * &self.m).inv().expect("m is nonzero")
    }

    pub fn lambda_0_prime(&self) -> Scalar {
        Scalar::frac(1, 2) + (Scalar::from_int(4) * &self.m).inv().expect("m is nonzero")
    }

    fn check_dim<T: Coeff>(&self, a: &JElem<T>) -> Result<(), JordanError> {
        if a.len() == self.n {
            Ok(())
        } else {
            Err(JordanError::DimensionMismatch { expected: self.n, found: a.len() })
        }
    }

    pub fn try_mul<T: Coeff>(&self, a: &JElem<T>, b: &JElem<T>) -> Result<JElem<T>, JordanError> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        let zero = a.coords()[0].zero_like();
        let mut out = vec![zero; self.n];
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.c_is_zero() {
                continue;
            }
            for (j, bj) in b.coords().iter().enumerate() {
                if bj.c_is_zero() || self.table[i][j].is_empty() {
                    continue;
                }
                let ab = ai.c_mul(bj);
                for (k, c) in &self.table[i][j] {
                    out[*k] = out[*k].c_add(&ab.c_scale(c));
                }
            }
        }
        Ok(JElem::new(out))
    }

    /// Jordan product; panics on a dimension mismatch (see `try_mul`).
    pub fn mul<T: Coeff>(&self, a: &JElem<T>, b: &JElem<T>) -> JElem<T> {
        self.try_mul(a, b).expect("Jordan product dimension mismatch")
    }

    /// `{a,b,c} = (ab)c + (cb)a − (ac)b`, which is `½(abc + cba)` for matrices.
    pub fn triple<T: Coeff>(&self, a: &JElem<T>, b: &JElem<T>, c: &JElem<T>) -> JElem<T> {
        let t1 = self.mul(&self.mul(a, b), c);
        let t2 = self.mul(&self.mul(c, b), a);
        let t3 = self.mul(&self.mul(a, c), b);
        t1.add(&t2).sub(&t3)
    }

    pub fn trace<T: Coeff>(&self, a: &JElem<T>) -> T {
        let zero = a.coords()[0].zero_like();
        a.coords()
            .iter()
            .zip(&self.trace_vec)
            .filter(|(_, t)| !t.is_zero())
            .fold(zero, |acc, (x, t)| acc.c_add(&x.c_scale(t)))
    }

    /// `tr(a∘b)` through the Gram matrix.
    pub fn trace_form<T: Coeff>(&self, a: &JElem<T>, b: &JElem<T>) -> T {
        self.trace(&self.mul(a, b))
    }

    /// The linear form `q ↦ tr(x∘q) = Σₖ zₖ tr(x∘bₖ)`.
    pub fn linear_form(&self, x: &JElem<Scalar>) -> ZPoly {
        let coeffs: Vec<Scalar> = (0..self.n)
            .map(|k| x.coords().iter().enumerate().fold(Scalar::zero(), |acc, (i, xi)| &acc + &(xi * &self.gram[i][k])))
            .collect();
        ZPoly::linear(&coeffs)
    }

    pub fn norm_eval(&self, q: &JElem<Scalar>) -> Scalar {
        self.norm.eval(q.coords()).coeff(0)
    }

    pub fn adjugate_eval(&self, q: &JElem<Scalar>) -> JElem<Scalar> {
        JElem::new(self.adjugate.iter().map(|p| p.eval(q.coords()).coeff(0)).collect())
    }

    pub fn inverse(&self, q: &JElem<Scalar>) -> Result<JElem<Scalar>, JordanError> {
        self.check_dim(q)?;
        let f = self.norm_eval(q);
        let inv = f.inv().map_err(|_| JordanError::NotInvertible)?;
        Ok(self.adjugate_eval(q).scale(&inv))
    }

    /// `q ↦ tr(v∘q⁻¹) = tr(v∘adj q) / F`.
    pub fn tr_v_qinv(&self, v: &JElem<Scalar>) -> LocFn {
        let num = self.trace_form(&JElem::lift(v, self.n), &self.adjugate());
        LocFn::new(&self.ctx, num, 1)
    }

    pub fn is_idempotent(&self, y: &JElem<Scalar>) -> bool {
        y.len() == self.n && &self.mul(y, y) == y
    }

    /// `y∘y = y` and `tr(y) = 1`.
    pub fn check_primitive_idempotent(&self, y: &JElem<Scalar>) -> Result<(), JordanError> {
        if self.is_idempotent(y) && self.trace(y).is_one() {
            Ok(())
        } else {
            Err(JordanError::NotPrimitiveIdempotent)
        }
    }

    /// Print an element as a combination of basis labels.
    pub fn describe(&self, x: &JElem<Scalar>) -> String {
        let parts: Vec<String> = x
            .coords()
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("({c}){l}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn dimensions() {
        let j = JordanAlgebra::make_sym(2).unwrap();
        assert_eq!((j.n(), j.r(), j.m().clone()), (3, 2, Scalar::frac(3, 2)));
        let z = |i| ZPoly::var(3, i);
        assert_eq!(j.norm(), &(&(&z(0) * &z(1)) - &(&z(2) * &z(2))));
        assert_eq!(j.trace(&j.identity()), s(2));
        let f = JordanAlgebra::make_full(2).unwrap();
        let z = |i| ZPoly::var(4, i);
        assert_eq!(f.norm(), &(&(&z(0) * &z(3)) - &(&z(1) * &z(2))));
        let sp = JordanAlgebra::make_spin(3).unwrap();
        assert_eq!(sp.m(), &Scalar::frac(3, 2));
    }

    #[test]
    fn full_products_and_duals() {
        let f = JordanAlgebra::make_full(2).unwrap();
        // E11∘E12 = ½E12
        assert_eq!(f.mul(&f.basis(0), &f.basis(1)), f.basis(1).scale(&Scalar::frac(1, 2)));
        assert_eq!(f.dual_basis(1), f.basis(2));
        let q = JElem::new(vec![s(1), s(2), s(3), s(4)]);
        assert_eq!(f.adjugate_eval(&q), JElem::new(vec![s(4), s(-2), s(-3), s(1)]));
        assert_eq!(f.norm_eval(&q), s(-2));
        assert_eq!(f.mul(&q, &f.inverse(&q).unwrap()), f.identity());
        assert_eq!(f.inverse(&f.identity()).unwrap(), f.identity());
        let singular = JElem::new(vec![s(1), s(2), s(2), s(4)]);
        assert_eq!(f.inverse(&singular), Err(JordanError::NotInvertible));
    }

    #[test]
    fn spin_examples() {
        let sp = JordanAlgebra::make_spin(3).unwrap();
        let e1 = sp.basis(1);
        assert_eq!(sp.mul(&e1, &e1), sp.basis(0));
        let q = JElem::new(vec![s(2), s(1), s(0)]);
        assert_eq!(sp.mul(&q, &sp.adjugate_eval(&q)), sp.identity().scale(&s(3)));
        let y = sp.idempotent();
        assert!(sp.check_primitive_idempotent(&y).is_ok());
        assert_eq!(sp.triple(&y, &y, &y), y);
    }

    #[test]
    fn triple_products() {
        let f = JordanAlgebra::make_full(2).unwrap();
        assert!(f.triple(&f.basis(0), &f.basis(3), &f.basis(0)).is_zero());
    }

    #[test]
    fn trace_of_inverse() {
        let f = JordanAlgebra::make_full(2).unwrap();
        assert_eq!(f.tr_v_qinv(&f.basis(0)), LocFn::new(f.ctx(), ZPoly::var(4, 3), 1));
        let sl2 = JordanAlgebra::make_full(1).unwrap();
        assert_eq!(sl2.tr_v_qinv(&sl2.identity()), LocFn::norm_inv(sl2.ctx()));
        let t = f.tr_v_qinv(&f.identity());
        assert_eq!(t.eval(f.identity().coords()).unwrap().coeff(0), s(2));
    }

    #[test]
    fn selectors() {
        assert_eq!("spin:4".parse::<Kind>(), Ok(Kind::Spin(4)));
        assert!("foo:1".parse::<Kind>().is_err());
        assert!("sym:x".parse::<Kind>().is_err());
        assert!(JordanAlgebra::make_spin(1).is_err());
    }
}
