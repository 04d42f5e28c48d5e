//! Finite-dimensional bialgebras and Hopf algebras given by structure
//! constants, with axiom checks, antipode solving, duals and morphisms.
//!
//! Structure maps are dense matrices in the fixed basis e_0..e_{n-1}:
//! `mult` is n × n² (column a·n+b holds e_a e_b), `comult` is n² × n,
//! `unit` is n × 1 and `counit` is 1 × n. Sparse tables derived from them
//! drive every axiom check and every Sweedler-style formula downstream.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactmath::{solve_rows, FieldSpec, Matrix, Scalar, SparseRow};
use crate::report::Report;
use crate::{Error, Result};

/// Sparse linear combination of basis vectors.
pub type Elem = Vec<(usize, Scalar)>;

/// Accumulates a sparse vector keyed by index.
#[derive(Clone, Debug, Default)]
pub struct Acc(BTreeMap<usize, Scalar>);

impl Acc {
    pub fn new() -> Self {
        Acc(BTreeMap::new())
    }

    pub fn add(&mut self, i: usize, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(v) => *v += s,
            None => {
                self.0.insert(i, s.clone());
            }
        }
    }

    pub fn add_mul(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        self.add(i, &(a * b));
    }

    pub fn into_elem(self) -> Elem {
        self.0.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
}

impl BialgebraData {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mult: Matrix,
        unit: Matrix,
        comult: Matrix,
        counit: Matrix,
    ) -> Result<Self> {
        let n = labels.len();
        let want = [
            ("mult", mult.shape(), (n, n * n)),
            ("unit", unit.shape(), (n, 1)),
            ("comult", comult.shape(), (n * n, n)),
            ("counit", counit.shape(), (1, n)),
        ];
        for (name, got, exp) in want {
            if got != exp {
                return Err(Error::Shape(format!(
                    "{name}: expected {exp:?}, got {got:?}"
                )));
            }
        }
        for m in [&mult, &unit, &comult, &counit] {
            if m.field() != field {
                return Err(Error::FieldMismatch(format!("{} vs {}", m.field(), field)));
            }
        }
        Ok(BialgebraData {
            field,
            labels,
            mult,
            unit,
            comult,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

#[derive(Clone, Debug)]
struct Tables {
    mult: Vec<Elem>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    comult2: Vec<Vec<(usize, usize, usize, Scalar)>>,
    unit: Elem,
    counit: Vec<Scalar>,
}

impl Tables {
    fn build(b: &BialgebraData) -> Self {
        let n = b.dim();
        let mut mult = vec![Vec::new(); n * n];
        let mut comult = vec![Vec::new(); n];
        for (r, c, v) in b.mult.nonzeros() {
            mult[c].push((r, v.clone()));
        }
        for (r, c, v) in b.comult.nonzeros() {
            comult[c].push((r / n, r % n, v.clone()));
        }
        // (Δ⊗id)Δ, which equals (id⊗Δ)Δ once coassociativity holds.
        let comult2 = comult
            .iter()
            .map(|terms| {
                let mut acc: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
                for (a, c, s) in terms {
                    for (a1, a2, t) in &comult[*a] {
                        let v = s * t;
                        acc.entry((*a1, *a2, *c))
                            .and_modify(|x| *x += &v)
                            .or_insert(v);
                    }
                }
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|((a, b, c), v)| (a, b, c, v))
                    .collect()
            })
            .collect();
        let unit = (0..n)
            .filter_map(|i| {
                let v = b.unit.get(i, 0);
                (!v.is_zero()).then(|| (i, v.clone()))
            })
            .collect();
        let counit = (0..n).map(|i| b.counit.get(0, i).clone()).collect();
        Tables {
            mult,
            comult,
            comult2,
            unit,
            counit,
        }
    }
}

fn columns(m: &Matrix) -> Vec<Elem> {
    let mut cols = vec![Vec::new(); m.cols()];
    for (r, c, v) in m.nonzeros() {
        cols[c].push((r, v.clone()));
    }
    for c in cols.iter_mut() {
        c.sort_by_key(|e| e.0);
    }
    cols
}

/// A Hopf algebra with invertible antipode.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub name: String,
    data: BialgebraData,
    antipode: Matrix,
    antipode_inverse: Matrix,
    t: Tables,
    s: Vec<Elem>,
    sinv: Vec<Elem>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
            && self.antipode == other.antipode
            && self.antipode_inverse == other.antipode_inverse
    }
}

impl HopfAlgebra {
    /// Solves for the antipode and its inverse.
    pub fn new(name: impl Into<String>, data: BialgebraData) -> Result<Self> {
        let (s, sinv) = solve_antipode(&data)?;
        Ok(Self::from_parts_unchecked(name, data, s, sinv))
    }

    /// Like [`HopfAlgebra::new`]; a supplied antipode must agree with the solved one.
    pub fn with_antipode(
        name: impl Into<String>,
        data: BialgebraData,
        antipode: Option<Matrix>,
    ) -> Result<Self> {
        let h = Self::new(name, data)?;
        if let Some(s) = antipode {
            if s != h.antipode {
                return Err(Error::AntipodeMismatch);
            }
        }
        Ok(h)
    }

    /// Assembles the data without any checks; used for deliberately broken fixtures.
    pub fn from_parts_unchecked(
        name: impl Into<String>,
        data: BialgebraData,
        antipode: Matrix,
        antipode_inverse: Matrix,
    ) -> Self {
        let t = Tables::build(&data);
        let s = columns(&antipode);
        let sinv = columns(&antipode_inverse);
        HopfAlgebra {
            name: name.into(),
            data,
            antipode,
            antipode_inverse,
            t,
            s,
            sinv,
        }
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }
    pub fn field(&self) -> FieldSpec {
        self.data.field
    }
    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.data.labels[i]
    }
    pub fn bialgebra(&self) -> &BialgebraData {
        &self.data
    }
    pub fn mult(&self) -> &Matrix {
        &self.data.mult
    }
    pub fn unit(&self) -> &Matrix {
        &self.data.unit
    }
    pub fn comult(&self) -> &Matrix {
        &self.data.comult
    }
    pub fn counit(&self) -> &Matrix {
        &self.data.counit
    }
    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }
    pub fn antipode_inverse(&self) -> &Matrix {
        &self.antipode_inverse
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.field())
    }
    pub fn one(&self) -> Scalar {
        Scalar::one(self.field())
    }

    /// e_a · e_b.
    pub fn mul_basis(&self, a: usize, b: usize) -> &Elem {
        &self.t.mult[a * self.dim() + b]
    }
    /// Δ(e_h) as terms (h1, h2, coefficient).
    pub fn comult_basis(&self, h: usize) -> &[(usize, usize, Scalar)] {
        &self.t.comult[h]
    }
    /// Twice iterated coproduct as terms (h1, h2, h3, coefficient).
    pub fn comult2_basis(&self, h: usize) -> &[(usize, usize, usize, Scalar)] {
        &self.t.comult2[h]
    }
    pub fn counit_basis(&self, h: usize) -> &Scalar {
        &self.t.counit[h]
    }
    pub fn unit_elem(&self) -> &Elem {
        &self.t.unit
    }
    pub fn s_basis(&self, h: usize) -> &Elem {
        &self.s[h]
    }
    pub fn sinv_basis(&self, h: usize) -> &Elem {
        &self.sinv[h]
    }

    /// Basis vector as an element.
    pub fn basis(&self, i: usize) -> Elem {
        vec![(i, self.one())]
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (a, s) in x {
            for (b, t) in y {
                let st = s * t;
                for (c, u) in self.mul_basis(*a, *b) {
                    acc.add_mul(*c, &st, u);
                }
            }
        }
        acc.into_elem()
    }

    pub fn mul3(&self, x: &Elem, y: &Elem, z: &Elem) -> Elem {
        self.mul(&self.mul(x, y), z)
    }

    pub fn apply_s(&self, x: &Elem) -> Elem {
        self.apply_cols(&self.s, x)
    }

    pub fn apply_sinv(&self, x: &Elem) -> Elem {
        self.apply_cols(&self.sinv, x)
    }

    fn apply_cols(&self, cols: &[Elem], x: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (a, s) in x {
            for (b, t) in &cols[*a] {
                acc.add_mul(*b, s, t);
            }
        }
        acc.into_elem()
    }

    pub fn counit_elem(&self, x: &Elem) -> Scalar {
        let mut acc = self.zero();
        for (a, s) in x {
            acc.add_mul(s, self.counit_basis(*a));
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| (0..n).all(|b| self.mul_basis(a, b) == self.mul_basis(b, a)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|h| {
            let mut x = Acc::new();
            let mut y = Acc::new();
            for (a, b, s) in self.comult_basis(h) {
                x.add(a * n + b, s);
                y.add(b * n + a, s);
            }
            x.into_elem() == y.into_elem()
        })
    }

    /// Index of a basis element equal to the unit, if the unit is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit_elem().as_slice() {
            [(i, s)] if s.is_one() => Some(*i),
            _ => None,
        }
    }

    /// Group-like basis elements: Δ(e) = e⊗e and ε(e) = 1.
    pub fn grouplike_basis(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&h| {
                matches!(self.comult_basis(h), [(a, b, s)] if *a == h && *b == h && s.is_one())
                    && self.counit_basis(h).is_one()
            })
            .collect()
    }

    pub fn arc(self) -> Arc<Self> {
        Arc::new(self)
    }
}

/// Solves m∘(S⊗id)∘Δ = unit∘ε for S, and S⁻¹(h₂)h₁ = ε(h)1 for S⁻¹.
pub fn solve_antipode(b: &BialgebraData) -> Result<(Matrix, Matrix)> {
    let n = b.dim();
    let field = b.field;
    let t = Tables::build(b);
    let solve = |opposite: bool| -> Result<Matrix> {
        // Unknown S[k, i] (k-th coordinate of S(e_i)) sits at k·n + i.
        let mut rows: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n * n];
        for c in 0..n {
            for (h1, h2, d) in &t.comult[c] {
                let (i, j) = if opposite { (*h2, *h1) } else { (*h1, *h2) };
                for k in 0..n {
                    for (r, m) in &t.mult[k * n + j] {
                        let v = d * m;
                        rows[c * n + r]
                            .entry(k * n + i)
                            .and_modify(|x| *x += &v)
                            .or_insert(v);
                    }
                }
            }
        }
        let rows: Vec<SparseRow> = rows
            .into_iter()
            .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        let mut rhs = vec![Scalar::zero(field); n * n];
        for c in 0..n {
            for (r, u) in &t.unit {
                rhs[c * n + r] = &t.counit[c] * u;
            }
        }
        let x = solve_rows(field, n * n, rows, rhs).map_err(|_| Error::NoAntipode)?;
        Ok(Matrix::from_fn(field, n, n, |k, i| x[k * n + i].clone()))
    };
    let s = solve(false)?;
    let sinv = solve(true)?;
    if &s * &sinv != Matrix::identity(field, n) {
        return Err(Error::NoAntipode);
    }
    Ok((s, sinv))
}

fn pair(h: &HopfAlgebra, a: usize, b: usize) -> String {
    format!("({}, {})", h.label(a), h.label(b))
}

fn triple(h: &HopfAlgebra, a: usize, b: usize, c: usize) -> String {
    format!("({}, {}, {})", h.label(a), h.label(b), h.label(c))
}

/// Δ applied to a sparse element, keyed by h1·n + h2.
fn comult_elem(h: &HopfAlgebra, x: &Elem) -> Elem {
    let n = h.dim();
    let mut acc = Acc::new();
    for (a, s) in x {
        for (a1, a2, t) in h.comult_basis(*a) {
            acc.add_mul(a1 * n + a2, s, t);
        }
    }
    acc.into_elem()
}

/// Product in H⊗H of elements keyed by h1·n + h2.
pub fn mul_tensor2(h: &HopfAlgebra, x: &Elem, y: &Elem) -> Elem {
    let n = h.dim();
    let mut acc = Acc::new();
    for (p, s) in x {
        for (q, t) in y {
            let st = s * t;
            for (c1, u1) in h.mul_basis(p / n, q / n) {
                let su = &st * u1;
                for (c2, u2) in h.mul_basis(p % n, q % n) {
                    acc.add_mul(c1 * n + c2, &su, u2);
                }
            }
        }
    }
    acc.into_elem()
}

/// All Hopf algebra axioms, in a fixed order, each as exact equality on basis tuples.
pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let mut r = Report::new(format!("hopf {}", h.name));
    let one_elem = h.unit_elem().clone();

    let mut bad = None;
    'assoc: for a in 0..n {
        for b in 0..n {
            let ab = h.mul_basis(a, b).clone();
            for c in 0..n {
                let lhs = h.mul(&ab, &h.basis(c));
                let rhs = h.mul(&h.basis(a), h.mul_basis(b, c));
                if lhs != rhs {
                    bad = Some(triple(h, a, b, c));
                    break 'assoc;
                }
            }
        }
    }
    r.record("mult_associative", bad.is_none(), || bad.clone().unwrap());

    let bad = (0..n).find(|&a| {
        h.mul(&one_elem, &h.basis(a)) != h.basis(a) || h.mul(&h.basis(a), &one_elem) != h.basis(a)
    });
    r.record("mult_unital", bad.is_none(), || {
        h.label(bad.unwrap()).to_string()
    });

    let bad = (0..n).find(|&c| {
        let mut lhs = Acc::new();
        let mut rhs = Acc::new();
        for (a, b, s) in h.comult_basis(c) {
            for (a1, a2, t) in h.comult_basis(*a) {
                lhs.add_mul((a1 * n + a2) * n + b, s, t);
            }
            for (b1, b2, t) in h.comult_basis(*b) {
                rhs.add_mul((a * n + b1) * n + b2, s, t);
            }
        }
        lhs.into_elem() != rhs.into_elem()
    });
    r.record("comult_coassociative", bad.is_none(), || {
        h.label(bad.unwrap()).to_string()
    });

    let bad = (0..n).find(|&c| {
        let mut left = Acc::new();
        let mut right = Acc::new();
        for (a, b, s) in h.comult_basis(c) {
            left.add_mul(*b, s, h.counit_basis(*a));
            right.add_mul(*a, s, h.counit_basis(*b));
        }
        left.into_elem() != h.basis(c) || right.into_elem() != h.basis(c)
    });
    r.record("comult_counital", bad.is_none(), || {
        h.label(bad.unwrap()).to_string()
    });

    let mut bad = None;
    'bi: for a in 0..n {
        let da = comult_elem(h, &h.basis(a));
        for b in 0..n {
            let lhs = comult_elem(h, h.mul_basis(a, b));
            let rhs = mul_tensor2(h, &da, &comult_elem(h, &h.basis(b)));
            if lhs != rhs {
                bad = Some(pair(h, a, b));
                break 'bi;
            }
        }
    }
    r.record("bialgebra_compatibility", bad.is_none(), || {
        bad.clone().unwrap()
    });

    let mut one_one = Acc::new();
    for (a, s) in &one_elem {
        for (b, t) in &one_elem {
            one_one.add_mul(a * n + b, s, t);
        }
    }
    r.record(
        "comult_unital",
        comult_elem(h, &one_elem) == one_one.into_elem(),
        || "Δ(1)".into(),
    );

    let mut bad = None;
    'cm: for a in 0..n {
        for b in 0..n {
            if h.counit_elem(h.mul_basis(a, b)) != h.counit_basis(a) * h.counit_basis(b) {
                bad = Some(pair(h, a, b));
                break 'cm;
            }
        }
    }
    r.record("counit_multiplicative", bad.is_none(), || {
        bad.clone().unwrap()
    });

    r.record("counit_unital", h.counit_elem(&one_elem).is_one(), || {
        "ε(1)".into()
    });

    let scaled_unit = |c: usize| -> Elem {
        let e = h.counit_basis(c);
        let mut acc = Acc::new();
        for (i, u) in &one_elem {
            acc.add_mul(*i, e, u);
        }
        acc.into_elem()
    };
    let bad = (0..n).find(|&c| {
        let mut acc = Acc::new();
        for (a, b, s) in h.comult_basis(c) {
            for (k, t) in h.mul(h.s_basis(*a), &h.basis(*b)) {
                acc.add_mul(k, s, &t);
            }
        }
        acc.into_elem() != scaled_unit(c)
    });
    r.record("antipode_left", bad.is_none(), || {
        h.label(bad.unwrap()).to_string()
    });

    let bad = (0..n).find(|&c| {
        let mut acc = Acc::new();
        for (a, b, s) in h.comult_basis(c) {
            for (k, t) in h.mul(&h.basis(*a), h.s_basis(*b)) {
                acc.add_mul(k, s, &t);
            }
        }
        acc.into_elem() != scaled_unit(c)
    });
    r.record("antipode_right", bad.is_none(), || {
        h.label(bad.unwrap()).to_string()
    });

    let id = Matrix::identity(h.field(), n);
    r.record(
        "antipode_inverse",
        h.antipode() * h.antipode_inverse() == id && h.antipode_inverse() * h.antipode() == id,
        || "S∘S⁻¹".into(),
    );
    r
}

/// S is an algebra and coalgebra anti-homomorphism.
pub fn verify_antipode_anti(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let mut r = Report::new(format!("antipode {}", h.name));
    let mut bad = None;
    'a: for a in 0..n {
        for b in 0..n {
            let lhs = h.apply_s(h.mul_basis(a, b));
            let rhs = h.mul(h.s_basis(b), h.s_basis(a));
            if lhs != rhs {
                bad = Some(pair(h, a, b));
                break 'a;
            }
        }
    }
    r.record("antipode_anti_multiplicative", bad.is_none(), || {
        bad.clone().unwrap()
    });
    let bad = (0..n).find(|&c| {
        let lhs = comult_elem(h, h.s_basis(c));
        let mut rhs = Acc::new();
        for (a, b, s) in h.comult_basis(c) {
            for (sb, t) in h.s_basis(*b) {
                for (sa, u) in h.s_basis(*a) {
                    rhs.add(sb * n + sa, &(&(s * t) * u));
                }
            }
        }
        lhs != rhs.into_elem()
    });
    r.record("antipode_anti_comultiplicative", bad.is_none(), || {
        h.label(bad.unwrap()).to_string()
    });
    r
}

/// The dual Hopf algebra in the dual basis: every structure map transposes.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let labels = h.labels().iter().map(|l| format!("{l}*")).collect();
    let data = BialgebraData {
        field: h.field(),
        labels,
        mult: h.comult().transpose(),
        unit: h.counit().transpose(),
        comult: h.mult().transpose(),
        counit: h.unit().transpose(),
    };
    HopfAlgebra::from_parts_unchecked(
        format!("{}*", h.name),
        data,
        h.antipode().transpose(),
        h.antipode_inverse().transpose(),
    )
}

/// A linear map K → H, intended to be a Hopf algebra morphism.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub source: Arc<HopfAlgebra>,
    pub target: Arc<HopfAlgebra>,
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn new(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::Shape(format!(
                "morphism matrix {:?}, expected {:?}",
                matrix.shape(),
                (target.dim(), source.dim())
            )));
        }
        Ok(HopfMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> Self {
        let m = Matrix::identity(h.field(), h.dim());
        HopfMorphism {
            source: h.clone(),
            target: h,
            matrix: m,
        }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &HopfMorphism) -> Self {
        HopfMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &other.matrix,
        }
    }

    /// φ(e_k) as an element of the target.
    pub fn image(&self, k: usize) -> Elem {
        (0..self.matrix.rows())
            .filter_map(|i| {
                let v = self.matrix.get(i, k);
                (!v.is_zero()).then(|| (i, v.clone()))
            })
            .collect()
    }

    pub fn apply(&self, x: &Elem) -> Elem {
        let mut acc = Acc::new();
        for (k, s) in x {
            for (i, t) in self.image(*k) {
                acc.add_mul(i, s, &t);
            }
        }
        acc.into_elem()
    }
}

/// Checks that φ respects unit, product, counit, coproduct and antipode.
pub fn verify_morphism(phi: &HopfMorphism) -> Report {
    let k = &phi.source;
    let h = &phi.target;
    let nk = k.dim();
    let nh = h.dim();
    let mut r = Report::new(format!("morphism {} -> {}", k.name, h.name));
    r.record("unit", phi.apply(k.unit_elem()) == *h.unit_elem(), || {
        "φ(1)".into()
    });
    let mut bad = None;
    'm: for a in 0..nk {
        for b in 0..nk {
            if phi.apply(k.mul_basis(a, b)) != h.mul(&phi.image(a), &phi.image(b)) {
                bad = Some(pair(k, a, b));
                break 'm;
            }
        }
    }
    r.record("mult", bad.is_none(), || bad.clone().unwrap());
    let bad = (0..nk).find(|&a| h.counit_elem(&phi.image(a)) != *k.counit_basis(a));
    r.record("counit", bad.is_none(), || {
        k.label(bad.unwrap()).to_string()
    });
    let bad = (0..nk).find(|&a| {
        let lhs = comult_elem(h, &phi.image(a));
        let mut rhs = Acc::new();
        for (a1, a2, s) in k.comult_basis(a) {
            for (i, t) in phi.image(*a1) {
                for (j, u) in phi.image(*a2) {
                    rhs.add(i * nh + j, &(&(s * &t) * &u));
                }
            }
        }
        lhs != rhs.into_elem()
    });
    r.record("comult", bad.is_none(), || {
        k.label(bad.unwrap()).to_string()
    });
    let bad = (0..nk).find(|&a| phi.apply(k.s_basis(a)) != h.apply_s(&phi.image(a)));
    r.record("antipode", bad.is_none(), || {
        k.label(bad.unwrap()).to_string()
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_c2() -> HopfAlgebra {
        let f = FieldSpec::rational();
        let mult = Matrix::from_ints(f, 2, 4, &[1, 0, 0, 1, 0, 1, 1, 0]);
        let unit = Matrix::from_ints(f, 2, 1, &[1, 0]);
        let mut comult = Matrix::zeros(f, 4, 2);
        comult.set(0, 0, Scalar::one(f));
        comult.set(3, 1, Scalar::one(f));
        let counit = Matrix::from_ints(f, 1, 2, &[1, 1]);
        let b = BialgebraData::new(f, vec!["1".into(), "g".into()], mult, unit, comult, counit)
            .unwrap();
        HopfAlgebra::new("kC2", b).unwrap()
    }

    #[test]
    fn group_algebra_c2_passes() {
        let h = k_c2();
        assert!(verify_hopf(&h).all_passed());
        assert_eq!(h.antipode(), &Matrix::identity(FieldSpec::rational(), 2));
    }

    #[test]
    fn dual_twice_is_identity() {
        let h = k_c2();
        let dd = dual_hopf(&dual_hopf(&h));
        assert_eq!(dd.bialgebra().mult, *h.mult());
        assert_eq!(dd.bialgebra().comult, *h.comult());
        assert!(verify_hopf(&dual_hopf(&h)).all_passed());
    }

    #[test]
    fn identity_morphism_passes() {
        let h = Arc::new(k_c2());
        assert!(verify_morphism(&HopfMorphism::identity(h)).all_passed());
    }
}
