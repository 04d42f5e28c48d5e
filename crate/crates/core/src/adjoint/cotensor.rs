//! Corestriction ⊣ cotensor induction along φ: K → H for left comodules.
//!
//! K□_H W is the equalizer of id_K⊗δ_W and ((id⊗φ)Δ_K)⊗id_W inside K⊗W,
//! coordinate k·dW + w.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{free_coords, ComodCat, MonoidalAdjunction, StrictMonoidal};
use crate::exactmath::{equalizer_of_rows, Matrix, Scalar, SparseRow, SubSpace};
use crate::hopf::{Acc, HopfAlgebra, HopfMorphism};
use crate::rep::{ComoduleRep, ModuleRep, YDModule};
use crate::{Error, Result};

/// V ↦ V with coaction (φ⊗id)δ.
pub fn corestrict(phi: &HopfMorphism, v: &ComoduleRep) -> ComoduleRep {
    let h = &phi.target;
    let field = h.field();
    let d = v.dim();
    let mut blocks = vec![Matrix::zeros(field, d, d); h.dim()];
    for k in v.support() {
        for (hh, s) in phi.image(k) {
            blocks[hh] = &blocks[hh] + &v.block(k).scale(&s);
        }
    }
    ComoduleRep::from_blocks(h.clone(), d, blocks)
}

#[derive(Clone, Debug)]
pub struct CotensorObj {
    pub base: ComoduleRep,
    pub comodule: ComoduleRep,
    pub space: SubSpace,
    pub free: Vec<usize>,
}

impl CotensorObj {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    fn val(&self, s: usize, k: usize, w: usize) -> &Scalar {
        self.space.inclusion.get(k * self.base.dim() + w, s)
    }
    fn coord(&self, t: usize) -> (usize, usize) {
        let d = self.base.dim();
        (self.free[t] / d, self.free[t] % d)
    }
}

pub struct Cotensor {
    pub phi: HopfMorphism,
    k_cat: ComodCat,
    h_cat: ComodCat,
    memo: Mutex<HashMap<Matrix, Arc<CotensorObj>>>,
}

impl std::fmt::Debug for Cotensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Cotensor")
            .field("phi", &self.phi.matrix)
            .finish_non_exhaustive()
    }
}

impl Cotensor {
    pub fn new(phi: HopfMorphism) -> Self {
        Cotensor {
            k_cat: ComodCat {
                hopf: phi.source.clone(),
            },
            h_cat: ComodCat {
                hopf: phi.target.clone(),
            },
            phi,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        &self.phi.target
    }
    pub fn k(&self) -> &Arc<HopfAlgebra> {
        &self.phi.source
    }

    pub fn corestrict(&self, v: &ComoduleRep) -> ComoduleRep {
        corestrict(&self.phi, v)
    }

    pub fn cotensor(&self, w: &ComoduleRep) -> Arc<CotensorObj> {
        if let Some(o) = self.memo.lock().unwrap().get(w.coaction()) {
            return o.clone();
        }
        let o = Arc::new(self.build(w));
        self.memo
            .lock()
            .unwrap()
            .insert(w.coaction().clone(), o.clone());
        o
    }

    fn build(&self, w: &ComoduleRep) -> CotensorObj {
        let k = self.k();
        let h = self.h();
        let field = k.field();
        let (nk, nh, d) = (k.dim(), h.dim(), w.dim());
        let mut eqs: HashMap<usize, Acc> = HashMap::new();
        for kk in 0..nk {
            for ww in 0..d {
                let input = kk * d + ww;
                for hh in w.support() {
                    for w2 in 0..d {
                        let b = w.block(hh).get(w2, ww);
                        if !b.is_zero() {
                            eqs.entry((kk * nh + hh) * d + w2)
                                .or_default()
                                .add(input, b);
                        }
                    }
                }
                for (k1, k2, t) in k.comult_basis(kk) {
                    for (hh, u) in self.phi.image(*k2) {
                        eqs.entry((k1 * nh + hh) * d + ww)
                            .or_default()
                            .add(input, &-(t * &u));
                    }
                }
            }
        }
        let mut keys: Vec<usize> = eqs.keys().copied().collect();
        keys.sort_unstable();
        let rows: Vec<SparseRow> = keys
            .into_iter()
            .map(|key| eqs.remove(&key).unwrap().into_elem())
            .filter(|r| !r.is_empty())
            .collect();
        let space = equalizer_of_rows(field, nk * d, rows);
        let free = free_coords(&space);
        let mut obj = CotensorObj {
            base: w.clone(),
            comodule: ComoduleRep::trivial(k.clone()),
            space,
            free,
        };
        // δ = Δ_K⊗id restricted: block a collects Δ(k) terms with k₁ = a.
        let dim = obj.dim();
        let mut blocks = vec![Matrix::zeros(field, dim, dim); nk];
        let mut by_first: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); nk];
        for kk in 0..nk {
            for (k1, k2, t) in k.comult_basis(kk) {
                by_first[*k1].push((kk, *k2, t.clone()));
            }
        }
        for (a, terms) in by_first.iter().enumerate() {
            for t in 0..dim {
                let (k2t, wt) = obj.coord(t);
                for (kk, k2, c) in terms {
                    if *k2 != k2t {
                        continue;
                    }
                    for s in 0..dim {
                        let v = obj.val(s, *kk, wt);
                        if !v.is_zero() {
                            blocks[a].add_at(t, s, &(c * v));
                        }
                    }
                }
            }
        }
        obj.comodule = ComoduleRep::from_blocks(k.clone(), dim, blocks);
        obj
    }

    pub fn cotensor_comodule(&self, w: &ComoduleRep) -> ComoduleRep {
        self.cotensor(w).comodule.clone()
    }

    /// Closed-form K-action on K□_H V for a YD module V over H:
    /// k⊗(l⊗v) ↦ k₁ l S(k₃) ⊗ φ(k₂)v.
    pub fn yd_action(&self, v: &YDModule) -> Result<ModuleRep> {
        let k = self.k();
        let field = k.field();
        let nk = k.dim();
        let o = self.cotensor(&v.comodule);
        let d = v.dim();
        let dim = o.dim();
        let phi_ops: Vec<Matrix> = (0..nk)
            .map(|kk| v.module.act_elem(&self.phi.image(kk)))
            .collect();
        let mut ops = Vec::with_capacity(nk);
        for kk in 0..nk {
            let mut amb = Matrix::zeros(field, nk * d, dim);
            for (k1, k2, k3, c) in k.comult2_basis(kk) {
                let op = &phi_ops[*k2];
                for l in 0..nk {
                    let prod = k.mul3(&k.basis(*k1), &k.basis(l), k.s_basis(*k3));
                    if prod.is_empty() {
                        continue;
                    }
                    for s in 0..dim {
                        for w in 0..d {
                            let f = o.val(s, l, w);
                            if f.is_zero() {
                                continue;
                            }
                            let cf = c * f;
                            for w2 in 0..d {
                                let a = op.get(w2, w);
                                if a.is_zero() {
                                    continue;
                                }
                                let cfa = &cf * a;
                                for (p, e) in &prod {
                                    amb.add_at(p * d + w2, s, &(&cfa * e));
                                }
                            }
                        }
                    }
                }
            }
            ops.push(self.land(&o.space.inclusion, &o.space.retraction, amb, "induced action")?);
        }
        Ok(ModuleRep::from_ops(k.clone(), dim, ops))
    }

    /// Ambient value restricted to the subspace, failing if it leaves it.
    fn land(&self, sub: &Matrix, retr: &Matrix, y: Matrix, what: &str) -> Result<Matrix> {
        let r = retr * &y;
        if sub * &r != y {
            return Err(Error::Invalid(format!(
                "{what}: image leaves the cotensor subspace"
            )));
        }
        Ok(r)
    }

    fn pick(&self, o: &CotensorObj, amb: &Matrix) -> Matrix {
        &o.space.retraction * amb
    }
}

impl MonoidalAdjunction for Cotensor {
    type C = ComodCat;
    type D = ComodCat;

    fn name(&self) -> String {
        format!(
            "corestriction ⊣ cotensor along {} → {}",
            self.k().name,
            self.h().name
        )
    }
    fn c(&self) -> &ComodCat {
        &self.k_cat
    }
    fn d(&self) -> &ComodCat {
        &self.h_cat
    }
    fn g_obj(&self, a: &ComoduleRep) -> ComoduleRep {
        self.corestrict(a)
    }
    fn r_obj(&self, x: &ComoduleRep) -> ComoduleRep {
        self.cotensor_comodule(x)
    }

    fn r_map(&self, x: &ComoduleRep, y: &ComoduleRep, f: &Matrix) -> Matrix {
        let xo = self.cotensor(x);
        let yo = self.cotensor(y);
        let field = f.field();
        Matrix::from_fn(field, yo.dim(), xo.dim(), |t, s| {
            let (kk, yy) = yo.coord(t);
            let mut acc = Scalar::zero(field);
            for xx in 0..x.dim() {
                acc.add_mul(f.get(yy, xx), xo.val(s, kk, xx));
            }
            acc
        })
    }

    /// unit_V = δ_V.
    fn unit(&self, a: &ComoduleRep) -> Matrix {
        let o = self.cotensor(&self.corestrict(a));
        self.pick(&o, a.coaction())
    }

    /// counit = ε_K⊗id.
    fn counit(&self, x: &ComoduleRep) -> Matrix {
        let o = self.cotensor(x);
        let k = self.k();
        let field = k.field();
        Matrix::from_fn(field, x.dim(), o.dim(), |xx, s| {
            let mut acc = Scalar::zero(field);
            for kk in 0..k.dim() {
                acc.add_mul(k.counit_basis(kk), o.val(s, kk, xx));
            }
            acc
        })
    }

    /// (k⊗v)⊗(l⊗w) ↦ kl⊗v⊗w.
    fn lax(&self, x: &ComoduleRep, y: &ComoduleRep) -> Matrix {
        let k = self.k();
        let field = k.field();
        let xo = self.cotensor(x);
        let yo = self.cotensor(y);
        let xy = self.cotensor(&self.h_cat.tensor(x, y));
        let (dx, dy) = (x.dim(), y.dim());
        let mut pos = vec![usize::MAX; k.dim() * dx * dy];
        for (t, &j) in xy.free.iter().enumerate() {
            pos[j] = t;
        }
        let (sx, sy) = (xo.dim(), yo.dim());
        let mut out = Matrix::zeros(field, xy.dim(), sx * sy);
        for ka in 0..k.dim() {
            for kb in 0..k.dim() {
                for (kk, c) in k.mul_basis(ka, kb) {
                    for xx in 0..dx {
                        for yy in 0..dy {
                            let t = pos[kk * dx * dy + xx * dy + yy];
                            if t == usize::MAX {
                                continue;
                            }
                            for s1 in 0..sx {
                                let f = xo.val(s1, ka, xx);
                                if f.is_zero() {
                                    continue;
                                }
                                let cf = c * f;
                                for s2 in 0..sy {
                                    let g = yo.val(s2, kb, yy);
                                    if !g.is_zero() {
                                        out.add_at(t, s1 * sy + s2, &(&cf * g));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// 1 ↦ 1_K⊗1.
    fn lax0(&self) -> Matrix {
        let k = self.k();
        let o = self.cotensor(&self.h_cat.unit_obj());
        let mut amb = Matrix::zeros(k.field(), k.dim(), 1);
        for (u, c) in k.unit_elem() {
            amb.set(*u, 0, c.clone());
        }
        self.pick(&o, &amb)
    }

    /// k⊗a⊗x ↦ a⁽⁰⁾ ⊗ S⁻¹(a⁽⁻¹⁾)k ⊗ x.
    fn lproj_inv(&self, a: &ComoduleRep, x: &ComoduleRep) -> Result<Matrix> {
        let k = self.k();
        let field = k.field();
        let nk = k.dim();
        let (da, dx) = (a.dim(), x.dim());
        let src = self.cotensor(&self.h_cat.tensor(&self.corestrict(a), x));
        let xo = self.cotensor(x);
        let mut m = Matrix::zeros(field, da * nk * dx, nk * da * dx);
        for kk in 0..nk {
            for aa in 0..da {
                for c in a.support() {
                    let sk = k.mul(k.sinv_basis(c), &k.basis(kk));
                    for a0 in 0..da {
                        let b = a.block(c).get(a0, aa);
                        if b.is_zero() {
                            continue;
                        }
                        for (k2, u) in &sk {
                            let bu = b * u;
                            for xx in 0..dx {
                                m.add_at((a0 * nk + k2) * dx + xx, (kk * da + aa) * dx + xx, &bu);
                            }
                        }
                    }
                }
            }
        }
        let y = &m * &src.space.inclusion;
        let id_a = Matrix::identity(field, da);
        self.land(
            &id_a.kron(&xo.space.inclusion),
            &id_a.kron(&xo.space.retraction),
            y,
            "lproj⁻¹",
        )
    }

    /// k⊗x⊗a ↦ kS(a⁽⁻¹⁾) ⊗ x ⊗ a⁽⁰⁾.
    fn rproj_inv(&self, x: &ComoduleRep, a: &ComoduleRep) -> Result<Matrix> {
        let k = self.k();
        let field = k.field();
        let nk = k.dim();
        let (da, dx) = (a.dim(), x.dim());
        let src = self.cotensor(&self.h_cat.tensor(x, &self.corestrict(a)));
        let xo = self.cotensor(x);
        let mut m = Matrix::zeros(field, nk * dx * da, nk * dx * da);
        for kk in 0..nk {
            for c in a.support() {
                let ks = k.mul(&k.basis(kk), k.s_basis(c));
                for aa in 0..da {
                    for a0 in 0..da {
                        let b = a.block(c).get(a0, aa);
                        if b.is_zero() {
                            continue;
                        }
                        for (k2, u) in &ks {
                            let bu = b * u;
                            for xx in 0..dx {
                                m.add_at((k2 * dx + xx) * da + a0, (kk * dx + xx) * da + aa, &bu);
                            }
                        }
                    }
                }
            }
        }
        let y = &m * &src.space.inclusion;
        let id_a = Matrix::identity(field, da);
        self.land(
            &xo.space.inclusion.kron(&id_a),
            &xo.space.retraction.kron(&id_a),
            y,
            "rproj⁻¹",
        )
    }
}
