//! Ind ⊣ Res along φ: K → H, with Ind(V) = H⊗_K V as a quotient of H⊗V
//! (coordinate h·dV + v for h⊗v).

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{axpy, col, kron_vec, map_columns, restrict, MonoidalAdjunction, OpModCat};
use crate::exactmath::{quotient_by_rows, Matrix, QuotSpace, Scalar, SparseRow};
use crate::hopf::{Acc, HopfAlgebra, HopfMorphism};
use crate::rep::{tensor_modules, ComoduleRep, ModuleRep, YDModule};
use crate::Result;

/// Ind(V) with its presentation as a quotient of H⊗V.
#[derive(Clone, Debug)]
pub struct IndObj {
    pub base: ModuleRep,
    pub module: ModuleRep,
    pub quot: QuotSpace,
}

impl IndObj {
    pub fn dim(&self) -> usize {
        self.quot.dim()
    }
    /// Class of h⊗v.
    fn class(&self, h: usize, v: usize) -> Vec<Scalar> {
        col(&self.quot.projection, h * self.base.dim() + v)
    }
}

/// Ind ⊣ Res with closed-form unit, counit, oplax structure and the two
/// projection morphisms with their inverses.
pub struct Induction {
    pub phi: HopfMorphism,
    memo: Mutex<HashMap<Matrix, Arc<IndObj>>>,
}

impl std::fmt::Debug for Induction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Induction")
            .field("phi", &self.phi.matrix)
            .finish_non_exhaustive()
    }
}

impl Induction {
    pub fn new(phi: HopfMorphism) -> Self {
        Induction {
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

    pub fn restrict(&self, w: &ModuleRep) -> ModuleRep {
        restrict(&self.phi, w)
    }

    /// Ind(V) = coequalizer of hφ(k)⊗v and h⊗kv, memoized on the action of V.
    pub fn induce(&self, v: &ModuleRep) -> Arc<IndObj> {
        if let Some(o) = self.memo.lock().unwrap().get(v.action()) {
            return o.clone();
        }
        let o = Arc::new(self.build(v));
        self.memo
            .lock()
            .unwrap()
            .insert(v.action().clone(), o.clone());
        o
    }

    fn build(&self, v: &ModuleRep) -> IndObj {
        let h = self.h();
        let k = self.k();
        let field = h.field();
        let (nh, d) = (h.dim(), v.dim());
        let mut rows: Vec<SparseRow> = Vec::new();
        for hh in 0..nh {
            for kk in 0..k.dim() {
                let prod = h.mul(&h.basis(hh), &self.phi.image(kk));
                let rho = v.op(kk);
                for vv in 0..d {
                    let mut acc = Acc::new();
                    for (c, s) in &prod {
                        acc.add(c * d + vv, s);
                    }
                    for w in 0..d {
                        acc.add(hh * d + w, &-rho.get(w, vv));
                    }
                    let row = acc.into_elem();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let quot = quotient_by_rows(field, nh * d, rows);
        let mut obj = IndObj {
            base: v.clone(),
            module: ModuleRep::trivial(h.clone()),
            quot,
        };
        let dim = obj.dim();
        let ops = (0..nh)
            .map(|a| {
                map_columns(field, dim, &obj.quot.section, |r| {
                    let (b, vv) = (r / d, r % d);
                    let mut out = vec![Scalar::zero(field); dim];
                    for (c, s) in h.mul_basis(a, b) {
                        axpy(&mut out, s, &obj.class(*c, vv));
                    }
                    out
                })
            })
            .collect();
        obj.module = ModuleRep::from_ops(h.clone(), dim, ops);
        obj
    }

    pub fn ind_module(&self, v: &ModuleRep) -> ModuleRep {
        self.induce(v).module.clone()
    }

    /// Ind(f) for a K-linear f: V → V'.
    pub fn ind_map(&self, v: &ModuleRep, v2: &ModuleRep, f: &Matrix) -> Matrix {
        let a = self.induce(v);
        let b = self.induce(v2);
        let field = f.field();
        let (d, d2) = (v.dim(), v2.dim());
        map_columns(field, b.dim(), &a.quot.section, |r| {
            let (hh, vv) = (r / d, r % d);
            let mut out = vec![Scalar::zero(field); b.dim()];
            for w in 0..d2 {
                axpy(&mut out, f.get(w, vv), &b.class(hh, w));
            }
            out
        })
    }

    /// v ↦ [1⊗v]: V → Res Ind V.
    pub fn unit_ind(&self, v: &ModuleRep) -> Matrix {
        let o = self.induce(v);
        let field = v.field();
        let mut m = Matrix::zeros(field, o.dim(), v.dim());
        for vv in 0..v.dim() {
            let mut c = vec![Scalar::zero(field); o.dim()];
            for (u, s) in self.h().unit_elem() {
                axpy(&mut c, s, &o.class(*u, vv));
            }
            for (i, s) in c.into_iter().enumerate() {
                m.set(i, vv, s);
            }
        }
        m
    }

    /// [h⊗w] ↦ hw: Ind Res W → W.
    pub fn counit_ind(&self, w: &ModuleRep) -> Matrix {
        let o = self.induce(&self.restrict(w));
        w.action() * &o.quot.section
    }

    /// [h⊗(v⊗u)] ↦ [h₁⊗v]⊗[h₂⊗u].
    pub fn oplax(&self, v: &ModuleRep, u: &ModuleRep) -> Matrix {
        self.oplax_impl(v, u, false)
    }

    /// The reversed-coproduct reading [h⊗(v⊗u)] ↦ [h₂⊗v]⊗[h₁⊗u]; not
    /// H-linear unless H is cocommutative.
    pub fn oplax_verbatim(&self, v: &ModuleRep, u: &ModuleRep) -> Matrix {
        self.oplax_impl(v, u, true)
    }

    fn oplax_impl(&self, v: &ModuleRep, u: &ModuleRep, reversed: bool) -> Matrix {
        let h = self.h();
        let field = h.field();
        let vu = self.induce(&tensor_modules(v, u));
        let iv = self.induce(v);
        let iu = self.induce(u);
        let (dv, du) = (v.dim(), u.dim());
        let out_dim = iv.dim() * iu.dim();
        map_columns(field, out_dim, &vu.quot.section, |r| {
            let hh = r / (dv * du);
            let (vv, uu) = ((r % (dv * du)) / du, r % du);
            let mut out = vec![Scalar::zero(field); out_dim];
            for (h1, h2, c) in h.comult_basis(hh) {
                let (a, b) = if reversed { (h2, h1) } else { (h1, h2) };
                axpy(&mut out, c, &kron_vec(&iv.class(*a, vv), &iu.class(*b, uu)));
            }
            out
        })
    }

    /// [h⊗1] ↦ ε(h): Ind 𝟙 → 𝟙.
    pub fn oplax0(&self) -> Matrix {
        let h = self.h();
        let o = self.induce(&ModuleRep::trivial(self.k().clone()));
        let amb = Matrix::from_fn(h.field(), 1, h.dim(), |_, c| h.counit_basis(c).clone());
        &amb * &o.quot.section
    }

    /// iprojl_{W,V}: Ind(Res W⊗V) → W⊗Ind V, [h⊗w⊗v] ↦ h₁w ⊗ [h₂⊗v].
    pub fn iprojl(&self, w: &ModuleRep, v: &ModuleRep) -> Matrix {
        let h = self.h();
        let field = h.field();
        let src = self.induce(&tensor_modules(&self.restrict(w), v));
        let iv = self.induce(v);
        let (dw, dv) = (w.dim(), v.dim());
        let out_dim = dw * iv.dim();
        map_columns(field, out_dim, &src.quot.section, |r| {
            let hh = r / (dw * dv);
            let (ww, vv) = ((r % (dw * dv)) / dv, r % dv);
            let mut out = vec![Scalar::zero(field); out_dim];
            for (h1, h2, c) in h.comult_basis(hh) {
                axpy(
                    &mut out,
                    c,
                    &kron_vec(&col(w.op(*h1), ww), &iv.class(*h2, vv)),
                );
            }
            out
        })
    }

    /// w⊗[h⊗v] ↦ [h₂ ⊗ S⁻¹(h₁)w ⊗ v].
    pub fn iprojl_inv(&self, w: &ModuleRep, v: &ModuleRep) -> Matrix {
        let h = self.h();
        let field = h.field();
        let tgt = self.induce(&tensor_modules(&self.restrict(w), v));
        let iv = self.induce(v);
        let (dw, dv) = (w.dim(), v.dim());
        let sinv: Vec<Matrix> = (0..h.dim()).map(|p| w.act_elem(h.sinv_basis(p))).collect();
        let sec = Matrix::identity(field, dw).kron(&iv.quot.section);
        let amb_v = h.dim() * dv;
        map_columns(field, tgt.dim(), &sec, |r| {
            let ww = r / amb_v;
            let (hh, vv) = ((r % amb_v) / dv, r % dv);
            let mut out = vec![Scalar::zero(field); tgt.dim()];
            for (h1, h2, c) in h.comult_basis(hh) {
                for w2 in 0..dw {
                    let s = sinv[*h1].get(w2, ww);
                    if !s.is_zero() {
                        axpy(&mut out, &(c * s), &tgt.class(*h2, w2 * dv + vv));
                    }
                }
            }
            out
        })
    }

    /// iprojr_{V,W}: Ind(V⊗Res W) → Ind V⊗W, [h⊗v⊗w] ↦ [h₁⊗v] ⊗ h₂w.
    pub fn iprojr(&self, v: &ModuleRep, w: &ModuleRep) -> Matrix {
        let h = self.h();
        let field = h.field();
        let src = self.induce(&tensor_modules(v, &self.restrict(w)));
        let iv = self.induce(v);
        let (dv, dw) = (v.dim(), w.dim());
        let out_dim = iv.dim() * dw;
        map_columns(field, out_dim, &src.quot.section, |r| {
            let hh = r / (dv * dw);
            let (vv, ww) = ((r % (dv * dw)) / dw, r % dw);
            let mut out = vec![Scalar::zero(field); out_dim];
            for (h1, h2, c) in h.comult_basis(hh) {
                axpy(
                    &mut out,
                    c,
                    &kron_vec(&iv.class(*h1, vv), &col(w.op(*h2), ww)),
                );
            }
            out
        })
    }

    /// [h⊗v]⊗w ↦ [h₁ ⊗ v ⊗ S(h₂)w].
    pub fn iprojr_inv(&self, v: &ModuleRep, w: &ModuleRep) -> Matrix {
        let h = self.h();
        let field = h.field();
        let tgt = self.induce(&tensor_modules(v, &self.restrict(w)));
        let iv = self.induce(v);
        let (dv, dw) = (v.dim(), w.dim());
        let s_ops: Vec<Matrix> = (0..h.dim()).map(|p| w.act_elem(h.s_basis(p))).collect();
        let sec = iv.quot.section.kron(&Matrix::identity(field, dw));
        map_columns(field, tgt.dim(), &sec, |r| {
            let (amb, ww) = (r / dw, r % dw);
            let (hh, vv) = (amb / dv, amb % dv);
            let mut out = vec![Scalar::zero(field); tgt.dim()];
            for (h1, h2, c) in h.comult_basis(hh) {
                for w2 in 0..dw {
                    let s = s_ops[*h2].get(w2, ww);
                    if !s.is_zero() {
                        axpy(&mut out, &(c * s), &tgt.class(*h1, vv * dw + w2));
                    }
                }
            }
            out
        })
    }

    /// Closed-form coaction on Ind(V) for a YD module V over K:
    /// [h⊗v] ↦ h₁ φ(v⁽⁻¹⁾) S(h₃) ⊗ [h₂⊗v⁽⁰⁾].
    pub fn yd_coaction(&self, v: &YDModule) -> ComoduleRep {
        let h = self.h();
        let field = h.field();
        let o = self.induce(&v.module);
        let d = v.dim();
        let dim = o.dim();
        let support = v.comodule.support();
        let mut prods: HashMap<(usize, usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
        let mut blocks = vec![Matrix::zeros(field, dim, dim); h.dim()];
        for j in 0..dim {
            for (r, _, coeff) in o.quot.section.column(j).nonzeros() {
                let (hh, vv) = (r / d, r % d);
                for (h1, h2, h3, c) in h.comult2_basis(hh) {
                    let cc = coeff * c;
                    for &kk in &support {
                        let prod = prods.entry((*h1, kk, *h3)).or_insert_with(|| {
                            h.mul3(&h.basis(*h1), &self.phi.image(kk), h.s_basis(*h3))
                        });
                        for w in 0..d {
                            let b = v.comodule.block(kk).get(w, vv);
                            if b.is_zero() {
                                continue;
                            }
                            let cls = o.class(*h2, w);
                            for (p, e) in prod.iter() {
                                let f = &(&cc * b) * e;
                                for (i, x) in cls.iter().enumerate() {
                                    if !x.is_zero() {
                                        blocks[*p].add_at(i, j, &(&f * x));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        ComoduleRep::from_blocks(h.clone(), dim, blocks)
    }

    /// Res(counit⊗counit)∘oplax_{Res X,Res Y}∘unit_{Res X⊗Res Y}: the lax
    /// structure Res X⊗Res Y → Res(X⊗Y) obtained as a mate; it is the identity.
    pub fn res_mate_lax(&self, x: &ModuleRep, y: &ModuleRep) -> Matrix {
        let rx = self.restrict(x);
        let ry = self.restrict(y);
        let cc = self.counit_ind(x).kron(&self.counit_ind(y));
        &(&cc * &self.oplax(&rx, &ry)) * &self.unit_ind(&tensor_modules(&rx, &ry))
    }
}

/// Ind ⊣ Res in the opposite categories: C = Mod_H^op, D = Mod_K^op,
/// G = Res, R = Ind, with every structure map transposed.
#[derive(Debug)]
pub struct OpInduction {
    pub ind: Arc<Induction>,
    h_cat: OpModCat,
    k_cat: OpModCat,
}

impl OpInduction {
    pub fn new(ind: Arc<Induction>) -> Self {
        OpInduction {
            h_cat: OpModCat {
                hopf: ind.h().clone(),
            },
            k_cat: OpModCat {
                hopf: ind.k().clone(),
            },
            ind,
        }
    }
}

impl MonoidalAdjunction for OpInduction {
    type C = OpModCat;
    type D = OpModCat;

    fn name(&self) -> String {
        format!(
            "Ind ⊣ Res along {} → {} (opposite)",
            self.ind.k().name,
            self.ind.h().name
        )
    }
    fn c(&self) -> &OpModCat {
        &self.h_cat
    }
    fn d(&self) -> &OpModCat {
        &self.k_cat
    }
    fn g_obj(&self, a: &ModuleRep) -> ModuleRep {
        self.ind.restrict(a)
    }
    fn r_obj(&self, x: &ModuleRep) -> ModuleRep {
        self.ind.ind_module(x)
    }
    fn r_map(&self, x: &ModuleRep, y: &ModuleRep, f: &Matrix) -> Matrix {
        self.ind.ind_map(y, x, &f.transpose()).transpose()
    }
    fn unit(&self, a: &ModuleRep) -> Matrix {
        self.ind.counit_ind(a).transpose()
    }
    fn counit(&self, x: &ModuleRep) -> Matrix {
        self.ind.unit_ind(x).transpose()
    }
    fn lax(&self, x: &ModuleRep, y: &ModuleRep) -> Matrix {
        self.ind.oplax(x, y).transpose()
    }
    fn lax0(&self) -> Matrix {
        self.ind.oplax0().transpose()
    }
    fn lproj(&self, a: &ModuleRep, x: &ModuleRep) -> Matrix {
        self.ind.iprojl(a, x).transpose()
    }
    fn rproj(&self, x: &ModuleRep, a: &ModuleRep) -> Matrix {
        self.ind.iprojr(x, a).transpose()
    }
    fn lproj_inv(&self, a: &ModuleRep, x: &ModuleRep) -> Result<Matrix> {
        Ok(self.ind.iprojl_inv(a, x).transpose())
    }
    fn rproj_inv(&self, x: &ModuleRep, a: &ModuleRep) -> Result<Matrix> {
        Ok(self.ind.iprojr_inv(x, a).transpose())
    }
}
