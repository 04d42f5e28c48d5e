//! Res ⊣ CoInd along φ: K → H.
//!
//! CoInd(V) = Hom_K(H, V) sits inside Hom(H, V) with coordinate h·dV + v
//! holding F(e_h)_v. The equalizer retraction picks free coordinates, so
//! every map into CoInd is evaluated only at those coordinates.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::{free_coords, restrict, ModCat, MonoidalAdjunction, StrictMonoidal};
use crate::exactmath::{equalizer_of_rows, inverse, rank, Matrix, Scalar, SparseRow, SubSpace};
use crate::hopf::{Acc, Elem, HopfAlgebra, HopfMorphism};
use crate::rep::{ComoduleRep, ModuleRep, YDModule};
use crate::{Error, Result};

/// Elements h_i of H with K-linear f_i: H → K such that h = Σ φ(f_i(h)) h_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis {
    /// Basis indices of the h_i.
    pub elements: Vec<usize>,
    /// functionals[i][h] = f_i(e_h) ∈ K.
    pub functionals: Vec<Vec<Elem>>,
}

/// Finds a K-basis of H among basis elements: the hint if given, otherwise
/// greedily in index order, keeping elements that enlarge the K-span.
pub fn dual_basis(phi: &HopfMorphism, hint: Option<&[usize]>) -> Result<DualBasis> {
    let h = &phi.target;
    let k = &phi.source;
    let (nh, nk) = (h.dim(), k.dim());
    let field = h.field();
    let span_cols = |b: usize| -> Vec<Matrix> {
        (0..nk)
            .map(|kk| {
                let e = h.mul(&phi.image(kk), &h.basis(b));
                let mut c = Matrix::zeros(field, nh, 1);
                for (i, s) in e {
                    c.set(i, 0, s);
                }
                c
            })
            .collect()
    };
    let chosen: Vec<usize> = match hint {
        Some(hint) => {
            if let Some(&b) = hint.iter().find(|&&b| b >= nh) {
                return Err(Error::NotProjective(format!("hint index {b} out of range")));
            }
            hint.to_vec()
        }
        None => {
            let mut chosen = Vec::new();
            let mut cols: Vec<Matrix> = Vec::new();
            let mut r = 0;
            for b in 0..nh {
                let mut trial = cols.clone();
                trial.extend(span_cols(b));
                let m = Matrix::from_columns(field, nh, &trial);
                let rr = rank(&m);
                if rr > r {
                    r = rr;
                    cols = trial;
                    chosen.push(b);
                }
                if r == nh {
                    break;
                }
            }
            chosen
        }
    };
    let cols: Vec<Matrix> = chosen.iter().flat_map(|&b| span_cols(b)).collect();
    if cols.len() != nh {
        return Err(Error::NotProjective(format!(
            "{} elements span {} columns over K, H has dimension {nh}",
            chosen.len(),
            cols.len()
        )));
    }
    let m = Matrix::from_columns(field, nh, &cols);
    let minv = inverse(&m).map_err(|_| {
        Error::NotProjective(format!(
            "{:?} is not a free K-basis of H",
            chosen.iter().map(|&b| h.label(b)).collect::<Vec<_>>()
        ))
    })?;
    // Coordinates of e_h are column h of M⁻¹, indexed by i·nk + k.
    let functionals = (0..chosen.len())
        .map(|i| {
            (0..nh)
                .map(|hh| {
                    (0..nk)
                        .filter_map(|kk| {
                            let v = minv.get(i * nk + kk, hh);
                            (!v.is_zero()).then(|| (kk, v.clone()))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let db = DualBasis {
        elements: chosen,
        functionals,
    };
    if !verify_dual_basis(phi, &db) {
        return Err(Error::NotProjective("dual basis identity fails".into()));
    }
    Ok(db)
}

/// Checks h = Σ φ(f_i(h)) h_i on every basis element and K-linearity of each f_i.
pub fn verify_dual_basis(phi: &HopfMorphism, db: &DualBasis) -> bool {
    let h = &phi.target;
    let k = &phi.source;
    let reconstructs = (0..h.dim()).all(|hh| {
        let mut acc = Acc::new();
        for (i, &b) in db.elements.iter().enumerate() {
            let fi = phi.apply(&db.functionals[i][hh]);
            for (c, s) in h.mul(&fi, &h.basis(b)) {
                acc.add(c, &s);
            }
        }
        acc.into_elem() == h.basis(hh)
    });
    let linear = db.functionals.iter().all(|f| {
        (0..k.dim()).all(|kk| {
            (0..h.dim()).all(|hh| {
                let mut lhs = Acc::new();
                for (c, s) in h.mul(&phi.image(kk), &h.basis(hh)) {
                    for (j, t) in &f[c] {
                        lhs.add_mul(*j, &s, t);
                    }
                }
                lhs.into_elem() == k.mul(&k.basis(kk), &f[hh])
            })
        })
    });
    reconstructs && linear
}

/// CoInd(V) with its embedding into Hom(H, V).
#[derive(Clone, Debug)]
pub struct CoIndObj {
    pub base: ModuleRep,
    pub module: ModuleRep,
    pub space: SubSpace,
    pub free: Vec<usize>,
}

impl CoIndObj {
    /// F_s(e_h)_v for basis vector s.
    fn val(&self, s: usize, h: usize, v: usize) -> &Scalar {
        self.space.inclusion.get(h * self.base.dim() + v, s)
    }
    fn dim(&self) -> usize {
        self.space.dim()
    }
    /// (h, v) of free coordinate t.
    fn coord(&self, t: usize) -> (usize, usize) {
        let d = self.base.dim();
        (self.free[t] / d, self.free[t] % d)
    }
}

/// Res ⊣ CoInd with C = Mod_H and D = Mod_K.
pub struct CoInduction {
    pub phi: HopfMorphism,
    h_cat: ModCat,
    k_cat: ModCat,
    dual: Option<DualBasis>,
    memo: Mutex<HashMap<Matrix, Arc<CoIndObj>>>,
}

impl std::fmt::Debug for CoInduction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoInduction")
            .field("phi", &self.phi.matrix)
            .field("dual", &self.dual)
            .finish_non_exhaustive()
    }
}

impl CoInduction {
    /// Builds the adjunction; the dual basis is searched for but optional.
    pub fn new(phi: HopfMorphism) -> Self {
        let dual = dual_basis(&phi, None).ok();
        CoInduction {
            h_cat: ModCat {
                hopf: phi.target.clone(),
            },
            k_cat: ModCat {
                hopf: phi.source.clone(),
            },
            phi,
            dual,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_dual_basis(phi: HopfMorphism, db: DualBasis) -> Result<Self> {
        if !verify_dual_basis(&phi, &db) {
            return Err(Error::NotProjective("supplied dual basis fails".into()));
        }
        let mut c = Self::new(phi);
        c.dual = Some(db);
        Ok(c)
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        &self.phi.target
    }
    pub fn k(&self) -> &Arc<HopfAlgebra> {
        &self.phi.source
    }
    pub fn dual_basis(&self) -> Option<&DualBasis> {
        self.dual.as_ref()
    }

    pub fn restrict(&self, w: &ModuleRep) -> ModuleRep {
        restrict(&self.phi, w)
    }

    /// CoInd(V), memoized on the action matrix of V.
    pub fn coinduce(&self, v: &ModuleRep) -> Arc<CoIndObj> {
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

    fn build(&self, v: &ModuleRep) -> CoIndObj {
        let h = self.h();
        let k = self.k();
        let field = h.field();
        let (nh, d) = (h.dim(), v.dim());
        // F(φ(k)h) = k·F(h).
        let mut rows: Vec<SparseRow> = Vec::new();
        for kk in 0..k.dim() {
            let pk = self.phi.image(kk);
            let rho = v.op(kk);
            for hh in 0..nh {
                let prod = h.mul(&pk, &h.basis(hh));
                for x in 0..d {
                    let mut acc = Acc::new();
                    for (c, s) in &prod {
                        acc.add(c * d + x, s);
                    }
                    for y in 0..d {
                        acc.add(hh * d + y, &-rho.get(x, y));
                    }
                    let row = acc.into_elem();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let space = equalizer_of_rows(field, nh * d, rows);
        let free = free_coords(&space);
        let dim = space.dim();
        let mut obj = CoIndObj {
            base: v.clone(),
            module: ModuleRep::trivial(h.clone()),
            space,
            free,
        };
        // (a·F)(e_h) = F(e_h a).
        let ops = (0..nh)
            .map(|a| {
                Matrix::from_fn(field, dim, dim, |t, s| {
                    let (hh, x) = obj.coord(t);
                    let mut acc = Scalar::zero(field);
                    for (c, u) in h.mul_basis(hh, a) {
                        acc.add_mul(u, obj.val(s, *c, x));
                    }
                    acc
                })
            })
            .collect();
        obj.module = ModuleRep::from_ops(h.clone(), dim, ops);
        obj
    }

    fn need_dual(&self) -> Result<&DualBasis> {
        self.dual
            .as_ref()
            .ok_or_else(|| Error::NotProjective("no dual basis for H over K".into()))
    }

    /// α⁻¹ on one side: given values F'(h_i) ∈ A⊗X (as `y(i, a, x)`), returns the
    /// coordinates of Σ_i Σ_a e_a ⊗ G_{i,a} with G_{i,a}(h) = f_i(h)·y(i, a, −).
    fn alpha_inv_coords(
        &self,
        x_obj: &CoIndObj,
        da: usize,
        y: &dyn Fn(usize, usize, usize) -> Scalar,
    ) -> Result<Vec<Vec<Scalar>>> {
        let db = self.need_dual()?;
        let field = self.h().field();
        let xm = &x_obj.base;
        let dx = xm.dim();
        // ρ_X(f_i(e_h)) for the h appearing among free coordinates.
        let mut rho_f: HashMap<(usize, usize), Matrix> = HashMap::new();
        let mut out = vec![vec![Scalar::zero(field); x_obj.dim()]; da];
        for a in 0..da {
            for t in 0..x_obj.dim() {
                let (hh, xx) = x_obj.coord(t);
                let mut acc = Scalar::zero(field);
                for i in 0..db.elements.len() {
                    let m = rho_f
                        .entry((i, hh))
                        .or_insert_with(|| xm.act_elem(&db.functionals[i][hh]));
                    for z in 0..dx {
                        let c = m.get(xx, z);
                        if !c.is_zero() {
                            acc.add_mul(c, &y(i, a, z));
                        }
                    }
                }
                out[a][t] = acc;
            }
        }
        Ok(out)
    }

    /// rproj⁻¹ built with `twist` applied to h₂; the correct inverse uses S⁻¹.
    pub fn rproj_inv_twisted(
        &self,
        x: &ModuleRep,
        a: &ModuleRep,
        use_sinv: bool,
    ) -> Result<Matrix> {
        let h = self.h();
        let field = h.field();
        let db = self.need_dual()?.clone();
        let xo = self.coinduce(x);
        let src = self.coinduce(&self.k_cat.tensor(x, &self.restrict(a)));
        let (dx, da) = (x.dim(), a.dim());
        let twist: Vec<Matrix> = (0..h.dim())
            .map(|p| {
                let e = if use_sinv {
                    h.sinv_basis(p)
                } else {
                    h.s_basis(p)
                };
                a.act_elem(e)
            })
            .collect();
        let mut out = Matrix::zeros(field, xo.dim() * da, src.dim());
        for s in 0..src.dim() {
            // F'(h_i) = Σ (1⊗twist(h₂)) F(h₁), as a vector in X⊗A.
            let fp: Vec<Vec<Scalar>> = db
                .elements
                .iter()
                .map(|&b| {
                    let mut v = vec![Scalar::zero(field); dx * da];
                    for (h1, h2, c) in h.comult_basis(b) {
                        let tw = &twist[*h2];
                        for xx in 0..dx {
                            for a1 in 0..da {
                                let f = src.val(s, *h1, xx * da + a1);
                                if f.is_zero() {
                                    continue;
                                }
                                let cf = c * f;
                                for a0 in 0..da {
                                    v[xx * da + a0].add_mul(&cf, tw.get(a0, a1));
                                }
                            }
                        }
                    }
                    v
                })
                .collect();
            let coords = self.alpha_inv_coords(&xo, da, &|i, aa, z| fp[i][z * da + aa].clone())?;
            for (aa, cs) in coords.iter().enumerate() {
                for (t, v) in cs.iter().enumerate() {
                    if !v.is_zero() {
                        out.set(t * da + aa, s, v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Closed-form coaction on CoInd(V) for a YD module V over K:
    /// F ↦ α⁻¹(h ↦ S(h₁) φ(F(h₂)⁽⁻¹⁾) h₃ ⊗ F(h₂)⁽⁰⁾).
    pub fn yd_coaction(&self, v: &YDModule) -> Result<ComoduleRep> {
        let h = self.h();
        let field = h.field();
        let nh = h.dim();
        let db = self.need_dual()?.clone();
        let xo = self.coinduce(&v.module);
        let dv = v.dim();
        let support = v.comodule.support();
        let mut prods: HashMap<(usize, usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
        let dim = xo.dim();
        let mut blocks = vec![Matrix::zeros(field, dim, dim); nh];
        for s in 0..dim {
            let fp: Vec<Vec<Scalar>> = db
                .elements
                .iter()
                .map(|&b| {
                    let mut out = vec![Scalar::zero(field); nh * dv];
                    for (h1, h2, h3, c) in h.comult2_basis(b) {
                        for &kk in &support {
                            let blk = v.comodule.block(kk);
                            for x in 0..dv {
                                let f = xo.val(s, *h2, x);
                                if f.is_zero() {
                                    continue;
                                }
                                let cf = c * f;
                                let prod = prods.entry((*h1, kk, *h3)).or_insert_with(|| {
                                    h.mul3(h.s_basis(*h1), &self.phi.image(kk), &h.basis(*h3))
                                });
                                for z in 0..dv {
                                    let bz = blk.get(z, x);
                                    if bz.is_zero() {
                                        continue;
                                    }
                                    let cfb = &cf * bz;
                                    for (a, e) in prod.iter() {
                                        out[a * dv + z].add_mul(&cfb, e);
                                    }
                                }
                            }
                        }
                    }
                    out
                })
                .collect();
            let coords = self.alpha_inv_coords(&xo, nh, &|i, a, z| fp[i][a * dv + z].clone())?;
            for (a, cs) in coords.iter().enumerate() {
                for (t, x) in cs.iter().enumerate() {
                    if !x.is_zero() {
                        blocks[a].set(t, s, x.clone());
                    }
                }
            }
        }
        Ok(ComoduleRep::from_blocks(h.clone(), dim, blocks))
    }

    /// CoInd on objects, as an H-module.
    pub fn coind_module(&self, v: &ModuleRep) -> ModuleRep {
        self.coinduce(v).module.clone()
    }
}

impl MonoidalAdjunction for CoInduction {
    type C = ModCat;
    type D = ModCat;

    fn name(&self) -> String {
        format!("Res ⊣ CoInd along {} → {}", self.k().name, self.h().name)
    }
    fn c(&self) -> &ModCat {
        &self.h_cat
    }
    fn d(&self) -> &ModCat {
        &self.k_cat
    }
    fn g_obj(&self, a: &ModuleRep) -> ModuleRep {
        self.restrict(a)
    }
    fn r_obj(&self, x: &ModuleRep) -> ModuleRep {
        self.coind_module(x)
    }

    fn r_map(&self, x: &ModuleRep, y: &ModuleRep, f: &Matrix) -> Matrix {
        let xo = self.coinduce(x);
        let yo = self.coinduce(y);
        let field = f.field();
        Matrix::from_fn(field, yo.dim(), xo.dim(), |t, s| {
            let (hh, yy) = yo.coord(t);
            let mut acc = Scalar::zero(field);
            for xx in 0..x.dim() {
                acc.add_mul(f.get(yy, xx), xo.val(s, hh, xx));
            }
            acc
        })
    }

    fn unit(&self, a: &ModuleRep) -> Matrix {
        let o = self.coinduce(&self.restrict(a));
        Matrix::from_fn(a.field(), o.dim(), a.dim(), |t, aa| {
            let (hh, x) = o.coord(t);
            a.op(hh).get(x, aa).clone()
        })
    }

    fn counit(&self, x: &ModuleRep) -> Matrix {
        let o = self.coinduce(x);
        let h = self.h();
        let field = h.field();
        Matrix::from_fn(field, x.dim(), o.dim(), |xx, s| {
            let mut acc = Scalar::zero(field);
            for (u, c) in h.unit_elem() {
                acc.add_mul(c, o.val(s, *u, xx));
            }
            acc
        })
    }

    fn lax(&self, x: &ModuleRep, y: &ModuleRep) -> Matrix {
        let h = self.h();
        let field = h.field();
        let xo = self.coinduce(x);
        let yo = self.coinduce(y);
        let xy = self.coinduce(&self.k_cat.tensor(x, y));
        let dy = y.dim();
        let (sx, sy) = (xo.dim(), yo.dim());
        let mut out = Matrix::zeros(field, xy.dim(), sx * sy);
        for t in 0..xy.dim() {
            let (hh, w) = xy.coord(t);
            let (xx, yy) = (w / dy, w % dy);
            for (h1, h2, c) in h.comult_basis(hh) {
                for s1 in 0..sx {
                    let f = xo.val(s1, *h1, xx);
                    if f.is_zero() {
                        continue;
                    }
                    let cf = c * f;
                    for s2 in 0..sy {
                        let g = yo.val(s2, *h2, yy);
                        if !g.is_zero() {
                            out.add_at(t, s1 * sy + s2, &(&cf * g));
                        }
                    }
                }
            }
        }
        out
    }

    fn lax0(&self) -> Matrix {
        let h = self.h();
        let o = self.coinduce(&self.k_cat.unit_obj());
        Matrix::from_fn(h.field(), o.dim(), 1, |t, _| {
            h.counit_basis(o.coord(t).0).clone()
        })
    }

    /// a⊗F ↦ (h ↦ h₁a ⊗ F(h₂)).
    fn lproj(&self, a: &ModuleRep, x: &ModuleRep) -> Matrix {
        let h = self.h();
        let field = h.field();
        let xo = self.coinduce(x);
        let tgt = self.coinduce(&self.k_cat.tensor(&self.restrict(a), x));
        let (da, dx, sx) = (a.dim(), x.dim(), xo.dim());
        let mut out = Matrix::zeros(field, tgt.dim(), da * sx);
        for t in 0..tgt.dim() {
            let (hh, w) = tgt.coord(t);
            let (a1, xx) = (w / dx, w % dx);
            for (h1, h2, c) in h.comult_basis(hh) {
                let op = a.op(*h1);
                for a0 in 0..da {
                    let r = op.get(a1, a0);
                    if r.is_zero() {
                        continue;
                    }
                    let cr = c * r;
                    for s in 0..sx {
                        let f = xo.val(s, *h2, xx);
                        if !f.is_zero() {
                            out.add_at(t, a0 * sx + s, &(&cr * f));
                        }
                    }
                }
            }
        }
        out
    }

    /// F⊗a ↦ (h ↦ F(h₁) ⊗ h₂a).
    fn rproj(&self, x: &ModuleRep, a: &ModuleRep) -> Matrix {
        let h = self.h();
        let field = h.field();
        let xo = self.coinduce(x);
        let tgt = self.coinduce(&self.k_cat.tensor(x, &self.restrict(a)));
        let (da, sx) = (a.dim(), xo.dim());
        let mut out = Matrix::zeros(field, tgt.dim(), sx * da);
        for t in 0..tgt.dim() {
            let (hh, w) = tgt.coord(t);
            let (xx, a1) = (w / da, w % da);
            for (h1, h2, c) in h.comult_basis(hh) {
                let op = a.op(*h2);
                for s in 0..sx {
                    let f = xo.val(s, *h1, xx);
                    if f.is_zero() {
                        continue;
                    }
                    let cf = c * f;
                    for a0 in 0..da {
                        let r = op.get(a1, a0);
                        if !r.is_zero() {
                            out.add_at(t, s * da + a0, &(&cf * r));
                        }
                    }
                }
            }
        }
        out
    }

    /// F ↦ α⁻¹(h ↦ (S(h₁)⊗1)F(h₂)).
    fn lproj_inv(&self, a: &ModuleRep, x: &ModuleRep) -> Result<Matrix> {
        let h = self.h();
        let field = h.field();
        let db = self.need_dual()?.clone();
        let xo = self.coinduce(x);
        let src = self.coinduce(&self.k_cat.tensor(&self.restrict(a), x));
        let (da, dx) = (a.dim(), x.dim());
        let s_ops: Vec<Matrix> = (0..h.dim()).map(|p| a.act_elem(h.s_basis(p))).collect();
        let mut out = Matrix::zeros(field, da * xo.dim(), src.dim());
        for s in 0..src.dim() {
            let fp: Vec<Vec<Scalar>> = db
                .elements
                .iter()
                .map(|&b| {
                    let mut v = vec![Scalar::zero(field); da * dx];
                    for (h1, h2, c) in h.comult_basis(b) {
                        let sop = &s_ops[*h1];
                        for a1 in 0..da {
                            for xx in 0..dx {
                                let f = src.val(s, *h2, a1 * dx + xx);
                                if f.is_zero() {
                                    continue;
                                }
                                let cf = c * f;
                                for a0 in 0..da {
                                    v[a0 * dx + xx].add_mul(&cf, sop.get(a0, a1));
                                }
                            }
                        }
                    }
                    v
                })
                .collect();
            let coords = self.alpha_inv_coords(&xo, da, &|i, aa, z| fp[i][aa * dx + z].clone())?;
            let sx = xo.dim();
            for (aa, cs) in coords.iter().enumerate() {
                for (t, v) in cs.iter().enumerate() {
                    if !v.is_zero() {
                        out.set(aa * sx + t, s, v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// F ↦ α⁻¹(h ↦ (1⊗S⁻¹(h₂))F(h₁)).
    fn rproj_inv(&self, x: &ModuleRep, a: &ModuleRep) -> Result<Matrix> {
        self.rproj_inv_twisted(x, a, true)
    }
}
