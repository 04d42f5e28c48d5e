//! Half-braidings, the induced half-braidings of lax and oplax functors,
//! and the closed-form induced Yetter–Drinfeld structures they are checked
//! against.
//!
//! A half-braiding of V is evaluated lazily: `at(A)` returns c_A: V⊗A → A⊗V
//! for any object A. Checks run on finite test families.
//!
//! On Mod_H a YD module V has c_A(v⊗a) = v⁽⁻¹⁾a ⊗ v⁽⁰⁾. On Comod_H it has
//! c_X(v⊗x) = x⁽⁰⁾ ⊗ S⁻¹(x⁽⁻¹⁾)v, the inverse of the YD braiding Ψ_{X,V},
//! and the action is recovered as (id⊗ε)∘c_H⁻¹.

use std::fmt;
use std::sync::Arc;

use crate::adjoint::{
    CObj, CoInduction, Cotensor, DObj, Induction, ModCat, MonoidalAdjunction,
    StrictMonoidal,
};
use crate::exactmath::{inverse, is_invertible, Matrix};
use crate::rep::{
    tensor_modules, verify_yd, yd_braiding, ComoduleRep, ModuleRep, YDModule,
};
use crate::report::Report;
use crate::{Error, Result};

pub type BraidFn<O> = Arc<dyn Fn(&O) -> Result<Matrix> + Send + Sync>;

/// A carrier V with c_A: V⊗A → A⊗V for every object A.
#[derive(Clone)]
pub struct HalfBraiding<O> {
    pub name: String,
    pub carrier: O,
    eval: BraidFn<O>,
}

impl<O: fmt::Debug> fmt::Debug for HalfBraiding<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HalfBraiding")
            .field("name", &self.name)
            .field("carrier", &self.carrier)
            .finish_non_exhaustive()
    }
}

impl<O> HalfBraiding<O> {
    pub fn new(
        name: impl Into<String>,
        carrier: O,
        eval: impl Fn(&O) -> Result<Matrix> + Send + Sync + 'static,
    ) -> Self {
        HalfBraiding {
            name: name.into(),
            carrier,
            eval: Arc::new(eval),
        }
    }

    pub fn at(&self, a: &O) -> Result<Matrix> {
        (self.eval)(a)
    }

    /// Components on a labelled family.
    pub fn family(&self, objs: &[(String, O)]) -> Result<Vec<(String, Matrix)>> {
        objs.iter()
            .map(|(l, a)| Ok((l.clone(), self.at(a)?)))
            .collect()
    }
}

/// c_A(v⊗a) = v⁽⁻¹⁾a ⊗ v⁽⁰⁾ on Mod_H.
pub fn halfbraiding_from_yd(v: &YDModule) -> HalfBraiding<ModuleRep> {
    let yd = v.clone();
    HalfBraiding::new("yd", v.module.clone(), move |a: &ModuleRep| {
        Ok(yd_braiding(&yd, a))
    })
}

/// Reads the coaction off c_H(v⊗1) for H the regular module.
pub fn yd_from_halfbraiding(c: &HalfBraiding<ModuleRep>) -> Result<YDModule> {
    let h = c.carrier.hopf.clone();
    let (nh, d) = (h.dim(), c.carrier.dim());
    let ch = c.at(&ModuleRep::regular(h.clone()))?;
    let field = h.field();
    let mut blocks = vec![Matrix::zeros(field, d, d); nh];
    for (p, block) in blocks.iter_mut().enumerate() {
        for w in 0..d {
            for v in 0..d {
                let mut acc = crate::exactmath::Scalar::zero(field);
                for (u, s) in h.unit_elem() {
                    acc.add_mul(s, ch.get(p * d + w, v * nh + u));
                }
                if !acc.is_zero() {
                    block.set(w, v, acc);
                }
            }
        }
    }
    YDModule::new(
        c.carrier.clone(),
        ComoduleRep::from_blocks(h, d, blocks),
    )
}

/// c_X(v⊗x) = x⁽⁰⁾ ⊗ S⁻¹(x⁽⁻¹⁾)v on Comod_H.
pub fn comodule_halfbraiding_from_yd(v: &YDModule) -> HalfBraiding<ComoduleRep> {
    let yd = v.clone();
    HalfBraiding::new("yd", v.comodule.clone(), move |x: &ComoduleRep| {
        let h = yd.hopf();
        let field = h.field();
        let (dv, dx) = (yd.dim(), x.dim());
        let mut m = Matrix::zeros(field, dx * dv, dv * dx);
        for p in x.support() {
            let s = yd.module.act_elem(h.sinv_basis(p));
            let blk = x.block(p);
            for (x0, xx, b) in blk.nonzeros() {
                for (v0, vv, t) in s.nonzeros() {
                    m.add_at(x0 * dv + v0, vv * dx + xx, &(b * t));
                }
            }
        }
        Ok(m)
    })
}

/// The action (id⊗ε)∘c_H⁻¹ with H the regular comodule.
pub fn yd_from_comodule_halfbraiding(c: &HalfBraiding<ComoduleRep>) -> Result<YDModule> {
    let h = c.carrier.hopf.clone();
    let (nh, d) = (h.dim(), c.carrier.dim());
    let inv = inverse(&c.at(&ComoduleRep::regular(h.clone()))?)?;
    let field = h.field();
    let ops = (0..nh)
        .map(|p| {
            Matrix::from_fn(field, d, d, |w, v| {
                let mut acc = crate::exactmath::Scalar::zero(field);
                for q in 0..nh {
                    acc.add_mul(h.counit_basis(q), inv.get(w * nh + q, p * d + v));
                }
                acc
            })
        })
        .collect();
    YDModule::new(
        ModuleRep::from_ops(h, d, ops),
        c.carrier.clone(),
    )
}

/// c^{X⊗Y}_A = (c^X_A⊗Y)(X⊗c^Y_A).
pub fn tensor_halfbraiding<Cat>(
    cat: &Cat,
    x: &HalfBraiding<Cat::Obj>,
    y: &HalfBraiding<Cat::Obj>,
) -> HalfBraiding<Cat::Obj>
where
    Cat: StrictMonoidal + Clone + Send + Sync + 'static,
    Cat::Obj: Send + Sync + 'static,
{
    let (cat2, x2, y2) = (cat.clone(), x.clone(), y.clone());
    HalfBraiding::new(
        format!("{}⊗{}", x.name, y.name),
        cat.tensor(&x.carrier, &y.carrier),
        move |a| {
            let inner = cat2.id(&x2.carrier).kron(&y2.at(a)?);
            let outer = x2.at(a)?.kron(&cat2.id(&y2.carrier));
            Ok(&outer * &inner)
        },
    )
}

/// The induced half-braiding of R(V): c^R_A = lproj⁻¹_{A,V} ∘ R(c_{GA}) ∘ rproj_{V,A}.
pub fn zr_halfbraiding<A>(adj: &Arc<A>, x: &HalfBraiding<DObj<A>>) -> HalfBraiding<CObj<A>>
where
    A: MonoidalAdjunction + Send + Sync + 'static,
    DObj<A>: Send + Sync + 'static,
{
    let adj2 = adj.clone();
    let x2 = x.clone();
    HalfBraiding::new(
        format!("R({})", x.name),
        adj.r_obj(&x.carrier),
        move |a: &CObj<A>| {
            let d = adj2.d();
            let v = &x2.carrier;
            let ga = adj2.g_obj(a);
            let c = x2.at(&ga)?;
            let rc = adj2.r_map(&d.tensor(v, &ga), &d.tensor(&ga, v), &c);
            Ok(&(&adj2.lproj_inv(a, v)? * &rc) * &adj2.rproj(v, a))
        },
    )
}

/// The induced half-braiding of Ind(V): c^L_A = iprojl_{A,V} ∘ Ind(c_{Res A}) ∘ iprojr⁻¹_{V,A}.
pub fn zl_halfbraiding(ind: &Arc<Induction>, x: &HalfBraiding<ModuleRep>) -> HalfBraiding<ModuleRep> {
    let ind2 = ind.clone();
    let x2 = x.clone();
    HalfBraiding::new(
        format!("Ind({})", x.name),
        ind.ind_module(&x.carrier),
        move |a: &ModuleRep| {
            let v = &x2.carrier;
            let ra = ind2.restrict(a);
            let c = x2.at(&ra)?;
            let lc = ind2.ind_map(&tensor_modules(v, &ra), &tensor_modules(&ra, v), &c);
            Ok(&(&ind2.iprojl(a, v) * &lc) * &ind2.iprojr_inv(v, a))
        },
    )
}

/// Ind(V) with δ[h⊗v] = h₁v⁽⁻¹⁾S(h₃) ⊗ [h₂⊗v⁽⁰⁾].
pub fn induced_yd_ind(ind: &Induction, v: &YDModule) -> YDModule {
    YDModule {
        module: ind.ind_module(&v.module),
        comodule: ind.yd_coaction(v),
    }
}

/// CoInd(V) with δ(F) = α⁻¹(h ↦ S(h₁)F(h₂)⁽⁻¹⁾h₃ ⊗ F(h₂)⁽⁰⁾).
pub fn induced_yd_coind(co: &CoInduction, v: &YDModule) -> Result<YDModule> {
    Ok(YDModule {
        module: co.coind_module(&v.module),
        comodule: co.yd_coaction(v)?,
    })
}

/// K□_H V with k·(l⊗v) = k₁lS(k₃) ⊗ k₂v and the cotensor coaction.
pub fn induced_yd_cotensor(ct: &Cotensor, v: &YDModule) -> Result<YDModule> {
    Ok(YDModule {
        module: ct.yd_action(v)?,
        comodule: ct.cotensor_comodule(&v.comodule),
    })
}

/// Largest dimension of test objects used in naturality samples.
const NATURALITY_DIM: usize = 4;

/// Tensor compatibility, unit compatibility, invertibility and naturality
/// (against up to two hom-space basis elements per ordered pair).
pub fn verify_halfbraiding<Cat: StrictMonoidal>(
    cat: &Cat,
    c: &HalfBraiding<Cat::Obj>,
    test: &[(String, Cat::Obj)],
) -> Report {
    let mut r = Report::new(format!("half-braiding {}", c.name));
    let v = &c.carrier;
    let idv = cat.id(v);
    for (al, a) in test {
        for (bl, b) in test {
            if cat.dim(a) * cat.dim(b) * cat.dim(v) > 64 {
                continue;
            }
            r.timed("ztensorcomp", || format!("A={al}, B={bl}"), || {
                let ab = cat.tensor(a, b);
                match (c.at(&ab), c.at(a), c.at(b)) {
                    (Ok(cab), Ok(ca), Ok(cb)) => {
                        cab == &cat.id(a).kron(&cb) * &ca.kron(&cat.id(b))
                    }
                    _ => false,
                }
            });
        }
    }
    r.timed("zunitcomp", || "A=𝟙".into(), || {
        c.at(&cat.unit_obj()).map(|m| m == idv).unwrap_or(false)
    });
    for (al, a) in test {
        r.timed("halfbraiding_invertible", || format!("A={al}"), || {
            c.at(a).map(|m| is_invertible(&m)).unwrap_or(false)
        });
    }
    for (al, a) in test.iter().filter(|(_, o)| cat.dim(o) <= NATURALITY_DIM) {
        for (bl, b) in test.iter().filter(|(_, o)| cat.dim(o) <= NATURALITY_DIM) {
            for f in cat.hom_space(a, b).iter().take(2) {
                r.timed("halfbraiding_natural", || format!("f: {al} → {bl}"), || {
                    match (c.at(a), c.at(b)) {
                        (Ok(ca), Ok(cb)) => &cb * &idv.kron(f) == &f.kron(&idv) * &ca,
                        _ => false,
                    }
                });
            }
        }
    }
    r
}

/// Replacement for the braiding Ψ_{R X, R Y} in the braided-lax square,
/// given the induced half-braiding of R X and the object R Y.
pub type BraidingOverride<O> = Arc<dyn Fn(&HalfBraiding<O>, &O) -> Result<Matrix> + Send + Sync>;

/// The transposed matrix of the induced braiding: a deliberately wrong Ψ.
pub fn transposed_braiding<O: 'static>() -> BraidingOverride<O> {
    Arc::new(|c: &HalfBraiding<O>, y: &O| Ok(c.at(y)?.transpose()))
}

/// Data for the center catalog of a lax right adjoint R.
pub struct CenterCandidate<A: MonoidalAdjunction> {
    pub adj: Arc<A>,
    /// Objects of Z(D).
    pub objects: Vec<HalfBraiding<DObj<A>>>,
    pub c_test: Vec<(String, CObj<A>)>,
    pub d_test: Vec<(String, DObj<A>)>,
    pub braiding: Option<BraidingOverride<CObj<A>>>,
}

/// Half-braiding axioms on the input and induced objects, centrality of
/// lax and lax⁰, and the braided-lax square
/// lax_{Y,X} ∘ Ψ_{RX,RY} = R(c^X_Y) ∘ lax_{X,Y}.
pub fn verify_center_catalog<A>(cand: &CenterCandidate<A>) -> Report
where
    A: MonoidalAdjunction + Send + Sync + 'static,
    A::C: Clone + Send + Sync + 'static,
    A::D: Clone + Send + Sync + 'static,
    CObj<A>: Send + Sync + 'static,
    DObj<A>: Send + Sync + 'static,
{
    let adj = &cand.adj;
    let c = adj.c();
    let d = adj.d();
    let mut r = Report::new(format!("center catalog: {}", adj.name()));
    for id in [
        "ztensorcomp",
        "zunitcomp",
        "halfbraiding_invertible",
        "halfbraiding_natural",
        "lax_central",
        "braided_lax",
    ] {
        r.declare(id);
    }
    let induced: Vec<HalfBraiding<CObj<A>>> = cand
        .objects
        .iter()
        .map(|x| zr_halfbraiding(adj, x))
        .collect();
    for x in &cand.objects {
        r.merge(verify_halfbraiding(d, x, &cand.d_test));
    }
    for x in &induced {
        r.merge(verify_halfbraiding(c, x, &cand.c_test));
    }
    let r1 = zr_halfbraiding(adj, &HalfBraiding::new("𝟙", d.unit_obj(), {
        let d2 = d.clone();
        move |a| Ok(d2.id(a))
    }));
    for (al, a) in &cand.c_test {
        r.timed("lax_central", || format!("lax0, A={al}"), || {
            let lax0 = adj.lax0();
            match r1.at(a) {
                Ok(m) => &m * &lax0.kron(&c.id(a)) == c.id(a).kron(&lax0),
                Err(_) => false,
            }
        });
    }
    for (i, x) in cand.objects.iter().enumerate() {
        for (j, y) in cand.objects.iter().enumerate() {
            let xy = tensor_halfbraiding(d, x, y);
            let rxy = zr_halfbraiding(adj, &xy);
            let rx_ry = tensor_halfbraiding(c, &induced[i], &induced[j]);
            let lax = adj.lax(&x.carrier, &y.carrier);
            for (al, a) in &cand.c_test {
                if c.dim(&rx_ry.carrier) * c.dim(a) > 64 {
                    continue;
                }
                r.timed(
                    "lax_central",
                    || format!("X={}, Y={}, A={al}", x.name, y.name),
                    || match (rxy.at(a), rx_ry.at(a)) {
                        (Ok(big), Ok(small)) => {
                            &big * &lax.kron(&c.id(a)) == &c.id(a).kron(&lax) * &small
                        }
                        _ => false,
                    },
                );
            }
            r.timed(
                "braided_lax",
                || format!("X={}, Y={}", x.name, y.name),
                || {
                    let ry = &induced[j].carrier;
                    let psi = match &cand.braiding {
                        Some(f) => f(&induced[i], ry),
                        None => induced[i].at(ry),
                    };
                    let cxy = x.at(&y.carrier);
                    match (psi, cxy) {
                        (Ok(psi), Ok(cxy)) => {
                            let lhs = &adj.lax(&y.carrier, &x.carrier) * &psi;
                            let rhs = &adj.r_map(
                                &d.tensor(&x.carrier, &y.carrier),
                                &d.tensor(&y.carrier, &x.carrier),
                                &cxy,
                            ) * &lax;
                            lhs == rhs
                        }
                        _ => false,
                    }
                },
            );
        }
    }
    r
}

/// The center catalog for Ind with its oplax structure: half-braiding axioms,
/// centrality of oplax and oplax⁰, and the braided-oplax square
/// oplax_{Y,X} ∘ Ind(c^X_Y) = Ψ_{Ind X, Ind Y} ∘ oplax_{X,Y}.
pub fn verify_center_oplax(
    ind: &Arc<Induction>,
    objects: &[HalfBraiding<ModuleRep>],
    c_test: &[(String, ModuleRep)],
    d_test: &[(String, ModuleRep)],
) -> Report {
    let hc = ModCat {
        hopf: ind.h().clone(),
    };
    let kc = ModCat {
        hopf: ind.k().clone(),
    };
    let mut r = Report::new(format!(
        "center catalog: Ind along {} → {}",
        ind.k().name,
        ind.h().name
    ));
    for id in [
        "ztensorcomp",
        "zunitcomp",
        "halfbraiding_invertible",
        "halfbraiding_natural",
        "oplax_central",
        "braided_oplax",
    ] {
        r.declare(id);
    }
    let induced: Vec<_> = objects.iter().map(|x| zl_halfbraiding(ind, x)).collect();
    for x in objects {
        r.merge(verify_halfbraiding(&kc, x, d_test));
    }
    for x in &induced {
        r.merge(verify_halfbraiding(&hc, x, c_test));
    }
    let l1 = zl_halfbraiding(ind, &HalfBraiding::new("𝟙", kc.unit_obj(), {
        let kc2 = kc.clone();
        move |a| Ok(kc2.id(a))
    }));
    for (al, a) in c_test {
        r.timed("oplax_central", || format!("oplax0, A={al}"), || {
            let o0 = ind.oplax0();
            match l1.at(a) {
                Ok(m) => &hc.id(a).kron(&o0) * &m == o0.kron(&hc.id(a)),
                Err(_) => false,
            }
        });
    }
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            let lxy = zl_halfbraiding(ind, &tensor_halfbraiding(&kc, x, y));
            let lx_ly = tensor_halfbraiding(&hc, &induced[i], &induced[j]);
            let oplax = ind.oplax(&x.carrier, &y.carrier);
            for (al, a) in c_test {
                if hc.dim(&lx_ly.carrier) * hc.dim(a) > 64 {
                    continue;
                }
                r.timed(
                    "oplax_central",
                    || format!("X={}, Y={}, A={al}", x.name, y.name),
                    || match (lxy.at(a), lx_ly.at(a)) {
                        (Ok(big), Ok(small)) => {
                            &small * &oplax.kron(&hc.id(a)) == &hc.id(a).kron(&oplax) * &big
                        }
                        _ => false,
                    },
                );
            }
            r.timed(
                "braided_oplax",
                || format!("X={}, Y={}", x.name, y.name),
                || match (induced[i].at(&induced[j].carrier), x.at(&y.carrier)) {
                    (Ok(psi), Ok(cxy)) => {
                        let xy = tensor_modules(&x.carrier, &y.carrier);
                        let yx = tensor_modules(&y.carrier, &x.carrier);
                        &ind.oplax(&y.carrier, &x.carrier) * &ind.ind_map(&xy, &yx, &cxy)
                            == &psi * &oplax
                    }
                    _ => false,
                },
            );
        }
    }
    r
}

fn same_yd(a: &YDModule, b: &YDModule) -> bool {
    a.module.action() == b.module.action() && a.comodule.coaction() == b.comodule.coaction()
}

/// Theorem-level composite against the closed form for CoInd: the extracted
/// YD module and every test component agree, and the result is YD.
pub fn crosscheck_coind(
    co: &Arc<CoInduction>,
    v: &YDModule,
    label: &str,
    c_test: &[(String, ModuleRep)],
) -> Report {
    let mut r = Report::new(format!("zr vs closed form, CoInd({label})"));
    let zr = zr_halfbraiding(co, &halfbraiding_from_yd(v));
    let closed = induced_yd_coind(co, v);
    let extracted = yd_from_halfbraiding(&zr);
    compare_module_side(&mut r, label, &zr, closed, extracted, c_test);
    r
}

/// The oplax composite against the closed form for Ind.
pub fn crosscheck_ind(
    ind: &Arc<Induction>,
    v: &YDModule,
    label: &str,
    c_test: &[(String, ModuleRep)],
) -> Report {
    let mut r = Report::new(format!("zl vs closed form, Ind({label})"));
    let zl = zl_halfbraiding(ind, &halfbraiding_from_yd(v));
    let closed = Ok(induced_yd_ind(ind, v));
    let extracted = yd_from_halfbraiding(&zl);
    compare_module_side(&mut r, label, &zl, closed, extracted, c_test);
    r
}

fn compare_module_side(
    r: &mut Report,
    label: &str,
    induced: &HalfBraiding<ModuleRep>,
    closed: Result<YDModule>,
    extracted: Result<YDModule>,
    c_test: &[(String, ModuleRep)],
) {
    let (closed, extracted) = match (closed, extracted) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            let e = a.err().or(b.err()).unwrap_or(Error::Invalid("?".into()));
            r.record("induced_matches_closed_form", false, || format!("{label}: {e}"));
            return;
        }
    };
    r.record("induced_matches_closed_form", same_yd(&closed, &extracted), || {
        label.to_string()
    });
    for (al, a) in c_test {
        r.timed("induced_components_match", || format!("{label}, A={al}"), || {
            induced
                .at(a)
                .map(|m| m == yd_braiding(&closed, a))
                .unwrap_or(false)
        });
    }
    r.record("induced_is_yd", verify_yd(&closed).all_passed(), || label.to_string());
}

/// The comodule-side composite for the cotensor functor against its closed form.
pub fn crosscheck_cotensor(
    ct: &Arc<Cotensor>,
    v: &YDModule,
    label: &str,
    c_test: &[(String, ComoduleRep)],
) -> Report {
    let mut r = Report::new(format!("zr vs closed form, K□({label})"));
    let zr = zr_halfbraiding(ct, &comodule_halfbraiding_from_yd(v));
    let closed = match induced_yd_cotensor(ct, v) {
        Ok(c) => c,
        Err(e) => {
            r.record("induced_matches_closed_form", false, || format!("{label}: {e}"));
            return r;
        }
    };
    let ok = yd_from_comodule_halfbraiding(&zr)
        .map(|y| same_yd(&y, &closed))
        .unwrap_or(false);
    r.record("induced_matches_closed_form", ok, || label.to_string());
    let closed_c = comodule_halfbraiding_from_yd(&closed);
    for (al, a) in c_test {
        r.timed("induced_components_match", || format!("{label}, A={al}"), || {
            match (zr.at(a), closed_c.at(a)) {
                (Ok(x), Ok(y)) => x == y,
                _ => false,
            }
        });
    }
    r.record("induced_is_yd", verify_yd(&closed).all_passed(), || label.to_string());
    r
}
