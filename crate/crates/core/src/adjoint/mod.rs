//! Monoidal adjunctions along a Hopf morphism φ: K → H.
//!
//! An adjunction G ⊣ R has G: C → D strong monoidal with identity structure
//! maps and R: D → C lax. Three instances are provided:
//!
//! * [`CoInduction`]: Res ⊣ CoInd with C = Mod_H, D = Mod_K;
//! * [`OpInduction`]: Ind ⊣ Res seen in the opposite categories, so that Res
//!   becomes the strong left adjoint and Ind the lax right adjoint;
//! * [`Cotensor`]: corestriction ⊣ K□_H − with C = Comod_K, D = Comod_H.
//!
//! Morphisms are matrices. In an opposite category a morphism A → B is
//! stored as the transpose of the underlying map B → A, so composition and
//! tensor products of morphisms are ordinary matrix products and Kronecker
//! products in every case.

mod catalog;
mod coind;
mod cotensor;
mod families;
mod ind;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::exactmath::{FieldSpec, Matrix, Scalar, SubSpace};
use crate::hopf::HopfAlgebra;
use crate::rep::{
    comodule_hom_space, is_comodule_map, is_module_map, module_hom_space, tensor_comodules,
    tensor_modules, ComoduleRep, ModuleRep,
};
use crate::Result;

pub use catalog::{
    verify_adjunction_axioms, verify_catalog, verify_extras, verify_naturality, Tuples, CATALOG_IDS,
};
pub use coind::{dual_basis, verify_dual_basis, CoIndObj, CoInduction, DualBasis};
pub use cotensor::{corestrict, Cotensor, CotensorObj};
pub use families::{
    comodule_families, cotensor_fixtures, module_families, taft_families, Families, DEFAULT_BUDGET,
    DEFAULT_SEED,
};
pub use ind::{IndObj, Induction, OpInduction};

/// A strict monoidal category whose morphisms are matrices.
pub trait StrictMonoidal {
    type Obj: Clone + fmt::Debug;
    fn field(&self) -> FieldSpec;
    fn dim(&self, a: &Self::Obj) -> usize;
    fn unit_obj(&self) -> Self::Obj;
    fn tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn is_morphism(&self, a: &Self::Obj, b: &Self::Obj, f: &Matrix) -> bool;
    /// A basis of Hom(a, b).
    fn hom_space(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Matrix>;

    fn id(&self, a: &Self::Obj) -> Matrix {
        Matrix::identity(self.field(), self.dim(a))
    }
}

/// Left H-modules.
#[derive(Clone, Debug)]
pub struct ModCat {
    pub hopf: Arc<HopfAlgebra>,
}

impl StrictMonoidal for ModCat {
    type Obj = ModuleRep;
    fn field(&self) -> FieldSpec {
        self.hopf.field()
    }
    fn dim(&self, a: &ModuleRep) -> usize {
        a.dim()
    }
    fn unit_obj(&self) -> ModuleRep {
        ModuleRep::trivial(self.hopf.clone())
    }
    fn tensor(&self, a: &ModuleRep, b: &ModuleRep) -> ModuleRep {
        tensor_modules(a, b)
    }
    fn is_morphism(&self, a: &ModuleRep, b: &ModuleRep, f: &Matrix) -> bool {
        is_module_map(a, b, f)
    }
    fn hom_space(&self, a: &ModuleRep, b: &ModuleRep) -> Vec<Matrix> {
        module_hom_space(a, b)
    }
}

/// The opposite of left H-modules, with morphisms stored transposed.
#[derive(Clone, Debug)]
pub struct OpModCat {
    pub hopf: Arc<HopfAlgebra>,
}

impl StrictMonoidal for OpModCat {
    type Obj = ModuleRep;
    fn field(&self) -> FieldSpec {
        self.hopf.field()
    }
    fn dim(&self, a: &ModuleRep) -> usize {
        a.dim()
    }
    fn unit_obj(&self) -> ModuleRep {
        ModuleRep::trivial(self.hopf.clone())
    }
    fn tensor(&self, a: &ModuleRep, b: &ModuleRep) -> ModuleRep {
        tensor_modules(a, b)
    }
    fn is_morphism(&self, a: &ModuleRep, b: &ModuleRep, f: &Matrix) -> bool {
        is_module_map(b, a, &f.transpose())
    }
    fn hom_space(&self, a: &ModuleRep, b: &ModuleRep) -> Vec<Matrix> {
        module_hom_space(b, a)
            .iter()
            .map(|m| m.transpose())
            .collect()
    }
}

/// Left H-comodules.
#[derive(Clone, Debug)]
pub struct ComodCat {
    pub hopf: Arc<HopfAlgebra>,
}

impl StrictMonoidal for ComodCat {
    type Obj = ComoduleRep;
    fn field(&self) -> FieldSpec {
        self.hopf.field()
    }
    fn dim(&self, a: &ComoduleRep) -> usize {
        a.dim()
    }
    fn unit_obj(&self) -> ComoduleRep {
        ComoduleRep::trivial(self.hopf.clone())
    }
    fn tensor(&self, a: &ComoduleRep, b: &ComoduleRep) -> ComoduleRep {
        tensor_comodules(a, b)
    }
    fn is_morphism(&self, a: &ComoduleRep, b: &ComoduleRep, f: &Matrix) -> bool {
        is_comodule_map(a, b, f)
    }
    fn hom_space(&self, a: &ComoduleRep, b: &ComoduleRep) -> Vec<Matrix> {
        comodule_hom_space(a, b)
    }
}

pub type CObj<A> = <<A as MonoidalAdjunction>::C as StrictMonoidal>::Obj;
pub type DObj<A> = <<A as MonoidalAdjunction>::D as StrictMonoidal>::Obj;

/// G ⊣ R with G strong monoidal (structure maps identities) and R lax.
pub trait MonoidalAdjunction {
    type C: StrictMonoidal;
    type D: StrictMonoidal;

    fn name(&self) -> String;
    fn c(&self) -> &Self::C;
    fn d(&self) -> &Self::D;

    fn g_obj(&self, a: &CObj<Self>) -> DObj<Self>;
    /// G on morphisms; every instance here acts as the identity on matrices.
    fn g_map(&self, f: &Matrix) -> Matrix {
        f.clone()
    }
    fn r_obj(&self, x: &DObj<Self>) -> CObj<Self>;
    /// R(f) for f: x → y.
    fn r_map(&self, x: &DObj<Self>, y: &DObj<Self>, f: &Matrix) -> Matrix;

    /// unit_A: A → RGA.
    fn unit(&self, a: &CObj<Self>) -> Matrix;
    /// counit_X: GRX → X.
    fn counit(&self, x: &DObj<Self>) -> Matrix;
    /// lax_{X,Y}: RX⊗RY → R(X⊗Y).
    fn lax(&self, x: &DObj<Self>, y: &DObj<Self>) -> Matrix;
    /// lax_0: 𝟙 → R𝟙.
    fn lax0(&self) -> Matrix;

    /// lproj_{A,X} = lax_{GA,X}∘(unit_A⊗RX): A⊗RX → R(GA⊗X).
    fn lproj(&self, a: &CObj<Self>, x: &DObj<Self>) -> Matrix {
        generic_lproj(self, a, x)
    }
    /// rproj_{X,A} = lax_{X,GA}∘(RX⊗unit_A): RX⊗A → R(X⊗GA).
    fn rproj(&self, x: &DObj<Self>, a: &CObj<Self>) -> Matrix {
        generic_rproj(self, x, a)
    }
    fn lproj_inv(&self, a: &CObj<Self>, x: &DObj<Self>) -> Result<Matrix>;
    fn rproj_inv(&self, x: &DObj<Self>, a: &CObj<Self>) -> Result<Matrix>;

    /// R(counit_X⊗counit_Y)∘unit_{RX⊗RY}, the lax structure obtained from the
    /// strong structure of G.
    fn mate_lax(&self, x: &DObj<Self>, y: &DObj<Self>) -> Matrix {
        let c = self.c();
        let d = self.d();
        let rx = self.r_obj(x);
        let ry = self.r_obj(y);
        let rxry = c.tensor(&rx, &ry);
        let src = self.g_obj(&rxry);
        let tgt = d.tensor(x, y);
        let cc = self.counit(x).kron(&self.counit(y));
        &self.r_map(&src, &tgt, &cc) * &self.unit(&rxry)
    }
}

pub fn generic_lproj<A: MonoidalAdjunction + ?Sized>(adj: &A, a: &CObj<A>, x: &DObj<A>) -> Matrix {
    let c = adj.c();
    let rx = adj.r_obj(x);
    let ga = adj.g_obj(a);
    &adj.lax(&ga, x) * &adj.unit(a).kron(&c.id(&rx))
}

pub fn generic_rproj<A: MonoidalAdjunction + ?Sized>(adj: &A, x: &DObj<A>, a: &CObj<A>) -> Matrix {
    let c = adj.c();
    let rx = adj.r_obj(x);
    let ga = adj.g_obj(a);
    &adj.lax(x, &ga) * &c.id(&rx).kron(&adj.unit(a))
}

/// A transformation evaluated on a finite family of objects.
#[derive(Clone, Debug)]
pub struct NaturalMap {
    pub name: String,
    pub components: Vec<(String, Matrix)>,
}

impl NaturalMap {
    pub fn new(name: impl Into<String>) -> Self {
        NaturalMap {
            name: name.into(),
            components: Vec::new(),
        }
    }
    pub fn push(&mut self, label: impl Into<String>, m: Matrix) {
        self.components.push((label.into(), m));
    }
    pub fn get(&self, label: &str) -> Option<&Matrix> {
        self.components.iter().find(|c| c.0 == label).map(|c| &c.1)
    }
}

/// Restriction along φ: K → H, W ↦ W with K acting through φ.
pub fn restrict(phi: &crate::hopf::HopfMorphism, w: &ModuleRep) -> ModuleRep {
    let ops = (0..phi.source.dim())
        .map(|k| w.act_elem(&phi.image(k)))
        .collect();
    ModuleRep::from_ops(phi.source.clone(), w.dim(), ops)
}

/// Indices of the ambient coordinates picked by a selection retraction.
pub(crate) fn free_coords(s: &SubSpace) -> Vec<usize> {
    (0..s.retraction.rows())
        .map(|t| {
            (0..s.retraction.cols())
                .find(|&j| !s.retraction.get(t, j).is_zero())
                .expect("zero retraction row")
        })
        .collect()
}

/// Applies a linear map given on ambient basis vectors to the columns of
/// `cols` (ambient × k), caching the images.
pub(crate) fn map_columns(
    field: FieldSpec,
    out_dim: usize,
    cols: &Matrix,
    mut image: impl FnMut(usize) -> Vec<Scalar>,
) -> Matrix {
    let mut cache: HashMap<usize, Vec<Scalar>> = HashMap::new();
    let mut out = Matrix::zeros(field, out_dim, cols.cols());
    for (r, c, v) in cols.nonzeros() {
        let img = cache.entry(r).or_insert_with(|| image(r));
        for (i, s) in img.iter().enumerate() {
            if !s.is_zero() {
                out.add_at(i, c, &(v * s));
            }
        }
    }
    out
}

/// Column `j` of `m` as a dense vector.
pub(crate) fn col(m: &Matrix, j: usize) -> Vec<Scalar> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

/// Dense Kronecker product of two vectors.
pub(crate) fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let field = a.first().or(b.first()).map(|s| s.field());
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() {
                Scalar::zero(field.unwrap())
            } else {
                x * y
            });
        }
    }
    out
}

/// out += c·v.
pub(crate) fn axpy(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        o.add_mul(c, x);
    }
}
