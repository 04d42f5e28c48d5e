use std::sync::Arc;

use hopflab::adjoint::*;
use hopflab::builders::*;
use hopflab::exactmath::{FieldSpec, Matrix, Scalar};
use hopflab::rep::{is_module_map, tensor_modules, ModuleRep};
use hopflab::Result;

/// CoInd along kCₙ ⊂ Tₙ with its counit doubled.
struct DoubledCounit(CoInduction);

impl MonoidalAdjunction for DoubledCounit {
    type C = ModCat;
    type D = ModCat;
    fn name(&self) -> String {
        format!("{} with 2·counit", self.0.name())
    }
    fn c(&self) -> &ModCat {
        self.0.c()
    }
    fn d(&self) -> &ModCat {
        self.0.d()
    }
    fn g_obj(&self, a: &ModuleRep) -> ModuleRep {
        self.0.g_obj(a)
    }
    fn r_obj(&self, x: &ModuleRep) -> ModuleRep {
        self.0.r_obj(x)
    }
    fn r_map(&self, x: &ModuleRep, y: &ModuleRep, f: &Matrix) -> Matrix {
        self.0.r_map(x, y, f)
    }
    fn unit(&self, a: &ModuleRep) -> Matrix {
        self.0.unit(a)
    }
    fn counit(&self, x: &ModuleRep) -> Matrix {
        let c = self.0.counit(x);
        c.scale(&Scalar::from_int(c.field(), 2))
    }
    fn lax(&self, x: &ModuleRep, y: &ModuleRep) -> Matrix {
        self.0.lax(x, y)
    }
    fn lax0(&self) -> Matrix {
        self.0.lax0()
    }
    fn lproj_inv(&self, a: &ModuleRep, x: &ModuleRep) -> Result<Matrix> {
        self.0.lproj_inv(a, x)
    }
    fn rproj_inv(&self, x: &ModuleRep, a: &ModuleRep) -> Result<Matrix> {
        self.0.rproj_inv(x, a)
    }
}

#[test]
fn corrupted_counit_fails_zigzag_first() {
    let pair = taft_pair(2).unwrap();
    let fam = taft_families(&pair, DEFAULT_SEED, 0).deterministic();
    let bad = DoubledCounit(CoInduction::new(pair.iota.clone()));
    let r = verify_adjunction_axioms(&bad, &fam, DEFAULT_BUDGET);
    let first = r.first_failure().expect("a failure");
    assert_eq!(first.id, "zigzag");
    assert!(first.witness.as_deref().unwrap_or("").contains('='));
}

#[test]
fn dual_basis_rejects_non_basis_hint() {
    // {1, g} spans only kC₂ inside T₂ as a kC₂-module
    let pair = taft_pair(2).unwrap();
    assert!(dual_basis(&pair.iota, Some(&[0, 2])).is_err());
    let db = dual_basis(&pair.iota, Some(&[0, 1])).unwrap();
    assert!(verify_dual_basis(&pair.iota, &db));
}

#[test]
fn greedy_dual_basis_verifies() {
    for n in [2, 3] {
        let pair = taft_pair(n).unwrap();
        let db = dual_basis(&pair.iota, None).unwrap();
        assert_eq!(db.elements.len(), n);
        assert!(verify_dual_basis(&pair.iota, &db));
    }
}

#[test]
fn projection_along_retraction_has_no_dual_basis() {
    let pair = taft_pair(3).unwrap();
    assert!(dual_basis(&pair.pi, None).is_err());
}

#[test]
fn reversed_oplax_is_not_linear() {
    let pair = taft_pair(3).unwrap();
    let ind = Induction::new(pair.iota.clone());
    let v = cyclic_character(&pair.k, 1);
    let u = ModuleRep::regular(pair.k.clone());
    let src = ind.ind_module(&tensor_modules(&v, &u));
    let tgt = tensor_modules(&ind.ind_module(&v), &ind.ind_module(&u));
    assert!(is_module_map(&src, &tgt, &ind.oplax(&v, &u)));
    assert!(!is_module_map(&src, &tgt, &ind.oplax_verbatim(&v, &u)));
}

#[test]
fn rproj_inverse_needs_inverse_antipode() {
    let pair = taft_pair(3).unwrap();
    let co = CoInduction::new(pair.iota.clone());
    let x = cyclic_character(&pair.k, 1);
    let a = ModuleRep::regular(pair.h.clone());
    let rp = co.rproj(&x, &a);
    let id = Matrix::identity(rp.field(), rp.cols());
    let good = co.rproj_inv_twisted(&x, &a, true).unwrap();
    let bad = co.rproj_inv_twisted(&x, &a, false).unwrap();
    assert_eq!(&good * &rp, id);
    assert_ne!(&bad * &rp, id);
    assert_eq!(good, co.rproj_inv(&x, &a).unwrap());
}

#[test]
fn coinduction_dimension_is_index_times_dim() {
    for n in [2, 3] {
        let pair = taft_pair(n).unwrap();
        let co = CoInduction::new(pair.iota.clone());
        let ind = Induction::new(pair.iota.clone());
        for v in [ModuleRep::trivial(pair.k.clone()), ModuleRep::regular(pair.k.clone())] {
            assert_eq!(co.coind_module(&v).dim(), n * v.dim());
            assert_eq!(ind.ind_module(&v).dim(), n * v.dim());
        }
    }
}

#[test]
fn catalogs_pass_for_group_inclusions() {
    let f = FieldSpec::rational();
    let s3 = Arc::new(group_algebra(&GroupTable::symmetric3(), f).unwrap());
    let c3 = Arc::new(group_algebra(&GroupTable::cyclic(3), f).unwrap());
    let phi = group_inclusion(c3, s3, &[0, 1, 2]).unwrap();
    let fam = module_families(&phi, vec![], vec![], DEFAULT_SEED, 1);
    let co = CoInduction::new(phi.clone());
    let r = verify_catalog(&co, &fam, DEFAULT_BUDGET);
    assert!(r.all_passed(), "{}", r.to_text());
    let op = OpInduction::new(Arc::new(Induction::new(phi)));
    let r = verify_catalog(&op, &fam, DEFAULT_BUDGET);
    assert!(r.all_passed(), "{}", r.to_text());
}

#[test]
fn cotensor_catalogs_pass() {
    for (ct, fam) in cotensor_fixtures(DEFAULT_SEED, 1).unwrap() {
        let r = verify_catalog(&ct, &fam, DEFAULT_BUDGET);
        assert!(r.all_passed(), "{}", r.to_text());
        let r = verify_extras(&ct, &fam, DEFAULT_BUDGET);
        assert!(r.all_passed(), "{}", r.to_text());
    }
}

#[test]
fn naturality_holds_on_the_deterministic_family() {
    let pair = taft_pair(2).unwrap();
    let fam = taft_families(&pair, DEFAULT_SEED, 0).deterministic();
    let co = CoInduction::new(pair.iota.clone());
    let r = verify_naturality(&co, &fam, DEFAULT_BUDGET, 2);
    assert!(r.all_passed(), "{}", r.to_text());
}

#[test]
fn seed_changes_only_random_members() {
    let pair = taft_pair(2).unwrap();
    let a = taft_families(&pair, 1, 2);
    let b = taft_families(&pair, 2, 2);
    let det = |f: &Families<ModuleRep, ModuleRep>| f.deterministic().c.iter().map(|(l, _)| l.clone()).collect::<Vec<_>>();
    assert_eq!(det(&a), det(&b));
    let again = taft_families(&pair, 1, 2);
    assert_eq!(
        a.c.iter().map(|(_, m)| m.action().clone()).collect::<Vec<_>>(),
        again.c.iter().map(|(_, m)| m.action().clone()).collect::<Vec<_>>()
    );
}
