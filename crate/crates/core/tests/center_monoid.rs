use std::sync::Arc;

use hopflab::adjoint::*;
use hopflab::builders::*;
use hopflab::center::*;
use hopflab::exactmath::{Matrix, Scalar};
use hopflab::monoid::*;
use hopflab::rep::{tensor_modules, verify_yd, ModuleRep, YDModule};

fn bstar(n: usize) -> (Biproduct, BStar) {
    let k = Arc::new(cyclic_group_algebra(n).unwrap());
    let bp = biproduct(&nichols_taft(&k).unwrap()).unwrap();
    let a = a_hk(&bp).unwrap();
    (bp, a)
}

/// f_i·f_j with q^{+ij} in place of q^{-ij}.
fn sign_flipped(a: &BStar, n: usize) -> ModMonoid {
    let f = a.monoid.mul.field();
    let mut mul = a.monoid.mul.clone();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let s = mul.get(l, i * n + j) * &Scalar::root_pow(f, n as u32, 2 * (i * j) as i64);
                mul.set(l, i * n + j, s);
            }
        }
    }
    a.monoid.with_mul(mul)
}

#[test]
fn bstar_is_a_central_monoid() {
    for n in [2, 3] {
        let (bp, a) = bstar(n);
        let cat = ModCat { hopf: bp.h.clone() };
        let test = vec![
            ("𝟙".to_string(), ModuleRep::trivial(bp.h.clone())),
            ("B*".to_string(), a.monoid.carrier.clone()),
        ];
        let r = verify_central_monoid(&cat, &a.monoid, &test);
        assert!(r.all_passed(), "{}", r.to_text());
    }
}

#[test]
fn wrong_sign_product_is_not_central() {
    let (bp, a) = bstar(3);
    let cat = ModCat { hopf: bp.h.clone() };
    let test = vec![("B*".to_string(), a.monoid.carrier.clone())];
    let r = verify_central_monoid(&cat, &sign_flipped(&a, 3), &test);
    assert_eq!(r.failed_ids(), vec!["mul_is_morphism", "cm"]);
}

#[test]
fn wrong_sign_product_is_invisible_at_order_two() {
    let (_, a) = bstar(2);
    assert_eq!(sign_flipped(&a, 2).mul, a.monoid.mul);
}

#[test]
fn transposed_product_equals_product() {
    let (_, a) = bstar(3);
    let f = a.monoid.mul.field();
    assert_eq!(&a.monoid.mul * &flip(f, 3), a.monoid.mul);
}

#[test]
fn yd_halfbraiding_roundtrip() {
    let k = Arc::new(cyclic_group_algebra(3).unwrap());
    for (i, j) in [(0, 0), (1, 0), (2, 1)] {
        let v = cyclic_yd_simple(&k, i, j);
        assert_eq!(yd_from_halfbraiding(&halfbraiding_from_yd(&v)).unwrap(), v);
    }
    let v = YDModule::regular_adjoint(k);
    assert!(verify_yd(&v).all_passed());
    assert_eq!(yd_from_halfbraiding(&halfbraiding_from_yd(&v)).unwrap(), v);
}

#[test]
fn simple_yd_tensor_rule() {
    let k = Arc::new(cyclic_group_algebra(3).unwrap());
    let a = cyclic_yd_simple(&k, 1, 1);
    let b = cyclic_yd_simple(&k, 2, 2);
    let t = tensor_halfbraiding(
        &ModCat { hopf: k.clone() },
        &halfbraiding_from_yd(&a),
        &halfbraiding_from_yd(&b),
    );
    assert_eq!(yd_from_halfbraiding(&t).unwrap(), cyclic_yd_simple(&k, 0, 0));
    assert_eq!(tensor_modules(&a.module, &b.module), YDModule::trivial(k).module);
}

#[test]
fn transposed_braiding_fails_braided_lax_only() {
    let pair = taft_pair(3).unwrap();
    let co = Arc::new(CoInduction::new(pair.iota.clone()));
    let fam = taft_families(&pair, DEFAULT_SEED, 0);
    let small = |v: &[(String, ModuleRep)]| v.iter().filter(|(_, o)| o.dim() <= 3).cloned().collect::<Vec<_>>();
    let cand = CenterCandidate {
        adj: co,
        objects: vec![halfbraiding_from_yd(&cyclic_yd_simple(&pair.k, 1, 0))],
        c_test: small(&fam.c),
        d_test: small(&fam.d),
        braiding: Some(transposed_braiding()),
    };
    assert_eq!(verify_center_catalog(&cand).failed_ids(), vec!["braided_lax"]);
}

#[test]
fn induced_yd_is_not_local() {
    let pair = taft_pair(3).unwrap();
    let co = Arc::new(CoInduction::new(pair.iota.clone()));
    let m = r_unit_monoid(&co);
    let ind = Induction::new(pair.iota.clone());
    let w = induced_yd_ind(&ind, &cyclic_yd_simple(&pair.k, 0, 1));
    let (fx, c) = free_in_center(&m, &halfbraiding_from_yd(&w));
    assert!(!local_check(&m, &fx, &c).unwrap());
    let (fx, c) = free_in_center(&m, &halfbraiding_from_yd(&YDModule::trivial(pair.h.clone())));
    assert!(local_check(&m, &fx, &c).unwrap());
}

#[test]
fn coinduction_along_retraction_is_not_faithful() {
    let pair = taft_pair(3).unwrap();
    let co = Arc::new(CoInduction::new(pair.pi.clone()));
    let m = r_unit_monoid(&co);
    assert_eq!(m.carrier.dim(), 1);
    let d_objs = vec![
        ("𝟙".to_string(), ModuleRep::trivial(pair.h.clone())),
        ("χ1".to_string(), taft_character(&pair.h, 3, 1)),
        ("H".to_string(), ModuleRep::regular(pair.h.clone())),
    ];
    let targets: Vec<(String, ModuleRep)> =
        (0..3).map(|j| (format!("k{j}"), cyclic_character(&pair.k, j))).collect();
    let r = crude_monadicity_check(co.as_ref(), &m, &d_objs, &targets);
    let failed = r.failed_ids();
    assert!(failed.contains(&"rtilde_faithful"), "{}", r.to_text());
    assert!(failed.contains(&"rtilde_full"), "{}", r.to_text());
    let w = r.get("rtilde_faithful").unwrap().witness.clone().unwrap();
    assert!(w.contains("X=H, Y=𝟙"), "{w}");
}

#[test]
fn free_modules_over_r_unit() {
    let pair = taft_pair(2).unwrap();
    let co = Arc::new(CoInduction::new(pair.iota.clone()));
    let m = r_unit_monoid(&co);
    for a in [ModuleRep::trivial(pair.h.clone()), taft_character(&pair.h, 2, 1)] {
        let fa = free_mmodule(&m, &a);
        assert!(verify_mmodule(&m, &fa).all_passed());
        let mut broken = fa.clone();
        broken.act = broken.act.scale(&Scalar::from_int(m.mul.field(), 2));
        assert!(!verify_mmodule(&m, &broken).all_passed());
    }
}

#[test]
fn relative_tensor_with_regular_is_identity() {
    let pair = taft_pair(2).unwrap();
    let co = Arc::new(CoInduction::new(pair.iota.clone()));
    let m = r_unit_monoid(&co);
    let x = free_mmodule(&m, &taft_character(&pair.h, 2, 1));
    let rt = relative_tensor(&m, &x, &regular_mmodule(&m)).unwrap();
    assert_eq!(rt.obj.dim(), x.dim());
}

#[test]
fn trivial_monoid_is_central() {
    let k = Arc::new(cyclic_group_algebra(3).unwrap());
    let cat = ModCat { hopf: k.clone() };
    let m = CentralMonoid::trivial(&cat);
    let test = vec![("K".to_string(), ModuleRep::regular(k))];
    assert!(verify_central_monoid(&cat, &m, &test).all_passed());
    let t = monad_from_monoid(&cat, &m);
    assert!(verify_monoidal_monad(&t, &test).all_passed());
    assert_eq!(t.unit(&test[0].1), Matrix::identity(m.mul.field(), 3));
}
