use std::path::Path;
use std::sync::Arc;

use proptest::prelude::*;

use hopflab::adjoint::*;
use hopflab::builders::*;
use hopflab::center::*;
use hopflab::cli::{document_text, parse_document, Document};
use hopflab::exactmath::*;
use hopflab::rep::{direct_sum_modules, tensor_modules, verify_module, verify_yd, ModuleRep, YDModule};

fn q3() -> FieldSpec {
    FieldSpec::cyclotomic(3)
}

fn scalar_in(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    let deg = field.degree();
    proptest::collection::vec((-6i64..=6, 1i64..=4), deg).prop_map(move |cs| {
        let poly = cs.into_iter().map(|(a, b)| Rational::new(a.into(), b.into())).collect();
        Scalar::from_poly(field, poly)
    })
}

fn matrix_in(field: FieldSpec, r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_in(field), r * c)
        .prop_map(move |d| Matrix::from_data(field, r, c, d))
}

/// A direct sum of Taft characters χ_j.
fn taft_sum(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(0..n as i64, 1..=2)
}

fn sum_of(h: &Arc<hopflab::hopf::HopfAlgebra>, n: usize, js: &[i64]) -> ModuleRep {
    js.iter()
        .map(|&j| taft_character(h, n, j))
        .reduce(|a, b| direct_sum_modules(&a, &b))
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in scalar_in(q3()), b in scalar_in(q3()), c in scalar_in(q3())) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_roundtrip(a in scalar_in(q3()), r in scalar_in(FieldSpec::rational())) {
        prop_assert_eq!(parse_scalar(&a.to_string(), q3()).unwrap(), a);
        prop_assert_eq!(parse_scalar(&r.to_string(), FieldSpec::rational()).unwrap(), r);
    }

    #[test]
    fn kron_mixed_product(
        a in matrix_in(q3(), 2, 2), b in matrix_in(q3(), 2, 1),
        c in matrix_in(q3(), 2, 2), d in matrix_in(q3(), 1, 2),
    ) {
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn equalizer_is_split(f in matrix_in(FieldSpec::rational(), 3, 4), g in matrix_in(FieldSpec::rational(), 3, 4)) {
        let s = equalizer(&f, &g).unwrap();
        prop_assert_eq!(&s.retraction * &s.inclusion, Matrix::identity(f.field(), s.dim()));
        prop_assert!((&(&f - &g) * &s.inclusion).is_zero());
        prop_assert_eq!(s.dim() + rank(&(&f - &g)), 4);
    }

    #[test]
    fn coequalizer_is_split(f in matrix_in(FieldSpec::rational(), 4, 2), g in matrix_in(FieldSpec::rational(), 4, 2)) {
        let qs = coequalizer(&f, &g).unwrap();
        prop_assert_eq!(&qs.projection * &qs.section, Matrix::identity(f.field(), qs.dim()));
        prop_assert!((&qs.projection * &(&f - &g)).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(a in matrix_in(q3(), 3, 3)) {
        if let Ok(inv) = inverse(&a) {
            prop_assert_eq!(&a * &inv, Matrix::identity(q3(), 3));
            prop_assert_eq!(&inv * &a, Matrix::identity(q3(), 3));
        } else {
            prop_assert!(rank(&a) < 3);
        }
    }

    #[test]
    fn tensor_of_yd_simples_is_yd(i1 in 0i64..3, j1 in 0i64..3, i2 in 0i64..3, j2 in 0i64..3) {
        let k = Arc::new(cyclic_group_algebra(3).unwrap());
        let a = halfbraiding_from_yd(&cyclic_yd_simple(&k, i1, j1));
        let b = halfbraiding_from_yd(&cyclic_yd_simple(&k, i2, j2));
        let t = yd_from_halfbraiding(&tensor_halfbraiding(&ModCat { hopf: k.clone() }, &a, &b)).unwrap();
        prop_assert!(verify_yd(&t).all_passed());
        prop_assert_eq!(t, cyclic_yd_simple(&k, i1 + i2, j1 + j2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn induced_modules_are_modules(js in taft_sum(3)) {
        let pair = taft_pair(3).unwrap();
        let v: ModuleRep = js.iter().map(|&j| cyclic_character(&pair.k, j)).reduce(|a, b| direct_sum_modules(&a, &b)).unwrap();
        let ind = Induction::new(pair.iota.clone());
        let co = CoInduction::new(pair.iota.clone());
        prop_assert!(verify_module(&ind.ind_module(&v)).all_passed());
        prop_assert!(verify_module(&co.coind_module(&v)).all_passed());
    }

    #[test]
    fn projection_roundtrips_on_random_sums(js in taft_sum(3), ks in taft_sum(3)) {
        let pair = taft_pair(3).unwrap();
        let co = CoInduction::new(pair.iota.clone());
        let a = sum_of(&pair.h, 3, &js);
        let x: ModuleRep = ks.iter().map(|&j| cyclic_character(&pair.k, j)).reduce(|a, b| direct_sum_modules(&a, &b)).unwrap();
        let lp = co.lproj(&a, &x);
        let li = co.lproj_inv(&a, &x).unwrap();
        prop_assert_eq!(&li * &lp, Matrix::identity(q3(), lp.cols()));
        prop_assert_eq!(&lp * &li, Matrix::identity(q3(), lp.rows()));
        let rp = co.rproj(&x, &a);
        let ri = co.rproj_inv(&x, &a).unwrap();
        prop_assert_eq!(&ri * &rp, Matrix::identity(q3(), rp.cols()));
    }

    #[test]
    fn lax_structure_is_linear(js in taft_sum(3), ks in taft_sum(3)) {
        let pair = taft_pair(3).unwrap();
        let co = CoInduction::new(pair.iota.clone());
        let chi = |v: &[i64]| v.iter().map(|&j| cyclic_character(&pair.k, j)).reduce(|a, b| direct_sum_modules(&a, &b)).unwrap();
        let (x, y) = (chi(&js), chi(&ks));
        let lax = co.lax(&x, &y);
        let src = tensor_modules(&co.r_obj(&x), &co.r_obj(&y));
        let tgt = co.r_obj(&tensor_modules(&x, &y));
        prop_assert!(hopflab::rep::is_module_map(&src, &tgt, &lax));
    }

    #[test]
    fn documents_roundtrip(n in 2usize..=4, i in 0i64..4, j in 0i64..4) {
        let docs = [
            Document::Hopf(Arc::new(taft(n).unwrap())),
            Document::Yd(cyclic_yd_simple(&Arc::new(cyclic_group_algebra(n).unwrap()), i, j)),
            Document::Morphism(taft_pair(n).unwrap().pi),
            Document::Module(taft_character(&Arc::new(taft(n).unwrap()), n, j)),
        ];
        for d in docs {
            let text = document_text(&d);
            let back = parse_document(&text, Path::new(".")).unwrap();
            prop_assert_eq!(document_text(&back), text);
        }
    }
}

#[test]
fn yd_regular_adjoint_of_taft_is_yd() {
    let h = Arc::new(taft(2).unwrap());
    assert!(verify_yd(&YDModule::regular_adjoint(h)).all_passed());
}
