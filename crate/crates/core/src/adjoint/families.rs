//! Deterministic object families with seeded random extensions.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{corestrict, Cotensor, Induction};
use crate::builders::{
    c3_rotation, cyclic_character, function_algebra, function_restriction, group_algebra,
    rep_comodule, s3_representations, taft, taft_character, taft_pair, GroupTable, TaftPair,
};
use crate::exactmath::{inverse, FieldSpec, Matrix};
use crate::hopf::{HopfAlgebra, HopfMorphism};
use crate::rep::{direct_sum_modules, random_invertible, tensor_modules, ComoduleRep, ModuleRep};

pub const DEFAULT_SEED: u64 = 7;
/// Largest dimension product of an object tuple in catalog runs.
pub const DEFAULT_BUDGET: usize = 27;

/// Labelled objects of C and D. The first six of each list are deterministic.
#[derive(Clone, Debug)]
pub struct Families<C, D> {
    pub c: Vec<(String, C)>,
    pub d: Vec<(String, D)>,
}

impl<C, D> Families<C, D> {
    /// The deterministic part only.
    pub fn deterministic(&self) -> Self
    where
        C: Clone,
        D: Clone,
    {
        Families {
            c: self.c.iter().take(6).cloned().collect(),
            d: self.d.iter().take(6).cloned().collect(),
        }
    }
}

fn random_sum(pool: &[&(String, ModuleRep)], rng: &mut ChaCha8Rng) -> (String, ModuleRep) {
    let a = pool.choose(rng).unwrap();
    let b = pool.choose(rng).unwrap();
    let sum = direct_sum_modules(&a.1, &b.1);
    let p = random_invertible(sum.field(), sum.dim(), rng);
    let m = sum.conjugate(&p).expect("random_invertible is invertible");
    (format!("rand({}⊕{})", a.0, b.0), m)
}

/// Families for a module adjunction along φ: K → H, C = Mod_H, D = Mod_K.
///
/// C: 𝟙, `c_extra`, P = Ind(𝟙), P⊗P, H, then `randoms` conjugated sums.
/// D: 𝟙, `d_extra`, Res P, Res P ⊗ d_extra[0], K, then `randoms` conjugated sums.
pub fn module_families(
    phi: &HopfMorphism,
    c_extra: Vec<(String, ModuleRep)>,
    d_extra: Vec<(String, ModuleRep)>,
    seed: u64,
    randoms: usize,
) -> Families<ModuleRep, ModuleRep> {
    let h = phi.target.clone();
    let k = phi.source.clone();
    let ind = Induction::new(phi.clone());
    let p = ind.ind_module(&ModuleRep::trivial(k.clone()));
    let mut c = vec![("𝟙".to_string(), ModuleRep::trivial(h.clone()))];
    c.extend(c_extra);
    c.push(("P".into(), p.clone()));
    c.push(("P⊗P".into(), tensor_modules(&p, &p)));
    c.push(("H".into(), ModuleRep::regular(h.clone())));

    let res_p = ind.restrict(&p);
    let mut d = vec![("𝟙".to_string(), ModuleRep::trivial(k.clone()))];
    let first = d_extra.first().cloned();
    d.extend(d_extra);
    d.push(("Res P".into(), res_p.clone()));
    if let Some((l, m)) = first {
        d.push((format!("Res P⊗{l}"), tensor_modules(&res_p, &m)));
    }
    d.push(("K".into(), ModuleRep::regular(k.clone())));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_c = c.len();
    let small_c = c
        .iter()
        .map(|e| e.1.dim())
        .filter(|&x| x > 1)
        .min()
        .unwrap_or(1);
    let c_pool: Vec<_> = c.iter().filter(|e| e.1.dim() <= small_c).cloned().collect();
    let c_pool: Vec<_> = c_pool.iter().collect();
    let d_pool: Vec<_> = d.iter().filter(|e| e.1.dim() == 1).cloned().collect();
    let d_pool: Vec<_> = d_pool.iter().collect();
    for _ in 0..randoms {
        c.push(random_sum(&c_pool, &mut rng));
        d.push(random_sum(&d_pool, &mut rng));
    }
    debug_assert!(c.len() == n_c + randoms);
    Families { c, d }
}

/// The module families for kCₙ ⊂ Tₙ with the characters χ₁, χ_{n−1} and k₁, k_{n−1}.
pub fn taft_families(pair: &TaftPair, seed: u64, randoms: usize) -> Families<ModuleRep, ModuleRep> {
    let n = pair.n;
    let m = n as i64 - 1;
    module_families(
        &pair.iota,
        vec![
            ("χ_1".into(), taft_character(&pair.h, n, 1)),
            (format!("χ_{m}"), taft_character(&pair.h, n, m)),
        ],
        vec![
            ("k_1".into(), cyclic_character(&pair.k, 1)),
            (format!("k_{m}"), cyclic_character(&pair.k, m)),
        ],
        seed,
        randoms,
    )
}

fn grouplike_lines(h: &Arc<HopfAlgebra>, limit: usize) -> Vec<(String, ComoduleRep)> {
    let unit = h.unit_index();
    h.grouplike_basis()
        .into_iter()
        .filter(|&g| Some(g) != unit)
        .take(limit)
        .map(|g| {
            let field = h.field();
            let mut blocks = vec![Matrix::zeros(field, 1, 1); h.dim()];
            blocks[g] = Matrix::identity(field, 1);
            (
                format!("line({})", h.labels()[g]),
                ComoduleRep::from_blocks(h.clone(), 1, blocks),
            )
        })
        .collect()
}

fn direct_sum_comodules(a: &ComoduleRep, b: &ComoduleRep) -> ComoduleRep {
    let blocks = a
        .blocks()
        .iter()
        .zip(b.blocks())
        .map(|(x, y)| x.direct_sum(y))
        .collect();
    ComoduleRep::from_blocks(a.hopf.clone(), a.dim() + b.dim(), blocks)
}

fn random_comodule(pool: &[&(String, ComoduleRep)], rng: &mut ChaCha8Rng) -> (String, ComoduleRep) {
    let a = pool.choose(rng).unwrap();
    let b = pool.choose(rng).unwrap();
    let sum = direct_sum_comodules(&a.1, &b.1);
    let p = random_invertible(sum.field(), sum.dim(), rng);
    let pinv = inverse(&p).expect("random_invertible is invertible");
    let blocks = sum.blocks().iter().map(|m| &(&p * m) * &pinv).collect();
    (
        format!("rand({}⊕{})", a.0, b.0),
        ComoduleRep::from_blocks(sum.hopf.clone(), sum.dim(), blocks),
    )
}

/// Families for the cotensor adjunction along φ: K → H.
///
/// C = Comod_K: 𝟙, up to two grouplike lines, `c_extra`, K, then random sums.
/// D = Comod_H: 𝟙, up to two grouplike lines, `d_extra`, corestricted K, H,
/// then random sums.
pub fn comodule_families(
    ct: &Cotensor,
    c_extra: Vec<(String, ComoduleRep)>,
    d_extra: Vec<(String, ComoduleRep)>,
    seed: u64,
    randoms: usize,
) -> Families<ComoduleRep, ComoduleRep> {
    let k = ct.k().clone();
    let h = ct.h().clone();
    let mut c = vec![("𝟙".to_string(), ComoduleRep::trivial(k.clone()))];
    c.extend(grouplike_lines(&k, 2));
    c.extend(c_extra);
    c.push(("K".into(), ComoduleRep::regular(k.clone())));
    let mut d = vec![("𝟙".to_string(), ComoduleRep::trivial(h.clone()))];
    d.extend(grouplike_lines(&h, 2));
    d.extend(d_extra);
    d.push((
        "corestrict K".into(),
        corestrict(&ct.phi, &ComoduleRep::regular(k.clone())),
    ));
    d.push(("H".into(), ComoduleRep::regular(h.clone())));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c_pool: Vec<_> = c.iter().filter(|e| e.1.dim() <= 2).cloned().collect();
    let c_pool: Vec<_> = c_pool.iter().collect();
    let d_pool: Vec<_> = d.iter().filter(|e| e.1.dim() <= 2).cloned().collect();
    let d_pool: Vec<_> = d_pool.iter().collect();
    for _ in 0..randoms {
        c.push(random_comodule(&c_pool, &mut rng));
        d.push(random_comodule(&d_pool, &mut rng));
    }
    Families { c, d }
}

/// The cotensor fixtures: the counit k[C₂] → k, restriction of functions
/// k^{S₃} → k^{C₃}, the Taft retraction T₃ → kC₃ and the identity of T₂.
pub fn cotensor_fixtures(
    seed: u64,
    randoms: usize,
) -> crate::Result<Vec<(Cotensor, Families<ComoduleRep, ComoduleRep>)>> {
    let q = FieldSpec::rational();
    let mut out = Vec::new();

    let c2 = Arc::new(group_algebra(&GroupTable::cyclic(2), q)?);
    let triv = Arc::new(group_algebra(&GroupTable::cyclic(1), q)?);
    let eps = Matrix::from_ints(q, 1, 2, &[1, 1]);
    let ct = Cotensor::new(HopfMorphism::new(c2, triv, eps)?);
    let fam = comodule_families(&ct, vec![], vec![], seed, randoms);
    out.push((ct, fam));

    let (s3, c3) = (GroupTable::symmetric3(), GroupTable::cyclic(3));
    let fs3 = Arc::new(function_algebra(&s3, q)?);
    let fc3 = Arc::new(function_algebra(&c3, q)?);
    let ct = Cotensor::new(function_restriction(fs3.clone(), fc3.clone(), &[0, 4, 5])?);
    let (sign, std) = s3_representations(q);
    let fam = comodule_families(
        &ct,
        vec![
            ("sign".into(), rep_comodule(&fs3, &s3, &sign)?),
            ("std".into(), rep_comodule(&fs3, &s3, &std)?),
        ],
        vec![("rot".into(), rep_comodule(&fc3, &c3, &c3_rotation(q))?)],
        seed,
        randoms,
    );
    out.push((ct, fam));

    let pair = taft_pair(3)?;
    let ct = Cotensor::new(pair.pi.clone());
    let fam = comodule_families(&ct, vec![], vec![], seed, randoms);
    out.push((ct, fam));

    let t2 = Arc::new(taft(2)?);
    let ct = Cotensor::new(HopfMorphism::identity(t2));
    let fam = comodule_families(&ct, vec![], vec![], seed, randoms);
    out.push((ct, fam));
    Ok(out)
}
