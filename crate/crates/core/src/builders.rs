//! Fixture constructors: group and function algebras, Taft algebras, cyclic
//! Yetter–Drinfeld simples, the Nichols algebra k[x]/xⁿ, Radford–Majid
//! biproducts and the central algebra B* of a biproduct.

use std::sync::Arc;

use crate::exactmath::{qbinomial, swap, FieldSpec, Matrix, Scalar};
use crate::hopf::{dual_hopf, verify_morphism, BialgebraData, HopfAlgebra, HopfMorphism};
use crate::monoid::CentralMonoid;
use crate::rep::{
    is_comodule_map, is_module_map, tensor_modules, tensor_yd, verify_comodule, verify_module,
    verify_yd, yd_braiding, ComoduleRep, ModuleRep, YDModule,
};
use crate::report::Report;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(name: impl Into<String>, labels: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if mul.len() != n
            || mul
                .iter()
                .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
        {
            return Err(Error::Invalid("group table is not closed".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Invalid("group table is not associative".into()));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::Invalid("no identity".into()))?;
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| mul[a][b] == identity && mul[b][a] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid("missing inverse".into()))?;
        Ok(GroupTable {
            name: name.into(),
            labels,
            mul,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| power_label("g", i)).collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(format!("C{n}"), labels, mul).expect("cyclic group")
    }

    /// S₃ with elements listed as e, (12), (23), (13), (123), (132).
    pub fn symmetric3() -> Self {
        let perms = S3_PERMS;
        let labels = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mul = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let (s, t) = (perms[a], perms[b]);
                        idx([s[t[0]], s[t[1]], s[t[2]]])
                    })
                    .collect()
            })
            .collect();
        Self::new("S3", labels, mul).expect("S3")
    }
}

const S3_PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
    [1, 2, 0],
    [2, 0, 1],
];

fn power_label(sym: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => sym.into(),
        _ => format!("{sym}^{k}"),
    }
}

/// The group algebra kG with group-like basis.
pub fn group_algebra(g: &GroupTable, field: FieldSpec) -> Result<HopfAlgebra> {
    let n = g.order();
    let one = Scalar::one(field);
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut unit = Matrix::zeros(field, n, 1);
    let counit = Matrix::from_fn(field, 1, n, |_, _| one.clone());
    for a in 0..n {
        for b in 0..n {
            mult.set(g.mul[a][b], a * n + b, one.clone());
        }
        comult.set(a * n + a, a, one.clone());
    }
    unit.set(g.identity, 0, one);
    let data = BialgebraData::new(field, g.labels.clone(), mult, unit, comult, counit)?;
    HopfAlgebra::new(format!("k{}", g.name), data)
}

/// k[G], the dual of kG in the basis of point indicators δ_g.
pub fn function_algebra(g: &GroupTable, field: FieldSpec) -> Result<HopfAlgebra> {
    let mut h = dual_hopf(&group_algebra(g, field)?);
    h.name = format!("k[{}]", g.name);
    let data = h.bialgebra().clone();
    let labels = g.labels.iter().map(|l| format!("δ_{l}")).collect();
    let data = BialgebraData { labels, ..data };
    Ok(HopfAlgebra::from_parts_unchecked(
        h.name.clone(),
        data,
        h.antipode().clone(),
        h.antipode_inverse().clone(),
    ))
}

/// kCₙ over Q(ζₙ), the field the Taft algebra Tₙ(ζₙ) lives over.
pub fn cyclic_group_algebra(n: usize) -> Result<HopfAlgebra> {
    group_algebra(&GroupTable::cyclic(n), FieldSpec::cyclotomic(n as u32))
}

pub fn taft_label(n: usize, idx: usize) -> String {
    let (i, k) = (idx / n, idx % n);
    match (i, k) {
        (0, 0) => "1".into(),
        (_, 0) => power_label("g", i),
        (0, _) => power_label("x", k),
        _ => format!("{}{}", power_label("g", i), power_label("x", k)),
    }
}

/// Tₙ(q) = k⟨g, x⟩/(gⁿ = 1, xⁿ = 0, gx = qxg) with q = ζₙ, basis gⁱxᵏ at
/// index i·n + k, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x. The antipode is solved.
pub fn taft(n: usize) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::Invalid("Taft algebras need n ≥ 2".into()));
    }
    let field = FieldSpec::cyclotomic(n as u32);
    let q = Scalar::root_pow(field, n as u32, 1);
    let qp = |e: i64| Scalar::root_pow(field, n as u32, e);
    let dim = n * n;
    let idx = |i: usize, k: usize| (i % n) * n + k;
    let mut mult = Matrix::zeros(field, dim, dim * dim);
    // gⁱxᵏ · gʲxˡ = q^(-kj) g^(i+j) x^(k+l), using xg = q⁻¹gx.
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                for l in 0..n {
                    if k + l < n {
                        mult.set(
                            idx(i + j, k + l),
                            idx(i, k) * dim + idx(j, l),
                            qp(-((k * j) as i64)),
                        );
                    }
                }
            }
        }
    }
    // Δ(gⁱxᵏ) = Σ_m (k choose m)_q q^(-m(k-m)) g^(i+k-m)x^m ⊗ gⁱx^(k-m).
    let mut comult = Matrix::zeros(field, dim * dim, dim);
    for i in 0..n {
        for k in 0..n {
            for m in 0..=k {
                let c = &qbinomial(k as i64, m as i64, &q)? * &qp(-((m * (k - m)) as i64));
                let left = idx(i + k - m, m);
                let right = idx(i, k - m);
                comult.set(left * dim + right, idx(i, k), c);
            }
        }
    }
    let mut unit = Matrix::zeros(field, dim, 1);
    unit.set(0, 0, Scalar::one(field));
    let counit = Matrix::from_fn(field, 1, dim, |_, c| {
        if c % n == 0 {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    let labels = (0..dim).map(|c| taft_label(n, c)).collect();
    let data = BialgebraData::new(field, labels, mult, unit, comult, counit)?;
    HopfAlgebra::new(format!("T{n}"), data)
}

/// kCₙ ⊂ Tₙ(q) with its retraction.
#[derive(Clone, Debug)]
pub struct TaftPair {
    pub n: usize,
    pub k: Arc<HopfAlgebra>,
    pub h: Arc<HopfAlgebra>,
    pub iota: HopfMorphism,
    pub pi: HopfMorphism,
}

pub fn taft_pair(n: usize) -> Result<TaftPair> {
    let k = Arc::new(cyclic_group_algebra(n)?);
    let h = Arc::new(taft(n)?);
    let field = h.field();
    let iota = Matrix::from_fn(field, n * n, n, |r, c| {
        if r == c * n {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    let pi = Matrix::from_fn(field, n, n * n, |r, c| {
        if c % n == 0 && c / n == r {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    Ok(TaftPair {
        n,
        iota: HopfMorphism::new(k.clone(), h.clone(), iota)?,
        pi: HopfMorphism::new(h.clone(), k.clone(), pi)?,
        k,
        h,
    })
}

/// Checks that ι: K → H is a Hopf morphism, π: H → K is an algebra and
/// coalgebra map, and π∘ι = id_K. Check ids: `iota/*`, `pi/*`, `retraction`.
pub fn verify_split_pair(iota: &HopfMorphism, pi: &HopfMorphism) -> Report {
    let mut r = Report::new(format!(
        "split pair {} ⇄ {}",
        iota.source.name, iota.target.name
    ));
    r.merge_prefixed("iota", verify_morphism(iota));
    r.merge_prefixed("pi", verify_morphism(pi));
    let composite = &pi.matrix * &iota.matrix;
    let id = Matrix::identity(iota.source.field(), iota.source.dim());
    r.record("retraction", composite == id, || {
        let labels = iota.source.labels();
        let bad = (0..id.cols())
            .find(|&c| (0..id.rows()).any(|r| composite.get(r, c) != id.get(r, c)))
            .unwrap_or(0);
        format!("π(ι({})) ≠ {}", labels[bad], labels[bad])
    });
    r
}

/// The inclusion kC_n ↪ Tₙ(q).
pub fn taft_inclusion(n: usize) -> Result<HopfMorphism> {
    Ok(taft_pair(n)?.iota)
}

/// One-dimensional Tₙ-module with g ↦ q^j and x ↦ 0.
pub fn taft_character(h: &Arc<HopfAlgebra>, n: usize, j: i64) -> ModuleRep {
    let field = h.field();
    let ops = (0..n * n)
        .map(|c| {
            let (i, k) = (c / n, c % n);
            if k == 0 {
                Matrix::scalar(Scalar::root_pow(field, n as u32, i as i64 * j))
            } else {
                Matrix::zeros(field, 1, 1)
            }
        })
        .collect();
    ModuleRep::from_ops(h.clone(), 1, ops)
}

/// One-dimensional kCₙ-module with g ↦ q^j.
pub fn cyclic_character(k: &Arc<HopfAlgebra>, j: i64) -> ModuleRep {
    let field = k.field();
    let n = k.dim() as u32;
    let ops = (0..k.dim())
        .map(|a| Matrix::scalar(Scalar::root_pow(field, n, a as i64 * j)))
        .collect();
    ModuleRep::from_ops(k.clone(), 1, ops)
}

/// k_{i,j} over kCₙ: degree gⁱ, g acting by q^j.
pub fn cyclic_yd_simple(k: &Arc<HopfAlgebra>, i: i64, j: i64) -> YDModule {
    let n = k.dim() as i64;
    let field = k.field();
    let mut blocks = vec![Matrix::zeros(field, 1, 1); k.dim()];
    blocks[i.rem_euclid(n) as usize] = Matrix::scalar(Scalar::one(field));
    YDModule {
        module: cyclic_character(k, j),
        comodule: ComoduleRep::from_blocks(k.clone(), 1, blocks),
    }
}

/// Inclusion kH ↪ kG of a subgroup, given as the list of G-indices of H's elements.
pub fn group_inclusion(
    sub: Arc<HopfAlgebra>,
    g: Arc<HopfAlgebra>,
    positions: &[usize],
) -> Result<HopfMorphism> {
    let field = g.field();
    let m = Matrix::from_fn(field, g.dim(), sub.dim(), |r, c| {
        if positions[c] == r {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    HopfMorphism::new(sub, g, m)
}

/// The unit map k → H, with k the trivial Hopf algebra over H's field.
pub fn ground_inclusion(h: &Arc<HopfAlgebra>) -> Result<HopfMorphism> {
    let k = Arc::new(group_algebra(&GroupTable::cyclic(1), h.field())?);
    HopfMorphism::new(k, h.clone(), h.unit().clone())
}

/// Restriction of functions k[G] → k[H] along a subgroup inclusion.
pub fn function_restriction(
    fg: Arc<HopfAlgebra>,
    fsub: Arc<HopfAlgebra>,
    positions: &[usize],
) -> Result<HopfMorphism> {
    let field = fg.field();
    let m = Matrix::from_fn(field, fsub.dim(), fg.dim(), |r, c| {
        if positions[r] == c {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    });
    HopfMorphism::new(fg, fsub, m)
}

/// The k^G-comodule of a representation ρ of G: the block at δ_g is ρ(g⁻¹).
pub fn rep_comodule(fg: &Arc<HopfAlgebra>, g: &GroupTable, rho: &[Matrix]) -> Result<ComoduleRep> {
    if rho.len() != fg.dim() || g.order() != fg.dim() {
        return Err(Error::Shape(format!(
            "{} matrices for a group of order {}",
            rho.len(),
            fg.dim()
        )));
    }
    let d = rho[0].rows();
    let blocks = (0..g.order()).map(|x| rho[g.inverse[x]].clone()).collect();
    let c = ComoduleRep::from_blocks(fg.clone(), d, blocks);
    if !verify_comodule(&c).all_passed() {
        return Err(Error::Invalid("not a representation".into()));
    }
    Ok(c)
}

/// Sign and standard representations of S₃ in the element order of [`GroupTable::symmetric3`].
pub fn s3_representations(field: FieldSpec) -> (Vec<Matrix>, Vec<Matrix>) {
    let sign = [1, -1, -1, -1, 1, 1]
        .iter()
        .map(|&s| Matrix::from_ints(field, 1, 1, &[s]))
        .collect();
    // Permutation action on {v ∈ k³ : Σv = 0} in the basis e₁−e₂, e₂−e₃.
    let std = S3_PERMS
        .iter()
        .map(|p| {
            let mut m = Matrix::zeros(field, 2, 2);
            for j in 0..2 {
                let mut w = [0i64; 3];
                w[p[j]] += 1;
                w[p[j + 1]] -= 1;
                m.set(0, j, Scalar::from_int(field, w[0]));
                m.set(1, j, Scalar::from_int(field, w[0] + w[1]));
            }
            m
        })
        .collect();
    (sign, std)
}

/// The rotation representation of C₃ on Q², g ↦ [[0,−1],[1,−1]].
pub fn c3_rotation(field: FieldSpec) -> Vec<Matrix> {
    let g = Matrix::from_ints(field, 2, 2, &[0, -1, 1, -1]);
    let id = Matrix::identity(field, 2);
    let g2 = &g * &g;
    vec![id, g, g2]
}

/// A Hopf algebra inside YD modules over K: structure maps on the carrier,
/// with the YD braiding in the bialgebra compatibility.
#[derive(Clone, Debug)]
pub struct YDHopfAlgebra {
    pub carrier: YDModule,
    pub labels: Vec<String>,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
}

impl YDHopfAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

/// Axioms of a bialgebra in YD^K_K, including Δ(ab) = (m⊗m)(B⊗Ψ⊗B)(Δ⊗Δ)(a⊗b).
pub fn verify_yd_hopf(b: &YDHopfAlgebra) -> Report {
    let d = b.dim();
    let f = b.carrier.field();
    let id = Matrix::identity(f, d);
    let mut r = Report::new("yd hopf");
    r.merge(verify_module(&b.carrier.module));
    r.merge(verify_comodule(&b.carrier.comodule));
    r.merge(verify_yd(&b.carrier));
    r.record(
        "mult_associative",
        &b.mult * &b.mult.kron(&id) == &b.mult * &id.kron(&b.mult),
        || "m(m⊗B)".into(),
    );
    r.record(
        "mult_unital",
        &b.mult * &b.unit.kron(&id) == id && &b.mult * &id.kron(&b.unit) == id,
        || "m(u⊗B)".into(),
    );
    r.record(
        "comult_coassociative",
        &b.comult.kron(&id) * &b.comult == &id.kron(&b.comult) * &b.comult,
        || "(Δ⊗B)Δ".into(),
    );
    r.record(
        "comult_counital",
        &b.counit.kron(&id) * &b.comult == id && &id.kron(&b.counit) * &b.comult == id,
        || "(ε⊗B)Δ".into(),
    );
    let bb = tensor_yd(&b.carrier, &b.carrier);
    let triv = YDModule::trivial(b.carrier.hopf().clone());
    let yd_map = |src: &YDModule, tgt: &YDModule, m: &Matrix| {
        is_module_map(&src.module, &tgt.module, m)
            && is_comodule_map(&src.comodule, &tgt.comodule, m)
    };
    r.record(
        "structure_maps_yd_linear",
        yd_map(&bb, &b.carrier, &b.mult)
            && yd_map(&triv, &b.carrier, &b.unit)
            && yd_map(&b.carrier, &bb, &b.comult)
            && yd_map(&b.carrier, &triv, &b.counit),
        || "m, u, Δ, ε".into(),
    );
    let psi = yd_braiding(&b.carrier, &b.carrier.module);
    let lhs = &b.comult * &b.mult;
    let rhs = &(&b.mult.kron(&b.mult) * &id.kron(&psi).kron(&id)) * &b.comult.kron(&b.comult);
    r.record("braided_bialgebra_compatibility", lhs == rhs, || {
        "Δ∘m".into()
    });
    r
}

/// k[x]/xⁿ in YD over kCₙ: g·xᵏ = qᵏxᵏ, δ(xᵏ) = gᵏ⊗xᵏ, Δ(x) = x⊗1 + 1⊗x.
pub fn nichols_taft(k: &Arc<HopfAlgebra>) -> Result<YDHopfAlgebra> {
    let n = k.dim();
    let field = k.field();
    let q = Scalar::root_pow(field, n as u32, 1);
    let ops = (0..n)
        .map(|a| {
            Matrix::from_fn(field, n, n, |r, c| {
                if r == c {
                    Scalar::root_pow(field, n as u32, (a * c) as i64)
                } else {
                    Scalar::zero(field)
                }
            })
        })
        .collect();
    let module = ModuleRep::from_ops(k.clone(), n, ops);
    let blocks = (0..n)
        .map(|a| {
            Matrix::from_fn(field, n, n, |r, c| {
                if r == c && c == a {
                    Scalar::one(field)
                } else {
                    Scalar::zero(field)
                }
            })
        })
        .collect();
    let comodule = ComoduleRep::from_blocks(k.clone(), n, blocks);
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    for a in 0..n {
        for b in 0..n {
            if a + b < n {
                mult.set(a + b, a * n + b, Scalar::one(field));
            }
        }
        for m in 0..=a {
            comult.set(m * n + (a - m), a, qbinomial(a as i64, m as i64, &q)?);
        }
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(0, 0, Scalar::one(field));
    let mut counit = Matrix::zeros(field, 1, n);
    counit.set(0, 0, Scalar::one(field));
    Ok(YDHopfAlgebra {
        carrier: YDModule { module, comodule },
        labels: (0..n).map(|i| power_label("x", i)).collect(),
        mult,
        unit,
        comult,
        counit,
    })
}

/// B⋊K with basis b⊗k at index b·dim K + k, and the maps ι, π.
#[derive(Clone, Debug)]
pub struct Biproduct {
    pub b: YDHopfAlgebra,
    pub k: Arc<HopfAlgebra>,
    pub h: Arc<HopfAlgebra>,
    pub iota: HopfMorphism,
    pub pi: HopfMorphism,
}

/// Smash product (b⊗k)(c⊗l) = b(k₁·c) ⊗ k₂l and coproduct
/// Δ(b⊗k) = (b₁ ⊗ b₂⁽⁻¹⁾k₁) ⊗ (b₂⁽⁰⁾ ⊗ k₂); the antipode is solved.
pub fn biproduct(b: &YDHopfAlgebra) -> Result<Biproduct> {
    let yd = verify_yd_hopf(b);
    if !yd.all_passed() {
        return Err(Error::Invalid(format!(
            "not a Hopf algebra in YD: {:?}",
            yd.failed_ids()
        )));
    }
    let k = b.carrier.hopf().clone();
    let field = k.field();
    let (db, dk) = (b.dim(), k.dim());
    let dim = db * dk;
    let ix = |bb: usize, kk: usize| bb * dk + kk;
    let bm = &b.carrier.module;
    let bc = &b.carrier.comodule;
    let mut mult = Matrix::zeros(field, dim, dim * dim);
    for b1 in 0..db {
        for k1 in 0..dk {
            for c1 in 0..db {
                for l1 in 0..dk {
                    let col = ix(b1, k1) * dim + ix(c1, l1);
                    for (ka, kb, s) in k.comult_basis(k1) {
                        // k₁·c as a vector in B.
                        for cc in 0..db {
                            let a = bm.op(*ka).get(cc, c1);
                            if a.is_zero() {
                                continue;
                            }
                            for bb in 0..db {
                                let m = b.mult.get(bb, b1 * db + cc);
                                if m.is_zero() {
                                    continue;
                                }
                                let coeff = &(s * a) * m;
                                for (kk, t) in k.mul_basis(*kb, l1) {
                                    mult.add_at(ix(bb, *kk), col, &(&coeff * t));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut comult = Matrix::zeros(field, dim * dim, dim);
    for b0 in 0..db {
        for k0 in 0..dk {
            let col = ix(b0, k0);
            for (p, _, s) in b.comult.nonzeros().filter(|e| e.1 == b0) {
                let (b1, b2) = (p / db, p % db);
                for c in bc.support() {
                    for b2z in 0..db {
                        let t = bc.block(c).get(b2z, b2);
                        if t.is_zero() {
                            continue;
                        }
                        let st = s * t;
                        for (k1, k2, u) in k.comult_basis(k0) {
                            let stu = &st * u;
                            for (kk, v) in k.mul_basis(c, *k1) {
                                let left = ix(b1, *kk);
                                let right = ix(b2z, *k2);
                                comult.add_at(left * dim + right, col, &(&stu * v));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = Matrix::zeros(field, dim, 1);
    for (bi, s) in (0..db).map(|i| (i, b.unit.get(i, 0).clone())) {
        for (ki, t) in k.unit_elem() {
            unit.add_at(ix(bi, *ki), 0, &(&s * t));
        }
    }
    let counit = Matrix::from_fn(field, 1, dim, |_, c| {
        b.counit.get(0, c / dk) * k.counit_basis(c % dk)
    });
    let labels = (0..dim)
        .map(|c| format!("{}⊗{}", b.labels[c / dk], k.label(c % dk)))
        .collect();
    let data = BialgebraData::new(field, labels, mult, unit, comult, counit)?;
    let h = Arc::new(HopfAlgebra::new(format!("B⋊{}", k.name), data)?);
    let b_one = (0..db)
        .map(|i| b.unit.get(i, 0).clone())
        .collect::<Vec<_>>();
    let iota = Matrix::from_fn(field, dim, dk, |r, c| {
        if r % dk == c {
            b_one[r / dk].clone()
        } else {
            Scalar::zero(field)
        }
    });
    let pi = Matrix::from_fn(field, dk, dim, |r, c| {
        if c % dk == r {
            b.counit.get(0, c / dk).clone()
        } else {
            Scalar::zero(field)
        }
    });
    Ok(Biproduct {
        b: b.clone(),
        iota: HopfMorphism::new(k.clone(), h.clone(), iota)?,
        pi: HopfMorphism::new(h.clone(), k.clone(), pi)?,
        k,
        h,
    })
}

/// The monomial change of basis Tₙ(q) → k[x]/xⁿ ⋊ kCₙ sending gⁱxᵏ to
/// q^(ik)·(xᵏ⊗gⁱ), since xᵏ⊗gⁱ = xᵏgⁱ = q^(-ik)gⁱxᵏ.
pub fn taft_biproduct_basis_change(n: usize) -> Matrix {
    let field = FieldSpec::cyclotomic(n as u32);
    let dim = n * n;
    let mut m = Matrix::zeros(field, dim, dim);
    for i in 0..n {
        for k in 0..n {
            m.set(
                k * n + i,
                i * n + k,
                Scalar::root_pow(field, n as u32, (i * k) as i64),
            );
        }
    }
    m
}

/// Checks that `p` is a Hopf algebra isomorphism H₁ → H₂ on structure tensors.
pub fn structure_equal_under(h1: &HopfAlgebra, h2: &HopfAlgebra, p: &Matrix) -> Report {
    let mut r = Report::new("basis change");
    let pp = p.kron(p);
    r.record("mult", p * h1.mult() == h2.mult() * &pp, || {
        "P m₁ = m₂ (P⊗P)".into()
    });
    r.record("unit", p * h1.unit() == *h2.unit(), || "P u₁".into());
    r.record("comult", &pp * h1.comult() == h2.comult() * p, || {
        "(P⊗P)Δ₁".into()
    });
    r.record("counit", *h1.counit() == h2.counit() * p, || "ε₂ P".into());
    r.record("antipode", p * h1.antipode() == h2.antipode() * p, || {
        "P S₁ = S₂ P".into()
    });
    r
}

/// B* for H = B⋊K, with the action, coaction and product transported to
/// functionals on B (basis f_i dual to the basis of B).
#[derive(Clone, Debug)]
pub struct BStar {
    pub biproduct: Biproduct,
    pub monoid: CentralMonoid<ModuleRep>,
}

pub fn a_hk(bp: &Biproduct) -> Result<BStar> {
    let b = &bp.b;
    let k = &bp.k;
    let h = &bp.h;
    let field = h.field();
    let (db, dk) = (b.dim(), k.dim());
    let bm = &b.carrier.module;
    let bc = &b.carrier.comodule;
    // ρ_B(S⁻¹(e_k)).
    let sinv_ops: Vec<Matrix> = (0..dk).map(|kk| bm.act_elem(k.sinv_basis(kk))).collect();
    // Right multiplication by b_j on B.
    let right_mul: Vec<Matrix> = (0..db)
        .map(|j| Matrix::from_fn(field, db, db, |r, c| b.mult.get(r, c * db + j).clone()))
        .collect();
    // ((b⊗k)·f)(c) = f(S⁻¹(k)·cb): operator is (ρ_B(S⁻¹k) R_b)ᵀ on coefficient vectors.
    let ops = (0..h.dim())
        .map(|hh| (&sinv_ops[hh % dk] * &right_mul[hh / dk]).transpose())
        .collect();
    let module = ModuleRep::from_ops(h.clone(), db, ops);
    // g_f(b'⊗k') = f(S⁻¹(k')·b'): value of the functional f_i on basis element e_h of H.
    let g_val = |i: usize, hh: usize| sinv_ops[hh % dk].get(i, hh / dk).clone();
    // δ(f_i) = Σ_j F(b_j) ⊗ f_j, F(b) = S(x₁)x₃ g_{f_i}(x₂) over Δ²(b⊗1).
    let mut blocks = vec![Matrix::zeros(field, db, db); h.dim()];
    for j in 0..db {
        let bj = j * dk + first_unit_index(k)?;
        for (x1, x2, x3, s) in h.comult2_basis(bj) {
            let prod = h.mul(h.s_basis(*x1), &h.basis(*x3));
            for i in 0..db {
                let g = g_val(i, *x2);
                if g.is_zero() {
                    continue;
                }
                let sg = s * &g;
                for (a, t) in &prod {
                    blocks[*a].add_at(j, i, &(&sg * t));
                }
            }
        }
    }
    let comodule = ComoduleRep::from_blocks(h.clone(), db, blocks);
    // (f_i·f_j)(b_l) = Σ f_i(S⁻¹(b₂⁽⁻¹⁾)·b₁) f_j(b₂⁽⁰⁾) over the braided coproduct.
    let mut mul = Matrix::zeros(field, db, db * db);
    for (p, l, s) in b.comult.nonzeros() {
        let (b1, b2) = (p / db, p % db);
        for c in bc.support() {
            let left = &sinv_ops[c];
            let blk = bc.block(c);
            for i in 0..db {
                let a = left.get(i, b1);
                if a.is_zero() {
                    continue;
                }
                for j in 0..db {
                    let t = blk.get(j, b2);
                    if !t.is_zero() {
                        mul.add_at(l, i * db + j, &(&(s * a) * t));
                    }
                }
            }
        }
    }
    let unit = b.counit.transpose();
    let carrier = YDModule::new(module, comodule)?;
    Ok(BStar {
        biproduct: bp.clone(),
        monoid: CentralMonoid::from_yd(carrier, mul, unit),
    })
}

fn first_unit_index(k: &HopfAlgebra) -> Result<usize> {
    k.unit_index()
        .ok_or_else(|| Error::Invalid("unit of K is not a basis vector".into()))
}

/// The identification B* → Hom_K(B⋊K, k), f ↦ (b⊗k ↦ f(S⁻¹(k)·b)), as a
/// matrix into the ambient coordinates g(e_h).
pub fn bstar_to_hom(bp: &Biproduct) -> Matrix {
    let b = &bp.b;
    let k = &bp.k;
    let field = k.field();
    let (db, dk) = (b.dim(), k.dim());
    let sinv_ops: Vec<Matrix> = (0..dk)
        .map(|kk| b.carrier.module.act_elem(k.sinv_basis(kk)))
        .collect();
    Matrix::from_fn(field, db * dk, db, |hh, i| {
        sinv_ops[hh % dk].get(i, hh / dk).clone()
    })
}

/// The algebra k[y]/yⁿ in the monomial basis.
pub fn truncated_polynomial_mult(field: FieldSpec, n: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n * n);
    for a in 0..n {
        for b in 0..n {
            if a + b < n {
                m.set(a + b, a * n + b, Scalar::one(field));
            }
        }
    }
    m
}

/// f_i ↦ q^((i-1)i/2)/[i]_q! · yⁱ as a diagonal matrix.
pub fn bstar_to_polynomial(field: FieldSpec, n: usize) -> Result<Matrix> {
    let q = Scalar::root_pow(field, n as u32, 1);
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        let e = (i as i64 - 1) * i as i64 / 2;
        let c = Scalar::root_pow(field, n as u32, e).div(&crate::exactmath::qfactorial(i, &q))?;
        m.set(i, i, c);
    }
    Ok(m)
}

/// The swap of B⊗B as a sanity helper for braided checks.
pub fn flip(field: FieldSpec, d: usize) -> Matrix {
    swap(field, d, d)
}

/// Regular K-module restricted tensor helper used by fixtures.
pub fn tensor_power(v: &ModuleRep, k: usize) -> ModuleRep {
    let mut acc = ModuleRep::trivial(v.hopf.clone());
    for _ in 0..k {
        acc = tensor_modules(&acc, v);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{verify_hopf, verify_morphism};

    #[test]
    fn taft_two_is_sweedler() {
        let h = taft(2).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(verify_hopf(&h).all_passed());
    }

    #[test]
    fn s3_group_algebra_noncommutative() {
        let h = group_algebra(&GroupTable::symmetric3(), FieldSpec::rational()).unwrap();
        assert!(verify_hopf(&h).all_passed());
        assert!(!h.is_commutative());
        assert!(h.is_cocommutative());
    }

    #[test]
    fn taft_inclusion_is_hopf() {
        let p = taft_pair(3).unwrap();
        assert!(verify_morphism(&p.iota).all_passed());
        assert!(verify_morphism(&p.pi).all_passed());
        assert_eq!(
            &p.pi.matrix * &p.iota.matrix,
            Matrix::identity(p.k.field(), 3)
        );
    }

    #[test]
    fn taft_three_and_five_pass() {
        for n in [3, 5] {
            let h = taft(n).unwrap();
            let r = verify_hopf(&h);
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn biproduct_matches_taft() {
        for n in [2, 3] {
            let k = Arc::new(cyclic_group_algebra(n).unwrap());
            let b = nichols_taft(&k).unwrap();
            let r = verify_yd_hopf(&b);
            assert!(r.all_passed(), "{}", r.to_text());
            let bp = biproduct(&b).unwrap();
            assert!(verify_hopf(&bp.h).all_passed());
            let t = taft(n).unwrap();
            let p = taft_biproduct_basis_change(n);
            let r = structure_equal_under(&t, &bp.h, &p);
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn bstar_product_table() {
        let n = 3;
        let k = Arc::new(cyclic_group_algebra(n).unwrap());
        let bp = biproduct(&nichols_taft(&k).unwrap()).unwrap();
        let a = a_hk(&bp).unwrap();
        let f = k.field();
        let q = Scalar::root_pow(f, 3, 1);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let want = if l == i + j {
                        &qbinomial((i + j) as i64, i as i64, &q).unwrap()
                            * &Scalar::root_pow(f, 3, -((i * j) as i64))
                    } else {
                        Scalar::zero(f)
                    };
                    assert_eq!(a.monoid.mul.get(l, i * n + j), &want, "f{i} f{j} at f{l}");
                }
            }
        }
    }
}
