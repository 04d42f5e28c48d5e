//! The coherence catalog of a monoidal adjunction, checked on finite families.

use super::{
    generic_lproj, generic_rproj, CObj, DObj, Families, MonoidalAdjunction, StrictMonoidal,
};
use crate::report::Report;

/// Catalog ids in reporting order.
pub const CATALOG_IDS: [&str; 14] = [
    "lax_associativity",
    "lax_unitality",
    "zigzag",
    "unit_monoidal",
    "counit_monoidal",
    "lax_from_proj",
    "lproj_lax_compat",
    "proj_unit_object",
    "proj_tensor",
    "lrproj_coherence",
    "rproj_lax_compat",
    "alt_proj",
    "monad_unit",
    "monad_multiplication",
];

/// Ids checked by [`verify_adjunction_axioms`].
const AXIOM_IDS: [&str; 5] = [
    "lax_associativity",
    "lax_unitality",
    "zigzag",
    "unit_monoidal",
    "counit_monoidal",
];

/// Index tuples of a family whose dimension product stays within a budget.
/// Triples use half the budget.
#[derive(Clone, Debug, Default)]
pub struct Tuples {
    pub c1: Vec<usize>,
    pub d1: Vec<usize>,
    pub cd: Vec<(usize, usize)>,
    pub dd: Vec<(usize, usize)>,
    pub ddd: Vec<(usize, usize, usize)>,
    pub cdd: Vec<(usize, usize, usize)>,
    pub ccd: Vec<(usize, usize, usize)>,
    pub cdc: Vec<(usize, usize, usize)>,
}

impl Tuples {
    pub fn new(cdims: &[usize], ddims: &[usize], budget: usize) -> Self {
        let half = budget / 2;
        let nc = cdims.len();
        let nd = ddims.len();
        let mut t = Tuples {
            c1: (0..nc).collect(),
            d1: (0..nd).collect(),
            ..Default::default()
        };
        for a in 0..nc {
            for x in 0..nd {
                if cdims[a] * ddims[x] <= budget {
                    t.cd.push((a, x));
                }
            }
        }
        for x in 0..nd {
            for y in 0..nd {
                if ddims[x] * ddims[y] <= budget {
                    t.dd.push((x, y));
                }
                for z in 0..nd {
                    if ddims[x] * ddims[y] * ddims[z] <= half {
                        t.ddd.push((x, y, z));
                    }
                }
            }
        }
        for a in 0..nc {
            for x in 0..nd {
                for y in 0..nd {
                    if cdims[a] * ddims[x] * ddims[y] <= half {
                        t.cdd.push((a, x, y));
                    }
                }
                for b in 0..nc {
                    if cdims[a] * cdims[b] * ddims[x] <= half {
                        t.ccd.push((a, b, x));
                        t.cdc.push((a, x, b));
                    }
                }
            }
        }
        t
    }
}

fn tuples_of<A: MonoidalAdjunction>(
    adj: &A,
    fam: &Families<CObj<A>, DObj<A>>,
    budget: usize,
) -> Tuples {
    let cd: Vec<usize> = fam.c.iter().map(|(_, o)| adj.c().dim(o)).collect();
    let dd: Vec<usize> = fam.d.iter().map(|(_, o)| adj.d().dim(o)).collect();
    Tuples::new(&cd, &dd, budget)
}

/// The full 14-id catalog.
pub fn verify_catalog<A: MonoidalAdjunction>(
    adj: &A,
    fam: &Families<CObj<A>, DObj<A>>,
    budget: usize,
) -> Report {
    run_catalog(
        adj,
        fam,
        budget,
        &CATALOG_IDS,
        format!("catalog: {}", adj.name()),
    )
}

/// Zigzags, lax (co)associativity and unitality, and the monoidal
/// transformation squares for unit and counit.
pub fn verify_adjunction_axioms<A: MonoidalAdjunction>(
    adj: &A,
    fam: &Families<CObj<A>, DObj<A>>,
    budget: usize,
) -> Report {
    run_catalog(
        adj,
        fam,
        budget,
        &AXIOM_IDS,
        format!("axioms: {}", adj.name()),
    )
}

fn run_catalog<A: MonoidalAdjunction>(
    adj: &A,
    fam: &Families<CObj<A>, DObj<A>>,
    budget: usize,
    ids: &[&str],
    title: String,
) -> Report {
    let t = tuples_of(adj, fam, budget);
    let c = adj.c();
    let d = adj.d();
    let cu = c.unit_obj();
    let du = d.unit_obj();
    let co = |i: usize| &fam.c[i].1;
    let dobj = |i: usize| &fam.d[i].1;
    let cl = |i: usize| fam.c[i].0.as_str();
    let dl = |i: usize| fam.d[i].0.as_str();
    let cid = |o: &CObj<A>| c.id(o);
    let mut r = Report::new(title);
    let on = |id: &str| ids.contains(&id);

    if on("lax_associativity") {
        for &(xi, yi, zi) in &t.ddd {
            let (x, y, z) = (dobj(xi), dobj(yi), dobj(zi));
            let label = || format!("X={}, Y={}, Z={}", dl(xi), dl(yi), dl(zi));
            r.timed("lax_associativity", label, || {
                let xy = d.tensor(x, y);
                let yz = d.tensor(y, z);
                let lhs = &adj.lax(&xy, z) * &adj.lax(x, y).kron(&cid(&adj.r_obj(z)));
                let rhs = &adj.lax(x, &yz) * &cid(&adj.r_obj(x)).kron(&adj.lax(y, z));
                lhs == rhs
            });
        }
    }
    if on("lax_unitality") {
        for &x in &t.d1 {
            let xo = dobj(x);
            r.timed(
                "lax_unitality",
                || format!("X={}", dl(x)),
                || {
                    let rx = adj.r_obj(xo);
                    let id = cid(&rx);
                    let l = &adj.lax(&du, xo) * &adj.lax0().kron(&id);
                    let rr = &adj.lax(xo, &du) * &id.kron(&adj.lax0());
                    l == id && rr == id
                },
            );
        }
    }
    if on("zigzag") {
        for &x in &t.d1 {
            let xo = dobj(x);
            r.timed(
                "zigzag",
                || format!("X={}", dl(x)),
                || {
                    let rx = adj.r_obj(xo);
                    let grx = adj.g_obj(&rx);
                    &adj.r_map(&grx, xo, &adj.counit(xo)) * &adj.unit(&rx) == cid(&rx)
                },
            );
        }
        for &a in &t.c1 {
            let ao = co(a);
            r.timed(
                "zigzag",
                || format!("A={}", cl(a)),
                || {
                    let ga = adj.g_obj(ao);
                    &adj.counit(&ga) * &adj.g_map(&adj.unit(ao)) == d.id(&ga)
                },
            );
        }
    }
    if on("unit_monoidal") {
        r.timed(
            "unit_monoidal",
            || "A=𝟙".into(),
            || adj.unit(&cu) == adj.lax0(),
        );
        for &(a, b, _) in t.ccd.iter().filter(|e| e.2 == 0) {
            let (ao, bo) = (co(a), co(b));
            r.timed(
                "unit_monoidal",
                || format!("A={}, B={}", cl(a), cl(b)),
                || {
                    let ab = c.tensor(ao, bo);
                    let ga = adj.g_obj(ao);
                    let gb = adj.g_obj(bo);
                    adj.unit(&ab) == &adj.lax(&ga, &gb) * &adj.unit(ao).kron(&adj.unit(bo))
                },
            );
        }
    }
    if on("counit_monoidal") {
        r.timed(
            "counit_monoidal",
            || "X=𝟙".into(),
            || &adj.counit(&du) * &adj.g_map(&adj.lax0()) == d.id(&du),
        );
        for &(x, y) in &t.dd {
            let (xo, yo) = (dobj(x), dobj(y));
            r.timed(
                "counit_monoidal",
                || format!("X={}, Y={}", dl(x), dl(y)),
                || {
                    let xy = d.tensor(xo, yo);
                    &adj.counit(&xy) * &adj.g_map(&adj.lax(xo, yo))
                        == adj.counit(xo).kron(&adj.counit(yo))
                },
            );
        }
    }
    if on("lax_from_proj") {
        for &(x, y) in &t.dd {
            let (xo, yo) = (dobj(x), dobj(y));
            r.timed(
                "lax_from_proj",
                || format!("X={}, Y={}", dl(x), dl(y)),
                || {
                    let rx = adj.r_obj(xo);
                    let ry = adj.r_obj(yo);
                    let grx = adj.g_obj(&rx);
                    let gry = adj.g_obj(&ry);
                    let xy = d.tensor(xo, yo);
                    let lax = adj.lax(xo, yo);
                    let l = &adj.r_map(&d.tensor(&grx, yo), &xy, &adj.counit(xo).kron(&d.id(yo)))
                        * &adj.lproj(&rx, yo);
                    let rr = &adj.r_map(&d.tensor(xo, &gry), &xy, &d.id(xo).kron(&adj.counit(yo)))
                        * &adj.rproj(xo, &ry);
                    l == lax && rr == lax
                },
            );
        }
    }
    if on("lproj_lax_compat") {
        for &(a, x, y) in &t.cdd {
            let (ao, xo, yo) = (co(a), dobj(x), dobj(y));
            r.timed(
                "lproj_lax_compat",
                || format!("A={}, X={}, Y={}", cl(a), dl(x), dl(y)),
                || {
                    let ga = adj.g_obj(ao);
                    let xy = d.tensor(xo, yo);
                    let ry = adj.r_obj(yo);
                    let lhs = &adj.lproj(ao, &xy) * &cid(ao).kron(&adj.lax(xo, yo));
                    let rhs = &adj.lax(&d.tensor(&ga, xo), yo) * &adj.lproj(ao, xo).kron(&cid(&ry));
                    lhs == rhs
                },
            );
        }
    }
    if on("proj_unit_object") {
        for &x in &t.d1 {
            let xo = dobj(x);
            r.timed(
                "proj_unit_object",
                || format!("X={}", dl(x)),
                || {
                    let id = cid(&adj.r_obj(xo));
                    adj.lproj(&cu, xo) == id && adj.rproj(xo, &cu) == id
                },
            );
        }
    }
    if on("proj_tensor") {
        for &(a, b, x) in &t.ccd {
            let (ao, bo, xo) = (co(a), co(b), dobj(x));
            r.timed(
                "proj_tensor",
                || format!("A={}, B={}, X={}", cl(a), cl(b), dl(x)),
                || {
                    let ab = c.tensor(ao, bo);
                    let ga = adj.g_obj(ao);
                    let gb = adj.g_obj(bo);
                    let l = adj.lproj(&ab, xo)
                        == &adj.lproj(ao, &d.tensor(&gb, xo)) * &cid(ao).kron(&adj.lproj(bo, xo));
                    let rr = adj.rproj(xo, &ab)
                        == &adj.rproj(&d.tensor(xo, &ga), bo) * &adj.rproj(xo, ao).kron(&cid(bo));
                    l && rr
                },
            );
        }
    }
    if on("lrproj_coherence") {
        for &(a, x, b) in &t.cdc {
            let (ao, xo, bo) = (co(a), dobj(x), co(b));
            r.timed(
                "lrproj_coherence",
                || format!("A={}, X={}, B={}", cl(a), dl(x), cl(b)),
                || {
                    let ga = adj.g_obj(ao);
                    let gb = adj.g_obj(bo);
                    let lhs =
                        &adj.lproj(ao, &d.tensor(xo, &gb)) * &cid(ao).kron(&adj.rproj(xo, bo));
                    let rhs =
                        &adj.rproj(&d.tensor(&ga, xo), bo) * &adj.lproj(ao, xo).kron(&cid(bo));
                    lhs == rhs
                },
            );
        }
    }
    if on("rproj_lax_compat") {
        for &(a, x, y) in &t.cdd {
            let (ao, xo, yo) = (co(a), dobj(x), dobj(y));
            r.timed(
                "rproj_lax_compat",
                || format!("X={}, Y={}, A={}", dl(x), dl(y), cl(a)),
                || {
                    let ga = adj.g_obj(ao);
                    let xy = d.tensor(xo, yo);
                    let rx = adj.r_obj(xo);
                    let lhs = &adj.rproj(&xy, ao) * &adj.lax(xo, yo).kron(&cid(ao));
                    let rhs = &adj.lax(xo, &d.tensor(yo, &ga)) * &cid(&rx).kron(&adj.rproj(yo, ao));
                    lhs == rhs
                },
            );
        }
    }
    if on("alt_proj") {
        for &(a, x) in &t.cd {
            let (ao, xo) = (co(a), dobj(x));
            r.timed(
                "alt_proj",
                || format!("A={}, X={}", cl(a), dl(x)),
                || {
                    let ga = adj.g_obj(ao);
                    let rx = adj.r_obj(xo);
                    let grx = adj.g_obj(&rx);
                    let arx = c.tensor(ao, &rx);
                    let l = &adj.r_map(
                        &d.tensor(&ga, &grx),
                        &d.tensor(&ga, xo),
                        &d.id(&ga).kron(&adj.counit(xo)),
                    ) * &adj.unit(&arx);
                    let rxa = c.tensor(&rx, ao);
                    let rr = &adj.r_map(
                        &d.tensor(&grx, &ga),
                        &d.tensor(xo, &ga),
                        &adj.counit(xo).kron(&d.id(&ga)),
                    ) * &adj.unit(&rxa);
                    l == adj.lproj(ao, xo) && rr == adj.rproj(xo, ao)
                },
            );
        }
    }
    if on("monad_unit") {
        for &a in &t.c1 {
            let ao = co(a);
            r.timed(
                "monad_unit",
                || format!("A={}", cl(a)),
                || &adj.lproj(ao, &du) * &cid(ao).kron(&adj.lax0()) == adj.unit(ao),
            );
        }
    }
    if on("monad_multiplication") {
        let r1 = adj.r_obj(&du);
        for &a in &t.c1 {
            let ao = co(a);
            if c.dim(ao) * c.dim(&r1) * c.dim(&r1) > budget * budget {
                continue;
            }
            r.timed(
                "monad_multiplication",
                || format!("A={}", cl(a)),
                || {
                    let ga = adj.g_obj(ao);
                    let theta = adj.lproj(ao, &du);
                    let am = c.tensor(ao, &r1);
                    let theta_am = adj.lproj(&am, &du);
                    let rga = adj.r_obj(&ga);
                    let grga = adj.g_obj(&rga);
                    let lhs = &theta * &cid(ao).kron(&adj.lax(&du, &du));
                    let rhs = &(&adj.r_map(&grga, &ga, &adj.counit(&ga))
                        * &adj.r_map(&adj.g_obj(&am), &grga, &adj.g_map(&theta)))
                        * &theta_am;
                    lhs == rhs
                },
            );
        }
    }
    r
}

/// Roundtrips of the projection inverses, closed forms against the generic
/// composites, the mate of the strong structure of G, and morphism checks.
pub fn verify_extras<A: MonoidalAdjunction>(
    adj: &A,
    fam: &Families<CObj<A>, DObj<A>>,
    budget: usize,
) -> Report {
    let t = tuples_of(adj, fam, budget);
    let c = adj.c();
    let d = adj.d();
    let mut r = Report::new(format!("extras: {}", adj.name()));
    for &(a, x) in &t.cd {
        let (al, ao) = (&fam.c[a].0, &fam.c[a].1);
        let (xl, xo) = (&fam.d[x].0, &fam.d[x].1);
        let label = || format!("A={al}, X={xl}");
        let ga = adj.g_obj(ao);
        let lp = adj.lproj(ao, xo);
        let rp = adj.rproj(xo, ao);
        r.timed("proj_roundtrip", label, || {
            let rx = adj.r_obj(xo);
            let id_src = c.id(&c.tensor(ao, &rx));
            let id_tgt = c.id(&adj.r_obj(&d.tensor(&ga, xo)));
            let id_src_r = c.id(&c.tensor(&rx, ao));
            let id_tgt_r = c.id(&adj.r_obj(&d.tensor(xo, &ga)));
            match (adj.lproj_inv(ao, xo), adj.rproj_inv(xo, ao)) {
                (Ok(li), Ok(ri)) => {
                    &lp * &li == id_tgt
                        && &li * &lp == id_src
                        && &rp * &ri == id_tgt_r
                        && &ri * &rp == id_src_r
                }
                _ => false,
            }
        });
        r.timed("proj_closed_form", label, || {
            lp == generic_lproj(adj, ao, xo) && rp == generic_rproj(adj, xo, ao)
        });
        r.timed("proj_is_morphism", label, || {
            let rx = adj.r_obj(xo);
            c.is_morphism(&c.tensor(ao, &rx), &adj.r_obj(&d.tensor(&ga, xo)), &lp)
                && c.is_morphism(&c.tensor(&rx, ao), &adj.r_obj(&d.tensor(xo, &ga)), &rp)
        });
    }
    for &(x, y) in &t.dd {
        let (xl, xo) = (&fam.d[x].0, &fam.d[x].1);
        let (yl, yo) = (&fam.d[y].0, &fam.d[y].1);
        let label = || format!("X={xl}, Y={yl}");
        let lax = adj.lax(xo, yo);
        r.timed("mate_lax", label, || adj.mate_lax(xo, yo) == lax);
        r.timed("lax_is_morphism", label, || {
            c.is_morphism(
                &c.tensor(&adj.r_obj(xo), &adj.r_obj(yo)),
                &adj.r_obj(&d.tensor(xo, yo)),
                &lax,
            )
        });
    }
    for (l, a) in &fam.c {
        r.timed(
            "unit_is_morphism",
            || format!("A={l}"),
            || c.is_morphism(a, &adj.r_obj(&adj.g_obj(a)), &adj.unit(a)),
        );
    }
    for (l, x) in &fam.d {
        r.timed(
            "counit_is_morphism",
            || format!("X={l}"),
            || d.is_morphism(&adj.g_obj(&adj.r_obj(x)), x, &adj.counit(x)),
        );
    }
    r
}

/// Naturality of unit, counit, lax and lproj against sampled morphisms
/// (at most `per_pair` hom-space basis elements for each ordered pair).
pub fn verify_naturality<A: MonoidalAdjunction>(
    adj: &A,
    fam: &Families<CObj<A>, DObj<A>>,
    budget: usize,
    per_pair: usize,
) -> Report {
    let c = adj.c();
    let d = adj.d();
    let mut r = Report::new(format!("naturality: {}", adj.name()));
    let small = |n: usize| n * n <= budget;
    let probe_c = fam.c.iter().find(|(_, o)| c.dim(o) == 1).map(|p| &p.1);
    let probe_d = fam.d.iter().find(|(_, o)| d.dim(o) == 1).map(|p| &p.1);
    for (xl, x) in fam.d.iter().filter(|(_, o)| small(d.dim(o))) {
        for (yl, y) in fam.d.iter().filter(|(_, o)| small(d.dim(o))) {
            let homs = d.hom_space(x, y);
            for f in homs.iter().take(per_pair) {
                let label = || format!("f: {xl} → {yl}");
                let rf = adj.r_map(x, y, f);
                r.timed("counit_natural", label, || {
                    &adj.counit(y) * &adj.g_map(&rf) == f * &adj.counit(x)
                });
                if let Some(z) = probe_d {
                    r.timed("lax_natural", label, || {
                        let rz = adj.r_obj(z);
                        let lhs = &adj.lax(y, z) * &rf.kron(&c.id(&rz));
                        let rhs = &adj.r_map(&d.tensor(x, z), &d.tensor(y, z), &f.kron(&d.id(z)))
                            * &adj.lax(x, z);
                        lhs == rhs
                    });
                }
                if let Some(a) = probe_c {
                    r.timed("lproj_natural", label, || {
                        let ga = adj.g_obj(a);
                        let lhs = &adj.lproj(a, y) * &c.id(a).kron(&rf);
                        let rhs =
                            &adj.r_map(&d.tensor(&ga, x), &d.tensor(&ga, y), &d.id(&ga).kron(f))
                                * &adj.lproj(a, x);
                        lhs == rhs
                    });
                }
            }
        }
    }
    for (al, a) in fam.c.iter().filter(|(_, o)| small(c.dim(o))) {
        for (bl, b) in fam.c.iter().filter(|(_, o)| small(c.dim(o))) {
            for g in c.hom_space(a, b).iter().take(per_pair) {
                r.timed(
                    "unit_natural",
                    || format!("g: {al} → {bl}"),
                    || {
                        let ga = adj.g_obj(a);
                        let gb = adj.g_obj(b);
                        &adj.unit(b) * g == &adj.r_map(&ga, &gb, &adj.g_map(g)) * &adj.unit(a)
                    },
                );
            }
        }
    }
    r
}
