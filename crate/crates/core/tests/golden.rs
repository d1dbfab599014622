//! Closed-form instances of the fusion, structure and orbifold rules.

use singlet_core::fusion::{fuse, fuse_pair, projective_decompose};
use singlet_core::oracle::chebyshev_fuse;
use singlet_core::orbifold::{
    induce, list_simples, orbifold_fuse, orbifold_projective_cover, OrbifoldIndec, OrbifoldParams,
};
use singlet_core::rational as rat;
use singlet_core::structure::{k_class, verma_quotient_factors, virasoro_induce, Indecomposable};
use singlet_core::{ModuleExpr, Multiset, Params};

use Indecomposable::*;

fn pr(p: i64) -> Params {
    Params::new(p).unwrap()
}
fn m(r: i64, s: i64) -> Indecomposable {
    M { r, s }
}
fn pp(r: i64, s: i64) -> Indecomposable {
    P { r, s }
}
fn f(n: i64, d: i64) -> Indecomposable {
    F { q: rat::frac(n, d) }
}
fn sum(items: &[(Indecomposable, u64)]) -> ModuleExpr {
    items.iter().cloned().collect()
}

/// `(p, x, y, x ⊠ y)`.
fn fusion_table() -> Vec<(i64, Indecomposable, Indecomposable, ModuleExpr)> {
    vec![
        (2, m(1, 2), m(1, 2), sum(&[(pp(1, 1), 1)])),
        (3, m(1, 2), m(1, 2), sum(&[(m(1, 1), 1), (m(1, 3), 1)])),
        (2, m(1, 1), m(2, 2), sum(&[(m(2, 2), 1)])),
        (2, m(2, 1), f(1, 2), sum(&[(f(5, 2), 1)])),
        (2, m(1, 2), f(1, 2), sum(&[(f(-1, 2), 1), (f(3, 2), 1)])),
        (3, m(1, 3), f(1, 3), sum(&[(f(-5, 3), 1), (f(1, 3), 1), (f(7, 3), 1)])),
        (2, pp(1, 1), f(1, 2), sum(&[(f(-3, 2), 1), (f(1, 2), 2), (f(5, 2), 1)])),
        (2, pp(2, 1), f(1, 2), sum(&[(f(1, 2), 1), (f(5, 2), 2), (f(9, 2), 1)])),
        (
            3,
            pp(1, 2),
            f(1, 2),
            sum(&[(f(-5, 2), 1), (f(-1, 2), 2), (f(3, 2), 2), (f(7, 2), 1)]),
        ),
        (2, f(1, 2), f(1, 3), sum(&[(f(5, 6), 1), (f(17, 6), 1)])),
        (2, f(1, 2), f(-1, 2), sum(&[(pp(2, 1), 1)])),
        (2, f(1, 2), f(-5, 2), sum(&[(pp(1, 1), 1)])),
        (3, f(1, 2), f(-1, 2), sum(&[(m(3, 3), 1), (pp(2, 2), 1)])),
        (2, m(2, 1), pp(1, 1), sum(&[(pp(2, 1), 1)])),
        (
            2,
            pp(1, 1),
            pp(1, 1),
            sum(&[(pp(0, 1), 1), (pp(1, 1), 2), (pp(2, 1), 1)]),
        ),
        (2, m(1, 2), pp(1, 1), sum(&[(m(0, 2), 1), (m(1, 2), 2), (m(2, 2), 1)])),
    ]
}

#[test]
fn fusion_golden_table() {
    for (p, x, y, want) in fusion_table() {
        let params = pr(p);
        assert_eq!(fuse_pair(&params, &x, &y).unwrap(), want, "p={p} {x}⊠{y}");
        let (a, b) = (Multiset::singleton(x.clone()), Multiset::singleton(y.clone()));
        assert_eq!(chebyshev_fuse(&params, &a, &b).unwrap(), want, "oracle p={p} {x}⊠{y}");
    }
}

#[test]
fn fock_with_its_contragredient_gives_odd_projectives() {
    for p in [2, 3, 4, 5, 6] {
        let params = pr(p);
        let x = f(1, 2);
        let want: ModuleExpr = (1..=p)
            .step_by(2)
            .map(|s| Indecomposable::proj(&params, 1, s).unwrap())
            .collect();
        assert_eq!(fuse_pair(&params, &x, &x.dual(&params).unwrap()).unwrap(), want);
    }
}

#[test]
fn decomposition_inverts_k_classes() {
    let p2 = pr(2);
    let k = sum(&[(m(1, 1), 6), (m(0, 1), 4), (m(2, 1), 4), (m(-1, 1), 1), (m(3, 1), 1)]);
    let x = projective_decompose(&p2, &k).unwrap();
    assert_eq!(x, sum(&[(pp(0, 1), 1), (pp(1, 1), 2), (pp(2, 1), 1)]));
    assert_eq!(k_class(&p2, &x), k);
}

#[test]
fn structure_examples() {
    assert_eq!(
        verma_quotient_factors(&pr(3), 1, 2).unwrap(),
        sum(&[(m(1, 2), 1), (m(0, 2), 1), (m(2, 2), 1)])
    );
    assert_eq!(
        virasoro_induce(&pr(3), 3, 2).unwrap(),
        sum(&[(m(-1, 2), 1), (m(1, 2), 1), (m(3, 2), 1)])
    );
    let p2 = pr(2);
    assert_eq!(m(2, 1).dual(&p2).unwrap(), m(0, 1));
    assert_eq!(f(1, 2).dual(&p2).unwrap(), f(-5, 2));
}

#[test]
fn orbifold_examples() {
    for (p, mm) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 2)] {
        let op = OrbifoldParams::new(p, mm).unwrap();
        let simples = list_simples(&op);
        assert_eq!(simples.len() as i64, 2 * p * mm * mm);
        let mut dedup = simples.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), simples.len());
    }

    let op = OrbifoldParams::new(2, 2).unwrap();
    let w = |r, s| OrbifoldIndec::W { r, s };
    let v = |n, d| OrbifoldIndec::V { q: rat::frac(n, d) };
    let one = Multiset::singleton;
    assert_eq!(orbifold_fuse(&op, &one(w(3, 1)), &one(w(3, 1))).unwrap(), one(w(1, 1)));
    assert_eq!(
        orbifold_fuse(&op, &one(w(1, 2)), &one(v(1, 2))).unwrap(),
        [v(15, 2), v(3, 2)].into_iter().collect()
    );
    assert_eq!(induce(&op, &Multiset::singleton(m(5, 1))).unwrap(), one(w(1, 1)));
    let (_, layers) = orbifold_projective_cover(&op, &w(0, 1)).unwrap();
    assert_eq!(layers[1], vec![w(3, 1), w(1, 1)]);
}

#[test]
fn mixed_sums_fuse_bilinearly() {
    let p2 = pr(2);
    let x = sum(&[(m(1, 2), 2), (f(1, 2), 1)]);
    let y = sum(&[(m(2, 1), 1), (pp(1, 1), 1)]);
    let mut want = ModuleExpr::new();
    for (a, ma) in &x {
        for (b, mb) in &y {
            want.add_scaled(&fuse_pair(&p2, a, b).unwrap(), ma * mb);
        }
    }
    assert_eq!(fuse(&p2, &x, &y).unwrap(), want);
}
