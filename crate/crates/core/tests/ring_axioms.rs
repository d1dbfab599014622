//! Ring axioms and compatibility of fusion with K-classes, duals, gradings and
//! the recursion oracle, over the standard universe at p = 2 and p = 3.

use proptest::prelude::*;
use singlet_core::fusion::{fuse, fuse_pair, k_product};
use singlet_core::oracle::chebyshev_fuse;
use singlet_core::rational::{self as rat, Q};
use singlet_core::structure::{dual, homogeneous_grade, k_class, unit, Indecomposable};
use singlet_core::universe::test_universe;
use singlet_core::weights::Neighbor;
use singlet_core::{ModuleExpr, Multiset, Params};

use Indecomposable::*;

fn one(x: &Indecomposable) -> ModuleExpr {
    Multiset::singleton(x.clone())
}

fn each_p(mut f: impl FnMut(&Params, &[Indecomposable])) {
    for p in [2, 3] {
        let params = Params::new(p).unwrap();
        f(&params, &test_universe(&params));
    }
}

#[test]
fn associativity_on_all_triples() {
    each_p(|params, u| {
        for x in u {
            for y in u {
                let xy = fuse_pair(params, x, y).unwrap();
                for z in u {
                    let left = fuse(params, &xy, &one(z)).unwrap();
                    let right = fuse(params, &one(x), &fuse_pair(params, y, z).unwrap()).unwrap();
                    assert_eq!(left, right, "p={} ({x}⊠{y})⊠{z}", params.p());
                }
            }
        }
    });
}

#[test]
fn commutativity_and_unit() {
    each_p(|params, u| {
        for x in u {
            assert_eq!(fuse_pair(params, &unit(), x).unwrap(), one(x));
            for y in u {
                assert_eq!(fuse_pair(params, x, y).unwrap(), fuse_pair(params, y, x).unwrap());
            }
        }
    });
}

#[test]
fn k_class_is_a_ring_homomorphism() {
    each_p(|params, u| {
        for x in u {
            for y in u {
                let lhs = k_class(params, &fuse_pair(params, x, y).unwrap());
                let rhs = k_product(params, &x.k_class(params), &y.k_class(params)).unwrap();
                assert_eq!(lhs, rhs, "p={} {x}⊠{y}", params.p());
            }
        }
    });
}

#[test]
fn products_are_projective_when_a_factor_is() {
    each_p(|params, u| {
        for x in u.iter().filter(|x| x.is_projective(params)) {
            for y in u {
                let prod = fuse_pair(params, x, y).unwrap();
                assert!(prod.iter().all(|(z, _)| z.is_projective(params)), "{x}⊠{y} = {prod}");
            }
        }
    });
}

#[test]
fn duality_is_monoidal() {
    each_p(|params, u| {
        for x in u {
            for y in u {
                let lhs = dual(params, &fuse_pair(params, x, y).unwrap()).unwrap();
                let rhs = fuse_pair(params, &x.dual(params).unwrap(), &y.dual(params).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "p={} {x}⊠{y}", params.p());
            }
        }
    });
}

#[test]
fn gradings_add() {
    each_p(|params, u| {
        for x in u {
            for y in u {
                let expected = rat::reduce_mod(&(x.t_grade(params) + y.t_grade(params)), &rat::int(2));
                let prod = fuse_pair(params, x, y).unwrap();
                assert_eq!(homogeneous_grade(params, &prod), Some(expected), "{x}⊠{y}");
            }
        }
    });
}

#[test]
fn oracle_agrees_with_closed_forms() {
    each_p(|params, u| {
        for x in u {
            for y in u {
                assert_eq!(
                    chebyshev_fuse(params, &one(x), &one(y)).unwrap(),
                    fuse_pair(params, x, y).unwrap(),
                    "p={} {x}⊠{y}",
                    params.p()
                );
            }
        }
    });
}

#[test]
fn oracle_agrees_for_larger_p() {
    for p in [4, 5] {
        let params = Params::new(p).unwrap();
        let u = test_universe(&params);
        for x in &u {
            for y in &u {
                assert_eq!(
                    chebyshev_fuse(&params, &one(x), &one(y)).unwrap(),
                    fuse_pair(&params, x, y).unwrap(),
                    "p={p} {x}⊠{y}"
                );
            }
        }
    }
}

fn typical_q() -> impl Strategy<Value = Q> {
    (-40i64..40, 2i64..13)
        .prop_filter("typical", |(n, d)| n % d != 0)
        .prop_map(|(n, d)| rat::frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fock_times_contragredient(p in 2i64..6, q in typical_q()) {
        let params = Params::new(p).unwrap();
        let x = F { q: q.clone() };
        let prod = fuse_pair(&params, &x, &x.dual(&params).unwrap()).unwrap();
        let expected: ModuleExpr = (1..=p)
            .step_by(2)
            .map(|s| Indecomposable::proj(&params, 1, s).unwrap())
            .collect();
        prop_assert_eq!(prod, expected);
    }

    #[test]
    fn triple_product(p in 2i64..5, q in typical_q(), q2 in typical_q()) {
        let params = Params::new(p).unwrap();
        let a = F { q: q.clone() };
        let b = F { q: q2.clone() };
        let lhs = fuse(&params, &fuse_pair(&params, &a, &b).unwrap(), &one(&b.dual(&params).unwrap())).unwrap();
        let mut rhs = ModuleExpr::new();
        for l in 0..p {
            for l2 in 0..p {
                rhs.insert(F { q: &q + rat::int(2 - 2 * p + 2 * (l + l2)) }, 1);
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn neighbors_of_m12_products(p in 2i64..7, q in typical_q()) {
        let params = Params::new(p).unwrap();
        let w = params.weight(q.clone());
        let allowed = w.allowed_neighbor_weights(Neighbor::Via12);
        for (y, _) in &fuse_pair(&params, &M { r: 1, s: 2 }, &F { q }).unwrap() {
            prop_assert!(allowed.contains(&y.lowest_weight(&params)));
        }
    }

    #[test]
    fn oracle_matches_on_random_fock_pairs(p in 2i64..5, q in typical_q(), q2 in typical_q()) {
        let params = Params::new(p).unwrap();
        let a = one(&F { q });
        let b = one(&F { q: q2 });
        prop_assert_eq!(chebyshev_fuse(&params, &a, &b).unwrap(), fuse(&params, &a, &b).unwrap());
    }
}
