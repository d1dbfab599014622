//! The finite sets of labels over which the invariant suites are run.

use crate::orbifold::{is_local, OrbifoldParams};
use crate::rational as rat;
use crate::structure::Indecomposable;
use crate::weights::Params;

/// Typical weights in the standard universe.
pub fn typical_weights() -> Vec<rat::Q> {
    [(1, 2), (-1, 2), (1, 3), (-1, 3), (5, 6)]
        .into_iter()
        .map(|(n, d)| rat::frac(n, d))
        .collect()
}

/// `M(r,s)` for `−2 ≤ r ≤ 3`, `P(r,s)` for `−1 ≤ r ≤ 2` and a few typical
/// Fock modules, in canonical order.
pub fn test_universe(params: &Params) -> Vec<Indecomposable> {
    let p = params.p();
    let mut out = Vec::new();
    for r in -2..=3 {
        for s in 1..=p {
            out.push(Indecomposable::M { r, s });
        }
    }
    for r in -1..=2 {
        for s in 1..p {
            out.push(Indecomposable::P { r, s });
        }
    }
    for q in typical_weights() {
        out.push(Indecomposable::F { q });
    }
    out.sort();
    out
}

/// The simple members of [`test_universe`].
pub fn simple_universe(params: &Params) -> Vec<Indecomposable> {
    test_universe(params).into_iter().filter(|x| x.is_simple()).collect()
}

/// The members of [`test_universe`] that induce to the orbifold.
pub fn local_universe(op: &OrbifoldParams) -> Vec<Indecomposable> {
    test_universe(op.singlet())
        .into_iter()
        .filter(|x| is_local(op, x))
        .collect()
}
