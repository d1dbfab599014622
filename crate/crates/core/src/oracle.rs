//! An independent route to tensor products, used to cross-check [`crate::fusion`].
//!
//! Only a handful of base rules enter: `M(1,2) ⊠ X` for every species, and the
//! simple current `M(2,1)`, which shifts `r ↦ r + 1` and `q ↦ q + p`.
//! Everything else follows by recursion:
//!
//! * `M(1,s+1) ⊠ X = M(1,2) ⊠ (M(1,s) ⊠ X) ⊖ M(1,s−1) ⊠ X`,
//! * `P(1,s)` from `M(1,2) ⊠ P(1,s+1) = P(1,s) ⊕ P(1,s+2)` downwards, starting
//!   at `M(1,2) ⊠ M(1,p) = P(1,p−1)`,
//! * `F ⊠ F` with integral weight sum by counting homomorphisms into simples:
//!   the multiplicity of the cover of `M(r,s)` in `F_λ ⊠ F_μ` equals the
//!   number of copies of `F_λ` in `M(r,s) ⊠ F_{α₀−μ}`,
//! * `F ⊠ F` with generic weight sum from the triple product
//!   `F_λ ⊠ F_μ ⊠ F_{α₀−μ}`, whose Fock multiplicities are the convolution
//!   square of the unknown ones.
//!
//! Subtractions that would go negative are reported rather than clamped.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::rational::{self as rat, Q};
use crate::structure::{Indecomposable, ModuleExpr};
use crate::weights::Params;

use Indecomposable::*;

/// Tensor product computed by the recursion oracle.
pub fn chebyshev_fuse(params: &Params, x: &ModuleExpr, y: &ModuleExpr) -> Result<ModuleExpr> {
    let mut out = ModuleExpr::new();
    for (a, ma) in x {
        let a = a.normalized(params)?;
        for (b, mb) in y {
            let b = b.normalized(params)?;
            out.add_scaled(&pair(params, &a, &b)?, ma * mb);
        }
    }
    Ok(out)
}

fn pair(params: &Params, a: &Indecomposable, b: &Indecomposable) -> Result<ModuleExpr> {
    for z in [a, b] {
        if matches!(z, Fa { .. } | G { .. }) {
            return Err(Error::UnsupportedSpecies {
                op: "chebyshev_fuse",
                species: z.to_string(),
            });
        }
    }
    let y = Multiset::singleton(b.clone());
    match (a, b) {
        (M { r, s }, _) => Ok(shift(params, r - 1, &m1s(params, *s, &y)?)),
        (P { r, s }, _) => Ok(shift(params, r - 1, &p1s(params, *s, &y)?)),
        (F { .. }, M { .. } | P { .. }) => pair(params, b, a),
        (F { q }, F { q: q2 }) => fock_fock(params, q, q2),
        _ => unreachable!("species filtered above"),
    }
}

/// `M(2,1)^{⊠k} ⊠ x`.
fn shift(params: &Params, k: i64, x: &ModuleExpr) -> ModuleExpr {
    x.map(|m| match m {
        M { r, s } => M { r: r + k, s: *s },
        P { r, s } => P { r: r + k, s: *s },
        F { q } => F {
            q: q + rat::int(k * params.p()),
        },
        other => other.clone(),
    })
}

/// `M(1,2) ⊠ x` from the base rules.
fn m12(params: &Params, x: &ModuleExpr) -> Result<ModuleExpr> {
    let p = params.p();
    x.try_flat_map(|m| {
        let items: Vec<(Indecomposable, u64)> = match m {
            M { r, s: 1 } => vec![(M { r: *r, s: 2 }, 1)],
            M { r, s } if *s == p => vec![(Indecomposable::proj(params, *r, p - 1)?, 1)],
            M { r, s } => vec![(M { r: *r, s: s - 1 }, 1), (M { r: *r, s: s + 1 }, 1)],
            F { q } => vec![(F { q: q - rat::int(1) }, 1), (F { q: q + rat::int(1) }, 1)],
            P { r, s: _ } if p == 2 => vec![
                (M { r: r - 1, s: 2 }, 1),
                (M { r: *r, s: 2 }, 2),
                (M { r: r + 1, s: 2 }, 1),
            ],
            P { r, s: 1 } => vec![
                (P { r: *r, s: 2 }, 1),
                (M { r: r - 1, s: p }, 1),
                (M { r: r + 1, s: p }, 1),
            ],
            P { r, s } if *s == p - 1 => vec![(P { r: *r, s: p - 2 }, 1), (M { r: *r, s: p }, 2)],
            P { r, s } => vec![(P { r: *r, s: s - 1 }, 1), (P { r: *r, s: s + 1 }, 1)],
            other => {
                return Err(Error::UnsupportedSpecies {
                    op: "chebyshev_fuse",
                    species: other.to_string(),
                })
            }
        };
        Ok(items.into_iter().collect())
    })
}

fn subtract(a: &ModuleExpr, b: &ModuleExpr) -> Result<ModuleExpr> {
    a.checked_sub(b)
        .map_err(|item| Error::OracleSubtractionFailure(format!("({a}) - ({b}) at {item}")))
}

/// `M(1,s) ⊠ y`.
fn m1s(params: &Params, s: i64, y: &ModuleExpr) -> Result<ModuleExpr> {
    let mut prev = y.clone();
    if s == 1 {
        return Ok(prev);
    }
    let mut cur = m12(params, y)?;
    for _ in 2..s {
        let next = subtract(&m12(params, &cur)?, &prev)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `P(1,s) ⊠ y` for `s < p`.
fn p1s(params: &Params, s: i64, y: &ModuleExpr) -> Result<ModuleExpr> {
    let p = params.p();
    let top = m1s(params, p, y)?;
    // cur = P(1,t) ⊠ y and above = P(1,t+1) ⊠ y, walking t down from p−1;
    // M(1,2) ⊠ P(1,p−1) contains M(1,p) twice
    let mut above = top.clone();
    let mut cur = m12(params, &top)?;
    let mut t = p - 1;
    while t > s {
        let drop = if t == p - 1 { top.scaled(2) } else { above.clone() };
        let next = subtract(&m12(params, &cur)?, &drop)?;
        above = cur;
        cur = next;
        t -= 1;
    }
    Ok(cur)
}

fn fock_fock(params: &Params, q: &Q, q2: &Q) -> Result<ModuleExpr> {
    let p = params.p();
    let alpha0 = rat::int(2 - 2 * p);
    let sum = q + q2;
    if rat::is_integer(&sum) {
        let n =
            rat::to_i64(&sum).ok_or_else(|| Error::domain("chebyshev_fuse", "weight sum out of range"))? - (2 - 2 * p);
        let target = F { q: q.clone() };
        let partner = F { q: &alpha0 - q2 };
        let mut out = ModuleExpr::new();
        let lo = n.div_euclid(p) - 3;
        let hi = n.div_euclid(p) + 3;
        for r in lo..=hi {
            for s in 1..=p {
                let count = pair(params, &M { r: r + 1, s }, &partner)?.get(&target);
                if count > 0 {
                    out.insert(Indecomposable::proj(params, r + 1, s)?, count);
                }
            }
        }
        return Ok(out);
    }

    // generic sum: T = F_q ⊠ (F_{q2} ⊠ F_{α₀−q2}) has Fock summands at
    // q + α₀ + 2k with multiplicities c = b ∗ b
    let middle = fock_fock(params, q2, &(&alpha0 - q2))?;
    let triple = chebyshev_fuse(params, &middle, &Multiset::singleton(F { q: q.clone() }))?;
    let base = q + &alpha0;
    let mut c: BTreeMap<i64, i128> = BTreeMap::new();
    for (m, mult) in &triple {
        let k = match m {
            F { q: t } => rat::to_i64(&((t - &base) / rat::int(2))),
            _ => None,
        }
        .ok_or_else(|| Error::OracleInconsistent(format!("unexpected summand {m} in {triple}")))?;
        c.insert(k, *mult as i128);
    }
    let b =
        convolution_sqrt(&c).ok_or_else(|| Error::OracleInconsistent(format!("{triple} is not a square profile")))?;
    Ok(b.into_iter()
        .map(|(l, mult)| {
            (
                F {
                    q: &sum + rat::int(2 * l),
                },
                mult,
            )
        })
        .collect())
}

/// The nonnegative integer sequence `b` with `b ∗ b = c`, if one exists.
fn convolution_sqrt(c: &BTreeMap<i64, i128>) -> Option<BTreeMap<i64, u64>> {
    let (&kmin, &lead) = c.iter().next()?;
    let &kmax = c.keys().next_back()?;
    if kmin.rem_euclid(2) != 0 || (kmax - kmin) % 2 != 0 {
        return None;
    }
    let b0 = (lead as f64).sqrt().round() as i128;
    if b0 * b0 != lead {
        return None;
    }
    let lmin = kmin / 2;
    let len = ((kmax - kmin) / 2 + 1) as usize;
    let mut b = vec![b0];
    for j in 1..len {
        let mut rest = c.get(&(kmin + j as i64)).copied().unwrap_or(0);
        for i in 1..j {
            rest -= b[i] * b[j - i];
        }
        if rest < 0 || rest % (2 * b0) != 0 {
            return None;
        }
        b.push(rest / (2 * b0));
    }
    let mut square: BTreeMap<i64, i128> = BTreeMap::new();
    for (i, x) in b.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if x * y != 0 {
                *square.entry(kmin + (i + j) as i64).or_insert(0) += x * y;
            }
        }
    }
    if &square != c {
        return None;
    }
    Some(
        b.into_iter()
            .enumerate()
            .filter(|(_, x)| *x > 0)
            .map(|(i, x)| (lmin + i as i64, x as u64))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::fuse_pair;

    fn pr(p: i64) -> Params {
        Params::new(p).unwrap()
    }
    fn one(x: Indecomposable) -> ModuleExpr {
        Multiset::singleton(x)
    }

    #[test]
    fn m12_squares() {
        let p2 = pr(2);
        let x = one(M { r: 1, s: 2 });
        assert_eq!(chebyshev_fuse(&p2, &x, &x).unwrap(), one(P { r: 1, s: 1 }));
    }

    #[test]
    fn m12_times_projective_at_p2() {
        let p2 = pr(2);
        let got = chebyshev_fuse(&p2, &one(M { r: 1, s: 2 }), &one(P { r: 1, s: 1 })).unwrap();
        let want: ModuleExpr = [(M { r: 0, s: 2 }, 1), (M { r: 1, s: 2 }, 2), (M { r: 2, s: 2 }, 1)]
            .into_iter()
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn typical_products() {
        let p3 = pr(3);
        let got = chebyshev_fuse(&p3, &one(M { r: 1, s: 3 }), &one(F { q: rat::frac(1, 3) })).unwrap();
        assert_eq!(
            got,
            fuse_pair(&p3, &M { r: 1, s: 3 }, &F { q: rat::frac(1, 3) }).unwrap()
        );
        for p in [2, 3, 4] {
            let params = pr(p);
            for (a, b) in [((1, 2), (-1, 2)), ((1, 2), (1, 3)), ((1, 3), (-5, 6)), ((2, 5), (3, 7))] {
                let x = F { q: rat::frac(a.0, a.1) };
                let y = F { q: rat::frac(b.0, b.1) };
                assert_eq!(
                    chebyshev_fuse(&params, &one(x.clone()), &one(y.clone())).unwrap(),
                    fuse_pair(&params, &x, &y).unwrap(),
                    "p={p} {x} {y}"
                );
            }
        }
    }

    #[test]
    fn projective_chain() {
        for p in [2, 3, 4, 5] {
            let params = pr(p);
            for s in 1..p {
                for y in [
                    M { r: 1, s: 1 },
                    M { r: 0, s: 2 },
                    P { r: 1, s: 1 },
                    F { q: rat::frac(1, 2) },
                ] {
                    let x = P { r: 1, s };
                    assert_eq!(
                        chebyshev_fuse(&params, &one(x.clone()), &one(y.clone())).unwrap(),
                        fuse_pair(&params, &x, &y).unwrap(),
                        "p={p} {x} {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn convolution_roots() {
        let c: BTreeMap<i64, i128> = [(0, 1), (1, 2), (2, 3), (3, 2), (4, 1)].into_iter().collect();
        let b = convolution_sqrt(&c).unwrap();
        assert_eq!(b, [(0, 1), (1, 1), (2, 1)].into_iter().collect());
        let bad: BTreeMap<i64, i128> = [(0, 1), (1, 1)].into_iter().collect();
        assert!(convolution_sqrt(&bad).is_none());
    }
}
