//! Tensor products of singlet modules from the closed-form rules, the
//! Grothendieck ring, and recovery of projective sums from their K-classes.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::rational::{self as rat, Q};
use crate::structure::{atypical_label, k_class, Indecomposable, KClass, ModuleExpr};
use crate::weights::{alpha_q, Params};

use Indecomposable::*;

fn unsupported(op: &'static str, x: &Indecomposable) -> Error {
    Error::UnsupportedSpecies {
        op,
        species: x.to_string(),
    }
}

fn check_atypical_s(params: &Params, s: i64) -> Result<()> {
    if s < 1 || s > params.p() {
        return Err(Error::domain("fuse", format!("s = {s} outside 1..={}", params.p())));
    }
    Ok(())
}

fn typical(q: &Q) -> Result<()> {
    if rat::is_integer(q) {
        return Err(Error::NotTypical(rat::fmt(q)));
    }
    Ok(())
}

/// `M(r,s) ⊠ M(r',s')`.
pub fn fuse_simple_simple(params: &Params, (r, s): (i64, i64), (r2, s2): (i64, i64)) -> Result<ModuleExpr> {
    check_atypical_s(params, s)?;
    check_atypical_s(params, s2)?;
    let p = params.p();
    let rr = r + r2 - 1;
    let mut out = ModuleExpr::new();
    let top = (s + s2 - 1).min(2 * p - 1 - s - s2);
    let mut l = (s - s2).abs() + 1;
    while l <= top {
        out.insert(M { r: rr, s: l }, 1);
        l += 2;
    }
    let mut l = 2 * p + 1 - s - s2;
    while l <= p {
        out.insert(Indecomposable::proj(params, rr, l)?, 1);
        l += 2;
    }
    Ok(out)
}

/// `M(r,s) ⊠ F(q)` for typical `q`.
pub fn fuse_simple_typical(params: &Params, (r, s): (i64, i64), q: &Q) -> Result<ModuleExpr> {
    check_atypical_s(params, s)?;
    typical(q)?;
    let base = q + rat::int(alpha_q(params.p(), r, s));
    Ok((0..s)
        .map(|l| F {
            q: &base + rat::int(2 * l),
        })
        .collect())
}

/// `P(r,s) ⊠ F(q)` for `s < p` and typical `q`.
pub fn fuse_proj_typical(params: &Params, (r, s): (i64, i64), q: &Q) -> Result<ModuleExpr> {
    let p = params.p();
    if s < 1 || s >= p {
        return Err(Error::domain(
            "fuse_proj_typical",
            format!("needs 1 <= s < {p}, got s = {s}; P(r,p) is M(r,p)"),
        ));
    }
    typical(q)?;
    let a = q + rat::int(alpha_q(p, r, s));
    let b = q + rat::int(alpha_q(p, r - 1, p - s));
    let mut out = ModuleExpr::new();
    for l in 0..p {
        out.insert(
            F {
                q: &a + rat::int(2 * l),
            },
            1,
        );
        out.insert(
            F {
                q: &b + rat::int(2 * l),
            },
            1,
        );
    }
    Ok(out)
}

/// `F(q) ⊠ F(q')` for typical `q, q'`.
pub fn fuse_typical_typical(params: &Params, q: &Q, q2: &Q) -> Result<ModuleExpr> {
    typical(q)?;
    typical(q2)?;
    let p = params.p();
    let sum = q + q2;
    if !rat::is_integer(&sum) {
        return Ok((0..p)
            .map(|l| F {
                q: &sum + rat::int(2 * l),
            })
            .collect());
    }
    let n = rat::to_i64(&sum).ok_or_else(|| Error::domain("fuse_typical_typical", "weight sum out of range"))?
        - (2 - 2 * p);
    let (r, s) = atypical_label(p, n);
    let mut out = ModuleExpr::new();
    let mut t = s;
    while t <= p {
        out.insert(Indecomposable::proj(params, r, t)?, 1);
        t += 2;
    }
    let mut t = p + 2 - s;
    while t <= p {
        out.insert(Indecomposable::proj(params, r - 1, t)?, 1);
        t += 2;
    }
    Ok(out)
}

fn fuse_simples(params: &Params, x: &Indecomposable, y: &Indecomposable) -> Result<ModuleExpr> {
    match (x, y) {
        (M { r, s }, M { r: r2, s: s2 }) => fuse_simple_simple(params, (*r, *s), (*r2, *s2)),
        (M { r, s }, F { q }) | (F { q }, M { r, s }) => fuse_simple_typical(params, (*r, *s), q),
        (F { q }, F { q: q2 }) => fuse_typical_typical(params, q, q2),
        _ => Err(unsupported("k_product", if x.is_simple() { y } else { x })),
    }
}

/// Product in the Grothendieck ring. Both arguments must contain simple
/// classes only.
pub fn k_product(params: &Params, a: &KClass, b: &KClass) -> Result<KClass> {
    let mut out = KClass::new();
    for (x, mx) in a {
        for (y, my) in b {
            out.add_scaled(&k_class(params, &fuse_simples(params, x, y)?), mx * my);
        }
    }
    Ok(out)
}

/// The unique direct sum of projectives with the given K-class.
///
/// Typical Fock modules and `M(r,p)` are read off directly. The covers
/// `P(r,s)`, `s < p`, satisfy `c_{r,s} = 2n_{r,s} + n_{r−1,p−s} + n_{r+1,p−s}`;
/// nothing below the minimal `r` of the support can occur, so sweeping upwards
/// in `r` determines every `n` and the map from projectives to K-classes is
/// injective. The solution is accepted only if it is nonnegative and
/// reproduces `k` exactly.
pub fn projective_decompose(params: &Params, k: &KClass) -> Result<ModuleExpr> {
    let p = params.p();
    let fail = || Error::NotProjectiveClass(k.to_string());
    let mut out = ModuleExpr::new();
    let mut c: BTreeMap<(i64, i64), i128> = BTreeMap::new();
    for (x, mult) in k {
        match x {
            F { .. } => out.insert(x.clone(), *mult),
            M { s, .. } if *s == p => out.insert(x.clone(), *mult),
            M { r, s } => {
                c.insert((*r, *s), *mult as i128);
            }
            _ => return Err(fail()),
        }
    }
    if let (Some(&(rmin, _)), Some(&(rmax, _))) = (c.keys().next(), c.keys().next_back()) {
        let get = |m: &BTreeMap<(i64, i64), i128>, r: i64, s: i64| m.get(&(r, s)).copied().unwrap_or(0);
        let mut n: BTreeMap<(i64, i64), i128> = BTreeMap::new();
        for r in rmin..=rmax {
            for s in 1..p {
                let v = get(&c, r, s) - 2 * get(&n, r, s) - get(&n, r - 1, p - s);
                if v < 0 {
                    return Err(fail());
                }
                if v > 0 {
                    n.insert((r + 1, p - s), v);
                }
            }
        }
        for (&(r, s), &v) in &n {
            out.insert(P { r, s }, v as u64);
        }
    }
    if k_class(params, &out) != *k {
        return Err(fail());
    }
    Ok(out)
}

fn fuse_indec(params: &Params, x: &Indecomposable, y: &Indecomposable) -> Result<ModuleExpr> {
    for z in [x, y] {
        if matches!(z, Fa { .. } | G { .. }) {
            return Err(unsupported("fuse", z));
        }
    }
    match (x, y) {
        (P { r, s }, F { q }) | (F { q }, P { r, s }) => fuse_proj_typical(params, (*r, *s), q),
        (P { .. }, _) | (_, P { .. }) => {
            let k = k_product(params, &x.k_class(params), &y.k_class(params))?;
            projective_decompose(params, &k)
        }
        _ => fuse_simples(params, x, y),
    }
}

/// Tensor product of two direct sums, extended bilinearly.
pub fn fuse(params: &Params, x: &ModuleExpr, y: &ModuleExpr) -> Result<ModuleExpr> {
    let mut out = ModuleExpr::new();
    for (a, ma) in x {
        let a = a.normalized(params)?;
        for (b, mb) in y {
            let b = b.normalized(params)?;
            out.add_scaled(&fuse_indec(params, &a, &b)?, ma * mb);
        }
    }
    Ok(out)
}

/// Convenience: the product of two indecomposables.
pub fn fuse_pair(params: &Params, x: &Indecomposable, y: &Indecomposable) -> Result<ModuleExpr> {
    fuse(params, &Multiset::singleton(x.clone()), &Multiset::singleton(y.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn simple_simple() {
        assert_eq!(
            fuse_simple_simple(&pr(2), (1, 2), (1, 2)).unwrap(),
            sum(&[(pp(1, 1), 1)])
        );
        assert_eq!(
            fuse_simple_simple(&pr(3), (1, 2), (1, 2)).unwrap(),
            sum(&[(m(1, 1), 1), (m(1, 3), 1)])
        );
        assert_eq!(
            fuse_simple_simple(&pr(2), (1, 1), (2, 2)).unwrap(),
            sum(&[(m(2, 2), 1)])
        );
        // at p = 3 the product M(1,3)⊠M(1,3) consists of projectives only
        assert_eq!(
            fuse_simple_simple(&pr(3), (1, 3), (1, 3)).unwrap(),
            sum(&[(pp(1, 1), 1), (m(1, 3), 1)])
        );
    }

    #[test]
    fn simple_typical() {
        let h = rat::frac(1, 2);
        assert_eq!(fuse_simple_typical(&pr(2), (2, 1), &h).unwrap(), sum(&[(f(5, 2), 1)]));
        assert_eq!(
            fuse_simple_typical(&pr(2), (1, 2), &h).unwrap(),
            sum(&[(f(-1, 2), 1), (f(3, 2), 1)])
        );
        assert_eq!(
            fuse_simple_typical(&pr(3), (1, 3), &rat::frac(1, 3)).unwrap(),
            sum(&[(f(-5, 3), 1), (f(1, 3), 1), (f(7, 3), 1)])
        );
        assert!(matches!(
            fuse_simple_typical(&pr(2), (1, 2), &rat::int(1)),
            Err(Error::NotTypical(_))
        ));
    }

    #[test]
    fn proj_typical() {
        let h = rat::frac(1, 2);
        assert_eq!(
            fuse_proj_typical(&pr(2), (1, 1), &h).unwrap(),
            sum(&[(f(-3, 2), 1), (f(1, 2), 2), (f(5, 2), 1)])
        );
        assert_eq!(
            fuse_proj_typical(&pr(2), (2, 1), &h).unwrap(),
            sum(&[(f(1, 2), 1), (f(5, 2), 2), (f(9, 2), 1)])
        );
        // q(α_{1,2}) = −1 and q(α_{0,1}) = −3 at p = 3
        assert_eq!(
            fuse_proj_typical(&pr(3), (1, 2), &h).unwrap(),
            sum(&[(f(-5, 2), 1), (f(-1, 2), 2), (f(3, 2), 2), (f(7, 2), 1)])
        );
        assert!(fuse_proj_typical(&pr(2), (1, 2), &h).is_err());
    }

    #[test]
    fn typical_typical() {
        assert_eq!(
            fuse_typical_typical(&pr(2), &rat::frac(1, 2), &rat::frac(1, 3)).unwrap(),
            sum(&[(f(5, 6), 1), (f(17, 6), 1)])
        );
        assert_eq!(
            fuse_typical_typical(&pr(2), &rat::frac(1, 2), &rat::frac(-1, 2)).unwrap(),
            sum(&[(pp(2, 1), 1)])
        );
        assert_eq!(
            fuse_typical_typical(&pr(2), &rat::frac(1, 2), &rat::frac(-5, 2)).unwrap(),
            sum(&[(pp(1, 1), 1)])
        );
        assert_eq!(
            fuse_typical_typical(&pr(3), &rat::frac(1, 2), &rat::frac(-1, 2)).unwrap(),
            sum(&[(m(3, 3), 1), (pp(2, 2), 1)])
        );
    }

    #[test]
    fn k_products() {
        let p2 = pr(2);
        let a = sum(&[(m(1, 2), 1)]);
        assert_eq!(
            k_product(&p2, &a, &a).unwrap(),
            sum(&[(m(1, 1), 2), (m(0, 1), 1), (m(2, 1), 1)])
        );
        let b = sum(&[(f(1, 2), 1)]);
        let c = sum(&[(f(-1, 2), 1)]);
        assert_eq!(
            k_product(&p2, &b, &c).unwrap(),
            sum(&[(m(2, 1), 2), (m(1, 1), 1), (m(3, 1), 1)])
        );
        let one = sum(&[(m(1, 1), 1)]);
        assert_eq!(k_product(&p2, &one, &b).unwrap(), b);
    }

    #[test]
    fn projective_decomposition() {
        let p2 = pr(2);
        assert_eq!(
            projective_decompose(&p2, &sum(&[(m(2, 1), 2), (m(1, 1), 1), (m(3, 1), 1)])).unwrap(),
            sum(&[(pp(2, 1), 1)])
        );
        let k = sum(&[(m(1, 1), 6), (m(0, 1), 4), (m(2, 1), 4), (m(-1, 1), 1), (m(3, 1), 1)]);
        assert_eq!(
            projective_decompose(&p2, &k).unwrap(),
            sum(&[(pp(0, 1), 1), (pp(1, 1), 2), (pp(2, 1), 1)])
        );
        assert_eq!(
            projective_decompose(&p2, &sum(&[(m(1, 2), 1)])).unwrap(),
            sum(&[(m(1, 2), 1)])
        );
        assert!(matches!(
            projective_decompose(&p2, &sum(&[(m(1, 1), 1)])),
            Err(Error::NotProjectiveClass(_))
        ));
        assert!(projective_decompose(&p2, &sum(&[(m(1, 1), 2), (m(0, 1), 1)])).is_err());
    }

    #[test]
    fn fuse_dispatch() {
        let p2 = pr(2);
        assert_eq!(fuse_pair(&p2, &m(2, 1), &pp(1, 1)).unwrap(), sum(&[(pp(2, 1), 1)]));
        assert_eq!(
            fuse_pair(&p2, &pp(1, 1), &pp(1, 1)).unwrap(),
            sum(&[(pp(0, 1), 1), (pp(1, 1), 2), (pp(2, 1), 1)])
        );
        assert_eq!(
            fuse_pair(&p2, &m(1, 2), &pp(1, 1)).unwrap(),
            sum(&[(m(0, 2), 1), (m(1, 2), 2), (m(2, 2), 1)])
        );
        assert!(matches!(
            fuse_pair(&p2, &Fa { r: 1, s: 1 }, &m(1, 1)),
            Err(Error::UnsupportedSpecies { .. })
        ));
        let x = sum(&[(m(1, 2), 2), (f(1, 2), 1)]);
        let y = sum(&[(m(1, 1), 1)]);
        assert_eq!(fuse(&p2, &x, &y).unwrap(), x);
    }
}
