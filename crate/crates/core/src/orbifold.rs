//! Modules of the cyclic orbifold `W(p)^{A_m} = ⊕_{n∈ℤ} M(2mn+1, 1)`, a simple
//! current extension of the singlet algebra.
//!
//! Labels are orbits of singlet labels under the simple current
//! `M(2m+1, 1)`: `W(r̄,s)` and `R(r̄,s)` with `r̄` modulo `2m`, and `V(q̄)` with
//! `q̄` modulo `2pm`. Induction from `M(p)` is defined on local modules, those
//! with weight in `(1/m)L°`.

use std::fmt;

use serde_json::{json, Value};

use crate::characters::{ch_expr, CharacterSum};
use crate::error::{Error, Result};
use crate::fusion;
use crate::multiset::Multiset;
use crate::rational::{self as rat, Q};
use crate::structure::{atypical_label, Indecomposable, ModuleExpr};
use crate::weights::{alpha_q, Params};

/// The pair `(p, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrbifoldParams {
    singlet: Params,
    m: i64,
}

impl OrbifoldParams {
    pub fn new(p: i64, m: i64) -> Result<Self> {
        let singlet = Params::new(p)?;
        if m < 1 {
            return Err(Error::InvalidParams(format!("m must be at least 1, got {m}")));
        }
        if m > 10_000 {
            return Err(Error::InvalidParams(format!("m = {m} is unreasonably large")));
        }
        Ok(OrbifoldParams { singlet, m })
    }

    pub fn p(&self) -> i64 {
        self.singlet.p()
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn singlet(&self) -> &Params {
        &self.singlet
    }

    fn r_mod(&self, r: i64) -> i64 {
        r.rem_euclid(2 * self.m)
    }

    fn q_modulus(&self) -> Q {
        rat::int(2 * self.p() * self.m)
    }

    fn q_mod(&self, q: &Q) -> Q {
        rat::reduce_mod(q, &self.q_modulus())
    }
}

/// Indecomposable orbifold modules with canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbifoldIndec {
    /// `W_{r̄,s}`, `0 ≤ r̄ < 2m`, `1 ≤ s ≤ p`.
    W { r: i64, s: i64 },
    /// `V_{λ+mL}`, `0 ≤ q̄ < 2pm`, `mq ∈ ℤ`, `q ∉ ℤ`.
    V { q: Q },
    /// Projective cover `R_{r̄,s}`, `0 ≤ r̄ < 2m`, `1 ≤ s < p`.
    R { r: i64, s: i64 },
}

use OrbifoldIndec::{R, V, W};

pub type OrbifoldExpr = Multiset<OrbifoldIndec>;

impl OrbifoldIndec {
    pub fn w(op: &OrbifoldParams, r: i64, s: i64) -> Result<Self> {
        check_s(op, s, op.p(), "W(r,s)")?;
        Ok(W { r: op.r_mod(r), s })
    }

    /// `R(r,s)`, rewritten to `W(r,p)` when `s = p`.
    pub fn r(op: &OrbifoldParams, r: i64, s: i64) -> Result<Self> {
        check_s(op, s, op.p(), "R(r,s)")?;
        let r = op.r_mod(r);
        Ok(if s == op.p() { W { r, s } } else { R { r, s } })
    }

    pub fn v(op: &OrbifoldParams, q: Q) -> Result<Self> {
        if rat::is_integer(&q) {
            return Err(Error::NotTypical(rat::fmt(&q)));
        }
        if !rat::is_integer(&(&q * rat::int(op.m))) {
            return Err(Error::NotLocal(format!("F({})", rat::fmt(&q))));
        }
        Ok(V { q: op.q_mod(&q) })
    }

    pub fn normalized(&self, op: &OrbifoldParams) -> Result<Self> {
        match self {
            W { r, s } => Self::w(op, *r, *s),
            R { r, s } => Self::r(op, *r, *s),
            V { q } => Self::v(op, q.clone()),
        }
    }

    pub fn species(&self) -> &'static str {
        match self {
            W { .. } => "W",
            V { .. } => "V",
            R { .. } => "R",
        }
    }

    /// The singlet module whose induction is this module, with the
    /// canonical representative.
    pub fn lift(&self) -> Indecomposable {
        match self {
            W { r, s } => Indecomposable::M { r: *r, s: *s },
            V { q } => Indecomposable::F { q: q.clone() },
            R { r, s } => Indecomposable::P { r: *r, s: *s },
        }
    }

    /// Loewy layers, top first. At `m = 1` the two middle factors of `R`
    /// coincide and are listed twice.
    pub fn loewy_layers(&self, op: &OrbifoldParams) -> Vec<Vec<OrbifoldIndec>> {
        match self {
            W { .. } | V { .. } => vec![vec![self.clone()]],
            R { r, s } => {
                let p = op.p();
                let top = W { r: *r, s: *s };
                let middle = vec![
                    W {
                        r: op.r_mod(r - 1),
                        s: p - s,
                    },
                    W {
                        r: op.r_mod(r + 1),
                        s: p - s,
                    },
                ];
                vec![vec![top.clone()], middle, vec![top]]
            }
        }
    }
}

fn check_s(op: &OrbifoldParams, s: i64, max: i64, what: &str) -> Result<()> {
    if s < 1 || s > max {
        return Err(Error::domain(
            "orbifold label",
            format!("{what} needs 1 <= s <= {max} at p = {}, got s = {s}", op.p()),
        ));
    }
    Ok(())
}

impl fmt::Display for OrbifoldIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            W { r, s } | R { r, s } => write!(f, "{}({r},{s})", self.species()),
            V { q } => write!(f, "V({})", rat::fmt(q)),
        }
    }
}

/// Canonical JSON for an orbifold direct sum, in the same shape as
/// [`crate::structure::expr_to_json`].
pub fn orbifold_expr_to_json(x: &OrbifoldExpr) -> Value {
    Value::Array(
        x.iter()
            .map(|(m, mult)| match m {
                V { q } => json!({"species": "V", "q": rat::fmt(q), "mult": mult}),
                W { r, s } | R { r, s } => json!({"species": m.species(), "r": r, "s": s, "mult": mult}),
            })
            .collect(),
    )
}

/// All simple modules: `2pm` of type `W` and `2pm² − 2pm` of type `V`.
pub fn list_simples(op: &OrbifoldParams) -> Vec<OrbifoldIndec> {
    let (p, m) = (op.p(), op.m());
    let mut out = Vec::with_capacity((2 * p * m * m) as usize);
    for r in 0..2 * m {
        for s in 1..=p {
            out.push(W { r, s });
        }
    }
    for k in 0..2 * p * m * m {
        if k % m != 0 {
            out.push(V { q: rat::frac(k, m) });
        }
    }
    out.sort();
    out
}

/// Whether the singlet module induces to an untwisted orbifold module.
pub fn is_local(op: &OrbifoldParams, x: &Indecomposable) -> bool {
    rat::is_integer(&(x.defining_coord(op.singlet()) * rat::int(op.m())))
}

fn induce_indec(op: &OrbifoldParams, x: &Indecomposable) -> Result<OrbifoldIndec> {
    use Indecomposable as I;
    let x = x.normalized(op.singlet())?;
    if !is_local(op, &x) {
        return Err(Error::NotLocal(x.to_string()));
    }
    match &x {
        I::M { r, s } => OrbifoldIndec::w(op, *r, *s),
        I::F { q } => OrbifoldIndec::v(op, q.clone()),
        I::P { r, s } => OrbifoldIndec::r(op, *r, *s),
        I::Fa { .. } | I::G { .. } => Err(Error::UnsupportedSpecies {
            op: "induce",
            species: x.to_string(),
        }),
    }
}

/// The induction functor on direct sums.
pub fn induce(op: &OrbifoldParams, x: &ModuleExpr) -> Result<OrbifoldExpr> {
    x.try_flat_map(|m| induce_indec(op, m).map(Multiset::singleton))
}

/// Tensor product of orbifold modules. Products of simples use the orbifold
/// fusion rules directly on reduced labels; products involving a projective
/// cover `R` are lifted to the singlet algebra, fused there and induced.
pub fn orbifold_fuse(op: &OrbifoldParams, x: &OrbifoldExpr, y: &OrbifoldExpr) -> Result<OrbifoldExpr> {
    let mut out = OrbifoldExpr::new();
    for (a, ma) in x {
        let a = a.normalized(op)?;
        for (b, mb) in y {
            let b = b.normalized(op)?;
            out.add_scaled(&fuse_pair(op, &a, &b)?, ma * mb);
        }
    }
    Ok(out)
}

fn fuse_pair(op: &OrbifoldParams, a: &OrbifoldIndec, b: &OrbifoldIndec) -> Result<OrbifoldExpr> {
    let p = op.p();
    let mut out = OrbifoldExpr::new();
    match (a, b) {
        (W { r, s }, W { r: r2, s: s2 }) => {
            let rr = r + r2 - 1;
            let top = (s + s2 - 1).min(2 * p - 1 - s - s2);
            for l in ((s - s2).abs() + 1..=top).step_by(2) {
                out.insert(OrbifoldIndec::w(op, rr, l)?, 1);
            }
            for l in (2 * p + 1 - s - s2..=p).step_by(2) {
                out.insert(OrbifoldIndec::r(op, rr, l)?, 1);
            }
        }
        (W { r, s }, V { q }) | (V { q }, W { r, s }) => {
            let base = q + rat::int(alpha_q(p, *r, *s));
            for l in 0..*s {
                out.insert(OrbifoldIndec::v(op, &base + rat::int(2 * l))?, 1);
            }
        }
        (V { q }, V { q: q2 }) => {
            let sum = q + q2;
            if rat::is_integer(&sum) {
                let n = rat::to_i64(&sum).expect("reduced labels are small") - (2 - 2 * p);
                let (r, s) = atypical_label(p, n);
                for t in (s..=p).step_by(2) {
                    out.insert(OrbifoldIndec::r(op, r, t)?, 1);
                }
                for t in (p + 2 - s..=p).step_by(2) {
                    out.insert(OrbifoldIndec::r(op, r - 1, t)?, 1);
                }
            } else {
                for l in 0..p {
                    out.insert(OrbifoldIndec::v(op, &sum + rat::int(2 * l))?, 1);
                }
            }
        }
        _ => {
            let lifted = fusion::fuse_pair(op.singlet(), &a.lift(), &b.lift())?;
            return induce(op, &lifted);
        }
    }
    Ok(out)
}

/// The projective cover of a simple module together with its Loewy layers.
pub fn orbifold_projective_cover(
    op: &OrbifoldParams,
    x: &OrbifoldIndec,
) -> Result<(OrbifoldIndec, Vec<Vec<OrbifoldIndec>>)> {
    let cover = match x.normalized(op)? {
        W { r, s } => OrbifoldIndec::r(op, r, s)?,
        v @ V { .. } => v,
        other => {
            return Err(Error::UnsupportedSpecies {
                op: "orbifold_projective_cover",
                species: other.to_string(),
            })
        }
    };
    let layers = cover.loewy_layers(op);
    Ok((cover, layers))
}

/// Character of an orbifold module: the sum of the characters of its
/// singlet orbit, to order `N` above the lowest weight of the orbit.
pub fn orbifold_char(op: &OrbifoldParams, x: &OrbifoldIndec, n: usize) -> Result<CharacterSum> {
    let x = x.normalized(op)?;
    let params = op.singlet();
    let base = x.lift();
    let first = base.lowest_weight(params);
    let cutoff = &first + rat::int(n as i64);
    // every composition factor of a member with defining coordinate q has
    // lowest weight at least ((|q| − 3p)² − p²)/(4p), so members with larger
    // |q| than below contribute nothing up to the cutoff
    let p = op.p() as f64;
    let cut = rat_to_f64(&cutoff).max(0.0);
    let qmax = 3.0 * p + (4.0 * p * cut + p * p).sqrt() + 1.0;
    let step = 2.0 * p * op.m() as f64;
    let q0 = rat_to_f64(&base.defining_coord(params));
    let lo = ((-qmax - q0) / step).floor() as i64 - 1;
    let hi = ((qmax - q0) / step).ceil() as i64 + 1;
    let mut members = ModuleExpr::new();
    for k in lo..=hi {
        members.insert(orbit_member(op, &base, k), 1);
    }
    // the orbit minimum is at most `first`, so it is among the members
    Ok(ch_expr(params, &members, n))
}

fn orbit_member(op: &OrbifoldParams, x: &Indecomposable, k: i64) -> Indecomposable {
    use Indecomposable as I;
    let m = op.m();
    match x {
        I::M { r, s } => I::M {
            r: r + 2 * m * k,
            s: *s,
        },
        I::P { r, s } => I::P {
            r: r + 2 * m * k,
            s: *s,
        },
        I::F { q } => I::F {
            q: q + rat::int(2 * op.p() * m * k),
        },
        other => other.clone(),
    }
}

fn rat_to_f64(q: &Q) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::MAX)
}
