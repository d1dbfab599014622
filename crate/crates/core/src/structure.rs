//! Indecomposable modules, direct sums and their structural data: duals,
//! composition factors, Loewy layers, lowest weights, gradings and phases.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::rational::{self as rat, Q};
use crate::weights::{alpha_q, Params, UnitPhase};

/// Indecomposable modules that the calculator knows about.
///
/// Values are only meaningful together with a [`Params`]; use the checked
/// constructors, which also apply the normalisations `P(r,p) = M(r,p)` and
/// `Fa(r,p) = M(r,p)`. The derived order is the canonical one: species in the
/// order listed, then `r`, `s` and `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indecomposable {
    /// Atypical simple `M_{r,s}`, `1 ≤ s ≤ p`.
    M { r: i64, s: i64 },
    /// Typical Fock module `F_λ`, `q ∉ ℤ`.
    F { q: Q },
    /// Projective cover `P_{r,s}`, `1 ≤ s < p`.
    P { r: i64, s: i64 },
    /// Atypical Fock module `F_{α_{r,s}}` of length two, `1 ≤ s < p`.
    Fa { r: i64, s: i64 },
    /// Generalized Verma module `G_{r,s}`, `1 ≤ s ≤ p`.
    G { r: i64, s: i64 },
}

use Indecomposable::*;

/// A finite direct sum of indecomposables.
pub type ModuleExpr = Multiset<Indecomposable>;

/// A Grothendieck group element; only `M` and `F` entries occur.
pub type KClass = Multiset<Indecomposable>;

fn check_s(params: &Params, s: i64, max: i64, what: &str) -> Result<()> {
    if s < 1 || s > max {
        return Err(Error::domain(
            "module label",
            format!("{what} needs 1 <= s <= {max} at p = {}, got s = {s}", params.p()),
        ));
    }
    Ok(())
}

impl Indecomposable {
    pub fn simple(params: &Params, r: i64, s: i64) -> Result<Self> {
        check_s(params, s, params.p(), "M(r,s)")?;
        Ok(M { r, s })
    }

    pub fn fock(_params: &Params, q: Q) -> Result<Self> {
        if rat::is_integer(&q) {
            return Err(Error::NotTypical(rat::fmt(&q)));
        }
        Ok(F { q })
    }

    /// `P(r,s)`, rewritten to `M(r,p)` when `s = p`.
    pub fn proj(params: &Params, r: i64, s: i64) -> Result<Self> {
        check_s(params, s, params.p(), "P(r,s)")?;
        Ok(if s == params.p() { M { r, s } } else { P { r, s } })
    }

    /// `F_{α_{r,s}}`, rewritten to `M(r,p)` when `s = p`.
    pub fn fock_atypical(params: &Params, r: i64, s: i64) -> Result<Self> {
        check_s(params, s, params.p(), "Fa(r,s)")?;
        Ok(if s == params.p() { M { r, s } } else { Fa { r, s } })
    }

    pub fn gen_verma(params: &Params, r: i64, s: i64) -> Result<Self> {
        check_s(params, s, params.p(), "G(r,s)")?;
        Ok(G { r, s })
    }

    /// The Fock module of an arbitrary rational weight, typical or not.
    pub fn fock_module(params: &Params, q: Q) -> Result<Self> {
        match rat::to_i64(&q) {
            None if rat::is_integer(&q) => Err(Error::domain("fock_module", "weight too large")),
            None => Ok(F { q }),
            Some(n) => {
                let (r, s) = atypical_label(params.p(), n);
                Self::fock_atypical(params, r, s)
            }
        }
    }

    /// Re-validates a value built directly from the enum variants.
    pub fn normalized(&self, params: &Params) -> Result<Self> {
        match self {
            M { r, s } => Self::simple(params, *r, *s),
            F { q } => Self::fock(params, q.clone()),
            P { r, s } => Self::proj(params, *r, *s),
            Fa { r, s } => Self::fock_atypical(params, *r, *s),
            G { r, s } => Self::gen_verma(params, *r, *s),
        }
    }

    pub fn species(&self) -> &'static str {
        match self {
            M { .. } => "M",
            F { .. } => "F",
            P { .. } => "P",
            Fa { .. } => "Fa",
            G { .. } => "G",
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, M { .. } | F { .. })
    }

    /// Projective in the category of modules with integral-by-grading weights:
    /// typical Fock modules, `M(r,p)` and the covers `P(r,s)`.
    pub fn is_projective(&self, params: &Params) -> bool {
        match self {
            M { s, .. } => *s == params.p(),
            F { .. } | P { .. } => true,
            Fa { .. } | G { .. } => false,
        }
    }

    /// Coordinate of the weight that defines the module: `q` itself for Fock
    /// modules and `α_{r,s}` otherwise.
    pub fn defining_coord(&self, params: &Params) -> Q {
        match self {
            F { q } => q.clone(),
            M { r, s } | P { r, s } | Fa { r, s } | G { r, s } => rat::int(alpha_q(params.p(), *r, *s)),
        }
    }

    /// Contragredient module. Generalized Verma modules are not supported.
    pub fn dual(&self, params: &Params) -> Result<Self> {
        let p = params.p();
        Ok(match self {
            M { r, s } => M { r: 2 - r, s: *s },
            F { q } => F {
                q: rat::int(2 - 2 * p) - q,
            },
            P { r, s } => P { r: 2 - r, s: *s },
            Fa { r, s } => Fa { r: 1 - r, s: p - s },
            G { .. } => {
                return Err(Error::UnsupportedSpecies {
                    op: "dual",
                    species: self.to_string(),
                })
            }
        })
    }

    /// Composition factors with multiplicity.
    pub fn k_class(&self, params: &Params) -> KClass {
        self.loewy_layers(params).into_iter().flatten().collect()
    }

    /// Loewy layers from the top down; the last entry is the socle.
    pub fn loewy_layers(&self, params: &Params) -> Vec<Vec<Indecomposable>> {
        let p = params.p();
        match self {
            M { .. } | F { .. } => vec![vec![self.clone()]],
            Fa { r, s } => vec![vec![M { r: r + 1, s: p - s }], vec![M { r: *r, s: *s }]],
            P { r, s } => vec![
                vec![M { r: *r, s: *s }],
                vec![M { r: r - 1, s: p - s }, M { r: r + 1, s: p - s }],
                vec![M { r: *r, s: *s }],
            ],
            G { r, s } => {
                let top = vec![M { r: *r, s: *s }];
                match verma_socle(p, *r, *s) {
                    socle if socle.is_empty() => vec![top],
                    socle => vec![top, socle],
                }
            }
        }
    }

    /// Minimal conformal weight.
    pub fn lowest_weight(&self, params: &Params) -> Q {
        match self {
            M { r, s } => params.h(if *r >= 1 { *r } else { 2 - r }, *s),
            F { q } => params.weight(q.clone()).conformal_weight(),
            _ => self
                .k_class(params)
                .iter()
                .map(|(x, _)| x.lowest_weight(params))
                .min()
                .expect("non-simple modules have composition factors"),
        }
    }

    /// Grading label `q mod 2`, a representative in `[0, 2)`.
    pub fn t_grade(&self, params: &Params) -> Q {
        rat::reduce_mod(&self.defining_coord(params), &rat::int(2))
    }

    /// Eigenvalue of the ribbon twist on a simple module.
    pub fn twist_phase(&self, params: &Params) -> Result<UnitPhase> {
        if !self.is_simple() {
            return Err(Error::NonSemisimpleTwist(self.to_string()));
        }
        Ok(UnitPhase::new(self.lowest_weight(params)))
    }

    /// Scalar by which the double braiding with `M(2,1)` acts, `exp(πi q)`.
    ///
    /// The sign of the exponent is fixed by the balancing equation
    /// `θ_{M(2,1)⊠Y} = M · θ_{M(2,1)} θ_Y`.
    pub fn monodromy_with_m21(&self, params: &Params) -> UnitPhase {
        UnitPhase::new(self.defining_coord(params) / rat::int(2))
    }
}

/// `(r, s)` with `1 ≤ s ≤ p` such that `α_{r,s}` has coordinate `n`.
pub fn atypical_label(p: i64, n: i64) -> (i64, i64) {
    let r = 1 + rat::ceil_div(n, p);
    let s = 1 + p * (r - 1) - n;
    (r, s)
}

fn verma_socle(p: i64, r: i64, s: i64) -> Vec<Indecomposable> {
    if s == p {
        Vec::new()
    } else if r > 1 {
        vec![M { r: r + 1, s: p - s }]
    } else if r == 1 {
        vec![M { r: 0, s }, M { r: 2, s }]
    } else {
        vec![M { r: r - 1, s: p - s }]
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            F { q } => write!(f, "F({})", rat::fmt(q)),
            M { r, s } | P { r, s } | Fa { r, s } | G { r, s } => {
                write!(f, "{}({r},{s})", self.species())
            }
        }
    }
}

/// Termwise contragredient of a direct sum.
pub fn dual(params: &Params, x: &ModuleExpr) -> Result<ModuleExpr> {
    x.try_flat_map(|m| m.dual(params).map(Multiset::singleton))
}

pub fn k_class(params: &Params, x: &ModuleExpr) -> KClass {
    let mut out = KClass::new();
    for (m, mult) in x {
        out.add_scaled(&m.k_class(params), *mult);
    }
    out
}

/// Composition factors of the quotient of the generalized Verma module with
/// top `M(r,s)`.
pub fn verma_quotient_factors(params: &Params, r: i64, s: i64) -> Result<KClass> {
    Ok(Indecomposable::gen_verma(params, r, s)?.k_class(params))
}

/// Induction of the Virasoro module `L_{r,s}` to the singlet algebra,
/// `⊕_{k=1..r} M(2k−r, s)`.
pub fn virasoro_induce(params: &Params, r: i64, s: i64) -> Result<ModuleExpr> {
    if r < 1 {
        return Err(Error::domain("virasoro_induce", format!("needs r >= 1, got {r}")));
    }
    (1..=r).map(|k| Indecomposable::simple(params, 2 * k - r, s)).collect()
}

/// The grading label of a direct sum if all summands share one.
pub fn homogeneous_grade(params: &Params, x: &ModuleExpr) -> Option<Q> {
    let mut grades = x.iter().map(|(m, _)| m.t_grade(params));
    let first = grades.next()?;
    grades.all(|g| g == first).then_some(first)
}

/// Canonical JSON for a direct sum: an array of
/// `{"species", "r", "s", "q", "mult"}` objects in canonical order.
pub fn expr_to_json(x: &ModuleExpr) -> Value {
    Value::Array(
        x.iter()
            .map(|(m, mult)| match m {
                F { q } => json!({"species": "F", "q": rat::fmt(q), "mult": mult}),
                M { r, s } | P { r, s } | Fa { r, s } | G { r, s } => {
                    json!({"species": m.species(), "r": r, "s": s, "mult": mult})
                }
            })
            .collect(),
    )
}

/// The tensor unit `M(1,1)`.
pub fn unit() -> Indecomposable {
    M { r: 1, s: 1 }
}

/// The simple current `M(2,1)`.
pub fn simple_current() -> Indecomposable {
    M { r: 2, s: 1 }
}
