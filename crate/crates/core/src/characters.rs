//! Truncated graded characters `tr q^{L(0)}` with exact integer coefficients.
//!
//! The global factor `q^{−c/24}` is omitted unless asked for; identities between
//! characters do not depend on it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};
use crate::rational::{self as rat, Q};
use crate::structure::{Indecomposable, ModuleExpr};
use crate::weights::Params;

/// `Σ_{n=0}^{N} c_n q^{h0+n}`, known exactly up to the exponent `h0 + N`.
///
/// The leading coefficient is nonzero unless the series vanishes to the known
/// order, in which case `coeffs` is empty and `h0` is the truncation point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    h0: Q,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    /// Builds a series and strips leading zeros.
    pub fn new(h0: Q, coeffs: Vec<BigInt>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => QSeries {
                h0: h0 + rat::int(k as i64),
                coeffs: coeffs[k..].to_vec(),
            },
            None => QSeries {
                h0: h0 + rat::int(coeffs.len() as i64),
                coeffs: Vec::new(),
            },
        }
    }

    pub fn h0(&self) -> &Q {
        &self.h0
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Truncation order `N`, or `None` for a series that vanishes to its
    /// known order.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest exponent with a known coefficient; for the zero series the
    /// exponent just below which it is known to vanish.
    fn top(&self) -> Q {
        &self.h0 + rat::int(self.coeffs.len() as i64 - 1)
    }

    /// Sum of two series in the same coset, known up to the smaller top.
    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        let diff = &self.h0 - &other.h0;
        if !rat::is_integer(&diff) {
            return Err(Error::domain(
                "QSeries::add",
                format!("exponents {} and {} differ by a non-integer", self.h0, other.h0),
            ));
        }
        let h0 = (&self.h0).min(&other.h0).clone();
        let top = self.top().min(other.top());
        if top < h0 {
            return Ok(QSeries::new(top + Q::one(), Vec::new()));
        }
        let len = rat::to_i64(&(&top - &h0)).expect("integral difference") as usize + 1;
        let mut coeffs = vec![BigInt::zero(); len];
        for series in [self, other] {
            let off = rat::to_i64(&(&series.h0 - &h0)).expect("integral difference") as usize;
            for (i, c) in series.coeffs.iter().enumerate() {
                if off + i < len {
                    coeffs[off + i] += c;
                }
            }
        }
        Ok(QSeries::new(h0, coeffs))
    }

    /// Multiplies by `q^{shift}`.
    pub fn shifted(&self, shift: &Q) -> QSeries {
        QSeries {
            h0: &self.h0 + shift,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> Value {
        json!({"h0": rat::fmt(&self.h0), "coeffs": self.coeffs.iter().map(big_json).collect::<Vec<_>>()})
    }
}

fn big_json(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("integers are valid JSON numbers"),
    )
}

/// Characters grouped by the class of their exponents modulo 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterSum {
    cosets: BTreeMap<Q, QSeries>,
}

impl CharacterSum {
    pub fn cosets(&self) -> impl Iterator<Item = (&Q, &QSeries)> {
        self.cosets.iter()
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// The series of the coset containing `h`.
    pub fn coset_of(&self, h: &Q) -> Option<&QSeries> {
        self.cosets.get(&coset(h))
    }

    /// The single series when all exponents lie in one coset.
    pub fn single(&self) -> Option<&QSeries> {
        (self.cosets.len() == 1).then(|| self.cosets.values().next().unwrap())
    }

    pub fn insert(&mut self, series: QSeries) -> Result<()> {
        let key = coset(series.h0());
        let merged = match self.cosets.remove(&key) {
            Some(old) => old.add(&series)?,
            None => series,
        };
        self.cosets.insert(key, merged);
        Ok(())
    }

    /// Multiplies every coset by `q^{shift}`; with `shift = −c/24` this
    /// restores the conventional normalisation.
    pub fn shifted(&self, shift: &Q) -> CharacterSum {
        let mut out = CharacterSum::default();
        for s in self.cosets.values() {
            let t = s.shifted(shift);
            out.cosets.insert(coset(t.h0()), t);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({"cosets": self.cosets.values().map(QSeries::to_json).collect::<Vec<_>>()})
    }
}

fn coset(h: &Q) -> Q {
    rat::reduce_mod(h, &Q::one())
}

/// `−c/24`, the exponent shift of the conventional character.
pub fn vacuum_shift(params: &Params) -> Q {
    -params.central_charge() / rat::int(24)
}

/// Partition numbers `p(0), …, p(N)`: the series `∏_{n≥1} (1 − qⁿ)^{−1}`.
pub fn eta_inv_series(n: usize) -> QSeries {
    QSeries::new(Q::zero(), partitions(n))
}

fn partitions(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for part in 1..=n {
        for k in part..=n {
            let prev = p[k - part].clone();
            p[k] += prev;
        }
    }
    p
}

/// Dense coefficient buffer for exponents `base, base+1, …, base+len−1`.
struct Accum {
    base: Q,
    coeffs: Vec<BigInt>,
    eta: Vec<BigInt>,
}

impl Accum {
    fn new(base: Q, len: usize) -> Self {
        Accum {
            base,
            coeffs: vec![BigInt::zero(); len],
            eta: partitions(len.saturating_sub(1)),
        }
    }

    /// Offset of `h` from the base, if `h` lies in the buffer's coset.
    fn offset(&self, h: &Q) -> i64 {
        rat::to_i64(&(h - &self.base)).expect("exponent in the buffer coset")
    }

    /// Adds `mult · q^h ∏(1−qⁿ)^{−1}`.
    fn add_verma(&mut self, h: &Q, mult: i64) {
        let off = self.offset(h);
        if off < 0 {
            panic!("Verma weight below the buffer base");
        }
        let off = off as usize;
        let mult = BigInt::from(mult);
        for i in off..self.coeffs.len() {
            self.coeffs[i] += &self.eta[i - off] * &mult;
        }
    }

    fn top(&self) -> Q {
        &self.base + rat::int(self.coeffs.len() as i64 - 1)
    }

    /// Virasoro irreducible `L_{r,s}`, `r ≥ 1`: a Verma module modulo the
    /// Verma module of its first singular vector.
    fn add_vir_irr(&mut self, params: &Params, r: i64, s: i64, mult: i64) {
        let h = params.h(r, s);
        let gap = if s < params.p() { r * s } else { r * params.p() };
        self.add_verma(&h, mult);
        if &h + rat::int(gap) <= self.top() {
            self.add_verma(&(&h + rat::int(gap)), -mult);
        }
    }

    fn add_indec(&mut self, params: &Params, x: &Indecomposable, mult: i64) {
        use Indecomposable::*;
        match x {
            M { r, s } => {
                let mut r = if *r >= 1 { *r } else { 2 - r };
                while params.h(r, *s) <= self.top() {
                    self.add_vir_irr(params, r, *s, mult);
                    r += 2;
                }
            }
            F { q } => {
                let h = params.weight(q.clone()).conformal_weight();
                if h <= self.top() {
                    self.add_verma(&h, mult);
                }
            }
            _ => {
                for (y, k) in x.k_class(params).iter() {
                    self.add_indec(params, y, mult * *k as i64);
                }
            }
        }
    }

    fn finish(self) -> QSeries {
        QSeries::new(self.base, self.coeffs)
    }
}

/// Character of the Virasoro irreducible `L_{r,s}` to order `N` above its
/// lowest weight.
pub fn ch_vir_irr(params: &Params, r: i64, s: i64, n: usize) -> Result<QSeries> {
    if r < 1 || s < 1 || s > params.p() {
        return Err(Error::domain(
            "ch_vir_irr",
            format!("needs r >= 1 and 1 <= s <= {}, got ({r},{s})", params.p()),
        ));
    }
    let mut acc = Accum::new(params.h(r, s), n + 1);
    acc.add_vir_irr(params, r, s, 1);
    Ok(acc.finish())
}

/// For each coset, the minimal lowest weight among the summands of the given
/// sums.
fn coset_minima<'a>(params: &Params, exprs: impl IntoIterator<Item = &'a ModuleExpr>) -> BTreeMap<Q, Q> {
    let mut minima: BTreeMap<Q, Q> = BTreeMap::new();
    for x in exprs {
        for (m, _) in x {
            for (y, _) in m.k_class(params).iter() {
                let h = y.lowest_weight(params);
                minima
                    .entry(coset(&h))
                    .and_modify(|v| {
                        if h < *v {
                            *v = h.clone()
                        }
                    })
                    .or_insert(h);
            }
        }
    }
    minima
}

fn char_with_minima(params: &Params, x: &ModuleExpr, minima: &BTreeMap<Q, Q>, n: usize) -> CharacterSum {
    let mut by_coset: BTreeMap<Q, Accum> = BTreeMap::new();
    for (m, mult) in x {
        for (y, k) in m.k_class(params).iter() {
            let key = coset(&y.lowest_weight(params));
            let acc = by_coset
                .entry(key.clone())
                .or_insert_with(|| Accum::new(minima[&key].clone(), n + 1));
            acc.add_indec(params, y, (*mult * *k) as i64);
        }
    }
    CharacterSum {
        cosets: by_coset.into_iter().map(|(k, acc)| (k, acc.finish())).collect(),
    }
}

/// Character of a direct sum, each coset to order `N` above the smallest
/// lowest weight occurring in it.
pub fn ch_expr(params: &Params, x: &ModuleExpr, n: usize) -> CharacterSum {
    char_with_minima(params, x, &coset_minima(params, [x]), n)
}

/// Character of an indecomposable to order `N` above its lowest weight.
pub fn ch_indec(params: &Params, x: &Indecomposable, n: usize) -> CharacterSum {
    ch_expr(params, &ModuleExpr::singleton(x.clone()), n)
}

/// True iff both sums have equal characters to order `N` on every coset,
/// measured from the smallest lowest weight of either side.
pub fn check_character_identity(params: &Params, lhs: &ModuleExpr, rhs: &ModuleExpr, n: usize) -> bool {
    let minima = coset_minima(params, [lhs, rhs]);
    char_with_minima(params, lhs, &minima, n) == char_with_minima(params, rhs, &minima, n)
}
