//! Heisenberg weights on the ray spanned by `α₋`, conformal weights and the
//! Zhu-algebra polynomial that separates atypical tops.
//!
//! A weight is stored by its coordinate `q`, meaning `λ = q·α₋/2`. With this
//! normalisation the dual lattice `L°` is `q ∈ ℤ`, the lattice `L` is
//! `q ∈ 2pℤ` and `⟨λ, μ⟩ = q_λ q_μ / (2p)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self as rat, Q};

/// The singlet parameter `p ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    p: i64,
}

impl Params {
    pub fn new(p: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidParams(format!("p must be at least 2, got {p}")));
        }
        if p > 1_000_000 {
            return Err(Error::InvalidParams(format!("p = {p} is unreasonably large")));
        }
        Ok(Params { p })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Central charge `13 − 6p − 6/p`.
    pub fn central_charge(&self) -> Q {
        rat::int(13 - 6 * self.p) - rat::frac(6, self.p)
    }

    /// Kac weight `h_{r,s} = ((pr − s)² − (p − 1)²) / (4p)`.
    pub fn h(&self, r: i64, s: i64) -> Q {
        let p = self.p;
        rat::frac((p * r - s).pow(2) - (p - 1).pow(2), 4 * p)
    }

    pub fn weight(&self, q: Q) -> Weight {
        Weight { q, p: self.p }
    }

    /// Coordinate of `α_{r,s} = (1−r)/2·α₊ + (1−s)/2·α₋`.
    pub fn alpha_coord(&self, r: i64, s: i64) -> Weight {
        self.weight(rat::int(alpha_q(self.p, r, s)))
    }

    /// Coordinate of `α₀ = α₊ + α₋`.
    pub fn alpha0(&self) -> Weight {
        self.weight(rat::int(2 - 2 * self.p))
    }

    /// `H(0)²` evaluated on a top of conformal weight `h`:
    /// `C_p (h − h_{1,p}) ∏_{s<p} (h − h_{1,s})²` with
    /// `C_p = (4p)^{2p−1} / ((2p−1)!)²`.
    pub fn h0_squared(&self, h: &Q) -> Q {
        let p = self.p;
        let mut value = self.zhu_constant() * (h - self.h(1, p));
        for s in 1..p {
            let d = h - self.h(1, s);
            value *= &d * &d;
        }
        value
    }

    fn zhu_constant(&self) -> Q {
        let p = self.p;
        let num = num_traits::pow(BigInt::from(4 * p), (2 * p - 1) as usize);
        let mut fact = BigInt::one();
        for k in 2..=(2 * p - 1) {
            fact *= k;
        }
        Q::new(num, &fact * &fact)
    }
}

/// Integer coordinate `p(r−1) − (s−1)` of `α_{r,s}`.
pub fn alpha_q(p: i64, r: i64, s: i64) -> i64 {
    p * (r - 1) - (s - 1)
}

/// A weight `λ = q·α₋/2` for a fixed `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    q: Q,
    p: i64,
}

/// Which Zhu bimodule constrains the neighbouring weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Neighbor {
    /// Fusion with `L_{1,2}`.
    Via12,
    /// Fusion with `L_{3,1}`.
    Via31,
}

impl Weight {
    pub fn q(&self) -> &Q {
        &self.q
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Lowest conformal weight `h_λ = (q² + 2q(p−1)) / (4p)` of the Fock module.
    pub fn conformal_weight(&self) -> Q {
        let p = rat::int(self.p);
        (&self.q * &self.q + rat::int(2) * &self.q * (&p - Q::one())) / (rat::int(4) * p)
    }

    /// Typical means `λ ∉ L°`.
    pub fn is_typical(&self) -> bool {
        !rat::is_integer(&self.q)
    }

    /// Weight of the contragredient Fock module, `α₀ − λ`.
    pub fn contragredient(&self) -> Weight {
        Weight {
            q: rat::int(2 - 2 * self.p) - &self.q,
            p: self.p,
        }
    }

    pub fn shifted(&self, dq: &Q) -> Weight {
        Weight {
            q: &self.q + dq,
            p: self.p,
        }
    }

    /// `⟨λ, μ⟩ = q_λ q_μ / (2p)`.
    pub fn inner(&self, other: &Weight) -> Q {
        &self.q * &other.q / rat::int(2 * self.p)
    }

    /// `λ ∈ L°`.
    pub fn in_dual_lattice(&self) -> bool {
        rat::is_integer(&self.q)
    }

    /// `λ ∈ L`.
    pub fn in_lattice(&self) -> bool {
        self.in_multiple_of_lattice(1)
    }

    /// `λ ∈ 2L°`.
    pub fn in_twice_dual_lattice(&self) -> bool {
        rat::is_integer(&(&self.q / rat::int(2)))
    }

    /// `λ ∈ (1/m)L°`.
    pub fn in_fractional_dual_lattice(&self, m: i64) -> bool {
        rat::is_integer(&(&self.q * rat::int(m)))
    }

    /// `λ ∈ mL`.
    pub fn in_multiple_of_lattice(&self, m: i64) -> bool {
        rat::is_integer(&(&self.q / rat::int(2 * self.p * m)))
    }

    /// Conformal weights that a simple quotient of `L_{1,2} ⊠ F_λ` (resp.
    /// `L_{3,1} ⊠ F_λ`) may have. Uses `4p·h + (p−1)² = (q+p−1)²`.
    pub fn allowed_neighbor_weights(&self, kind: Neighbor) -> Vec<Q> {
        let p = rat::int(self.p);
        let h = self.conformal_weight();
        let root = rat::abs(&(&self.q + &p - Q::one()));
        let mut out = match kind {
            Neighbor::Via12 => {
                let base = &h + Q::new(BigInt::one(), BigInt::from(4 * self.p));
                let delta = &root / (rat::int(2) * &p);
                vec![&base + &delta, &base - &delta]
            }
            Neighbor::Via31 => {
                let base = &h + &p;
                vec![h.clone(), &base + &root, &base - &root]
            }
        };
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rat::fmt(&self.q))
    }
}

/// The root of unity `exp(2πi·e)` with `e ∈ [0, 1)` stored exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitPhase {
    e: Q,
}

impl UnitPhase {
    pub fn new(e: Q) -> Self {
        UnitPhase {
            e: rat::reduce_mod(&e, &Q::one()),
        }
    }

    pub fn one() -> Self {
        UnitPhase { e: Q::zero() }
    }

    pub fn exponent(&self) -> &Q {
        &self.e
    }

    pub fn mul(&self, other: &UnitPhase) -> UnitPhase {
        UnitPhase::new(&self.e + &other.e)
    }

    pub fn inverse(&self) -> UnitPhase {
        UnitPhase::new(-&self.e)
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rat::fmt(&self.e))
    }
}
