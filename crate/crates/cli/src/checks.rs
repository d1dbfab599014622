//! Built-in verification suites over the standard label universes. Failures
//! are collected into a report rather than raised.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use singlet_core::characters::check_character_identity;
use singlet_core::fusion::{fuse, fuse_pair, k_product};
use singlet_core::oracle::chebyshev_fuse;
use singlet_core::orbifold::{
    induce, list_simples, orbifold_fuse, orbifold_projective_cover, OrbifoldIndec, OrbifoldParams,
};
use singlet_core::rational as rat;
use singlet_core::structure::{dual, k_class, simple_current, unit};
use singlet_core::universe::{local_universe, simple_universe, test_universe};
use singlet_core::{Indecomposable, ModuleExpr, Multiset, Params, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Associativity,
    Kring,
    Duality,
    Grading,
    Characters,
    Oracle,
    Orbifold,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Associativity,
        Suite::Kring,
        Suite::Duality,
        Suite::Grading,
        Suite::Characters,
        Suite::Oracle,
        Suite::Orbifold,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Associativity => "associativity",
            Suite::Kring => "kring",
            Suite::Duality => "duality",
            Suite::Grading => "grading",
            Suite::Characters => "characters",
            Suite::Oracle => "oracle",
            Suite::Orbifold => "orbifold",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Outcome of one suite: how many instances ran and which ones failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite: suite.name(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records a comparison whose sides may fail to evaluate.
    fn compare<T: PartialEq + fmt::Display>(&mut self, what: impl FnOnce() -> String, lhs: Result<T>, rhs: Result<T>) {
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => self.record(true, String::new),
            (Ok(a), Ok(b)) => self.record(false, || format!("{}: {a} != {b}", what())),
            (Err(e), _) | (_, Err(e)) => self.record(false, || format!("{}: {e}", what())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| json!({
                "suite": s.suite,
                "cases": s.cases,
                "failures": s.failures,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {}: {} cases, {} failures",
                s.suite,
                s.cases,
                s.failures.len()
            )?;
            for failure in &s.failures {
                writeln!(f, "  {failure}")?;
            }
        }
        Ok(())
    }
}

/// Settings shared by the suites.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub params: Params,
    /// Orbifold orders to test; empty means the defaults `m = 1, 2`.
    pub orders: Vec<i64>,
    /// Truncation order for character identities.
    pub char_order: usize,
}

pub fn run(suite: Suite, cfg: &CheckConfig) -> Report {
    let suites = match suite {
        Suite::All => Suite::EACH.to_vec(),
        one => vec![one],
    };
    Report {
        suites: suites.into_iter().map(|s| run_one(s, cfg)).collect(),
    }
}

fn one(x: &Indecomposable) -> ModuleExpr {
    Multiset::singleton(x.clone())
}

fn run_one(suite: Suite, cfg: &CheckConfig) -> SuiteReport {
    let params = &cfg.params;
    let mut rep = SuiteReport::new(suite);
    let u = test_universe(params);
    match suite {
        Suite::Associativity => associativity(params, &u, &mut rep),
        Suite::Kring => {
            for x in &u {
                for y in &u {
                    let lhs = fuse_pair(params, x, y).map(|z| k_class(params, &z));
                    let rhs = k_product(params, &x.k_class(params), &y.k_class(params));
                    rep.compare(|| format!("K({x}⊠{y})"), lhs, rhs);
                }
            }
        }
        Suite::Duality => {
            for x in &u {
                rep.compare(
                    || format!("dual(dual({x}))"),
                    x.dual(params).and_then(|d| d.dual(params)),
                    Ok(x.clone()),
                );
                for y in &u {
                    let lhs = fuse_pair(params, x, y).and_then(|z| dual(params, &z));
                    let rhs = x
                        .dual(params)
                        .and_then(|a| y.dual(params).and_then(|b| fuse_pair(params, &a, &b)));
                    rep.compare(|| format!("dual({x}⊠{y})"), lhs, rhs);
                }
            }
        }
        Suite::Grading => grading(params, &u, &mut rep),
        Suite::Characters => characters(params, cfg.char_order, &mut rep),
        Suite::Oracle => {
            for x in &u {
                for y in &u {
                    rep.compare(
                        || format!("oracle {x}⊠{y}"),
                        chebyshev_fuse(params, &one(x), &one(y)),
                        fuse_pair(params, x, y),
                    );
                }
            }
        }
        Suite::Orbifold => {
            let orders = if cfg.orders.is_empty() {
                vec![1, 2]
            } else {
                cfg.orders.clone()
            };
            for m in orders {
                match OrbifoldParams::new(params.p(), m) {
                    Ok(op) => orbifold(&op, &mut rep),
                    Err(e) => rep.record(false, || format!("m={m}: {e}")),
                }
            }
        }
        Suite::All => unreachable!("expanded by run"),
    }
    rep
}

fn associativity(params: &Params, u: &[Indecomposable], rep: &mut SuiteReport) {
    for x in u {
        rep.compare(|| format!("unit ⊠ {x}"), fuse_pair(params, &unit(), x), Ok(one(x)));
        for y in u {
            rep.compare(
                || format!("{x}⊠{y} vs {y}⊠{x}"),
                fuse_pair(params, x, y),
                fuse_pair(params, y, x),
            );
            let xy = fuse_pair(params, x, y);
            for z in u {
                let lhs = xy
                    .as_ref()
                    .map_err(Clone::clone)
                    .and_then(|xy| fuse(params, xy, &one(z)));
                let rhs = fuse_pair(params, y, z).and_then(|yz| fuse(params, &one(x), &yz));
                rep.compare(|| format!("({x}⊠{y})⊠{z}"), lhs, rhs);
            }
        }
    }
}

fn grading(params: &Params, u: &[Indecomposable], rep: &mut SuiteReport) {
    let two = rat::int(2);
    for x in u {
        for y in u {
            let want = rat::reduce_mod(&(x.t_grade(params) + y.t_grade(params)), &two);
            match fuse_pair(params, x, y) {
                Ok(z) => {
                    for (w, _) in &z {
                        let got = w.t_grade(params);
                        rep.record(got == want, || {
                            format!("grade of {w} in {x}⊠{y}: {} != {}", rat::fmt(&got), rat::fmt(&want))
                        });
                    }
                }
                Err(e) => rep.record(false, || format!("{x}⊠{y}: {e}")),
            }
        }
    }
    // balancing with the simple current fixes the monodromy phase
    let h21 = params.h(2, 1);
    for y in simple_universe(params) {
        let z = fuse_pair(params, &simple_current(), &y).map(|z| z.expanded());
        match z.as_deref() {
            Ok([z]) => {
                let lhs = z.lowest_weight(params) - &h21 - y.lowest_weight(params);
                let phase = y.monodromy_with_m21(params);
                let ok = rat::reduce_mod(&lhs, &rat::int(1)) == *phase.exponent();
                rep.record(ok, || format!("balancing for {y}: {} vs {phase}", rat::fmt(&lhs)));
            }
            _ => rep.record(false, || format!("M(2,1)⊠{y} is not simple")),
        }
    }
}

/// Exact sequences `Fa(r,s)` and `P(r,s)` at `r ∈ [−3,4]`, `s < p`.
pub fn character_cases(params: &Params) -> Vec<(ModuleExpr, ModuleExpr)> {
    use Indecomposable::{Fa, M, P};
    let p = params.p();
    let mut out = Vec::new();
    for r in -3..=4 {
        for s in 1..p {
            out.push((
                one(&Fa { r, s }),
                [M { r, s }, M { r: r + 1, s: p - s }].into_iter().collect(),
            ));
            out.push((
                one(&P { r, s }),
                [Fa { r, s }, Fa { r: r - 1, s: p - s }].into_iter().collect(),
            ));
        }
    }
    out
}

fn characters(params: &Params, n: usize, rep: &mut SuiteReport) {
    for (lhs, rhs) in character_cases(params) {
        rep.record(check_character_identity(params, &lhs, &rhs, n), || {
            format!("ch {lhs} != ch({rhs})")
        });
    }
}

fn orbifold(op: &OrbifoldParams, rep: &mut SuiteReport) {
    let (p, m) = (op.p(), op.m());
    let simples = list_simples(op);
    rep.record(simples.len() as i64 == 2 * p * m * m, || {
        format!("m={m}: {} simples, expected {}", simples.len(), 2 * p * m * m)
    });
    let u = local_universe(op);
    let ind = |x: &ModuleExpr| induce(op, x);
    for x in &u {
        for y in &u {
            let lhs = fuse_pair(op.singlet(), x, y).and_then(|z| ind(&z));
            let rhs = ind(&one(x)).and_then(|a| ind(&one(y)).and_then(|b| orbifold_fuse(op, &a, &b)));
            rep.compare(|| format!("m={m}: induce({x}⊠{y})"), lhs, rhs);
        }
    }
    for x in simples {
        let OrbifoldIndec::W { r, s } = x else { continue };
        let cover = orbifold_projective_cover(op, &x);
        let lift = Indecomposable::proj(op.singlet(), r, s);
        let induced = lift.and_then(|l| {
            l.loewy_layers(op.singlet())
                .into_iter()
                .map(|layer| {
                    layer
                        .iter()
                        .map(|y| ind(&one(y)).map(|z| z.expanded().remove(0)))
                        .collect()
                })
                .collect::<Result<Vec<Vec<_>>>>()
        });
        let ok = matches!((&cover, &induced), (Ok((_, a)), Ok(b)) if a == b);
        rep.record(ok, || format!("m={m}: cover layers of {x}"));
    }
}
