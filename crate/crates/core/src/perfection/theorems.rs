//! Registry of verifiable statements and the sweep verifier.
//!
//! Each registered statement relates hereditary parameter equalities to
//! each other or to a forbidden-family class. The verifier evaluates every
//! side of the statement on every graph of a universe and records each
//! disagreement; family-based statements additionally get targeted
//! minimality checks of each family member at its native order, which
//! covers members larger than the sweep cap.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::patterns::PatternCatalog;
use crate::perfection::cache::{CacheError, ProfileCache};
use crate::perfection::{is_ab_perfect, ParamSelector, PerfectionError, SubgraphProfiles};
use crate::recognizers::{is_chordal, is_free, Witness};
use crate::solvers::ParameterProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    T1,
    T1b,
    T2,
    T3,
    T3b,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    Chains,
    Hadwiger,
    Falsify,
}

impl TheoremId {
    /// Every registered statement expected to verify. The deliberately
    /// false self-test entry is excluded and only runs when named.
    pub fn all_expected() -> Vec<TheoremId> {
        use TheoremId::*;
        vec![
            T1, T1b, T2, T3, T3b, T4, T5, T6, T7, T8, T9, Chains, Hadwiger,
        ]
    }

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T1b => "T1b",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T3b => "T3b",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
            TheoremId::T6 => "T6",
            TheoremId::T7 => "T7",
            TheoremId::T8 => "T8",
            TheoremId::T9 => "T9",
            TheoremId::Chains => "CHAINS",
            TheoremId::Hadwiger => "HADWIGER",
            TheoremId::Falsify => "FALSIFY",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = PerfectionError;
    fn from_str(s: &str) -> Result<TheoremId, PerfectionError> {
        use TheoremId::*;
        let all = [
            T1, T1b, T2, T3, T3b, T4, T5, T6, T7, T8, T9, Chains, Hadwiger, Falsify,
        ];
        all.into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| PerfectionError::UnknownTheorem(s.to_string()))
    }
}

/// One side of a biconditional or implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Perfect(ParamSelector, ParamSelector),
    Free(&'static [&'static str]),
    Chordal,
}

impl Side {
    pub fn describe(&self) -> String {
        match self {
            Side::Perfect(a, b) => format!("{a}/{b}-perfect"),
            Side::Free(names) => format!("({})-free", names.join(",")),
            Side::Chordal => "chordal".to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum TheoremKind {
    /// All sides hold or fail together on every graph.
    Equivalence(&'static [Side]),
    /// The first side forces the second on every graph.
    Implication(Side, Side),
    /// The per-graph chain inequalities.
    ChainInequalities,
    /// chi <= hadwiger on every graph.
    HadwigerSanity,
}

#[derive(Debug, Clone, Copy)]
pub struct TheoremSpec {
    pub id: TheoremId,
    pub statement: &'static str,
    pub kind: TheoremKind,
}

const F_OMEGA_PSI: &[&str] = &["C4", "P4", "P3+K2", "3K2"];
const F_OMEGA_ALPHA: &[&str] = &["P4", "P3+K2", "3K2"];
const F_TRIVIALLY_PERFECT: &[&str] = &["C4", "P4"];
const F_B_GRUNDY: &[&str] = &["P4", "3P3", "2D"];
const F_B_PSEUDO_GRUNDY: &[&str] = &["C4", "P4", "3P3", "2D"];

use ParamSelector::{
    Alpha, BChromatic, Chi, Grundy, Hadwiger as HadwigerP, Omega, PseudoB, PseudoGrundy, Psi,
};

pub fn theorem_spec(id: TheoremId) -> TheoremSpec {
    match id {
        TheoremId::T1 => TheoremSpec {
            id,
            statement: "omega/hadwiger-perfect <=> chordal",
            kind: TheoremKind::Equivalence(&[Side::Perfect(Omega, HadwigerP), Side::Chordal]),
        },
        TheoremId::T1b => TheoremSpec {
            id,
            statement: "omega/hadwiger-perfect => omega/chi-perfect",
            kind: TheoremKind::Implication(
                Side::Perfect(Omega, HadwigerP),
                Side::Perfect(Omega, Chi),
            ),
        },
        TheoremId::T2 => TheoremSpec {
            id,
            statement: "omega/psi-perfect <=> (C4,P4,P3+K2,3K2)-free",
            kind: TheoremKind::Equivalence(&[Side::Perfect(Omega, Psi), Side::Free(F_OMEGA_PSI)]),
        },
        TheoremId::T3 => TheoremSpec {
            id,
            statement: "alpha/hadwiger-perfect <=> omega/psi-perfect",
            kind: TheoremKind::Equivalence(&[
                Side::Perfect(Alpha, HadwigerP),
                Side::Perfect(Omega, Psi),
            ]),
        },
        TheoremId::T3b => TheoremSpec {
            id,
            statement: "omega/psi-perfect => omega/chi-perfect",
            kind: TheoremKind::Implication(Side::Perfect(Omega, Psi), Side::Perfect(Omega, Chi)),
        },
        TheoremId::T4 => TheoremSpec {
            id,
            statement: "omega/psi-perfect <=> b/psi-perfect <=> B/psi-perfect <=> (C4,P4,P3+K2,3K2)-free",
            kind: TheoremKind::Equivalence(&[
                Side::Perfect(Omega, Psi),
                Side::Perfect(BChromatic, Psi),
                Side::Perfect(PseudoB, Psi),
                Side::Free(F_OMEGA_PSI),
            ]),
        },
        TheoremId::T5 => TheoremSpec {
            id,
            statement: "omega/alpha-perfect <=> b/alpha-perfect <=> (P4,P3+K2,3K2)-free",
            kind: TheoremKind::Equivalence(&[
                Side::Perfect(Omega, Alpha),
                Side::Perfect(BChromatic, Alpha),
                Side::Free(F_OMEGA_ALPHA),
            ]),
        },
        TheoremId::T6 => TheoremSpec {
            id,
            statement: "omega/pseudo_grundy-perfect <=> (C4,P4)-free",
            kind: TheoremKind::Equivalence(&[
                Side::Perfect(Omega, PseudoGrundy),
                Side::Free(F_TRIVIALLY_PERFECT),
            ]),
        },
        TheoremId::T7 => TheoremSpec {
            id,
            statement: "grundy/hadwiger-perfect <=> omega/pseudo_grundy-perfect",
            kind: TheoremKind::Equivalence(&[
                Side::Perfect(Grundy, HadwigerP),
                Side::Perfect(Omega, PseudoGrundy),
            ]),
        },
        TheoremId::T8 => TheoremSpec {
            id,
            statement: "b/grundy-perfect <=> (P4,3P3,2D)-free",
            kind: TheoremKind::Equivalence(&[
                Side::Perfect(BChromatic, Grundy),
                Side::Free(F_B_GRUNDY),
            ]),
        },
        TheoremId::T9 => TheoremSpec {
            id,
            statement: "b/pseudo_grundy-perfect <=> (C4,P4,3P3,2D)-free",
            kind: TheoremKind::Equivalence(&[
                Side::Perfect(BChromatic, PseudoGrundy),
                Side::Free(F_B_PSEUDO_GRUNDY),
            ]),
        },
        TheoremId::Chains => TheoremSpec {
            id,
            statement: "omega<=hadwiger<=psi, omega<=alpha<=psi, omega<=b<=B<=psi, omega<=grundy<=pseudo_grundy, omega<=chi",
            kind: TheoremKind::ChainInequalities,
        },
        TheoremId::Hadwiger => TheoremSpec {
            id,
            statement: "chi <= hadwiger",
            kind: TheoremKind::HadwigerSanity,
        },
        TheoremId::Falsify => TheoremSpec {
            id,
            statement: "omega/chi-perfect <=> chordal (deliberately false self-test)",
            kind: TheoremKind::Equivalence(&[Side::Perfect(Omega, Chi), Side::Chordal]),
        },
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SideVerdict {
    pub side: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub order: usize,
    pub detail: String,
    pub sides: Vec<SideVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ParameterProfile>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TargetedCheck {
    pub pattern: String,
    pub a: String,
    pub b: String,
    pub holds: bool,
    pub detail: String,
}

/// Reports keep at most this many counterexamples; the total is separate.
pub const COUNTEREXAMPLE_CAP: usize = 25;

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub statement: String,
    pub max_order: usize,
    pub graph_count: usize,
    pub verified: bool,
    pub counterexamples_total: usize,
    pub counterexamples: Vec<Counterexample>,
    pub targeted: Vec<TargetedCheck>,
    pub catalog_sha256: String,
    /// Wall-clock time; excluded from serialized output so identical runs
    /// emit identical bytes.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Evaluates both sides of the statement on every graph of `universe` and
/// reports all disagreements plus targeted family-member checks.
pub fn verify_theorem(
    id: TheoremId,
    universe: &[Graph],
    catalog: &PatternCatalog,
    cache: &ProfileCache,
) -> Result<TheoremReport, PerfectionError> {
    let start = Instant::now();
    let spec = theorem_spec(id);
    let max_order = universe.iter().map(|g| g.n()).max().unwrap_or(0);

    let sides: &[Side] = match &spec.kind {
        TheoremKind::Equivalence(sides) => sides,
        TheoremKind::Implication(a, b) => {
            // Borrow juggling: store in a leaked-free static-like shape is
            // unnecessary; handle the two-side case inline below.
            return finish_report(
                spec,
                max_order,
                universe,
                catalog,
                cache,
                &[*a, *b],
                true,
                start,
            );
        }
        TheoremKind::ChainInequalities | TheoremKind::HadwigerSanity => {
            let results: Result<Vec<Option<Counterexample>>, PerfectionError> = universe
                .par_iter()
                .map(|g| check_per_graph(g, &spec.kind, cache))
                .collect();
            let mut counterexamples: Vec<Counterexample> = results?.into_iter().flatten().collect();
            let total = counterexamples.len();
            counterexamples.truncate(COUNTEREXAMPLE_CAP);
            return Ok(TheoremReport {
                theorem: spec.id.id().to_string(),
                statement: spec.statement.to_string(),
                max_order,
                graph_count: universe.len(),
                verified: total == 0,
                counterexamples_total: total,
                counterexamples,
                targeted: Vec::new(),
                catalog_sha256: catalog.sha256_hex().to_string(),
                elapsed: start.elapsed(),
            });
        }
    };
    finish_report(
        spec, max_order, universe, catalog, cache, sides, false, start,
    )
}

#[allow(clippy::too_many_arguments)]
fn finish_report(
    spec: TheoremSpec,
    max_order: usize,
    universe: &[Graph],
    catalog: &PatternCatalog,
    cache: &ProfileCache,
    sides: &[Side],
    implication: bool,
    start: Instant,
) -> Result<TheoremReport, PerfectionError> {
    // Resolve pattern families up front so unknown names fail fast.
    for side in sides {
        if let Side::Free(names) = side {
            catalog.family(names)?;
        }
    }
    let results: Result<Vec<Option<Counterexample>>, PerfectionError> = universe
        .par_iter()
        .map(|g| eval_sides(g, sides, implication, catalog, cache))
        .collect();
    let mut counterexamples: Vec<Counterexample> = results?.into_iter().flatten().collect();
    let total = counterexamples.len();
    counterexamples.truncate(COUNTEREXAMPLE_CAP);

    let targeted = targeted_checks(sides, catalog, cache)?;
    let verified = total == 0 && targeted.iter().all(|t| t.holds);
    Ok(TheoremReport {
        theorem: spec.id.id().to_string(),
        statement: spec.statement.to_string(),
        max_order,
        graph_count: universe.len(),
        verified,
        counterexamples_total: total,
        counterexamples,
        targeted,
        catalog_sha256: catalog.sha256_hex().to_string(),
        elapsed: start.elapsed(),
    })
}

fn eval_sides(
    g: &Graph,
    sides: &[Side],
    implication: bool,
    catalog: &PatternCatalog,
    cache: &ProfileCache,
) -> Result<Option<Counterexample>, PerfectionError> {
    let mut sp = SubgraphProfiles::new(*g, cache);
    let mut verdicts = Vec::with_capacity(sides.len());
    for side in sides {
        let verdict = match side {
            Side::Perfect(a, b) => {
                let witness = sp.ab_witness(*a, *b)?;
                SideVerdict {
                    side: side.describe(),
                    holds: witness.is_none(),
                    witness: witness.map(|w| {
                        let sub = g.induced(w.subset).expect("witness subsets are valid");
                        format!(
                            "{a}={} {b}={} on induced subgraph {} (vertices {:?})",
                            w.a_value,
                            w.b_value,
                            emit_graph6(&sub),
                            w.subset.to_vec(),
                        )
                    }),
                }
            }
            Side::Free(names) => {
                let family = catalog.family(names)?;
                let v = is_free(g, &family);
                SideVerdict {
                    side: side.describe(),
                    holds: v.member,
                    witness: v.witness.map(|w| describe_witness(&w)),
                }
            }
            Side::Chordal => {
                let v = is_chordal(g);
                SideVerdict {
                    side: side.describe(),
                    holds: v.member,
                    witness: v.witness.map(|w| describe_witness(&w)),
                }
            }
        };
        verdicts.push(verdict);
    }

    let failed = if implication {
        verdicts[0].holds && !verdicts[1].holds
    } else {
        verdicts.iter().any(|v| v.holds != verdicts[0].holds)
    };
    if !failed {
        return Ok(None);
    }
    let detail = verdicts
        .iter()
        .map(|v| format!("{}={}", v.side, v.holds))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(Some(Counterexample {
        graph6: emit_graph6(g),
        order: g.n(),
        detail,
        sides: verdicts,
        profile: Some(cache.profile_of(g)?),
    }))
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::Pattern { name, embedding } => format!("induced {name} at {embedding:?}"),
        Witness::InducedCycle { vertices } => format!("induced cycle {vertices:?}"),
        Witness::OddHole {
            in_complement,
            vertices,
        } => {
            if *in_complement {
                format!("odd hole {vertices:?} in complement")
            } else {
                format!("odd hole {vertices:?}")
            }
        }
    }
}

fn check_per_graph(
    g: &Graph,
    kind: &TheoremKind,
    cache: &ProfileCache,
) -> Result<Option<Counterexample>, PerfectionError> {
    let profile = match cache.profile_of(g) {
        Ok(p) => p,
        // A chain violation raised by the profile constructor is exactly
        // what this sweep looks for: report it instead of aborting.
        Err(CacheError::Consistency(ce)) => {
            return Ok(Some(Counterexample {
                graph6: emit_graph6(g),
                order: g.n(),
                detail: format!("profile construction failed: violated {:?}", ce.violated),
                sides: Vec::new(),
                profile: Some(ce.profile),
            }));
        }
        Err(e) => return Err(e.into()),
    };
    let violations: Vec<String> = match kind {
        TheoremKind::ChainInequalities => profile
            .chain_violations()
            .into_iter()
            .map(str::to_string)
            .collect(),
        TheoremKind::HadwigerSanity => {
            if profile.chi > profile.hadwiger {
                vec![format!(
                    "chi={} > hadwiger={}",
                    profile.chi, profile.hadwiger
                )]
            } else {
                Vec::new()
            }
        }
        _ => unreachable!("per-graph check only runs for per-graph kinds"),
    };
    if violations.is_empty() {
        return Ok(None);
    }
    Ok(Some(Counterexample {
        graph6: emit_graph6(g),
        order: g.n(),
        detail: violations.join(", "),
        sides: Vec::new(),
        profile: Some(profile),
    }))
}

/// For each family member and each perfect pair of the statement: the
/// member itself must break the equality while every one-vertex-deleted
/// subgraph keeps it. Runs at the member's native order, independent of
/// the sweep cap.
fn targeted_checks(
    sides: &[Side],
    catalog: &PatternCatalog,
    cache: &ProfileCache,
) -> Result<Vec<TargetedCheck>, PerfectionError> {
    let mut families: Vec<&'static str> = Vec::new();
    let mut pairs: Vec<(ParamSelector, ParamSelector)> = Vec::new();
    for side in sides {
        match side {
            Side::Free(names) => families.extend(names.iter().copied()),
            Side::Perfect(a, b) => pairs.push((*a, *b)),
            Side::Chordal => {}
        }
    }
    let mut out = Vec::new();
    for name in families {
        let pattern = catalog.require(name)?;
        let g = *pattern.graph();
        for &(a, b) in &pairs {
            let p = cache.profile_of(&g)?;
            let av = a.value_in(&p);
            let bv = b.value_in(&p);
            let mut holds = av != bv;
            let mut detail = format!("{a}({name})={av}, {b}({name})={bv}");
            if holds {
                for v in g.vertices() {
                    if g.n() == 1 {
                        break;
                    }
                    let h = g.delete_vertex(v).expect("patterns have order >= 2 here");
                    let (perfect, _) = is_ab_perfect(&h, a, b, cache)?;
                    if !perfect {
                        holds = false;
                        detail.push_str(&format!("; deleting vertex {v} is not {a}/{b}-perfect"));
                        break;
                    }
                }
                if holds {
                    detail.push_str("; all one-vertex deletions are perfect");
                }
            } else {
                detail.push_str("; values agree, not an obstruction");
            }
            out.push(TargetedCheck {
                pattern: name.to_string(),
                a: a.id().to_string(),
                b: b.id().to_string(),
                holds,
                detail,
            });
        }
    }
    Ok(out)
}
